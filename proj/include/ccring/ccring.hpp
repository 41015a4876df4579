#pragma once

#include "ccring/errors.hpp"
#include "ccring/structure.hpp"
#include "ccring/ring.hpp"
#include "ccring/subset.hpp"
#include "ccring/core.hpp"
#include "ccring/groups.hpp"
#include "ccring/constructors.hpp"
#include "ccring/ideals.hpp"
#include "ccring/properties.hpp"
#include "ccring/invariants.hpp"
#include "ccring/report.hpp"
#include "ccring/ringspec.hpp"
#include "ccring/sampling.hpp"
#include "ccring/symbolic.hpp"
#include "ccring/suite.hpp"
