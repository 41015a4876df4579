#pragma once

// Center, units and regular elements.

#include <optional>
#include <vector>

#include "ccring/subset.hpp"

namespace ccring {

inline bool is_central(const Ring& r, Elem x) {
  for (Elem b : r.generators())
    if (r.mul(x, b) != r.mul(b, x)) return false;
  return true;
}

/// Z(R): elements commuting with every additive generator.
inline AdditiveSubset center(const Ring& r, const Limits& limits = {}) {
  check_limit("max_elements", r.size(), limits.max_elements);
  return subset_where(r, SubsetKind::subgroup, [&](Elem x) { return is_central(r, x); });
}

/// |xR|, computed as the additive span of x*b_i.
inline std::size_t right_principal_size(const Ring& r, Elem x) {
  SpanBuilder span(r);
  for (Elem b : r.generators()) span.add(r.mul(x, b));
  return span.set().size();
}

inline std::size_t left_principal_size(const Ring& r, Elem x) {
  SpanBuilder span(r);
  for (Elem b : r.generators()) span.add(r.mul(b, x));
  return span.set().size();
}

struct UnitsAndRegulars {
  ElementSet units;
  ElementSet regulars;
  std::vector<Elem> inverse;  // inverse[u] for units, 0 elsewhere
};

/// Units by inverse search, regulars by injectivity of both multiplication
/// maps (|xR| = |Rx| = |R|). The two routes are independent.
inline UnitsAndRegulars units_and_regulars(const Ring& r, const Limits& limits = {}) {
  check_limit("max_elements", r.size(), limits.max_elements);
  const auto n = r.size();
  UnitsAndRegulars out{ElementSet(n), ElementSet(n), std::vector<Elem>(n, 0)};
  const Elem one = r.one();
  for (Elem x = 0; x < n; ++x) {
    if (right_principal_size(r, x) == n && left_principal_size(r, x) == n) out.regulars.insert(x);
  }
  // Tabulated rings: exhaustive inverse search over all pairs, independent of
  // the regular set. Larger rings: inverses of units are regular, so only
  // regular pairs are searched.
  if (r.tabulated()) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (r.mul(x, y) == one && r.mul(y, x) == one) {
          out.units.insert(x);
          out.inverse[x] = y;
          break;
        }
  } else {
    for (Elem x : out.regulars.elements()) {
      for (Elem y : out.regulars.elements())
        if (r.mul(x, y) == one) {
          if (r.mul(y, x) == one) {
            out.units.insert(x);
            out.inverse[x] = y;
          }
          break;
        }
    }
  }
  return out;
}

inline bool is_unit(const Ring& r, Elem x) {
  return right_principal_size(r, x) == r.size() && left_principal_size(r, x) == r.size();
}

/// Additive order of x.
inline std::uint64_t additive_order(const Ring& r, Elem x) {
  std::uint64_t k = 1;
  for (Elem m = x; m != 0; m = r.add(m, x)) ++k;
  return x == 0 ? 1 : k;
}

}  // namespace ccring
