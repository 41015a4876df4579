#pragma once

// Implications between properties that must hold on every finite ring.

#include <string>
#include <vector>

#include "ccring/properties.hpp"

namespace ccring {

struct InvariantViolation {
  std::string ring;
  std::string invariant;
  std::string detail;
};

struct InvariantStats {
  std::size_t rings = 0;
  std::size_t completely_ce = 0;
  std::size_t centrally_essential = 0;
  std::size_t noncommutative = 0;
  std::vector<InvariantViolation> violations;
};

/// Names of the checks performed by check_invariants.
inline std::vector<std::string> invariant_names() {
  return {"cce_lie_class_bound",         "cce_implies_invariant",          "semiprime_ce_commutative",
          "cce_closed_under_quotients",  "ce_top_commutative",             "bracket_series_inside_strong_series",
          "strong_lie_iff_central_series", "ce_zero_divisors_two_sided"};
}

/// Runs every implication on r and appends violations to stats.
inline void check_invariants(const Ring& r, InvariantStats& stats, const Limits& limits = {}) {
  auto fail = [&](const std::string& inv, const std::string& detail) {
    stats.violations.push_back({r.name(), inv, detail});
  };
  ++stats.rings;
  const bool commutative = is_commutative(r).commutative;
  stats.noncommutative += !commutative;
  const auto ce = is_centrally_essential(r, limits);
  stats.centrally_essential += ce.holds;
  const auto cce = is_completely_centrally_essential(r, limits);
  const bool is_cce = cce.verdict == Verdict::yes;
  stats.completely_ce += is_cce;
  const auto jac = jacobson_radical(r, limits);

  if (is_cce) {
    auto cls = lie_class(r, limits);
    auto idx = nilpotency_index(jac);
    if (!cls || !idx || *cls > *idx)
      fail("cce_lie_class_bound", "lie_class=" + (cls ? std::to_string(*cls) : std::string("none")) +
                                      " index=" + (idx ? std::to_string(*idx) : std::string("none")));
    if (auto inv = is_invariant(r, limits); !inv.holds) fail("cce_implies_invariant", "witness=" + r.format(*inv.witness));
    for (const auto& ideal : all_ideals(r, SubsetKind::twosided, limits).ideals) {
      if (ideal.is_zero() || ideal.is_whole()) continue;
      auto q = quotient(r, ideal, limits);
      if (is_completely_centrally_essential(q.ring, limits).verdict == Verdict::no)
        fail("cce_closed_under_quotients", "ideal size " + std::to_string(ideal.size()));
    }
  }
  if (ce.holds && is_semiprime(r, limits) && !commutative) fail("semiprime_ce_commutative", "");
  if (ce.holds) {
    Ring top = jac.is_zero() ? r : quotient(r, jac, limits).ring;
    if (!is_commutative(top).commutative) fail("ce_top_commutative", "");
    if (auto z = one_sided_zero_divisor(r, limits)) fail("ce_zero_divisors_two_sided", "element " + r.format(*z));
  }
  const auto bracket = lie_series(r, LieFlavor::bracket, limits);
  const auto strong = lie_series(r, LieFlavor::strong, limits);
  for (std::size_t i = 0; i < bracket.terms.size(); ++i) {
    const auto& s = i < strong.terms.size() ? strong.terms[i] : strong.terms.back();
    if (!bracket.terms[i].subset_of(s)) fail("bracket_series_inside_strong_series", "term " + std::to_string(i + 1));
  }
  if (strong.reaches_zero() && !bracket.reaches_zero())
    fail("bracket_series_inside_strong_series", "strongly Lie nilpotent but not Lie nilpotent");
  const auto central = upper_central_ideal_series(r, limits);
  if (strong.reaches_zero() != central.ok)
    fail("strong_lie_iff_central_series", std::string("strong=") + (strong.reaches_zero() ? "zero" : "stable") +
                                              " central_series=" + (central.ok ? "reaches R" : "stalls"));
}

}  // namespace ccring
