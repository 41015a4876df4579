#pragma once

// Ring-theoretic property deciders with checkable witnesses.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccring/core.hpp"
#include "ccring/ideals.hpp"

namespace ccring {

enum class Verdict { no, yes, skipped };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::no: return "false";
    case Verdict::yes: return "true";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// commutativity

struct CommutativityResult {
  bool commutative = true;
  std::optional<std::pair<Elem, Elem>> witness;  // a non-commuting pair
};

inline CommutativityResult is_commutative(const Ring& r) {
  const auto& g = r.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (r.mul(g[i], g[j]) != r.mul(g[j], g[i])) return {false, std::pair{g[i], g[j]}};
  return {};
}

// ---------------------------------------------------------------------------
// centrally essential

/// Central x != 0 with a*x != 0 central, for this a; nullopt if none exists.
inline std::optional<Elem> central_multiplier(const Ring& r, const std::vector<Elem>& center_nonzero,
                                              const ElementSet& center_set, Elem a) {
  if (center_set.contains(a)) return r.one();
  for (Elem x : center_nonzero) {
    Elem ax = r.mul(a, x);
    if (ax != 0 && center_set.contains(ax)) return x;
  }
  return std::nullopt;
}

struct CentralEssentialityResult {
  bool holds = true;
  std::optional<Elem> counterexample;
  /// witness[a] = x with a*x non-zero and central (x = 0 for a = 0 or when
  /// the scan stopped at a counterexample).
  std::vector<Elem> witness;
};

/// For every non-zero a there is a central x != 0 with a*x central and
/// non-zero. Scans the whole ring; the reported counterexample is the first
/// failing element in canonical order.
inline CentralEssentialityResult is_centrally_essential(const Ring& r, const Limits& limits = {}) {
  auto z = center(r, limits);
  std::vector<Elem> nz(z.elements().begin() + 1, z.elements().end());
  CentralEssentialityResult out;
  out.witness.assign(r.size(), 0);
  for (Elem a = 1; a < r.size(); ++a) {
    auto x = central_multiplier(r, nz, z.set(), a);
    if (!x) {
      out.holds = false;
      out.counterexample = a;
      return out;
    }
    out.witness[a] = *x;
  }
  return out;
}

/// True iff a is non-zero and no central x gives a non-zero central a*x.
inline bool is_ce_counterexample(const Ring& r, Elem a, const Limits& limits = {}) {
  if (a == 0) return false;
  auto z = center(r, limits);
  std::vector<Elem> nz(z.elements().begin() + 1, z.elements().end());
  return !central_multiplier(r, nz, z.set(), a).has_value();
}

struct CompleteEssentialityResult {
  Verdict verdict = Verdict::yes;
  std::optional<AdditiveSubset> failing_ideal;  // R/I is not centrally essential
  std::optional<Elem> counterexample;           // in R/I
  std::string skip_reason;
  std::size_t quotients_checked = 0;
};

/// Every proper factor ring R/I (including R itself) is centrally essential.
/// Ideals are tried in lattice order, so the failing ideal reported is a
/// smallest one.
inline CompleteEssentialityResult is_completely_centrally_essential(const Ring& r,
                                                                    const Limits& limits = {}) {
  CompleteEssentialityResult out;
  if (is_commutative(r).commutative) return out;
  try {
    auto base = is_centrally_essential(r, limits);
    if (!base.holds) {
      out.verdict = Verdict::no;
      out.failing_ideal = zero_subset(r);
      out.counterexample = base.counterexample;
      return out;
    }
    auto lat = all_ideals(r, SubsetKind::twosided, limits);
    for (const auto& ideal : lat.ideals) {
      if (ideal.is_zero() || ideal.is_whole()) continue;
      auto q = quotient(r, ideal, limits);
      ++out.quotients_checked;
      if (is_commutative(q.ring).commutative) continue;
      auto ce = is_centrally_essential(q.ring, limits);
      if (!ce.holds) {
        out.verdict = Verdict::no;
        out.failing_ideal = ideal;
        out.counterexample = ce.counterexample;
        return out;
      }
    }
  } catch (const LimitExceeded& e) {
    out.verdict = Verdict::skipped;
    out.skip_reason = e.limit();
  }
  return out;
}

// ---------------------------------------------------------------------------
// invariance, strong boundedness

struct ElementWitnessResult {
  bool holds = true;
  std::optional<Elem> witness;
};

/// aR = Ra for every a (so every one-sided ideal is two-sided).
inline ElementWitnessResult is_invariant(const Ring& r, const Limits& limits = {}) {
  for (Elem a = 1; a < r.size(); ++a) {
    auto right = closure(r, {a}, SubsetKind::right, limits);
    auto left = closure(r, {a}, SubsetKind::left, limits);
    if (!(right == left)) return {false, a};
  }
  return {};
}

/// Every non-zero principal one-sided ideal contains a non-zero ideal.
inline ElementWitnessResult is_strongly_bounded(const Ring& r, const Limits& limits = {}) {
  for (Elem a = 1; a < r.size(); ++a) {
    if (largest_inner_ideal(closure(r, {a}, SubsetKind::right, limits)).is_zero()) return {false, a};
    if (largest_inner_ideal(closure(r, {a}, SubsetKind::left, limits)).is_zero()) return {false, a};
  }
  return {};
}

// ---------------------------------------------------------------------------
// reversible, semicommutative

struct PairWitnessResult {
  bool holds = true;
  std::optional<std::pair<Elem, Elem>> witness;  // ab = 0, ba != 0
};

inline PairWitnessResult is_reversible(const Ring& r, const Limits& limits = {}) {
  check_limit("max_quadratic_elements", r.size(), limits.max_quadratic_elements);
  for (Elem a = 1; a < r.size(); ++a)
    for (Elem b = 1; b < r.size(); ++b)
      if (r.mul(a, b) == 0 && r.mul(b, a) != 0) return {false, std::pair{a, b}};
  return {};
}

struct TripleWitness {
  Elem a, middle, b;  // ab = 0, a*middle*b != 0
};

struct SemicommutativityResult {
  bool holds = true;
  std::optional<TripleWitness> witness;
};

/// Middle factors beyond the additive generators are not needed: aRb is
/// spanned by a*g*b.
inline std::optional<Elem> semicommutativity_middle(const Ring& r, Elem a, Elem b) {
  if (r.mul(a, b) != 0) return std::nullopt;
  for (Elem g : r.generators())
    if (r.mul(r.mul(a, g), b) != 0) return g;
  return std::nullopt;
}

inline SemicommutativityResult is_semicommutative(const Ring& r, const Limits& limits = {}) {
  check_limit("max_quadratic_elements", r.size(), limits.max_quadratic_elements);
  for (Elem a = 1; a < r.size(); ++a)
    for (Elem b = 1; b < r.size(); ++b)
      if (auto m = semicommutativity_middle(r, a, b)) return {false, TripleWitness{a, *m, b}};
  return {};
}

// ---------------------------------------------------------------------------
// Lie series

enum class LieFlavor { bracket, strong };

struct LieSeries {
  LieFlavor flavor = LieFlavor::bracket;
  std::vector<AdditiveSubset> terms;  // terms[i] is the (i+1)-th term; terms[0] = R

  bool reaches_zero() const { return !terms.empty() && terms.back().is_zero(); }
  /// Least n with term n+1 zero.
  std::optional<std::size_t> nilpotence_class() const {
    if (!reaches_zero()) return std::nullopt;
    return terms.size() - 1;
  }
};

/// Bracket flavor: S_{i+1} = additive span of [u, b]; strong flavor: the
/// two-sided ideal generated by the same brackets. Stops at zero or at a
/// fixpoint.
inline LieSeries lie_series(const Ring& r, LieFlavor flavor, const Limits& limits = {}) {
  check_limit("max_elements", r.size(), limits.max_elements);
  LieSeries s{flavor, {whole_ring(r, flavor == LieFlavor::strong ? SubsetKind::twosided
                                                                  : SubsetKind::subgroup)}};
  while (!s.terms.back().is_zero()) {
    std::vector<Elem> brackets;
    for (Elem u : s.terms.back().generators())
      for (Elem b : r.generators()) brackets.push_back(r.bracket(u, b));
    auto next = closure(r, brackets,
                        flavor == LieFlavor::strong ? SubsetKind::twosided : SubsetKind::subgroup,
                        limits);
    if (next == s.terms.back()) break;
    s.terms.push_back(std::move(next));
  }
  return s;
}

inline std::optional<std::size_t> lie_class(const Ring& r, const Limits& limits = {}) {
  return lie_series(r, LieFlavor::bracket, limits).nilpotence_class();
}

// ---------------------------------------------------------------------------
// central series

/// [J, R] contained in I.
inline bool is_central_factor(const AdditiveSubset& lower, const AdditiveSubset& upper) {
  const Ring& r = upper.owner();
  for (Elem u : upper.generators())
    for (Elem b : r.generators())
      if (!lower.contains(r.bracket(u, b))) return false;
  return true;
}

struct CentralChain {
  std::vector<AdditiveSubset> chain;  // 0 = P_0 < P_1 < ... < P_m
  bool ok = true;
  std::string failure;

  bool factors_central() const {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (!is_central_factor(chain[i], chain[i + 1])) return false;
    return true;
  }
  bool strictly_increasing() const {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (!(chain[i].subset_of(chain[i + 1]) && chain[i].size() < chain[i + 1].size())) return false;
    return true;
  }
};

/// Chain 0 = P_0 < P_1 < ... < P_m = P(R): P_{i+1}/P_i is the intersection
/// of the top non-zero power of P/P_i with the center of R/P_i.
inline CentralChain nil_radical_central_chain(const Ring& r, const Limits& limits = {}) {
  CentralChain out;
  const auto p = prime_radical(r, limits);
  out.chain.push_back(zero_subset(r));
  if (p.is_zero()) return out;
  while (!(out.chain.back() == p)) {
    const auto& current = out.chain.back();
    AdditiveSubset next;
    if (current.is_zero()) {
      auto k = nilpotency_index(p);
      auto top = ideal_power(p, *k - 1);
      next = intersection(top, center(r, limits)).with_kind(SubsetKind::twosided);
    } else {
      auto q = quotient(r, current, limits);
      auto pbar = closure(q.ring, q.image(p).generators(), SubsetKind::twosided, limits);
      auto k = nilpotency_index(pbar);
      if (!k) {
        out.ok = false;
        out.failure = "radical image is not nilpotent";
        return out;
      }
      auto top = ideal_power(pbar, *k - 1);
      auto slice = intersection(top, center(q.ring, limits)).with_kind(SubsetKind::twosided);
      next = q.preimage(slice);
    }
    if (next.size() <= current.size()) {
      out.ok = false;
      out.failure = "central slice of the radical power is zero at step " +
                    std::to_string(out.chain.size());
      return out;
    }
    if (!is_closed(next)) {
      out.ok = false;
      out.failure = "step " + std::to_string(out.chain.size()) + " is not a two-sided ideal";
      return out;
    }
    out.chain.push_back(std::move(next));
  }
  return out;
}

/// Largest ideal inside the preimage of Z(R/I), iterated from I = 0.
/// Reaches R exactly when R has a finite central series of ideals.
inline CentralChain upper_central_ideal_series(const Ring& r, const Limits& limits = {}) {
  check_limit("max_elements", r.size(), limits.max_elements);
  CentralChain out;
  out.chain.push_back(zero_subset(r));
  while (!out.chain.back().is_whole()) {
    const auto& current = out.chain.back();
    // x with [b_i x b_j, R] in I for all generator pairs (1 included)
    std::vector<Elem> mults = r.generators();
    mults.push_back(r.one());
    auto next = subset_where(r, SubsetKind::twosided, [&](Elem x) {
      for (Elem b : mults)
        for (Elem c : mults) {
          Elem y = r.mul(r.mul(b, x), c);
          for (Elem g : r.generators())
            if (!current.contains(r.bracket(y, g))) return false;
        }
      return true;
    });
    if (next == current) {
      out.ok = false;
      out.failure = "stabilized below R";
      return out;
    }
    out.chain.push_back(std::move(next));
  }
  return out;
}

// ---------------------------------------------------------------------------
// local, uniserial, semiprime

inline bool is_local(const Ring& r, const Limits& limits = {}) {
  auto j = jacobson_radical(r, limits);
  Ring top = j.is_zero() ? r : quotient(r, j, limits).ring;
  for (Elem x = 1; x < top.size(); ++x)
    if (!is_unit(top, x)) return false;
  return true;
}

struct UniserialResult {
  bool holds = true;
  std::optional<std::pair<AdditiveSubset, AdditiveSubset>> witness;  // incomparable right ideals
};

/// Right ideals form a chain iff the principal right ideals do (every right
/// ideal is a finite sum of principal ones).
inline UniserialResult is_uniserial_right(const Ring& r, const Limits& limits = {}) {
  auto principal = principal_ideals(r, SubsetKind::right, limits);
  for (std::size_t i = 0; i < principal.size(); ++i)
    for (std::size_t j = i + 1; j < principal.size(); ++j) {
      const auto& a = principal[i].first;
      const auto& b = principal[j].first;
      if (!a.subset_of(b) && !b.subset_of(a)) return {false, std::pair{a, b}};
    }
  return {};
}

inline bool is_semiprime(const Ring& r, const Limits& limits = {}) {
  return prime_radical(r, limits).is_zero();
}

// ---------------------------------------------------------------------------
// annihilators

/// An element with a non-zero left annihilator but zero right annihilator,
/// or the reverse.
inline std::optional<Elem> one_sided_zero_divisor(const Ring& r, const Limits& limits = {}) {
  check_limit("max_quadratic_elements", r.size(), limits.max_quadratic_elements);
  for (Elem a = 1; a < r.size(); ++a) {
    bool left = false, right = false;  // ya = 0 / ay = 0 for some y != 0
    for (Elem y = 1; y < r.size() && !(left && right); ++y) {
      left = left || r.mul(y, a) == 0;
      right = right || r.mul(a, y) == 0;
    }
    if (left != right) return a;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Ore conditions

struct OreWitness {
  Elem a, b, c, d;  // b regular; right: b c = a d, left: c b = d a; d regular
};

struct OreReport {
  bool right_holds = true;
  bool left_holds = true;
  bool regulars_equal_units = true;
  std::size_t regular_count = 0;
  std::size_t unit_count = 0;
  std::vector<OreWitness> right_witnesses;
  std::vector<OreWitness> left_witnesses;
  std::optional<std::pair<Elem, Elem>> failure;  // (a, b)

  bool holds() const { return right_holds && left_holds && regulars_equal_units; }
};

/// For every a and regular b, searches regular d (identity first) and solves
/// for c through the inverse of the injective map c -> b c (resp. c b).
inline OreReport ore_check(const Ring& r, const Limits& limits = {}) {
  check_limit("max_quadratic_elements", r.size(), limits.max_quadratic_elements);
  auto ur = units_and_regulars(r, limits);
  OreReport rep;
  rep.regular_count = ur.regulars.size();
  rep.unit_count = ur.units.size();
  rep.regulars_equal_units = ur.regulars == ur.units;
  const auto n = r.size();
  std::vector<Elem> regulars = ur.regulars.elements();
  std::sort(regulars.begin(), regulars.end(), [&](Elem x, Elem y) {
    return (x != r.one()) < (y != r.one()) || ((x != r.one()) == (y != r.one()) && x < y);
  });
  constexpr Elem none = ~Elem{0};
  std::vector<Elem> inv(n);
  for (int side = 0; side < 2; ++side) {
    auto& holds = side == 0 ? rep.right_holds : rep.left_holds;
    auto& wit = side == 0 ? rep.right_witnesses : rep.left_witnesses;
    for (Elem b : regulars) {
      std::fill(inv.begin(), inv.end(), none);
      for (Elem c = 0; c < n; ++c) inv[side == 0 ? r.mul(b, c) : r.mul(c, b)] = c;
      for (Elem a = 0; a < n; ++a) {
        bool found = false;
        for (Elem d : regulars) {
          Elem target = side == 0 ? r.mul(a, d) : r.mul(d, a);
          if (inv[target] != none) {
            wit.push_back({a, b, inv[target], d});
            found = true;
            break;
          }
        }
        if (!found) {
          holds = false;
          if (!rep.failure) rep.failure = std::pair{a, b};
        }
      }
    }
  }
  return rep;
}

}  // namespace ccring
