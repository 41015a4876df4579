#pragma once

// Ideal lattices, quotient rings, radicals and nilpotency.

#include <algorithm>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ccring/core.hpp"
#include "ccring/subset.hpp"

namespace ccring {

/// All ideals of one kind, sorted by cardinality then by element set.
struct IdealLattice {
  Ring ring;
  SubsetKind kind = SubsetKind::twosided;
  std::vector<AdditiveSubset> ideals;

  std::size_t size() const { return ideals.size(); }
  std::optional<std::size_t> find(const AdditiveSubset& s) const {
    for (std::size_t i = 0; i < ideals.size(); ++i)
      if (ideals[i] == s) return i;
    return std::nullopt;
  }
  /// Pairs (i, j) with ideals[i] covered by ideals[j].
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const auto n = ideals.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (ideals[i].size() >= ideals[j].size() || !ideals[i].subset_of(ideals[j])) continue;
        bool between = false;
        for (std::size_t k = 0; k < n && !between; ++k)
          between = ideals[k].size() > ideals[i].size() && ideals[k].size() < ideals[j].size() &&
                    ideals[i].subset_of(ideals[k]) && ideals[k].subset_of(ideals[j]);
        if (!between) out.emplace_back(i, j);
      }
    return out;
  }
  /// First incomparable pair, if the lattice is not a chain.
  std::optional<std::pair<std::size_t, std::size_t>> incomparable_pair() const {
    for (std::size_t i = 0; i < ideals.size(); ++i)
      for (std::size_t j = i + 1; j < ideals.size(); ++j)
        if (!ideals[i].subset_of(ideals[j]) && !ideals[j].subset_of(ideals[i])) return std::pair{i, j};
    return std::nullopt;
  }
};

namespace detail {

inline bool set_less(const AdditiveSubset& a, const AdditiveSubset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements() < b.elements();
}

}  // namespace detail

/// Principal closures x -> (closure of {x}) for every element, deduplicated.
/// Returns the distinct ideals together with one generating element each.
inline std::vector<std::pair<AdditiveSubset, Elem>> principal_ideals(const Ring& r, SubsetKind kind,
                                                                     const Limits& limits = {}) {
  check_limit("max_elements", r.size(), limits.max_elements);
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  std::vector<std::pair<AdditiveSubset, Elem>> out;
  for (Elem x = 0; x < r.size(); ++x) {
    auto p = closure(r, {x}, kind, limits);
    if (seen.emplace(p.set(), out.size()).second) out.emplace_back(std::move(p), x);
  }
  return out;
}

/// Every ideal of the kind, as joins of principal ideals.
inline IdealLattice all_ideals(const Ring& r, SubsetKind kind, const Limits& limits = {}) {
  check_limit("max_lattice_elements", r.size(), limits.max_lattice_elements);
  auto principal = principal_ideals(r, kind, limits);
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  std::vector<AdditiveSubset> found;
  for (auto& [p, x] : principal) {
    seen.emplace(p.set(), found.size());
    found.push_back(p);
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& [p, x] : principal) {
      if (p.subset_of(found[i])) continue;
      auto joined = extend(found[i], {x});
      if (seen.emplace(joined.set(), found.size()).second) {
        found.push_back(std::move(joined));
        check_limit("max_ideals", found.size(), limits.max_ideals);
      }
    }
  }
  std::sort(found.begin(), found.end(), detail::set_less);
  return {r, kind, std::move(found)};
}

namespace detail {

class QuotientImpl final : public RingImpl {
 public:
  QuotientImpl(Ring base, const AdditiveSubset& ideal) : base_(std::move(base)) {
    const auto n = base_.size();
    constexpr Elem unset = ~Elem{0};
    coset_.assign(n, unset);
    for (Elem b = 0; b < n; ++b) {
      if (coset_[b] != unset) continue;
      const auto id = static_cast<Elem>(rep_.size());
      rep_.push_back(b);
      for (Elem i : ideal.elements()) coset_[base_.add(b, i)] = id;
    }
    one_ = coset_[base_.one()];
    std::vector<Elem> g;
    for (Elem b : base_.generators())
      if (Elem q = coset_[b]; q != 0 && std::find(g.begin(), g.end(), q) == g.end()) g.push_back(q);
    gens_ = std::move(g);
  }
  std::size_t size() const override { return rep_.size(); }
  Elem one() const override { return one_; }
  Elem add(Elem a, Elem b) const override { return coset_[base_.add(rep_[a], rep_[b])]; }
  Elem neg(Elem a) const override { return coset_[base_.neg(rep_[a])]; }
  Elem mul(Elem a, Elem b) const override { return coset_[base_.mul(rep_[a], rep_[b])]; }
  std::vector<Elem> additive_generators() const override { return gens_; }
  std::string format(Elem a) const override { return base_.format(rep_[a]); }
  std::vector<std::uint32_t> coordinates(Elem a) const override {
    return base_.coordinates(rep_[a]);
  }

  Elem project(Elem b) const { return coset_[b]; }
  Elem lift(Elem q) const { return rep_[q]; }

 private:
  Ring base_;
  std::vector<Elem> rep_;    // coset -> least member
  std::vector<Elem> coset_;  // base element -> coset
  Elem one_ = 0;
  std::vector<Elem> gens_;
};

}  // namespace detail

/// R/I with coset representatives the least member of each coset.
struct Quotient {
  Ring ring;
  Ring base;
  AdditiveSubset ideal;
  std::shared_ptr<const detail::QuotientImpl> map;

  Elem project(Elem b) const { return map->project(b); }
  Elem lift(Elem q) const { return map->lift(q); }

  AdditiveSubset image(const AdditiveSubset& s) const {
    ElementSet out(ring.size());
    for (Elem x : s.elements()) out.insert(project(x));
    return {ring, s.kind(), std::move(out)};
  }
  AdditiveSubset preimage(const AdditiveSubset& s) const {
    return subset_where(base, s.kind(), [&](Elem x) { return s.contains(project(x)); });
  }
};

inline Quotient quotient(const Ring& r, const AdditiveSubset& ideal, const Limits& limits = {},
                         std::string name = {}) {
  check_limit("max_elements", r.size(), limits.max_elements);
  if (!(ideal.owner() == r)) throw DomainError("ideal belongs to a different ring");
  if (ideal.kind() != SubsetKind::twosided || !is_closed(ideal))
    throw DomainError("quotient needs a two-sided ideal");
  if (ideal.is_whole()) throw DomainError("quotient by the whole ring is the zero ring");
  if (name.empty()) name = r.name() + "/(" + std::to_string(ideal.size()) + ")";
  auto impl = std::make_shared<detail::QuotientImpl>(r, ideal);
  Ring q(impl, std::move(name));
  return {q, r, ideal, impl};
}

/// Least n with I^n = 0, or nullopt if the powers stabilize above zero.
inline std::optional<std::size_t> nilpotency_index(const AdditiveSubset& ideal) {
  AdditiveSubset power = ideal;
  for (std::size_t n = 1;; ++n) {
    if (power.is_zero()) return n;
    auto next = product(power, ideal);
    if (next == power) return std::nullopt;
    power = std::move(next);
  }
}

/// n-th power of an ideal (n >= 1).
inline AdditiveSubset ideal_power(const AdditiveSubset& ideal, std::size_t n) {
  AdditiveSubset power = ideal;
  for (std::size_t i = 1; i < n; ++i) power = product(power, ideal);
  return power;
}

/// J(R) = {x : 1 - a x is a unit for every a}.
inline AdditiveSubset jacobson_radical(const Ring& r, const Limits& limits = {}) {
  check_limit("max_quadratic_elements", r.size(), limits.max_quadratic_elements);
  const auto n = r.size();
  ElementSet units(n);
  for (Elem x = 0; x < n; ++x)
    if (is_unit(r, x)) units.insert(x);
  return subset_where(r, SubsetKind::twosided, [&](Elem x) {
    for (Elem a = 0; a < n; ++a)
      if (!units.contains(r.sub(r.one(), r.mul(a, x)))) return false;
    return true;
  });
}

/// Maximal members among the proper ideals of a lattice.
inline std::vector<AdditiveSubset> maximal_ideals(const IdealLattice& lat) {
  std::vector<AdditiveSubset> out;
  for (const auto& a : lat.ideals) {
    if (a.is_whole()) continue;
    bool maximal = true;
    for (const auto& b : lat.ideals)
      if (!b.is_whole() && b.size() > a.size() && a.subset_of(b)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

/// Intersection of all maximal right ideals, from the right-ideal lattice.
inline AdditiveSubset jacobson_by_maximal_right_ideals(const Ring& r, const Limits& limits = {}) {
  auto lat = all_ideals(r, SubsetKind::right, limits);
  AdditiveSubset acc = whole_ring(r, SubsetKind::right);
  for (const auto& m : maximal_ideals(lat)) acc = intersection(acc, m);
  return acc.with_kind(SubsetKind::twosided);
}

/// Largest nilpotent ideal: the sum of all nilpotent principal two-sided
/// ideals (every ideal is a sum of principal ones, and sums of nilpotent
/// ideals are nilpotent).
inline AdditiveSubset prime_radical(const Ring& r, const Limits& limits = {}) {
  AdditiveSubset acc = zero_subset(r);
  for (const auto& [p, x] : principal_ideals(r, SubsetKind::twosided, limits))
    if (nilpotency_index(p)) acc = extend(acc, {x});
  return acc;
}

/// Largest two-sided ideal inside a one-sided ideal.
inline AdditiveSubset largest_inner_ideal(const AdditiveSubset& ideal) {
  const Ring& r = ideal.owner();
  switch (ideal.kind()) {
    case SubsetKind::twosided: return ideal;
    case SubsetKind::right:
      return subset_where(r, SubsetKind::twosided, [&](Elem x) {
        if (!ideal.contains(x)) return false;
        for (Elem b : r.generators())
          if (!ideal.contains(r.mul(b, x))) return false;
        return true;
      });
    case SubsetKind::left:
      return subset_where(r, SubsetKind::twosided, [&](Elem x) {
        if (!ideal.contains(x)) return false;
        for (Elem b : r.generators())
          if (!ideal.contains(r.mul(x, b))) return false;
        return true;
      });
    case SubsetKind::subgroup: break;
  }
  throw DomainError("largest_inner_ideal needs a one-sided ideal");
}

}  // namespace ccring
