#pragma once

// Additively closed subsets and their closures.

#include <string>
#include <vector>

#include "ccring/ring.hpp"

namespace ccring {

enum class SubsetKind { subgroup, left, right, twosided };

inline const char* to_string(SubsetKind k) {
  switch (k) {
    case SubsetKind::subgroup: return "subgroup";
    case SubsetKind::left: return "left";
    case SubsetKind::right: return "right";
    case SubsetKind::twosided: return "twosided";
  }
  return "?";
}

/// A subgroup, one-sided ideal or two-sided ideal of `owner`, stored as an
/// explicit element set.
class AdditiveSubset {
 public:
  AdditiveSubset() = default;
  AdditiveSubset(Ring owner, SubsetKind kind, ElementSet set)
      : owner_(std::move(owner)), kind_(kind), set_(std::move(set)) {}

  const Ring& owner() const { return owner_; }
  SubsetKind kind() const { return kind_; }
  std::size_t size() const { return set_.size(); }
  bool contains(Elem e) const { return set_.contains(e); }
  const std::vector<Elem>& elements() const { return set_.elements(); }
  const ElementSet& set() const { return set_; }
  bool is_zero() const { return set_.size() == 1; }
  bool is_whole() const { return set_.size() == owner_.size(); }
  bool subset_of(const AdditiveSubset& o) const { return set_.subset_of(o.set_); }
  std::vector<Elem> generators() const { return additive_basis_of(owner_, elements()); }

  AdditiveSubset with_kind(SubsetKind k) const { return {owner_, k, set_}; }

  /// Same elements; kinds may differ.
  friend bool operator==(const AdditiveSubset& a, const AdditiveSubset& b) {
    return a.set_ == b.set_;
  }

 private:
  Ring owner_;
  SubsetKind kind_ = SubsetKind::subgroup;
  ElementSet set_;
};

namespace detail {

// Generators whose additive span is the closure of `gens` of the given kind:
// b_i g (left), g b_i (right), b_i g b_j (two-sided), over additive generators
// b_i together with 1.
inline std::vector<Elem> closure_spanning_set(const Ring& r, const std::vector<Elem>& gens,
                                              SubsetKind kind) {
  std::vector<Elem> mults = r.generators();
  mults.push_back(r.one());
  std::vector<Elem> out;
  for (Elem g : gens) {
    switch (kind) {
      case SubsetKind::subgroup: out.push_back(g); break;
      case SubsetKind::left:
        for (Elem b : mults) out.push_back(r.mul(b, g));
        break;
      case SubsetKind::right:
        for (Elem b : mults) out.push_back(r.mul(g, b));
        break;
      case SubsetKind::twosided:
        for (Elem b : mults) {
          Elem bg = r.mul(b, g);
          for (Elem c : mults) out.push_back(r.mul(bg, c));
        }
        break;
    }
  }
  return out;
}

}  // namespace detail

/// Least subset of the given kind containing `gens`.
inline AdditiveSubset closure(const Ring& r, const std::vector<Elem>& gens, SubsetKind kind,
                              const Limits& limits = {}) {
  check_limit("max_elements", r.size(), limits.max_elements);
  for (Elem g : gens)
    if (g >= r.size()) throw MalformedInput("generator outside ring '" + r.name() + "'");
  SpanBuilder span(r);
  span.add_all(detail::closure_spanning_set(r, gens, kind));
  return {r, kind, span.take()};
}

/// Closure of `base` together with extra generators (join with a principal
/// closure); `base` must already be closed of the same kind.
inline AdditiveSubset extend(const AdditiveSubset& base, const std::vector<Elem>& gens) {
  const Ring& r = base.owner();
  SpanBuilder span(r, base.set());
  span.add_all(detail::closure_spanning_set(r, gens, base.kind()));
  return {r, base.kind(), span.take()};
}

inline AdditiveSubset zero_subset(const Ring& r, SubsetKind kind = SubsetKind::twosided) {
  ElementSet s(r.size());
  s.insert(0);
  return {r, kind, std::move(s)};
}

inline AdditiveSubset whole_ring(const Ring& r, SubsetKind kind = SubsetKind::twosided) {
  ElementSet s(r.size());
  for (Elem e = 0; e < r.size(); ++e) s.insert(e);
  return {r, kind, std::move(s)};
}

/// Subset built from a membership predicate; the caller vouches for closure.
template <class Pred>
AdditiveSubset subset_where(const Ring& r, SubsetKind kind, Pred&& pred) {
  ElementSet s(r.size());
  for (Elem e = 0; e < r.size(); ++e)
    if (pred(e)) s.insert(e);
  return {r, kind, std::move(s)};
}

inline AdditiveSubset sum(const AdditiveSubset& a, const AdditiveSubset& b) {
  return extend(a, b.generators());
}

inline AdditiveSubset intersection(const AdditiveSubset& a, const AdditiveSubset& b) {
  ElementSet s(a.owner().size());
  for (Elem e : a.elements())
    if (b.contains(e)) s.insert(e);
  auto kind = a.kind() == b.kind() ? a.kind() : SubsetKind::subgroup;
  return {a.owner(), kind, std::move(s)};
}

/// Additive span of all products u*v, u in a, v in b.
inline AdditiveSubset product(const AdditiveSubset& a, const AdditiveSubset& b) {
  const Ring& r = a.owner();
  SpanBuilder span(r);
  const auto ga = a.generators(), gb = b.generators();
  for (Elem u : ga)
    for (Elem v : gb) span.add(r.mul(u, v));
  SubsetKind kind = SubsetKind::subgroup;
  if (a.kind() == SubsetKind::twosided && b.kind() == SubsetKind::twosided)
    kind = SubsetKind::twosided;
  else if (a.kind() == SubsetKind::twosided || a.kind() == SubsetKind::left)
    kind = SubsetKind::left;
  else if (b.kind() == SubsetKind::twosided || b.kind() == SubsetKind::right)
    kind = SubsetKind::right;
  return {r, kind, span.take()};
}

/// Checks the closure laws claimed by the subset's kind.
inline bool is_closed(const AdditiveSubset& s) {
  const Ring& r = s.owner();
  if (!s.contains(0)) return false;
  const auto gens = s.generators();
  for (Elem x : gens)
    if (!s.contains(r.neg(x))) return false;
  for (Elem x : s.elements())
    for (Elem g : gens)
      if (!s.contains(r.add(x, g))) return false;
  const bool left = s.kind() == SubsetKind::left || s.kind() == SubsetKind::twosided;
  const bool right = s.kind() == SubsetKind::right || s.kind() == SubsetKind::twosided;
  for (Elem x : gens)
    for (Elem b : r.generators()) {
      if (left && !s.contains(r.mul(b, x))) return false;
      if (right && !s.contains(r.mul(x, b))) return false;
    }
  return true;
}

}  // namespace ccring
