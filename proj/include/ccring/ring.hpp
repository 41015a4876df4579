#pragma once

// Ring handles: a uniform element-index interface over every realization
// (structure constants, quotients, explicit tables).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ccring/errors.hpp"
#include "ccring/structure.hpp"

namespace ccring {

/// Element of a ring handle: its position in the canonical element order.
/// Index 0 is always the zero element.
using Elem = std::uint32_t;

class RingImpl {
 public:
  virtual ~RingImpl() = default;
  virtual std::size_t size() const = 0;
  virtual Elem one() const = 0;
  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  /// A generating set of the additive group.
  virtual std::vector<Elem> additive_generators() const = 0;
  virtual std::string format(Elem a) const = 0;
  /// Coordinates of the element in the underlying realization.
  virtual std::vector<std::uint32_t> coordinates(Elem a) const = 0;
};

/// Immutable, cheaply copyable handle to a finite ring. Small rings carry
/// full operation tables built at construction.
class Ring {
 public:
  static constexpr std::size_t kTableLimit = 1024;

  Ring() = default;
  Ring(std::shared_ptr<const RingImpl> impl, std::string name) {
    auto d = std::make_shared<Data>();
    d->impl = std::move(impl);
    d->name = std::move(name);
    d->size = d->impl->size();
    d->one = d->impl->one();
    d->gens = d->impl->additive_generators();
    if (d->size <= kTableLimit) {
      const auto n = d->size;
      d->add.resize(n * n);
      d->mul.resize(n * n);
      d->neg.resize(n);
      for (Elem a = 0; a < n; ++a) {
        d->neg[a] = static_cast<std::uint16_t>(d->impl->neg(a));
        for (Elem b = 0; b < n; ++b) {
          d->add[a * n + b] = static_cast<std::uint16_t>(d->impl->add(a, b));
          d->mul[a * n + b] = static_cast<std::uint16_t>(d->impl->mul(a, b));
        }
      }
    }
    d_ = std::move(d);
  }

  bool valid() const noexcept { return d_ != nullptr; }
  const std::string& name() const { return d_->name; }
  std::size_t size() const { return d_->size; }
  Elem zero() const noexcept { return 0; }
  Elem one() const { return d_->one; }
  bool tabulated() const { return !d_->mul.empty(); }

  Elem add(Elem a, Elem b) const {
    return tabulated() ? d_->add[a * d_->size + b] : d_->impl->add(a, b);
  }
  Elem neg(Elem a) const { return tabulated() ? d_->neg[a] : d_->impl->neg(a); }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    return tabulated() ? d_->mul[a * d_->size + b] : d_->impl->mul(a, b);
  }
  Elem bracket(Elem a, Elem b) const { return sub(mul(a, b), mul(b, a)); }
  Elem times(std::uint64_t n, Elem a) const {
    Elem acc = 0;
    for (; n > 0; --n) acc = add(acc, a);
    return acc;
  }

  const std::vector<Elem>& generators() const { return d_->gens; }
  std::string format(Elem a) const { return d_->impl->format(a); }
  std::vector<std::uint32_t> coordinates(Elem a) const { return d_->impl->coordinates(a); }
  const RingImpl& impl() const { return *d_->impl; }

  /// Identity of the realization, not structural isomorphism.
  friend bool operator==(const Ring& a, const Ring& b) { return a.d_ == b.d_; }

 private:
  struct Data {
    std::shared_ptr<const RingImpl> impl;
    std::string name;
    std::size_t size = 0;
    Elem one = 0;
    std::vector<Elem> gens;
    std::vector<std::uint16_t> add, mul, neg;
  };
  std::shared_ptr<const Data> d_;
};

/// Bitset over the elements of a ring plus the sorted member list.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), bits_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool contains(Elem e) const noexcept { return (bits_[e >> 6] >> (e & 63)) & 1U; }
  bool insert(Elem e) {
    if (contains(e)) return false;
    bits_[e >> 6] |= std::uint64_t{1} << (e & 63);
    elems_.push_back(e);
    sorted_ = false;
    return true;
  }
  /// Members in ascending order.
  const std::vector<Elem>& elements() const {
    if (!sorted_) {
      std::sort(elems_.begin(), elems_.end());
      sorted_ = true;
    }
    return elems_;
  }
  const std::vector<std::uint64_t>& bits() const noexcept { return bits_; }

  bool subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & ~o.bits_[i]) return false;
    return true;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> bits_;
  mutable std::vector<Elem> elems_;
  mutable bool sorted_ = true;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : s.bits()) h = (h ^ w) * 1099511628211ULL;
    return h;
  }
};

/// Incremental additive span: H <- H + <g> for each new generator g.
class SpanBuilder {
 public:
  explicit SpanBuilder(const Ring& r) : ring_(&r), set_(r.size()) { set_.insert(0); }
  SpanBuilder(const Ring& r, const ElementSet& start) : ring_(&r), set_(start) {
    if (!set_.contains(0)) set_.insert(0);
  }

  /// Returns false if g was already in the span.
  bool add(Elem g) {
    if (set_.contains(g)) return false;
    const std::vector<Elem> base = set_.elements();
    Elem m = g;
    while (!set_.contains(m)) {
      for (Elem h : base) set_.insert(ring_->add(h, m));
      m = ring_->add(m, g);
    }
    return true;
  }
  template <class Range>
  void add_all(const Range& gens) {
    for (Elem g : gens) add(g);
  }

  const ElementSet& set() const noexcept { return set_; }
  ElementSet take() { return std::move(set_); }

 private:
  const Ring* ring_;
  ElementSet set_;
};

/// Greedy additive generating set of a subgroup given by its members.
inline std::vector<Elem> additive_basis_of(const Ring& r, const std::vector<Elem>& members) {
  SpanBuilder span(r);
  std::vector<Elem> gens;
  for (Elem e : members)
    if (span.add(e)) gens.push_back(e);
  return gens;
}

namespace detail {

class StructureImpl final : public RingImpl {
 public:
  explicit StructureImpl(StructureRing sr) : sr_(std::move(sr)) {
    const auto k = sr_.rank();
    size_ = static_cast<std::size_t>(*sr_.shape.cardinality());
    weights_.resize(k);
    std::uint64_t w = 1;
    for (std::size_t i = 0; i < k; ++i) {
      weights_[i] = w;
      w *= sr_.shape.modulus(i);
    }
    sparse_.resize(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t m = 0; m < k; ++m)
          if (auto c = sr_.c(i, j, m); c != 0) sparse_[i * k + j].push_back({m, c});
    one_ = static_cast<Elem>(sr_.shape.index(sr_.one));
  }

  std::size_t size() const override { return size_; }
  Elem one() const override { return one_; }
  Elem add(Elem a, Elem b) const override {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < sr_.rank(); ++i) {
      const std::uint64_t n = sr_.shape.modulus(i);
      out += ((digit(a, i) + digit(b, i)) % n) * weights_[i];
    }
    return static_cast<Elem>(out);
  }
  Elem neg(Elem a) const override {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < sr_.rank(); ++i) {
      const std::uint64_t n = sr_.shape.modulus(i);
      out += ((n - digit(a, i)) % n) * weights_[i];
    }
    return static_cast<Elem>(out);
  }
  Elem mul(Elem a, Elem b) const override {
    const auto k = sr_.rank();
    std::uint64_t da[32], db[32], acc[32];
    for (std::size_t i = 0; i < k; ++i) {
      da[i] = digit(a, i);
      db[i] = digit(b, i);
      acc[i] = 0;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (da[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (db[j] == 0) continue;
        const std::uint64_t ab = da[i] * db[j];
        for (const auto& [m, c] : sparse_[i * k + j]) acc[m] += (ab % sr_.shape.modulus(m)) * c;
      }
    }
    std::uint64_t out = 0;
    for (std::size_t m = 0; m < k; ++m) out += (acc[m] % sr_.shape.modulus(m)) * weights_[m];
    return static_cast<Elem>(out);
  }
  std::vector<Elem> additive_generators() const override {
    std::vector<Elem> g;
    for (std::size_t i = 0; i < sr_.rank(); ++i)
      if (sr_.shape.modulus(i) > 1) g.push_back(static_cast<Elem>(weights_[i]));
    return g;
  }
  std::string format(Elem a) const override {
    return coeff::format(sr_, sr_.shape.element(a));
  }
  std::vector<std::uint32_t> coordinates(Elem a) const override {
    return sr_.shape.element(a).coeffs;
  }
  const StructureRing& structure() const { return sr_; }

 private:
  std::uint64_t digit(Elem a, std::size_t i) const {
    return (a / weights_[i]) % sr_.shape.modulus(i);
  }

  struct Term {
    std::size_t m;
    std::uint64_t c;
  };
  StructureRing sr_;
  std::size_t size_ = 0;
  Elem one_ = 0;
  std::vector<std::uint64_t> weights_;
  std::vector<std::vector<Term>> sparse_;
};

/// Ring given by explicit operation tables over elements 0..n-1.
class TableImpl final : public RingImpl {
 public:
  TableImpl(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, Elem one,
            std::vector<std::vector<std::uint32_t>> coords,
            std::function<std::string(const std::vector<std::uint32_t>&)> fmt)
      : n_(n), add_(std::move(add)), mul_(std::move(mul)), one_(one), coords_(std::move(coords)),
        fmt_(std::move(fmt)) {
    neg_.assign(n_, 0);
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        if (add_[a * n_ + b] == 0) {
          neg_[a] = b;
          break;
        }
  }
  std::size_t size() const override { return n_; }
  Elem one() const override { return one_; }
  Elem add(Elem a, Elem b) const override { return add_[a * n_ + b]; }
  Elem neg(Elem a) const override { return neg_[a]; }
  Elem mul(Elem a, Elem b) const override { return mul_[a * n_ + b]; }
  std::vector<Elem> additive_generators() const override {
    std::vector<Elem> gens;
    ElementSet span(n_);
    span.insert(0);
    for (Elem e = 0; e < n_; ++e) {
      if (span.contains(e)) continue;
      gens.push_back(e);
      const std::vector<Elem> base = span.elements();
      Elem m = e;
      while (!span.contains(m)) {
        for (Elem h : base) span.insert(add_[h * n_ + m]);
        m = add_[m * n_ + e];
      }
    }
    return gens;
  }
  std::string format(Elem a) const override { return fmt_(coords_[a]); }
  std::vector<std::uint32_t> coordinates(Elem a) const override { return coords_[a]; }

 private:
  std::size_t n_;
  std::vector<Elem> add_, mul_, neg_;
  Elem one_;
  std::vector<std::vector<std::uint32_t>> coords_;
  std::function<std::string(const std::vector<std::uint32_t>&)> fmt_;
};

}  // namespace detail

/// Validates `sr` and wraps it in a handle. Rejects invalid rings with the
/// validation report as the message.
inline Ring make_ring(StructureRing sr, const Limits& limits = {}) {
  if (sr.rank() > 32) throw LimitExceeded("structure_rank", sr.rank(), 32);
  auto rep = validate_ring(sr);
  if (!rep.valid()) throw ConstructionError("invalid ring '" + sr.name + "':\n" + rep.summary());
  auto card = sr.shape.cardinality();
  if (!card) throw LimitExceeded("max_elements", SIZE_MAX, limits.max_elements);
  check_limit("max_elements", static_cast<std::size_t>(*card), limits.max_elements);
  auto name = sr.name;
  return Ring(std::make_shared<detail::StructureImpl>(std::move(sr)), std::move(name));
}

/// The structure constants behind a handle, if it has them.
inline const StructureRing* structure_of(const Ring& r) {
  auto* s = dynamic_cast<const detail::StructureImpl*>(&r.impl());
  return s ? &s->structure() : nullptr;
}

inline Elem element_of(const Ring& r, const RingElement& e) {
  const auto* sr = structure_of(r);
  if (!sr) throw DomainError("ring '" + r.name() + "' has no coefficient representation");
  sr->shape.require_canonical(e);
  return static_cast<Elem>(sr->shape.index(e));
}

/// All elements in canonical order; fails beyond the enumeration limit.
inline std::vector<Elem> enumerate_elements(const Ring& r, const Limits& limits = {}) {
  check_limit("max_elements", r.size(), limits.max_elements);
  std::vector<Elem> out(r.size());
  std::iota(out.begin(), out.end(), Elem{0});
  return out;
}

}  // namespace ccring
