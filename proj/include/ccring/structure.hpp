#pragma once

// Finite rings given by structure constants over a product of cyclic groups.

#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ccring/errors.hpp"

namespace ccring {

/// Canonical coefficient vector; coeffs[i] is reduced modulo the i-th modulus.
struct RingElement {
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

/// Additive group Z_{n_1} x ... x Z_{n_k}.
///
/// Elements are numbered in mixed radix with the first coordinate least
/// significant, so index order is lexicographic order of the coefficient
/// vector read from the last coordinate backwards. Index 0 is the zero element.
class AdditiveShape {
 public:
  AdditiveShape() = default;
  explicit AdditiveShape(std::vector<std::uint32_t> moduli) : moduli_(std::move(moduli)) {
    for (auto n : moduli_)
      if (n == 0) throw MalformedInput("additive shape: modulus must be >= 1");
  }

  std::size_t rank() const noexcept { return moduli_.size(); }
  const std::vector<std::uint32_t>& moduli() const noexcept { return moduli_; }
  std::uint32_t modulus(std::size_t i) const { return moduli_.at(i); }

  /// Product of the moduli, or nullopt if it does not fit in 63 bits.
  std::optional<std::uint64_t> cardinality() const noexcept {
    std::uint64_t total = 1;
    for (auto n : moduli_) {
      if (total > (std::uint64_t{1} << 63) / n) return std::nullopt;
      total *= n;
    }
    return total;
  }

  bool is_canonical(const RingElement& e) const noexcept {
    if (e.coeffs.size() != rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i)
      if (e.coeffs[i] >= moduli_[i]) return false;
    return true;
  }

  void require_canonical(const RingElement& e) const {
    if (e.coeffs.size() != rank())
      throw MalformedInput("element has " + std::to_string(e.coeffs.size()) +
                           " coefficients, shape has rank " + std::to_string(rank()));
    if (!is_canonical(e)) throw MalformedInput("element coefficient not reduced");
  }

  RingElement zero() const { return RingElement{std::vector<std::uint32_t>(rank(), 0)}; }

  RingElement reduce(const std::vector<std::int64_t>& raw) const {
    if (raw.size() != rank()) throw MalformedInput("coefficient vector has wrong length");
    RingElement e{std::vector<std::uint32_t>(rank())};
    for (std::size_t i = 0; i < rank(); ++i) {
      std::int64_t n = moduli_[i];
      e.coeffs[i] = static_cast<std::uint32_t>(((raw[i] % n) + n) % n);
    }
    return e;
  }

  std::uint64_t index(const RingElement& e) const {
    std::uint64_t idx = 0;
    for (std::size_t i = rank(); i-- > 0;) idx = idx * moduli_[i] + e.coeffs[i];
    return idx;
  }

  RingElement element(std::uint64_t idx) const {
    RingElement e{std::vector<std::uint32_t>(rank())};
    for (std::size_t i = 0; i < rank(); ++i) {
      e.coeffs[i] = static_cast<std::uint32_t>(idx % moduli_[i]);
      idx /= moduli_[i];
    }
    return e;
  }

  friend bool operator==(const AdditiveShape&, const AdditiveShape&) = default;

 private:
  std::vector<std::uint32_t> moduli_;
};

/// A finite ring presented by structure constants:
/// b_i * b_j = sum_m c(i,j,m) b_m over the additive generators b_i.
struct StructureRing {
  AdditiveShape shape;
  std::vector<std::uint32_t> tensor;  // c(i,j,m) at (i*k + j)*k + m
  RingElement one;
  std::vector<std::string> labels;  // generator names; empty means b0, b1, ...
  std::string name;

  std::size_t rank() const noexcept { return shape.rank(); }
  std::uint32_t c(std::size_t i, std::size_t j, std::size_t m) const {
    const auto k = rank();
    return tensor[(i * k + j) * k + m];
  }
  std::uint32_t& c(std::size_t i, std::size_t j, std::size_t m) {
    const auto k = rank();
    return tensor[(i * k + j) * k + m];
  }
  std::string label(std::size_t i) const {
    return i < labels.size() ? labels[i] : "b" + std::to_string(i);
  }

  /// Zero tensor of the right size for `shape`.
  static StructureRing blank(AdditiveShape shape, std::string name = {}) {
    StructureRing r;
    const auto k = shape.rank();
    r.tensor.assign(k * k * k, 0);
    r.one = shape.zero();
    r.shape = std::move(shape);
    r.name = std::move(name);
    return r;
  }

  friend bool operator==(const StructureRing& a, const StructureRing& b) {
    return a.shape == b.shape && a.tensor == b.tensor && a.one == b.one;
  }
};

namespace coeff {

inline RingElement add(const StructureRing& r, const RingElement& a, const RingElement& b) {
  r.shape.require_canonical(a);
  r.shape.require_canonical(b);
  RingElement out = a;
  for (std::size_t i = 0; i < r.rank(); ++i)
    out.coeffs[i] = static_cast<std::uint32_t>((std::uint64_t{a.coeffs[i]} + b.coeffs[i]) %
                                               r.shape.modulus(i));
  return out;
}

inline RingElement neg(const StructureRing& r, const RingElement& a) {
  r.shape.require_canonical(a);
  RingElement out = a;
  for (std::size_t i = 0; i < r.rank(); ++i) {
    auto n = r.shape.modulus(i);
    out.coeffs[i] = a.coeffs[i] == 0 ? 0 : n - a.coeffs[i];
  }
  return out;
}

inline RingElement sub(const StructureRing& r, const RingElement& a, const RingElement& b) {
  return add(r, a, neg(r, b));
}

// Unchecked bilinear expansion through the tensor.
inline RingElement mul_raw(const StructureRing& r, const RingElement& a, const RingElement& b) {
  const auto k = r.rank();
  std::vector<std::uint64_t> acc(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (b.coeffs[j] == 0) continue;
      const std::uint64_t ab = std::uint64_t{a.coeffs[i]} * b.coeffs[j];
      for (std::size_t m = 0; m < k; ++m) {
        auto cm = r.c(i, j, m);
        if (cm == 0) continue;
        const auto n = r.shape.modulus(m);
        acc[m] = (acc[m] + (ab % n) * cm) % n;
      }
    }
  }
  RingElement out{std::vector<std::uint32_t>(k)};
  for (std::size_t m = 0; m < k; ++m) out.coeffs[m] = static_cast<std::uint32_t>(acc[m]);
  return out;
}

inline RingElement mul(const StructureRing& r, const RingElement& a, const RingElement& b) {
  r.shape.require_canonical(a);
  r.shape.require_canonical(b);
  return mul_raw(r, a, b);
}

inline RingElement basis(const StructureRing& r, std::size_t i) {
  RingElement e = r.shape.zero();
  e.coeffs.at(i) = 1 % r.shape.modulus(i);
  return e;
}

/// "2*a+b" style rendering using generator labels; "0" for zero.
inline std::string format(const StructureRing& r, const RingElement& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
    if (e.coeffs[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (e.coeffs[i] != 1) os << e.coeffs[i] << '*';
    os << r.label(i);
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace coeff

/// Result of validate_ring: one human-readable line per violated law.
struct ValidationReport {
  std::vector<std::string> violations;
  bool valid() const noexcept { return violations.empty(); }
  std::string summary() const {
    std::string out;
    for (const auto& v : violations) out += v + "\n";
    return out;
  }
};

inline ValidationReport validate_ring(const StructureRing& r) {
  const auto k = r.rank();
  if (r.tensor.size() != k * k * k)
    throw MalformedInput("tensor has " + std::to_string(r.tensor.size()) + " entries, expected " +
                         std::to_string(k * k * k));
  if (r.one.coeffs.size() != k) throw MalformedInput("identity has wrong length");
  if (!r.labels.empty() && r.labels.size() != k) throw MalformedInput("label count mismatch");

  ValidationReport rep;
  auto triple = [](std::size_t i, std::size_t j, std::size_t m) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(m) + ")";
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t m = 0; m < k; ++m) {
        const std::uint64_t cm = r.c(i, j, m), nm = r.shape.modulus(m);
        if (cm >= nm) rep.violations.push_back("structure constant not reduced at " + triple(i, j, m));
        else if ((r.shape.modulus(i) * cm) % nm != 0 || (r.shape.modulus(j) * cm) % nm != 0)
          rep.violations.push_back("order compatibility fails at " + triple(i, j, m));
      }
  if (!rep.valid()) return rep;
  if (!r.shape.is_canonical(r.one)) {
    rep.violations.push_back("identity not canonical");
    return rep;
  }

  std::vector<RingElement> basis(k);
  for (std::size_t i = 0; i < k; ++i) basis[i] = coeff::basis(r, i);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto ij = coeff::mul_raw(r, basis[i], basis[j]);
      for (std::size_t l = 0; l < k; ++l) {
        auto left = coeff::mul_raw(r, ij, basis[l]);
        auto right = coeff::mul_raw(r, basis[i], coeff::mul_raw(r, basis[j], basis[l]));
        if (left != right) rep.violations.push_back("associativity fails at " + triple(i, j, l));
      }
    }
  if (r.one == r.shape.zero()) rep.violations.push_back("identity is zero");
  for (std::size_t i = 0; i < k; ++i) {
    if (coeff::mul_raw(r, r.one, basis[i]) != basis[i])
      rep.violations.push_back("identity law fails on the left at generator " + std::to_string(i));
    if (coeff::mul_raw(r, basis[i], r.one) != basis[i])
      rep.violations.push_back("identity law fails on the right at generator " + std::to_string(i));
  }
  return rep;
}

}  // namespace ccring
