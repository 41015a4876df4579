#pragma once

// Random finite rings: subrings of M_n(Z_m) generated by 1 and a few random
// matrices.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccring/constructors.hpp"
#include "ccring/ring.hpp"

namespace ccring {

struct MatrixFamily {
  std::size_t dim = 2;
  std::uint32_t modulus = 2;
  std::string name() const { return "M" + std::to_string(dim) + "(Z" + std::to_string(modulus) + ")"; }
};

/// The families used for property tests: M2(Z2), M2(Z3), M2(Z4), M3(Z2).
inline std::vector<MatrixFamily> default_families() { return {{2, 2}, {2, 3}, {2, 4}, {3, 2}}; }

struct SampledRing {
  Ring ring;
  MatrixFamily family;
  std::vector<std::vector<std::uint32_t>> generators;  // besides 1
};

namespace detail {

class MatrixCodec {
 public:
  explicit MatrixCodec(MatrixFamily f) : f_(f) {}
  std::uint32_t encode(const std::vector<std::uint32_t>& cells) const {
    std::uint32_t c = 0;
    for (std::size_t i = cells.size(); i-- > 0;) c = c * f_.modulus + cells[i];
    return c;
  }
  std::vector<std::uint32_t> decode(std::uint32_t c) const {
    std::vector<std::uint32_t> cells(f_.dim * f_.dim);
    for (auto& x : cells) {
      x = c % f_.modulus;
      c /= f_.modulus;
    }
    return cells;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = decode(a), y = decode(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % f_.modulus;
    return encode(x);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    auto x = decode(a), y = decode(b);
    const auto n = f_.dim;
    std::vector<std::uint32_t> z(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        std::uint32_t s = 0;
        for (std::size_t j = 0; j < n; ++j) s += x[i * n + j] * y[j * n + k];
        z[i * n + k] = s % f_.modulus;
      }
    return encode(z);
  }

 private:
  MatrixFamily f_;
};

}  // namespace detail

/// Subring of M_n(Z_m) generated by 1 and `gens`, as an explicit table ring.
/// Returns nullopt if it has more than `max_size` elements.
inline std::optional<Ring> matrix_subring(const MatrixFamily& f,
                                          const std::vector<std::vector<std::uint32_t>>& gens,
                                          std::size_t max_size = 512, std::string name = {}) {
  detail::MatrixCodec codec(f);
  std::vector<std::uint32_t> elems{0};
  std::unordered_map<std::uint32_t, std::size_t> index{{0, 0}};
  std::vector<std::uint32_t> generators;
  auto add_to_span = [&](std::uint32_t g) {
    if (index.count(g)) return true;
    generators.push_back(g);
    const auto base = elems;
    std::uint32_t m = g;
    while (!index.count(m)) {
      for (auto h : base) {
        auto s = codec.add(h, m);
        if (index.emplace(s, elems.size()).second) elems.push_back(s);
      }
      if (elems.size() > max_size) return false;
      m = codec.add(m, g);
    }
    return true;
  };
  std::vector<std::uint32_t> id(f.dim * f.dim, 0);
  for (std::size_t i = 0; i < f.dim; ++i) id[i * f.dim + i] = 1 % f.modulus;
  if (!add_to_span(codec.encode(id))) return std::nullopt;
  for (const auto& g : gens)
    if (!add_to_span(codec.encode(g))) return std::nullopt;
  // contains 1 and is closed under right multiplication by generators,
  // hence under all products
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < elems.size() && !grew; ++i)
      for (std::size_t j = 0; j < generators.size() && !grew; ++j) {
        auto p = codec.mul(elems[i], generators[j]);
        if (!index.count(p)) {
          if (!add_to_span(p)) return std::nullopt;
          grew = true;
        }
      }
  }
  std::sort(elems.begin(), elems.end());
  const auto n = elems.size();
  for (std::size_t i = 0; i < n; ++i) index[elems[i]] = i;
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>(index.at(codec.add(elems[a], elems[b])));
      mul[a * n + b] = static_cast<Elem>(index.at(codec.mul(elems[a], elems[b])));
    }
  std::vector<std::vector<std::uint32_t>> coords;
  for (auto e : elems) coords.push_back(codec.decode(e));
  const auto dim = f.dim;
  auto impl = std::make_shared<detail::TableImpl>(
      n, std::move(add), std::move(mul), static_cast<Elem>(index.at(codec.encode(id))), std::move(coords),
      [dim](const std::vector<std::uint32_t>& cells) { return format_matrix(cells, dim); });
  return Ring(impl, name.empty() ? f.name() + "-subring" : std::move(name));
}

/// Random matrix: uniform, or strictly upper triangular half of the time
/// (which yields non-trivial radicals more often).
inline std::vector<std::uint32_t> random_matrix(std::mt19937_64& rng, const MatrixFamily& f) {
  std::uniform_int_distribution<std::uint32_t> cell(0, f.modulus - 1);
  const bool upper = std::bernoulli_distribution(0.5)(rng);
  std::vector<std::uint32_t> m(f.dim * f.dim);
  for (std::size_t i = 0; i < f.dim; ++i)
    for (std::size_t k = 0; k < f.dim; ++k) m[i * f.dim + k] = (!upper || k > i) ? cell(rng) : 0;
  return m;
}

/// Draws until `count` rings of at most `max_size` elements are found,
/// cycling through the families. Deterministic for a given seed.
inline std::vector<SampledRing> sample_matrix_subrings(std::uint64_t seed, std::size_t count,
                                                       const std::vector<MatrixFamily>& families = default_families(),
                                                       std::size_t max_size = 512) {
  std::mt19937_64 rng(seed);
  std::vector<SampledRing> out;
  std::uniform_int_distribution<int> ngens(0, 3);
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    const auto& f = families[attempt % families.size()];
    std::vector<std::vector<std::uint32_t>> gens(static_cast<std::size_t>(ngens(rng)));
    for (auto& g : gens) g = random_matrix(rng, f);
    auto name = "sample" + std::to_string(out.size()) + ":" + f.name();
    if (auto r = matrix_subring(f, gens, max_size, name)) out.push_back({*r, f, gens});
  }
  return out;
}

}  // namespace ccring
