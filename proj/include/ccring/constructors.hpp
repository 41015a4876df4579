#pragma once

// Group algebras, constrained matrix rings and the named example catalog.

#include <cctype>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccring/core.hpp"
#include "ccring/groups.hpp"
#include "ccring/structure.hpp"
#include "ccring/subset.hpp"

namespace ccring {

/// Z_n G with the group elements as additive generators.
inline StructureRing group_algebra(std::uint32_t modulus, const GroupTable& g, std::string name = {}) {
  if (modulus < 2) throw UsageError("group algebra coefficient modulus must be >= 2");
  auto sr = StructureRing::blank(AdditiveShape(std::vector<std::uint32_t>(g.order, modulus)),
                                 std::move(name));
  for (std::uint32_t a = 0; a < g.order; ++a)
    for (std::uint32_t b = 0; b < g.order; ++b) sr.c(a, b, g.mul(a, b)) = 1;
  sr.one = coeff::basis(sr, g.identity);
  sr.labels = g.names;
  return sr;
}

namespace detail {

inline void require_group_algebra(const Ring& rg, const GroupTable& g) {
  const auto* sr = structure_of(rg);
  if (!sr || sr->rank() != g.order)
    throw DomainError("ring '" + rg.name() + "' is not a group algebra over this group");
  const auto n = sr->shape.modulus(0);
  for (auto m : sr->shape.moduli())
    if (m != n) throw DomainError("ring '" + rg.name() + "' has mixed coefficient moduli");
  for (std::uint32_t a = 0; a < g.order; ++a)
    for (std::uint32_t b = 0; b < g.order; ++b)
      for (std::uint32_t m = 0; m < g.order; ++m)
        if (sr->c(a, b, m) != (m == g.mul(a, b) ? 1U : 0U))
          throw DomainError("ring '" + rg.name() + "' does not multiply by this Cayley table");
}

}  // namespace detail

struct Augmentation {
  std::uint32_t modulus = 0;
  std::vector<std::uint32_t> epsilon;  // coefficient sum mod n, per element
  AdditiveSubset omega;                // kernel of epsilon

  std::uint32_t operator()(Elem x) const { return epsilon.at(x); }
};

/// Augmentation epsilon: RG -> Z_n and its kernel, the fundamental ideal.
inline Augmentation augmentation_map(const Ring& rg, const GroupTable& g, const Limits& limits = {}) {
  detail::require_group_algebra(rg, g);
  check_limit("max_elements", rg.size(), limits.max_elements);
  Augmentation out;
  out.modulus = structure_of(rg)->shape.modulus(0);
  out.epsilon.resize(rg.size());
  for (Elem x = 0; x < rg.size(); ++x) {
    std::uint64_t s = 0;
    for (auto c : rg.coordinates(x)) s += c;
    out.epsilon[x] = static_cast<std::uint32_t>(s % out.modulus);
  }
  out.omega = subset_where(rg, SubsetKind::twosided, [&](Elem x) { return out.epsilon[x] == 0; });
  return out;
}

/// Sum of all group elements.
inline Elem group_sum_element(const Ring& rg, const GroupTable& g) {
  detail::require_group_algebra(rg, g);
  RingElement e{std::vector<std::uint32_t>(g.order, 1)};
  return element_of(rg, e);
}

/// Two-sided ideal generated by the sum of all group elements.
inline AdditiveSubset group_sum_ideal(const Ring& rg, const GroupTable& g, const Limits& limits = {}) {
  return closure(rg, {group_sum_element(rg, g)}, SubsetKind::twosided, limits);
}

/// Matrices over cell-wise cyclic rings (cell (i,k) lives in Z_{n_ik};
/// modulus 1 forces the cell to zero). The ring is the direct sum of the
/// cyclic subgroups generated by `generators`; tied cells and congruence
/// conditions are expressed through the choice of generators.
struct MatrixPattern {
  struct Generator {
    std::string label;
    std::vector<std::uint32_t> cells;  // dim*dim, row-major
  };
  std::size_t dim = 0;
  std::vector<std::uint32_t> cell_moduli;  // dim*dim, row-major
  std::vector<Generator> generators;
  std::string name;

  std::vector<std::uint32_t> multiply(const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b) const {
    std::vector<std::uint32_t> out(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < dim; ++j) s += std::uint64_t{a[i * dim + j]} * b[j * dim + k];
        out[i * dim + k] = static_cast<std::uint32_t>(s % cell_moduli[i * dim + k]);
      }
    return out;
  }
  std::vector<std::uint32_t> add(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b) const {
    std::vector<std::uint32_t> out(dim * dim);
    for (std::size_t c = 0; c < dim * dim; ++c)
      out[c] = static_cast<std::uint32_t>((std::uint64_t{a[c]} + b[c]) % cell_moduli[c]);
    return out;
  }
  std::vector<std::uint32_t> identity() const {
    std::vector<std::uint32_t> out(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i) out[i * dim + i] = 1 % cell_moduli[i * dim + i];
    return out;
  }
};

inline std::string format_matrix(const std::vector<std::uint32_t>& cells, std::size_t dim) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < dim; ++i) {
    if (i) os << ';';
    for (std::size_t k = 0; k < dim; ++k) os << (k ? " " : "") << cells[i * dim + k];
  }
  os << ']';
  return os.str();
}

/// Builds the structure-constant ring of a matrix pattern. Throws
/// ConstructionError if the generators are dependent, the span misses the
/// identity, or a product of generators leaves the span (with the pair).
inline StructureRing matrix_pattern_ring(const MatrixPattern& p, const Limits& limits = {}) {
  const auto cells = p.dim * p.dim;
  if (p.cell_moduli.size() != cells) throw MalformedInput("pattern cell moduli size mismatch");
  for (auto n : p.cell_moduli)
    if (n == 0) throw MalformedInput("pattern cell modulus must be >= 1");
  for (const auto& g : p.generators) {
    if (g.cells.size() != cells) throw MalformedInput("generator '" + g.label + "' has wrong size");
    for (std::size_t c = 0; c < cells; ++c)
      if (g.cells[c] >= p.cell_moduli[c])
        throw MalformedInput("generator '" + g.label + "' has an unreduced cell");
  }
  const auto k = p.generators.size();
  const std::vector<std::uint32_t> zero(cells, 0);
  std::vector<std::uint32_t> orders(k);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint32_t ord = 1;
    for (auto m = p.generators[i].cells; m != zero; m = p.add(m, p.generators[i].cells)) ++ord;
    orders[i] = ord;
    total *= ord;
    check_limit("max_elements", total, limits.max_elements);
  }
  AdditiveShape shape(orders);
  std::map<std::vector<std::uint32_t>, RingElement> coords;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto e = shape.element(idx);
    auto m = zero;
    for (std::size_t i = 0; i < k; ++i)
      for (std::uint32_t t = 0; t < e.coeffs[i]; ++t) m = p.add(m, p.generators[i].cells);
    if (!coords.emplace(m, e).second)
      throw ConstructionError("pattern '" + p.name + "': generators are not independent (" +
                              format_matrix(m, p.dim) + " has two coordinate vectors)");
  }
  auto sr = StructureRing::blank(shape, p.name);
  for (const auto& g : p.generators) sr.labels.push_back(g.label);
  auto one = coords.find(p.identity());
  if (one == coords.end()) throw ConstructionError("pattern '" + p.name + "' misses the identity");
  sr.one = one->second;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto prod = p.multiply(p.generators[i].cells, p.generators[j].cells);
      auto it = coords.find(prod);
      if (it == coords.end())
        throw ConstructionError("pattern '" + p.name + "' not closed under multiplication: " +
                                p.generators[i].label + " * " + p.generators[j].label);
      for (std::size_t m = 0; m < k; ++m) sr.c(i, j, m) = it->second.coeffs[m];
    }
  return sr;
}

namespace patterns {

inline std::vector<std::uint32_t> unit_cells(std::size_t dim,
                                             std::initializer_list<std::pair<int, int>> at) {
  std::vector<std::uint32_t> m(dim * dim, 0);
  for (auto [i, k] : at) m[i * dim + k] = 1;
  return m;
}

/// Full matrix ring M_n(Z_m) with matrix units as generators.
inline MatrixPattern full(std::size_t n, std::uint32_t m) {
  MatrixPattern p{n, std::vector<std::uint32_t>(n * n, m), {}, "m" + std::to_string(n) + "z" + std::to_string(m)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      p.generators.push_back({"e" + std::to_string(i + 1) + std::to_string(k + 1),
                              unit_cells(n, {{static_cast<int>(i), static_cast<int>(k)}})});
  return p;
}

/// Upper triangular matrices T_n(Z_m).
inline MatrixPattern upper_triangular(std::size_t n, std::uint32_t m) {
  MatrixPattern p{n, std::vector<std::uint32_t>(n * n, 1), {}, "t" + std::to_string(n) + "z" + std::to_string(m)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k) {
      p.cell_moduli[i * n + k] = m;
      p.generators.push_back({"e" + std::to_string(i + 1) + std::to_string(k + 1),
                              unit_cells(n, {{static_cast<int>(i), static_cast<int>(k)}})});
    }
  return p;
}

/// 3x3 block matrices [[k, a, b], [0, k, a], [0, 0, k]] over Z_2 with
/// k a scalar and a, b in T_2(Z_2), realized as 6x6 matrices.
inline MatrixPattern triangular_block_ring() {
  MatrixPattern p{6, std::vector<std::uint32_t>(36, 2), {}, "ex52"};
  // block (r, c) entry (i, j) sits at (2r + i, 2c + j)
  auto at = [](int r, int c, int i, int j) { return std::pair<int, int>{2 * r + i, 2 * c + j}; };
  p.generators = {
      {"k", unit_cells(6, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}})},
      {"a11", unit_cells(6, {at(0, 1, 0, 0), at(1, 2, 0, 0)})},
      {"a12", unit_cells(6, {at(0, 1, 0, 1), at(1, 2, 0, 1)})},
      {"a22", unit_cells(6, {at(0, 1, 1, 1), at(1, 2, 1, 1)})},
      {"b11", unit_cells(6, {at(0, 2, 0, 0)})},
      {"b12", unit_cells(6, {at(0, 2, 0, 1)})},
      {"b22", unit_cells(6, {at(0, 2, 1, 1)})},
  };
  return p;
}

/// [[a, b], [0, c]] with a, c in Z_{2^m}, a = c (mod 2), b in Z_4.
/// Generators: the identity, diag(0, 2) and e12.
inline MatrixPattern congruence_triangular(unsigned m) {
  if (m < 3) throw UsageError("ex51(m) needs m >= 3");
  const std::uint32_t top = std::uint32_t{1} << m;
  MatrixPattern p{2, {top, 4, 1, top}, {}, "ex51(" + std::to_string(m) + ")"};
  p.generators = {
      {"1", {1, 0, 0, 1}},
      {"2e22", {0, 0, 0, 2}},
      {"e12", {0, 1, 0, 0}},
  };
  return p;
}

}  // namespace patterns

inline Ring cyclic_ring(std::uint32_t n, const Limits& limits = {}) {
  if (n < 2) throw UsageError("Z_n needs n >= 2");
  auto sr = StructureRing::blank(AdditiveShape({n}), "z" + std::to_string(n));
  sr.c(0, 0, 0) = 1;
  sr.one = coeff::basis(sr, 0);
  sr.labels = {"1"};
  return make_ring(std::move(sr), limits);
}

/// A ring from the catalog plus the named ideal generators it offers.
struct CatalogEntry {
  Ring ring;
  std::optional<GroupTable> group;  // set for group algebras
  std::map<std::string, std::vector<Elem>> named_gens;

  /// Resolves "name", "0", or ';'-separated element expressions.
  std::vector<Elem> gens(const std::string& spec) const;
};

/// Parses "e+a+2*b" (generator labels), "[1,0,1]" (coefficients) or "0".
inline Elem parse_element(const Ring& r, const std::string& text) {
  const auto* sr = structure_of(r);
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t == "0") return 0;
  if (!sr) throw MalformedInput("ring '" + r.name() + "' has no coefficient representation");
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw MalformedInput("unterminated coefficient vector '" + text + "'");
    std::vector<std::int64_t> raw;
    std::stringstream ss(t.substr(1, t.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        raw.push_back(std::stoll(tok));
      } catch (const std::exception&) {
        throw MalformedInput("bad coefficient '" + tok + "'");
      }
    }
    if (raw.size() != sr->rank())
      throw MalformedInput("element '" + text + "' has wrong number of coefficients");
    return element_of(r, sr->shape.reduce(raw));
  }
  std::vector<std::int64_t> raw(sr->rank(), 0);
  std::size_t pos = 0;
  while (pos < t.size()) {
    std::size_t end = t.find('+', pos);
    // labels such as "(a,b)" never contain '+'
    std::string term = t.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? t.size() : end + 1;
    std::int64_t mult = 1;
    if (auto star = term.find('*'); star != std::string::npos) {
      try {
        mult = std::stoll(term.substr(0, star));
      } catch (const std::exception&) {
        throw MalformedInput("bad multiplier in '" + term + "'");
      }
      term = term.substr(star + 1);
    }
    bool found = false;
    for (std::size_t i = 0; i < sr->rank() && !found; ++i)
      if (sr->label(i) == term) {
        raw[i] += mult;
        found = true;
      }
    if (!found) throw MalformedInput("unknown generator '" + term + "' in ring '" + r.name() + "'");
  }
  return element_of(r, sr->shape.reduce(raw));
}

inline std::vector<Elem> CatalogEntry::gens(const std::string& spec) const {
  if (auto it = named_gens.find(spec); it != named_gens.end()) return it->second;
  std::vector<Elem> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ';')) out.push_back(parse_element(ring, tok));
  return out;
}

inline std::vector<std::string> catalog_names() {
  return {"ex52", "z2q8", "z2d4", "z3q8", "ex51(3)", "ex51(4)", "m2z2", "t2z2", "z<n>"};
}

inline CatalogEntry group_algebra_entry(std::uint32_t n, const GroupTable& g, std::string name,
                                        const Limits& limits) {
  CatalogEntry e{make_ring(group_algebra(n, g, std::move(name)), limits), g, {}};
  e.named_gens["group-sum"] = {group_sum_element(e.ring, g)};
  const auto* sr = structure_of(e.ring);
  std::vector<Elem> aug;
  for (std::uint32_t x = 0; x < g.order; ++x) {
    if (x == g.identity) continue;
    auto v = coeff::sub(*sr, coeff::basis(*sr, x), coeff::basis(*sr, g.identity));
    aug.push_back(element_of(e.ring, v));
  }
  e.named_gens["augmentation"] = aug;
  return e;
}

/// Named rings: ex52, z2q8, z2d4, z3q8, ex51(m) (m >= 3, default 3), m2z2,
/// t2z2 and z<n> for the cyclic ring Z_n.
inline CatalogEntry catalog(const std::string& name, const Limits& limits = {}) {
  if (name == "ex52") {
    CatalogEntry e{make_ring(matrix_pattern_ring(patterns::triangular_block_ring(), limits), limits), {}, {}};
    e.named_gens["least"] = {parse_element(e.ring, "b12")};
    e.named_gens["I1"] = {parse_element(e.ring, "a11"), parse_element(e.ring, "b11"),
                          parse_element(e.ring, "b12"), parse_element(e.ring, "b22")};
    e.named_gens["I2"] = {parse_element(e.ring, "a22"), parse_element(e.ring, "b11"),
                          parse_element(e.ring, "b12"), parse_element(e.ring, "b22")};
    return e;
  }
  if (name == "z2q8") return group_algebra_entry(2, group_quaternion(), "z2q8", limits);
  if (name == "z2d4") return group_algebra_entry(2, group_dihedral(4, limits), "z2d4", limits);
  if (name == "z3q8") return group_algebra_entry(3, group_quaternion(), "z3q8", limits);
  if (name == "m2z2") return {make_ring(matrix_pattern_ring(patterns::full(2, 2), limits), limits), {}, {}};
  if (name == "t2z2")
    return {make_ring(matrix_pattern_ring(patterns::upper_triangular(2, 2), limits), limits), {}, {}};
  static const std::regex ex51(R"(ex51(?:\((\d+)\))?)"), zn(R"(z(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, ex51)) {
    unsigned mm = m[1].matched ? static_cast<unsigned>(std::stoul(m[1].str())) : 3U;
    if (mm < 3 || mm > 12) throw UsageError("ex51(m) needs 3 <= m <= 12");
    return {make_ring(matrix_pattern_ring(patterns::congruence_triangular(mm), limits), limits), {}, {}};
  }
  if (std::regex_match(name, m, zn)) {
    auto n = std::stoul(m[1].str());
    if (n < 2 || n > limits.max_elements) throw UsageError("z<n> needs 2 <= n <= max-elements");
    return {cyclic_ring(static_cast<std::uint32_t>(n), limits), {}, {}};
  }
  throw UsageError("unknown catalog ring '" + name + "'");
}

}  // namespace ccring
