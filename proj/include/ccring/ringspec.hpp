#pragma once

// Text format for rings given by structure constants:
//
//   # comment
//   name z4
//   shape 4
//   labels 1
//   one 1
//   mul 0 0 -> 1
//
// Products that are not listed are zero.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ccring/ring.hpp"
#include "ccring/structure.hpp"

namespace ccring {

namespace detail {

inline std::vector<std::string> split_words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

inline std::int64_t parse_int(const std::string& w, std::size_t line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(w, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != w.size())
    throw MalformedInput("line " + std::to_string(line) + ": expected an integer, got '" + w + "'");
  return v;
}

inline bool valid_label(const std::string& l) {
  if (l.empty() || l == "0" || l.front() == '[') return false;
  return l.find_first_of("+*;") == std::string::npos;
}

}  // namespace detail

/// Parses the text form. The result is checked for well-formedness only;
/// ring axioms are checked by load_ringspec.
inline StructureRing parse_ringspec(const std::string& text) {
  StructureRing sr;
  bool have_shape = false, have_one = false;
  std::set<std::pair<std::size_t, std::size_t>> seen_products;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> MalformedInput {
    return MalformedInput("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto words = detail::split_words(raw);
    if (words.empty()) continue;
    const auto& key = words[0];
    if (key == "name") {
      if (words.size() != 2) throw fail("name takes one word");
      sr.name = words[1];
    } else if (key == "shape") {
      if (have_shape) throw fail("duplicate shape");
      if (words.size() < 2) throw fail("shape needs at least one modulus");
      std::vector<std::uint32_t> moduli;
      for (std::size_t i = 1; i < words.size(); ++i) {
        auto v = detail::parse_int(words[i], lineno);
        if (v < 1 || v > (std::int64_t{1} << 31)) throw fail("modulus out of range: " + words[i]);
        moduli.push_back(static_cast<std::uint32_t>(v));
      }
      auto name = sr.name;
      sr = StructureRing::blank(AdditiveShape(std::move(moduli)), name);
      have_shape = true;
    } else if (!have_shape) {
      throw fail("'" + key + "' before shape");
    } else if (key == "labels") {
      if (words.size() != sr.rank() + 1) throw fail("labels needs one label per generator");
      std::set<std::string> uniq;
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (!detail::valid_label(words[i])) throw fail("bad label '" + words[i] + "'");
        if (!uniq.insert(words[i]).second) throw fail("duplicate label '" + words[i] + "'");
      }
      sr.labels.assign(words.begin() + 1, words.end());
    } else if (key == "one") {
      if (have_one) throw fail("duplicate one");
      if (words.size() != sr.rank() + 1) throw fail("one needs " + std::to_string(sr.rank()) + " coefficients");
      std::vector<std::int64_t> raw_one;
      for (std::size_t i = 1; i < words.size(); ++i) raw_one.push_back(detail::parse_int(words[i], lineno));
      sr.one = sr.shape.reduce(raw_one);
      have_one = true;
    } else if (key == "mul") {
      const auto k = sr.rank();
      if (words.size() != k + 4 || words[3] != "->") throw fail("expected 'mul i j -> c_1 ... c_" + std::to_string(k) + "'");
      auto i = detail::parse_int(words[1], lineno), j = detail::parse_int(words[2], lineno);
      if (i < 0 || j < 0 || i >= static_cast<std::int64_t>(k) || j >= static_cast<std::int64_t>(k))
        throw fail("generator index out of range");
      if (!seen_products.insert({i, j}).second) throw fail("duplicate product " + words[1] + " " + words[2]);
      for (std::size_t m = 0; m < k; ++m) {
        auto v = detail::parse_int(words[4 + m], lineno);
        if (v < 0 || v >= sr.shape.modulus(m))
          throw fail("coefficient " + words[4 + m] + " not reduced modulo " + std::to_string(sr.shape.modulus(m)));
        sr.c(static_cast<std::size_t>(i), static_cast<std::size_t>(j), m) = static_cast<std::uint32_t>(v);
      }
    } else {
      throw fail("unknown directive '" + key + "'");
    }
  }
  if (!have_shape) throw MalformedInput("missing shape");
  if (!have_one) throw MalformedInput("missing one");
  if (sr.name.empty()) sr.name = "ring";
  return sr;
}

/// Parses and checks the ring axioms; violations become MalformedInput.
inline Ring load_ringspec(const std::string& text, const Limits& limits = {}) {
  auto sr = parse_ringspec(text);
  auto rep = validate_ring(sr);
  if (!rep.valid()) throw MalformedInput("not a ring:\n" + rep.summary());
  return make_ring(std::move(sr), limits);
}

inline std::string serialize_ringspec(const StructureRing& sr) {
  std::ostringstream os;
  const auto k = sr.rank();
  if (!sr.name.empty()) os << "name " << sr.name << '\n';
  os << "shape";
  for (auto m : sr.shape.moduli()) os << ' ' << m;
  os << '\n';
  if (!sr.labels.empty()) {
    os << "labels";
    for (const auto& l : sr.labels) os << ' ' << l;
    os << '\n';
  }
  os << "one";
  for (auto c : sr.one.coeffs) os << ' ' << c;
  os << '\n';
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      bool nonzero = false;
      for (std::size_t m = 0; m < k; ++m) nonzero = nonzero || sr.c(i, j, m) != 0;
      if (!nonzero) continue;
      os << "mul " << i << ' ' << j << " ->";
      for (std::size_t m = 0; m < k; ++m) os << ' ' << sr.c(i, j, m);
      os << '\n';
    }
  return os.str();
}

/// Structure constants for any ring handle: the additive group is split
/// into cyclic summands greedily (an element of largest order modulo the
/// summands found so far, among those whose order is not reduced by the
/// quotient). Generators are labelled q0, q1, ...; `origins` receives the
/// formatted element behind each label.
inline StructureRing structure_constants_of(const Ring& r, std::vector<std::string>* origins = nullptr) {
  check_limit("max_elements", r.size(), Limits{}.max_elements);
  const auto n = r.size();
  SpanBuilder span(r);
  std::vector<Elem> basis;
  std::vector<std::uint32_t> orders;
  while (span.set().size() < n) {
    Elem best = 0;
    std::uint32_t best_order = 0;
    for (Elem x = 1; x < n; ++x) {
      // order of x modulo the span, and whether kx hits the span only at 0
      std::uint32_t k = 1;
      Elem acc = x;
      while (!span.set().contains(acc)) {
        acc = r.add(acc, x);
        ++k;
      }
      if (acc == 0 && k > best_order) {
        best = x;
        best_order = k;
      }
    }
    if (best_order < 2) throw DomainError("additive group decomposition failed");
    basis.push_back(best);
    orders.push_back(best_order);
    span.add(best);
  }
  StructureRing sr = StructureRing::blank(AdditiveShape(orders), r.name());
  const AdditiveShape& shape = sr.shape;
  std::vector<std::uint32_t> coords(n * basis.size());
  std::vector<bool> hit(n, false);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    auto e = shape.element(idx);
    Elem v = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) v = r.add(v, r.times(e.coeffs[i], basis[i]));
    if (hit[v]) throw DomainError("additive group decomposition is not direct");
    hit[v] = true;
    std::copy(e.coeffs.begin(), e.coeffs.end(), coords.begin() + v * basis.size());
  }
  const auto k = basis.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Elem p = r.mul(basis[i], basis[j]);
      for (std::size_t m = 0; m < k; ++m) sr.c(i, j, m) = coords[p * k + m];
    }
  sr.one.coeffs.assign(coords.begin() + r.one() * k, coords.begin() + (r.one() + 1) * k);
  for (std::size_t i = 0; i < k; ++i) sr.labels.push_back("q" + std::to_string(i));
  if (origins) {
    origins->clear();
    for (Elem b : basis) origins->push_back(r.format(b));
  }
  return sr;
}

}  // namespace ccring
