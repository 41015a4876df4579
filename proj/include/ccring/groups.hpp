#pragma once

// Small finite groups by Cayley table.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ccring/errors.hpp"

namespace ccring {

struct GroupTable {
  std::size_t order = 0;
  std::vector<std::uint32_t> table;  // table[g*order + h] = g*h
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> inverse;
  std::vector<std::string> names;

  std::uint32_t mul(std::uint32_t g, std::uint32_t h) const { return table[g * order + h]; }
  std::uint32_t index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw UsageError("no group element named '" + name + "'");
    return static_cast<std::uint32_t>(it - names.begin());
  }
  bool is_abelian() const {
    for (std::uint32_t g = 0; g < order; ++g)
      for (std::uint32_t h = 0; h < order; ++h)
        if (mul(g, h) != mul(h, g)) return false;
    return true;
  }
  std::vector<std::uint32_t> center() const {
    std::vector<std::uint32_t> z;
    for (std::uint32_t g = 0; g < order; ++g) {
      bool central = true;
      for (std::uint32_t h = 0; h < order && central; ++h) central = mul(g, h) == mul(h, g);
      if (central) z.push_back(g);
    }
    return z;
  }
  std::size_t conjugacy_class_count() const {
    std::vector<bool> seen(order, false);
    std::size_t classes = 0;
    for (std::uint32_t g = 0; g < order; ++g) {
      if (seen[g]) continue;
      ++classes;
      for (std::uint32_t h = 0; h < order; ++h) seen[mul(mul(h, g), inverse[h])] = true;
    }
    return classes;
  }
};

/// Latin-square, associativity, identity and inverse checks. Returns the
/// list of problems found.
inline std::vector<std::string> validate_group(const GroupTable& g) {
  std::vector<std::string> bad;
  const auto n = g.order;
  if (g.table.size() != n * n || g.inverse.size() != n || (!g.names.empty() && g.names.size() != n))
    throw MalformedInput("group table dimensions do not match order");
  for (std::uint32_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::uint32_t b = 0; b < n; ++b) {
      row[g.mul(a, b)] = true;
      col[g.mul(b, a)] = true;
    }
    if (std::count(row.begin(), row.end(), true) != static_cast<long>(n) ||
        std::count(col.begin(), col.end(), true) != static_cast<long>(n))
      bad.push_back("row/column " + std::to_string(a) + " is not a permutation");
  }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          bad.push_back("associativity fails");
          return bad;
        }
  for (std::uint32_t a = 0; a < n; ++a) {
    if (g.mul(g.identity, a) != a || g.mul(a, g.identity) != a) bad.push_back("identity law fails");
    if (g.mul(a, g.inverse[a]) != g.identity || g.mul(g.inverse[a], a) != g.identity)
      bad.push_back("inverse law fails at " + std::to_string(a));
  }
  return bad;
}

namespace detail {

template <class Mul>
GroupTable group_from(std::size_t n, std::vector<std::string> names, Mul&& mul) {
  GroupTable g;
  g.order = n;
  g.names = std::move(names);
  g.table.resize(n * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) g.table[a * n + b] = mul(a, b);
  g.identity = 0;
  for (std::uint32_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  g.inverse.resize(n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (g.mul(a, b) == g.identity) g.inverse[a] = b;
  auto bad = validate_group(g);
  if (!bad.empty()) throw ConstructionError("not a group: " + bad.front());
  return g;
}

inline std::string power_name(const char* base, int k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return std::string(base) + "^" + std::to_string(k);
}

// Elements a^i b^j (i < n, j < 2) of a group with b a b^-1 = a^-1 and
// b^2 = a^s. Listed in the order given by `order`.
inline GroupTable metacyclic(int n, int b_squared, const std::vector<std::pair<int, int>>& order) {
  std::vector<std::string> names;
  for (auto [i, j] : order) {
    std::string s = power_name("a", i) + (j ? "b" : "");
    names.push_back(s.empty() ? "e" : s);
  }
  auto pos = [&](int i, int j) {
    for (std::size_t k = 0; k < order.size(); ++k)
      if (order[k].first == i && order[k].second == j) return static_cast<std::uint32_t>(k);
    return std::uint32_t{0};
  };
  return group_from(order.size(), std::move(names), [&](std::uint32_t x, std::uint32_t y) {
    auto [i, j] = order[x];
    auto [k, l] = order[y];
    // a^i b^j a^k b^l = a^(i + (-1)^j k) b^(j+l)
    int e = i + (j ? -k : k);
    int f = j + l;
    if (f == 2) {
      e += b_squared;
      f = 0;
    }
    return pos(((e % n) + n) % n, f);
  });
}

}  // namespace detail

inline GroupTable group_cyclic(std::size_t n, const Limits& limits = {}) {
  if (n < 1) throw UsageError("cyclic group order must be >= 1");
  check_limit("max_group_order", n, limits.max_group_order);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k)
    names.push_back(k == 0 ? "e" : detail::power_name("g", static_cast<int>(k)));
  return detail::group_from(n, std::move(names), [n](std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>((a + b) % n);
  });
}

/// Dihedral group of order 2n: a^n = b^2 = (ab)^2 = 1. Elements are listed
/// as 1, a, ..., a^(n-1), b, ab, ..., a^(n-1)b with the identity named "1".
inline GroupTable group_dihedral(std::size_t n, const Limits& limits = {}) {
  if (n < 2) throw UsageError("dihedral group needs n >= 2");
  check_limit("max_group_order", 2 * n, limits.max_group_order);
  std::vector<std::pair<int, int>> order;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < static_cast<int>(n); ++i) order.push_back({i, j});
  auto g = detail::metacyclic(static_cast<int>(n), 0, order);
  g.names[0] = "1";
  return g;
}

/// Q8 = <a, b | a^4 = 1, a^2 = b^2, a b a^-1 = b^-1>, listed as
/// e, a, a^2, b, ab, a^3, a^2b, a^3b.
inline GroupTable group_quaternion() {
  return detail::metacyclic(4, 2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {3, 0}, {2, 1}, {3, 1}});
}

inline GroupTable group_direct_product(const GroupTable& g, const GroupTable& h,
                                       const Limits& limits = {}) {
  const auto n = g.order * h.order;
  check_limit("max_group_order", n, limits.max_group_order);
  std::vector<std::string> names;
  for (std::uint32_t a = 0; a < g.order; ++a)
    for (std::uint32_t b = 0; b < h.order; ++b)
      names.push_back("(" + g.names[a] + "," + h.names[b] + ")");
  auto out = detail::group_from(n, std::move(names), [&](std::uint32_t x, std::uint32_t y) {
    const auto ga = x / h.order, ha = x % h.order, gb = y / h.order, hb = y % h.order;
    return static_cast<std::uint32_t>(g.mul(ga, gb) * h.order + h.mul(ha, hb));
  });
  return out;
}

/// A subgroup as a sorted list of element indices.
using Subgroup = std::vector<std::uint32_t>;

inline Subgroup generated_subgroup(const GroupTable& g, const std::vector<std::uint32_t>& gens) {
  std::vector<bool> in(g.order, false);
  std::vector<std::uint32_t> members{g.identity};
  in[g.identity] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (auto s : gens) {
      auto p = g.mul(members[i], s);
      if (!in[p]) {
        in[p] = true;
        members.push_back(p);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

/// Every subgroup: cyclic subgroups, then joins to a fixpoint.
inline std::vector<Subgroup> subgroups(const GroupTable& g, const Limits& limits = {}) {
  check_limit("max_group_order", g.order, limits.max_group_order);
  std::set<Subgroup> found;
  std::vector<Subgroup> cyclic;
  for (std::uint32_t x = 0; x < g.order; ++x) {
    auto c = generated_subgroup(g, {x});
    if (found.insert(c).second) cyclic.push_back(c);
  }
  std::vector<Subgroup> work(found.begin(), found.end());
  for (std::size_t i = 0; i < work.size(); ++i)
    for (const auto& c : cyclic) {
      if (std::includes(work[i].begin(), work[i].end(), c.begin(), c.end())) continue;
      std::vector<std::uint32_t> gens = work[i];
      gens.insert(gens.end(), c.begin(), c.end());
      auto j = generated_subgroup(g, gens);
      if (found.insert(j).second) work.push_back(j);
    }
  return {found.begin(), found.end()};
}

inline bool is_normal(const GroupTable& g, const Subgroup& h) {
  std::vector<bool> in(g.order, false);
  for (auto x : h) in[x] = true;
  for (std::uint32_t a = 0; a < g.order; ++a)
    for (auto x : h)
      if (!in[g.mul(g.mul(a, x), g.inverse[a])]) return false;
  return true;
}

/// Non-abelian with every subgroup normal.
inline bool is_hamiltonian(const GroupTable& g, const Limits& limits = {}) {
  if (g.is_abelian()) return false;
  for (const auto& h : subgroups(g, limits))
    if (!is_normal(g, h)) return false;
  return true;
}

}  // namespace ccring
