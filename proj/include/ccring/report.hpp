#pragma once

// Property reports (line-oriented key=value text) and DOT lattice export.

#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ccring/properties.hpp"

namespace ccring {

struct ReportEntry {
  std::string key;
  std::string value;
  std::vector<std::pair<std::string, std::string>> extra;  // e.g. {"witness", "e+a"}
};

struct PropertyReport {
  std::vector<ReportEntry> entries;
  std::vector<std::string> skipped_limits;

  const ReportEntry* find(const std::string& key) const {
    for (const auto& e : entries)
      if (e.key == key) return &e;
    return nullptr;
  }
  std::string value(const std::string& key) const {
    const auto* e = find(key);
    return e ? e->value : std::string{};
  }
  bool any_skipped() const { return !skipped_limits.empty(); }

  /// One `key=value[;name=value...]` line per property.
  std::string to_text() const {
    std::ostringstream os;
    for (const auto& e : entries) {
      os << e.key << '=' << e.value;
      for (const auto& [k, v] : e.extra) os << ';' << k << '=' << v;
      os << '\n';
    }
    return os.str();
  }

  std::string to_pretty() const {
    std::size_t width = 0;
    for (const auto& e : entries) width = std::max(width, e.key.size());
    std::ostringstream os;
    for (const auto& e : entries) {
      os << std::left << std::setw(static_cast<int>(width) + 2) << e.key << e.value;
      for (const auto& [k, v] : e.extra) os << "   " << k << ": " << v;
      os << '\n';
    }
    return os.str();
  }
};

/// Ideals with human names, used to label witnesses ("group_sum").
using NamedIdeals = std::vector<std::pair<std::string, AdditiveSubset>>;

inline std::string describe_ideal(const AdditiveSubset& s, const NamedIdeals& names = {}) {
  for (const auto& [n, ideal] : names)
    if (ideal == s) return n;
  std::string out = "ideal{size=" + std::to_string(s.size()) + ",gens=";
  const auto gens = s.generators();
  if (gens.empty()) out += "0";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "|" : "") + s.owner().format(gens[i]);
  return out + "}";
}

namespace detail {

inline std::string opt(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string("none");
}
inline std::string yes(bool b) { return b ? "true" : "false"; }

}  // namespace detail

/// Runs every decider; deciders that trip a limit are recorded as skipped.
inline PropertyReport full_report(const Ring& r, const Limits& limits = {},
                                  const NamedIdeals& names = {}) {
  PropertyReport rep;
  auto& out = rep.entries;
  auto fmt = [&](Elem e) { return r.format(e); };
  auto pair = [&](Elem a, Elem b) { return "(" + fmt(a) + "," + fmt(b) + ")"; };
  auto guarded = [&](const std::string& key, const std::function<void()>& body) {
    try {
      body();
    } catch (const LimitExceeded& e) {
      out.push_back({key, "skipped", {{"limit", e.limit()}}});
      rep.skipped_limits.push_back(e.limit());
    }
  };

  out.push_back({"name", r.name(), {}});
  out.push_back({"cardinality", std::to_string(r.size()), {}});
  out.push_back({"additive_generators", std::to_string(r.generators().size()), {}});
  guarded("center_size", [&] { out.push_back({"center_size", std::to_string(center(r, limits).size()), {}}); });

  std::optional<AdditiveSubset> jac;
  guarded("jacobson_size", [&] {
    jac = jacobson_radical(r, limits);
    out.push_back({"jacobson_size", std::to_string(jac->size()), {}});
    out.push_back({"jacobson_nilpotency_index", detail::opt(nilpotency_index(*jac)), {}});
  });
  guarded("prime_radical_size", [&] {
    auto p = prime_radical(r, limits);
    out.push_back({"prime_radical_size", std::to_string(p.size()), {}});
    if (jac) out.push_back({"prime_radical_in_jacobson", detail::yes(p.subset_of(*jac)), {}});
    out.push_back({"semiprime", detail::yes(p.is_zero()), {}});
  });

  auto comm = is_commutative(r);
  out.push_back({"commutative", detail::yes(comm.commutative), {}});
  if (comm.witness) out.back().extra.push_back({"witness", pair(comm.witness->first, comm.witness->second)});

  guarded("centrally_essential", [&] {
    auto ce = is_centrally_essential(r, limits);
    out.push_back({"centrally_essential", detail::yes(ce.holds), {}});
    if (ce.counterexample) out.back().extra.push_back({"witness", fmt(*ce.counterexample)});
  });

  {
    auto cce = is_completely_centrally_essential(r, limits);
    ReportEntry e{"completely_centrally_essential", to_string(cce.verdict), {}};
    if (cce.verdict == Verdict::skipped) {
      e.extra.push_back({"limit", cce.skip_reason});
      rep.skipped_limits.push_back(cce.skip_reason);
    }
    if (cce.failing_ideal) {
      e.extra.push_back({"witness_ideal", describe_ideal(*cce.failing_ideal, names)});
      if (cce.counterexample) {
        Ring q = cce.failing_ideal->is_zero() ? r : quotient(r, *cce.failing_ideal, limits).ring;
        e.extra.push_back({"witness", q.format(*cce.counterexample)});
      }
    }
    out.push_back(std::move(e));
  }

  guarded("invariant", [&] {
    auto inv = is_invariant(r, limits);
    out.push_back({"invariant", detail::yes(inv.holds), {}});
    if (inv.witness) out.back().extra.push_back({"witness", fmt(*inv.witness)});
  });
  guarded("strongly_bounded", [&] {
    auto sb = is_strongly_bounded(r, limits);
    out.push_back({"strongly_bounded", detail::yes(sb.holds), {}});
    if (sb.witness) out.back().extra.push_back({"witness", fmt(*sb.witness)});
  });
  guarded("reversible", [&] {
    auto rv = is_reversible(r, limits);
    out.push_back({"reversible", detail::yes(rv.holds), {}});
    if (rv.witness) out.back().extra.push_back({"witness", pair(rv.witness->first, rv.witness->second)});
  });
  guarded("semicommutative", [&] {
    auto sc = is_semicommutative(r, limits);
    out.push_back({"semicommutative", detail::yes(sc.holds), {}});
    if (sc.witness)
      out.back().extra.push_back(
          {"witness", "(" + fmt(sc.witness->a) + "," + fmt(sc.witness->middle) + "," + fmt(sc.witness->b) + ")"});
  });
  guarded("local", [&] { out.push_back({"local", detail::yes(is_local(r, limits)), {}}); });
  guarded("uniserial_right", [&] {
    auto u = is_uniserial_right(r, limits);
    out.push_back({"uniserial_right", detail::yes(u.holds), {}});
    if (u.witness)
      out.back().extra.push_back({"witness", "(" + describe_ideal(u.witness->first) + "," +
                                                 describe_ideal(u.witness->second) + ")"});
  });
  guarded("lie_class", [&] {
    out.push_back({"lie_class", detail::opt(lie_class(r, limits)), {}});
    auto strong = lie_series(r, LieFlavor::strong, limits);
    out.push_back({"strongly_lie_nilpotent", detail::yes(strong.reaches_zero()), {}});
    out.push_back({"strong_lie_length",
                   strong.reaches_zero() ? std::to_string(strong.terms.size()) : std::string("none"), {}});
  });
  guarded("nil_radical_central_chain", [&] {
    auto chain = nil_radical_central_chain(r, limits);
    ReportEntry e{"nil_radical_central_chain", chain.ok ? "true" : "false", {}};
    std::string sizes;
    for (std::size_t i = 0; i < chain.chain.size(); ++i)
      sizes += (i ? "<" : "") + std::to_string(chain.chain[i].size());
    e.extra.push_back({"sizes", sizes});
    if (!chain.ok) e.extra.push_back({"failure", chain.failure});
    out.push_back(std::move(e));
  });
  guarded("ore", [&] {
    auto ore = ore_check(r, limits);
    out.push_back({"units", std::to_string(ore.unit_count), {}});
    out.push_back({"regulars", std::to_string(ore.regular_count), {}});
    out.push_back({"ore", detail::yes(ore.holds()), {}});
    if (ore.failure) out.back().extra.push_back({"witness", pair(ore.failure->first, ore.failure->second)});
  });
  return rep;
}

/// Cover relation of a lattice as a DOT digraph (edges point upwards).
inline std::string lattice_to_dot(const IdealLattice& lat, const NamedIdeals& names = {}) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n";
  os << "  label=\"" << lat.ring.name() << " " << to_string(lat.kind) << " ideals\";\n";
  for (std::size_t i = 0; i < lat.ideals.size(); ++i) {
    os << "  n" << i << " [label=\"" << lat.ideals[i].size() << "\"";
    for (const auto& [n, ideal] : names)
      if (ideal == lat.ideals[i]) os << ", xlabel=\"" << n << "\"";
    os << "];\n";
  }
  for (auto [i, j] : lat.covers()) os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

/// A chain of subsets (series, central chains) as a DOT path.
inline std::string chain_to_dot(const std::vector<AdditiveSubset>& chain, const std::string& title) {
  std::ostringstream os;
  os << "digraph chain {\n  rankdir=BT;\n  label=\"" << title << "\";\n";
  for (std::size_t i = 0; i < chain.size(); ++i)
    os << "  n" << i << " [label=\"" << chain[i].size() << "\"];\n";
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) os << "  n" << i << " -> n" << i + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ccring
