#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ccring/ccring.hpp"

namespace {

using namespace ccring;

constexpr int kOk = 0;
constexpr int kSuiteFailure = 1;
constexpr int kInputError = 2;
constexpr int kLimit = 3;

struct Options {
  bool strict = false;
  bool pretty = false;
  std::size_t max_elements = Limits{}.max_elements;
  std::size_t max_ideals = Limits{}.max_ideals;

  Limits limits() const {
    Limits l;
    l.max_elements = max_elements;
    l.max_ideals = max_ideals;
    return l;
  }
};

CatalogEntry resolve(const std::string& source, const Limits& limits) {
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      return {load_ringspec(ss.str(), limits), {}, {}};
    } catch (const MalformedInput& e) {
      throw MalformedInput(source + ": " + e.what());
    }
  }
  return catalog(source, limits);
}

NamedIdeals named_ideals(const CatalogEntry& e, const Limits& limits) {
  NamedIdeals out;
  for (const auto& [name, gens] : e.named_gens) {
    std::string key = name;
    std::replace(key.begin(), key.end(), '-', '_');
    out.emplace_back(key, closure(e.ring, gens, SubsetKind::twosided, limits));
  }
  return out;
}

std::vector<Elem> resolve_gens(const CatalogEntry& e, std::string spec) {
  if (!e.named_gens.count(spec)) {
    std::string dashed = spec;
    std::replace(dashed.begin(), dashed.end(), '_', '-');
    if (e.named_gens.count(dashed)) spec = dashed;
  }
  return e.gens(spec);
}

int emit_report(const Ring& r, const Options& opt, const NamedIdeals& names) {
  auto rep = full_report(r, opt.limits(), names);
  std::cout << (opt.pretty ? rep.to_pretty() : rep.to_text());
  return opt.strict && rep.any_skipped() ? kLimit : kOk;
}

SubsetKind parse_kind(const std::string& k) {
  if (k == "twosided") return SubsetKind::twosided;
  if (k == "right") return SubsetKind::right;
  if (k == "left") return SubsetKind::left;
  throw UsageError("--kind must be twosided, right or left");
}

int emit_lattice(const Ring& r, const std::string& kind, const std::string& dot_path, const Options& opt,
                 const NamedIdeals& names) {
  auto lat = all_ideals(r, parse_kind(kind), opt.limits());
  auto dot = lattice_to_dot(lat, names);
  if (dot_path.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(dot_path);
    if (!out) throw UsageError("cannot write " + dot_path);
    out << dot;
    std::cout << "ideals=" << lat.size() << "\ncovers=" << lat.covers().size() << "\ndot=" << dot_path << '\n';
  }
  return kOk;
}

int emit_ringspec(const Ring& r) {
  if (const auto* sr = structure_of(r)) {
    std::cout << serialize_ringspec(*sr);
    return kOk;
  }
  std::vector<std::string> origins;
  auto sr = structure_constants_of(r, &origins);
  for (std::size_t i = 0; i < origins.size(); ++i) std::cout << "# q" << i << " = " << origins[i] << '\n';
  std::cout << serialize_ringspec(sr);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite rings: centrally essential rings and related properties"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--strict", opt.strict, "Exit 3 if any property was skipped because of a limit");
  app.add_flag("--pretty", opt.pretty, "Aligned table instead of key=value lines");
  app.add_option("--max-elements", opt.max_elements, "Largest ring to enumerate");
  app.add_option("--max-ideals", opt.max_ideals, "Largest ideal lattice to enumerate");

  std::string source;
  auto* report = app.add_subcommand("report", "Property report for a catalog ring or ring file");
  report->add_option("source", source, "Catalog name or ring file")->required();

  std::string gens, action = "report", kind = "twosided", dot_path;
  auto* quot = app.add_subcommand("quotient", "Factor ring by the ideal generated by --gens");
  quot->add_option("source", source, "Catalog name or ring file")->required();
  quot->add_option("--gens", gens, "Named generator set or ';'-separated elements")->required();
  quot->add_option("action", action, "report, lattice or export")
      ->check(CLI::IsMember({"report", "lattice", "export"}));
  quot->add_option("--kind", kind, "Ideal kind for lattice");
  quot->add_option("--dot", dot_path, "Write the lattice to this file");

  auto* lattice = app.add_subcommand("lattice", "Ideal lattice as a DOT digraph");
  lattice->add_option("source", source, "Catalog name or ring file")->required();
  lattice->add_option("--kind", kind, "twosided, right or left");
  lattice->add_option("--dot", dot_path, "Write DOT to this file instead of stdout");

  auto* ringspec = app.add_subcommand("ringspec", "Print a ring in the ring file format");
  ringspec->add_option("source", source, "Catalog name or ring file")->required();

  bool list_only = false;
  auto* suite = app.add_subcommand("paper-suite", "Check the finite claims about the catalog rings");
  suite->add_flag("--list", list_only, "List the claims without running them");

  std::uint64_t seed = 1;
  std::size_t count = 200;
  auto* props = app.add_subcommand("properties", "Check property implications on catalog and random rings");
  props->add_option("--seed", seed, "Random seed");
  props->add_option("--count", count, "Number of sampled rings");

  auto* witnesses = app.add_subcommand("witnesses", "Derivation matrix ring witnesses over F_p");
  std::uint32_t prime = 5;
  witnesses->add_option("--prime", prime, "Characteristic (>= 3)");
  witnesses->add_option("--seed", seed, "Random seed");

  app.add_subcommand("catalog", "List the catalog rings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  const auto limits = opt.limits();
  try {
    if (*report) {
      auto e = resolve(source, limits);
      return emit_report(e.ring, opt, named_ideals(e, limits));
    }
    if (*quot) {
      auto e = resolve(source, limits);
      auto ideal = closure(e.ring, resolve_gens(e, gens), SubsetKind::twosided, limits);
      if (ideal.is_whole()) throw DomainError("the generators span the whole ring");
      Ring r = ideal.is_zero() ? e.ring : quotient(e.ring, ideal, limits).ring;
      if (action == "report") return emit_report(r, opt, ideal.is_zero() ? named_ideals(e, limits) : NamedIdeals{});
      if (action == "lattice") return emit_lattice(r, kind, dot_path, opt, {});
      return emit_ringspec(r);
    }
    if (*lattice) {
      auto e = resolve(source, limits);
      return emit_lattice(e.ring, kind, dot_path, opt, named_ideals(e, limits));
    }
    if (*ringspec) return emit_ringspec(resolve(source, limits).ring);
    if (*suite) {
      if (list_only) {
        for (const auto& c : paper_claims()) std::cout << c.id << ": " << c.statement << '\n';
        return kOk;
      }
      auto out = run_suite(limits);
      std::cout << out.to_text();
      return out.passed() ? kOk : kSuiteFailure;
    }
    if (*props) {
      InvariantStats stats;
      for (const char* name : {"ex52", "z2q8", "z2d4", "ex51(3)", "m2z2", "t2z2", "z4", "z6", "z12"})
        check_invariants(catalog(name, limits).ring, stats, limits);
      for (const auto& s : sample_matrix_subrings(seed, count)) check_invariants(s.ring, stats, limits);
      std::cout << "rings=" << stats.rings << "\nnoncommutative=" << stats.noncommutative
                << "\ncentrally_essential=" << stats.centrally_essential << "\ncompletely_centrally_essential="
                << stats.completely_ce << "\nviolations=" << stats.violations.size() << '\n';
      for (const auto& v : stats.violations)
        std::cout << "violation=" << v.invariant << ";ring=" << v.ring << (v.detail.empty() ? "" : ";detail=" + v.detail)
                  << '\n';
      return stats.violations.empty() ? kOk : kSuiteFailure;
    }
    if (*witnesses) {
      auto a = sym::ex11_verify(prime, seed), b = sym::ex53_verify(prime, seed);
      std::cout << "# 3x3 derivation matrices over F_" << prime << "(x,y)\n" << a.to_text();
      std::cout << "# 4x4 shift matrices over F_" << prime << "(t)\n" << b.to_text();
      return a.passed() && b.passed() ? kOk : kSuiteFailure;
    }
    for (const auto& n : catalog_names()) std::cout << n << '\n';
    return kOk;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
