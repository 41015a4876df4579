#pragma once

// Checks of the finite claims about the catalog rings, run end to end.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ccring/constructors.hpp"
#include "ccring/properties.hpp"
#include "ccring/report.hpp"
#include "ccring/symbolic.hpp"

namespace ccring {

struct ClaimResult {
  bool passed = false;
  std::string detail;
};

struct Claim {
  std::string id;
  std::string statement;
  std::function<ClaimResult(const Limits&)> check;
};

namespace detail {

inline ClaimResult verdict(bool ok, std::string detail) { return {ok, std::move(detail)}; }

inline std::string yesno(bool b) { return b ? "true" : "false"; }

inline AdditiveSubset named_ideal(const CatalogEntry& e, const std::string& name, SubsetKind kind,
                                  const Limits& limits) {
  return closure(e.ring, e.gens(name), kind, limits);
}

inline ClaimResult chain_claim(const std::string& ring, const Limits& limits) {
  auto e = catalog(ring, limits);
  auto p = prime_radical(e.ring, limits);
  auto chain = nil_radical_central_chain(e.ring, limits);
  std::string sizes;
  for (std::size_t i = 0; i < chain.chain.size(); ++i)
    sizes += (i ? "<" : "") + std::to_string(chain.chain[i].size());
  const bool ok = chain.ok && chain.chain.size() >= 2 && chain.chain.back() == p && chain.strictly_increasing() &&
                  chain.factors_central();
  return verdict(ok, "chain " + sizes + " |P|=" + std::to_string(p.size()) + (chain.ok ? "" : " " + chain.failure));
}

}  // namespace detail

/// The claims in a fixed order.
inline std::vector<Claim> paper_claims() {
  using detail::verdict;
  using detail::yesno;
  std::vector<Claim> c;

  c.push_back({"triangular_block_ring_cardinality", "the 3x3 block ring over Z2 has 128 elements",
               [](const Limits& l) {
                 auto e = catalog("ex52", l);
                 return verdict(e.ring.size() == 128, "|R|=" + std::to_string(e.ring.size()));
               }});
  c.push_back({"triangular_block_ring_centrally_essential", "the 3x3 block ring is centrally essential",
               [](const Limits& l) {
                 auto e = catalog("ex52", l);
                 auto ce = is_centrally_essential(e.ring, l);
                 return verdict(ce.holds, "centrally_essential=" + yesno(ce.holds));
               }});
  c.push_back({"triangular_block_ring_completely_centrally_essential",
               "every factor ring of the 3x3 block ring is centrally essential", [](const Limits& l) {
                 auto e = catalog("ex52", l);
                 auto r = is_completely_centrally_essential(e.ring, l);
                 std::string d = std::string("completely_centrally_essential=") + to_string(r.verdict);
                 if (r.failing_ideal) {
                   d += " failing_ideal=" + describe_ideal(*r.failing_ideal);
                   if (r.counterexample && !r.failing_ideal->is_zero())
                     d += " witness=" + quotient(e.ring, *r.failing_ideal, l).ring.format(*r.counterexample);
                 }
                 return verdict(r.verdict == Verdict::yes, d);
               }});
  c.push_back({"triangular_block_ring_not_reversible", "A = a11, B = a12 satisfy AB != 0 and BA = 0",
               [](const Limits& l) {
                 auto e = catalog("ex52", l);
                 const auto& r = e.ring;
                 Elem a = parse_element(r, "a11"), b = parse_element(r, "a12");
                 auto rev = is_reversible(r, l);
                 bool ok = r.mul(a, b) != 0 && r.mul(b, a) == 0 && !rev.holds;
                 return verdict(ok, "AB=" + r.format(r.mul(a, b)) + " BA=" + r.format(r.mul(b, a)) +
                                        " reversible=" + yesno(rev.holds));
               }});
  c.push_back({"triangular_block_ring_not_uniserial", "the ideals I1 and I2 are incomparable", [](const Limits& l) {
                 auto e = catalog("ex52", l);
                 auto i1 = detail::named_ideal(e, "I1", SubsetKind::twosided, l);
                 auto i2 = detail::named_ideal(e, "I2", SubsetKind::twosided, l);
                 auto u = is_uniserial_right(e.ring, l);
                 bool ok = i1.size() == 16 && i2.size() == 16 && !i1.subset_of(i2) && !i2.subset_of(i1) && !u.holds;
                 return verdict(ok, "|I1|=" + std::to_string(i1.size()) + " |I2|=" + std::to_string(i2.size()) +
                                        " uniserial_right=" + yesno(u.holds));
               }});
  c.push_back({"triangular_block_ring_least_ideal_quotient_commutative",
               "the factor ring by the b12 ideal is commutative", [](const Limits& l) {
                 auto e = catalog("ex52", l);
                 auto i = detail::named_ideal(e, "least", SubsetKind::twosided, l);
                 auto q = quotient(e.ring, i, l);
                 bool comm = is_commutative(q.ring).commutative;
                 return verdict(i.size() == 2 && comm, "|I|=" + std::to_string(i.size()) + " |R/I|=" +
                                                           std::to_string(q.ring.size()) + " commutative=" + yesno(comm));
               }});
  c.push_back({"quaternion_group_hamiltonian", "Q8 is non-abelian with every subgroup normal", [](const Limits& l) {
                 auto q8 = group_quaternion();
                 bool h = is_hamiltonian(q8, l);
                 return verdict(h, "subgroups=" + std::to_string(subgroups(q8, l).size()));
               }});
  c.push_back({"quaternion_algebra_z2_centrally_essential", "Z2[Q8] is centrally essential", [](const Limits& l) {
                 auto e = catalog("z2q8", l);
                 auto ce = is_centrally_essential(e.ring, l);
                 return verdict(ce.holds, "centrally_essential=" + yesno(ce.holds));
               }});
  c.push_back({"quaternion_algebra_z2_center_from_class_sums", "|Z(Z2[Q8])| = 2^(number of conjugacy classes)",
               [](const Limits& l) {
                 auto e = catalog("z2q8", l);
                 auto z = center(e.ring, l);
                 auto classes = e.group->conjugacy_class_count();
                 return verdict(z.size() == (std::size_t{1} << classes),
                                "|Z|=" + std::to_string(z.size()) + " classes=" + std::to_string(classes));
               }});
  c.push_back({"quaternion_algebra_z2_group_sum_quotient",
               "Z2[Q8] modulo the group-sum ideal has 128 elements and e+a+b+ab has no central multiplier",
               [](const Limits& l) {
                 auto e = catalog("z2q8", l);
                 auto ideal = group_sum_ideal(e.ring, *e.group, l);
                 auto q = quotient(e.ring, ideal, l);
                 Elem w = q.project(parse_element(e.ring, "e+a+b+ab"));
                 bool ce = is_centrally_essential(q.ring, l).holds;
                 bool witness = is_ce_counterexample(q.ring, w, l);
                 return verdict(q.ring.size() == 128 && !ce && witness,
                                "|R/I|=" + std::to_string(q.ring.size()) + " centrally_essential=" + yesno(ce) +
                                    " witness_confirmed=" + yesno(witness));
               }});
  c.push_back({"quaternion_algebra_z2_not_completely_centrally_essential",
               "Z2[Q8] has a factor ring that is not centrally essential", [](const Limits& l) {
                 auto e = catalog("z2q8", l);
                 auto r = is_completely_centrally_essential(e.ring, l);
                 std::string d = std::string("completely_centrally_essential=") + to_string(r.verdict);
                 if (r.failing_ideal) d += " failing_ideal_size=" + std::to_string(r.failing_ideal->size());
                 return verdict(r.verdict == Verdict::no, d);
               }});
  c.push_back({"augmentation_quotient_is_coefficient_ring",
               "the augmentation map is a ring homomorphism onto Z2 with kernel the fundamental ideal",
               [](const Limits& l) {
                 auto e = catalog("z2q8", l);
                 const auto& r = e.ring;
                 auto aug = augmentation_map(r, *e.group, l);
                 bool hom = aug(r.one()) == 1 % aug.modulus;
                 for (Elem a = 0; a < r.size() && hom; ++a)
                   for (Elem b = 0; b < r.size() && hom; ++b)
                     hom = aug(r.add(a, b)) == (aug(a) + aug(b)) % aug.modulus &&
                           aug(r.mul(a, b)) == aug(a) * aug(b) % aug.modulus;
                 auto q = quotient(r, aug.omega, l);
                 return verdict(hom && q.ring.size() == aug.modulus && is_closed(aug.omega),
                                "|omega|=" + std::to_string(aug.omega.size()) + " |R/omega|=" + std::to_string(q.ring.size()));
               }});
  c.push_back({"dihedral_algebra_z2_centrally_essential", "Z2[D4] is centrally essential", [](const Limits& l) {
                 auto e = catalog("z2d4", l);
                 auto ce = is_centrally_essential(e.ring, l);
                 return verdict(ce.holds, "centrally_essential=" + yesno(ce.holds));
               }});
  c.push_back({"dihedral_algebra_z2_not_semicommutative", "u = 1+b has u^2 = 0 but u a u != 0 in Z2[D4]",
               [](const Limits& l) {
                 auto e = catalog("z2d4", l);
                 const auto& r = e.ring;
                 Elem u = parse_element(r, "1+b"), a = parse_element(r, "a");
                 Elem uau = r.mul(r.mul(u, a), u);
                 auto sc = is_semicommutative(r, l);
                 return verdict(r.mul(u, u) == 0 && uau != 0 && !sc.holds,
                                "u^2=" + r.format(r.mul(u, u)) + " uau=" + r.format(uau) +
                                    " semicommutative=" + yesno(sc.holds));
               }});
  c.push_back({"quaternion_algebra_z3_not_centrally_essential",
               "Z3[Q8] is not centrally essential; a*f with f = 2+a^2 has no central multiplier", [](const Limits& l) {
                 auto e = catalog("z3q8", l);
                 const auto& r = e.ring;
                 Elem f = parse_element(r, "2*e+a^2");
                 Elem af = r.mul(parse_element(r, "a"), f);
                 bool ce = is_centrally_essential(r, l).holds;
                 bool witness = is_ce_counterexample(r, af, l);
                 return verdict(!ce && witness, "centrally_essential=" + yesno(ce) + " af=" + r.format(af) +
                                                    " witness_confirmed=" + yesno(witness));
               }});
  c.push_back({"finite_rings_satisfy_ore_conditions",
               "on every catalog ring the Ore conditions hold on both sides and regular elements are units",
               [](const Limits& l) {
                 std::string d;
                 bool ok = true;
                 for (const char* name : {"ex52", "z2q8", "z2d4", "z3q8", "ex51(3)", "m2z2", "t2z2", "z12"}) {
                   auto rep = ore_check(catalog(name, l).ring, l);
                   if (!rep.holds()) {
                     ok = false;
                     d += std::string(d.empty() ? "" : " ") + name + ":fails";
                   }
                 }
                 return verdict(ok, ok ? "8 rings" : d);
               }});
  c.push_back({"radical_central_chain_block_ring",
               "the prime radical of the 3x3 block ring has a strictly increasing chain with central factors",
               [](const Limits& l) { return detail::chain_claim("ex52", l); }});
  c.push_back({"radical_central_chain_congruence_ring",
               "the prime radical of the Z8 congruence ring has a strictly increasing chain with central factors",
               [](const Limits& l) { return detail::chain_claim("ex51(3)", l); }});
  c.push_back({"strong_lie_series_vanishes", "the commutator ideal series of both rings reaches zero",
               [](const Limits& l) {
                 std::string d;
                 bool ok = true;
                 for (const char* name : {"ex52", "ex51(3)"}) {
                   auto s = lie_series(catalog(name, l).ring, LieFlavor::strong, l);
                   ok = ok && s.reaches_zero();
                   d += std::string(d.empty() ? "" : " ") + name + ":" + std::to_string(s.terms.size()) + "_terms";
                 }
                 return verdict(ok, d);
               }});
  c.push_back({"derivation_matrix_ring_witnesses",
               "3x3 matrices over F5(x,y) with d/dx, d/dy entries: closed, non-commutative, corner ideal absorbs",
               [](const Limits&) {
                 auto rep = sym::ex11_verify(5);
                 std::string d;
                 for (const auto& ch : rep.checks)
                   if (!ch.passed) d += (d.empty() ? "" : " ") + ch.name + ":" + ch.detail;
                 return verdict(rep.passed(), d.empty() ? std::to_string(rep.checks.size()) + " checks" : d);
               }});
  c.push_back({"derivation_shift_ring_witnesses",
               "4x4 matrices over F5(t): f is a homomorphism, x^4 = 0, [x, f(t)] is not in R x^2",
               [](const Limits&) {
                 auto rep = sym::ex53_verify(5);
                 std::string d;
                 for (const auto& ch : rep.checks)
                   if (!ch.passed) d += (d.empty() ? "" : " ") + ch.name + ":" + ch.detail;
                 return verdict(rep.passed(), d.empty() ? std::to_string(rep.checks.size()) + " checks" : d);
               }});
  return c;
}

struct SuiteOutcome {
  std::vector<std::pair<Claim, ClaimResult>> results;

  bool passed() const {
    for (const auto& [c, r] : results)
      if (!r.passed) return false;
    return true;
  }
  std::string to_text() const {
    std::ostringstream os;
    std::size_t ok = 0;
    for (const auto& [c, r] : results) {
      ok += r.passed;
      os << (r.passed ? "PASS " : "FAIL ") << c.id << ": " << r.detail << '\n';
      if (!r.passed) os << "     claim: " << c.statement << '\n';
    }
    os << ok << "/" << results.size() << " claims passed\n";
    return os.str();
  }
};

inline SuiteOutcome run_suite(const Limits& limits = {}) {
  SuiteOutcome out;
  for (auto& claim : paper_claims()) {
    ClaimResult r;
    try {
      r = claim.check(limits);
    } catch (const std::exception& e) {
      r = {false, std::string("error: ") + e.what()};
    }
    out.results.emplace_back(std::move(claim), std::move(r));
  }
  return out;
}

}  // namespace ccring
