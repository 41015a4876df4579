#include <gtest/gtest.h>

#include <set>

#include "ccring/ccring.hpp"

using namespace ccring;

namespace {

// Every subset containing 0 that is closed under addition and under the
// multiplications required by `kind`, found by testing all 2^(n-1) subsets.
std::set<std::vector<Elem>> ideals_by_subsets(const Ring& r, SubsetKind kind) {
  const auto n = r.size();
  std::set<std::vector<Elem>> out;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    const std::uint32_t set = (mask << 1) | 1u;
    auto in = [&](Elem x) { return (set >> x & 1u) != 0; };
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      if (!in(x)) continue;
      for (Elem y = 0; y < n && ok; ++y) {
        if (in(y) && !in(r.add(x, y))) ok = false;
        if (kind != SubsetKind::left && !in(r.mul(x, y))) ok = false;
        if (kind != SubsetKind::right && !in(r.mul(y, x))) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<Elem> members;
    for (Elem x = 0; x < n; ++x)
      if (in(x)) members.push_back(x);
    out.insert(members);
  }
  return out;
}

std::set<std::vector<Elem>> as_sets(const IdealLattice& lat) {
  std::set<std::vector<Elem>> out;
  for (const auto& i : lat.ideals) out.insert(i.elements());
  return out;
}

Ring small_ring(const std::string& name) { return catalog(name).ring; }

// I^n as the additive span of all n-fold products of members.
AdditiveSubset power_by_products(const AdditiveSubset& ideal, std::size_t n) {
  const Ring& r = ideal.owner();
  std::vector<Elem> layer = ideal.elements();
  for (std::size_t k = 1; k < n; ++k) {
    std::set<Elem> next;
    for (Elem a : layer)
      for (Elem b : ideal.elements()) next.insert(r.mul(a, b));
    layer.assign(next.begin(), next.end());
  }
  return closure(r, layer, SubsetKind::subgroup);
}

}  // namespace

TEST(Lattice, MatchesSubsetOracleOnSmallRings) {
  for (const char* name : {"t2z2", "m2z2", "z12", "z16", "z8"}) {
    auto r = small_ring(name);
    for (auto kind : {SubsetKind::twosided, SubsetKind::right, SubsetKind::left})
      EXPECT_EQ(as_sets(all_ideals(r, kind)), ideals_by_subsets(r, kind)) << name << " " << to_string(kind);
  }
}

TEST(Lattice, MatchesSubsetOracleOnSampledRings) {
  for (const auto& s : sample_matrix_subrings(5, 40)) {
    if (s.ring.size() > 16) continue;
    for (auto kind : {SubsetKind::twosided, SubsetKind::right})
      EXPECT_EQ(as_sets(all_ideals(s.ring, kind)), ideals_by_subsets(s.ring, kind)) << s.ring.name();
  }
}

TEST(Lattice, KnownShapes) {
  auto z4 = all_ideals(small_ring("z4"), SubsetKind::twosided);
  EXPECT_EQ(z4.size(), 3u);
  EXPECT_FALSE(z4.incomparable_pair().has_value());
  EXPECT_EQ(z4.covers().size(), 2u);
  EXPECT_EQ(all_ideals(small_ring("m2z2"), SubsetKind::twosided).size(), 2u);  // simple
  EXPECT_EQ(all_ideals(small_ring("m2z2"), SubsetKind::right).size(), 5u);
  auto ex52 = all_ideals(small_ring("ex52"), SubsetKind::twosided);
  EXPECT_EQ(ex52.size(), 58u);
  EXPECT_TRUE(ex52.incomparable_pair().has_value());
  for (std::size_t i = 1; i < ex52.size(); ++i) EXPECT_LE(ex52.ideals[i - 1].size(), ex52.ideals[i].size());
}

TEST(Lattice, LimitsAreEnforced) {
  Limits l;
  l.max_lattice_elements = 100;
  EXPECT_THROW(all_ideals(small_ring("ex52"), SubsetKind::twosided, l), LimitExceeded);
  Limits few;
  few.max_ideals = 10;
  EXPECT_THROW(all_ideals(small_ring("ex52"), SubsetKind::twosided, few), LimitExceeded);
}

TEST(Quotient, ProjectionIsASurjectiveHomomorphism) {
  auto r = small_ring("ex52");
  for (const auto& ideal : all_ideals(r, SubsetKind::twosided).ideals) {
    if (ideal.is_whole()) continue;
    auto q = quotient(r, ideal);
    ASSERT_EQ(q.ring.size() * ideal.size(), r.size());
    EXPECT_EQ(q.project(r.one()), q.ring.one());
    for (Elem a = 0; a < r.size(); a += 3)
      for (Elem b = 0; b < r.size(); b += 5) {
        ASSERT_EQ(q.project(r.add(a, b)), q.ring.add(q.project(a), q.project(b)));
        ASSERT_EQ(q.project(r.mul(a, b)), q.ring.mul(q.project(a), q.project(b)));
      }
    for (Elem x = 0; x < q.ring.size(); ++x) {
      EXPECT_EQ(q.project(q.lift(x)), x);
      EXPECT_TRUE(ideal.contains(r.sub(q.lift(x), q.lift(x))));
    }
    EXPECT_TRUE(q.preimage(zero_subset(q.ring)) == ideal);
  }
}

TEST(Quotient, RepresentativesAreLeastCosetMembers) {
  auto r = small_ring("z12");
  auto ideal = closure(r, {r.times(4, r.one())}, SubsetKind::twosided);
  auto q = quotient(r, ideal);
  ASSERT_EQ(q.ring.size(), 4u);
  for (Elem x = 0; x < 4; ++x) EXPECT_EQ(q.lift(x), x);
}

TEST(Quotient, DomainErrors) {
  auto r = small_ring("m2z2");
  auto right = closure(r, {parse_element(r, "e11")}, SubsetKind::right);
  EXPECT_THROW(quotient(r, right), DomainError);
  EXPECT_THROW(quotient(r, whole_ring(r)), DomainError);
  EXPECT_THROW(quotient(small_ring("z4"), zero_subset(r)), DomainError);
}

TEST(Radicals, JacobsonMatchesMaximalRightIdealsOnCatalogAndSamples) {
  for (const char* name : {"ex52", "z2q8", "z2d4", "ex51(3)", "ex51(4)", "m2z2", "t2z2", "z12"}) {
    auto r = small_ring(name);
    EXPECT_TRUE(jacobson_radical(r) == jacobson_by_maximal_right_ideals(r)) << name;
  }
  for (const auto& s : sample_matrix_subrings(17, 60))
    EXPECT_TRUE(jacobson_radical(s.ring) == jacobson_by_maximal_right_ideals(s.ring)) << s.ring.name();
}

TEST(Radicals, KnownValues) {
  EXPECT_EQ(jacobson_radical(small_ring("z2q8")).size(), 128u);
  EXPECT_EQ(nilpotency_index(jacobson_radical(small_ring("ex52"))), 3u);
  EXPECT_EQ(jacobson_radical(small_ring("m2z2")).size(), 1u);
  EXPECT_EQ(jacobson_radical(small_ring("t2z2")).size(), 2u);
  EXPECT_EQ(jacobson_radical(small_ring("z12")).size(), 2u);
  EXPECT_EQ(nilpotency_index(zero_subset(small_ring("z4"))), 1u);
  EXPECT_FALSE(nilpotency_index(whole_ring(small_ring("z4"))).has_value());
}

TEST(Radicals, PrimeRadicalIsTheLargestNilpotentIdeal) {
  std::vector<Ring> rings;
  for (const char* name : {"ex52", "z2d4", "t2z2", "m2z2", "z12"}) rings.push_back(small_ring(name));
  for (const auto& s : sample_matrix_subrings(23, 40)) rings.push_back(s.ring);
  for (const auto& r : rings) {
    auto p = prime_radical(r);
    EXPECT_TRUE(nilpotency_index(p).has_value()) << r.name();
    for (const auto& ideal : all_ideals(r, SubsetKind::twosided).ideals)
      if (nilpotency_index(ideal)) EXPECT_TRUE(ideal.subset_of(p)) << r.name();
    // finite rings: the prime radical is the Jacobson radical
    EXPECT_TRUE(p == jacobson_radical(r)) << r.name();
  }
}

TEST(Radicals, PowersMatchProductSpans) {
  for (const char* name : {"ex52", "ex51(3)", "t2z2"}) {
    auto j = jacobson_radical(small_ring(name));
    for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(ideal_power(j, n) == power_by_products(j, n).with_kind(SubsetKind::twosided)) << name << n;
  }
}

TEST(Radicals, LargestInnerIdeal) {
  auto r = small_ring("m2z2");
  auto right = closure(r, {parse_element(r, "e11")}, SubsetKind::right);
  EXPECT_EQ(right.size(), 4u);
  EXPECT_TRUE(largest_inner_ideal(right).is_zero());
}
