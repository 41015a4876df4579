#include <gtest/gtest.h>

#include <random>

#include "ccring/ccring.hpp"

using namespace ccring;

namespace {

StructureRing z4() {
  auto sr = StructureRing::blank(AdditiveShape({4}), "z4");
  sr.c(0, 0, 0) = 1;
  sr.one = coeff::basis(sr, 0);
  return sr;
}

// Z2[t]/(t^2) with basis 1, t.
StructureRing dual_numbers() {
  auto sr = StructureRing::blank(AdditiveShape({2, 2}), "dual");
  sr.c(0, 0, 0) = 1;
  sr.c(0, 1, 1) = 1;
  sr.c(1, 0, 1) = 1;
  sr.one = coeff::basis(sr, 0);
  return sr;
}

}  // namespace

TEST(AdditiveShape, IndexRoundTripsAndZeroIsFirst) {
  AdditiveShape s({2, 3, 4});
  EXPECT_EQ(*s.cardinality(), 24u);
  EXPECT_EQ(s.index(s.zero()), 0u);
  for (std::uint64_t i = 0; i < 24; ++i) EXPECT_EQ(s.index(s.element(i)), i);
  // first coordinate is least significant
  EXPECT_EQ(s.element(1).coeffs, (std::vector<std::uint32_t>{1, 0, 0}));
  EXPECT_EQ(s.element(2).coeffs, (std::vector<std::uint32_t>{0, 1, 0}));
}

TEST(AdditiveShape, ReduceTakesResidues) {
  AdditiveShape s({4, 3});
  EXPECT_EQ(s.reduce({-1, 7}).coeffs, (std::vector<std::uint32_t>{3, 1}));
  EXPECT_THROW(s.reduce({1}), MalformedInput);
  EXPECT_THROW(AdditiveShape({2, 0}), MalformedInput);
}

TEST(ValidateRing, CyclicRingIsValid) { EXPECT_TRUE(validate_ring(z4()).valid()); }

TEST(ValidateRing, NonAssociativeTensorIsReported) {
  // b0 is the identity; b1*b1 = b1 and b1*b2 = b2 but b2*b1 = 0 and b2*b2 = b1:
  // (b2 b2) b2 = b1 b2 = b2 while b2 (b2 b2) = b2 b1 = 0.
  auto sr = StructureRing::blank(AdditiveShape({2, 2, 2}));
  for (std::size_t i = 0; i < 3; ++i) {
    sr.c(0, i, i) = 1;
    sr.c(i, 0, i) = 1;
  }
  sr.c(1, 1, 1) = 1;
  sr.c(1, 2, 2) = 1;
  sr.c(2, 2, 1) = 1;
  sr.one = coeff::basis(sr, 0);
  auto rep = validate_ring(sr);
  ASSERT_FALSE(rep.valid());
  EXPECT_NE(rep.summary().find("associativity"), std::string::npos);
}

TEST(ValidateRing, WrongIdentityIsReported) {
  auto sr = dual_numbers();
  sr.one = coeff::basis(sr, 1);
  auto rep = validate_ring(sr);
  EXPECT_FALSE(rep.valid());
  EXPECT_NE(rep.summary().find("identity law"), std::string::npos);
  sr.one = sr.shape.zero();
  EXPECT_NE(validate_ring(sr).summary().find("identity is zero"), std::string::npos);
}

TEST(ValidateRing, DimensionMismatchIsMalformed) {
  auto sr = z4();
  sr.tensor.push_back(0);
  EXPECT_THROW(validate_ring(sr), MalformedInput);
}

TEST(ValidateRing, IncompatibleOrdersAreReported) {
  // Z2 x Z4 with b0 * b0 = b1 would send an element of order 2 to one of order 4
  auto sr = StructureRing::blank(AdditiveShape({2, 4}));
  sr.c(0, 0, 1) = 1;
  sr.one = coeff::basis(sr, 1);
  EXPECT_NE(validate_ring(sr).summary().find("order compatibility"), std::string::npos);
}

TEST(MakeRing, RejectsInvalidAndOversizedRings) {
  auto bad = dual_numbers();
  bad.one = bad.shape.zero();
  EXPECT_THROW(make_ring(bad), ConstructionError);
  Limits tiny;
  tiny.max_elements = 3;
  EXPECT_THROW(make_ring(z4(), tiny), LimitExceeded);
}

TEST(Ring, OperationsAgreeWithCoefficientArithmetic) {
  auto sr = dual_numbers();
  auto r = make_ring(sr);
  ASSERT_EQ(r.size(), 4u);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      auto ea = sr.shape.element(a), eb = sr.shape.element(b);
      EXPECT_EQ(r.add(a, b), sr.shape.index(coeff::add(sr, ea, eb)));
      EXPECT_EQ(r.mul(a, b), sr.shape.index(coeff::mul(sr, ea, eb)));
    }
  Elem t = element_of(r, coeff::basis(sr, 1));
  EXPECT_EQ(r.mul(t, t), 0u);
  EXPECT_EQ(r.format(r.add(r.one(), t)), "b0+b1");
}

TEST(Ring, AxiomsHoldExhaustivelyOnSmallCatalogRings) {
  for (const char* name : {"t2z2", "m2z2", "z12"}) {
    auto r = catalog(name).ring;
    const auto n = r.size();
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          ASSERT_EQ(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c))) << name;
          ASSERT_EQ(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c))) << name;
          ASSERT_EQ(r.mul(r.add(a, b), c), r.add(r.mul(a, c), r.mul(b, c))) << name;
        }
  }
}

TEST(Ring, AxiomsHoldOnRandomTriplesOfLargeRings) {
  std::mt19937_64 rng(3);
  for (const char* name : {"z2q8", "z3q8", "ex51(5)"}) {
    auto r = catalog(name).ring;
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(r.size() - 1));
    for (int i = 0; i < 100000; ++i) {
      Elem a = pick(rng), b = pick(rng), c = pick(rng);
      ASSERT_EQ(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c))) << name;
      ASSERT_EQ(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c))) << name;
      ASSERT_EQ(r.mul(r.add(a, b), c), r.add(r.mul(a, c), r.mul(b, c))) << name;
    }
  }
}

TEST(ElementSet, InsertContainsAndOrder) {
  ElementSet s(100);
  s.insert(42);
  s.insert(3);
  s.insert(42);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.elements(), (std::vector<Elem>{3, 42}));
}

TEST(SpanBuilder, SpanOfOneInZ12IsEverything) {
  auto r = catalog("z12").ring;
  SpanBuilder span(r);
  EXPECT_TRUE(span.add(r.times(4, r.one())));
  EXPECT_EQ(span.set().size(), 3u);
  EXPECT_TRUE(span.add(r.times(6, r.one())));
  EXPECT_EQ(span.set().size(), 6u);
  EXPECT_FALSE(span.add(r.times(2, r.one())));
}
