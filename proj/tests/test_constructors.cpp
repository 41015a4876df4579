#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ccring/ccring.hpp"

using namespace ccring;

namespace {

// Convolution over the Cayley table, straight from the coefficient vectors.
std::vector<std::uint32_t> convolve(const GroupTable& g, std::uint32_t n, const std::vector<std::uint32_t>& x,
                                    const std::vector<std::uint32_t>& y) {
  std::vector<std::uint32_t> out(g.order, 0);
  for (std::uint32_t a = 0; a < g.order; ++a)
    for (std::uint32_t b = 0; b < g.order; ++b) out[g.mul(a, b)] = (out[g.mul(a, b)] + x[a] * y[b]) % n;
  return out;
}

// Matrix of an element of a pattern ring: sum of coefficient * generator.
std::vector<std::uint32_t> matrix_of(const MatrixPattern& p, const std::vector<std::uint32_t>& coords) {
  std::vector<std::uint32_t> m(p.dim * p.dim, 0);
  for (std::size_t g = 0; g < coords.size(); ++g)
    for (std::size_t c = 0; c < m.size(); ++c)
      m[c] = (m[c] + coords[g] * p.generators[g].cells[c]) % p.cell_moduli[c];
  return m;
}

}  // namespace

TEST(GroupAlgebra, MultiplicationIsConvolution) {
  std::mt19937_64 rng(11);
  for (auto [n, g] : {std::pair{2u, group_quaternion()}, std::pair{3u, group_quaternion()},
                      std::pair{2u, group_dihedral(4)}}) {
    auto r = make_ring(group_algebra(n, g, "rg"));
    ASSERT_EQ(r.size(), static_cast<std::size_t>(std::pow(n, 8)));
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(r.size() - 1));
    for (int i = 0; i < 2000; ++i) {
      Elem a = pick(rng), b = pick(rng);
      EXPECT_EQ(r.coordinates(r.mul(a, b)), convolve(g, n, r.coordinates(a), r.coordinates(b)));
    }
  }
}

TEST(GroupAlgebra, CenterIsSpannedByClassSums) {
  auto e = catalog("z2q8");
  const auto& g = *e.group;
  std::vector<Elem> sums;
  std::vector<bool> seen(g.order, false);
  for (std::uint32_t x = 0; x < g.order; ++x) {
    if (seen[x]) continue;
    std::vector<std::uint32_t> coeffs(g.order, 0);
    for (std::uint32_t h = 0; h < g.order; ++h) {
      auto y = g.mul(g.mul(h, x), g.inverse[h]);
      seen[y] = true;
      coeffs[y] = 1;
    }
    sums.push_back(element_of(e.ring, RingElement{coeffs}));
  }
  EXPECT_EQ(sums.size(), 5u);
  auto span = closure(e.ring, sums, SubsetKind::subgroup);
  auto z = center(e.ring);
  EXPECT_EQ(z.size(), 32u);
  EXPECT_TRUE(span == z.with_kind(SubsetKind::subgroup));
}

TEST(GroupAlgebra, AugmentationIsARingHomomorphism) {
  auto e = catalog("z2d4");
  const auto& r = e.ring;
  auto aug = augmentation_map(r, *e.group);
  EXPECT_EQ(aug(r.one()), 1u);
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); b += 7) {
      ASSERT_EQ(aug(r.add(a, b)), (aug(a) + aug(b)) % 2);
      ASSERT_EQ(aug(r.mul(a, b)), aug(a) * aug(b) % 2);
    }
  EXPECT_EQ(aug.omega.size(), 128u);
  EXPECT_TRUE(is_closed(aug.omega));
  EXPECT_EQ(quotient(r, aug.omega).ring.size(), 2u);
  auto named = closure(r, e.gens("augmentation"), SubsetKind::twosided);
  EXPECT_TRUE(named == aug.omega);
}

TEST(GroupAlgebra, GroupSumIdealIsTwoElementsAndCentral) {
  auto e = catalog("z2q8");
  auto ideal = group_sum_ideal(e.ring, *e.group);
  EXPECT_EQ(ideal.size(), 2u);
  EXPECT_TRUE(is_central(e.ring, group_sum_element(e.ring, *e.group)));
  EXPECT_THROW(group_sum_element(catalog("m2z2").ring, *e.group), DomainError);
}

TEST(MatrixPattern, BlockRingMultipliesLikeMatrices) {
  auto p = patterns::triangular_block_ring();
  auto r = make_ring(matrix_pattern_ring(p));
  ASSERT_EQ(r.size(), 128u);
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); ++b)
      ASSERT_EQ(matrix_of(p, r.coordinates(r.mul(a, b))),
                p.multiply(matrix_of(p, r.coordinates(a)), matrix_of(p, r.coordinates(b))));
}

TEST(MatrixPattern, CongruenceRingMultipliesLikeMatrices) {
  auto p = patterns::congruence_triangular(3);
  auto r = make_ring(matrix_pattern_ring(p));
  ASSERT_EQ(r.size(), 128u);  // 8 * 4 * 4
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); ++b)
      ASSERT_EQ(matrix_of(p, r.coordinates(r.mul(a, b))),
                p.multiply(matrix_of(p, r.coordinates(a)), matrix_of(p, r.coordinates(b))));
}

TEST(MatrixPattern, ProductLeavingTheSpanIsRejected) {
  auto p = patterns::upper_triangular(2, 2);
  p.generators.push_back({"e21", {0, 0, 1, 0}});
  EXPECT_THROW(matrix_pattern_ring(p), MalformedInput);  // cell (1,0) is always zero
  MatrixPattern open{2, {2, 2, 2, 2}, {{"1", {1, 0, 0, 1}}, {"e12", {0, 1, 0, 0}}, {"e21", {0, 0, 1, 0}}}, "open"};
  EXPECT_THROW(matrix_pattern_ring(open), ConstructionError);  // e12 e21 = e11
  MatrixPattern no_one{2, {2, 2, 2, 2}, {{"e12", {0, 1, 0, 0}}}, "nil"};
  EXPECT_THROW(matrix_pattern_ring(no_one), ConstructionError);
}

TEST(Catalog, Sizes) {
  EXPECT_EQ(catalog("ex52").ring.size(), 128u);
  EXPECT_EQ(catalog("z2q8").ring.size(), 256u);
  EXPECT_EQ(catalog("z2d4").ring.size(), 256u);
  EXPECT_EQ(catalog("z3q8").ring.size(), 6561u);
  EXPECT_EQ(catalog("ex51").ring.size(), 128u);
  EXPECT_EQ(catalog("ex51(4)").ring.size(), 512u);  // 16 * 8 * 4
  EXPECT_EQ(catalog("m2z2").ring.size(), 16u);
  EXPECT_EQ(catalog("t2z2").ring.size(), 8u);
  EXPECT_EQ(catalog("z9").ring.size(), 9u);
  EXPECT_THROW(catalog("nope"), UsageError);
  EXPECT_THROW(catalog("ex51(2)"), UsageError);
}

TEST(ParseElement, LabelsCoefficientsAndErrors) {
  auto r = catalog("z2q8").ring;
  Elem x = parse_element(r, "e + a + b + ab");
  EXPECT_EQ(r.format(x), "e+a+b+ab");
  EXPECT_EQ(parse_element(r, "[1,1,0,1,1,0,0,0]"), x);
  EXPECT_EQ(parse_element(r, "2*a"), 0u);
  EXPECT_EQ(parse_element(r, "0"), 0u);
  EXPECT_THROW(parse_element(r, "c"), MalformedInput);
  EXPECT_THROW(parse_element(r, "[1,2]"), MalformedInput);
  EXPECT_THROW(parse_element(r, "x*a"), MalformedInput);
}
