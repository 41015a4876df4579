#include <gtest/gtest.h>

#include "ccring/ccring.hpp"

using namespace ccring;

TEST(Groups, OrdersAndValidity) {
  EXPECT_EQ(group_cyclic(1).order, 1u);
  EXPECT_EQ(group_cyclic(7).order, 7u);
  EXPECT_EQ(group_dihedral(4).order, 8u);
  EXPECT_EQ(group_quaternion().order, 8u);
  EXPECT_EQ(group_direct_product(group_cyclic(2), group_quaternion()).order, 16u);
  for (const auto& g : {group_cyclic(6), group_dihedral(5), group_quaternion()})
    EXPECT_TRUE(validate_group(g).empty());
}

TEST(Groups, BrokenTableIsReported) {
  auto g = group_cyclic(3);
  g.table[1 * 3 + 1] = 1;  // g*g = g
  EXPECT_FALSE(validate_group(g).empty());
  g.table.pop_back();
  EXPECT_THROW(validate_group(g), MalformedInput);
}

TEST(Groups, QuaternionRelations) {
  auto q = group_quaternion();
  auto a = q.index_of("a"), b = q.index_of("b"), a2 = q.index_of("a^2");
  EXPECT_EQ(q.mul(a, a), a2);
  EXPECT_EQ(q.mul(b, b), a2);
  EXPECT_EQ(q.mul(q.mul(a2, a2), q.identity), q.identity);
  // b a b^-1 = a^-1
  EXPECT_EQ(q.mul(q.mul(b, a), q.inverse[b]), q.inverse[a]);
  EXPECT_EQ(q.names, (std::vector<std::string>{"e", "a", "a^2", "b", "ab", "a^3", "a^2b", "a^3b"}));
}

TEST(Groups, DihedralRelations) {
  auto d = group_dihedral(4);
  auto a = d.index_of("a"), b = d.index_of("b");
  EXPECT_EQ(d.mul(b, b), d.identity);
  auto ab = d.mul(a, b);
  EXPECT_EQ(d.mul(ab, ab), d.identity);
  EXPECT_EQ(d.names[d.identity], "1");
}

// Oracle: subgroups by testing every subset for closure.
std::size_t subgroup_count_by_subsets(const GroupTable& g) {
  std::size_t count = 0;
  for (std::uint32_t mask = 1; mask < (1u << g.order); ++mask) {
    if (!(mask >> g.identity & 1)) continue;
    bool closed = true;
    for (std::uint32_t x = 0; x < g.order && closed; ++x)
      for (std::uint32_t y = 0; y < g.order && closed; ++y)
        if ((mask >> x & 1) && (mask >> y & 1)) closed = mask >> g.mul(x, y) & 1;
    count += closed;
  }
  return count;
}

TEST(Groups, SubgroupEnumerationMatchesSubsetOracle) {
  for (const auto& g : {group_quaternion(), group_dihedral(4), group_cyclic(8), group_dihedral(3),
                        group_direct_product(group_cyclic(2), group_cyclic(4))})
    EXPECT_EQ(subgroups(g).size(), subgroup_count_by_subsets(g));
  EXPECT_EQ(subgroups(group_quaternion()).size(), 6u);
  EXPECT_EQ(subgroups(group_dihedral(4)).size(), 10u);
}

TEST(Groups, Hamiltonian) {
  EXPECT_TRUE(is_hamiltonian(group_quaternion()));
  EXPECT_TRUE(is_hamiltonian(group_direct_product(group_quaternion(), group_cyclic(2))));
  EXPECT_FALSE(is_hamiltonian(group_dihedral(4)));
  EXPECT_FALSE(is_hamiltonian(group_cyclic(4)));
}

TEST(Groups, CentersAndClasses) {
  EXPECT_EQ(group_quaternion().center().size(), 2u);
  EXPECT_EQ(group_quaternion().conjugacy_class_count(), 5u);
  EXPECT_EQ(group_dihedral(4).conjugacy_class_count(), 5u);
  EXPECT_EQ(group_dihedral(3).conjugacy_class_count(), 3u);
  EXPECT_EQ(group_cyclic(5).conjugacy_class_count(), 5u);
}

TEST(Groups, LimitsAndUsage) {
  Limits l;
  l.max_group_order = 8;
  EXPECT_THROW(group_dihedral(5, l), LimitExceeded);
  EXPECT_THROW(group_cyclic(0), UsageError);
  EXPECT_THROW(group_quaternion().index_of("z"), UsageError);
}
