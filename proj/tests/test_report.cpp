#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "ccring/ccring.hpp"

using namespace ccring;

namespace {

NamedIdeals names_of(const CatalogEntry& e) {
  NamedIdeals out;
  for (const auto& [name, gens] : e.named_gens) {
    std::string key = name;
    std::replace(key.begin(), key.end(), '-', '_');
    out.emplace_back(key, closure(e.ring, gens, SubsetKind::twosided));
  }
  return out;
}

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

Elem element_named(const Ring& r, const std::string& s) {
  for (Elem x = 0; x < r.size(); ++x)
    if (r.format(x) == s) return x;
  throw std::runtime_error("no element " + s);
}

std::size_t count_nodes(const std::string& dot) {
  std::size_t n = 0;
  for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) ++n;
  return n;
}

}  // namespace

TEST(Report, IsDeterministic) {
  auto e = catalog("z2d4");
  EXPECT_EQ(full_report(e.ring, {}, names_of(e)).to_text(), full_report(e.ring, {}, names_of(e)).to_text());
}

TEST(Report, GroupAlgebraLines) {
  auto e = catalog("z2q8");
  auto text = full_report(e.ring, {}, names_of(e)).to_text();
  EXPECT_TRUE(has_line(text, "cardinality=256")) << text;
  EXPECT_TRUE(has_line(text, "center_size=32")) << text;
  EXPECT_TRUE(has_line(text, "centrally_essential=true")) << text;
  EXPECT_TRUE(has_line(text, "completely_centrally_essential=false;witness_ideal=group_sum;witness=e+a+b+ab")) << text;
  EXPECT_TRUE(has_line(text, "lie_class=2")) << text;
}

TEST(Report, MatrixRingLines) {
  auto rep = full_report(catalog("m2z2").ring);
  EXPECT_EQ(rep.value("centrally_essential"), "false");
  EXPECT_EQ(rep.value("commutative"), "false");
  EXPECT_EQ(rep.value("semiprime"), "true");
  EXPECT_EQ(rep.value("jacobson_size"), "1");
  EXPECT_EQ(rep.value("units"), "6");
  EXPECT_FALSE(rep.any_skipped());
}

TEST(Report, CentralWitnessIsSound) {
  Ring r = catalog("m2z2").ring;
  auto rep = full_report(r);
  const auto* e = rep.find("centrally_essential");
  ASSERT_NE(e, nullptr);
  ASSERT_FALSE(e->extra.empty());
  Elem a = element_named(r, e->extra[0].second);
  std::vector<Elem> z;
  for (Elem c = 0; c < r.size(); ++c) {
    bool central = true;
    for (Elem x = 0; x < r.size() && central; ++x) central = r.mul(c, x) == r.mul(x, c);
    if (central) z.push_back(c);
  }
  EXPECT_EQ(std::find(z.begin(), z.end(), a), z.end());
  for (Elem c : z)
    if (c != 0) {
      Elem p = r.mul(a, c);
      EXPECT_TRUE(p == 0 || std::find(z.begin(), z.end(), p) == z.end());
    }
}

TEST(Report, CommutativityWitnessIsSound) {
  Ring r = catalog("t2z2").ring;
  auto rep = full_report(r);
  const auto* e = rep.find("commutative");
  ASSERT_NE(e, nullptr);
  ASSERT_EQ(e->value, "false");
  auto w = e->extra.at(0).second;  // "(x,y)"
  auto comma = w.find(',', 1);
  while (comma != std::string::npos) {
    try {
      Elem x = element_named(r, w.substr(1, comma - 1));
      Elem y = element_named(r, w.substr(comma + 1, w.size() - comma - 2));
      EXPECT_NE(r.mul(x, y), r.mul(y, x));
      return;
    } catch (const std::runtime_error&) {
      comma = w.find(',', comma + 1);
    }
  }
  FAIL() << "unparsable witness " << w;
}

TEST(Report, TightLimitsSkipInsteadOfFailing) {
  Limits tight;
  tight.max_ideals = 4;
  tight.max_lattice_elements = 16;
  auto rep = full_report(catalog("z2q8").ring, tight);
  EXPECT_TRUE(rep.any_skipped());
  EXPECT_EQ(rep.value("completely_centrally_essential"), "skipped");
  EXPECT_EQ(rep.value("cardinality"), "256");
  EXPECT_EQ(rep.value("commutative"), "false");
}

TEST(Report, PrettyFormHasEveryKey) {
  auto rep = full_report(catalog("z4").ring);
  auto pretty = rep.to_pretty();
  for (const auto& e : rep.entries) EXPECT_NE(pretty.find(e.key), std::string::npos) << e.key;
}

TEST(Dot, ChainRing) {
  auto lat = all_ideals(catalog("z4").ring, SubsetKind::twosided, {});
  auto dot = lattice_to_dot(lat);
  EXPECT_EQ(count_nodes(dot), 3u);
  EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '>'), 2);
}

TEST(Dot, NamedIdealLabel) {
  auto e = catalog("z2q8");
  auto dot = lattice_to_dot(all_ideals(e.ring, SubsetKind::twosided, {}), names_of(e));
  EXPECT_NE(dot.find("xlabel=\"group_sum\""), std::string::npos);
  EXPECT_NE(dot.find("xlabel=\"augmentation\""), std::string::npos);
}

TEST(Dot, NonChainLatticeHasIncomparableIdeals) {
  auto lat = all_ideals(catalog("ex52").ring, SubsetKind::twosided, {});
  EXPECT_TRUE(lat.incomparable_pair().has_value());
  auto dot = lattice_to_dot(lat);
  EXPECT_EQ(count_nodes(dot), lat.size());
}

TEST(Dot, Chain) {
  Ring r = catalog("z2q8").ring;
  auto chain = nil_radical_central_chain(r);
  auto dot = chain_to_dot(chain.chain, "chain");
  EXPECT_EQ(count_nodes(dot), chain.chain.size());
}

TEST(DescribeIdeal, FallsBackToGenerators) {
  Ring r = catalog("z4").ring;
  auto two = closure(r, {r.times(2, r.one())}, SubsetKind::twosided);
  EXPECT_EQ(describe_ideal(two), "ideal{size=2,gens=" + r.format(r.times(2, r.one())) + "}");
  EXPECT_EQ(describe_ideal(two, {{"twos", two}}), "twos");
}
