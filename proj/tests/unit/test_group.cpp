#include <gtest/gtest.h>

#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "powergraph/arith.hpp"
#include "powergraph/group.hpp"
#include "reference.hpp"
#include "test_util.hpp"

using namespace powergraph;
using testutil::find;

namespace {

std::vector<std::vector<std::uint64_t>> table_of(const Group& g) {
  std::vector<std::vector<std::uint64_t>> t(g.order(), std::vector<std::uint64_t>(g.order()));
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
  return t;
}

}  // namespace

TEST(BuildGroup, CyclicSix) {
  Group g = build_group("Z(6)");
  EXPECT_EQ(g.order(), 6U);
  EXPECT_EQ(g.element_order(find(g, "g")), 6U);
  EXPECT_TRUE(g.is_cyclic());
  EXPECT_TRUE(g.is_abelian());
}

TEST(BuildGroup, QuaternionHasOneInvolution) {
  Group g = build_group("Q(8)");
  ASSERT_EQ(g.involutions().size(), 1U);
  EXPECT_EQ(g.name(g.involutions()[0]), "a^2");
  EXPECT_EQ(element_order(g, find(g, "a^2")), 2U);
  EXPECT_FALSE(g.is_abelian());
}

TEST(BuildGroup, DihedralAndSymmetricShareOrderMultiset) {
  auto d3 = order_histogram(build_group("D(3)"));
  auto s3 = order_histogram(build_group("S(3)"));
  EXPECT_EQ(d3, s3);
  EXPECT_EQ(d3, (std::map<std::uint64_t, std::size_t>{{1, 1}, {2, 3}, {3, 2}}));
}

TEST(BuildGroup, FamilyOrders) {
  EXPECT_EQ(build_group("D(12)").order(), 24U);
  EXPECT_EQ(build_group("Q(32)").order(), 32U);
  EXPECT_EQ(build_group("S(4)").order(), 24U);
  EXPECT_EQ(build_group("A(4)").order(), 12U);
  EXPECT_EQ(build_group("A(1)").order(), 1U);
  EXPECT_EQ(build_group("E(3,3)").order(), 27U);
  EXPECT_EQ(build_group("E(2,3)xZ(9)").order(), 72U);
  EXPECT_EQ(build_group("Z(1)").order(), 1U);
}

TEST(BuildGroup, OrderCap) {
  EXPECT_THROW(build_group("S(7)"), GroupBuildError);
  EXPECT_THROW(build_group("Z(10)", BuildOptions{9}), GroupBuildError);
  EXPECT_THROW(build_group("Z(40)xZ(60)"), GroupBuildError);
  EXPECT_NO_THROW(build_group("Z(2048)"));
}

TEST(ElementOrder, Examples) {
  Group z12 = build_group("Z(12)");
  EXPECT_EQ(element_order(z12, find(z12, "g^4")), 3U);
  EXPECT_EQ(element_order(z12, 0), 1U);
  EXPECT_EQ(generator_class(z12, find(z12, "g^4")), (std::vector<ElementId>{find(z12, "g^4"), find(z12, "g^8")}));
  EXPECT_EQ(generator_class(z12, 0), (std::vector<ElementId>{0}));
  Group z5 = build_group("Z(5)");
  EXPECT_EQ(generator_class(z5, 1), (std::vector<ElementId>{1, 2, 3, 4}));
}

TEST(CyclicPoset, CyclicTwelveIsDivisorLattice) {
  Group g = build_group("Z(12)");
  CyclicPoset cp = cyclic_subgroup_poset(g);
  ASSERT_EQ(cp.size(), 6U);
  std::vector<std::size_t> sizes;
  for (const auto& c : cp.subgroups) sizes.push_back(c.size);
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3, 4, 6, 12}));
  for (std::size_t i = 0; i < cp.size(); ++i)
    for (std::size_t j = 0; j < cp.size(); ++j)
      EXPECT_EQ(cp.strictly_contains(j, i), i != j && sizes[j] % sizes[i] == 0);
}

TEST(CyclicPoset, QuaternionEight) {
  CyclicPoset cp = cyclic_subgroup_poset(build_group("Q(8)"));
  ASSERT_EQ(cp.size(), 5U);
  std::vector<std::size_t> sizes;
  for (const auto& c : cp.subgroups) sizes.push_back(c.size);
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 4, 4, 4}));
  for (std::size_t j = 2; j < 5; ++j) EXPECT_TRUE(cp.strictly_contains(j, 1));
  EXPECT_FALSE(cp.strictly_contains(3, 2));
}

TEST(CyclicPoset, KleinFourIsAntichainOverBottom) {
  CyclicPoset cp = cyclic_subgroup_poset(build_group("Z(2)xZ(2)"));
  ASSERT_EQ(cp.size(), 4U);
  auto hasse = cp.hasse_edges();
  EXPECT_EQ(hasse, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(CyclicPoset, MatchesNaiveEnumerationOnCorpus) {
  for (const auto& spec : testutil::corpus_specs()) {
    Group g = build_group(spec);
    CyclicPoset cp = cyclic_subgroup_poset(g);
    std::set<std::set<int>> mine;
    for (const auto& c : cp.subgroups) {
      std::set<int> s;
      c.members.for_each([&](std::size_t x) { s.insert(static_cast<int>(x)); });
      EXPECT_EQ(s.size(), c.size);
      EXPECT_EQ(*s.begin(), 0);
      mine.insert(s);
    }
    EXPECT_EQ(mine, ref::cyclic_subgroups(g)) << spec;
  }
}

TEST(MaximalInvolutions, Examples) {
  Group s3 = build_group("S(3)");
  EXPECT_EQ(maximal_involutions(s3), (std::vector<ElementId>{find(s3, "(2 3)"), find(s3, "(1 2)"), find(s3, "(1 3)")}));
  EXPECT_TRUE(maximal_involutions(build_group("Z(6)")).empty());
  EXPECT_TRUE(maximal_involutions(build_group("Q(8)")).empty());
  EXPECT_EQ(maximal_involutions(build_group("E(2,3)")).size(), 7U);
}

TEST(EulerSum, Examples) {
  EXPECT_EQ(euler_sum_check(build_group("Z(12)")).sum, 12U);
  EXPECT_TRUE(euler_sum_check(build_group("Q(8)")).holds);
  auto trivial = euler_sum_check(build_group("Z(1)"));
  EXPECT_EQ(trivial.sum, 1U);
  EXPECT_TRUE(trivial.holds);
}

TEST(GroupProperties, HoldOnCorpus) {
  for (const auto& spec : testutil::corpus_specs()) {
    Group g = build_group(spec);
    EXPECT_TRUE(euler_sum_check(g).holds) << spec;
    std::vector<int> seen(g.order(), 0);
    for (const auto& cls : generator_partition(cyclic_subgroup_poset(g)))
      for (ElementId x : cls) ++seen[x];
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; })) << spec;
    for (ElementId x = 0; x < g.order(); ++x) {
      ASSERT_EQ(g.element_order(x), static_cast<std::uint64_t>(ref::element_order(g, x))) << spec;
      ASSERT_EQ(generator_class(g, x).size(), arith::totient(g.element_order(x))) << spec;
      ASSERT_EQ(g.mul(x, g.inverse(x)), 0U);
    }
  }
}

TEST(DirectProduct, OrdersAreLcm) {
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{{"Z(4)", "Z(6)"}, {"D(4)", "Z(3)"}, {"Q(8)", "S(3)"}}) {
    Group g = build_group(a), h = build_group(b);
    Group p = direct_product(g, h);
    for (ElementId x = 0; x < g.order(); ++x)
      for (ElementId y = 0; y < h.order(); ++y)
        EXPECT_EQ(p.element_order(static_cast<ElementId>(x * h.order() + y)),
                  std::lcm(g.element_order(x), h.element_order(y)));
  }
}

TEST(CayleyTable, RoundTripAndRenumbering) {
  Group g = build_group("D(4)");
  std::stringstream ss;
  write_cayley_table(ss, g);
  Group back = read_cayley_table(ss);
  EXPECT_EQ(table_of(back), table_of(g));

  // Z(3) with the identity stored at index 2.
  std::stringstream moved("3\n0 1 2\n1 2 0\n2 0 1\n");
  std::stringstream moved2("3\n1 2 0\n2 0 1\n0 1 2\n");
  Group h = read_cayley_table(moved2);
  EXPECT_EQ(h.mul(0, 1), 1U);
  EXPECT_EQ(h.name(0), "2");
  EXPECT_EQ(read_cayley_table(moved).order(), 3U);
}

TEST(CayleyTable, MalformedFiles) {
  std::stringstream short_table("2\n0 1\n1\n");
  EXPECT_THROW(read_cayley_table(short_table), GroupBuildError);
  std::stringstream trailing("1\n0\n7\n");
  EXPECT_THROW(read_cayley_table(trailing), GroupBuildError);
  std::stringstream bad_closure("2\n0 1\n1 5\n");
  EXPECT_THROW(read_cayley_table(bad_closure), GroupAxiomError);
  std::stringstream no_identity("2\n1 1\n1 1\n");
  try {
    read_cayley_table(no_identity);
    FAIL();
  } catch (const GroupAxiomError& e) {
    EXPECT_EQ(e.axiom(), "identity");
  }
  EXPECT_THROW(load_cayley_table("/nonexistent/x.tbl"), GroupBuildError);
}

TEST(CayleyTable, BadTableReportsAssociativityWitness) {
  try {
    build_group("table:" + testutil::data_path("bad.tbl"));
    FAIL();
  } catch (const GroupAxiomError& e) {
    EXPECT_EQ(e.axiom(), "associativity");
    ASSERT_EQ(e.witness().size(), 3U);
    std::ifstream in(testutil::data_path("bad.tbl"));
    std::size_t n;
    in >> n;
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (auto& row : t)
      for (auto& v : row) in >> v;
    auto [x, y, z] = std::tuple{e.witness()[0], e.witness()[1], e.witness()[2]};
    EXPECT_NE(t[t[x][y]][z], t[x][t[y][z]]);
  }
}

TEST(CayleyTable, HeisenbergTableIsNonabelianExponentThree) {
  Group h = build_group("table:" + testutil::data_path("heis27.tbl"));
  EXPECT_EQ(h.order(), 27U);
  EXPECT_FALSE(h.is_abelian());
  EXPECT_EQ(order_histogram(h), (std::map<std::uint64_t, std::size_t>{{1, 1}, {3, 26}}));
}

TEST(CayleyTable, RandomCorruptionIsDetected) {
  std::mt19937 rng(20261017);
  for (const char* spec : {"Z(6)", "S(3)", "Q(8)", "D(4)", "Z(2)xZ(2)xZ(3)", "A(4)"}) {
    const auto t = table_of(build_group(spec));
    const std::size_t n = t.size();
    for (int trial = 0; trial < 200; ++trial) {
      auto bad = t;
      std::size_t a = rng() % n, b = rng() % n;
      std::uint64_t v = (bad[a][b] + 1 + rng() % (n - 1)) % n;
      bad[a][b] = v;
      EXPECT_THROW(Group::from_table(bad), GroupAxiomError) << spec << " " << a << "," << b;
    }
  }
}
