#include <gtest/gtest.h>

#include "support.hpp"

namespace hl = hyperlag;
using hl::Hypergraph;
using hl::VertexSet;
using hl::testing::graph;

TEST(Complete, Examples) {
  EXPECT_EQ(hl::complete(5, 3).size(), 10);
  EXPECT_EQ(hl::complete(2, 3).size(), 0);
  EXPECT_EQ(hl::complete(2, 3).vertex_count(), 2);
  EXPECT_THROW(hl::complete(65, 3), std::invalid_argument);
  EXPECT_THROW(hl::complete(4, 0), std::invalid_argument);
}

TEST(Complete, EdgeCountsAreBinomial) {
  for (int t = 0; t <= 9; ++t)
    for (int r = 1; r <= 5; ++r) EXPECT_EQ(hl::complete(t, r).size(), hl::detail::binomial(t, r));
}

TEST(CompleteMinus, Examples) {
  EXPECT_EQ(hl::complete_minus(4, 3), graph(3, 4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}));
  EXPECT_EQ(hl::complete_minus(3, 3).size(), 0);
  const Hypergraph k = hl::complete_minus(6, 3);
  EXPECT_EQ(k.size(), 19);
  EXPECT_FALSE(k.has_edge(VertexSet{4, 5, 6}));
  EXPECT_THROW(hl::complete_minus(2, 3), std::invalid_argument);
}

TEST(Star, Examples) {
  EXPECT_EQ(hl::star(4), hl::complete_minus(4, 3));
  EXPECT_EQ(hl::star(6).size(), 10);
  for (int n = 3; n <= 10; ++n) EXPECT_EQ(hl::star(n).size(), hl::detail::binomial(n - 1, 2));
  EXPECT_THROW(hl::star(0), std::invalid_argument);
}

TEST(S2t, Examples) {
  EXPECT_EQ(hl::s2t(1), hl::single_edge(3));
  EXPECT_EQ(hl::s2t(3), graph(3, 5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}));
  EXPECT_THROW(hl::s2t(0), std::invalid_argument);
}

TEST(LinearStructures, Examples) {
  EXPECT_EQ(hl::linear_cycle(3), graph(3, 6, {{1, 2, 3}, {3, 4, 5}, {5, 6, 1}}));
  EXPECT_EQ(hl::linear_path(2), graph(3, 5, {{1, 2, 3}, {3, 4, 5}}));
  for (int t = 2; t <= 8; ++t) {
    EXPECT_EQ(hl::linear_cycle(t).vertex_count(), 2 * t);
    EXPECT_EQ(hl::linear_cycle(t).size(), t);
    EXPECT_EQ(hl::linear_path(t).vertex_count(), 2 * t + 1);
    EXPECT_EQ(hl::linear_path(t).size(), t);
  }
  EXPECT_THROW(hl::linear_cycle(1), std::invalid_argument);
  EXPECT_THROW(hl::linear_path(0), std::invalid_argument);
}

TEST(LinearStructures, ConsecutiveEdgesShareOneVertex) {
  for (int t = 3; t <= 6; ++t) {
    const Hypergraph c = hl::linear_cycle(t);
    const std::vector<VertexSet> e(c.edges().begin(), c.edges().end());
    int one = 0, zero = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) ((e[i] & e[j]).size() == 1 ? one : zero)++;
    EXPECT_EQ(one, t);
    EXPECT_EQ(zero, t * (t - 1) / 2 - t);
  }
}

TEST(F5, IsTheGeneralizedTriangle) { EXPECT_EQ(hl::f5(), graph(3, 5, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}})); }

TEST(OGraph, Examples) {
  EXPECT_TRUE(hl::are_isomorphic(hl::o_graph(2), hl::complete(4, 3)));
  EXPECT_EQ(hl::o_graph(3).vertex_count(), 6);
  EXPECT_EQ(hl::o_graph(3).size(), 12);
  for (int s = 2; s <= 6; ++s) EXPECT_EQ(hl::o_graph(s).size(), 2 * s * (s - 1));
  EXPECT_THROW(hl::o_graph(1), std::invalid_argument);
}

TEST(Fano, IsASteinerTripleSystem) {
  const Hypergraph g = hl::fano();
  EXPECT_EQ(g.size(), 7);
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b) EXPECT_EQ(hl::pair_link(g, a, b).size(), 1U);
}

TEST(FFamily, Examples) {
  const auto f3 = hl::f_family(3);
  ASSERT_EQ(f3.members().size(), 1U);
  EXPECT_EQ(f3.members()[0], hl::f5());
  EXPECT_THROW(hl::f_family(2), std::invalid_argument);
  EXPECT_THROW(hl::f_member(4, 2), std::invalid_argument);
}

TEST(FFamily, MembersShareTwoBaseEdges) {
  for (int r = 3; r <= 7; ++r) {
    const auto fam = hl::f_family(r);
    EXPECT_EQ(static_cast<int>(fam.members().size()), r - 2);
    for (std::size_t i = 0; i < fam.members().size(); ++i) {
      const auto& m = fam.members()[i];
      EXPECT_EQ(m.uniformity(), r);
      EXPECT_EQ(m.size(), 3);
      EXPECT_EQ(m.vertex_count(), 2 * r - 1 - static_cast<int>(i));
      const auto e = m.edges();
      int shared = 0;
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
          if ((e[a] & e[b]).size() == r - 1) ++shared;
      EXPECT_EQ(shared, 1);
    }
  }
}

TEST(FFamily, ThirdEdgeLayout) {
  // r = 4: core {1,2}, a1 = 3, a2 = 4, a3 = 5, m's from 6.
  EXPECT_EQ(hl::f_member(4, 0), graph(4, 7, {{1, 2, 3, 4}, {1, 2, 3, 5}, {4, 5, 6, 7}}));
  EXPECT_EQ(hl::f_member(4, 1), graph(4, 6, {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 4, 5, 6}}));
}

TEST(Gallery, ParsesCompactNames) {
  EXPECT_EQ(hl::build_construction(hl::parse_construction_name("K5_3")), hl::complete(5, 3));
  EXPECT_EQ(hl::build_construction(hl::parse_construction_name("K4_3-")), hl::complete_minus(4, 3));
  EXPECT_EQ(hl::build_construction(hl::parse_construction_name("C3_3")), hl::linear_cycle(3));
  EXPECT_EQ(hl::build_construction(hl::parse_construction_name("P2_3")), hl::linear_path(2));
  EXPECT_EQ(hl::build_construction(hl::parse_construction_name("Star6")), hl::star(6));
  EXPECT_EQ(hl::build_construction(hl::parse_construction_name("S2t3")), hl::s2t(3));
  EXPECT_EQ(hl::build_construction(hl::parse_construction_name("O3")), hl::o_graph(3));
  EXPECT_EQ(hl::build_construction(hl::parse_construction_name("E4")), hl::single_edge(4));
  EXPECT_EQ(hl::build_construction(hl::parse_construction_name("Fr4.1")), hl::f_member(4, 1));
  EXPECT_EQ(hl::build_construction(hl::parse_construction_name("F5")), hl::f5());
  EXPECT_EQ(hl::build_construction(hl::parse_construction_name("Fano")), hl::fano());
  EXPECT_EQ(hl::build_construction(hl::parse_construction_name("K", {6, 2})), hl::complete(6, 2));
}

TEST(Gallery, RejectsBadNames) {
  for (const char* bad : {"Q3", "C3_4", "O3-", "", "K", "3K"})
    EXPECT_THROW(hl::build_construction(hl::parse_construction_name(bad)), std::invalid_argument) << bad;
  EXPECT_THROW(hl::build_construction({"K", {5}}), std::invalid_argument);
  EXPECT_THROW(hl::parse_construction_name("Q", {1}), std::invalid_argument);
}

TEST(Gallery, FamilyTokens) {
  EXPECT_EQ(hl::family_by_name("Fr5").members().size(), 3U);
  const auto single = hl::family_by_name("C3_3");
  ASSERT_EQ(single.members().size(), 1U);
  EXPECT_EQ(single.members()[0], hl::linear_cycle(3));
}

TEST(Gallery, EveryEntryBuilds) {
  for (const auto& e : hl::gallery()) {
    std::vector<int> p;
    if (e.arity == 2) p = e.name == "Fr" ? std::vector<int>{4, 1} : std::vector<int>{5, 3};
    else if (e.arity == 1) p = {3};
    EXPECT_NO_THROW(hl::build_construction({e.name, p})) << e.name;
  }
}

TEST(KnownLambda, Examples) {
  EXPECT_EQ(hl::known_lambda("K", {5, 3})->value, hl::make_rational(2, 25));
  for (int s = 2; s <= 7; ++s) EXPECT_EQ(hl::known_lambda("O", {s})->value, hl::make_rational(1, 16));
  for (long long t = 3; t <= 6; ++t)
    EXPECT_EQ(hl::known_lambda("K", {static_cast<int>(2 * t - 1), 3})->value,
              hl::make_rational((2 * t - 2) * (2 * t - 3), 6 * (2 * t - 1) * (2 * t - 1)));
  EXPECT_EQ(hl::known_lambda("K", {7, 2})->value, hl::make_rational(3, 7));
  EXPECT_FALSE(hl::known_lambda("K", {6, 3}));
  EXPECT_FALSE(hl::known_lambda("Star", {6}));
}

TEST(KnownLambda, ValuesAreInLowestTerms) {
  for (const auto& [name, p] : std::vector<std::pair<std::string, std::vector<int>>>{{"K", {5, 3}}, {"K", {9, 3}}, {"K", {6, 2}}, {"O", {4}}}) {
    const auto v = hl::known_lambda(name, p)->value;
    EXPECT_EQ(boost::multiprecision::gcd(boost::multiprecision::numerator(v), boost::multiprecision::denominator(v)), 1);
  }
}

TEST(KnownLambda, SolverAgrees) {
  std::vector<std::pair<std::string, std::vector<int>>> cases = {{"K", {4, 3}}, {"K", {5, 3}}, {"K", {7, 3}}, {"K", {9, 3}}};
  for (int t = 2; t <= 8; ++t) cases.push_back({"K", {t, 2}});
  for (int s = 2; s <= 5; ++s) cases.push_back({"O", {s}});
  for (const auto& [name, p] : cases) {
    const auto known = hl::known_lambda(name, p);
    ASSERT_TRUE(known) << name;
    const double solver = hl::lagrangian(hl::build_construction({name, p})).value;
    EXPECT_NEAR(solver, hl::to_double(known->value), 1e-9) << name << " " << p[0];
  }
}
