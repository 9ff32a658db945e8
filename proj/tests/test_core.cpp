#include <gtest/gtest.h>

#include <atomic>

#include "support.hpp"

namespace hl = hyperlag;
using hl::Hypergraph;
using hl::VertexSet;
using hl::testing::graph;

namespace {

std::vector<VertexSet> sets(std::vector<std::vector<int>> es) {
  std::vector<VertexSet> out;
  for (auto& e : es) out.push_back(VertexSet::from_vector(e));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// VertexSet and Hypergraph
// ---------------------------------------------------------------------------

TEST(VertexSet, BasicOperations) {
  VertexSet s{3, 1, 5};
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.min(), 1);
  EXPECT_EQ(s.max(), 5);
  EXPECT_EQ(s.to_vector(), (std::vector<int>{1, 3, 5}));
  EXPECT_TRUE(s.contains(VertexSet{1, 5}));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.without(3), (VertexSet{1, 5}));
  EXPECT_EQ(VertexSet::range(3), (VertexSet{1, 2, 3}));
  EXPECT_EQ(VertexSet::range(64).size(), 64);
  EXPECT_EQ((VertexSet{1, 2} | VertexSet{2, 3}), (VertexSet{1, 2, 3}));
  EXPECT_EQ((VertexSet{1, 2} - VertexSet{2, 3}), (VertexSet{1}));
}

TEST(VertexSet, LexOrderMatchesSortedLists) {
  const auto all = hl::detail::k_subsets(7, 3);
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    EXPECT_TRUE(hl::lex_less(all[i], all[i + 1]));
    EXPECT_LT(all[i].to_vector(), all[i + 1].to_vector());
  }
  EXPECT_TRUE(hl::lex_less(VertexSet{1, 2}, VertexSet{1, 2, 3}));
}

TEST(Hypergraph, SortsEdgesAndReportsShape) {
  const Hypergraph g = graph(3, 5, {{3, 4, 5}, {1, 2, 3}});
  EXPECT_EQ(g.uniformity(), 3);
  EXPECT_EQ(g.vertex_count(), 5);
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.edge_lists(), (std::vector<std::vector<int>>{{1, 2, 3}, {3, 4, 5}}));
  EXPECT_EQ(g.degree(3), 2);
  EXPECT_EQ(g.isolated_vertices(), VertexSet{});
  EXPECT_TRUE(g.has_edge(VertexSet{1, 2, 3}));
  EXPECT_FALSE(g.has_edge(VertexSet{1, 2, 4}));
  EXPECT_EQ(graph(3, 6, {{1, 2, 3}}).isolated_vertices(), (VertexSet{4, 5, 6}));
}

TEST(Hypergraph, RejectsMalformedInput) {
  EXPECT_THROW(graph(3, 5, {{1, 2}}), std::invalid_argument);
  EXPECT_THROW(graph(3, 5, {{1, 2, 6}}), std::invalid_argument);
  EXPECT_THROW(graph(3, 5, {{1, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(graph(3, 5, {{1, 2, 3}, {3, 2, 1}}), std::invalid_argument);
  EXPECT_THROW(graph(3, 5, {{0, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph::empty(3, 65), std::invalid_argument);
  EXPECT_THROW(Hypergraph::empty(-1, 3), std::invalid_argument);
}

TEST(Hypergraph, EdgeEditing) {
  const Hypergraph g = graph(3, 4, {{1, 2, 3}});
  const Hypergraph h = g.with_edge(VertexSet{1, 2, 4});
  EXPECT_EQ(h.size(), 2);
  EXPECT_EQ(h.without_edge(VertexSet{1, 2, 4}), g);
  EXPECT_THROW(g.with_edge(VertexSet{1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(g.without_edge(VertexSet{2, 3, 4}), std::invalid_argument);
}

TEST(ForbiddenFamily, RejectsMixedUniformityAndEmptiness) {
  EXPECT_THROW(hl::ForbiddenFamily({hl::complete(3, 3), hl::complete(3, 2)}, "mixed"), std::invalid_argument);
  EXPECT_THROW(hl::ForbiddenFamily({}, "none"), std::invalid_argument);
  EXPECT_EQ(hl::ForbiddenFamily({hl::f5()}, "F5").uniformity(), 3);
}

// ---------------------------------------------------------------------------
// Links
// ---------------------------------------------------------------------------

TEST(Link, Examples) {
  const Hypergraph k4 = hl::complete(4, 3);
  const Hypergraph l = hl::link(k4, 1);
  EXPECT_EQ(l.uniformity(), 2);
  EXPECT_EQ(l.edge_lists(), (std::vector<std::vector<int>>{{2, 3}, {2, 4}, {3, 4}}));

  const Hypergraph s = hl::link(hl::star(6), 1);
  EXPECT_EQ(hl::remove_isolated(s), hl::complete(5, 2));
  EXPECT_EQ(s.isolated_vertices(), VertexSet{1});

  EXPECT_EQ(hl::link(hl::f5(), 1).edge_lists(), (std::vector<std::vector<int>>{{2, 3}, {2, 4}}));
  EXPECT_THROW(hl::link(k4, 5), std::out_of_range);
}

TEST(Link, EdgeCountEqualsDegree) {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const Hypergraph g = hl::testing::random_graph(i, 1, 8, 1, 4);
    for (int v = 1; v <= g.vertex_count(); ++v) EXPECT_EQ(hl::link(g, v).size(), g.degree(v));
  }
}

TEST(PairLink, Examples) {
  EXPECT_EQ(hl::pair_link(hl::f5(), 1, 2), sets({{3}, {4}}));
  EXPECT_TRUE(hl::pair_link(hl::f5(), 2, 5).empty());
  EXPECT_EQ(hl::pair_link(hl::complete(5, 3), 1, 2), sets({{3}, {4}, {5}}));
  EXPECT_THROW(hl::pair_link(hl::f5(), 2, 2), std::invalid_argument);
  EXPECT_THROW(hl::pair_link(hl::f5(), 1, 9), std::out_of_range);
}

TEST(CoversPairs, Examples) {
  EXPECT_TRUE(hl::covers_pairs(hl::complete_minus(4, 3)));
  EXPECT_TRUE(hl::covers_pairs(hl::fano()));
  EXPECT_FALSE(hl::covers_pairs(hl::f5()));
  const auto missing = hl::uncovered_pairs(hl::f5());
  EXPECT_NE(std::find(missing.begin(), missing.end(), std::pair{2, 5}), missing.end());
  EXPECT_TRUE(hl::covers_pairs(Hypergraph::empty(3, 1)));
}

TEST(CoversPairs, FalseWithIsolatedVertex) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const Hypergraph g = hl::testing::random_graph(i, 2, 8, 2, 4);
    if (!g.isolated_vertices().empty()) EXPECT_FALSE(hl::covers_pairs(g));
  }
}

TEST(LDiff, Examples) {
  EXPECT_TRUE(hl::l_diff(graph(3, 4, {{1, 2, 3}, {1, 2, 4}}), 3, 4).empty());
  EXPECT_EQ(hl::l_diff(hl::f5(), 5, 2), sets({{3, 4}}));
  EXPECT_EQ(hl::l_diff(graph(3, 4, {{1, 2, 3}}), 1, 4), sets({{2, 3}}));
  EXPECT_THROW(hl::l_diff(hl::f5(), 1, 1), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Containment
// ---------------------------------------------------------------------------

TEST(Contains, Examples) {
  EXPECT_FALSE(hl::contains(hl::complete(5, 3), hl::linear_cycle(3)));
  EXPECT_FALSE(hl::contains(hl::star(6), hl::f5()));
  const Hypergraph k4plus = Hypergraph(3, 5, sets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}}));
  const auto emb = hl::contains(k4plus, hl::f5());
  ASSERT_TRUE(emb);
  for (const auto& e : hl::f5().edge_lists()) {
    VertexSet img;
    for (int v : e) img.insert((*emb)(v));
    EXPECT_TRUE(k4plus.has_edge(img));
  }
  EXPECT_THROW(hl::contains(hl::complete(4, 2), hl::f5()), std::invalid_argument);
}

TEST(Contains, LeastEmbeddingMatchesBruteForce) {
  for (std::uint64_t i = 0; i < 120; ++i) {
    const Hypergraph host = hl::testing::random_graph(i, 3, 7, 3, 3, 11);
    const Hypergraph pattern = hl::testing::random_graph(1000 + i, 3, 5, 3, 3, 11);
    const auto fast = hl::contains(host, pattern);
    const auto slow = hl::testing::brute_embedding(host, pattern);
    ASSERT_EQ(fast.has_value(), slow.has_value()) << hl::to_hg(host) << hl::to_hg(pattern);
    if (fast) EXPECT_EQ(fast->map, *slow);
  }
}

TEST(Contains, ReflexiveAndTransitive) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const Hypergraph g = hl::testing::random_graph(i, 4, 7, 3, 3, 13);
    EXPECT_TRUE(hl::contains(g, g));
    if (g.size() == 0) continue;
    // H = G minus an edge, F = H minus an edge: G ⊇ H ⊇ F.
    const Hypergraph h = g.without_edge(g.edges()[0]);
    const Hypergraph f = h.size() ? h.without_edge(h.edges()[0]) : h;
    EXPECT_TRUE(hl::contains(g, h));
    EXPECT_TRUE(hl::contains(h, f));
    EXPECT_TRUE(hl::contains(g, f));
    // Random triples: containment composes.
    const Hypergraph a = hl::testing::random_graph(500 + i, 3, 5, 3, 3, 13);
    if (hl::contains(h, a) && hl::contains(g, h)) EXPECT_TRUE(hl::contains(g, a));
  }
}

TEST(IsFree, Examples) {
  const hl::ForbiddenFamily c33({hl::linear_cycle(3)}, "C3_3");
  const hl::ForbiddenFamily f5({hl::f5()}, "F5");
  EXPECT_TRUE(hl::is_free(hl::complete(5, 3), c33));
  EXPECT_TRUE(hl::is_free(hl::star(6), f5));
  EXPECT_FALSE(hl::is_free(hl::f5(), f5));
  EXPECT_TRUE(hl::is_free(hl::complete(5, 3), hl::ForbiddenFamily::nothing()));
}

// ---------------------------------------------------------------------------
// Graph operations
// ---------------------------------------------------------------------------

TEST(DisjointUnion, Examples) {
  const Hypergraph e = hl::single_edge(3);
  const Hypergraph m = hl::disjoint_union(e, e);
  EXPECT_EQ(m, graph(3, 6, {{1, 2, 3}, {4, 5, 6}}));
  const Hypergraph g = hl::fano();
  EXPECT_EQ(hl::disjoint_union(g, Hypergraph::empty(3, 0)), g);
  const Hypergraph f = hl::disjoint_union(hl::s2t(3), e);
  EXPECT_EQ(f.vertex_count(), 8);
  EXPECT_EQ(f.size(), 4);
  EXPECT_THROW(hl::disjoint_union(e, hl::single_edge(2)), std::invalid_argument);
  EXPECT_THROW(hl::disjoint_union(hl::complete(40, 1), hl::complete(30, 1)), std::invalid_argument);
}

TEST(Extension, Examples) {
  const Hypergraph km = hl::complete_minus(4, 3);
  EXPECT_EQ(hl::extension(km), km);
  const Hypergraph e = hl::single_edge(3);
  EXPECT_EQ(hl::extension(e), e);
  const Hypergraph m = graph(3, 6, {{1, 2, 3}, {4, 5, 6}});
  const Hypergraph ext = hl::extension(m);
  EXPECT_EQ(hl::uncovered_pairs(m).size(), 9U);
  EXPECT_EQ(ext.vertex_count(), 15);
  EXPECT_EQ(ext.size(), 11);
  EXPECT_THROW(hl::extension(hl::complete(3, 2)), std::invalid_argument);
}

TEST(Extension, CoversOriginalPairsWithPredictedCounts) {
  for (std::uint64_t i = 0; i < 60; ++i) {
    const Hypergraph f = hl::testing::random_graph(i, 3, 7, 3, 4, 17);
    const int u = static_cast<int>(hl::uncovered_pairs(f).size()), r = f.uniformity();
    const Hypergraph ext = hl::extension(f);
    EXPECT_EQ(ext.vertex_count(), f.vertex_count() + (r - 2) * u);
    EXPECT_EQ(ext.size(), f.size() + u);
    for (auto [a, b] : hl::uncovered_pairs(ext)) EXPECT_GT(b, f.vertex_count());
    EXPECT_TRUE(hl::contains(ext, f));
  }
}

TEST(InducedSubgraph, RelabelsInOrder) {
  const Hypergraph g = graph(3, 6, {{1, 2, 3}, {2, 4, 6}, {4, 5, 6}});
  EXPECT_EQ(hl::induced_subgraph(g, VertexSet{2, 4, 5, 6}), graph(3, 4, {{1, 2, 4}, {2, 3, 4}}));
  EXPECT_EQ(hl::remove_isolated(graph(3, 6, {{2, 4, 6}})), graph(3, 3, {{1, 2, 3}}));
}

TEST(Permute, AppliesAndValidates) {
  const Hypergraph g = graph(3, 4, {{1, 2, 3}});
  EXPECT_EQ(hl::permute(g, {4, 3, 2, 1}), graph(3, 4, {{2, 3, 4}}));
  EXPECT_THROW(hl::permute(g, {1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(hl::permute(g, {1, 1, 2, 3}), std::invalid_argument);
}

TEST(GoodPairs, Examples) {
  std::vector<std::vector<int>> es;
  for (const auto& e : hl::complete(5, 3).edge_lists()) es.push_back(e);
  for (int k = 1; k <= 5; ++k) es.push_back({k, 6, 7});
  const Hypergraph g(3, 7, es);
  const auto pairs = hl::good_pairs(g, VertexSet::range(5));
  EXPECT_EQ(pairs, (std::vector<std::pair<int, int>>{{6, 7}}));
  EXPECT_TRUE(hl::good_pairs(hl::complete(5, 3), VertexSet::range(5)).empty());
  EXPECT_TRUE(hl::good_pairs(hl::o_graph(2), VertexSet{}).empty());
  EXPECT_FALSE(hl::good_pair_partition(hl::o_graph(2), VertexSet{}));
  EXPECT_THROW(hl::good_pairs(hl::o_graph(2), VertexSet{9}), std::out_of_range);
}

TEST(GoodPairs, OddRemainderIsNotAPartition) {
  std::vector<std::vector<int>> es;
  for (const auto& e : hl::complete(5, 3).edge_lists()) es.push_back(e);
  for (int k = 1; k <= 5; ++k) es.push_back({k, 6, 7});
  const Hypergraph g(3, 8, es);
  EXPECT_FALSE(hl::good_pair_partition(g, VertexSet::range(5)));
  EXPECT_FALSE(hl::is_good_graph(g, VertexSet::range(5)));
}

TEST(GoodPairs, DisjointOnConstructedInstances) {
  for (auto [t, s] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 2}}) {
    const Hypergraph g = hl::detail::good_pair_instance(t, s);
    const VertexSet a = VertexSet::range(2 * t - 2);
    ASSERT_TRUE(hl::contains(hl::induced_subgraph(g, a), hl::complete_minus(2 * t - 2, 3)));
    VertexSet used;
    for (auto [x, y] : hl::good_pairs(g, a)) {
      EXPECT_FALSE(a.contains(x));
      EXPECT_FALSE(a.contains(y));
      EXPECT_FALSE(used.contains(x) || used.contains(y));
      used.insert(x);
      used.insert(y);
    }
  }
}

// ---------------------------------------------------------------------------
// Canonical form and orbits
// ---------------------------------------------------------------------------

TEST(Canonical, Examples) {
  auto rng = hl::SplitMix64(5);
  const Hypergraph c = hl::canonical_form(hl::f5());
  for (int i = 0; i < 10; ++i) EXPECT_EQ(hl::canonical_form(hl::permute(hl::f5(), hl::random_permutation(5, rng))), c);
  EXPECT_EQ(hl::canonical_form(hl::complete(4, 3)), hl::complete(4, 3));
  const Hypergraph o3 = hl::o_graph(3);
  EXPECT_EQ(hl::canonical_form(hl::permute(o3, hl::random_permutation(6, rng))),
            hl::canonical_form(hl::permute(o3, hl::random_permutation(6, rng))));
}

TEST(Canonical, InvariantAndIdempotent) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Hypergraph g = hl::testing::random_graph(i, 1, 9, 2, 4, 19);
    auto rng = hl::SplitMix64::stream(19, 5000 + i);
    const Hypergraph c = hl::canonical_form(g);
    EXPECT_EQ(hl::canonical_form(hl::permute(g, hl::random_permutation(g.vertex_count(), rng))), c);
    EXPECT_EQ(hl::canonical_form(c), c);
    if (g.vertex_count() <= 7) EXPECT_TRUE(hl::testing::brute_isomorphic(g, c));
  }
}

TEST(Canonical, IsomorphismAgreesWithBruteForce) {
  for (std::uint64_t i = 0; i < 150; ++i) {
    const Hypergraph a = hl::testing::random_graph(i, 5, 6, 3, 3, 23);
    const Hypergraph b = hl::testing::random_graph(i + 7000, 5, 6, 3, 3, 23);
    if (a.vertex_count() != b.vertex_count() || a.size() != b.size()) continue;
    EXPECT_EQ(hl::are_isomorphic(a, b), hl::testing::brute_isomorphic(a, b)) << hl::to_hg(a) << hl::to_hg(b);
  }
  EXPECT_FALSE(hl::are_isomorphic(hl::complete(4, 3), hl::complete(4, 2)));
}

TEST(Orbits, Examples) {
  EXPECT_EQ(hl::automorphism_orbits(hl::complete(5, 3)), (std::vector<std::vector<int>>{{1, 2, 3, 4, 5}}));
  EXPECT_EQ(hl::automorphism_orbits(hl::star(6)), (std::vector<std::vector<int>>{{1}, {2, 3, 4, 5, 6}}));
  EXPECT_EQ(hl::automorphism_orbits(hl::f5()), hl::testing::brute_orbits(hl::f5()));
  EXPECT_TRUE(hl::automorphism_orbits(Hypergraph::empty(3, 0)).empty());
}

TEST(Orbits, MatchBruteForce) {
  for (std::uint64_t i = 0; i < 80; ++i) {
    const Hypergraph g = hl::testing::random_graph(i, 1, 7, 2, 3, 29);
    EXPECT_EQ(hl::automorphism_orbits(g), hl::testing::brute_orbits(g)) << hl::to_hg(g);
  }
  for (const auto& g : {hl::fano(), hl::o_graph(3), hl::linear_cycle(3), hl::linear_path(3), hl::s2t(4)})
    EXPECT_EQ(hl::automorphism_orbits(g), hl::testing::brute_orbits(g)) << hl::to_hg(g);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

TEST(Io, TextFormat) {
  const Hypergraph g = hl::parse_hg("# comment\n3 5\n\n3 4 5\n1 2 3\n  # another\n");
  EXPECT_EQ(g, graph(3, 5, {{1, 2, 3}, {3, 4, 5}}));
  EXPECT_EQ(hl::to_hg(g), "3 5\n1 2 3\n3 4 5\n");
  EXPECT_EQ(hl::to_hg(g, "F"), "# F\n3 5\n1 2 3\n3 4 5\n");
}

TEST(Io, ParseErrors) {
  for (const char* bad : {"", "# only comments\n", "3\n", "3 5\n1 2\n", "3 5\n1 2 6\n", "3 5\n1 1 2\n", "3 5\n1 2 3\n3 2 1\n",
                          "3 5\n1 2 x\n", "3 5\n1 2 3.5\n", "3 70\n", "-1 4\n", "{\"r\": 3}", "{\"r\": 3, \"n\": 4, \"edges\": [[1, 2, 9]]}",
                          "{\"r\": 3, \"n\": 4, \"edges\": [[1, 2]]}", "{broken"})
    EXPECT_THROW(hl::parse_hypergraph(bad), hl::ParseError) << bad;
  EXPECT_THROW(hl::read_hypergraph("/nonexistent/file.hg"), hl::ParseError);
}

TEST(Io, JsonMirror) {
  const Hypergraph g = hl::fano();
  const auto j = hl::to_json(g);
  EXPECT_EQ(j.at("r"), 3);
  EXPECT_EQ(j.at("n"), 7);
  EXPECT_EQ(hl::parse_hypergraph(j.dump()), g);
}

TEST(Io, RoundTrip) {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Hypergraph g = hl::testing::random_graph(i, 0, 10, 1, 4, 31);
    EXPECT_EQ(hl::parse_hypergraph(hl::to_hg(g)), g);
    EXPECT_EQ(hl::parse_hypergraph(hl::to_json(g).dump()), g);
  }
}

// ---------------------------------------------------------------------------
// Rationals, RNG, executor
// ---------------------------------------------------------------------------

TEST(Rational, ParseFormatApproximate) {
  EXPECT_EQ(hl::to_string(hl::parse_rational("4/50")), "2/25");
  EXPECT_EQ(hl::to_string(hl::parse_rational("3")), "3/1");
  EXPECT_THROW(hl::parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(hl::parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(hl::make_rational(1, 0), std::invalid_argument);
  EXPECT_EQ(hl::approximate(0.08, 10000), hl::make_rational(2, 25));
  EXPECT_EQ(hl::approximate(8.0 / 135, 10000), hl::make_rational(8, 135));
  EXPECT_EQ(hl::approximate(-0.25, 10), hl::make_rational(-1, 4));
  EXPECT_THROW(hl::approximate(std::nan(""), 10), std::invalid_argument);
}

TEST(Rng, StreamsAreReproducible) {
  auto a = hl::SplitMix64::stream(42, 3), b = hl::SplitMix64::stream(42, 3), c = hl::SplitMix64::stream(42, 4);
  const auto x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
  auto d = hl::SplitMix64(1);
  const auto w = d.dirichlet(6);
  double sum = 0;
  for (double v : w) {
    EXPECT_GT(v, 0);
    sum += v;
  }
  EXPECT_NEAR(sum, 1, 1e-12);
}

TEST(Executor, MapIsIndependentOfWorkerCount) {
  auto f = [](std::size_t i) { return static_cast<long>(i * i % 97); };
  const auto one = hl::Executor(1).map<long>(500, f);
  const auto many = hl::Executor(8).map<long>(500, f);
  EXPECT_EQ(one, many);
  std::atomic<int> calls{0};
  hl::Executor(3).for_each_index(100, [&](std::size_t) { ++calls; });
  EXPECT_EQ(calls.load(), 100);
  EXPECT_EQ(hl::Executor(0).jobs(), 1U);
}
