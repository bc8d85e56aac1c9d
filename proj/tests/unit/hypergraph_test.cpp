#include <gtest/gtest.h>

#include <map>

#include "convert.hpp"
#include "fixtures.hpp"
#include "hbcast/errors.hpp"
#include "hbcast/generators.hpp"
#include "hbcast/hypergraph.hpp"
#include "hbcast/rng.hpp"
#include "oracles.hpp"

namespace hbcast {
namespace {

using test::sample;
using test::sample_tree;

Hypergraph random_hypergraph(SplitMix64& rng, std::size_t n, std::size_t edges) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < edges; ++i) {
    VertexSet s;
    const std::size_t size = rng.between(2, n - 1);
    while (s.size() < size) s.insert(static_cast<VertexId>(rng.between(1, n)));
    es.push_back({s, rng.between(1, 4)});
  }
  return Hypergraph::over(n, std::move(es));
}

TEST(VertexSet, LexicographicOrder) {
  EXPECT_LT((VertexSet{1, 2, 3}), (VertexSet{1, 4}));
  EXPECT_LT((VertexSet{1, 4}), (VertexSet{2, 3}));
  EXPECT_LT((VertexSet{1, 2}), (VertexSet{1, 2, 3}));
  EXPECT_LT((VertexSet{3, 5, 6}), (VertexSet{4, 5}));
  EXPECT_EQ(to_string(VertexSet{6, 1, 3}), "{1,3,6}");
}

TEST(VertexSet, RangeChecks) {
  VertexSet s;
  EXPECT_THROW(s.insert(0), std::out_of_range);
  EXPECT_THROW(s.insert(65), std::out_of_range);
  s.insert(64);
  EXPECT_TRUE(s.contains(64));
  EXPECT_EQ(VertexSet::interval(2, 4), (VertexSet{2, 3, 4}));
}

TEST(Hypergraph, DuplicateVertexSetsMerge) {
  const Hypergraph h = Hypergraph::over(3, {{{1, 2}, 2}, {{2, 1}, 3}});
  ASSERT_EQ(h.num_edges(), 1U);
  EXPECT_EQ(h.edges()[0].weight, 5U);
  EXPECT_EQ(h.total_weight(), 5U);
}

TEST(Hypergraph, RejectsBadEdges) {
  EXPECT_THROW(Hypergraph::over(3, {{{1}, 1}}), InvalidInput);
  EXPECT_THROW(Hypergraph::over(3, {{{1, 4}, 1}}), InvalidInput);
  EXPECT_THROW(Hypergraph::over(3, {{{1, 2}, 0}}), InvalidInput);
}

TEST(Hypergraph, SampleBasics) {
  const Hypergraph h = sample();
  EXPECT_EQ(h.num_vertices(), 6U);
  EXPECT_EQ(h.num_edges(), 5U);
  EXPECT_EQ(h.total_weight(), 5U);
  EXPECT_EQ(h.edges()[0].vertices, (VertexSet{1, 2, 3}));
  EXPECT_EQ(h.edges()[4].vertices, (VertexSet{4, 5}));
}

// ---- connectivity

TEST(IsConnected, Sample) { EXPECT_TRUE(is_connected(sample())); }

TEST(IsConnected, NoEdges) {
  EXPECT_FALSE(is_connected(Hypergraph::over(3, {})));
  EXPECT_TRUE(is_connected(Hypergraph::over(1, {})));
}

TEST(IsConnected, SampleTreeWithoutV1V4) {
  Hypergraph h = sample_tree();
  h = h.without_edge(*h.find({1, 4}));
  EXPECT_FALSE(is_connected(h));
  EXPECT_EQ(oracle::connected(6, test::plain_edges(h)), false);
  EXPECT_EQ(test::to_set(reachable_from(h, 1)), oracle::bfs_reach(6, test::plain_edges(h), 1));
}

TEST(IsConnected, MatchesBfsOracle) {
  SplitMix64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = rng.between(3, 9);
    const Hypergraph h = random_hypergraph(rng, n, rng.between(0, 5));
    const auto plain = test::plain_edges(h);
    EXPECT_EQ(is_connected(h), oracle::connected(static_cast<unsigned>(n), plain));
    for (VertexId v = 1; v <= n; ++v) {
      EXPECT_EQ(test::to_set(reachable_from(h, v)), oracle::bfs_reach(static_cast<unsigned>(n), plain, v));
    }
  }
}

TEST(Components, OrderedByLowestVertex) {
  const Hypergraph h = Hypergraph::over(5, {{{2, 5}, 1}, {{1, 3}, 1}});
  const auto cs = components(h);
  ASSERT_EQ(cs.size(), 3U);
  EXPECT_EQ(cs[0], (VertexSet{1, 3}));
  EXPECT_EQ(cs[1], (VertexSet{2, 5}));
  EXPECT_EQ(cs[2], (VertexSet{4}));
}

// ---- walks

TEST(ClassifyWalk, SampleCycle) {
  const WalkSequence seq{{2, 3, 2}, {{2, 3}, {1, 2, 3}}};
  EXPECT_EQ(classify_walk(sample(), seq), WalkKind::cycle);
}

TEST(ClassifyWalk, SampleLoosePath) {
  const WalkSequence seq{{1, 4, 5}, {{1, 4}, {4, 5}}};
  EXPECT_EQ(classify_walk(sample(), seq), WalkKind::loose_path);
}

TEST(ClassifyWalk, VertexNotOnEdge) {
  const WalkSequence seq{{1, 2}, {{2, 3}}};
  EXPECT_EQ(classify_walk(sample(), seq), WalkKind::invalid);
}

TEST(ClassifyWalk, EdgeMissingFromGraph) {
  const WalkSequence seq{{1, 2}, {{1, 2}}};
  EXPECT_EQ(classify_walk(sample(), seq), WalkKind::invalid);
}

TEST(ClassifyWalk, MalformedLengths) {
  const WalkSequence seq{{1, 4}, {}};
  EXPECT_EQ(classify_walk(sample(), seq), WalkKind::invalid);
}

TEST(ClassifyWalk, RepeatedEdgeIsWalk) {
  const WalkSequence seq{{1, 4, 1}, {{1, 4}, {1, 4}}};
  EXPECT_EQ(classify_walk(sample(), seq), WalkKind::walk);
}

TEST(ClassifyWalk, PathThatIsNotLoose) {
  // {1,2,3} and {2,3} share two vertices.
  const WalkSequence seq{{1, 2, 3}, {{1, 2, 3}, {2, 3}}};
  EXPECT_EQ(classify_walk(sample(), seq), WalkKind::path);
}

TEST(ClassifyWalk, NonConsecutiveEdgesMeet) {
  // {1,2,3} and {3,5,6} are not consecutive but share v3.
  const WalkSequence seq{{2, 1, 4, 5}, {{1, 2, 3}, {1, 4}, {4, 5}}};
  EXPECT_EQ(classify_walk(sample(), seq), WalkKind::loose_path);
  const WalkSequence seq2{{2, 1, 4, 5, 6}, {{1, 2, 3}, {1, 4}, {4, 5}, {3, 5, 6}}};
  EXPECT_EQ(classify_walk(sample(), seq2), WalkKind::path);
}

TEST(ClassifyWalk, TrivialSequence) {
  EXPECT_EQ(classify_walk(sample(), WalkSequence{{3}, {}}), WalkKind::path);
}

// ---- subhypergraphs

TEST(LargestPartial, SampleV123) {
  const Hypergraph p = largest_partial(sample(), {1, 2, 3});
  ASSERT_EQ(p.num_edges(), 2U);
  EXPECT_TRUE(p.has_edge({1, 2, 3}));
  EXPECT_TRUE(p.has_edge({2, 3}));
  EXPECT_EQ(p.vertices(), (VertexSet{1, 2, 3}));
}

TEST(LargestPartial, WholeVertexSetIsIdentity) {
  EXPECT_EQ(largest_partial(sample(), sample().vertices()), sample());
}

TEST(LargestPartial, SampleV45MatchesFilter) {
  const Hypergraph h = sample();
  const VertexSet sub{4, 5};
  const Hypergraph p = largest_partial(h, sub);
  std::vector<VertexSet> expected;
  for (const Edge& e : h.edges()) {
    if (e.vertices.is_subset_of(sub)) expected.push_back(e.vertices);
  }
  ASSERT_EQ(p.num_edges(), expected.size());
  ASSERT_EQ(expected.size(), 1U);
  EXPECT_EQ(p.edges()[0].vertices, (VertexSet{4, 5}));
}

TEST(LargestPartial, EmptyRejected) { EXPECT_THROW(largest_partial(sample(), {}), InvalidInput); }

TEST(InducedSubhypergraph, SampleV236) {
  const Hypergraph s = induced_subhypergraph(sample(), {2, 3, 6});
  ASSERT_EQ(s.num_edges(), 2U);
  EXPECT_EQ(s.edges()[*s.find({2, 3})].weight, 2U);
  EXPECT_EQ(s.edges()[*s.find({3, 6})].weight, 1U);
}

TEST(InducedSubhypergraph, WholeVertexSetIsIdentity) {
  EXPECT_EQ(induced_subhypergraph(sample(), sample().vertices()), sample());
}

TEST(InducedSubhypergraph, SampleV124MatchesIntersectOracle) {
  const Hypergraph h = sample();
  const VertexSet sub{1, 2, 4};
  std::map<VertexSet, Weight> expected;
  for (const Edge& e : h.edges()) {
    const VertexSet x = e.vertices & sub;
    if (x.size() >= 2) expected[x] += e.weight;
  }
  const Hypergraph s = induced_subhypergraph(h, sub);
  ASSERT_EQ(s.num_edges(), expected.size());
  for (const Edge& e : s.edges()) EXPECT_EQ(expected.at(e.vertices), e.weight);
  EXPECT_EQ(s.edges()[*s.find({1, 2})].weight, 1U);
  EXPECT_EQ(s.edges()[*s.find({1, 4})].weight, 1U);
}

TEST(InducedSubhypergraph, EmptyRejected) { EXPECT_THROW(induced_subhypergraph(sample(), {}), InvalidInput); }

// ---- degree

TEST(Degree, Sample) {
  EXPECT_EQ(degree(sample(), 1), (Degree{2, 2}));
  EXPECT_EQ(degree(sample(), 3), (Degree{3, 3}));
  EXPECT_EQ(degree(sample(), 6), (Degree{1, 1}));
}

TEST(Degree, Isolated) { EXPECT_EQ(degree(Hypergraph::over(3, {{{1, 2}, 4}}), 3), (Degree{0, 0})); }

TEST(Degree, UnknownVertex) { EXPECT_THROW(degree(sample(), 7), InvalidInput); }

TEST(Degree, WeightedCountsWeights) {
  const Hypergraph h = Hypergraph::over(4, {{{1, 2}, 3}, {{1, 3, 4}, 2}});
  EXPECT_EQ(degree(h, 1), (Degree{2, 5}));
}

// ---- cuts

TEST(Cut, SampleV456) {
  const Cut c = cut(sample(), {4, 5, 6});
  EXPECT_EQ(c.weight, 2U);
  ASSERT_EQ(c.crossing_edges.size(), 2U);
  EXPECT_EQ(c.crossing_edges[0].vertices, (VertexSet{1, 4}));
  EXPECT_EQ(c.crossing_edges[1].vertices, (VertexSet{3, 5, 6}));
}

TEST(Cut, SampleV6) { EXPECT_EQ(cut_weight(sample(), {6}), oracle::cut_weight(6, test::plain_edges(sample()), {6})); }

TEST(Cut, SampleV6IsOne) { EXPECT_EQ(cut(sample(), {6}).weight, 1U); }

TEST(Cut, InvalidSeparators) {
  EXPECT_THROW(cut(sample(), {}), InvalidInput);
  EXPECT_THROW(cut(sample(), sample().vertices()), InvalidInput);
  EXPECT_THROW(cut(sample(), {7}), InvalidInput);
}

TEST(Cut, SymmetricAndMatchesOracle) {
  SplitMix64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = rng.between(3, 8);
    const Hypergraph h = random_hypergraph(rng, n, rng.between(1, 6));
    const std::uint64_t mask = rng.between(1, (1ULL << n) - 2);
    const VertexSet x = VertexSet::from_bits(mask);
    EXPECT_EQ(cut_weight(h, x), cut_weight(h, h.vertices() - x));
    EXPECT_EQ(cut_weight(h, x), oracle::cut_weight(static_cast<unsigned>(n), test::plain_edges(h), test::to_set(x)));
  }
}

// ---- min-cut

TEST(MinCut, SampleIsOne) {
  const MinCut m = min_cut(sample());
  EXPECT_EQ(m.capacity, 1U);
  EXPECT_EQ(cut_weight(sample(), m.witness), 1U);
}

TEST(MinCut, DisconnectedIsZero) {
  const Hypergraph h = Hypergraph::over(4, {{{1, 2}, 3}, {{3, 4}, 2}});
  const MinCut m = min_cut(h);
  EXPECT_EQ(m.capacity, 0U);
  EXPECT_EQ(cut_weight(h, m.witness), 0U);
  EXPECT_FALSE(m.witness.empty());
  EXPECT_NE(m.witness, h.vertices());
}

TEST(MinCut, SampleTreeFastPathMatchesExhaustive) {
  const Hypergraph h = sample_tree();
  EXPECT_EQ(min_cut(h).capacity, 1U);
  EXPECT_EQ(min_cut_exhaustive(h).capacity, 1U);
  EXPECT_EQ(min_cut_quasi_tree(h).capacity, 1U);
  EXPECT_EQ(oracle::min_cut(6, test::plain_edges(h)), 1U);
}

TEST(MinCut, FewerThanTwoVertices) { EXPECT_THROW(min_cut(Hypergraph::over(1, {})), InvalidInput); }

TEST(MinCut, CapacityGuard) {
  std::vector<Edge> es;
  for (VertexId v = 1; v < 26; ++v) es.push_back({{v, v + 1}, 1});
  es.push_back({{1, 26}, 1});  // a cycle, so no fast path
  const Hypergraph h = Hypergraph::over(26, es);
  EXPECT_THROW(min_cut(h), CapacityExceeded);
  es.pop_back();
  EXPECT_EQ(min_cut(Hypergraph::over(26, es)).capacity, 1U);
}

TEST(MinCut, MatchesOracleAndWitness) {
  SplitMix64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = rng.between(3, 8);
    const Hypergraph h = random_hypergraph(rng, n, rng.between(1, 7));
    const MinCut m = min_cut(h);
    EXPECT_EQ(m.capacity, oracle::min_cut(static_cast<unsigned>(n), test::plain_edges(h)));
    EXPECT_EQ(cut_weight(h, m.witness), m.capacity);
  }
}

TEST(MinCut, EdgeRemovalNeverIncreases) {
  SplitMix64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = rng.between(3, 8);
    const Hypergraph h = random_hypergraph(rng, n, rng.between(1, 7));
    const Weight before = min_cut(h).capacity;
    for (std::size_t e = 0; e < h.num_edges(); ++e) EXPECT_LE(min_cut(h.without_edge(e)).capacity, before);
  }
}

// ---- quasi-trees

TEST(IsQuasiTree, SampleIsNot) { EXPECT_FALSE(is_quasi_tree(sample())); }
TEST(IsQuasiTree, SampleTreeIs) { EXPECT_TRUE(is_quasi_tree(sample_tree())); }

TEST(IsQuasiTree, CyclicQuasiTree) {
  const Hypergraph h = Hypergraph::over(4, {{{1, 2, 3}, 1}, {{1, 2, 4}, 1}});
  EXPECT_TRUE(is_quasi_tree(h));
  const WalkSequence cycle{{1, 2, 1}, {{1, 2, 3}, {1, 2, 4}}};
  EXPECT_EQ(classify_walk(h, cycle), WalkKind::cycle);
}

TEST(IsQuasiTree, DisconnectedIsNot) { EXPECT_FALSE(is_quasi_tree(Hypergraph::over(3, {}))); }

TEST(IsQuasiTree, DetectorMatchesEdgeRemovalOracle) {
  SplitMix64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = rng.between(3, 8);
    const Hypergraph h = random_hypergraph(rng, n, rng.between(1, 6));
    const auto plain = test::plain_edges(h);
    bool expected = oracle::connected(static_cast<unsigned>(n), plain);
    for (std::size_t e = 0; expected && e < plain.size(); ++e) {
      auto rest = plain;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(e));
      if (oracle::connected(static_cast<unsigned>(n), rest)) expected = false;
    }
    EXPECT_EQ(is_quasi_tree(h), expected);
    if (expected) {
      EXPECT_EQ(min_cut_quasi_tree(h).capacity, oracle::min_cut(static_cast<unsigned>(n), plain));
    }
  }
}

TEST(IsQuasiTree, GeneratedTreesPass) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenConfig cfg;
    cfg.num_users = 3 + seed % 8;
    cfg.num_segments = 20;
    cfg.max_edge_size = 2;
    cfg.seed = seed;
    EXPECT_TRUE(is_quasi_tree(random_quasi_tree(cfg).graph));
  }
}

// ---- edge partition

TEST(PartitionEdges, SampleV456) {
  const EdgePartition p = partition_edges(sample(), {4, 5, 6});
  EXPECT_EQ(total_weight(p.cut), 2U);
  EXPECT_EQ(total_weight(p.inside), 1U);
  ASSERT_EQ(p.inside.size(), 1U);
  EXPECT_EQ(p.inside[0].vertices, (VertexSet{4, 5}));
  EXPECT_EQ(total_weight(p.outside), 2U);
  EXPECT_EQ(total_weight(p.cut) + total_weight(p.inside) + total_weight(p.outside), 5U);
}

TEST(PartitionEdges, NoInternalEdges) {
  const EdgePartition p = partition_edges(sample(), {6});
  EXPECT_TRUE(p.inside.empty());
}

TEST(PartitionEdges, InvalidSeparator) { EXPECT_THROW(partition_edges(sample(), {}), InvalidInput); }

TEST(PartitionEdges, RandomPairs) {
  SplitMix64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = rng.between(3, 9);
    const Hypergraph h = random_hypergraph(rng, n, rng.between(1, 8));
    const VertexSet x = VertexSet::from_bits(rng.between(1, (1ULL << n) - 2));
    const EdgePartition p = partition_edges(h, x);
    std::map<VertexSet, int> seen;
    for (const auto* part : {&p.cut, &p.inside, &p.outside}) {
      for (const Edge& e : *part) ++seen[e.vertices];
    }
    EXPECT_EQ(seen.size(), h.num_edges());
    for (const auto& [k, count] : seen) EXPECT_EQ(count, 1) << to_string(k);
    for (const Edge& e : p.inside) EXPECT_TRUE(e.vertices.is_subset_of(x));
    for (const Edge& e : p.outside) EXPECT_FALSE(e.vertices.intersects(x));
    EXPECT_EQ(total_weight(p.cut), cut_weight(h, x));
    EXPECT_EQ(total_weight(p.cut) + total_weight(p.inside) + total_weight(p.outside), h.total_weight());
  }
}

}  // namespace
}  // namespace hbcast
