#pragma once

#include <vector>

#include "hbcast/hypergraph.hpp"
#include "hbcast/topology.hpp"

namespace hbcast::test {

// Six users, edges {1,2,3},{2,3},{1,4},{4,5},{3,5,6}, all unit weight.
inline Hypergraph sample() {
  return Hypergraph::over(6, {{{1, 2, 3}, 1}, {{2, 3}, 1}, {{1, 4}, 1}, {{4, 5}, 1}, {{3, 5, 6}, 1}});
}

// sample without {1,2,3}.
inline Hypergraph sample_tree() {
  return Hypergraph::over(6, {{{2, 3}, 1}, {{1, 4}, 1}, {{4, 5}, 1}, {{3, 5, 6}, 1}});
}

inline StorageTopology sample_topology() { return from_hypergraph(sample()); }
inline StorageTopology sample_tree_topology() { return from_hypergraph(sample_tree()); }

// A1={1,2}, A2={2,3}, A3={1,3}: segment 1 on {1,3}, 2 on {1,2}, 3 on {2,3}.
inline StorageTopology triangle_topology() { return StorageTopology(3, {{1, 2}, {2, 3}, {1, 3}}); }

// Four users in two halves: {1,2} share segments 1,2 and {3,4} share segment 3.
inline StorageTopology disconnected_topology() {
  return StorageTopology(3, {{1, 2}, {1, 2}, {3}, {3}});
}

}  // namespace hbcast::test
