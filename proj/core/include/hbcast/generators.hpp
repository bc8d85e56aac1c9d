#pragma once

#include <cstddef>
#include <cstdint>

#include "hbcast/hypergraph.hpp"
#include "hbcast/topology.hpp"

namespace hbcast {

struct GenConfig {
  std::size_t num_users = 6;
  std::size_t num_segments = 12;
  std::size_t max_edge_size = 3;
  std::size_t extra_edges = 0;
  std::uint64_t seed = 0;
};

struct GeneratedInstance {
  StorageTopology topology;
  Hypergraph graph;
  PlacementMap placement;
};

/// Random quasi-tree with V users and W segments.
///
/// Grows a Berge-acyclic skeleton: each new edge takes one random vertex from each of
/// 2..r distinct components, so every edge merges components and the result is a tree.
/// Then up to V/2 overlay attempts each widen an edge by a vertex from a neighbouring
/// edge; an attempt is kept only if the result is still a quasi-tree (this is how
/// cyclic quasi-trees such as {a,b,c},{a,b,d} arise). Every edge gets one segment,
/// the remaining W - |E| segments land on uniformly chosen edges, and segment ids are
/// shuffled.
///
/// Throws InvalidInput for V < 3, r outside [2, V-1], or when W is smaller than the
/// edge count after the retry budget is spent. extra_edges is ignored.
GeneratedInstance random_quasi_tree(const GenConfig& cfg);

/// Adds k edges over vertices of connected h, each carrying one fresh segment
/// (ids W+1, W+2, ...). Every added edge is redundant, so for k >= 1 the result is
/// connected but not a quasi-tree. Edge sizes are uniform in [2, min(max_edge_size,
/// V-1)]; vertex sets already present are redrawn.
GeneratedInstance add_cycle_edges(const Hypergraph& h, const PlacementMap& placement,
                                  std::size_t k, std::uint64_t seed,
                                  std::size_t max_edge_size = 2);

/// Quasi-tree with W - k segments plus k cycle edges: a connected instance with
/// exactly W segments that is not a quasi-tree when k >= 1.
GeneratedInstance random_instance(const GenConfig& cfg);

}  // namespace hbcast
