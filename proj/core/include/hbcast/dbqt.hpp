#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hbcast/broadcast_sim.hpp"
#include "hbcast/field.hpp"
#include "hbcast/hypergraph.hpp"
#include "hbcast/topology.hpp"

namespace hbcast {

/// Broadcasting order for a quasi-tree: every prefix induces a connected
/// subhypergraph and the incident edges of all members cover the edge set.
struct RepresentativeSequence {
  std::vector<VertexId> vertices;
  /// covered[i]: edges covered by vertices[0..i], in edge order.
  std::vector<std::vector<VertexSet>> covered;
};

/// Greedy ordering:
///  1. start from the lowest-id vertex whose incident edge set is not a strict subset
///     of any other vertex's;
///  2. among vertices outside the sequence that lie on a covered edge and have at least
///     one uncovered incident edge, keep those whose incident edge set is not a strict
///     subset of another such candidate's, and append the lowest id;
///  3. repeat until every edge is covered.
/// Throws InvalidInput when h is disconnected.
///
/// Ties go to the vertex listed first in `preference` (a permutation of h's vertices);
/// an empty preference means ascending id.
RepresentativeSequence ordered_representatives(const Hypergraph& h,
                                               std::span<const VertexId> preference = {});

struct PhasePlan {
  std::size_t index = 0;  // 1-based
  VertexId representative = 0;
  std::optional<VertexSet> bridge_edge;  // absent for phase 1
  std::vector<SegmentId> seed_set;       // Δ segments of the bridge edge
  std::vector<SegmentId> block;          // Z_i, ascending
  Matrix coding_matrix;                  // |Z_i| x (|Z_i| - Δ)
  std::size_t broadcast_count = 0;
};

struct DbqtPlan {
  Weight delta = 0;
  RepresentativeSequence representatives;
  std::vector<PhasePlan> phases;
  BroadcastSchedule schedule;
};

/// n x m matrix with entry (k, j) = k^j for k = 1..n, j = 0..m-1 (1-based rows).
/// Requires 1 <= n < p and m <= n.
Matrix vandermonde(std::size_t n, std::size_t m);

/// Phase blocks for quasi-tree `tree` under the storage in `topology`.
///
/// Phase 1 broadcasts all of A_{v1}. Phase i > 1 picks the lexicographically smallest
/// edge that contains v_i and meets {v_1..v_{i-1}}, seeds the block with the Δ lowest
/// segments of that edge and adds the segments of v_i not held by earlier
/// representatives. Δ is the lightest edge weight of `tree`. Throws InvalidInput when
/// `tree` is not a quasi-tree.
std::vector<PhasePlan> plan_phases(const StorageTopology& topology, const Hypergraph& tree,
                                   const PlacementMap& placement,
                                   const RepresentativeSequence& reps);

/// Concatenates phase broadcasts: slot τ of phase i sends Z_i times column τ of M_i
/// from v_i.
BroadcastSchedule emit_schedule(const StorageTopology& topology,
                                const std::vector<PhasePlan>& phases);

/// Representatives, phases and schedule for `tree`, which may be a spanning
/// quasi-tree of the topology's hypergraph rather than the whole of it.
DbqtPlan plan_on_tree(const StorageTopology& topology, const Hypergraph& tree,
                      const PlacementMap& placement, std::span<const VertexId> preference = {});

/// Full planner for a topology whose hypergraph is a connected quasi-tree with every
/// segment on an edge. The schedule has exactly W - Δ broadcasts.
/// Throws InvalidInput (naming the general planner) for anything else.
DbqtPlan dbqt_schedule(const StorageTopology& topology, std::span<const VertexId> preference = {});

/// Whether a receiver holding the Δ block positions `held_positions` (1-based) can
/// decode a block of size n from the n - Δ coded columns, i.e. whether
/// [unit columns at held positions | vandermonde(n, n - Δ)] is nonsingular.
bool decodable_with(std::size_t n, std::size_t delta, const std::vector<std::size_t>& held_positions);

}  // namespace hbcast
