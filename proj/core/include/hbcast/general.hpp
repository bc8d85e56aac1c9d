#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hbcast/broadcast_sim.hpp"
#include "hbcast/dbqt.hpp"
#include "hbcast/hypergraph.hpp"
#include "hbcast/topology.hpp"

namespace hbcast {

struct Reduction {
  Hypergraph kept;
  std::vector<Edge> removed;
  Weight kept_delta = 0;
};

/// Drops redundant edges (whose removal keeps the hypergraph connected), lightest
/// first with ties in lexicographic order, until every remaining edge is a bridge.
Reduction spanning_quasi_tree(const Hypergraph& h);

struct GeneralRunResult {
  std::size_t total = 0;        // dbqt + completion
  std::size_t dbqt = 0;
  std::size_t completion = 0;
  std::size_t lower_bound = 0;  // W - Δ of the full hypergraph
  Weight min_cut = 0;
  bool connected = false;
  bool complete = false;
};

struct GeneralRun {
  GeneralRunResult result;
  BroadcastSchedule schedule;
  /// DBQT plan on the kept quasi-tree; empty when the hypergraph is disconnected.
  std::optional<DbqtPlan> plan;
  std::optional<Reduction> reduction;
};

/// Connected: DBQT on a spanning quasi-tree using everyone's full storage, then an
/// uncoded sweep where the lowest-id holder sends each segment some user still lacks.
/// Disconnected: every segment once, uncoded. The run is simulated; `complete`
/// reports whether every user reached rank W.
GeneralRun dbqt_general(const StorageTopology& topology);

/// W - min over vertices of the weighted degree (the vertex-star bound).
std::size_t cde_bound(const Hypergraph& h);

struct ExperimentConfig {
  std::vector<std::size_t> users;
  std::vector<std::size_t> segments;
  std::size_t trials = 100;
  std::size_t extra_edges = 1;
  std::size_t max_edge_size = 3;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct ExperimentRow {
  std::size_t users = 0;
  std::size_t segments = 0;
  std::size_t trials = 0;
  double mean_broadcasts = 0;
  std::size_t min_broadcasts = 0;
  std::size_t max_broadcasts = 0;
  double mean_lower_bound = 0;
  double mean_gap = 0;                       // mean of T - (W - Δ)
  std::size_t violations = 0;                // runs outside W - Δ <= T <= W, or incomplete
  std::size_t dominance_violations = 0;      // runs with W - Δ < cde_bound
};

/// One row per (V, W) pair of the cartesian grid, in grid order. Trial i of cell
/// (V, W) uses seed derive_seed({seed, V, W, i}); results do not depend on `threads`.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

}  // namespace hbcast
