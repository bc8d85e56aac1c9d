#include "hbcast/generators.hpp"

#include <algorithm>
#include <string>

#include "hbcast/errors.hpp"
#include "hbcast/rng.hpp"

namespace hbcast {

namespace {

constexpr int kRetryBudget = 64;

void check_config(const GenConfig& cfg) {
  if (cfg.num_users < 3) throw InvalidInput("generator: need at least 3 users");
  if (cfg.num_users > VertexSet::kMaxVertex) throw InvalidInput("generator: at most 64 users");
  if (cfg.max_edge_size < 2 || cfg.max_edge_size > cfg.num_users - 1) {
    throw InvalidInput("generator: max edge size must lie in [2, V-1]");
  }
  if (cfg.num_segments < 1) throw InvalidInput("generator: need at least one segment");
}

// Berge-acyclic skeleton: every edge joins distinct components, one vertex from each.
std::vector<VertexSet> grow_tree(std::size_t num_users, std::size_t max_edge_size, SplitMix64& rng) {
  std::vector<std::vector<VertexId>> comps;
  for (VertexId v = 1; v <= num_users; ++v) comps.push_back({v});
  std::vector<VertexSet> edges;
  while (comps.size() > 1) {
    const std::size_t s = rng.between(2, std::min(max_edge_size, comps.size()));
    std::vector<std::size_t> order(comps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);
    order.resize(s);
    std::sort(order.begin(), order.end());

    VertexSet edge;
    std::vector<VertexId> merged;
    for (std::size_t idx : order) {
      const auto& comp = comps[idx];
      edge.insert(comp[rng.below(comp.size())]);
      merged.insert(merged.end(), comp.begin(), comp.end());
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(*it));
    }
    comps.push_back(std::move(merged));
    edges.push_back(edge);
  }
  return edges;
}

Hypergraph unit_graph(std::size_t num_users, const std::vector<VertexSet>& edges) {
  std::vector<Edge> es;
  for (VertexSet e : edges) es.push_back({e, 1});
  return Hypergraph::over(num_users, std::move(es));
}

// Widens random edges by a neighbouring vertex while quasi-treeness survives.
void overlay(std::size_t num_users, std::size_t max_edge_size, std::vector<VertexSet>& edges,
             SplitMix64& rng) {
  const std::size_t attempts = num_users / 2;
  for (std::size_t a = 0; a < attempts; ++a) {
    if (rng.below(2) == 0) continue;
    const std::size_t pick = rng.below(edges.size());
    const VertexSet e = edges[pick];
    if (e.size() >= max_edge_size) continue;
    VertexSet around;
    for (VertexSet f : edges) {
      if (f.intersects(e)) around |= f;
    }
    const std::vector<VertexId> options = (around - e).to_vector();
    if (options.empty()) continue;
    VertexSet widened = e;
    widened.insert(options[rng.below(options.size())]);
    if (std::find(edges.begin(), edges.end(), widened) != edges.end()) continue;
    std::vector<VertexSet> trial = edges;
    trial[pick] = widened;
    if (is_quasi_tree(unit_graph(num_users, trial))) edges = std::move(trial);
  }
}

}  // namespace

GeneratedInstance random_quasi_tree(const GenConfig& cfg) {
  check_config(cfg);
  const std::size_t V = cfg.num_users;
  const std::size_t W = cfg.num_segments;
  const std::size_t min_edges = (V - 1 + cfg.max_edge_size - 2) / (cfg.max_edge_size - 1);
  if (W < min_edges) {
    throw InvalidInput("generator: W=" + std::to_string(W) + " is below the minimum edge count " +
                       std::to_string(min_edges) + " for V=" + std::to_string(V) +
                       ", r=" + std::to_string(cfg.max_edge_size));
  }

  SplitMix64 rng(cfg.seed);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    std::vector<VertexSet> edges = grow_tree(V, cfg.max_edge_size, rng);
    overlay(V, cfg.max_edge_size, edges, rng);
    if (edges.size() > W) continue;
    std::sort(edges.begin(), edges.end());

    std::vector<std::size_t> weight(edges.size(), 1);
    for (std::size_t extra = W - edges.size(); extra > 0; --extra) ++weight[rng.below(edges.size())];

    std::vector<SegmentId> ids(W);
    for (std::size_t i = 0; i < W; ++i) ids[i] = static_cast<SegmentId>(i + 1);
    rng.shuffle(ids);

    PlacementMap placement;
    std::vector<Edge> graph_edges;
    std::size_t next = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::vector<SegmentId> segs(ids.begin() + static_cast<std::ptrdiff_t>(next),
                                  ids.begin() + static_cast<std::ptrdiff_t>(next + weight[i]));
      next += weight[i];
      std::sort(segs.begin(), segs.end());
      placement.emplace(edges[i], std::move(segs));
      graph_edges.push_back({edges[i], weight[i]});
    }
    Hypergraph graph = Hypergraph::over(V, std::move(graph_edges));
    if (!is_quasi_tree(graph)) continue;
    StorageTopology topology = from_hypergraph(graph, placement);
    return {std::move(topology), std::move(graph), std::move(placement)};
  }
  throw InvalidInput("generator: retry budget exhausted (W=" + std::to_string(W) +
                     " too small for the drawn edge counts)");
}

GeneratedInstance add_cycle_edges(const Hypergraph& h, const PlacementMap& placement,
                                  std::size_t k, std::uint64_t seed, std::size_t max_edge_size) {
  if (k == 0) return {from_hypergraph(h, placement), h, placement};
  if (!is_connected(h)) throw InvalidInput("add_cycle_edges: hypergraph must be connected");
  const std::size_t V = h.num_vertices();
  if (V < 3) throw InvalidInput("add_cycle_edges: need at least 3 vertices");
  const std::size_t largest = std::min(std::max<std::size_t>(max_edge_size, 2), V - 1);

  SplitMix64 rng(seed);
  std::vector<Edge> edges(h.edges().begin(), h.edges().end());
  PlacementMap out_placement = placement;
  SegmentId next = static_cast<SegmentId>(h.total_weight());
  const std::vector<VertexId> all = h.vertices().to_vector();

  for (std::size_t added = 0; added < k; ++added) {
    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
      const std::size_t s = rng.between(2, largest);
      std::vector<VertexId> pool = all;
      rng.shuffle(pool);
      pool.resize(s);
      const VertexSet e = VertexSet::from_ids(pool);
      if (out_placement.contains(e)) continue;
      edges.push_back({e, 1});
      out_placement.emplace(e, std::vector<SegmentId>{++next});
      placed = true;
    }
    if (!placed) throw InvalidInput("add_cycle_edges: no free vertex set left for a redundant edge");
  }
  Hypergraph graph(h.vertices(), std::move(edges));
  StorageTopology topology = from_hypergraph(graph, out_placement);
  return {std::move(topology), std::move(graph), std::move(out_placement)};
}

GeneratedInstance random_instance(const GenConfig& cfg) {
  if (cfg.extra_edges >= cfg.num_segments) {
    throw InvalidInput("generator: extra edges must leave at least one segment for the quasi-tree");
  }
  GenConfig base = cfg;
  base.num_segments = cfg.num_segments - cfg.extra_edges;
  GeneratedInstance qt = random_quasi_tree(base);
  if (cfg.extra_edges == 0) return qt;
  return add_cycle_edges(qt.graph, qt.placement, cfg.extra_edges,
                         derive_seed({cfg.seed, 0x6379636c65ULL}), cfg.max_edge_size);
}

}  // namespace hbcast
