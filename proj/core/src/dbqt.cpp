#include "hbcast/dbqt.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hbcast/errors.hpp"

namespace hbcast {

namespace {

// Incident edge indices of a vertex, as a membership vector over edges().
using EdgeMask = std::vector<bool>;

bool is_strict_subset(const EdgeMask& a, const EdgeMask& b) {
  bool smaller = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
    if (b[i] && !a[i]) smaller = true;
  }
  return smaller;
}

std::vector<std::size_t> preference_rank(const Hypergraph& h, std::span<const VertexId> preference) {
  std::vector<std::size_t> rank(VertexSet::kMaxVertex + 1, 0);
  if (preference.empty()) {
    for (VertexId v : h.vertices()) rank[v] = v;
    return rank;
  }
  VertexSet listed;
  for (std::size_t i = 0; i < preference.size(); ++i) {
    const VertexId v = preference[i];
    if (!h.vertices().contains(v) || listed.contains(v)) {
      throw InvalidInput("vertex preference must be a permutation of the vertex set");
    }
    listed.insert(v);
    rank[v] = i;
  }
  if (listed != h.vertices()) {
    throw InvalidInput("vertex preference must be a permutation of the vertex set");
  }
  return rank;
}

// Members of `candidates` whose incident set is not strictly contained in another
// candidate's; returns the preferred one.
VertexId pick_maximal(const std::vector<VertexId>& candidates, const std::vector<EdgeMask>& incident,
                      const std::vector<std::size_t>& rank) {
  VertexId best = 0;
  for (VertexId v : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](VertexId o) {
      return o != v && is_strict_subset(incident[v], incident[o]);
    });
    if (dominated) continue;
    if (best == 0 || rank[v] < rank[best]) best = v;
  }
  return best;
}

}  // namespace

RepresentativeSequence ordered_representatives(const Hypergraph& h,
                                               std::span<const VertexId> preference) {
  if (!is_connected(h)) throw InvalidInput("ordered_representatives: hypergraph is disconnected");
  const auto rank = preference_rank(h, preference);
  const std::size_t m = h.num_edges();

  std::vector<EdgeMask> incident(VertexSet::kMaxVertex + 1, EdgeMask(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (VertexId v : h.edges()[i].vertices) incident[v][i] = true;
  }

  RepresentativeSequence seq;
  EdgeMask covered(m, false);
  VertexSet chosen;
  auto take = [&](VertexId v) {
    seq.vertices.push_back(v);
    chosen.insert(v);
    std::vector<VertexSet> cov;
    for (std::size_t i = 0; i < m; ++i) {
      if (incident[v][i]) covered[i] = true;
      if (covered[i]) cov.push_back(h.edges()[i].vertices);
    }
    seq.covered.push_back(std::move(cov));
  };

  take(pick_maximal(h.vertices().to_vector(), incident, rank));

  while (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    VertexSet touched;
    for (std::size_t i = 0; i < m; ++i) {
      if (covered[i]) touched |= h.edges()[i].vertices;
    }
    std::vector<VertexId> eligible;
    for (VertexId v : touched - chosen) {
      bool adds = false;
      for (std::size_t i = 0; i < m && !adds; ++i) adds = incident[v][i] && !covered[i];
      if (adds) eligible.push_back(v);
    }
    if (eligible.empty()) {
      throw InvalidInput("ordered_representatives: no eligible vertex; hypergraph is disconnected");
    }
    take(pick_maximal(eligible, incident, rank));
  }
  return seq;
}

Matrix vandermonde(std::size_t n, std::size_t m) {
  if (n < 1 || n >= FieldElement::kModulus) throw InvalidInput("vandermonde: need 1 <= n < p");
  if (m > n) throw InvalidInput("vandermonde: more columns than rows");
  Matrix out(n, m);
  for (std::size_t k = 1; k <= n; ++k) {
    FieldElement power(1);
    const FieldElement node(k);
    for (std::size_t j = 0; j < m; ++j) {
      out(k - 1, j) = power;
      power *= node;
    }
  }
  return out;
}

std::vector<PhasePlan> plan_phases(const StorageTopology& topology, const Hypergraph& tree,
                                   const PlacementMap& placement,
                                   const RepresentativeSequence& reps) {
  if (!is_quasi_tree(tree)) throw InvalidInput("plan_phases: hypergraph is not a quasi-tree");
  if (tree.num_edges() == 0) throw InvalidInput("plan_phases: quasi-tree has no edges");
  if (reps.vertices.empty()) throw InvalidInput("plan_phases: empty representative sequence");

  Weight delta = tree.edges().front().weight;
  for (const Edge& e : tree.edges()) delta = std::min(delta, e.weight);

  std::vector<bool> held_before(topology.num_segments() + 1, false);
  VertexSet prefix;
  std::vector<PhasePlan> phases;
  for (std::size_t i = 0; i < reps.vertices.size(); ++i) {
    const VertexId v = reps.vertices[i];
    PhasePlan phase;
    phase.index = i + 1;
    phase.representative = v;

    if (i > 0) {
      for (const Edge& e : tree.edges()) {
        if (e.vertices.contains(v) && e.vertices.intersects(prefix)) {
          phase.bridge_edge = e.vertices;
          break;
        }
      }
      if (!phase.bridge_edge) {
        throw InvalidInput("plan_phases: representative " + std::to_string(v) +
                           " shares no edge with earlier representatives");
      }
      auto it = placement.find(*phase.bridge_edge);
      if (it == placement.end() || it->second.size() < delta) {
        throw InvalidInput("plan_phases: placement lacks " + std::to_string(delta) +
                           " segments on edge " + to_string(*phase.bridge_edge));
      }
      std::vector<SegmentId> on_edge = it->second;
      std::sort(on_edge.begin(), on_edge.end());
      phase.seed_set.assign(on_edge.begin(), on_edge.begin() + static_cast<std::ptrdiff_t>(delta));
    }

    phase.block = phase.seed_set;
    for (SegmentId s : topology.holdings(v)) {
      if (!held_before[s]) phase.block.push_back(s);
    }
    std::sort(phase.block.begin(), phase.block.end());
    if (std::adjacent_find(phase.block.begin(), phase.block.end()) != phase.block.end()) {
      throw InvalidInput("plan_phases: seed set overlaps new segments in phase " +
                         std::to_string(i + 1));
    }
    if (phase.block.size() < delta) {
      throw InvalidInput("plan_phases: phase " + std::to_string(i + 1) + " block smaller than Δ");
    }
    phase.broadcast_count = phase.block.size() - delta;
    phase.coding_matrix = vandermonde(phase.block.size(), phase.broadcast_count);

    for (SegmentId s : topology.holdings(v)) held_before[s] = true;
    prefix.insert(v);
    phases.push_back(std::move(phase));
  }
  return phases;
}

BroadcastSchedule emit_schedule(const StorageTopology& topology,
                                const std::vector<PhasePlan>& phases) {
  BroadcastSchedule schedule;
  for (const PhasePlan& phase : phases) {
    for (std::size_t tau = 0; tau < phase.broadcast_count; ++tau) {
      const FieldVector coeffs = phase.coding_matrix.column(tau);
      schedule.push_back(coded_broadcast(topology, schedule.size(), phase.representative,
                                         phase.block, coeffs));
    }
  }
  return schedule;
}

DbqtPlan plan_on_tree(const StorageTopology& topology, const Hypergraph& tree,
                      const PlacementMap& placement, std::span<const VertexId> preference) {
  DbqtPlan plan;
  plan.representatives = ordered_representatives(tree, preference);
  plan.phases = plan_phases(topology, tree, placement, plan.representatives);
  plan.delta = tree.edges().front().weight;
  for (const Edge& e : tree.edges()) plan.delta = std::min(plan.delta, e.weight);
  plan.schedule = emit_schedule(topology, plan.phases);
  return plan;
}

DbqtPlan dbqt_schedule(const StorageTopology& topology, std::span<const VertexId> preference) {
  const StorageHypergraph sh = to_hypergraph(topology);
  if (!sh.uncovered.empty()) {
    throw InvalidInput("dbqt: " + std::to_string(sh.uncovered.size()) +
                       " segment(s) are held by nobody");
  }
  if (!sh.leftovers.empty()) {
    throw InvalidInput("dbqt: " + std::to_string(sh.leftovers.size()) +
                       " segment(s) are held by one user or by every user; use the "
                       "dbqt-general strategy");
  }
  if (!is_connected(sh.graph)) {
    throw InvalidInput("dbqt: hypergraph is disconnected; use the dbqt-general strategy");
  }
  if (!is_quasi_tree(sh.graph)) {
    throw InvalidInput("dbqt: hypergraph is not a quasi-tree; use the dbqt-general strategy");
  }
  return plan_on_tree(topology, sh.graph, sh.placement, preference);
}

bool decodable_with(std::size_t n, std::size_t delta, const std::vector<std::size_t>& held_positions) {
  if (delta > n) throw InvalidInput("decodable_with: Δ exceeds block size");
  if (held_positions.size() != delta) {
    throw InvalidInput("decodable_with: expected " + std::to_string(delta) + " held positions");
  }
  std::set<std::size_t> distinct(held_positions.begin(), held_positions.end());
  if (distinct.size() != held_positions.size()) {
    throw InvalidInput("decodable_with: repeated held position");
  }
  for (std::size_t p : held_positions) {
    if (p < 1 || p > n) throw InvalidInput("decodable_with: held position out of range");
  }
  const Matrix coded = vandermonde(n, n - delta);
  Matrix full(n, n);
  for (std::size_t j = 0; j < delta; ++j) full(held_positions[j] - 1, j) = FieldElement(1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < coded.cols(); ++c) full(r, delta + c) = coded(r, c);
  }
  return !determinant(full).is_zero();
}

}  // namespace hbcast
