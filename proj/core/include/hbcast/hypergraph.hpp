#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hbcast/vertex_set.hpp"

namespace hbcast {

using Weight = std::uint64_t;

struct Edge {
  VertexSet vertices;
  Weight weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted hypergraph over an explicit vertex set.
///
/// Edges are keyed by their vertex set: constructing with two edges over the same set
/// merges them into one edge carrying the summed weight. Edges are kept sorted
/// lexicographically by vertex set. Every edge has at least two vertices, all inside the
/// vertex set, and a positive weight. The stricter "|e| < V" storage-model bound is
/// enforced where hypergraphs are built from storage (see topology.hpp); derived
/// hypergraphs such as induced subhypergraphs may legitimately contain an edge equal to
/// their whole vertex set.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(VertexSet vertices, std::vector<Edge> edges);

  /// Vertex set {1, ..., num_vertices}.
  static Hypergraph over(std::size_t num_vertices, std::vector<Edge> edges);

  VertexSet vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  Weight total_weight() const { return total_weight_; }

  /// Index into edges() of the edge with exactly this vertex set.
  std::optional<std::size_t> find(VertexSet e) const;
  bool has_edge(VertexSet e) const { return find(e).has_value(); }

  /// H[v]: edges containing v, in edge order.
  std::vector<Edge> incident(VertexId v) const;

  /// Same vertex set, edge `index` dropped.
  Hypergraph without_edge(std::size_t index) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  VertexSet vertices_;
  std::vector<Edge> edges_;
  Weight total_weight_ = 0;
};

/// Largest set reachable from `start` through edges of h.
VertexSet reachable_from(const Hypergraph& h, VertexId start);

/// Connected components, ordered by their lowest vertex.
std::vector<VertexSet> components(const Hypergraph& h);

bool is_connected(const Hypergraph& h);

enum class WalkKind { invalid, walk, path, cycle, loose_path };

const char* to_string(WalkKind kind);

/// Alternating sequence (v1, e1, v2, ..., en, v{n+1}): vertices.size() == edges.size() + 1.
struct WalkSequence {
  std::vector<VertexId> vertices;
  std::vector<VertexSet> edges;
};

/// Strongest label that applies to `seq`. A cycle is a path whose endpoints coincide
/// (at least two edges); a loose path is an open path whose consecutive edges meet in
/// exactly the shared vertex and whose non-consecutive edges are disjoint. A single
/// vertex with no edges is a (trivial) path.
WalkKind classify_walk(const Hypergraph& h, const WalkSequence& seq);

/// Vertex set `vsub`, edges of h contained in `vsub`, weights unchanged.
Hypergraph largest_partial(const Hypergraph& h, VertexSet vsub);

/// Vertex set `vsub`, edges e ∩ vsub with at least two vertices; edges that collapse onto
/// the same intersection contribute the sum of their weights.
Hypergraph induced_subhypergraph(const Hypergraph& h, VertexSet vsub);

struct Degree {
  std::size_t degree = 0;
  Weight weighted = 0;

  friend bool operator==(const Degree&, const Degree&) = default;
};

Degree degree(const Hypergraph& h, VertexId v);

struct Cut {
  VertexSet separator;
  std::vector<Edge> crossing_edges;
  Weight weight = 0;
};

Cut cut(const Hypergraph& h, VertexSet x);

/// Cut weight only; same preconditions as cut().
Weight cut_weight(const Hypergraph& h, VertexSet x);

struct MinCut {
  Weight capacity = 0;
  VertexSet witness;
};

/// Largest vertex count for which min_cut() will enumerate subsets.
inline constexpr std::size_t kMaxBruteForceVertices = 24;

/// Exhaustive minimum over all nonempty proper subsets (one vertex pinned inside X).
/// Throws CapacityExceeded above kMaxBruteForceVertices.
MinCut min_cut_exhaustive(const Hypergraph& h);

/// Single scan over edge weights; only valid when h is a quasi-tree (every edge is a
/// bridge, so the lightest edge is a cut on its own). The witness is the component of
/// h minus that edge which contains the edge's lowest vertex.
MinCut min_cut_quasi_tree(const Hypergraph& h);

/// Disconnected: capacity 0 with a component as witness. Quasi-tree: single scan.
/// Otherwise exhaustive enumeration.
MinCut min_cut(const Hypergraph& h);

/// Connected, and dropping any single edge disconnects it.
bool is_quasi_tree(const Hypergraph& h);

struct EdgePartition {
  std::vector<Edge> cut;      // meets both x and its complement
  std::vector<Edge> inside;   // contained in x
  std::vector<Edge> outside;  // contained in the complement
};

EdgePartition partition_edges(const Hypergraph& h, VertexSet x);

Weight total_weight(std::span<const Edge> edges);

}  // namespace hbcast
