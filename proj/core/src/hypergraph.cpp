#include "hbcast/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "hbcast/errors.hpp"

namespace hbcast {

namespace {

void require_proper_subset(const Hypergraph& h, VertexSet x, const char* what) {
  if (x.empty() || !x.is_subset_of(h.vertices()) || x == h.vertices()) {
    throw InvalidInput(std::string(what) + ": separator " + to_string(x) +
                       " must be a nonempty proper subset of " + to_string(h.vertices()));
  }
}

void require_vertex_subset(const Hypergraph& h, VertexSet vsub, const char* what) {
  if (vsub.empty()) throw InvalidInput(std::string(what) + ": empty vertex subset");
  if (!vsub.is_subset_of(h.vertices())) {
    throw InvalidInput(std::string(what) + ": " + to_string(vsub) + " is not a subset of " +
                       to_string(h.vertices()));
  }
}

bool crosses(VertexSet e, VertexSet x) { return e.intersects(x) && !e.is_subset_of(x); }

}  // namespace

Hypergraph::Hypergraph(VertexSet vertices, std::vector<Edge> edges) : vertices_(vertices) {
  std::map<VertexSet, Weight> merged;
  for (const Edge& e : edges) {
    if (e.vertices.size() < 2) {
      throw InvalidInput("edge " + to_string(e.vertices) + " has fewer than two vertices");
    }
    if (!e.vertices.is_subset_of(vertices_)) {
      throw InvalidInput("edge " + to_string(e.vertices) + " leaves vertex set " +
                         to_string(vertices_));
    }
    if (e.weight == 0) throw InvalidInput("edge " + to_string(e.vertices) + " has zero weight");
    merged[e.vertices] += e.weight;
  }
  edges_.reserve(merged.size());
  for (const auto& [vs, w] : merged) {
    edges_.push_back({vs, w});
    total_weight_ += w;
  }
}

Hypergraph Hypergraph::over(std::size_t num_vertices, std::vector<Edge> edges) {
  if (num_vertices > VertexSet::kMaxVertex) {
    throw CapacityExceeded("at most 64 vertices are supported, got " + std::to_string(num_vertices));
  }
  return Hypergraph(VertexSet::interval(1, static_cast<VertexId>(num_vertices)), std::move(edges));
}

std::optional<std::size_t> Hypergraph::find(VertexSet e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, VertexSet key) { return a.vertices < key; });
  if (it == edges_.end() || it->vertices != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<Edge> Hypergraph::incident(VertexId v) const {
  std::vector<Edge> out;
  for (const Edge& e : edges_) {
    if (e.vertices.contains(v)) out.push_back(e);
  }
  return out;
}

Hypergraph Hypergraph::without_edge(std::size_t index) const {
  Hypergraph copy = *this;
  copy.total_weight_ -= copy.edges_.at(index).weight;
  copy.edges_.erase(copy.edges_.begin() + static_cast<std::ptrdiff_t>(index));
  return copy;
}

VertexSet reachable_from(const Hypergraph& h, VertexId start) {
  VertexSet reach;
  reach.insert(start);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Edge& e : h.edges()) {
      if (e.vertices.intersects(reach) && !e.vertices.is_subset_of(reach)) {
        reach |= e.vertices;
        grew = true;
      }
    }
  }
  return reach;
}

std::vector<VertexSet> components(const Hypergraph& h) {
  std::vector<VertexSet> out;
  VertexSet left = h.vertices();
  while (!left.empty()) {
    VertexSet comp = reachable_from(h, left.lowest());
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

bool is_connected(const Hypergraph& h) {
  if (h.vertices().empty()) return false;
  return reachable_from(h, h.vertices().lowest()) == h.vertices();
}

const char* to_string(WalkKind kind) {
  switch (kind) {
    case WalkKind::invalid: return "invalid";
    case WalkKind::walk: return "walk";
    case WalkKind::path: return "path";
    case WalkKind::cycle: return "cycle";
    case WalkKind::loose_path: return "loose-path";
  }
  return "invalid";
}

WalkKind classify_walk(const Hypergraph& h, const WalkSequence& seq) {
  const auto& vs = seq.vertices;
  const auto& es = seq.edges;
  if (vs.size() != es.size() + 1) return WalkKind::invalid;
  for (VertexId v : vs) {
    if (!h.vertices().contains(v)) return WalkKind::invalid;
  }
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (!h.has_edge(es[i])) return WalkKind::invalid;
    if (!es[i].contains(vs[i]) || !es[i].contains(vs[i + 1])) return WalkKind::invalid;
  }
  const std::size_t n = es.size();
  if (n == 0) return WalkKind::path;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (es[i] == es[j]) return WalkKind::walk;
    }
  }
  // v1..vn must be distinct; v{n+1} may only coincide with v1.
  VertexSet seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen.contains(vs[i])) return WalkKind::walk;
    seen.insert(vs[i]);
  }
  const VertexId last = vs[n];
  if (last == vs[0]) return n >= 2 ? WalkKind::cycle : WalkKind::walk;
  if (seen.contains(last)) return WalkKind::walk;

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if ((es[i] & es[i + 1]) != VertexSet{vs[i + 1]}) return WalkKind::path;
    for (std::size_t j = i + 2; j < n; ++j) {
      if (es[i].intersects(es[j])) return WalkKind::path;
    }
  }
  return WalkKind::loose_path;
}

Hypergraph largest_partial(const Hypergraph& h, VertexSet vsub) {
  require_vertex_subset(h, vsub, "largest_partial");
  std::vector<Edge> kept;
  for (const Edge& e : h.edges()) {
    if (e.vertices.is_subset_of(vsub)) kept.push_back(e);
  }
  return Hypergraph(vsub, std::move(kept));
}

Hypergraph induced_subhypergraph(const Hypergraph& h, VertexSet vsub) {
  require_vertex_subset(h, vsub, "induced_subhypergraph");
  std::vector<Edge> induced;
  for (const Edge& e : h.edges()) {
    const VertexSet meet = e.vertices & vsub;
    if (meet.size() >= 2) induced.push_back({meet, e.weight});
  }
  // The constructor merges collisions by summing weights.
  return Hypergraph(vsub, std::move(induced));
}

Degree degree(const Hypergraph& h, VertexId v) {
  if (!h.vertices().contains(v)) {
    throw InvalidInput("degree: unknown vertex " + std::to_string(v));
  }
  Degree d;
  for (const Edge& e : h.edges()) {
    if (e.vertices.contains(v)) {
      ++d.degree;
      d.weighted += e.weight;
    }
  }
  return d;
}

Cut cut(const Hypergraph& h, VertexSet x) {
  require_proper_subset(h, x, "cut");
  Cut c{x, {}, 0};
  for (const Edge& e : h.edges()) {
    if (crosses(e.vertices, x)) {
      c.crossing_edges.push_back(e);
      c.weight += e.weight;
    }
  }
  return c;
}

Weight cut_weight(const Hypergraph& h, VertexSet x) {
  require_proper_subset(h, x, "cut_weight");
  Weight w = 0;
  for (const Edge& e : h.edges()) {
    if (crosses(e.vertices, x)) w += e.weight;
  }
  return w;
}

MinCut min_cut_exhaustive(const Hypergraph& h) {
  const VertexSet all = h.vertices();
  if (all.size() < 2) throw InvalidInput("min_cut: need at least two vertices");
  if (all.size() > kMaxBruteForceVertices) {
    throw CapacityExceeded("min_cut: exhaustive search limited to " +
                           std::to_string(kMaxBruteForceVertices) + " vertices, got " +
                           std::to_string(all.size()));
  }
  const std::uint64_t pinned = std::uint64_t{1} << (all.lowest() - 1);
  const std::uint64_t others = all.bits() & ~pinned;

  MinCut best{std::numeric_limits<Weight>::max(), {}};
  // Walk every subset of `others` except `others` itself (that would make X = V).
  std::uint64_t sub = (others - 1) & others;
  for (;;) {
    const std::uint64_t x = pinned | sub;
    Weight w = 0;
    for (const Edge& e : h.edges()) {
      const std::uint64_t eb = e.vertices.bits();
      if ((eb & x) != 0 && (eb & ~x) != 0) {
        w += e.weight;
        if (w >= best.capacity) break;
      }
    }
    if (w < best.capacity) best = {w, VertexSet::from_bits(x)};
    if (sub == 0 || best.capacity == 0) break;
    sub = (sub - 1) & others;
  }
  return best;
}

MinCut min_cut_quasi_tree(const Hypergraph& h) {
  if (h.num_vertices() < 2) throw InvalidInput("min_cut: need at least two vertices");
  if (h.num_edges() == 0) throw InvalidInput("min_cut_quasi_tree: hypergraph has no edges");
  std::size_t lightest = 0;
  for (std::size_t i = 1; i < h.num_edges(); ++i) {
    if (h.edges()[i].weight < h.edges()[lightest].weight) lightest = i;
  }
  const Edge& e = h.edges()[lightest];
  const VertexSet side = reachable_from(h.without_edge(lightest), e.vertices.lowest());
  return {e.weight, side};
}

MinCut min_cut(const Hypergraph& h) {
  if (h.num_vertices() < 2) throw InvalidInput("min_cut: need at least two vertices");
  const VertexSet first = reachable_from(h, h.vertices().lowest());
  if (first != h.vertices()) return {0, first};
  if (is_quasi_tree(h)) return min_cut_quasi_tree(h);
  return min_cut_exhaustive(h);
}

bool is_quasi_tree(const Hypergraph& h) {
  if (!is_connected(h)) return false;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (is_connected(h.without_edge(i))) return false;
  }
  return true;
}

EdgePartition partition_edges(const Hypergraph& h, VertexSet x) {
  require_proper_subset(h, x, "partition_edges");
  EdgePartition p;
  for (const Edge& e : h.edges()) {
    if (e.vertices.is_subset_of(x)) {
      p.inside.push_back(e);
    } else if (!e.vertices.intersects(x)) {
      p.outside.push_back(e);
    } else {
      p.cut.push_back(e);
    }
  }
  return p;
}

Weight total_weight(std::span<const Edge> edges) {
  Weight w = 0;
  for (const Edge& e : edges) w += e.weight;
  return w;
}

}  // namespace hbcast
