#include "hbcast/topology.hpp"

#include <algorithm>
#include <set>

#include "hbcast/errors.hpp"

namespace hbcast {

StorageTopology::StorageTopology(std::size_t num_segments,
                                 std::vector<std::vector<SegmentId>> holdings,
                                 std::optional<std::size_t> payload_length)
    : num_segments_(num_segments),
      holdings_(std::move(holdings)),
      holders_(num_segments),
      payload_length_(payload_length) {
  if (holdings_.size() > VertexSet::kMaxVertex) {
    throw InvalidInput("at most 64 users are supported, got " + std::to_string(holdings_.size()));
  }
  if (num_segments_ > kMaxSegments) {
    throw InvalidInput("at most " + std::to_string(kMaxSegments) + " segments are supported");
  }
  if (payload_length_ && *payload_length_ <= num_segments_) {
    throw InvalidInput("payload length L=" + std::to_string(*payload_length_) +
                       " must exceed the segment count W=" + std::to_string(num_segments_));
  }
  for (std::size_t i = 0; i < holdings_.size(); ++i) {
    auto& held = holdings_[i];
    std::sort(held.begin(), held.end());
    held.erase(std::unique(held.begin(), held.end()), held.end());
    for (SegmentId s : held) {
      if (s < 1 || s > num_segments_) {
        throw InvalidInput("user " + std::to_string(i + 1) + " holds segment " +
                           std::to_string(s) + " outside [1, " + std::to_string(num_segments_) +
                           "]");
      }
      holders_[s - 1].insert(static_cast<VertexId>(i + 1));
    }
  }
}

VertexSet StorageTopology::users() const {
  return VertexSet::interval(1, static_cast<VertexId>(num_users()));
}

const std::vector<SegmentId>& StorageTopology::holdings(VertexId v) const {
  if (v < 1 || v > num_users()) throw InvalidInput("unknown user " + std::to_string(v));
  return holdings_[v - 1];
}

bool StorageTopology::holds(VertexId v, SegmentId s) const {
  return holders(s).contains(v);
}

VertexSet StorageTopology::holders(SegmentId s) const {
  if (s < 1 || s > num_segments_) throw InvalidInput("unknown segment " + std::to_string(s));
  return holders_[s - 1];
}

std::size_t StorageTopology::effective_payload_length() const {
  return payload_length_.value_or(num_segments_ + 1);
}

std::vector<SegmentId> segments_for(const StorageTopology& topology, VertexSet e) {
  std::vector<SegmentId> out;
  for (SegmentId s = 1; s <= topology.num_segments(); ++s) {
    if (topology.holders(s) == e) out.push_back(s);
  }
  return out;
}

std::vector<SegmentId> union_storage(const StorageTopology& topology, VertexSet e) {
  std::vector<SegmentId> out;
  for (SegmentId s = 1; s <= topology.num_segments(); ++s) {
    if (topology.holders(s).intersects(e)) out.push_back(s);
  }
  return out;
}

StorageHypergraph to_hypergraph(const StorageTopology& topology) {
  const std::size_t num_users = topology.num_users();
  StorageHypergraph out;
  for (SegmentId s = 1; s <= topology.num_segments(); ++s) {
    const VertexSet holders = topology.holders(s);
    if (holders.empty()) {
      out.uncovered.push_back(s);
    } else if (holders.size() == 1 || holders.size() == num_users) {
      out.leftovers.push_back(s);
    } else {
      out.placement[holders].push_back(s);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(out.placement.size());
  for (const auto& [vs, segs] : out.placement) edges.push_back({vs, segs.size()});
  out.graph = Hypergraph(topology.users(), std::move(edges));
  return out;
}

StorageTopology from_hypergraph(const Hypergraph& h, const std::optional<PlacementMap>& placement,
                                std::optional<std::size_t> payload_length) {
  const std::size_t num_users = h.num_vertices();
  if (h.vertices() != VertexSet::interval(1, static_cast<VertexId>(num_users))) {
    throw InvalidInput("from_hypergraph: vertex set must be {1..V}, got " + to_string(h.vertices()));
  }
  const std::size_t num_segments = h.total_weight();
  std::vector<std::vector<SegmentId>> holdings(num_users);

  if (!placement) {
    SegmentId next = 1;
    for (const Edge& e : h.edges()) {
      for (Weight k = 0; k < e.weight; ++k, ++next) {
        for (VertexId v : e.vertices) holdings[v - 1].push_back(next);
      }
    }
    return StorageTopology(num_segments, std::move(holdings), payload_length);
  }

  if (placement->size() != h.num_edges()) {
    throw InvalidInput("from_hypergraph: placement lists " + std::to_string(placement->size()) +
                       " edges, hypergraph has " + std::to_string(h.num_edges()));
  }
  std::set<SegmentId> seen;
  for (const Edge& e : h.edges()) {
    auto it = placement->find(e.vertices);
    if (it == placement->end()) {
      throw InvalidInput("from_hypergraph: no placement for edge " + to_string(e.vertices));
    }
    if (it->second.size() != e.weight) {
      throw InvalidInput("from_hypergraph: edge " + to_string(e.vertices) + " has weight " +
                         std::to_string(e.weight) + " but " + std::to_string(it->second.size()) +
                         " placed segments");
    }
    for (SegmentId s : it->second) {
      if (s < 1 || s > num_segments || !seen.insert(s).second) {
        throw InvalidInput("from_hypergraph: segment id " + std::to_string(s) +
                           " is out of range or placed twice");
      }
      for (VertexId v : e.vertices) holdings[v - 1].push_back(s);
    }
  }
  return StorageTopology(num_segments, std::move(holdings), payload_length);
}

ValidationReport validate(const StorageTopology& topology) {
  ValidationReport report;
  const std::size_t num_users = topology.num_users();
  for (SegmentId s = 1; s <= topology.num_segments(); ++s) {
    const std::size_t count = topology.holders(s).size();
    ++report.holder_histogram[count];
    if (count == 0) {
      report.uncovered.push_back(s);
    } else if (count == num_users) {
      report.all_holders.push_back(s);
    } else if (count == 1) {
      report.single_holder.push_back(s);
    }
  }
  report.covered = report.uncovered.empty();
  if (!report.covered) {
    std::string msg = "coverage violation: segments held by nobody:";
    for (SegmentId s : report.uncovered) msg += " " + std::to_string(s);
    report.errors.push_back(std::move(msg));
  }
  if (!report.single_holder.empty()) {
    report.warnings.push_back(std::to_string(report.single_holder.size()) +
                              " segment(s) held by a single user are not represented as edges");
  }
  if (!report.all_holders.empty()) {
    report.warnings.push_back(std::to_string(report.all_holders.size()) +
                              " segment(s) held by every user are not represented as edges");
  }
  if (num_users > 0) {
    const StorageHypergraph sh = to_hypergraph(topology);
    report.connected = is_connected(sh.graph);
    report.quasi_tree = report.connected && is_quasi_tree(sh.graph);
  }
  return report;
}

}  // namespace hbcast
