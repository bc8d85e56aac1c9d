#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hbcast/hypergraph.hpp"
#include "hbcast/vertex_set.hpp"

namespace hbcast {

/// 1-based segment identifier in [1, W].
using SegmentId = std::uint32_t;

/// Edge vertex set -> segments held by exactly that set of users, ascending.
using PlacementMap = std::map<VertexSet, std::vector<SegmentId>>;

/// Which users store which segments.
///
/// Holdings are normalised to ascending, duplicate-free lists. Coverage (every segment
/// held by somebody) is not enforced here so that validate() can report violations;
/// operations that need it check it themselves.
class StorageTopology {
 public:
  /// Largest W accepted; the simulator keeps full W-row coefficient matrices.
  static constexpr std::size_t kMaxSegments = 10000;

  StorageTopology() = default;
  /// holdings[v-1] lists A_v. Throws InvalidInput on out-of-range segment ids, on
  /// more than 64 users, or when payload_length is set and not greater than W.
  StorageTopology(std::size_t num_segments, std::vector<std::vector<SegmentId>> holdings,
                  std::optional<std::size_t> payload_length = std::nullopt);

  std::size_t num_users() const { return holdings_.size(); }
  std::size_t num_segments() const { return num_segments_; }
  VertexSet users() const;

  /// A_v, ascending.
  const std::vector<SegmentId>& holdings(VertexId v) const;
  bool holds(VertexId v, SegmentId s) const;

  /// Users storing segment s.
  VertexSet holders(SegmentId s) const;

  std::optional<std::size_t> payload_length() const { return payload_length_; }
  /// Explicit L, or W + 1.
  std::size_t effective_payload_length() const;

  friend bool operator==(const StorageTopology&, const StorageTopology&) = default;

 private:
  std::size_t num_segments_ = 0;
  std::vector<std::vector<SegmentId>> holdings_;
  std::vector<VertexSet> holders_;  // index s-1
  std::optional<std::size_t> payload_length_;
};

/// S_e: segments held by every user in e and by nobody outside e.
std::vector<SegmentId> segments_for(const StorageTopology& topology, VertexSet e);

/// A_e: union of the holdings of the users in e.
std::vector<SegmentId> union_storage(const StorageTopology& topology, VertexSet e);

struct StorageHypergraph {
  Hypergraph graph;
  PlacementMap placement;
  /// Segments held by exactly one user or by all users; no edge can represent them.
  std::vector<SegmentId> leftovers;
  /// Segments nobody holds.
  std::vector<SegmentId> uncovered;
};

/// Groups segments by exact holder set. Holder sets of size 2..V-1 become edges whose
/// weight is the group size.
StorageHypergraph to_hypergraph(const StorageTopology& topology);

/// Inverse of to_hypergraph. h's vertex set must be {1..V}. Without a placement,
/// segment ids 1..W are handed out edge by edge in lexicographic edge order.
StorageTopology from_hypergraph(const Hypergraph& h,
                                const std::optional<PlacementMap>& placement = std::nullopt,
                                std::optional<std::size_t> payload_length = std::nullopt);

struct ValidationReport {
  bool covered = true;
  std::vector<SegmentId> uncovered;
  /// holder count -> number of segments with that many holders
  std::map<std::size_t, std::size_t> holder_histogram;
  std::vector<SegmentId> single_holder;
  std::vector<SegmentId> all_holders;
  std::vector<std::string> warnings;
  std::vector<std::string> errors;
  bool connected = false;
  bool quasi_tree = false;

  bool ok() const { return errors.empty(); }
};

ValidationReport validate(const StorageTopology& topology);

}  // namespace hbcast
