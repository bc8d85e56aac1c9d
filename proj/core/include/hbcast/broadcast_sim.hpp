#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hbcast/field.hpp"
#include "hbcast/hypergraph.hpp"
#include "hbcast/topology.hpp"

namespace hbcast {

/// One slot on the collision channel: a single sender transmits a linear combination of
/// the columns it currently knows.
struct Broadcast {
  std::size_t slot = 0;
  VertexId sender = 0;
  /// Coefficients over the sender's current columns (its one-hot storage columns in
  /// ascending segment order, then every earlier broadcast in slot order).
  FieldVector combo;
  /// Coefficient vector in the W-dimensional segment basis. Optional on input; when
  /// present it must equal the sender's columns applied to `combo`.
  FieldVector resolved;
};

using BroadcastSchedule = std::vector<Broadcast>;

/// What one user knows, at the coefficient level.
class UserState {
 public:
  UserState(VertexId user, std::size_t num_segments, std::span<const SegmentId> held);

  VertexId user() const { return user_; }
  std::size_t num_segments() const { return num_segments_; }
  std::size_t num_columns() const { return columns_.size(); }
  /// Known coefficient vectors, in arrival order.
  const std::vector<FieldVector>& columns() const { return columns_; }
  std::size_t rank() const { return basis_.rank(); }
  /// Segments whose unit vector lies in the column span, ascending.
  const std::vector<SegmentId>& decoded() const { return decoded_; }

  /// Sender side: columns() applied to `combo`.
  FieldVector combine(std::span<const FieldElement> combo) const;
  /// Receiver side: appends a column. Returns true if the rank grew.
  bool append(FieldVector column);

 private:
  VertexId user_;
  std::size_t num_segments_;
  std::vector<FieldVector> columns_;
  ReducedBasis basis_;
  std::vector<SegmentId> decoded_;
};

using NetworkState = std::vector<UserState>;

/// One state per user, columns one-hot at the stored segments.
NetworkState init_states(const StorageTopology& topology);

/// Every user, the sender included, appends the resolved column. Returns it.
FieldVector apply_broadcast(NetworkState& states, const Broadcast& b);

std::vector<SegmentId> decoded_set(const UserState& state);

/// Edges holding at least one segment that some user has not decoded.
std::vector<Edge> remaining_edges(const NetworkState& states, const Hypergraph& h,
                                  const PlacementMap& placement);

/// Every user has rank W.
bool is_complete(const NetworkState& states);

/// Broadcast of sum_k coefficients[k] * s_{segments[k]} from `sender`, which must store
/// every listed segment. The combo is sized for the sender's column count at `slot`,
/// assuming slots 0..slot-1 have all been applied.
Broadcast coded_broadcast(const StorageTopology& topology, std::size_t slot, VertexId sender,
                          std::span<const SegmentId> segments,
                          std::span<const FieldElement> coefficients);

/// Each segment once, uncoded, by its lowest-id holder; slots in segment order.
BroadcastSchedule naive_schedule(const StorageTopology& topology);

struct RunOptions {
  bool track_edges = false;
  bool record_decoded = false;
};

struct SlotRecord {
  std::size_t slot = 0;
  VertexId sender = 0;
  FieldVector resolved;
  std::vector<std::size_t> ranks;                    // per user, after the slot
  std::vector<std::vector<SegmentId>> decoded;       // per user, when recorded
  std::optional<std::size_t> remaining_edges;        // when tracked
};

struct Transcript {
  std::vector<std::size_t> initial_ranks;
  std::optional<std::size_t> initial_remaining_edges;
  std::vector<SlotRecord> slots;
  NetworkState final_states;
  bool complete = false;
  std::size_t broadcasts = 0;
};

/// Applies the schedule slot by slot. Slots must be numbered 0..T-1 in order.
Transcript run_schedule(const StorageTopology& topology, const BroadcastSchedule& schedule,
                        const RunOptions& options = {});

/// The L x W segment matrix; column w-1 is segment w.
struct SegmentStore {
  Matrix data;
};

/// Random field-valued segments with L = topology.effective_payload_length(), redrawn
/// until the W columns are linearly independent.
SegmentStore materialize_payloads(const StorageTopology& topology, std::uint64_t seed);

/// Same, drawing entries (column by column) from `draw`.
SegmentStore materialize_payloads(std::size_t payload_length, std::size_t num_segments,
                                  const std::function<FieldElement()>& draw);

struct PayloadCheck {
  bool ok = true;
  std::string detail;  // first disagreement, if any

  explicit operator bool() const { return ok; }
};

/// Replays the schedule on actual payload vectors. At every slot, for every user, the
/// set of segments reconstructable from received payloads alone must equal the
/// coefficient-level decoded set, and every decoded segment must be reproduced exactly.
/// At the end every user must hold every segment.
PayloadCheck verify_payload_run(const StorageTopology& topology, const SegmentStore& store,
                                const BroadcastSchedule& schedule);

}  // namespace hbcast
