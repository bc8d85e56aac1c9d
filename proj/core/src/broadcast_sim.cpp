#include "hbcast/broadcast_sim.hpp"

#include <algorithm>

#include "hbcast/errors.hpp"
#include "hbcast/rng.hpp"

namespace hbcast {

namespace {

FieldVector unit_vector(std::size_t dim, std::size_t index) {
  FieldVector v(dim);
  v[index] = FieldElement(1);
  return v;
}

std::vector<SegmentId> to_segment_ids(const std::vector<std::size_t>& coords) {
  std::vector<SegmentId> out;
  out.reserve(coords.size());
  for (std::size_t c : coords) out.push_back(static_cast<SegmentId>(c + 1));
  return out;
}

UserState& sender_state(NetworkState& states, VertexId sender) {
  if (sender < 1 || sender > states.size()) {
    throw InvalidInput("broadcast from unknown user " + std::to_string(sender));
  }
  return states[sender - 1];
}

}  // namespace

UserState::UserState(VertexId user, std::size_t num_segments, std::span<const SegmentId> held)
    : user_(user), num_segments_(num_segments), basis_(num_segments) {
  for (SegmentId s : held) {
    if (s < 1 || s > num_segments) throw InvalidInput("segment id out of range");
    append(unit_vector(num_segments, s - 1));
  }
}

FieldVector UserState::combine(std::span<const FieldElement> combo) const {
  if (combo.size() != columns_.size()) {
    throw InvalidInput("user " + std::to_string(user_) + " has " +
                       std::to_string(columns_.size()) + " columns but the combination has " +
                       std::to_string(combo.size()) + " coefficients");
  }
  FieldVector out(num_segments_);
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (combo[j].is_zero()) continue;
    const FieldVector& col = columns_[j];
    for (std::size_t i = 0; i < num_segments_; ++i) out[i] += combo[j] * col[i];
  }
  return out;
}

bool UserState::append(FieldVector column) {
  if (column.size() != num_segments_) throw InvalidInput("column length differs from W");
  const bool grew = basis_.insert(column);
  columns_.push_back(std::move(column));
  if (grew) decoded_ = to_segment_ids(basis_.unit_coordinates());
  return grew;
}

NetworkState init_states(const StorageTopology& topology) {
  NetworkState states;
  states.reserve(topology.num_users());
  for (VertexId v = 1; v <= topology.num_users(); ++v) {
    states.emplace_back(v, topology.num_segments(), topology.holdings(v));
  }
  return states;
}

FieldVector apply_broadcast(NetworkState& states, const Broadcast& b) {
  const UserState& sender = sender_state(states, b.sender);
  FieldVector resolved = sender.combine(b.combo);
  if (!b.resolved.empty() && b.resolved != resolved) {
    throw InvalidInput("slot " + std::to_string(b.slot) +
                       ": resolved coefficients do not match the sender's combination");
  }
  for (UserState& s : states) s.append(resolved);
  return resolved;
}

std::vector<SegmentId> decoded_set(const UserState& state) { return state.decoded(); }

std::vector<Edge> remaining_edges(const NetworkState& states, const Hypergraph& h,
                                  const PlacementMap& placement) {
  std::vector<Edge> out;
  for (const Edge& e : h.edges()) {
    auto it = placement.find(e.vertices);
    if (it == placement.end() || it->second.size() != e.weight) {
      throw InvalidInput("placement inconsistent with edge " + to_string(e.vertices));
    }
    const bool done = std::all_of(it->second.begin(), it->second.end(), [&](SegmentId s) {
      return std::all_of(states.begin(), states.end(), [&](const UserState& u) {
        return std::binary_search(u.decoded().begin(), u.decoded().end(), s);
      });
    });
    if (!done) out.push_back(e);
  }
  return out;
}

bool is_complete(const NetworkState& states) {
  return std::all_of(states.begin(), states.end(),
                     [](const UserState& s) { return s.rank() == s.num_segments(); });
}

Broadcast coded_broadcast(const StorageTopology& topology, std::size_t slot, VertexId sender,
                          std::span<const SegmentId> segments,
                          std::span<const FieldElement> coefficients) {
  if (segments.size() != coefficients.size()) {
    throw InvalidInput("coded_broadcast: segment and coefficient counts differ");
  }
  const std::vector<SegmentId>& held = topology.holdings(sender);
  Broadcast b;
  b.slot = slot;
  b.sender = sender;
  b.combo.assign(held.size() + slot, FieldElement{});
  b.resolved.assign(topology.num_segments(), FieldElement{});
  for (std::size_t k = 0; k < segments.size(); ++k) {
    auto it = std::lower_bound(held.begin(), held.end(), segments[k]);
    if (it == held.end() || *it != segments[k]) {
      throw InvalidInput("user " + std::to_string(sender) + " does not store segment " +
                         std::to_string(segments[k]));
    }
    b.combo[static_cast<std::size_t>(it - held.begin())] += coefficients[k];
    b.resolved[segments[k] - 1] += coefficients[k];
  }
  return b;
}

BroadcastSchedule naive_schedule(const StorageTopology& topology) {
  BroadcastSchedule schedule;
  const FieldElement one(1);
  for (SegmentId s = 1; s <= topology.num_segments(); ++s) {
    const VertexSet holders = topology.holders(s);
    if (holders.empty()) throw InvalidInput("segment " + std::to_string(s) + " has no holder");
    schedule.push_back(coded_broadcast(topology, schedule.size(), holders.lowest(),
                                       std::span(&s, 1), std::span(&one, 1)));
  }
  return schedule;
}

Transcript run_schedule(const StorageTopology& topology, const BroadcastSchedule& schedule,
                        const RunOptions& options) {
  Transcript t;
  NetworkState states = init_states(topology);
  std::optional<StorageHypergraph> sh;
  if (options.track_edges) {
    sh = to_hypergraph(topology);
    t.initial_remaining_edges = remaining_edges(states, sh->graph, sh->placement).size();
  }
  for (const UserState& s : states) t.initial_ranks.push_back(s.rank());

  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const Broadcast& b = schedule[i];
    if (b.slot != i) {
      throw InvalidInput("schedule slot " + std::to_string(b.slot) + " found at position " +
                         std::to_string(i));
    }
    SlotRecord rec;
    rec.slot = b.slot;
    rec.sender = b.sender;
    rec.resolved = apply_broadcast(states, b);
    rec.ranks.reserve(states.size());
    for (const UserState& s : states) rec.ranks.push_back(s.rank());
    if (options.record_decoded) {
      for (const UserState& s : states) rec.decoded.push_back(s.decoded());
    }
    if (sh) rec.remaining_edges = remaining_edges(states, sh->graph, sh->placement).size();
    t.slots.push_back(std::move(rec));
  }
  t.complete = is_complete(states);
  t.broadcasts = schedule.size();
  t.final_states = std::move(states);
  return t;
}

SegmentStore materialize_payloads(std::size_t payload_length, std::size_t num_segments,
                                  const std::function<FieldElement()>& draw) {
  if (payload_length <= num_segments) {
    throw InvalidInput("payload length L=" + std::to_string(payload_length) +
                       " must exceed W=" + std::to_string(num_segments));
  }
  for (;;) {
    Matrix m(payload_length, num_segments);
    for (std::size_t c = 0; c < num_segments; ++c) {
      for (std::size_t r = 0; r < payload_length; ++r) m(r, c) = draw();
    }
    if (rank(m) == num_segments) return SegmentStore{std::move(m)};
  }
}

SegmentStore materialize_payloads(const StorageTopology& topology, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return materialize_payloads(topology.effective_payload_length(), topology.num_segments(),
                              [&rng] { return FieldElement(rng.below(FieldElement::kModulus)); });
}

namespace {

// Payload-level view of one user: the coefficient basis carries payloads as companions
// (for exact reconstruction) and a separate basis spans the raw payloads (for the
// reconstructability test that never looks at coefficients).
struct PayloadUser {
  ReducedBasis tracked;
  ReducedBasis payload_span;
  std::vector<FieldVector> payloads;
};

FieldVector payload_combination(const PayloadUser& u, std::span<const FieldElement> combo) {
  const std::size_t len = u.payloads.empty() ? 0 : u.payloads.front().size();
  FieldVector out(len);
  for (std::size_t j = 0; j < combo.size(); ++j) {
    if (combo[j].is_zero()) continue;
    for (std::size_t i = 0; i < len; ++i) out[i] += combo[j] * u.payloads[j][i];
  }
  return out;
}

std::string user_slot(std::size_t slot, VertexId v) {
  return "slot " + std::to_string(slot) + ", user " + std::to_string(v);
}

}  // namespace

PayloadCheck verify_payload_run(const StorageTopology& topology, const SegmentStore& store,
                                const BroadcastSchedule& schedule) {
  const std::size_t W = topology.num_segments();
  const std::size_t L = store.data.rows();
  if (store.data.cols() != W) return {false, "segment store has the wrong number of columns"};
  if (L <= W) return {false, "payload length must exceed W"};

  std::vector<FieldVector> segment(W);
  for (std::size_t w = 0; w < W; ++w) segment[w] = store.data.column(w);

  NetworkState states = init_states(topology);
  std::vector<PayloadUser> users;
  for (VertexId v = 1; v <= topology.num_users(); ++v) {
    PayloadUser u{ReducedBasis(W, L), ReducedBasis(L), {}};
    for (SegmentId s : topology.holdings(v)) {
      u.tracked.insert(unit_vector(W, s - 1), segment[s - 1]);
      u.payload_span.insert(segment[s - 1]);
      u.payloads.push_back(segment[s - 1]);
    }
    users.push_back(std::move(u));
  }

  auto compare = [&](std::size_t slot) -> PayloadCheck {
    for (std::size_t i = 0; i < users.size(); ++i) {
      const PayloadUser& u = users[i];
      const VertexId v = static_cast<VertexId>(i + 1);
      std::vector<SegmentId> reconstructable;
      for (std::size_t w = 0; w < W; ++w) {
        if (u.payload_span.contains(segment[w])) reconstructable.push_back(static_cast<SegmentId>(w + 1));
      }
      if (reconstructable != states[i].decoded()) {
        return {false, user_slot(slot, v) + ": payload span disagrees with decoded set"};
      }
      for (SegmentId s : reconstructable) {
        const auto rebuilt = u.tracked.companion_of_unit(s - 1);
        if (!rebuilt || *rebuilt != segment[s - 1]) {
          return {false, user_slot(slot, v) + ": segment " + std::to_string(s) +
                             " not reproduced exactly"};
        }
      }
    }
    return {};
  };

  if (auto c = compare(0); !c) return c;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const Broadcast& b = schedule[i];
    if (b.slot != i) return {false, "schedule slots out of order at position " + std::to_string(i)};
    if (b.sender < 1 || b.sender > users.size()) return {false, "unknown sender"};
    if (b.combo.size() != users[b.sender - 1].payloads.size()) {
      return {false, "slot " + std::to_string(i) + ": combination length mismatch"};
    }
    const FieldVector z = payload_combination(users[b.sender - 1], b.combo);
    FieldVector resolved;
    try {
      resolved = apply_broadcast(states, b);
    } catch (const InvalidInput& e) {
      return {false, e.what()};
    }
    for (PayloadUser& u : users) {
      u.tracked.insert(resolved, z);
      u.payload_span.insert(z);
      u.payloads.push_back(z);
    }
    if (auto c = compare(i + 1); !c) return c;
  }
  for (std::size_t i = 0; i < users.size(); ++i) {
    if (states[i].decoded().size() != W) {
      return {false, "user " + std::to_string(i + 1) + " did not recover every segment"};
    }
  }
  return {};
}

}  // namespace hbcast
