#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "hbcast/broadcast_sim.hpp"
#include "hbcast/dbqt.hpp"
#include "hbcast/topology.hpp"

namespace hbcast {

// Instance files are JSON documents, format_version 1, in one of two forms.
//
// Storage form:
//   {"format_version": 1, "num_users": V, "num_segments": W, "payload_length": L?,
//    "users": [{"id": 1, "segments": [1, 3]}, ...], "metadata": {...}?}
//
// Hypergraph form:
//   {"format_version": 1, "num_users": V, "num_segments": W?, "payload_length": L?,
//    "edges": [{"vertices": [1, 2], "weight": 2, "segments": [4, 7]?}, ...],
//    "metadata": {...}?}
//
// In the hypergraph form either every edge lists its segments or none does; without
// them ids are assigned in lexicographic edge order. Edge sizes must lie in [2, V-1].
// Users missing from "users" hold nothing.

inline constexpr int kInstanceFormatVersion = 1;

struct InstanceMetadata {
  std::string generator;
  std::string rng;
  std::optional<std::uint64_t> seed;
  std::map<std::string, std::int64_t> parameters;

  friend bool operator==(const InstanceMetadata&, const InstanceMetadata&) = default;
};

struct InstanceFile {
  StorageTopology topology;
  std::optional<InstanceMetadata> metadata;
};

enum class InstanceForm { storage, hypergraph };

/// Throws InvalidInput with a description of the first problem found.
InstanceFile parse_instance(std::string_view text);

/// Pretty-printed, keys sorted, trailing newline. The hypergraph form requires a
/// topology without leftover or uncovered segments.
std::string serialize_instance(const StorageTopology& topology,
                               const std::optional<InstanceMetadata>& metadata = std::nullopt,
                               InstanceForm form = InstanceForm::storage);

/// FNV-1a 64 of the storage-form serialization without metadata, as 16 hex digits.
std::string instance_digest(const StorageTopology& topology);

std::string plan_to_json(const DbqtPlan& plan);
std::string transcript_to_json(const Transcript& transcript);

}  // namespace hbcast
