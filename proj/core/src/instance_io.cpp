#include "hbcast/instance_io.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include <nlohmann/json.hpp>

#include "hbcast/errors.hpp"

namespace hbcast {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw InvalidInput("instance file: " + msg); }

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing \"") + key + "\"");
  return *it;
}

std::uint64_t unsigned_value(const json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) fail(what + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::vector<std::uint64_t> unsigned_list(const json& v, const std::string& what) {
  if (!v.is_array()) fail(what + " must be an array");
  std::vector<std::uint64_t> out;
  for (const json& x : v) out.push_back(unsigned_value(x, what + " entry"));
  return out;
}

InstanceMetadata parse_metadata(const json& m) {
  if (!m.is_object()) fail("\"metadata\" must be an object");
  InstanceMetadata md;
  if (auto it = m.find("generator"); it != m.end() && it->is_string()) md.generator = *it;
  if (auto it = m.find("rng"); it != m.end() && it->is_string()) md.rng = *it;
  if (auto it = m.find("seed"); it != m.end()) md.seed = unsigned_value(*it, "metadata seed");
  if (auto it = m.find("parameters"); it != m.end() && it->is_object()) {
    for (const auto& [k, v] : it->items()) {
      if (v.is_number_integer()) md.parameters[k] = v.get<std::int64_t>();
    }
  }
  return md;
}

json metadata_json(const InstanceMetadata& md) {
  json m = json::object();
  if (!md.generator.empty()) m["generator"] = md.generator;
  if (!md.rng.empty()) m["rng"] = md.rng;
  if (md.seed) m["seed"] = *md.seed;
  if (!md.parameters.empty()) m["parameters"] = md.parameters;
  return m;
}

StorageTopology parse_storage_form(const json& doc, std::size_t V, std::optional<std::size_t> L) {
  const std::size_t W = unsigned_value(field(doc, "num_segments"), "\"num_segments\"");
  const json& users = field(doc, "users");
  if (!users.is_array()) fail("\"users\" must be an array");
  std::vector<std::vector<SegmentId>> holdings(V);
  std::vector<bool> seen(V + 1, false);
  for (const json& u : users) {
    if (!u.is_object()) fail("user entries must be objects");
    const std::uint64_t id = unsigned_value(field(u, "id"), "user id");
    if (id < 1 || id > V) fail("user id " + std::to_string(id) + " outside [1, " + std::to_string(V) + "]");
    if (seen[id]) fail("user id " + std::to_string(id) + " listed twice");
    seen[id] = true;
    for (std::uint64_t s : unsigned_list(field(u, "segments"), "user segments")) {
      if (s < 1 || s > W) fail("segment " + std::to_string(s) + " outside [1, " + std::to_string(W) + "]");
      holdings[id - 1].push_back(static_cast<SegmentId>(s));
    }
  }
  return StorageTopology(W, std::move(holdings), L);
}

StorageTopology parse_hypergraph_form(const json& doc, std::size_t V, std::optional<std::size_t> L) {
  const json& edges = field(doc, "edges");
  if (!edges.is_array()) fail("\"edges\" must be an array");
  std::vector<Edge> es;
  PlacementMap placement;
  std::size_t with_segments = 0;
  std::set<VertexSet> keys;
  for (const json& e : edges) {
    if (!e.is_object()) fail("edge entries must be objects");
    VertexSet vs;
    for (std::uint64_t v : unsigned_list(field(e, "vertices"), "edge vertices")) {
      if (v < 1 || v > V) fail("edge vertex " + std::to_string(v) + " outside [1, " + std::to_string(V) + "]");
      vs.insert(static_cast<VertexId>(v));
    }
    if (vs.size() < 2 || vs.size() + 1 > V) {
      fail("edge " + to_string(vs) + " must have between 2 and V-1 vertices");
    }
    if (!keys.insert(vs).second) fail("edge " + to_string(vs) + " listed twice");
    const std::uint64_t w = unsigned_value(field(e, "weight"), "edge weight");
    if (w == 0) fail("edge " + to_string(vs) + " has zero weight");
    es.push_back({vs, w});
    if (auto it = e.find("segments"); it != e.end()) {
      ++with_segments;
      std::vector<SegmentId> segs;
      for (std::uint64_t s : unsigned_list(*it, "edge segments")) segs.push_back(static_cast<SegmentId>(s));
      std::sort(segs.begin(), segs.end());
      placement.emplace(vs, std::move(segs));
    }
  }
  if (with_segments != 0 && with_segments != es.size()) {
    fail("either every edge lists its segments or none does");
  }
  Hypergraph h = Hypergraph::over(V, std::move(es));
  if (auto it = doc.find("num_segments"); it != doc.end()) {
    if (unsigned_value(*it, "\"num_segments\"") != h.total_weight()) {
      fail("\"num_segments\" differs from the total edge weight");
    }
  }
  std::optional<PlacementMap> pm;
  if (with_segments != 0) pm = std::move(placement);
  return from_hypergraph(h, pm, L);
}

json coefficient_pairs(const FieldVector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.push_back({i + 1, v[i].value()});
  }
  return out;
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("top level must be an object");
  const std::uint64_t version = unsigned_value(field(doc, "format_version"), "\"format_version\"");
  if (version != kInstanceFormatVersion) fail("unsupported format_version " + std::to_string(version));
  const std::uint64_t V = unsigned_value(field(doc, "num_users"), "\"num_users\"");
  if (V < 1 || V > VertexSet::kMaxVertex) fail("\"num_users\" must lie in [1, 64]");
  std::optional<std::size_t> L;
  if (auto it = doc.find("payload_length"); it != doc.end() && !it->is_null()) {
    L = unsigned_value(*it, "\"payload_length\"");
  }

  const bool has_users = doc.contains("users");
  const bool has_edges = doc.contains("edges");
  if (has_users == has_edges) fail("exactly one of \"users\" and \"edges\" is required");

  InstanceFile file;
  file.topology = has_users ? parse_storage_form(doc, V, L) : parse_hypergraph_form(doc, V, L);
  if (auto it = doc.find("metadata"); it != doc.end() && !it->is_null()) {
    file.metadata = parse_metadata(*it);
  }
  return file;
}

std::string serialize_instance(const StorageTopology& topology,
                               const std::optional<InstanceMetadata>& metadata, InstanceForm form) {
  json doc;
  doc["format_version"] = kInstanceFormatVersion;
  doc["num_users"] = topology.num_users();
  doc["num_segments"] = topology.num_segments();
  if (topology.payload_length()) doc["payload_length"] = *topology.payload_length();
  if (form == InstanceForm::storage) {
    json users = json::array();
    for (VertexId v = 1; v <= topology.num_users(); ++v) {
      users.push_back({{"id", v}, {"segments", topology.holdings(v)}});
    }
    doc["users"] = std::move(users);
  } else {
    const StorageHypergraph sh = to_hypergraph(topology);
    if (!sh.leftovers.empty() || !sh.uncovered.empty()) {
      throw InvalidInput("hypergraph form cannot represent leftover or uncovered segments");
    }
    json edges = json::array();
    for (const Edge& e : sh.graph.edges()) {
      edges.push_back({{"vertices", e.vertices.to_vector()},
                       {"weight", e.weight},
                       {"segments", sh.placement.at(e.vertices)}});
    }
    doc["edges"] = std::move(edges);
  }
  if (metadata) doc["metadata"] = metadata_json(*metadata);
  return doc.dump(2) + "\n";
}

std::string instance_digest(const StorageTopology& topology) {
  const std::string text = serialize_instance(topology);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string plan_to_json(const DbqtPlan& plan) {
  json doc;
  doc["delta"] = plan.delta;
  doc["representatives"] = plan.representatives.vertices;
  json phases = json::array();
  for (const PhasePlan& p : plan.phases) {
    json ph;
    ph["index"] = p.index;
    ph["representative"] = p.representative;
    ph["bridge_edge"] = p.bridge_edge ? json(p.bridge_edge->to_vector()) : json(nullptr);
    ph["seed_set"] = p.seed_set;
    ph["block"] = p.block;
    ph["broadcast_count"] = p.broadcast_count;
    phases.push_back(std::move(ph));
  }
  doc["phases"] = std::move(phases);
  json schedule = json::array();
  for (const Broadcast& b : plan.schedule) {
    schedule.push_back({{"slot", b.slot}, {"sender", b.sender}, {"coefficients", coefficient_pairs(b.resolved)}});
  }
  doc["schedule"] = std::move(schedule);
  return doc.dump(2) + "\n";
}

std::string transcript_to_json(const Transcript& transcript) {
  json doc;
  doc["broadcasts"] = transcript.broadcasts;
  doc["complete"] = transcript.complete;
  doc["initial_ranks"] = transcript.initial_ranks;
  if (transcript.initial_remaining_edges) doc["initial_remaining_edges"] = *transcript.initial_remaining_edges;
  json slots = json::array();
  for (const SlotRecord& r : transcript.slots) {
    json s;
    s["slot"] = r.slot;
    s["sender"] = r.sender;
    s["coefficients"] = coefficient_pairs(r.resolved);
    s["ranks"] = r.ranks;
    if (r.remaining_edges) s["remaining_edges"] = *r.remaining_edges;
    slots.push_back(std::move(s));
  }
  doc["slots"] = std::move(slots);
  return doc.dump(2) + "\n";
}

}  // namespace hbcast
