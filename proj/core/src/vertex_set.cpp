#include "hbcast/vertex_set.hpp"

#include <stdexcept>

namespace hbcast {

namespace {

void check_id(VertexId v) {
  if (v < 1 || v > VertexSet::kMaxVertex) {
    throw std::out_of_range("vertex id " + std::to_string(v) + " outside [1, 64]");
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<VertexId> ids) {
  for (VertexId v : ids) insert(v);
}

VertexSet VertexSet::interval(VertexId first, VertexId last) {
  VertexSet s;
  for (VertexId v = first; v <= last; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::from_ids(const std::vector<VertexId>& ids) {
  VertexSet s;
  for (VertexId v : ids) s.insert(v);
  return s;
}

void VertexSet::insert(VertexId v) {
  check_id(v);
  bits_ |= std::uint64_t{1} << (v - 1);
}

void VertexSet::erase(VertexId v) {
  check_id(v);
  bits_ &= ~(std::uint64_t{1} << (v - 1));
}

std::vector<VertexId> VertexSet::to_vector() const { return {begin(), end()}; }

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace hbcast
