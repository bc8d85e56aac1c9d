#pragma once

#include <vector>

#include "hbcast/hypergraph.hpp"
#include "hbcast/topology.hpp"
#include "oracles.hpp"

namespace hbcast::test {

inline oracle::Set to_set(VertexSet s) {
  oracle::Set out;
  for (VertexId v : s) out.insert(v);
  return out;
}

inline std::vector<oracle::PlainEdge> plain_edges(const Hypergraph& h) {
  std::vector<oracle::PlainEdge> out;
  for (const Edge& e : h.edges()) out.push_back({to_set(e.vertices), e.weight});
  return out;
}

inline std::vector<oracle::Set> plain_holdings(const StorageTopology& t) {
  std::vector<oracle::Set> out;
  for (VertexId v = 1; v <= t.num_users(); ++v) {
    out.emplace_back(t.holdings(v).begin(), t.holdings(v).end());
  }
  return out;
}

template <class C>
oracle::Set as_set(const C& c) {
  return oracle::Set(c.begin(), c.end());
}

}  // namespace hbcast::test
