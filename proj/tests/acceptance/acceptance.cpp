// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "convert.hpp"
#include "fixtures.hpp"
#include "hbcast/broadcast_sim.hpp"
#include "hbcast/dbqt.hpp"
#include "hbcast/general.hpp"
#include "hbcast/generators.hpp"
#include "hbcast/hypergraph.hpp"
#include "hbcast/rng.hpp"
#include "oracles.hpp"

namespace hbcast {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

// Seeded quasi-tree corpus shared by criteria 2, 3 and 7.
std::vector<GeneratedInstance> quasi_tree_corpus() {
  std::vector<GeneratedInstance> corpus;
  SplitMix64 rng(20240901);
  for (int i = 0; i < 240; ++i) {
    GenConfig cfg;
    cfg.num_users = rng.between(3, 12);
    cfg.max_edge_size = rng.between(2, std::min<std::size_t>(4, cfg.num_users - 1));
    cfg.num_segments = rng.between(cfg.num_users, 64);
    cfg.seed = rng();
    corpus.push_back(random_quasi_tree(cfg));
  }
  return corpus;
}

const std::vector<GeneratedInstance>& corpus() {
  static const std::vector<GeneratedInstance> c = quasi_tree_corpus();
  return c;
}

Outcome fixtures() {
  Outcome o;
  const Hypergraph h = test::sample();
  const Hypergraph hp = test::sample_tree();
  o.require(degree(h, 1) == Degree{2, 2}, "degree(v1) != (2,2)");
  const Hypergraph ind = induced_subhypergraph(h, {2, 3, 6});
  o.require(ind.num_edges() == 2 && ind.has_edge({2, 3}) && ind.has_edge({3, 6}) &&
                ind.edges()[*ind.find({2, 3})].weight == 2 && ind.edges()[*ind.find({3, 6})].weight == 1,
            "induced subhypergraph on {2,3,6} does not carry weights {2,1}");
  o.require(cut(h, {4, 5, 6}).weight == 2, "cut weight of {4,5,6} != 2");
  o.require(min_cut(h).capacity == 1, "min-cut of H != 1");
  o.require(!is_quasi_tree(h), "H classified as a quasi-tree");
  o.require(is_quasi_tree(hp), "sample tree not classified as a quasi-tree");
  o.require(ordered_representatives(hp).vertices == std::vector<VertexId>{3, 5, 4},
            "representative order of the sample tree != [3,5,4]");
  o.require(classify_walk(h, {{2, 3, 2}, {{2, 3}, {1, 2, 3}}}) == WalkKind::cycle, "walk (2,3,2) not a cycle");
  o.require(classify_walk(h, {{1, 4, 5}, {{1, 4}, {4, 5}}}) == WalkKind::loose_path, "walk (1,4,5) not a loose path");
  std::ostringstream d;
  d << "fixture values exact";
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome optimal_on_quasi_trees() {
  Outcome o;
  std::size_t runs = 0;
  for (const GeneratedInstance& inst : corpus()) {
    const std::size_t W = inst.topology.num_segments();
    o.require(inst.graph.num_vertices() >= 3 && inst.graph.num_vertices() <= 12, "V outside [3,12]");
    o.require(inst.graph.num_edges() <= 12, "more than 12 edges");
    o.require(W <= 64, "W above 64");
    o.require(is_quasi_tree(inst.graph), "generator produced a non-quasi-tree");
    const DbqtPlan plan = dbqt_schedule(inst.topology);
    Weight delta_t = inst.graph.edges()[0].weight;
    for (const Edge& e : inst.graph.edges()) delta_t = std::min(delta_t, e.weight);
    o.require(plan.schedule.size() == W - delta_t,
              "schedule length " + std::to_string(plan.schedule.size()) + " != W - Δ = " +
                  std::to_string(W - delta_t));
    const Transcript tr = run_schedule(inst.topology, plan.schedule);
    bool all_full = tr.complete;
    for (const UserState& u : tr.final_states) all_full = all_full && u.rank() == W;
    o.require(all_full, "a user did not reach rank W");
    ++runs;
  }
  if (o.pass) o.detail = std::to_string(runs) + " quasi-trees, T = W - Δ and rank W everywhere";
  return o;
}

Outcome lower_bound_tight() {
  Outcome o;
  std::size_t runs = 0;
  for (const GeneratedInstance& inst : corpus()) {
    const Weight brute = min_cut_exhaustive(inst.graph).capacity;
    const Weight fast = min_cut_quasi_tree(inst.graph).capacity;
    const std::uint64_t oracle_cut =
        oracle::min_cut(static_cast<unsigned>(inst.graph.num_vertices()), test::plain_edges(inst.graph));
    o.require(brute == fast && brute == oracle_cut, "brute-force and single-scan min-cut disagree");
    const std::size_t T = dbqt_schedule(inst.topology).schedule.size();
    o.require(T == inst.topology.num_segments() - brute, "schedule length differs from W - Δ_H");
    ++runs;
  }
  if (o.pass) o.detail = std::to_string(runs) + " instances, fast path == brute force, T == W - Δ_H";
  return o;
}

Outcome vandermonde_exhaustive() {
  Outcome o;
  std::size_t patterns = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t delta = 0; delta <= n; ++delta) {
      // Enumerate all delta-subsets of [1, n] as bitmasks.
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != delta) continue;
        std::vector<std::size_t> held;
        for (std::size_t k = 0; k < n; ++k) {
          if ((mask >> k) & 1U) held.push_back(k + 1);
        }
        o.require(decodable_with(n, delta, held),
                  "singular for n=" + std::to_string(n) + " Δ=" + std::to_string(delta));
        ++patterns;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(patterns) + " holding patterns, all nonsingular";
  return o;
}

Outcome partition() {
  Outcome o;
  SplitMix64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = rng.between(3, 10);
    std::vector<Edge> es;
    for (std::size_t k = rng.between(1, 10); k > 0; --k) {
      VertexSet s;
      const std::size_t size = rng.between(2, n - 1);
      while (s.size() < size) s.insert(static_cast<VertexId>(rng.between(1, n)));
      es.push_back({s, rng.between(1, 5)});
    }
    const Hypergraph h = Hypergraph::over(n, es);
    const VertexSet x = VertexSet::from_bits(rng.between(1, (1ULL << n) - 2));
    const EdgePartition p = partition_edges(h, x);
    std::vector<VertexSet> all;
    for (const auto* part : {&p.cut, &p.inside, &p.outside}) {
      for (const Edge& e : *part) all.push_back(e.vertices);
    }
    std::sort(all.begin(), all.end());
    std::vector<VertexSet> expected;
    for (const Edge& e : h.edges()) expected.push_back(e.vertices);
    o.require(all == expected, "edge sets overlap or miss an edge");
    for (const Edge& e : p.cut) o.require(e.vertices.intersects(x) && !e.vertices.is_subset_of(x), "bad cut edge");
    for (const Edge& e : p.inside) o.require(e.vertices.is_subset_of(x), "bad inside edge");
    for (const Edge& e : p.outside) o.require(!e.vertices.intersects(x), "bad outside edge");
    o.require(total_weight(p.cut) + total_weight(p.inside) + total_weight(p.outside) == h.total_weight(),
              "weights do not sum to w(E)");
  }
  if (o.pass) o.detail = "100 random (H, X) pairs partition E";
  return o;
}

std::vector<ExperimentRow> experiment_rows() {
  std::vector<ExperimentRow> rows;
  for (std::size_t k : {1, 2}) {
    ExperimentConfig cfg;
    cfg.users = {6, 12};
    cfg.segments = {16, 48};
    cfg.trials = 100;
    cfg.extra_edges = k;
    cfg.seed = 7000 + k;
    for (const ExperimentRow& r : run_experiment(cfg)) rows.push_back(r);
  }
  return rows;
}

const std::vector<ExperimentRow>& experiment() {
  static const std::vector<ExperimentRow> rows = experiment_rows();
  return rows;
}

Outcome general_band() {
  Outcome o;
  std::ostringstream d;
  d << "violations 0; mean gap";
  const auto& rows = experiment();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ExperimentRow& r = rows[i];
    o.require(r.trials == 100, "trial count");
    o.require(r.violations == 0, "(" + std::to_string(r.users) + "," + std::to_string(r.segments) +
                                     ") has " + std::to_string(r.violations) + " violations");
    char buf[64];
    std::snprintf(buf, sizeof buf, " k%zu(%zu,%zu):%.2f", i < rows.size() / 2 ? 1UL : 2UL, r.users, r.segments,
                  r.mean_gap);
    d << buf;
  }
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome dominance() {
  Outcome o;
  for (const GeneratedInstance& inst : corpus()) {
    const std::size_t lb = inst.topology.num_segments() - min_cut(inst.graph).capacity;
    o.require(lb >= cde_bound(inst.graph), "W - Δ below the vertex-star bound on a quasi-tree");
  }
  for (const ExperimentRow& r : experiment()) {
    o.require(r.dominance_violations == 0, "dominance violated in the experiment grid");
  }
  if (o.pass) o.detail = "W - Δ_H >= vertex-star bound on every instance";
  return o;
}

Outcome payload_equivalence() {
  Outcome o;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const GeneratedInstance& g = corpus()[i];
    const StorageTopology t(g.topology.num_segments(),
                            [&] {
                              std::vector<std::vector<SegmentId>> h;
                              for (VertexId v = 1; v <= g.topology.num_users(); ++v) h.push_back(g.topology.holdings(v));
                              return h;
                            }(),
                            g.topology.num_segments() + 1);
    const PayloadCheck c = verify_payload_run(t, materialize_payloads(t, i), dbqt_schedule(t).schedule);
    o.require(c.ok, c.detail);
  }
  if (o.pass) o.detail = "20 instances, L = W + 1, agreement at every slot";
  return o;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = cli::run(args, out, err);
  return out.str();
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> gen{"gen", "--users", "10", "--segments", "40", "--seed", "99", "--extra-edges", "2"};
  const std::vector<std::string> exp{"experiment", "--users-list", "6,9", "--segments-list", "18,30",
                                     "--trials", "30", "--extra-edges", "1", "--seed", "5"};
  int c1 = 0;
  int c2 = 0;
  const std::string g1 = run_cli(gen, c1);
  const std::string g2 = run_cli(gen, c2);
  o.require(c1 == 0 && c2 == 0 && !g1.empty() && g1 == g2, "gen output differs between runs");
  const std::string e1 = run_cli(exp, c1);
  const std::string e2 = run_cli(exp, c2);
  o.require(c1 == 0 && c2 == 0 && !e1.empty() && e1 == e2, "experiment output differs between runs");
  if (o.pass) o.detail = "gen and experiment byte-identical across runs";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> check;
};

}  // namespace
}  // namespace hbcast

int main() {
  using namespace hbcast;
  const std::vector<Criterion> criteria{
      {1, "fixture exactness", 1.0, fixtures},
      {2, "DBQT optimal on quasi-trees", 30.0, optimal_on_quasi_trees},
      {3, "min-cut fast path and tightness", 0.0, lower_bound_tight},
      {4, "Vandermonde decodability, n <= 10", 60.0, vandermonde_exhaustive},
      {5, "cut / inside / outside partition", 0.0, partition},
      {6, "general hypergraph band", 300.0, general_band},
      {7, "bound dominance", 0.0, dominance},
      {8, "coefficient / payload equivalence", 0.0, payload_equivalence},
      {9, "CLI determinism", 0.0, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += " (took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s)";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << "  [" << timing
              << "]  " << o.detail << "\n";
    failures += o.pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
