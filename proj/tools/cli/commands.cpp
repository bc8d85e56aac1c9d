#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hbcast/broadcast_sim.hpp"
#include "hbcast/dbqt.hpp"
#include "hbcast/errors.hpp"
#include "hbcast/general.hpp"
#include "hbcast/generators.hpp"
#include "hbcast/hypergraph.hpp"
#include "hbcast/instance_io.hpp"
#include "hbcast/rng.hpp"
#include "hbcast/topology.hpp"

namespace hbcast::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot write " + path);
  f << text;
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  std::size_t users = 0;
  std::size_t segments = 0;
  std::uint64_t seed = 0;
  std::size_t extra_edges = 0;
  std::optional<std::size_t> max_edge_size;
  std::string out;
  std::string form = "storage";
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  GenConfig cfg;
  cfg.num_users = a.users;
  cfg.num_segments = a.segments;
  cfg.seed = a.seed;
  cfg.extra_edges = a.extra_edges;
  cfg.max_edge_size = a.max_edge_size.value_or(a.users >= 4 ? 3 : 2);
  const GeneratedInstance inst = random_instance(cfg);

  InstanceMetadata md;
  md.generator = a.extra_edges == 0 ? "random_quasi_tree" : "random_quasi_tree+cycle_edges";
  md.rng = SplitMix64::kAlgorithm;
  md.seed = a.seed;
  md.parameters = {{"users", static_cast<std::int64_t>(cfg.num_users)},
                   {"segments", static_cast<std::int64_t>(cfg.num_segments)},
                   {"extra_edges", static_cast<std::int64_t>(cfg.extra_edges)},
                   {"max_edge_size", static_cast<std::int64_t>(cfg.max_edge_size)}};
  const InstanceForm form = a.form == "hypergraph" ? InstanceForm::hypergraph : InstanceForm::storage;
  write_output(a.out, serialize_instance(inst.topology, md, form), out);
  return kExitOk;
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
  std::string in;
  bool as_json = false;
};

std::string join(const std::vector<VertexId>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const InstanceFile file = parse_instance(read_file(a.in));
  const StorageTopology& topo = file.topology;
  if (topo.num_users() < 2) throw InvalidInput("analyze: need at least two users");
  const StorageHypergraph sh = to_hypergraph(topo);
  const ValidationReport report = validate(topo);

  const MinCut mc = min_cut(sh.graph);
  std::optional<bool> fast_path_agrees;
  if (report.quasi_tree && sh.graph.num_vertices() <= kMaxBruteForceVertices) {
    fast_path_agrees = min_cut_exhaustive(sh.graph).capacity == min_cut_quasi_tree(sh.graph).capacity;
  }
  std::optional<std::vector<VertexId>> reps;
  if (report.quasi_tree) reps = ordered_representatives(sh.graph).vertices;

  const std::size_t W = topo.num_segments();
  json r;
  r["digest"] = instance_digest(topo);
  r["users"] = topo.num_users();
  r["segments"] = W;
  r["edges"] = sh.graph.num_edges();
  r["covered"] = report.covered;
  r["leftover_segments"] = sh.leftovers.size();
  r["connected"] = report.connected;
  r["quasi_tree"] = report.quasi_tree;
  r["min_cut"] = mc.capacity;
  r["min_cut_witness"] = mc.witness.to_vector();
  r["lower_bound"] = W - mc.capacity;
  r["cde_bound"] = cde_bound(sh.graph);
  r["fast_path_agrees"] = fast_path_agrees ? json(*fast_path_agrees) : json(nullptr);
  r["representatives"] = reps ? json(*reps) : json(nullptr);
  r["warnings"] = report.warnings;
  r["errors"] = report.errors;

  if (a.as_json) {
    out << r.dump(2) << "\n";
  } else {
    out << "digest: " << r["digest"].get<std::string>() << "\n"
        << "users: " << topo.num_users() << "\n"
        << "segments: " << W << "\n"
        << "edges: " << sh.graph.num_edges() << "\n"
        << "connected: " << (report.connected ? "true" : "false") << "\n"
        << "quasi_tree: " << (report.quasi_tree ? "true" : "false") << "\n"
        << "leftover_segments: " << sh.leftovers.size() << "\n"
        << "min_cut: " << mc.capacity << "\n"
        << "min_cut_witness: " << to_string(mc.witness) << "\n";
    if (fast_path_agrees) {
      out << "fast_path_agrees: " << (*fast_path_agrees ? "true" : "false") << "\n";
    }
    out << "lower_bound: " << W - mc.capacity << "\n"
        << "cde_bound: " << cde_bound(sh.graph) << "\n";
    if (reps) out << "representatives: " << join(*reps) << "\n";
    for (const auto& w : report.warnings) out << "warning: " << w << "\n";
    for (const auto& e : report.errors) out << "error: " << e << "\n";
  }
  return report.ok() ? kExitOk : kExitInvalid;
}

// ---- run -------------------------------------------------------------------

struct RunArgs {
  std::string in;
  std::string strategy = "dbqt";
  bool payload_check = false;
  std::uint64_t payload_seed = 0;
  std::string transcript;
  std::string plan;
};

int cmd_run(const RunArgs& a, std::ostream& out) {
  const InstanceFile file = parse_instance(read_file(a.in));
  const StorageTopology& topo = file.topology;
  if (topo.num_users() < 2) throw InvalidInput("run: need at least two users");
  const StorageHypergraph sh = to_hypergraph(topo);
  const std::size_t W = topo.num_segments();

  json r;
  r["digest"] = instance_digest(topo);
  r["strategy"] = a.strategy;
  const bool connected = is_connected(sh.graph);
  r["connected"] = connected;
  r["quasi_tree"] = connected && is_quasi_tree(sh.graph);
  const Weight delta = min_cut(sh.graph).capacity;
  r["min_cut"] = delta;
  r["lower_bound"] = W - delta;
  r["cde_bound"] = cde_bound(sh.graph);

  BroadcastSchedule schedule;
  std::optional<DbqtPlan> plan;
  if (a.strategy == "dbqt") {
    plan = dbqt_schedule(topo);
    schedule = plan->schedule;
  } else if (a.strategy == "dbqt-general") {
    GeneralRun g = dbqt_general(topo);
    r["dbqt_broadcasts"] = g.result.dbqt;
    r["completion_broadcasts"] = g.result.completion;
    schedule = std::move(g.schedule);
    plan = std::move(g.plan);
  } else {
    schedule = naive_schedule(topo);
  }

  RunOptions opts;
  opts.track_edges = !a.transcript.empty();
  const Transcript t = run_schedule(topo, schedule, opts);
  r["broadcasts"] = t.broadcasts;
  r["complete"] = t.complete;
  bool ok = t.complete;

  if (a.payload_check) {
    const SegmentStore store = materialize_payloads(topo, a.payload_seed);
    const PayloadCheck check = verify_payload_run(topo, store, schedule);
    r["payload_check"] = check.ok;
    if (!check.ok) r["payload_detail"] = check.detail;
    ok = ok && check.ok;
  }
  if (!a.transcript.empty()) write_output(a.transcript, transcript_to_json(t), out);
  if (!a.plan.empty()) {
    if (!plan) throw InvalidInput("--plan needs a DBQT strategy on a connected instance");
    write_output(a.plan, plan_to_json(*plan), out);
  }
  out << r.dump(2) << "\n";
  return ok ? kExitOk : kExitInvalid;
}

// ---- experiment ------------------------------------------------------------

struct ExperimentArgs {
  std::vector<std::size_t> users;
  std::vector<std::size_t> segments;
  std::size_t trials = 100;
  std::size_t extra_edges = 1;
  std::size_t max_edge_size = 3;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string out;
};

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

int cmd_experiment(const ExperimentArgs& a, std::ostream& out) {
  ExperimentConfig cfg;
  cfg.users = a.users;
  cfg.segments = a.segments;
  cfg.trials = a.trials;
  cfg.extra_edges = a.extra_edges;
  cfg.max_edge_size = a.max_edge_size;
  cfg.seed = a.seed;
  cfg.threads = a.threads;
  const std::vector<ExperimentRow> rows = run_experiment(cfg);

  std::ostringstream csv;
  csv << "users,segments,trials,mean_T,min_T,max_T,mean_lower_bound,mean_gap,violations,"
         "dominance_violations\n";
  std::size_t violations = 0;
  for (const ExperimentRow& row : rows) {
    csv << row.users << ',' << row.segments << ',' << row.trials << ',' << fixed(row.mean_broadcasts)
        << ',' << row.min_broadcasts << ',' << row.max_broadcasts << ','
        << fixed(row.mean_lower_bound) << ',' << fixed(row.mean_gap) << ',' << row.violations << ','
        << row.dominance_violations << '\n';
    violations += row.violations + row.dominance_violations;
  }
  write_output(a.out, csv.str(), out);
  return violations == 0 ? kExitOk : kExitInvalid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coded broadcast planning and simulation on storage hypergraphs", "hbcast"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a random instance");
  g->add_option("--users", gen.users, "Number of users V (>= 3)")->required();
  g->add_option("--segments", gen.segments, "Number of segments W")->required();
  g->add_option("--seed", gen.seed, "RNG seed")->required();
  g->add_option("--extra-edges", gen.extra_edges, "Redundant edges added to the quasi-tree");
  g->add_option("--max-edge-size", gen.max_edge_size, "Largest edge size r (default min(3, V-1))");
  g->add_option("--form", gen.form, "Output form")->check(CLI::IsMember({"storage", "hypergraph"}));
  g->add_option("--out", gen.out, "Output path (default: standard output)");

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Classify an instance and report its bounds");
  an->add_option("--in", analyze.in, "Instance file")->required();
  an->add_flag("--json", analyze.as_json, "Emit JSON");

  RunArgs runa;
  auto* rn = app.add_subcommand("run", "Plan, simulate and verify a broadcast schedule");
  rn->add_option("--in", runa.in, "Instance file")->required();
  rn->add_option("--strategy", runa.strategy, "dbqt | dbqt-general | naive")
      ->check(CLI::IsMember({"dbqt", "dbqt-general", "naive"}));
  rn->add_flag("--payload-check", runa.payload_check, "Replay on random payload vectors");
  rn->add_option("--payload-seed", runa.payload_seed, "Seed for payload vectors");
  rn->add_option("--transcript", runa.transcript, "Write the per-slot transcript here");
  rn->add_option("--plan", runa.plan, "Write the DBQT plan here");

  ExperimentArgs exp;
  auto* ex = app.add_subcommand("experiment", "DBQT on random non-quasi-trees vs. the lower bound");
  ex->add_option("--users-list", exp.users, "Comma-separated V values")->required()->delimiter(',');
  ex->add_option("--segments-list", exp.segments, "Comma-separated W values")->required()->delimiter(',');
  ex->add_option("--trials", exp.trials, "Trials per (V, W)");
  ex->add_option("--extra-edges", exp.extra_edges, "Redundant edges per instance");
  ex->add_option("--max-edge-size", exp.max_edge_size, "Largest edge size (capped at V-1)");
  ex->add_option("--seed", exp.seed, "Base seed")->required();
  ex->add_option("--threads", exp.threads, "Worker threads");
  ex->add_option("--out", exp.out, "CSV output path (default: standard output)");

  std::vector<std::string> argv_store{"hbcast"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*g) return cmd_gen(gen, out);
    if (*an) return cmd_analyze(analyze, out);
    if (*rn) return cmd_run(runa, out);
    if (*ex) return cmd_experiment(exp, out);
  } catch (const std::exception& e) {
    err << "hbcast: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace hbcast::cli
