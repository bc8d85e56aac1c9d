#include "hbcast/general.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <numeric>
#include <thread>

#include "hbcast/errors.hpp"
#include "hbcast/generators.hpp"
#include "hbcast/rng.hpp"

namespace hbcast {

Reduction spanning_quasi_tree(const Hypergraph& h) {
  if (!is_connected(h)) throw InvalidInput("spanning_quasi_tree: hypergraph is disconnected");
  std::vector<Edge> order(h.edges().begin(), h.edges().end());
  std::stable_sort(order.begin(), order.end(), [](const Edge& a, const Edge& b) {
    return a.weight != b.weight ? a.weight < b.weight : a.vertices < b.vertices;
  });

  Reduction red;
  red.kept = h;
  // A bridge stays a bridge as further edges go, so one pass leaves no removable edge.
  for (const Edge& e : order) {
    const std::size_t idx = *red.kept.find(e.vertices);
    Hypergraph candidate = red.kept.without_edge(idx);
    if (is_connected(candidate)) {
      red.kept = std::move(candidate);
      red.removed.push_back(e);
    }
  }
  red.kept_delta = std::numeric_limits<Weight>::max();
  for (const Edge& e : red.kept.edges()) red.kept_delta = std::min(red.kept_delta, e.weight);
  if (red.kept.num_edges() == 0) red.kept_delta = 0;
  return red;
}

GeneralRun dbqt_general(const StorageTopology& topology) {
  if (topology.num_users() < 2) throw InvalidInput("dbqt_general: need at least two users");
  const StorageHypergraph sh = to_hypergraph(topology);
  if (!sh.uncovered.empty()) {
    throw InvalidInput("dbqt_general: " + std::to_string(sh.uncovered.size()) +
                       " segment(s) are held by nobody");
  }
  const std::size_t W = topology.num_segments();

  GeneralRun run;
  run.result.connected = is_connected(sh.graph);
  run.result.min_cut = min_cut(sh.graph).capacity;
  run.result.lower_bound = W - static_cast<std::size_t>(run.result.min_cut);

  NetworkState states = init_states(topology);
  if (!run.result.connected) {
    run.schedule = naive_schedule(topology);
    for (const Broadcast& b : run.schedule) apply_broadcast(states, b);
    run.result.completion = run.schedule.size();
  } else {
    run.reduction = spanning_quasi_tree(sh.graph);
    run.plan = plan_on_tree(topology, run.reduction->kept, sh.placement);
    run.schedule = run.plan->schedule;
    run.result.dbqt = run.schedule.size();
    for (const Broadcast& b : run.schedule) apply_broadcast(states, b);

    const FieldElement one(1);
    for (SegmentId s = 1; s <= W; ++s) {
      const bool everyone = std::all_of(states.begin(), states.end(), [s](const UserState& u) {
        return std::binary_search(u.decoded().begin(), u.decoded().end(), s);
      });
      if (everyone) continue;
      Broadcast b = coded_broadcast(topology, run.schedule.size(), topology.holders(s).lowest(),
                                    std::span(&s, 1), std::span(&one, 1));
      apply_broadcast(states, b);
      run.schedule.push_back(std::move(b));
      ++run.result.completion;
    }
  }
  run.result.total = run.schedule.size();
  run.result.complete = is_complete(states);
  return run;
}

std::size_t cde_bound(const Hypergraph& h) {
  Weight least = std::numeric_limits<Weight>::max();
  for (VertexId v : h.vertices()) least = std::min(least, degree(h, v).weighted);
  if (h.vertices().empty()) least = 0;
  return static_cast<std::size_t>(h.total_weight() - least);
}

namespace {

struct TrialOutcome {
  std::size_t broadcasts = 0;
  std::size_t lower_bound = 0;
  bool violation = false;
  bool dominance_violation = false;
};

TrialOutcome run_trial(std::size_t V, std::size_t W, std::size_t index, const ExperimentConfig& cfg) {
  GenConfig gen;
  gen.num_users = V;
  gen.num_segments = W;
  gen.max_edge_size = std::min(cfg.max_edge_size, V - 1);
  gen.extra_edges = cfg.extra_edges;
  gen.seed = derive_seed({cfg.seed, V, W, index});
  const GeneratedInstance inst = random_instance(gen);
  const GeneralRun run = dbqt_general(inst.topology);

  TrialOutcome out;
  out.broadcasts = run.result.total;
  out.lower_bound = run.result.lower_bound;
  out.violation = !run.result.complete || run.result.total < run.result.lower_bound ||
                  run.result.total > W;
  out.dominance_violation = run.result.lower_bound < cde_bound(inst.graph);
  return out;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
  if (config.users.empty() || config.segments.empty()) {
    throw InvalidInput("experiment: user and segment lists must be nonempty");
  }
  if (config.trials < 1) throw InvalidInput("experiment: need at least one trial");

  std::vector<ExperimentRow> rows;
  for (std::size_t V : config.users) {
    for (std::size_t W : config.segments) {
      std::vector<TrialOutcome> outcomes(config.trials);
      const unsigned workers = std::max(1U, std::min<unsigned>(config.threads,
                                                               static_cast<unsigned>(config.trials)));
      std::vector<std::exception_ptr> errors(workers);
      auto work = [&](unsigned w) {
        try {
          for (std::size_t i = w; i < config.trials; i += workers) outcomes[i] = run_trial(V, W, i, config);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      };
      if (workers == 1) {
        work(0);
      } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
      }
      for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }

      ExperimentRow row;
      row.users = V;
      row.segments = W;
      row.trials = config.trials;
      row.min_broadcasts = std::numeric_limits<std::size_t>::max();
      double sum_t = 0;
      double sum_lb = 0;
      for (const TrialOutcome& o : outcomes) {
        sum_t += static_cast<double>(o.broadcasts);
        sum_lb += static_cast<double>(o.lower_bound);
        row.min_broadcasts = std::min(row.min_broadcasts, o.broadcasts);
        row.max_broadcasts = std::max(row.max_broadcasts, o.broadcasts);
        row.violations += o.violation ? 1 : 0;
        row.dominance_violations += o.dominance_violation ? 1 : 0;
      }
      const double n = static_cast<double>(config.trials);
      row.mean_broadcasts = sum_t / n;
      row.mean_lower_bound = sum_lb / n;
      row.mean_gap = row.mean_broadcasts - row.mean_lower_bound;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace hbcast
