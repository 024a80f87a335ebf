// domset: command-line front end.
//
//   domset gen        --model er|gjj --n N [--p P | --gamma G --delta D [--rule threshold|schedule]] --seed S --out FILE
//   domset analyze    --in FILE
//   domset count      --in FILE --k K [--mode exact|sample] [--trials T] [--seed S]
//   domset bounds     --n N --gamma G --epsilon E [--phi PHI]
//   domset oracle     --n N --gamma G --epsilon E
//   domset experiment --config FILE --out CSV [--workers W]
//
// Exit codes: 0 success, 1 other failure, 2 configuration/argument error,
// 3 every experiment row (or the requested count) hit the work budget.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "domset/engine.hpp"
#include "domset/experiment.hpp"
#include "domset/generators.hpp"
#include "domset/graph.hpp"
#include "domset/kernels.hpp"
#include "domset/moments.hpp"
#include "domset/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace domset;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json moments_json(const MomentReport& m, double phi) {
  json j;
  j["n"] = m.n;
  j["gamma"] = m.gamma;
  j["epsilon"] = m.epsilon;
  if (m.markov) {
    j["markov_bound"] = number_or_null(m.markov->bound);
    j["markov_uncapped"] = number_or_null(m.markov->uncapped);
  } else {
    j["markov_bound"] = nullptr;
    j["markov_uncapped"] = nullptr;
  }
  j["expected"] = number_or_null(m.expected);
  j["expected_fraction"] = number_or_null(m.expected_fraction);
  j["second_moment"] = number_or_null(m.second_moment);
  j["variance"] = number_or_null(m.variance.value);
  j["variance_clamped"] = m.variance.clamped;
  j["phi"] = phi;
  j["chebyshev_tail"] = number_or_null(m.chebyshev_tail(phi));
  return j;
}

int cmd_gen(const std::string& model, std::size_t n, std::optional<double> p, int gamma, double delta,
            const std::string& rule, std::uint64_t seed, const std::string& out) {
  Graph g = [&] {
    if (model == "gjj") return gjj_gamma3(n);
    if (model != "er") throw std::invalid_argument("--model must be er or gjj");
    double prob;
    if (p) {
      prob = *p;
    } else if (rule == "schedule") {
      prob = 1.0 - epsilon_schedule(gamma, n);
    } else if (rule == "threshold") {
      prob = 1.0 - markov_epsilon_threshold(gamma, n, delta);
    } else {
      throw std::invalid_argument("--rule must be threshold or schedule");
    }
    return erdos_renyi(n, prob, seed);
  }();
  write_graph_file(out, g);
  return 0;
}

int cmd_analyze(const std::string& in) {
  const Graph g = read_graph_file(in);
  const auto profile = row_zero_profile(g);
  const auto witness = minimum_dominating_set(g);
  json j;
  j["n"] = g.order();
  j["m"] = g.edge_count();
  j["gamma"] = witness.size();
  j["minimum_dominating_set"] = witness.members();
  j["min_degree"] = g.order() - 1 - profile.z_max;
  j["row_zero_profile"] = {{"zeros_per_row", profile.zeros_per_row},
                           {"z_max", profile.z_max},
                           {"argmax", profile.argmax}};
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_count(const std::string& in, std::size_t k, const std::string& mode, std::uint64_t trials,
              std::uint64_t seed, std::uint64_t budget, unsigned workers) {
  const Graph g = read_graph_file(in);
  json j;
  j["n"] = g.order();
  j["k"] = k;
  if (mode == "exact") {
    try {
      const auto c = count_dominating_exact(g, k, {budget, workers});
      j["mode"] = "exact";
      j["total"] = to_decimal(c.total);
      j["dominating"] = to_decimal(c.dominating);
      j["non_dominating"] = to_decimal(c.non_dominating);
      j["fraction"] = c.fraction;
      j["row_zero_lower_bound"] = to_decimal(row_zero_lower_bound(g, k));
    } catch (const BudgetExceeded& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitBudget;
    }
  } else if (mode == "sample") {
    const auto est = estimate_dominating_fraction(g, k, trials, seed);
    j["mode"] = "sample";
    j["point"] = est.point;
    j["half_width_99"] = est.half_width;
    j["trials"] = est.trials;
    j["seed"] = est.seed;
  } else {
    throw std::invalid_argument("--mode must be exact or sample");
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_bounds(std::size_t n, int gamma, double epsilon, std::optional<double> phi_opt) {
  const double phi = phi_opt.value_or(std::log(static_cast<double>(n)));
  json j;
  j["moments"] = moments_json(moment_report(n, gamma, epsilon), phi);
  if (gamma >= 3) {
    const auto b = cor32_bracket(n, gamma);
    j["bracket"] = {{"gamma", b.gamma},
                    {"n", b.n},
                    {"total", to_decimal(b.total)},
                    {"upper_defect", number_or_null(b.upper_defect)},
                    {"lower_defect", number_or_null(b.lower_defect)},
                    {"defect_crossover_n", b.defect_crossover_n},
                    {"total_threshold_n", b.total_threshold_n}};
  } else {
    j["bracket"] = nullptr;
  }
  if (gamma - 1 >= 2) {
    const auto e = eq1_max_a(n, gamma - 1);
    j["eq1"] = {{"b", e.b},
                {"n", e.n},
                {"a_star", e.a_star ? json(*e.a_star) : json(nullptr)},
                {"witness_target", e.witness_target},
                {"witness_holds", e.witness_holds}};
  } else {
    j["eq1"] = nullptr;
  }
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_oracle(std::size_t n, int gamma, double epsilon) {
  const auto r = oracle::brute_expectation(n, gamma, epsilon);
  json j;
  j["n"] = r.n;
  j["gamma"] = r.gamma;
  j["epsilon"] = r.epsilon;
  j["expectation"] = r.expectation;
  j["second_moment"] = r.second_moment;
  j["variance"] = r.second_moment - r.expectation * r.expectation;
  j["weight_sum"] = r.weight_sum;
  j["graphs_enumerated"] = r.graphs_enumerated;
  j["formula_expected"] = expected_count(n, gamma, epsilon);
  j["formula_second_moment"] = second_moment_exact(n, gamma, epsilon);
  std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_experiment(const std::string& config_path, const std::string& out_path,
                   std::optional<unsigned> workers) {
  ExperimentConfig config = read_config_file(config_path);
  if (workers) config.workers = *workers;
  const auto rows = run_experiment(config);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  write_csv(out, rows);
  const bool all_failed =
      !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.budget_error; });
  return all_failed ? kExitBudget : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dominating-set counting, random-graph ensembles and moment bounds"};
  app.require_subcommand(1);
  std::string isa = "auto";
  app.add_option("--isa", isa, "Kernel variant: auto, scalar or avx2");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph as an edge list");
  std::string model = "er", rule = "threshold", gen_out;
  std::size_t gen_n = 0;
  std::optional<double> gen_p;
  int gen_gamma = 2;
  double gen_delta = 1.0;
  std::uint64_t gen_seed = 0;
  gen->add_option("--model", model, "er or gjj")->required();
  gen->add_option("--n", gen_n, "Vertex count")->required();
  auto* p_opt = gen->add_option("--p", gen_p, "Edge probability");
  gen->add_option("--gamma", gen_gamma, "Target domination number (sets epsilon)")->excludes(p_opt);
  gen->add_option("--delta", gen_delta, "Slack in the first-moment threshold")->excludes(p_opt);
  gen->add_option("--rule", rule, "threshold or schedule")->excludes(p_opt);
  gen->add_option("--seed", gen_seed, "64-bit seed");
  gen->add_option("--out", gen_out, "Output edge-list file")->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Domination number and row-zero profile as JSON");
  std::string analyze_in;
  analyze->add_option("--in", analyze_in, "Edge-list file")->required();

  // count
  auto* count = app.add_subcommand("count", "Count dominating k-sets");
  std::string count_in, count_mode = "exact";
  std::size_t count_k = 0;
  std::uint64_t count_trials = 10000, count_seed = 0, count_budget = kDefaultWorkBudget;
  unsigned count_workers = 0;
  count->add_option("--in", count_in, "Edge-list file")->required();
  count->add_option("--k", count_k, "Set size")->required();
  count->add_option("--mode", count_mode, "exact or sample");
  count->add_option("--trials", count_trials, "Samples (sample mode)");
  count->add_option("--seed", count_seed, "Seed (sample mode)");
  count->add_option("--budget", count_budget, "Work budget C(n,k)*k (exact mode)");
  count->add_option("--workers", count_workers, "Threads (exact mode, 0 = all cores)");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Moments, tails and bounds as JSON");
  std::size_t bounds_n = 0;
  int bounds_gamma = 2;
  double bounds_eps = 0.0;
  std::optional<double> bounds_phi;
  bounds->add_option("--n", bounds_n, "Vertex count")->required();
  bounds->add_option("--gamma", bounds_gamma, "Set size gamma")->required();
  bounds->add_option("--epsilon", bounds_eps, "Edge-absence probability")->required();
  bounds->add_option("--phi", bounds_phi, "Chebyshev deviation factor (default ln n)");

  // oracle
  auto* orc = app.add_subcommand("oracle", "Exhaustive moments over all labelled graphs (n <= 6)");
  std::size_t oracle_n = 0;
  int oracle_gamma = 1;
  double oracle_eps = 0.0;
  orc->add_option("--n", oracle_n, "Vertex count")->required();
  orc->add_option("--gamma", oracle_gamma, "Set size")->required();
  orc->add_option("--epsilon", oracle_eps, "Edge-absence probability")->required();

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run an ensemble experiment to CSV");
  std::string config_path, csv_path;
  std::optional<unsigned> exp_workers;
  experiment->add_option("--config", config_path, "Config file")->required();
  experiment->add_option("--out", csv_path, "Output CSV")->required();
  experiment->add_option("--workers", exp_workers, "Override config workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    kernels::set_active(kernels::parse_isa(isa));
    if (*gen) return cmd_gen(model, gen_n, gen_p, gen_gamma, gen_delta, rule, gen_seed, gen_out);
    if (*analyze) return cmd_analyze(analyze_in);
    if (*count) {
      return cmd_count(count_in, count_k, count_mode, count_trials, count_seed, count_budget,
                       count_workers);
    }
    if (*bounds) return cmd_bounds(bounds_n, bounds_gamma, bounds_eps, bounds_phi);
    if (*orc) return cmd_oracle(oracle_n, oracle_gamma, oracle_eps);
    if (*experiment) return cmd_experiment(config_path, csv_path, exp_workers);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
