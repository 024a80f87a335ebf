#include "domset/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "domset/engine.hpp"
#include "domset/generators.hpp"
#include "domset/moments.hpp"
#include "domset/prng.hpp"

namespace domset {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Config encoding

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(const std::string& field, const std::string& text) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ConfigError(field, "cannot parse '" + text + "' as a number");
  }
  return value;
}

std::vector<std::string> parse_list(const std::string& field, const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    // A bare scalar is accepted as a one-element list.
    return {text};
  }
  std::vector<std::string> items;
  std::string inner = text.substr(1, text.size() - 2);
  std::stringstream ss(inner);
  for (std::string item; std::getline(ss, item, ',');) {
    item = trim(item);
    if (item.empty()) throw ConfigError(field, "empty list element");
    items.push_back(item);
  }
  return items;
}

bool parse_bool(const std::string& field, const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw ConfigError(field, "expected true or false, got '" + text + "'");
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig c;
  std::map<std::string, std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no), "missing key");
    if (!seen.emplace(key, value).second) throw ConfigError(key, "duplicate key");
    if (value.empty()) throw ConfigError(key, "missing value");

    if (key == "model") {
      if (value == "er") c.model = Model::er;
      else if (value == "gjj") c.model = Model::gjj;
      else throw ConfigError(key, "expected er or gjj, got '" + value + "'");
    } else if (key == "gamma_target") {
      c.gamma_target = parse_number<int>(key, value);
    } else if (key == "n") {
      c.n.clear();
      for (const auto& item : parse_list(key, value)) c.n.push_back(parse_number<std::size_t>(key, item));
    } else if (key == "delta") {
      c.delta = parse_number<double>(key, value);
    } else if (key == "epsilon_rule") {
      if (value == "threshold") c.epsilon_rule = EpsilonRule::threshold;
      else if (value == "schedule") c.epsilon_rule = EpsilonRule::schedule;
      else throw ConfigError(key, "expected threshold or schedule, got '" + value + "'");
    } else if (key == "epsilon") {
      c.epsilon = parse_number<double>(key, value);
    } else if (key == "p") {
      c.p = parse_number<double>(key, value);
    } else if (key == "trials") {
      c.trials = parse_number<std::uint64_t>(key, value);
    } else if (key == "seed") {
      c.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "k_list") {
      c.k_list.clear();
      for (const auto& item : parse_list(key, value)) c.k_list.push_back(parse_number<std::size_t>(key, item));
    } else if (key == "mode") {
      if (value == "exact") c.mode = CountMode::exact;
      else if (value == "sample") c.mode = CountMode::sample;
      else throw ConfigError(key, "expected exact or sample, got '" + value + "'");
    } else if (key == "sample_trials") {
      c.sample_trials = parse_number<std::uint64_t>(key, value);
    } else if (key == "work_budget") {
      c.work_budget = parse_number<std::uint64_t>(key, value);
    } else if (key == "workers") {
      c.workers = parse_number<unsigned>(key, value);
    } else if (key == "timing") {
      c.timing = parse_bool(key, value);
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  validate(c);
  return c;
}

ExperimentConfig parse_config(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

ExperimentConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("path", "cannot open '" + path + "'");
  return parse_config(in);
}

std::string serialize_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "model = " << (c.model == Model::er ? "er" : "gjj") << '\n';
  out << "gamma_target = " << c.gamma_target << '\n';
  out << "n = " << join(c.n) << '\n';
  out << "delta = " << format_double(c.delta) << '\n';
  out << "epsilon_rule = " << (c.epsilon_rule == EpsilonRule::threshold ? "threshold" : "schedule")
      << '\n';
  if (c.epsilon) out << "epsilon = " << format_double(*c.epsilon) << '\n';
  if (c.p) out << "p = " << format_double(*c.p) << '\n';
  out << "trials = " << c.trials << '\n';
  out << "seed = " << c.seed << '\n';
  out << "k_list = " << join(c.k_list) << '\n';
  out << "mode = " << (c.mode == CountMode::exact ? "exact" : "sample") << '\n';
  out << "sample_trials = " << c.sample_trials << '\n';
  out << "work_budget = " << c.work_budget << '\n';
  out << "workers = " << c.workers << '\n';
  out << "timing = " << (c.timing ? "true" : "false") << '\n';
  return out.str();
}

double config_epsilon(const ExperimentConfig& c, std::size_t n) {
  if (c.p) return 1.0 - *c.p;
  if (c.epsilon) return *c.epsilon;
  try {
    return c.epsilon_rule == EpsilonRule::schedule
               ? epsilon_schedule(c.gamma_target, n)
               : markov_epsilon_threshold(c.gamma_target, n, c.delta);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("epsilon_rule", e.what());
  }
}

void validate(const ExperimentConfig& c) {
  if (c.gamma_target < 2) throw ConfigError("gamma_target", "must be >= 2");
  if (c.n.empty()) throw ConfigError("n", "at least one vertex count is required");
  for (std::size_t n : c.n) {
    if (n < 1 || n > kMaxVertices) throw ConfigError("n", "each n must lie in [1, 4096]");
    if (c.model == Model::gjj && (n % 3 != 0 || n < 9)) {
      throw ConfigError("n", "the gjj model needs n divisible by 3 and n >= 9");
    }
  }
  if (!(c.delta > 0.0)) throw ConfigError("delta", "must be > 0");
  if (c.epsilon && !(*c.epsilon >= 0.0 && *c.epsilon <= 1.0)) {
    throw ConfigError("epsilon", "must lie in [0, 1]");
  }
  if (c.p && !(*c.p >= 0.0 && *c.p <= 1.0)) throw ConfigError("p", "must lie in [0, 1]");
  if (c.trials < 1) throw ConfigError("trials", "must be >= 1");
  if (c.k_list.empty()) throw ConfigError("k_list", "at least one set size is required");
  const std::size_t n_min = *std::min_element(c.n.begin(), c.n.end());
  for (std::size_t k : c.k_list) {
    if (k > n_min) throw ConfigError("k_list", "k=" + std::to_string(k) + " exceeds n");
    if (c.mode == CountMode::sample && k < 1) throw ConfigError("k_list", "sample mode needs k >= 1");
  }
  if (c.mode == CountMode::sample && c.sample_trials < 1) {
    throw ConfigError("sample_trials", "must be >= 1");
  }
  if (c.model == Model::er) {
    for (std::size_t n : c.n) {
      if (!c.p && !c.epsilon && n < 2) throw ConfigError("n", "epsilon rules need n >= 2");
      (void)config_epsilon(c, n);
    }
  }
}

// ---------------------------------------------------------------------------
// Runner

namespace {

std::vector<ExperimentRow> run_trial(const ExperimentConfig& c, std::size_t n,
                                     std::uint64_t trial) {
  const std::uint64_t seed = derive_seed(c.seed, trial);
  std::optional<double> eps;
  std::optional<Graph> graph;
  if (c.model == Model::er) {
    eps = config_epsilon(c, n);
    graph = erdos_renyi(n, 1.0 - *eps, seed);
  } else {
    graph = gjj_gamma3(n);
  }
  const std::size_t gamma = domination_number(*graph);

  std::vector<ExperimentRow> rows;
  for (std::size_t k : c.k_list) {
    ExperimentRow row;
    row.trial = trial;
    row.seed = seed;
    row.n = n;
    row.gamma_target = c.gamma_target;
    row.epsilon = eps;
    if (eps) row.p = 1.0 - *eps;
    row.gamma_measured = gamma;
    row.k = k;

    const auto start = std::chrono::steady_clock::now();
    if (c.mode == CountMode::exact) {
      try {
        const auto count = count_dominating_exact(*graph, k, {c.work_budget, 1});
        row.dominating_count = to_decimal(count.dominating);
        row.fraction = count.fraction;
      } catch (const BudgetExceeded&) {
        row.budget_error = true;
      }
    } else {
      row.fraction = estimate_dominating_fraction(*graph, k, c.sample_trials, derive_seed(seed, k)).point;
    }
    const auto stop = std::chrono::steady_clock::now();
    if (c.timing) row.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();

    if (eps && k >= 1) {
      const int kk = static_cast<int>(k);
      row.formula_expected = expected_count(n, kk, *eps);
      row.formula_sd = std::sqrt(variance_exact(n, kk, *eps).value);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& c) {
  validate(c);
  struct Job {
    std::size_t n;
    std::uint64_t trial;
  };
  std::vector<Job> jobs;
  for (std::size_t n : c.n) {
    for (std::uint64_t t = 0; t < c.trials; ++t) jobs.push_back({n, t});
  }
  std::vector<std::vector<ExperimentRow>> results(jobs.size());

  unsigned workers = c.workers != 0 ? c.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t j; (j = next.fetch_add(1, std::memory_order_relaxed)) < jobs.size();) {
      results[j] = run_trial(c, jobs[j].n, jobs[j].trial);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }

  std::vector<ExperimentRow> rows;
  rows.reserve(jobs.size() * c.k_list.size());
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(rows));
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  auto opt = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string("NA"); };
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.trial << ',' << r.seed << ',' << r.n << ',' << r.gamma_target << ',' << opt(r.epsilon)
        << ',' << opt(r.p) << ',' << r.gamma_measured << ',' << r.k << ','
        << (r.budget_error ? std::string("ERR_BUDGET") : r.dominating_count.value_or("NA")) << ','
        << opt(r.fraction) << ',' << opt(r.formula_expected) << ',' << opt(r.formula_sd) << ','
        << opt(r.elapsed_ms) << '\n';
  }
}

std::string to_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

}  // namespace domset
