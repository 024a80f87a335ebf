#pragma once

// Ensemble experiments: generate graphs trial by trial, measure the domination
// number, count dominating k-sets, and put the measurements next to the
// closed-form moments.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace domset {

class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error("config field '" + field + "': " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

private:
  std::string field_;
};

enum class Model { er, gjj };
enum class CountMode { exact, sample };
enum class EpsilonRule { threshold, schedule };

/// Text encoding: one "key = value" per line, lists as "[a, b, c]", '#'
/// starts a comment. serialize_config writes every key in a fixed order, so
/// parse(serialize(c)) == c and serialize(parse(serialize(c))) is stable.
struct ExperimentConfig {
  Model model = Model::er;
  int gamma_target = 2;
  std::vector<std::size_t> n{100};
  double delta = 1.0;
  EpsilonRule epsilon_rule = EpsilonRule::threshold;
  std::optional<double> epsilon;  // overrides epsilon_rule
  std::optional<double> p;        // overrides epsilon (epsilon = 1 - p)
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::vector<std::size_t> k_list{2};
  CountMode mode = CountMode::exact;
  std::uint64_t sample_trials = 10'000;
  std::uint64_t work_budget = 1'000'000'000ULL;
  unsigned workers = 1;  // trials run concurrently; 0 = hardware concurrency
  bool timing = false;   // elapsed_ms is "NA" unless set, keeping CSVs byte-stable

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig read_config_file(const std::string& path);
std::string serialize_config(const ExperimentConfig& config);

/// Throws ConfigError naming the first offending field.
void validate(const ExperimentConfig& config);

/// Edge-absence probability used for ER graphs of order n under this config.
double config_epsilon(const ExperimentConfig& config, std::size_t n);

struct ExperimentRow {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;  // per-trial seed: derive_seed(config.seed, trial)
  std::size_t n = 0;
  int gamma_target = 0;
  std::optional<double> epsilon;  // absent for the gjj model
  std::optional<double> p;
  std::size_t gamma_measured = 0;
  std::size_t k = 0;
  std::optional<std::string> dominating_count;  // decimal; absent in sample mode or on error
  std::optional<double> fraction;
  std::optional<double> formula_expected;
  std::optional<double> formula_sd;
  std::optional<double> elapsed_ms;
  bool budget_error = false;
};

/// Rows ordered by (position of n in config.n, trial, position of k in k_list).
/// The output does not depend on config.workers.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

inline constexpr const char* kCsvHeader =
    "trial,seed,n,gamma_target,epsilon,p,gamma_measured,k,dominating_count,fraction,"
    "formula_expected,formula_sd,elapsed_ms";

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
std::string to_csv(const std::vector<ExperimentRow>& rows);

/// Shortest round-trip decimal, independent of locale.
std::string format_double(double x);

}  // namespace domset
