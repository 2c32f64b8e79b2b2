#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "courtsim/engine.hpp"

namespace courtsim {

enum class Interval { complete, second_half };
std::string to_string(Interval i);

// Mean and normal-approximation 95% interval over per-replication values.
struct MeanCi {
  double mean = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};
MeanCi mean_ci95(std::span<const double> values);

struct AccuracyReport {
  std::string season_id;
  MethodId method = MethodId::i;
  ModelVariant model = ModelVariant::basic;
  SimulationMode mode = SimulationMode::monte_carlo;
  Interval interval = Interval::complete;
  double mean_accuracy = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::size_t replications = 0;
};

// First game index counted in `interval`: 0 for the complete season, ceil(N/2)
// for the second half of the league-wide schedule.
std::size_t interval_start(std::size_t game_count, Interval interval);

// Fraction of correct predictions per replication within the interval.
std::vector<double> per_replication_accuracy(std::span<const ReplicationResult> results, std::size_t game_count,
                                             Interval interval);

AccuracyReport accuracy(std::span<const ReplicationResult> results, const SeasonDataset& dataset,
                        const SimulationConfig& config, Interval interval);

// Correct-prediction counts per replication for one season, enough to pool
// accuracy across seasons without keeping every prediction.
struct SeasonTally {
  std::string season_id;
  std::size_t games_complete = 0;
  std::size_t games_second_half = 0;
  std::vector<std::size_t> correct_complete;     // indexed by replication
  std::vector<std::size_t> correct_second_half;  // indexed by replication
};
SeasonTally tally(std::span<const ReplicationResult> results, const SeasonDataset& dataset);

// Accuracy pooled over seasons, per replication index. `game_weighted`
// divides total correct by total games; otherwise the seasons' accuracies
// are averaged with equal weight.
AccuracyReport pooled_accuracy(std::span<const SeasonTally> seasons, const SimulationConfig& config,
                               Interval interval, bool game_weighted, std::string label);

struct WinsDeltaRecord {
  std::string season_id;
  TeamId team;
  int real_wins = 0;
  std::size_t rep = 0;
  int sim_wins = 0;
  int delta = 0;
};

struct WinsDelta {
  std::vector<WinsDeltaRecord> records;  // ordered by team, then replication
  double trend_slope = 0.0;
};

std::map<TeamId, int> real_wins(const SeasonDataset& dataset);

WinsDelta wins_delta(std::span<const ReplicationResult> results, const SeasonDataset& dataset);

// Ordinary least-squares slope of y on x; 0 when x has no spread.
double ols_slope(std::span<const double> x, std::span<const double> y);

struct SweepPoint {
  std::size_t window = 0;
  MethodId method = MethodId::i;
  Interval interval = Interval::complete;
  double mean_accuracy = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

// One engine run per distinct window size, all with the base config's seed;
// accuracy is pooled game-weighted across the given seasons. Points are
// ordered by window, then interval.
std::vector<SweepPoint> sweep_windows(std::span<const SeasonDataset> seasons, const SimulationConfig& base_config,
                                      std::vector<std::size_t> k_values, unsigned threads = 0);

// Per-season mean accuracies of one configuration.
struct MethodRun {
  std::string label;
  std::map<std::string, double> season_accuracy;  // season_id -> mean accuracy
};

struct ComparisonCount {
  std::string method_a;
  std::string method_b;
  std::size_t seasons = 0;
  std::size_t a_higher = 0;
  std::size_t b_higher = 0;
};

// Pairwise season counts where one run's mean accuracy is strictly higher.
// All runs must cover the same seasons.
std::vector<ComparisonCount> compare_method_runs(std::span<const MethodRun> runs);

struct ComparisonReport {
  Interval interval = Interval::complete;
  std::vector<ComparisonCount> counts;
};

struct MethodComparison {
  std::vector<AccuracyReport> accuracy;  // per config, season and interval
  std::vector<ComparisonReport> reports;  // complete, then second half
};

// Simulates every config on every season and compares per-season means for
// both intervals.
MethodComparison compare_methods(std::span<const SeasonDataset> seasons,
                                 std::span<const SimulationConfig> configs, unsigned threads = 0);

}  // namespace courtsim
