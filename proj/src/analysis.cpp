#include "courtsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace courtsim {

std::string to_string(Interval i) { return i == Interval::complete ? "complete" : "second-half"; }

MeanCi mean_ci95(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorKind::data, "no values to average");
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  // Identical values have zero spread; summing them can still leave rounding noise.
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo == *hi) return {*lo, *lo, *lo};
  if (values.size() < 2) return {mean, mean, mean};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double half = 1.96 * std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  return {mean, mean - half, mean + half};
}

std::size_t interval_start(std::size_t game_count, Interval interval) {
  return interval == Interval::complete ? 0 : (game_count + 1) / 2;
}

std::vector<double> per_replication_accuracy(std::span<const ReplicationResult> results, std::size_t game_count,
                                             Interval interval) {
  const std::size_t first = interval_start(game_count, interval);
  if (first >= game_count) throw Error(ErrorKind::data, "interval " + to_string(interval) + " contains no games");
  std::vector<double> out;
  out.reserve(results.size());
  for (const auto& r : results) {
    if (r.predictions.size() != game_count) throw Error(ErrorKind::data, "replication does not cover the season");
    std::size_t correct = 0;
    for (std::size_t g = first; g < game_count; ++g) correct += r.predictions[g].correct ? 1 : 0;
    out.push_back(static_cast<double>(correct) / static_cast<double>(game_count - first));
  }
  return out;
}

AccuracyReport accuracy(std::span<const ReplicationResult> results, const SeasonDataset& dataset,
                        const SimulationConfig& config, Interval interval) {
  if (results.empty()) throw Error(ErrorKind::data, "no replication results");
  const auto acc = per_replication_accuracy(results, dataset.game_count(), interval);
  const auto ci = mean_ci95(acc);
  return AccuracyReport{dataset.season_id(), config.method.id, config.model, config.mode, interval,
                        ci.mean,             ci.ci_low,        ci.ci_high,   results.size()};
}

SeasonTally tally(std::span<const ReplicationResult> results, const SeasonDataset& dataset) {
  SeasonTally t;
  t.season_id = dataset.season_id();
  const std::size_t n = dataset.game_count();
  const std::size_t half = interval_start(n, Interval::second_half);
  t.games_complete = n;
  t.games_second_half = n - half;
  for (const auto& r : results) {
    std::size_t first = 0;
    std::size_t second = 0;
    for (std::size_t g = 0; g < r.predictions.size(); ++g) {
      if (!r.predictions[g].correct) continue;
      (g < half ? first : second) += 1;
    }
    t.correct_complete.push_back(first + second);
    t.correct_second_half.push_back(second);
  }
  return t;
}

AccuracyReport pooled_accuracy(std::span<const SeasonTally> seasons, const SimulationConfig& config,
                               Interval interval, bool game_weighted, std::string label) {
  if (seasons.empty()) throw Error(ErrorKind::data, "no seasons to pool");
  const std::size_t reps = seasons.front().correct_complete.size();
  for (const auto& s : seasons) {
    if (s.correct_complete.size() != reps) throw Error(ErrorKind::data, "seasons have different replication counts");
  }
  const bool complete = interval == Interval::complete;
  std::vector<double> acc(reps, 0.0);
  for (std::size_t r = 0; r < reps; ++r) {
    double correct = 0.0;
    double games = 0.0;
    double mean_of_seasons = 0.0;
    for (const auto& s : seasons) {
      const double c = static_cast<double>(complete ? s.correct_complete[r] : s.correct_second_half[r]);
      const double n = static_cast<double>(complete ? s.games_complete : s.games_second_half);
      if (n == 0.0) throw Error(ErrorKind::data, "season " + s.season_id + " has an empty interval");
      correct += c;
      games += n;
      mean_of_seasons += c / n;
    }
    acc[r] = game_weighted ? correct / games : mean_of_seasons / static_cast<double>(seasons.size());
  }
  const auto ci = mean_ci95(acc);
  return AccuracyReport{std::move(label), config.method.id, config.model, config.mode, interval,
                        ci.mean,          ci.ci_low,        ci.ci_high,   reps};
}

std::map<TeamId, int> real_wins(const SeasonDataset& dataset) {
  std::map<TeamId, int> wins;
  for (const auto& team : dataset.teams()) wins[team] = 0;
  for (const auto& g : dataset.games()) ++wins[g.winner() == Winner::home ? g.home : g.away];
  return wins;
}

double ols_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorKind::data, "slope inputs differ in length");
  if (x.empty()) return 0.0;
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxx == 0.0 ? 0.0 : sxy / sxx;
}

WinsDelta wins_delta(std::span<const ReplicationResult> results, const SeasonDataset& dataset) {
  WinsDelta out;
  const auto real = real_wins(dataset);
  out.records.reserve(real.size() * results.size());
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [team, wins] : real) {
    for (const auto& r : results) {
      const auto it = r.sim_wins.find(team);
      const int sim = it == r.sim_wins.end() ? 0 : it->second;
      out.records.push_back({dataset.season_id(), team, wins, r.rep_index, sim, sim - wins});
      xs.push_back(wins);
      ys.push_back(sim - wins);
    }
  }
  out.trend_slope = ols_slope(xs, ys);
  return out;
}

std::vector<SweepPoint> sweep_windows(std::span<const SeasonDataset> seasons, const SimulationConfig& base_config,
                                      std::vector<std::size_t> k_values, unsigned threads) {
  if (k_values.empty()) throw Error(ErrorKind::config, "no window sizes to sweep");
  if (seasons.empty()) throw Error(ErrorKind::config, "no seasons to sweep");
  std::sort(k_values.begin(), k_values.end());
  k_values.erase(std::unique(k_values.begin(), k_values.end()), k_values.end());

  std::vector<SweepPoint> points;
  for (const std::size_t k : k_values) {
    SimulationConfig config = base_config;
    config.window = WindowPolicy::last(k);
    std::vector<SeasonTally> tallies;
    for (const auto& season : seasons) tallies.push_back(tally(run_replications(season, config, threads), season));
    for (const auto interval : {Interval::complete, Interval::second_half}) {
      const auto r = pooled_accuracy(tallies, config, interval, true, "");
      points.push_back({k, config.method.id, interval, r.mean_accuracy, r.ci_low, r.ci_high});
    }
  }
  return points;
}

std::vector<ComparisonCount> compare_method_runs(std::span<const MethodRun> runs) {
  for (const auto& run : runs) {
    if (run.season_accuracy.size() != runs.front().season_accuracy.size() ||
        !std::equal(run.season_accuracy.begin(), run.season_accuracy.end(), runs.front().season_accuracy.begin(),
                    [](const auto& a, const auto& b) { return a.first == b.first; })) {
      throw Error(ErrorKind::data, "runs '" + runs.front().label + "' and '" + run.label + "' cover different seasons");
    }
  }
  std::vector<ComparisonCount> out;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    for (std::size_t j = i + 1; j < runs.size(); ++j) {
      ComparisonCount c{runs[i].label, runs[j].label, runs[i].season_accuracy.size(), 0, 0};
      for (const auto& [season, a] : runs[i].season_accuracy) {
        const double b = runs[j].season_accuracy.at(season);
        if (a > b) ++c.a_higher;
        if (b > a) ++c.b_higher;
      }
      out.push_back(c);
    }
  }
  return out;
}

MethodComparison compare_methods(std::span<const SeasonDataset> seasons,
                                 std::span<const SimulationConfig> configs, unsigned threads) {
  if (configs.size() < 2) throw Error(ErrorKind::config, "comparison needs at least two configurations");
  for (const auto& c : configs) {
    if (c.replications != configs.front().replications || c.master_seed != configs.front().master_seed) {
      throw Error(ErrorKind::config, "compared configurations must share replications and seed");
    }
  }
  MethodComparison out;
  std::vector<MethodRun> complete(configs.size());
  std::vector<MethodRun> second(configs.size());
  for (std::size_t i = 0; i < configs.size(); ++i) {
    complete[i].label = second[i].label = to_string(configs[i].method.id);
    for (const auto& season : seasons) {
      const auto results = run_replications(season, configs[i], threads);
      const auto full = accuracy(results, season, configs[i], Interval::complete);
      const auto half = accuracy(results, season, configs[i], Interval::second_half);
      complete[i].season_accuracy[season.season_id()] = full.mean_accuracy;
      second[i].season_accuracy[season.season_id()] = half.mean_accuracy;
      out.accuracy.push_back(full);
      out.accuracy.push_back(half);
    }
  }
  out.reports = {{Interval::complete, compare_method_runs(complete)},
                 {Interval::second_half, compare_method_runs(second)}};
  return out;
}

}  // namespace courtsim
