#include "courtsim/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace courtsim {

std::string to_string(ModelVariant m) { return m == ModelVariant::basic ? "basic" : "extended"; }
std::string to_string(SimulationMode m) { return m == SimulationMode::monte_carlo ? "monte-carlo" : "closed-loop"; }

void SimulationConfig::validate() const {
  if (replications < 1) throw Error(ErrorKind::config, "replications must be at least 1");
  if (!(prior > 0.0 && prior < 1.0)) throw Error(ErrorKind::config, "prior must lie strictly inside (0,1)");
  if (mode == SimulationMode::closed_loop && method.statistic == Statistic::net_rating) {
    throw Error(ErrorKind::config, "net-rating methods require monte-carlo mode");
  }
  if (method.outcome_fn == OutcomeFunction::bernoulli_race && method.statistic != Statistic::win_percentage) {
    throw Error(ErrorKind::config, "Bernoulli race requires a win-percentage statistic");
  }
  incentives.validate();
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

ReplicationStream::ReplicationStream(std::uint64_t master_seed, std::uint64_t rep_index)
    : engine_(splitmix64(splitmix64(master_seed) ^ splitmix64(rep_index ^ 0x5851f42d4c957f2dULL))) {}

double ReplicationStream::next() noexcept {
  ++draws_;
  // Top 53 bits -> [0,1); avoids implementation-defined distribution classes.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

namespace {

// Running per-team state while walking a season in order. Fed with real
// results in monte-carlo mode and with sampled results in closed-loop mode.
class SeasonState {
 public:
  SeasonState(const SeasonDataset& dataset, const SimulationConfig& config)
      : dataset_(dataset),
        config_(config),
        all_(dataset.teams().size()),
        home_(dataset.teams().size()),
        wins_(dataset.teams().size(), 0),
        losses_(dataset.teams().size(), 0) {
    for (const auto& team : dataset.teams()) priors_.push_back(dataset.prior(team).value_or(config.prior));
    for (auto& v : all_) v.reserve(static_cast<std::size_t>(dataset.schedule_length()));
  }

  OutcomeDistribution predict(std::size_t g) const {
    const auto h = dataset_.home_index(g);
    const auto a = dataset_.away_index(g);
    const auto& method = config_.method;
    const auto& home_hist = method.home_adjusted ? home_[h] : all_[h];
    Rating home = compute_statistic(method.statistic, home_hist, priors_[h], config_.window);
    Rating away = compute_statistic(method.statistic, all_[a], priors_[a], config_.window);

    if (config_.model == ModelVariant::extended) {
      const auto snapshot = standings_from_counts(dataset_, wins_, losses_);
      home = adjust(home, h, snapshot);
      away = adjust(away, a, snapshot);
    }
    return outcome_distribution(method, home, away);
  }

  void record(std::size_t g, Winner winner) {
    const auto& game = dataset_.game(g);
    const auto h = dataset_.home_index(g);
    const auto a = dataset_.away_index(g);
    const bool home_won = winner == Winner::home;
    const TeamOutcome home{home_won, true, game.home_points, game.away_points,
                           estimate_possessions(game.home_box).value};
    const TeamOutcome away{!home_won, false, game.away_points, game.home_points,
                           estimate_possessions(game.away_box).value};
    all_[h].push_back(home);
    home_[h].push_back(home);
    all_[a].push_back(away);
    ++(home_won ? wins_[h] : losses_[h]);
    ++(home_won ? losses_[a] : wins_[a]);
  }

  std::span<const int> wins() const noexcept { return wins_; }

 private:
  Rating adjust(const Rating& rating, std::size_t team, const StandingsSnapshot& snapshot) const {
    const auto& id = dataset_.teams()[team];
    const auto conf = snapshot.conference(dataset_.conference(id));
    const auto row = std::find_if(conf.begin(), conf.end(), [&](const StandingRow& r) { return r.team == id; });
    const auto status = playoff_status(*row, conf, dataset_.era());
    // Games left after the one being predicted.
    const int remaining_after = row->remaining - 1;
    return incentive_adjustment(rating, config_.method, status, dataset_.owns_pick(id), remaining_after,
                                config_.incentives);
  }

  const SeasonDataset& dataset_;
  const SimulationConfig& config_;
  std::vector<std::vector<TeamOutcome>> all_;
  std::vector<std::vector<TeamOutcome>> home_;
  std::vector<int> wins_;
  std::vector<int> losses_;
  std::vector<double> priors_;
};

Winner to_winner(GameOutcome o) { return o == GameOutcome::home_win ? Winner::home : Winner::away; }

void check_inputs(const SeasonDataset& dataset, const SimulationConfig& config) {
  config.validate();
  if (dataset.game_count() == 0) throw Error(ErrorKind::config, "season " + dataset.season_id() + " has no games");
}

ReplicationResult finish(const SeasonDataset& dataset, std::size_t rep_index, std::vector<GamePrediction> predictions) {
  ReplicationResult result;
  result.rep_index = rep_index;
  for (const auto& team : dataset.teams()) result.sim_wins[team] = 0;
  for (std::size_t g = 0; g < predictions.size(); ++g) {
    const auto& game = dataset.game(g);
    ++result.sim_wins[predictions[g].sampled == Winner::home ? game.home : game.away];
  }
  result.predictions = std::move(predictions);
  return result;
}

ReplicationResult sample_replication(const SeasonDataset& dataset, const SimulationConfig& config,
                                     std::span<const OutcomeDistribution> dists, std::size_t rep_index) {
  ReplicationStream stream(config.master_seed, rep_index);
  std::vector<GamePrediction> predictions;
  predictions.reserve(dataset.game_count());
  for (std::size_t g = 0; g < dataset.game_count(); ++g) {
    const auto& game = dataset.game(g);
    const Winner sampled = to_winner(sample_outcome(dists[g], stream.next()));
    predictions.push_back({static_cast<std::uint32_t>(g), dists[g].p_home_win, sampled, sampled == game.winner()});
  }
  return finish(dataset, rep_index, std::move(predictions));
}

ReplicationResult closed_loop_replication(const SeasonDataset& dataset, const SimulationConfig& config,
                                          std::size_t rep_index) {
  ReplicationStream stream(config.master_seed, rep_index);
  SeasonState state(dataset, config);
  std::vector<GamePrediction> predictions;
  predictions.reserve(dataset.game_count());
  for (std::size_t g = 0; g < dataset.game_count(); ++g) {
    const auto& game = dataset.game(g);
    const auto dist = state.predict(g);
    const Winner sampled = to_winner(sample_outcome(dist, stream.next()));
    state.record(g, sampled);
    predictions.push_back({static_cast<std::uint32_t>(g), dist.p_home_win, sampled, sampled == game.winner()});
  }
  return finish(dataset, rep_index, std::move(predictions));
}

}  // namespace

std::vector<OutcomeDistribution> monte_carlo_distributions(const SeasonDataset& dataset,
                                                           const SimulationConfig& config) {
  SeasonState state(dataset, config);
  std::vector<OutcomeDistribution> out;
  out.reserve(dataset.game_count());
  for (std::size_t g = 0; g < dataset.game_count(); ++g) {
    out.push_back(state.predict(g));
    state.record(g, dataset.game(g).winner());
  }
  return out;
}

ReplicationResult simulate_replication(const SeasonDataset& dataset, const SimulationConfig& config,
                                       std::size_t rep_index) {
  check_inputs(dataset, config);
  if (config.mode == SimulationMode::closed_loop) return closed_loop_replication(dataset, config, rep_index);
  const auto dists = monte_carlo_distributions(dataset, config);
  return sample_replication(dataset, config, dists, rep_index);
}

std::vector<ReplicationResult> run_replications(const SeasonDataset& dataset, const SimulationConfig& config,
                                                unsigned threads) {
  check_inputs(dataset, config);
  std::vector<OutcomeDistribution> dists;
  if (config.mode == SimulationMode::monte_carlo) dists = monte_carlo_distributions(dataset, config);

  const std::size_t reps = config.replications;
  std::vector<ReplicationResult> results(reps);
  std::vector<std::exception_ptr> errors(reps);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t r = next++; r < reps; r = next++) {
      try {
        results[r] = config.mode == SimulationMode::monte_carlo ? sample_replication(dataset, config, dists, r)
                                                                : closed_loop_replication(dataset, config, r);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const auto n_workers = static_cast<unsigned>(std::min<std::size_t>(threads, reps));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace courtsim
