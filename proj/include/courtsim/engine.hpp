#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "courtsim/agents.hpp"
#include "courtsim/domain.hpp"
#include "courtsim/outcome.hpp"
#include "courtsim/ratings.hpp"

namespace courtsim {

enum class ModelVariant { basic, extended };
enum class SimulationMode { monte_carlo, closed_loop };

std::string to_string(ModelVariant m);
std::string to_string(SimulationMode m);

struct SimulationConfig {
  MethodSpec method = method_spec(MethodId::i);
  ModelVariant model = ModelVariant::basic;
  SimulationMode mode = SimulationMode::monte_carlo;
  WindowPolicy window = WindowPolicy::unbounded();
  double prior = 0.5;  // used for teams without a per-team prior in the dataset
  IncentiveParams incentives;
  std::size_t replications = 1000;
  std::uint64_t master_seed = 0;

  // Throws Error(config) on invalid combinations.
  void validate() const;
};

struct GamePrediction {
  std::uint32_t game_index = 0;  // position in SeasonDataset::games()
  double p_home_win = 0.5;
  Winner sampled = Winner::home;
  bool correct = false;
};

struct ReplicationResult {
  std::size_t rep_index = 0;
  std::vector<GamePrediction> predictions;
  std::map<TeamId, int> sim_wins;
};

// Uniform [0,1) stream for one replication. The stream is a pure function of
// (master_seed, rep_index): the two are mixed with splitmix64 into the seed of
// a mt19937_64 engine, so no replication's draws depend on any other's.
class ReplicationStream {
 public:
  ReplicationStream(std::uint64_t master_seed, std::uint64_t rep_index);

  double next() noexcept;
  std::uint64_t draws() const noexcept { return draws_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Per-game outcome distribution for every game in monte-carlo mode. Inputs
// come only from real past results, so this is the same for every
// replication.
std::vector<OutcomeDistribution> monte_carlo_distributions(const SeasonDataset& dataset,
                                                           const SimulationConfig& config);

ReplicationResult simulate_replication(const SeasonDataset& dataset, const SimulationConfig& config,
                                       std::size_t rep_index);

// Runs replications 0..config.replications-1 on up to `threads` workers
// (0 = hardware concurrency). Output is identical for any thread count.
std::vector<ReplicationResult> run_replications(const SeasonDataset& dataset, const SimulationConfig& config,
                                                unsigned threads = 0);

}  // namespace courtsim
