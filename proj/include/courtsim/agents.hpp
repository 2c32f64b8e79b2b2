#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "courtsim/domain.hpp"
#include "courtsim/outcome.hpp"
#include "courtsim/ratings.hpp"

namespace courtsim {

struct StandingRow {
  TeamId team;
  int wins = 0;
  int losses = 0;
  int remaining = 0;

  int max_wins() const noexcept { return wins + remaining; }
};

// Per-conference standings, each list sorted by wins descending (team id
// ascending among equal wins).
struct StandingsSnapshot {
  std::array<std::vector<StandingRow>, 2> conferences;

  std::span<const StandingRow> conference(Conference c) const noexcept {
    return conferences[static_cast<std::size_t>(c)];
  }
  const StandingRow* find(const TeamId& team) const noexcept;
};

enum class PlayoffStatus { classified, contending, eliminated };

std::string to_string(PlayoffStatus s);

struct IncentiveParams {
  double win_pct_factor = 0.5;       // multiplier for win-percentage ratings
  double net_rating_decrement = 5.0;  // subtracted from net ratings
  int rest_trigger_remaining = 3;     // classified teams rest with at most this many games left

  void validate() const;
};

// Standings over all games strictly before `game_index`.
StandingsSnapshot compute_standings(const SeasonDataset& dataset, std::size_t game_index,
                                    const ResultSource& source = ResultSource::real());

// Builds a snapshot from raw per-team win/loss counters indexed like
// dataset.teams().
StandingsSnapshot standings_from_counts(const SeasonDataset& dataset, std::span<const int> wins,
                                        std::span<const int> losses);

// Conservative clinch/elimination bounds. A team is classified when fewer
// than classify_rank rivals can still pass its current win total, and
// eliminated when at least eliminate_rank - 1 rivals already have more wins
// than it can reach. Ties favor the evaluated team.
PlayoffStatus playoff_status(const TeamId& team, const StandingsSnapshot& snapshot, const EraRules& era);
PlayoffStatus playoff_status(const StandingRow& self, std::span<const StandingRow> conference, const EraRules& era);

// Applies the tanking or resting adjustment at most once. `remaining` counts
// games strictly after the current one.
Rating incentive_adjustment(const Rating& rating, const MethodSpec& method, PlayoffStatus status, bool owns_pick,
                            int remaining, const IncentiveParams& params);

}  // namespace courtsim
