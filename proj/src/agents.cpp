#include "courtsim/agents.hpp"

#include <algorithm>

namespace courtsim {

const StandingRow* StandingsSnapshot::find(const TeamId& team) const noexcept {
  for (const auto& conf : conferences) {
    for (const auto& row : conf) {
      if (row.team == team) return &row;
    }
  }
  return nullptr;
}

std::string to_string(PlayoffStatus s) {
  switch (s) {
    case PlayoffStatus::classified: return "classified";
    case PlayoffStatus::contending: return "contending";
    case PlayoffStatus::eliminated: return "eliminated";
  }
  return "?";
}

void IncentiveParams::validate() const {
  if (!(win_pct_factor > 0.0 && win_pct_factor <= 1.0)) {
    throw Error(ErrorKind::config, "win percentage factor must lie in (0,1]");
  }
  if (!(net_rating_decrement >= 0.0)) throw Error(ErrorKind::config, "net rating decrement must be >= 0");
  if (rest_trigger_remaining < 0) throw Error(ErrorKind::config, "rest trigger must be >= 0");
}

StandingsSnapshot standings_from_counts(const SeasonDataset& dataset, std::span<const int> wins,
                                        std::span<const int> losses) {
  StandingsSnapshot snap;
  const auto teams = dataset.teams();
  for (std::size_t t = 0; t < teams.size(); ++t) {
    StandingRow row{teams[t], wins[t], losses[t], dataset.schedule_length() - wins[t] - losses[t]};
    snap.conferences[static_cast<std::size_t>(dataset.conference(teams[t]))].push_back(std::move(row));
  }
  for (auto& conf : snap.conferences) {
    std::stable_sort(conf.begin(), conf.end(),
                     [](const StandingRow& a, const StandingRow& b) { return a.wins > b.wins; });
  }
  return snap;
}

StandingsSnapshot compute_standings(const SeasonDataset& dataset, std::size_t game_index, const ResultSource& source) {
  if (game_index > dataset.game_count()) {
    throw Error(ErrorKind::data, "game index " + std::to_string(game_index) + " is past the end of the season");
  }
  std::vector<int> wins(dataset.teams().size(), 0);
  std::vector<int> losses(dataset.teams().size(), 0);
  for (std::size_t i = 0; i < game_index; ++i) {
    const bool home_won = source.winner(dataset.game(i), i) == Winner::home;
    const auto h = dataset.home_index(i);
    const auto a = dataset.away_index(i);
    ++(home_won ? wins[h] : losses[h]);
    ++(home_won ? losses[a] : wins[a]);
  }
  return standings_from_counts(dataset, wins, losses);
}

PlayoffStatus playoff_status(const StandingRow& self, std::span<const StandingRow> conference, const EraRules& era) {
  int can_pass = 0;
  int already_past = 0;
  for (const auto& other : conference) {
    if (other.team == self.team) continue;
    if (other.max_wins() > self.wins) ++can_pass;
    if (other.wins > self.max_wins()) ++already_past;
  }
  if (can_pass < era.classify_rank) return PlayoffStatus::classified;
  if (already_past >= era.eliminate_rank - 1) return PlayoffStatus::eliminated;
  return PlayoffStatus::contending;
}

PlayoffStatus playoff_status(const TeamId& team, const StandingsSnapshot& snapshot, const EraRules& era) {
  for (const auto& conf : snapshot.conferences) {
    for (const auto& row : conf) {
      if (row.team == team) return playoff_status(row, conf, era);
    }
  }
  throw Error(ErrorKind::data, "team '" + team + "' is not in the standings");
}

Rating incentive_adjustment(const Rating& rating, const MethodSpec& method, PlayoffStatus status, bool owns_pick,
                            int remaining, const IncentiveParams& params) {
  const bool tanking = status == PlayoffStatus::eliminated && owns_pick;
  const bool resting = status == PlayoffStatus::classified && remaining <= params.rest_trigger_remaining;
  if (!tanking && !resting) return rating;
  Rating out = rating;
  if (method.statistic == Statistic::win_percentage) {
    out.value *= params.win_pct_factor;
  } else {
    out.value -= params.net_rating_decrement;
  }
  return out;
}

}  // namespace courtsim
