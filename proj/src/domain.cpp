#include "courtsim/domain.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <set>

#include "courtsim/ratings.hpp"

namespace courtsim {

std::optional<int> season_start_year(const std::string& season_id) {
  if (season_id.size() < 4) return std::nullopt;
  int year = 0;
  auto [ptr, ec] = std::from_chars(season_id.data(), season_id.data() + 4, year);
  if (ec != std::errc{} || ptr != season_id.data() + 4) return std::nullopt;
  return year;
}

EraRules default_era_rules(const std::string& season_id) {
  auto start = season_start_year(season_id);
  if (start && *start >= 2020) return EraRules{6, 11};
  return EraRules{8, 9};
}

std::string to_string(Conference c) { return c == Conference::east ? "East" : "West"; }

std::optional<Conference> parse_conference(std::string_view token) {
  if (token == "East" || token == "east" || token == "E") return Conference::east;
  if (token == "West" || token == "west" || token == "W") return Conference::west;
  return std::nullopt;
}

std::string format_date(const std::chrono::year_month_day& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()), static_cast<unsigned>(d.month()),
                static_cast<unsigned>(d.day()));
  return buf;
}

TeamHistoryView TeamHistoryView::home_only() const {
  std::vector<TeamOutcome> out;
  std::copy_if(outcomes_.begin(), outcomes_.end(), std::back_inserter(out),
               [](const TeamOutcome& o) { return o.at_home; });
  return TeamHistoryView(std::move(out));
}

Winner ResultSource::winner(const GameRecord& game, std::size_t game_index) const {
  if (!simulated_) return game.winner();
  if (game_index >= overlay_.size()) {
    throw Error(ErrorKind::data, "simulated overlay has no result for game index " + std::to_string(game_index));
  }
  return overlay_[game_index];
}

std::vector<GameRecord> order_season(std::vector<GameRecord> games) {
  std::set<std::string> seen;
  for (const auto& g : games) {
    if (!seen.insert(g.game_id).second) {
      throw Error(ErrorKind::validation, "duplicate game_id '" + g.game_id + "'");
    }
  }
  std::stable_sort(games.begin(), games.end(), [](const GameRecord& a, const GameRecord& b) {
    if (a.date != b.date) return a.date < b.date;
    return a.game_id < b.game_id;
  });
  return games;
}

SeasonDataset SeasonDataset::build(Parts parts) {
  SeasonDataset ds;
  ds.season_id_ = std::move(parts.season_id);
  if (ds.season_id_.empty()) throw Error(ErrorKind::validation, "season_id is empty");

  for (const auto& g : parts.games) {
    if (g.season_id != ds.season_id_) {
      throw Error(ErrorKind::validation,
                  "game " + g.game_id + " belongs to season " + g.season_id + ", expected " + ds.season_id_);
    }
    if (g.home.empty() || g.away.empty()) throw Error(ErrorKind::validation, "game " + g.game_id + " has an empty team id");
    if (g.home == g.away) throw Error(ErrorKind::validation, "game " + g.game_id + ": home and away team are both " + g.home);
    if (g.home_points < 0 || g.away_points < 0) throw Error(ErrorKind::validation, "game " + g.game_id + ": negative points");
    if (g.home_points == g.away_points) throw Error(ErrorKind::validation, "game " + g.game_id + ": tie score");
  }
  ds.games_ = order_season(std::move(parts.games));

  if (auto start = season_start_year(ds.season_id_)) {
    using namespace std::chrono;
    const year_month_day lo{year{*start}, July, day{1}};
    const year_month_day hi{year{*start + 1}, September, day{30}};
    for (const auto& g : ds.games_) {
      if (g.date < lo || g.date > hi) {
        throw Error(ErrorKind::validation, "game " + g.game_id + " date " + format_date(g.date) +
                                               " is outside season " + ds.season_id_);
      }
    }
  }

  std::set<TeamId> teams;
  for (const auto& g : ds.games_) {
    teams.insert(g.home);
    teams.insert(g.away);
  }
  ds.teams_.assign(teams.begin(), teams.end());

  std::map<TeamId, int> played;
  for (const auto& g : ds.games_) {
    ++played[g.home];
    ++played[g.away];
  }
  for (const auto& t : ds.teams_) {
    if (!parts.conferences.contains(t)) throw Error(ErrorKind::validation, "team " + t + " has no conference entry");
  }
  if (parts.schedule_length) {
    ds.schedule_length_ = *parts.schedule_length;
  } else if (!played.empty()) {
    ds.schedule_length_ = played.begin()->second;
  }
  for (const auto& [team, n] : played) {
    if (n != ds.schedule_length_) {
      throw Error(ErrorKind::validation, "team " + team + " plays " + std::to_string(n) + " games in season " +
                                             ds.season_id_ + ", expected schedule length " +
                                             std::to_string(ds.schedule_length_));
    }
  }

  for (const auto& g : ds.games_) {
    ds.home_idx_.push_back(ds.team_index(g.home));
    ds.away_idx_.push_back(ds.team_index(g.away));
  }

  for (const auto& [team, p] : parts.priors) {
    if (!(p > 0.0 && p < 1.0)) throw Error(ErrorKind::validation, "prior for " + team + " is outside (0,1)");
  }

  ds.era_ = parts.era.value_or(default_era_rules(ds.season_id_));
  if (ds.era_.classify_rank < 1 || ds.era_.eliminate_rank <= ds.era_.classify_rank) {
    throw Error(ErrorKind::validation, "era thresholds must satisfy 1 <= classify_rank < eliminate_rank");
  }
  ds.conferences_ = std::move(parts.conferences);
  ds.pick_ownership_ = std::move(parts.pick_ownership);
  ds.priors_ = std::move(parts.priors);
  return ds;
}

std::size_t SeasonDataset::team_index(const TeamId& team) const {
  auto it = std::lower_bound(teams_.begin(), teams_.end(), team);
  if (it == teams_.end() || *it != team) throw Error(ErrorKind::data, "unknown team '" + team + "'");
  return static_cast<std::size_t>(it - teams_.begin());
}

bool SeasonDataset::has_team(const TeamId& team) const noexcept {
  return std::binary_search(teams_.begin(), teams_.end(), team);
}

Conference SeasonDataset::conference(const TeamId& team) const {
  auto it = conferences_.find(team);
  if (it == conferences_.end()) throw Error(ErrorKind::data, "unknown team '" + team + "'");
  return it->second;
}

bool SeasonDataset::owns_pick(const TeamId& team) const {
  auto it = pick_ownership_.find(team);
  // Teams without a picks row are treated as owning their pick.
  return it == pick_ownership_.end() ? true : it->second;
}

std::optional<double> SeasonDataset::prior(const TeamId& team) const {
  auto it = priors_.find(team);
  if (it == priors_.end()) return std::nullopt;
  return it->second;
}

TeamHistoryView history_before(const SeasonDataset& dataset, const TeamId& team, std::size_t game_index,
                               const ResultSource& source) {
  if (!dataset.has_team(team)) throw Error(ErrorKind::data, "unknown team '" + team + "'");
  if (game_index > dataset.game_count()) {
    throw Error(ErrorKind::data, "game index " + std::to_string(game_index) + " is past the end of the season");
  }
  std::vector<TeamOutcome> out;
  for (std::size_t i = 0; i < game_index; ++i) {
    const auto& g = dataset.game(i);
    const bool home = g.home == team;
    if (!home && g.away != team) continue;
    const Winner w = source.winner(g, i);
    TeamOutcome o;
    o.at_home = home;
    o.won = (w == Winner::home) == home;
    o.points_for = home ? g.home_points : g.away_points;
    o.points_against = home ? g.away_points : g.home_points;
    o.possessions = estimate_possessions(home ? g.home_box : g.away_box).value;
    out.push_back(o);
  }
  return TeamHistoryView(std::move(out));
}

}  // namespace courtsim
