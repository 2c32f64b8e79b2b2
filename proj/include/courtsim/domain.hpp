#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace courtsim {

enum class ErrorKind {
  validation,  // malformed or inconsistent input data
  data,        // data that is well-formed but unusable for a computation
  domain,      // argument outside a function's mathematical domain
  config,      // invalid or contradictory simulation configuration
  io,          // filesystem failures
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

using TeamId = std::string;

enum class Conference { east, west };

enum class Winner : std::uint8_t { home, away };

struct BoxLine {
  int fga = 0;
  int fta = 0;
  int oreb = 0;
  int tov = 0;
  std::optional<double> possessions;

  bool operator==(const BoxLine&) const = default;
};

struct GameRecord {
  std::string game_id;
  std::string season_id;
  std::chrono::year_month_day date{};
  TeamId home;
  TeamId away;
  int home_points = 0;
  int away_points = 0;
  BoxLine home_box;
  BoxLine away_box;

  Winner winner() const noexcept { return home_points > away_points ? Winner::home : Winner::away; }
  bool operator==(const GameRecord&) const = default;
};

// Clinch/elimination thresholds. A team that cannot finish below
// `classify_rank` is classified; one that cannot finish above
// `eliminate_rank` is eliminated.
struct EraRules {
  int classify_rank = 8;
  int eliminate_rank = 9;

  bool operator==(const EraRules&) const = default;
};

// Default thresholds by season: play-in era (start year 2020 onward) uses
// 6/11, earlier seasons 8/9.
EraRules default_era_rules(const std::string& season_id);

// First calendar year of a season id ("2021-2022" or "2021-22").
std::optional<int> season_start_year(const std::string& season_id);

// One team's view of a single past game.
struct TeamOutcome {
  bool won = false;
  bool at_home = false;
  int points_for = 0;
  int points_against = 0;
  double possessions = 0.0;
};

class TeamHistoryView {
 public:
  TeamHistoryView() = default;
  explicit TeamHistoryView(std::vector<TeamOutcome> outcomes) : outcomes_(std::move(outcomes)) {}

  std::span<const TeamOutcome> outcomes() const noexcept { return outcomes_; }
  std::size_t size() const noexcept { return outcomes_.size(); }
  bool empty() const noexcept { return outcomes_.empty(); }
  operator std::span<const TeamOutcome>() const noexcept { return outcomes_; }

  // Home games only, chronological order preserved.
  TeamHistoryView home_only() const;

 private:
  std::vector<TeamOutcome> outcomes_;
};

// Where `won` flags come from when building histories and standings:
// the dataset's real results, or a simulated per-game winner overlay.
class ResultSource {
 public:
  static ResultSource real() { return ResultSource{}; }
  static ResultSource overlay(std::span<const Winner> winners) {
    ResultSource s;
    s.overlay_ = winners;
    s.simulated_ = true;
    return s;
  }

  bool simulated() const noexcept { return simulated_; }
  Winner winner(const GameRecord& game, std::size_t game_index) const;

 private:
  std::span<const Winner> overlay_;
  bool simulated_ = false;
};

// One validated season. Construct through `SeasonDataset::build`, which
// orders games and checks referential integrity; the value is immutable
// afterwards and safe to share across threads.
class SeasonDataset {
 public:
  struct Parts {
    std::string season_id;
    std::vector<GameRecord> games;
    std::map<TeamId, Conference> conferences;
    std::optional<EraRules> era;
    std::map<TeamId, bool> pick_ownership;
    std::map<TeamId, double> priors;
    std::optional<int> schedule_length;
  };

  static SeasonDataset build(Parts parts);

  const std::string& season_id() const noexcept { return season_id_; }
  std::span<const GameRecord> games() const noexcept { return games_; }
  const GameRecord& game(std::size_t index) const { return games_.at(index); }
  std::size_t game_count() const noexcept { return games_.size(); }

  // Teams that appear in the season's games, sorted by id.
  std::span<const TeamId> teams() const noexcept { return teams_; }
  std::size_t team_index(const TeamId& team) const;
  bool has_team(const TeamId& team) const noexcept;

  // Per-game team indices, parallel to games().
  std::size_t home_index(std::size_t game_index) const { return home_idx_.at(game_index); }
  std::size_t away_index(std::size_t game_index) const { return away_idx_.at(game_index); }

  Conference conference(const TeamId& team) const;
  const EraRules& era() const noexcept { return era_; }
  int schedule_length() const noexcept { return schedule_length_; }
  bool owns_pick(const TeamId& team) const;
  std::optional<double> prior(const TeamId& team) const;
  const std::map<TeamId, double>& priors() const noexcept { return priors_; }

 private:
  std::string season_id_;
  std::vector<GameRecord> games_;
  std::vector<TeamId> teams_;
  std::vector<std::size_t> home_idx_;
  std::vector<std::size_t> away_idx_;
  std::map<TeamId, Conference> conferences_;
  EraRules era_;
  int schedule_length_ = 0;
  std::map<TeamId, bool> pick_ownership_;
  std::map<TeamId, double> priors_;
};

// Stable chronological order by (date, game_id).
std::vector<GameRecord> order_season(std::vector<GameRecord> games);

// Games involving `team` strictly before `game_index`, in order.
TeamHistoryView history_before(const SeasonDataset& dataset, const TeamId& team, std::size_t game_index,
                               const ResultSource& source = ResultSource::real());

std::string to_string(Conference c);
std::optional<Conference> parse_conference(std::string_view token);
std::string format_date(const std::chrono::year_month_day& d);

}  // namespace courtsim
