#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "courtsim/analysis.hpp"
#include "courtsim/domain.hpp"

namespace courtsim {

enum class Severity { error, warning, note };

struct Diagnostic {
  Severity severity = Severity::error;
  std::string code;  // stable kebab-case identifier, e.g. "tie-score"
  std::filesystem::path file;
  std::size_t line = 0;  // 1-based; 1 is the header row
  std::string message;

  std::string format() const;  // "path:line: severity [code] message"
};

class Diagnostics {
 public:
  void add(Severity severity, std::string code, const std::filesystem::path& file, std::size_t line,
           std::string message);
  const std::vector<Diagnostic>& all() const noexcept { return items_; }
  std::size_t count(Severity severity) const noexcept;
  bool has_errors() const noexcept { return count(Severity::error) > 0; }

 private:
  std::vector<Diagnostic> items_;
};

// A raw CSV file: header plus data rows, each row tagged with its line number.
struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> fields;
};
struct CsvTable {
  std::vector<std::string> header;
  std::vector<CsvRow> rows;
};
CsvTable read_csv(const std::filesystem::path& path);

inline const std::vector<std::string> kGamesColumns{
    "season_id", "game_id",  "date",      "home_team", "away_team", "home_pts", "away_pts", "home_fga", "home_fta",
    "home_oreb", "home_tov", "away_fga",  "away_fta",  "away_oreb", "away_tov", "home_poss", "away_poss"};

// Rows with errors are reported and skipped.
std::vector<GameRecord> parse_games_csv(const std::filesystem::path& path, Diagnostics& diags);
std::map<TeamId, Conference> parse_teams_csv(const std::filesystem::path& path, Diagnostics& diags);
// season_id -> team -> owns its first-round pick
std::map<std::string, std::map<TeamId, bool>> parse_picks_csv(const std::filesystem::path& path, Diagnostics& diags);
// season_id -> team -> prior win probability
std::map<std::string, std::map<TeamId, double>> parse_priors_csv(const std::filesystem::path& path,
                                                                 Diagnostics& diags);
// Optional era threshold overrides: season_id,classify_rank,eliminate_rank
std::map<std::string, EraRules> parse_eras_csv(const std::filesystem::path& path, Diagnostics& diags);

void write_games_csv(const std::filesystem::path& path, const std::vector<GameRecord>& games);

// A data directory holding games.csv, teams.csv and picks.csv, plus optional
// priors.csv and eras.csv.
struct DatasetBundle {
  std::filesystem::path games_file;
  std::filesystem::path teams_file;
  std::filesystem::path picks_file;
  std::optional<std::filesystem::path> priors_file;
  std::optional<std::filesystem::path> eras_file;
  std::vector<SeasonDataset> seasons;  // sorted by season_id; empty when diagnostics hold errors
  Diagnostics diagnostics;

  const SeasonDataset* find(const std::string& season_id) const noexcept;
};

DatasetBundle load_bundle(const std::filesystem::path& dir);

struct ReportSet {
  std::optional<std::vector<AccuracyReport>> accuracy;
  std::optional<std::vector<WinsDeltaRecord>> wins_delta;
  std::optional<std::vector<SweepPoint>> sweep;
  std::optional<std::vector<ComparisonReport>> compare;
};

// Writes accuracy.csv, wins_delta.csv, sweep.csv and compare.csv for every
// section that is present (an empty section gives a header-only file).
void emit_reports(const ReportSet& reports, const std::filesystem::path& out_dir);

// Fixed-point real with six decimals, never "-0.000000".
std::string format_real(double v);

// Human-readable tables for whichever report files exist in `in_dir`.
std::string render_summary(const std::filesystem::path& in_dir);

}  // namespace courtsim
