#include "courtsim/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "courtsim/ratings.hpp"

namespace courtsim {
namespace fs = std::filesystem;

namespace {

const char* severity_name(Severity s) {
  switch (s) {
    case Severity::error: return "error";
    case Severity::warning: return "warning";
    case Severity::note: return "note";
  }
  return "?";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"' && cur.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

template <typename T>
std::optional<T> parse_number(const std::string& s) {
  T v{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
  return v;
}

std::optional<std::chrono::year_month_day> parse_date(const std::string& s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  auto y = parse_number<int>(s.substr(0, 4));
  auto m = parse_number<unsigned>(s.substr(5, 2));
  auto d = parse_number<unsigned>(s.substr(8, 2));
  if (!y || !m || !d) return std::nullopt;
  std::chrono::year_month_day ymd{std::chrono::year{*y}, std::chrono::month{*m}, std::chrono::day{*d}};
  if (!ymd.ok()) return std::nullopt;
  return ymd;
}

// Maps header names to column positions; reports missing and unexpected
// columns. Returns nullopt when the header is unusable.
std::optional<std::map<std::string, std::size_t>> check_header(const CsvTable& table,
                                                               const std::vector<std::string>& expected,
                                                               const fs::path& path, Diagnostics& diags,
                                                               bool exact) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < table.header.size(); ++i) pos.emplace(table.header[i], i);
  bool ok = true;
  for (const auto& col : expected) {
    if (!pos.contains(col)) {
      diags.add(Severity::error, "missing-column", path, 1, "missing column '" + col + "'");
      ok = false;
    }
  }
  if (exact && ok && table.header != expected) {
    for (const auto& col : table.header) {
      if (std::find(expected.begin(), expected.end(), col) == expected.end()) {
        diags.add(Severity::error, "unexpected-column", path, 1, "unexpected column '" + col + "'");
      }
    }
    if (table.header.size() == expected.size()) {
      diags.add(Severity::error, "column-order", path, 1, "columns are not in the canonical order");
    }
    ok = false;
  }
  if (!ok) return std::nullopt;
  return pos;
}

bool load_table(const fs::path& path, CsvTable& out, Diagnostics& diags) {
  try {
    out = read_csv(path);
    return true;
  } catch (const Error& e) {
    diags.add(Severity::error, "io", path, 0, e.what());
    return false;
  }
}

bool row_width_ok(const CsvRow& row, std::size_t width, const fs::path& path, Diagnostics& diags) {
  if (row.fields.size() == width) return true;
  diags.add(Severity::error, "malformed-row", path, row.line,
            "expected " + std::to_string(width) + " fields, found " + std::to_string(row.fields.size()));
  return false;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
  return out;
}

void close_output(std::ofstream& out, const fs::path& path) {
  out.close();
  if (!out) throw Error(ErrorKind::io, "error writing " + path.string());
}

}  // namespace

std::string Diagnostic::format() const {
  std::ostringstream os;
  os << file.string() << ':' << line << ": " << severity_name(severity) << " [" << code << "] " << message;
  return os.str();
}

void Diagnostics::add(Severity severity, std::string code, const fs::path& file, std::size_t line,
                      std::string message) {
  items_.push_back(Diagnostic{severity, std::move(code), file, line, std::move(message)});
}

std::size_t Diagnostics::count(Severity severity) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(items_.begin(), items_.end(), [&](const Diagnostic& d) { return d.severity == severity; }));
}

CsvTable read_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path.string());
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (!have_header) {
      table.header = split_csv_line(line);
      have_header = true;
      continue;
    }
    if (line.empty()) continue;
    table.rows.push_back(CsvRow{line_no, split_csv_line(line)});
  }
  if (!have_header) throw Error(ErrorKind::io, path.string() + " is empty");
  return table;
}

std::vector<GameRecord> parse_games_csv(const fs::path& path, Diagnostics& diags) {
  CsvTable table;
  if (!load_table(path, table, diags)) return {};
  auto pos = check_header(table, kGamesColumns, path, diags, true);
  if (!pos) return {};

  std::vector<GameRecord> games;
  std::map<std::string, std::size_t> first_line;
  std::size_t estimated = 0;
  for (const auto& row : table.rows) {
    if (!row_width_ok(row, kGamesColumns.size(), path, diags)) continue;
    const auto& f = row.fields;
    auto bad = [&](const std::string& what) { diags.add(Severity::error, "malformed-row", path, row.line, what); };

    GameRecord g;
    g.season_id = f[0];
    g.game_id = f[1];
    if (g.season_id.empty() || g.game_id.empty()) {
      bad("season_id and game_id must be non-empty");
      continue;
    }
    auto date = parse_date(f[2]);
    if (!date) {
      bad("game " + g.game_id + ": invalid date '" + f[2] + "' (expected YYYY-MM-DD)");
      continue;
    }
    g.date = *date;
    g.home = f[3];
    g.away = f[4];
    if (g.home.empty() || g.away.empty() || g.home == g.away) {
      bad("game " + g.game_id + ": home and away teams must be distinct and non-empty");
      continue;
    }
    bool ok = true;
    auto count = [&](std::size_t i, int& out) {
      auto v = parse_number<int>(f[i]);
      if (!v || *v < 0) {
        bad("game " + g.game_id + ": " + kGamesColumns[i] + " must be a non-negative integer, got '" + f[i] + "'");
        ok = false;
        return;
      }
      out = *v;
    };
    count(5, g.home_points);
    count(6, g.away_points);
    count(7, g.home_box.fga);
    count(8, g.home_box.fta);
    count(9, g.home_box.oreb);
    count(10, g.home_box.tov);
    count(11, g.away_box.fga);
    count(12, g.away_box.fta);
    count(13, g.away_box.oreb);
    count(14, g.away_box.tov);
    for (std::size_t i : {15u, 16u}) {
      if (f[i].empty()) continue;
      auto v = parse_number<double>(f[i]);
      if (!v || !std::isfinite(*v) || *v < 0.0) {
        bad("game " + g.game_id + ": " + kGamesColumns[i] + " must be empty or a non-negative number");
        ok = false;
        continue;
      }
      (i == 15 ? g.home_box : g.away_box).possessions = *v;
    }
    if (!ok) continue;
    if (g.home_points == g.away_points) {
      diags.add(Severity::error, "tie-score", path, row.line,
                "game " + g.game_id + " has a tie score " + std::to_string(g.home_points) + "-" +
                    std::to_string(g.away_points));
      continue;
    }
    auto [it, inserted] = first_line.emplace(g.game_id, row.line);
    if (!inserted) {
      diags.add(Severity::error, "duplicate-game-id", path, row.line,
                "duplicate game_id " + g.game_id + " (first seen on line " + std::to_string(it->second) + ")");
      continue;
    }
    for (const auto* box : {&g.home_box, &g.away_box}) {
      const auto est = estimate_possessions(*box);
      if (est.estimated) ++estimated;
      if (est.clamped) {
        diags.add(Severity::warning, "possession-clamped", path, row.line,
                  "game " + g.game_id + ": possession estimate is negative, clamped to 0");
      }
    }
    games.push_back(std::move(g));
  }
  if (estimated > 0) {
    diags.add(Severity::note, "estimated-possessions", path, 1,
              std::to_string(estimated) + " team box lines use estimated possessions");
  }
  return games;
}

std::map<TeamId, Conference> parse_teams_csv(const fs::path& path, Diagnostics& diags) {
  CsvTable table;
  if (!load_table(path, table, diags)) return {};
  const std::vector<std::string> cols{"team", "conference"};
  auto pos = check_header(table, cols, path, diags, true);
  if (!pos) return {};
  std::map<TeamId, Conference> out;
  for (const auto& row : table.rows) {
    if (!row_width_ok(row, cols.size(), path, diags)) continue;
    const auto& team = row.fields[0];
    if (team.empty()) {
      diags.add(Severity::error, "malformed-row", path, row.line, "empty team id");
      continue;
    }
    auto conf = parse_conference(row.fields[1]);
    if (!conf) {
      diags.add(Severity::error, "unknown-conference", path, row.line,
                "team " + team + ": unknown conference '" + row.fields[1] + "' (expected East or West)");
      continue;
    }
    if (!out.emplace(team, *conf).second) {
      diags.add(Severity::error, "duplicate-team", path, row.line, "team " + team + " listed twice");
    }
  }
  return out;
}

std::map<std::string, std::map<TeamId, bool>> parse_picks_csv(const fs::path& path, Diagnostics& diags) {
  CsvTable table;
  if (!load_table(path, table, diags)) return {};
  const std::vector<std::string> cols{"season_id", "team", "owns_first_round_pick"};
  auto pos = check_header(table, cols, path, diags, true);
  if (!pos) return {};
  std::map<std::string, std::map<TeamId, bool>> out;
  for (const auto& row : table.rows) {
    if (!row_width_ok(row, cols.size(), path, diags)) continue;
    const auto& f = row.fields;
    if (f[0].empty() || f[1].empty()) {
      diags.add(Severity::error, "malformed-row", path, row.line, "season_id and team must be non-empty");
      continue;
    }
    if (f[2] != "true" && f[2] != "false") {
      diags.add(Severity::error, "malformed-row", path, row.line,
                "owns_first_round_pick must be true or false, got '" + f[2] + "'");
      continue;
    }
    if (!out[f[0]].emplace(f[1], f[2] == "true").second) {
      diags.add(Severity::error, "duplicate-team", path, row.line, "team " + f[1] + " listed twice for " + f[0]);
    }
  }
  return out;
}

std::map<std::string, std::map<TeamId, double>> parse_priors_csv(const fs::path& path, Diagnostics& diags) {
  CsvTable table;
  if (!load_table(path, table, diags)) return {};
  const std::vector<std::string> cols{"season_id", "team", "prior"};
  auto pos = check_header(table, cols, path, diags, true);
  if (!pos) return {};
  std::map<std::string, std::map<TeamId, double>> out;
  for (const auto& row : table.rows) {
    if (!row_width_ok(row, cols.size(), path, diags)) continue;
    const auto& f = row.fields;
    auto p = parse_number<double>(f[2]);
    if (!p) {
      diags.add(Severity::error, "malformed-row", path, row.line, "prior is not a number: '" + f[2] + "'");
      continue;
    }
    if (!(*p > 0.0 && *p < 1.0)) {
      diags.add(Severity::error, "prior-out-of-range", path, row.line,
                "team " + f[1] + ": prior " + f[2] + " is outside (0,1)");
      continue;
    }
    if (!out[f[0]].emplace(f[1], *p).second) {
      diags.add(Severity::error, "duplicate-team", path, row.line, "team " + f[1] + " listed twice for " + f[0]);
    }
  }
  return out;
}

std::map<std::string, EraRules> parse_eras_csv(const fs::path& path, Diagnostics& diags) {
  CsvTable table;
  if (!load_table(path, table, diags)) return {};
  const std::vector<std::string> cols{"season_id", "classify_rank", "eliminate_rank"};
  auto pos = check_header(table, cols, path, diags, true);
  if (!pos) return {};
  std::map<std::string, EraRules> out;
  for (const auto& row : table.rows) {
    if (!row_width_ok(row, cols.size(), path, diags)) continue;
    auto c = parse_number<int>(row.fields[1]);
    auto e = parse_number<int>(row.fields[2]);
    if (!c || !e || *c < 1 || *e <= *c) {
      diags.add(Severity::error, "malformed-row", path, row.line,
                "era thresholds must satisfy 1 <= classify_rank < eliminate_rank");
      continue;
    }
    out[row.fields[0]] = EraRules{*c, *e};
  }
  return out;
}

void write_games_csv(const fs::path& path, const std::vector<GameRecord>& games) {
  auto out = open_output(path);
  for (std::size_t i = 0; i < kGamesColumns.size(); ++i) out << (i ? "," : "") << kGamesColumns[i];
  out << '\n';
  auto poss = [](const BoxLine& b) {
    if (!b.possessions) return std::string{};
    std::ostringstream os;
    os << std::setprecision(17) << *b.possessions;
    return os.str();
  };
  for (const auto& g : games) {
    out << g.season_id << ',' << g.game_id << ',' << format_date(g.date) << ',' << g.home << ',' << g.away << ','
        << g.home_points << ',' << g.away_points << ',' << g.home_box.fga << ',' << g.home_box.fta << ','
        << g.home_box.oreb << ',' << g.home_box.tov << ',' << g.away_box.fga << ',' << g.away_box.fta << ','
        << g.away_box.oreb << ',' << g.away_box.tov << ',' << poss(g.home_box) << ',' << poss(g.away_box) << '\n';
  }
  close_output(out, path);
}

const SeasonDataset* DatasetBundle::find(const std::string& season_id) const noexcept {
  for (const auto& s : seasons) {
    if (s.season_id() == season_id) return &s;
  }
  return nullptr;
}

DatasetBundle load_bundle(const fs::path& dir) {
  DatasetBundle b;
  b.games_file = dir / "games.csv";
  b.teams_file = dir / "teams.csv";
  b.picks_file = dir / "picks.csv";
  if (fs::exists(dir / "priors.csv")) b.priors_file = dir / "priors.csv";
  if (fs::exists(dir / "eras.csv")) b.eras_file = dir / "eras.csv";
  auto& diags = b.diagnostics;

  auto games = parse_games_csv(b.games_file, diags);
  const auto conferences = parse_teams_csv(b.teams_file, diags);
  const auto picks = parse_picks_csv(b.picks_file, diags);
  const auto priors = b.priors_file ? parse_priors_csv(*b.priors_file, diags)
                                    : std::map<std::string, std::map<TeamId, double>>{};
  const auto eras = b.eras_file ? parse_eras_csv(*b.eras_file, diags) : std::map<std::string, EraRules>{};

  // Line numbers for dataset-level diagnostics.
  CsvTable games_table;
  std::map<std::string, std::size_t> game_line;
  try {
    games_table = read_csv(b.games_file);
    for (const auto& row : games_table.rows) {
      if (row.fields.size() > 1) game_line.emplace(row.fields[1], row.line);
    }
  } catch (const Error&) {
  }

  std::map<std::string, std::vector<GameRecord>> by_season;
  std::set<TeamId> unknown_teams;
  for (auto& g : games) {
    for (const auto* team : {&g.home, &g.away}) {
      if (!conferences.empty() && !conferences.contains(*team) && unknown_teams.insert(*team).second) {
        diags.add(Severity::error, "unknown-team", b.games_file, game_line[g.game_id],
                  "team " + *team + " does not appear in " + b.teams_file.filename().string());
      }
    }
    by_season[g.season_id].push_back(std::move(g));
  }

  for (const auto& [season, rows] : picks) {
    for (const auto& [team, owns] : rows) {
      if (!conferences.empty() && !conferences.contains(team)) {
        diags.add(Severity::error, "unknown-team", b.picks_file, 1,
                  "season " + season + ": team " + team + " does not appear in " + b.teams_file.filename().string());
      }
    }
  }

  std::vector<SeasonDataset> seasons;
  for (auto& [season, season_games] : by_season) {
    std::set<TeamId> teams;
    for (const auto& g : season_games) {
      teams.insert(g.home);
      teams.insert(g.away);
    }
    SeasonDataset::Parts parts;
    parts.season_id = season;

    const auto picks_it = picks.find(season);
    for (const auto& team : teams) {
      if (picks_it == picks.end() || !picks_it->second.contains(team)) {
        diags.add(Severity::error, "missing-team-row", b.picks_file, 1,
                  "season " + season + " has no row for team " + team);
      }
    }
    if (picks_it != picks.end()) {
      for (const auto& [team, owns] : picks_it->second) {
        if (teams.contains(team)) parts.pick_ownership[team] = owns;
      }
    }

    if (auto pr = priors.find(season); pr != priors.end()) {
      for (const auto& team : teams) {
        if (!pr->second.contains(team)) {
          diags.add(Severity::error, "missing-team-row", *b.priors_file, 1,
                    "season " + season + " has priors but no row for team " + team);
        }
      }
      for (const auto& [team, p] : pr->second) {
        if (teams.contains(team)) {
          parts.priors[team] = p;
        } else {
          diags.add(Severity::warning, "unknown-team", *b.priors_file, 1,
                    "season " + season + ": prior for team " + team + " which plays no games");
        }
      }
    }

    if (auto e = eras.find(season); e != eras.end()) parts.era = e->second;
    parts.conferences = conferences;
    parts.games = std::move(season_games);
    try {
      seasons.push_back(SeasonDataset::build(std::move(parts)));
    } catch (const Error& e) {
      diags.add(Severity::error, "invalid-season", b.games_file, 1, "season " + season + ": " + e.what());
    }
  }

  if (!diags.has_errors()) b.seasons = std::move(seasons);
  return b;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

void emit_reports(const ReportSet& reports, const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorKind::io, "cannot create " + out_dir.string() + ": " + ec.message());

  if (reports.accuracy) {
    const auto path = out_dir / "accuracy.csv";
    auto out = open_output(path);
    out << "season_id,method,model,mode,interval,mean_accuracy,ci_low,ci_high,replications\n";
    for (const auto& r : *reports.accuracy) {
      out << r.season_id << ',' << to_string(r.method) << ',' << to_string(r.model) << ',' << to_string(r.mode) << ','
          << to_string(r.interval) << ',' << format_real(r.mean_accuracy) << ',' << format_real(r.ci_low) << ','
          << format_real(r.ci_high) << ',' << r.replications << '\n';
    }
    close_output(out, path);
  }
  if (reports.wins_delta) {
    const auto path = out_dir / "wins_delta.csv";
    auto out = open_output(path);
    out << "season_id,team,real_wins,rep,sim_wins,delta\n";
    for (const auto& r : *reports.wins_delta) {
      out << r.season_id << ',' << r.team << ',' << r.real_wins << ',' << r.rep << ',' << r.sim_wins << ','
          << r.delta << '\n';
    }
    close_output(out, path);
  }
  if (reports.sweep) {
    const auto path = out_dir / "sweep.csv";
    auto out = open_output(path);
    out << "window,method,interval,mean_accuracy,ci_low,ci_high\n";
    for (const auto& p : *reports.sweep) {
      out << p.window << ',' << to_string(p.method) << ',' << to_string(p.interval) << ','
          << format_real(p.mean_accuracy) << ',' << format_real(p.ci_low) << ',' << format_real(p.ci_high) << '\n';
    }
    close_output(out, path);
  }
  if (reports.compare) {
    const auto path = out_dir / "compare.csv";
    auto out = open_output(path);
    out << "interval,method_a,method_b,seasons,a_higher,b_higher\n";
    for (const auto& rep : *reports.compare) {
      for (const auto& c : rep.counts) {
        out << to_string(rep.interval) << ',' << c.method_a << ',' << c.method_b << ',' << c.seasons << ','
            << c.a_higher << ',' << c.b_higher << '\n';
      }
    }
    close_output(out, path);
  }
}

namespace {

struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void render(std::ostream& os) const {
    std::vector<std::size_t> width(header.size(), 0);
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < width.size(); ++i) {
        const std::string cell = i < cells.size() ? cells[i] : "";
        os << (i ? "  " : "");
        if (i + 1 < width.size()) {
          os << std::left << std::setw(static_cast<int>(width[i])) << cell;
        } else {
          os << cell;
        }
      }
      os << '\n';
    };
    line(header);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    line(rule);
    for (const auto& r : rows) line(r);
  }
};

std::string percent(const std::string& fraction) {
  auto v = parse_number<double>(fraction);
  if (!v) return fraction;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", 100.0 * *v);
  return buf;
}

}  // namespace

std::string render_summary(const fs::path& in_dir) {
  std::ostringstream os;
  bool any = false;

  if (fs::exists(in_dir / "accuracy.csv")) {
    any = true;
    const auto t = read_csv(in_dir / "accuracy.csv");
    TextTable tt{{"season", "method", "model", "mode", "interval", "accuracy %", "95% CI", "reps"}, {}};
    for (const auto& r : t.rows) {
      if (r.fields.size() != 9) continue;
      const auto& f = r.fields;
      tt.rows.push_back({f[0], f[1], f[2], f[3], f[4], percent(f[5]), "[" + percent(f[6]) + ", " + percent(f[7]) + "]",
                         f[8]});
    }
    os << "Prediction accuracy\n";
    tt.render(os);
    os << '\n';
  }

  if (fs::exists(in_dir / "wins_delta.csv")) {
    any = true;
    const auto t = read_csv(in_dir / "wins_delta.csv");
    std::map<std::string, std::vector<double>> xs;
    std::map<std::string, std::vector<double>> ys;
    for (const auto& r : t.rows) {
      if (r.fields.size() != 6) continue;
      auto x = parse_number<double>(r.fields[2]);
      auto y = parse_number<double>(r.fields[5]);
      if (!x || !y) continue;
      for (const auto& key : {r.fields[0], std::string("all")}) {
        xs[key].push_back(*x);
        ys[key].push_back(*y);
      }
    }
    TextTable tt{{"season", "records", "mean |delta|", "trend slope"}, {}};
    for (const auto& [season, x] : xs) {
      const auto& y = ys[season];
      double abs_sum = 0.0;
      for (double d : y) abs_sum += std::abs(d);
      tt.rows.push_back({season, std::to_string(x.size()), format_real(abs_sum / static_cast<double>(y.size())),
                         format_real(ols_slope(x, y))});
    }
    os << "Simulated minus real wins\n";
    tt.render(os);
    os << '\n';
  }

  if (fs::exists(in_dir / "sweep.csv")) {
    any = true;
    const auto t = read_csv(in_dir / "sweep.csv");
    TextTable tt{{"window", "method", "interval", "accuracy %", "95% CI"}, {}};
    std::map<std::string, std::pair<double, std::string>> best;
    for (const auto& r : t.rows) {
      if (r.fields.size() != 6) continue;
      const auto& f = r.fields;
      tt.rows.push_back({f[0], f[1], f[2], percent(f[3]), "[" + percent(f[4]) + ", " + percent(f[5]) + "]"});
      const auto acc = parse_number<double>(f[3]).value_or(0.0);
      const auto key = f[1] + " " + f[2];
      if (!best.contains(key) || acc > best[key].first) best[key] = {acc, f[0]};
    }
    os << "Window sweep\n";
    tt.render(os);
    for (const auto& [key, b] : best) os << "best window for " << key << ": " << b.second << '\n';
    os << '\n';
  }

  if (fs::exists(in_dir / "compare.csv")) {
    any = true;
    const auto t = read_csv(in_dir / "compare.csv");
    TextTable tt{{"interval", "method A", "method B", "seasons", "A higher", "B higher"}, {}};
    for (const auto& r : t.rows) {
      if (r.fields.size() == 6) tt.rows.push_back(r.fields);
    }
    os << "Method comparison (seasons with higher mean accuracy)\n";
    tt.render(os);
    os << '\n';
  }

  if (!any) throw Error(ErrorKind::io, "no report files found in " + in_dir.string());
  return os.str();
}

}  // namespace courtsim
