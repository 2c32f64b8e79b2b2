// courtsim command-line driver. Talks to the engine only through the C API.

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "courtsim/courtsim.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct DataDeleter {
  void operator()(courtsim_data* d) const { courtsim_data_free(d); }
};
struct ConfigDeleter {
  void operator()(courtsim_config* c) const { courtsim_config_free(c); }
};
using DataPtr = std::unique_ptr<courtsim_data, DataDeleter>;
using ConfigPtr = std::unique_ptr<courtsim_config, ConfigDeleter>;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code(courtsim_status s) {
  switch (s) {
    case COURTSIM_OK: return kExitOk;
    case COURTSIM_E_INVALID_ARGUMENT: return kExitUsage;
    case COURTSIM_E_VALIDATION: return kExitValidation;
    case COURTSIM_E_IO:
    case COURTSIM_E_RUNTIME: return kExitRuntime;
  }
  return kExitRuntime;
}

struct RunFlags {
  std::string data;
  std::string season = "all";
  std::string method = "i";
  std::string model = "basic";
  std::string mode = "monte-carlo";
  std::uint32_t reps = 1000;
  std::uint64_t seed = 0;
  std::string window = "all";
  double prior = 0.5;
  std::string out;
  double win_pct_factor = 0.5;
  double net_rating_decrement = 5.0;
  std::int32_t rest_trigger = 3;
};

void add_run_flags(CLI::App* cmd, RunFlags& f, bool with_method) {
  cmd->add_option("--data", f.data, "Directory with games.csv, teams.csv, picks.csv")->required();
  cmd->add_option("--season", f.season, "Season id or 'all'")->capture_default_str();
  if (with_method) cmd->add_option("--method", f.method, "Prediction method i..vi")->capture_default_str();
  cmd->add_option("--model", f.model, "basic or extended")->capture_default_str();
  cmd->add_option("--mode", f.mode, "monte-carlo or closed-loop")->capture_default_str();
  cmd->add_option("--reps", f.reps, "Replications per season")->capture_default_str();
  cmd->add_option("--seed", f.seed, "Master seed")->capture_default_str();
  cmd->add_option("--window", f.window, "Games kept for ratings: k or 'all'")->capture_default_str();
  cmd->add_option("--prior", f.prior, "Win-percentage prior in (0,1)")->capture_default_str();
  cmd->add_option("--out", f.out, "Output directory")->required();
  cmd->add_option("--win-pct-factor", f.win_pct_factor, "Incentive multiplier for win percentage")
      ->capture_default_str();
  cmd->add_option("--net-rating-decrement", f.net_rating_decrement, "Incentive decrement for net rating")
      ->capture_default_str();
  cmd->add_option("--rest-trigger", f.rest_trigger, "Classified teams rest with at most this many games left")
      ->capture_default_str();
}

std::uint32_t parse_window(const std::string& s) {
  if (s == "all") return 0;
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v == 0 || v > UINT32_MAX || s.front() == '-') {
    throw UsageError("invalid window '" + s + "' (expected a positive integer or 'all')");
  }
  return static_cast<std::uint32_t>(v);
}

// "5..30", "5,10,15" or a mix such as "1..3,10".
std::vector<std::uint32_t> parse_windows(const std::string& spec) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      const auto k = parse_window(part);
      if (k == 0) throw UsageError("'all' is not allowed in --windows");
      out.push_back(k);
      continue;
    }
    const auto lo = parse_window(part.substr(0, dots));
    const auto hi = parse_window(part.substr(dots + 2));
    if (lo == 0 || hi == 0 || lo > hi) throw UsageError("invalid window range '" + part + "'");
    for (auto k = lo; k <= hi; ++k) out.push_back(k);
  }
  if (out.empty()) throw UsageError("--windows is empty");
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

std::uint32_t thread_cap() {
  const char* env = std::getenv("COURTSIM_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  errno = 0;
  const auto v = std::strtoul(env, &end, 10);
  if (errno || *end || v == 0 || v > 4096) throw UsageError(std::string("invalid COURTSIM_THREADS '") + env + "'");
  return static_cast<std::uint32_t>(v);
}

// Reports a failed C API call and maps it to an exit code.
int report_failure(courtsim_status s) {
  std::cerr << "courtsim: " << courtsim_last_error() << '\n';
  return exit_code(s);
}

ConfigPtr make_config(const RunFlags& f, bool set_method) {
  courtsim_config* raw = nullptr;
  if (courtsim_config_create(&raw) != COURTSIM_OK) throw std::runtime_error(courtsim_last_error());
  ConfigPtr cfg(raw);
  auto check = [](courtsim_status s) {
    if (s != COURTSIM_OK) throw UsageError(courtsim_last_error());
  };
  if (set_method) check(courtsim_config_set_method(cfg.get(), f.method.c_str()));
  check(courtsim_config_set_model(cfg.get(), f.model.c_str()));
  check(courtsim_config_set_mode(cfg.get(), f.mode.c_str()));
  check(courtsim_config_set_replications(cfg.get(), f.reps));
  check(courtsim_config_set_seed(cfg.get(), f.seed));
  check(courtsim_config_set_window(cfg.get(), parse_window(f.window)));
  check(courtsim_config_set_prior(cfg.get(), f.prior));
  check(courtsim_config_set_incentives(cfg.get(), f.win_pct_factor, f.net_rating_decrement, f.rest_trigger));
  check(courtsim_config_set_threads(cfg.get(), thread_cap()));
  return cfg;
}

// Loads the data directory, printing diagnostics. Returns null on failure
// with `code` set.
DataPtr load_data(const std::string& dir, bool print_all, int& code) {
  courtsim_data* raw = nullptr;
  const auto s = courtsim_data_load(dir.c_str(), &raw);
  DataPtr data(raw);
  if (data) {
    for (size_t i = 0; i < courtsim_data_diagnostic_count(data.get()); ++i) {
      courtsim_severity sev = COURTSIM_SEVERITY_NOTE;
      const char* msg = courtsim_data_diagnostic(data.get(), i, &sev);
      if (print_all || sev != COURTSIM_SEVERITY_NOTE) std::cerr << msg << '\n';
    }
  }
  if (s != COURTSIM_OK) {
    code = report_failure(s);
    return nullptr;
  }
  code = kExitOk;
  return data;
}

int run(int argc, char** argv) {
  CLI::App app{"courtsim: season simulation and backtesting of game outcome predictors"};
  app.require_subcommand(1);

  std::string validate_dir;
  auto* validate = app.add_subcommand("validate", "Ingest a data directory and report diagnostics");
  validate->add_option("--data", validate_dir, "Data directory")->required();

  RunFlags sim_flags;
  auto* simulate = app.add_subcommand("simulate", "Simulate seasons and write accuracy.csv and wins_delta.csv");
  add_run_flags(simulate, sim_flags, true);

  RunFlags sweep_flags;
  std::string windows = "1..82";
  auto* sweep = app.add_subcommand("sweep", "Sweep the rating window size and write sweep.csv");
  add_run_flags(sweep, sweep_flags, true);
  sweep->add_option("--windows", windows, "Window sizes, e.g. 1..30 or 5,10,20")->capture_default_str();

  RunFlags cmp_flags;
  std::string methods = "i,ii,iii,iv,v,vi";
  auto* compare = app.add_subcommand("compare", "Count seasons where each method beats another");
  add_run_flags(compare, cmp_flags, false);
  compare->add_option("--methods", methods, "Comma-separated methods")->capture_default_str();

  std::string report_dir;
  auto* report = app.add_subcommand("report", "Print summary tables for a report directory");
  report->add_option("--in", report_dir, "Directory with report CSVs")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "courtsim: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  auto dispatch = [&]() -> int {
    int code = kExitOk;
    if (*validate) {
      auto data = load_data(validate_dir, true, code);
      if (!data) return code;
      std::cout << "ok: " << courtsim_data_season_count(data.get()) << " season(s)";
      for (size_t i = 0; i < courtsim_data_season_count(data.get()); ++i) {
        std::cout << (i ? ", " : ": ") << courtsim_data_season_id(data.get(), i);
      }
      std::cout << '\n';
      return kExitOk;
    }

    if (*report) {
      char* text = nullptr;
      const auto s = courtsim_report(report_dir.c_str(), &text);
      if (s != COURTSIM_OK) return report_failure(s);
      std::cout << text;
      courtsim_string_free(text);
      return kExitOk;
    }

    if (*simulate) {
      auto cfg = make_config(sim_flags, true);
      if (auto s = courtsim_config_validate(cfg.get()); s != COURTSIM_OK) return report_failure(s);
      auto data = load_data(sim_flags.data, false, code);
      if (!data) return code;
      const auto s = courtsim_simulate(data.get(), sim_flags.season.c_str(), cfg.get(), sim_flags.out.c_str());
      return s == COURTSIM_OK ? kExitOk : report_failure(s);
    }

    if (*sweep) {
      auto cfg = make_config(sweep_flags, true);
      if (auto s = courtsim_config_validate(cfg.get()); s != COURTSIM_OK) return report_failure(s);
      const auto ks = parse_windows(windows);
      auto data = load_data(sweep_flags.data, false, code);
      if (!data) return code;
      const auto s = courtsim_sweep(data.get(), sweep_flags.season.c_str(), cfg.get(), ks.data(), ks.size(),
                                    sweep_flags.out.c_str());
      return s == COURTSIM_OK ? kExitOk : report_failure(s);
    }

    if (*compare) {
      auto cfg = make_config(cmp_flags, false);
      const auto list = split_list(methods);
      if (list.size() < 2) throw UsageError("--methods needs at least two methods");
      for (const auto& m : list) {
        if (auto s = courtsim_config_set_method(cfg.get(), m.c_str()); s != COURTSIM_OK) return report_failure(s);
        if (auto s = courtsim_config_validate(cfg.get()); s != COURTSIM_OK) return report_failure(s);
      }
      auto data = load_data(cmp_flags.data, false, code);
      if (!data) return code;
      std::vector<const char*> ptrs;
      for (const auto& m : list) ptrs.push_back(m.c_str());
      const auto s = courtsim_compare(data.get(), cmp_flags.season.c_str(), cfg.get(), ptrs.data(), ptrs.size(),
                                      cmp_flags.out.c_str());
      if (s != COURTSIM_OK) return report_failure(s);
      char* text = nullptr;
      if (courtsim_report(cmp_flags.out.c_str(), &text) == COURTSIM_OK) {
        std::cout << text;
        courtsim_string_free(text);
      }
      return kExitOk;
    }
    return kExitUsage;
  };

  try {
    return dispatch();
  } catch (const UsageError& e) {
    auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    std::cerr << "courtsim: " << e.what() << "\n\n" << sub->help();
    return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "courtsim: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "courtsim: " << e.what() << '\n';
    return kExitRuntime;
  }
}
