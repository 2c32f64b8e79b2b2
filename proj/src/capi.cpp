#include "courtsim/courtsim.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "courtsim/analysis.hpp"
#include "courtsim/data_io.hpp"
#include "courtsim/engine.hpp"

struct courtsim_data {
  courtsim::DatasetBundle bundle;
  std::vector<std::string> formatted;
};

struct courtsim_config {
  courtsim::SimulationConfig sim;
  unsigned threads = 0;
};

namespace {

thread_local std::string g_last_error;

courtsim_status fail(courtsim_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

courtsim_status status_of(const courtsim::Error& e) {
  switch (e.kind()) {
    case courtsim::ErrorKind::config:
    case courtsim::ErrorKind::domain: return COURTSIM_E_INVALID_ARGUMENT;
    case courtsim::ErrorKind::validation: return COURTSIM_E_VALIDATION;
    case courtsim::ErrorKind::io: return COURTSIM_E_IO;
    case courtsim::ErrorKind::data: return COURTSIM_E_RUNTIME;
  }
  return COURTSIM_E_RUNTIME;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
courtsim_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const courtsim::Error& e) {
    return fail(status_of(e), e.what());
  } catch (const std::bad_alloc&) {
    return fail(COURTSIM_E_RUNTIME, "out of memory");
  } catch (const std::exception& e) {
    return fail(COURTSIM_E_RUNTIME, e.what());
  }
}

std::vector<const courtsim::SeasonDataset*> select_seasons(const courtsim_data* data, const char* season) {
  std::vector<const courtsim::SeasonDataset*> out;
  if (!season || std::strcmp(season, "all") == 0) {
    for (const auto& s : data->bundle.seasons) out.push_back(&s);
  } else if (const auto* s = data->bundle.find(season)) {
    out.push_back(s);
  } else {
    throw courtsim::Error(courtsim::ErrorKind::config, std::string("unknown season '") + season + "'");
  }
  if (out.empty()) throw courtsim::Error(courtsim::ErrorKind::config, "dataset holds no seasons");
  return out;
}

std::vector<courtsim::SeasonDataset> copy_seasons(const std::vector<const courtsim::SeasonDataset*>& seasons) {
  std::vector<courtsim::SeasonDataset> out;
  out.reserve(seasons.size());
  for (const auto* s : seasons) out.push_back(*s);
  return out;
}

}  // namespace

extern "C" {

const char* courtsim_version(void) { return "1.0.0"; }

const char* courtsim_last_error(void) { return g_last_error.c_str(); }

courtsim_status courtsim_data_load(const char* dir, courtsim_data** out) {
  if (!dir || !out) return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    if (!std::filesystem::is_directory(dir)) {
      return fail(COURTSIM_E_IO, std::string("data directory not found: ") + dir);
    }
    auto data = std::make_unique<courtsim_data>();
    data->bundle = courtsim::load_bundle(dir);
    for (const auto& d : data->bundle.diagnostics.all()) data->formatted.push_back(d.format());
    const bool invalid = data->bundle.diagnostics.has_errors();
    const auto errors = data->bundle.diagnostics.count(courtsim::Severity::error);
    *out = data.release();
    if (invalid) return fail(COURTSIM_E_VALIDATION, std::to_string(errors) + " validation error(s) in " + dir);
    return COURTSIM_OK;
  });
}

void courtsim_data_free(courtsim_data* data) { delete data; }

size_t courtsim_data_season_count(const courtsim_data* data) { return data ? data->bundle.seasons.size() : 0; }

const char* courtsim_data_season_id(const courtsim_data* data, size_t index) {
  if (!data || index >= data->bundle.seasons.size()) return nullptr;
  return data->bundle.seasons[index].season_id().c_str();
}

size_t courtsim_data_diagnostic_count(const courtsim_data* data) { return data ? data->formatted.size() : 0; }

const char* courtsim_data_diagnostic(const courtsim_data* data, size_t index, courtsim_severity* severity) {
  if (!data || index >= data->formatted.size()) return nullptr;
  if (severity) {
    switch (data->bundle.diagnostics.all()[index].severity) {
      case courtsim::Severity::error: *severity = COURTSIM_SEVERITY_ERROR; break;
      case courtsim::Severity::warning: *severity = COURTSIM_SEVERITY_WARNING; break;
      case courtsim::Severity::note: *severity = COURTSIM_SEVERITY_NOTE; break;
    }
  }
  return data->formatted[index].c_str();
}

courtsim_status courtsim_config_create(courtsim_config** out) {
  if (!out) return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new courtsim_config{};
    return COURTSIM_OK;
  });
}

void courtsim_config_free(courtsim_config* config) { delete config; }

courtsim_status courtsim_config_set_method(courtsim_config* config, const char* method) {
  if (!config || !method) return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  const auto id = courtsim::parse_method_id(method);
  if (!id) return fail(COURTSIM_E_INVALID_ARGUMENT, std::string("unknown method '") + method + "' (expected i..vi)");
  config->sim.method = courtsim::method_spec(*id);
  return COURTSIM_OK;
}

courtsim_status courtsim_config_set_model(courtsim_config* config, const char* model) {
  if (!config || !model) return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  const std::string m = model;
  if (m == "basic") {
    config->sim.model = courtsim::ModelVariant::basic;
  } else if (m == "extended") {
    config->sim.model = courtsim::ModelVariant::extended;
  } else {
    return fail(COURTSIM_E_INVALID_ARGUMENT, "unknown model '" + m + "' (expected basic or extended)");
  }
  return COURTSIM_OK;
}

courtsim_status courtsim_config_set_mode(courtsim_config* config, const char* mode) {
  if (!config || !mode) return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  const std::string m = mode;
  if (m == "monte-carlo") {
    config->sim.mode = courtsim::SimulationMode::monte_carlo;
  } else if (m == "closed-loop") {
    config->sim.mode = courtsim::SimulationMode::closed_loop;
  } else {
    return fail(COURTSIM_E_INVALID_ARGUMENT, "unknown mode '" + m + "' (expected monte-carlo or closed-loop)");
  }
  return COURTSIM_OK;
}

courtsim_status courtsim_config_set_window(courtsim_config* config, uint32_t games) {
  if (!config) return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  config->sim.window = games == 0 ? courtsim::WindowPolicy::unbounded() : courtsim::WindowPolicy::last(games);
  return COURTSIM_OK;
}

courtsim_status courtsim_config_set_prior(courtsim_config* config, double prior) {
  if (!config) return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  if (!(prior > 0.0 && prior < 1.0)) return fail(COURTSIM_E_INVALID_ARGUMENT, "prior must lie strictly inside (0,1)");
  config->sim.prior = prior;
  return COURTSIM_OK;
}

courtsim_status courtsim_config_set_replications(courtsim_config* config, uint32_t reps) {
  if (!config) return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  if (reps == 0) return fail(COURTSIM_E_INVALID_ARGUMENT, "replications must be at least 1");
  config->sim.replications = reps;
  return COURTSIM_OK;
}

courtsim_status courtsim_config_set_seed(courtsim_config* config, uint64_t seed) {
  if (!config) return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  config->sim.master_seed = seed;
  return COURTSIM_OK;
}

courtsim_status courtsim_config_set_incentives(courtsim_config* config, double win_pct_factor,
                                               double net_rating_decrement, int32_t rest_trigger_remaining) {
  if (!config) return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    courtsim::IncentiveParams p{win_pct_factor, net_rating_decrement, rest_trigger_remaining};
    p.validate();
    config->sim.incentives = p;
    return COURTSIM_OK;
  });
}

courtsim_status courtsim_config_set_threads(courtsim_config* config, uint32_t threads) {
  if (!config) return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  config->threads = threads;
  return COURTSIM_OK;
}

courtsim_status courtsim_config_validate(const courtsim_config* config) {
  if (!config) return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    config->sim.validate();
    return COURTSIM_OK;
  });
}

courtsim_status courtsim_simulate(const courtsim_data* data, const char* season, const courtsim_config* config,
                                  const char* out_dir) {
  if (!data || !config || !out_dir) return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    config->sim.validate();
    const auto seasons = select_seasons(data, season);
    courtsim::ReportSet reports;
    reports.accuracy.emplace();
    reports.wins_delta.emplace();
    std::vector<courtsim::SeasonTally> tallies;
    for (const auto* s : seasons) {
      const auto results = courtsim::run_replications(*s, config->sim, config->threads);
      for (const auto interval : {courtsim::Interval::complete, courtsim::Interval::second_half}) {
        reports.accuracy->push_back(courtsim::accuracy(results, *s, config->sim, interval));
      }
      auto delta = courtsim::wins_delta(results, *s);
      reports.wins_delta->insert(reports.wins_delta->end(), std::make_move_iterator(delta.records.begin()),
                                 std::make_move_iterator(delta.records.end()));
      tallies.push_back(courtsim::tally(results, *s));
    }
    if (tallies.size() > 1) {
      for (const auto interval : {courtsim::Interval::complete, courtsim::Interval::second_half}) {
        reports.accuracy->push_back(courtsim::pooled_accuracy(tallies, config->sim, interval, true, "all"));
      }
      for (const auto interval : {courtsim::Interval::complete, courtsim::Interval::second_half}) {
        reports.accuracy->push_back(
            courtsim::pooled_accuracy(tallies, config->sim, interval, false, "all-season-mean"));
      }
    }
    courtsim::emit_reports(reports, out_dir);
    return COURTSIM_OK;
  });
}

courtsim_status courtsim_sweep(const courtsim_data* data, const char* season, const courtsim_config* config,
                               const uint32_t* windows, size_t window_count, const char* out_dir) {
  if (!data || !config || !out_dir || (!windows && window_count)) {
    return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    config->sim.validate();
    std::vector<std::size_t> ks;
    for (size_t i = 0; i < window_count; ++i) {
      if (windows[i] == 0) throw courtsim::Error(courtsim::ErrorKind::config, "window sizes must be at least 1");
      ks.push_back(windows[i]);
    }
    const auto seasons = copy_seasons(select_seasons(data, season));
    courtsim::ReportSet reports;
    reports.sweep = courtsim::sweep_windows(seasons, config->sim, ks, config->threads);
    courtsim::emit_reports(reports, out_dir);
    return COURTSIM_OK;
  });
}

courtsim_status courtsim_compare(const courtsim_data* data, const char* season, const courtsim_config* config,
                                 const char* const* methods, size_t method_count, const char* out_dir) {
  if (!data || !config || !out_dir || !methods) return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<courtsim::SimulationConfig> configs;
    for (size_t i = 0; i < method_count; ++i) {
      const auto id = methods[i] ? courtsim::parse_method_id(methods[i]) : std::nullopt;
      if (!id) {
        throw courtsim::Error(courtsim::ErrorKind::config,
                              std::string("unknown method '") + (methods[i] ? methods[i] : "") + "'");
      }
      auto c = config->sim;
      c.method = courtsim::method_spec(*id);
      c.validate();
      configs.push_back(c);
    }
    const auto seasons = copy_seasons(select_seasons(data, season));
    auto cmp = courtsim::compare_methods(seasons, configs, config->threads);
    courtsim::ReportSet reports;
    reports.accuracy = std::move(cmp.accuracy);
    reports.compare = std::move(cmp.reports);
    courtsim::emit_reports(reports, out_dir);
    return COURTSIM_OK;
  });
}

courtsim_status courtsim_report(const char* in_dir, char** text) {
  if (!in_dir || !text) return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  *text = nullptr;
  return guarded([&] {
    const auto summary = courtsim::render_summary(in_dir);
    char* buf = static_cast<char*>(std::malloc(summary.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, summary.c_str(), summary.size() + 1);
    *text = buf;
    return COURTSIM_OK;
  });
}

void courtsim_string_free(char* text) { std::free(text); }

courtsim_status courtsim_bernoulli_race(double p1, double p2, int allow_ties, double out[3]) {
  if (!out) return fail(COURTSIM_E_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto d = allow_ties ? courtsim::bernoulli_race_with_ties(p1, p2) : courtsim::bernoulli_race_no_ties(p1, p2);
    out[0] = d.p_home_win;
    out[1] = d.p_away_win;
    out[2] = d.p_tie;
    return COURTSIM_OK;
  });
}

}  // extern "C"
