#include "courtsim/ratings.hpp"

#include <algorithm>

#include "courtsim/outcome.hpp"

namespace courtsim {

WindowPolicy WindowPolicy::last(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::config, "window size must be at least 1");
  WindowPolicy w;
  w.k_ = k;
  return w;
}

std::span<const TeamOutcome> WindowPolicy::apply(std::span<const TeamOutcome> games) const noexcept {
  if (!k_ || *k_ >= games.size()) return games;
  return games.last(*k_);
}

Rating win_percentage(std::span<const TeamOutcome> history, double prior, WindowPolicy window) {
  if (!(prior > 0.0 && prior < 1.0)) throw Error(ErrorKind::domain, "prior must lie strictly inside (0,1)");
  const auto games = window.apply(history);
  const auto wins = std::count_if(games.begin(), games.end(), [](const TeamOutcome& o) { return o.won; });
  const double value = (prior + static_cast<double>(wins)) / (1.0 + static_cast<double>(games.size()));
  return Rating{value, RatingKind::probability};
}

Rating net_rating(std::span<const TeamOutcome> history, WindowPolicy window) {
  const auto games = window.apply(history);
  if (games.empty()) return Rating{0.0, RatingKind::real_valued};
  long long diff = 0;
  double possessions = 0.0;
  for (const auto& o : games) {
    diff += o.points_for - o.points_against;
    possessions += o.possessions;
  }
  if (!(possessions > 0.0)) {
    throw Error(ErrorKind::data, "net rating undefined: zero total possessions over " + std::to_string(games.size()) +
                                     " games");
  }
  return Rating{100.0 * static_cast<double>(diff) / possessions, RatingKind::real_valued};
}

PossessionEstimate estimate_possessions(const BoxLine& box) {
  if (box.possessions) return PossessionEstimate{*box.possessions, false, false};
  const double raw = box.fga - box.oreb + box.tov + 0.44 * box.fta;
  if (raw < 0.0) return PossessionEstimate{0.0, true, true};
  return PossessionEstimate{raw, true, false};
}

Rating compute_statistic(Statistic stat, std::span<const TeamOutcome> history, double prior, WindowPolicy window) {
  return stat == Statistic::win_percentage ? win_percentage(history, prior, window) : net_rating(history, window);
}

RatingPair rate_for_game(const SeasonDataset& dataset, const MethodSpec& method, const TeamId& home,
                         const TeamId& away, std::size_t game_index, WindowPolicy window,
                         const ResultSource& source, double default_prior) {
  auto home_view = history_before(dataset, home, game_index, source);
  const auto away_view = history_before(dataset, away, game_index, source);
  if (method.home_adjusted) home_view = home_view.home_only();
  return RatingPair{
      compute_statistic(method.statistic, home_view, dataset.prior(home).value_or(default_prior), window),
      compute_statistic(method.statistic, away_view, dataset.prior(away).value_or(default_prior), window),
  };
}

}  // namespace courtsim
