#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "courtsim/domain.hpp"

namespace courtsim {

enum class RatingKind { probability, real_valued };

struct Rating {
  double value = 0.0;
  RatingKind kind = RatingKind::real_valued;

  bool operator==(const Rating&) const = default;
};

// Number of most recent games kept for a rating; unbounded keeps all.
class WindowPolicy {
 public:
  static WindowPolicy unbounded() { return WindowPolicy{}; }
  static WindowPolicy last(std::size_t k);

  bool bounded() const noexcept { return k_.has_value(); }
  std::size_t size() const noexcept { return k_.value_or(0); }

  // The trailing part of `games` this window keeps.
  std::span<const TeamOutcome> apply(std::span<const TeamOutcome> games) const noexcept;

  bool operator==(const WindowPolicy&) const = default;

 private:
  std::optional<std::size_t> k_;
};

enum class Statistic { win_percentage, net_rating };

// (prior + wins) / (1 + games) over the windowed history. Always strictly
// inside (0, 1) for a prior strictly inside (0, 1).
Rating win_percentage(std::span<const TeamOutcome> history, double prior, WindowPolicy window);

// Point differential per 100 possessions over the windowed history; 0 when
// the window is empty.
Rating net_rating(std::span<const TeamOutcome> history, WindowPolicy window);

struct PossessionEstimate {
  double value = 0.0;
  bool estimated = false;  // box score formula used instead of a recorded count
  bool clamped = false;    // formula went negative and was clamped to 0
};

// Recorded possessions when present, otherwise fga - oreb + tov + 0.44 * fta.
PossessionEstimate estimate_possessions(const BoxLine& box);

Rating compute_statistic(Statistic stat, std::span<const TeamOutcome> history, double prior, WindowPolicy window);

struct RatingPair {
  Rating home;
  Rating away;
};

struct MethodSpec;

// Ratings of both teams before game `game_index`. For home-adjusted methods
// the home team's history is restricted to its home games before the window
// is applied; the away team always uses its overall history. Per-team priors
// in the dataset take precedence over `default_prior`.
RatingPair rate_for_game(const SeasonDataset& dataset, const MethodSpec& method, const TeamId& home,
                         const TeamId& away, std::size_t game_index, WindowPolicy window,
                         const ResultSource& source = ResultSource::real(), double default_prior = 0.5);

}  // namespace courtsim
