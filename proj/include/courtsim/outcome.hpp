#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "courtsim/ratings.hpp"

namespace courtsim {

struct OutcomeDistribution {
  double p_home_win = 0.5;
  double p_away_win = 0.5;
  double p_tie = 0.0;

  bool operator==(const OutcomeDistribution&) const = default;
};

enum class OutcomeFunction { bernoulli_race, largest_value };

enum class MethodId { i, ii, iii, iv, v, vi };

struct MethodSpec {
  MethodId id = MethodId::i;
  Statistic statistic = Statistic::win_percentage;
  bool home_adjusted = false;
  OutcomeFunction outcome_fn = OutcomeFunction::bernoulli_race;

  bool operator==(const MethodSpec&) const = default;
};

// The six prediction methods:
//   i   Bernoulli race on win percentage
//   ii  Bernoulli race on home-adjusted win percentage
//   iii largest value on win percentage
//   iv  largest value on home-adjusted win percentage
//   v   largest value on net rating
//   vi  largest value on home-adjusted net rating
MethodSpec method_spec(MethodId id);
std::optional<MethodId> parse_method_id(std::string_view token);
std::string to_string(MethodId id);
inline constexpr std::array<MethodId, 6> kAllMethods{MethodId::i,  MethodId::ii, MethodId::iii,
                                                     MethodId::iv, MethodId::v,  MethodId::vi};

// Deterministic winner by higher rating; a coin flip on exactly equal ratings.
OutcomeDistribution largest_value(const Rating& home, const Rating& away);

// Bernoulli race where both teams repeat trials until exactly one succeeds.
// Both probabilities 0 or both 1 never terminate; that case is defined as 0.5/0.5.
OutcomeDistribution bernoulli_race_no_ties(double p1, double p2);

// Single round of trials; equal trial results are a tie.
OutcomeDistribution bernoulli_race_with_ties(double p1, double p2);

// Applies the method's outcome function to a pair of ratings.
OutcomeDistribution outcome_distribution(const MethodSpec& method, const Rating& home, const Rating& away);

enum class GameOutcome { home_win, away_win, tie };

// Inverse-CDF sampling with categories ordered (home-win, away-win, tie).
// `draw` is uniform in [0, 1).
GameOutcome sample_outcome(const OutcomeDistribution& dist, double draw) noexcept;

}  // namespace courtsim
