#include "courtsim/outcome.hpp"

namespace courtsim {
namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::domain, std::string("Bernoulli race parameter ") + name + " = " + std::to_string(p) +
                                       " is outside [0,1]");
  }
}

}  // namespace

MethodSpec method_spec(MethodId id) {
  using S = Statistic;
  using F = OutcomeFunction;
  switch (id) {
    case MethodId::i: return {id, S::win_percentage, false, F::bernoulli_race};
    case MethodId::ii: return {id, S::win_percentage, true, F::bernoulli_race};
    case MethodId::iii: return {id, S::win_percentage, false, F::largest_value};
    case MethodId::iv: return {id, S::win_percentage, true, F::largest_value};
    case MethodId::v: return {id, S::net_rating, false, F::largest_value};
    case MethodId::vi: return {id, S::net_rating, true, F::largest_value};
  }
  throw Error(ErrorKind::config, "unknown method id");
}

std::optional<MethodId> parse_method_id(std::string_view token) {
  for (auto id : kAllMethods) {
    if (token == to_string(id)) return id;
  }
  return std::nullopt;
}

std::string to_string(MethodId id) {
  switch (id) {
    case MethodId::i: return "i";
    case MethodId::ii: return "ii";
    case MethodId::iii: return "iii";
    case MethodId::iv: return "iv";
    case MethodId::v: return "v";
    case MethodId::vi: return "vi";
  }
  return "?";
}

OutcomeDistribution largest_value(const Rating& home, const Rating& away) {
  if (home.value > away.value) return {1.0, 0.0, 0.0};
  if (away.value > home.value) return {0.0, 1.0, 0.0};
  return {0.5, 0.5, 0.0};
}

OutcomeDistribution bernoulli_race_no_ties(double p1, double p2) {
  check_probability(p1, "p1");
  check_probability(p2, "p2");
  const double home = p1 * (1.0 - p2);
  const double away = (1.0 - p1) * p2;
  const double total = home + away;
  if (total == 0.0) return {0.5, 0.5, 0.0};
  return {home / total, away / total, 0.0};
}

OutcomeDistribution bernoulli_race_with_ties(double p1, double p2) {
  check_probability(p1, "p1");
  check_probability(p2, "p2");
  // Extended precision so each component is the correctly rounded product.
  const long double a = p1;
  const long double b = p2;
  return {static_cast<double>(a * (1.0L - b)), static_cast<double>((1.0L - a) * b),
          static_cast<double>((1.0L - a) * (1.0L - b) + a * b)};
}

OutcomeDistribution outcome_distribution(const MethodSpec& method, const Rating& home, const Rating& away) {
  if (method.outcome_fn == OutcomeFunction::largest_value) return largest_value(home, away);
  if (home.kind != RatingKind::probability || away.kind != RatingKind::probability) {
    throw Error(ErrorKind::config, "Bernoulli race requires probability-valued ratings");
  }
  return bernoulli_race_no_ties(home.value, away.value);
}

GameOutcome sample_outcome(const OutcomeDistribution& dist, double draw) noexcept {
  if (draw < dist.p_home_win) return GameOutcome::home_win;
  // Without tie mass, rounding slack above p_home + p_away still belongs to away.
  if (dist.p_tie == 0.0 || draw < dist.p_home_win + dist.p_away_win) return GameOutcome::away_win;
  return GameOutcome::tie;
}

}  // namespace courtsim
