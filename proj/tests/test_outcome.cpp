#include <cmath>
#include <random>

#include "courtsim/engine.hpp"
#include "courtsim/outcome.hpp"
#include "doctest.h"

using namespace courtsim;

namespace {

Rating real(double v) { return Rating{v, RatingKind::real_valued}; }

void check_valid(const OutcomeDistribution& d) {
  CHECK(d.p_home_win >= 0.0);
  CHECK(d.p_away_win >= 0.0);
  CHECK(d.p_tie >= 0.0);
  CHECK(std::abs(d.p_home_win + d.p_away_win + d.p_tie - 1.0) <= 1e-12);
}

// Simulates the race trial by trial; independent of the closed form.
double simulated_race(double p1, double p2, int n, std::mt19937_64& rng) {
  std::bernoulli_distribution t1(p1);
  std::bernoulli_distribution t2(p2);
  int wins = 0;
  for (int i = 0; i < n; ++i) {
    for (;;) {
      const bool a = t1(rng);
      const bool b = t2(rng);
      if (a != b) {
        wins += a;
        break;
      }
    }
  }
  return static_cast<double>(wins) / n;
}

}  // namespace

TEST_SUITE("method table") {
  TEST_CASE("decomposition of the six methods") {
    CHECK(method_spec(MethodId::i) ==
          MethodSpec{MethodId::i, Statistic::win_percentage, false, OutcomeFunction::bernoulli_race});
    CHECK(method_spec(MethodId::ii) ==
          MethodSpec{MethodId::ii, Statistic::win_percentage, true, OutcomeFunction::bernoulli_race});
    CHECK(method_spec(MethodId::iii) ==
          MethodSpec{MethodId::iii, Statistic::win_percentage, false, OutcomeFunction::largest_value});
    CHECK(method_spec(MethodId::iv) ==
          MethodSpec{MethodId::iv, Statistic::win_percentage, true, OutcomeFunction::largest_value});
    CHECK(method_spec(MethodId::v) ==
          MethodSpec{MethodId::v, Statistic::net_rating, false, OutcomeFunction::largest_value});
    CHECK(method_spec(MethodId::vi) ==
          MethodSpec{MethodId::vi, Statistic::net_rating, true, OutcomeFunction::largest_value});
  }

  TEST_CASE("ids round-trip through text") {
    for (auto id : kAllMethods) CHECK(parse_method_id(to_string(id)) == id);
    CHECK_FALSE(parse_method_id("vii").has_value());
  }
}

TEST_SUITE("largest_value") {
  TEST_CASE("examples") {
    CHECK(largest_value(real(5.0), real(3.0)) == OutcomeDistribution{1.0, 0.0, 0.0});
    CHECK(largest_value(real(2.5), real(2.5)) == OutcomeDistribution{0.5, 0.5, 0.0});
    CHECK(largest_value(real(-3.0), real(-1.0)) == OutcomeDistribution{0.0, 1.0, 0.0});
  }

  TEST_CASE("argmax invariant under increasing transforms of both ratings") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int i = 0; i < 1000; ++i) {
      const double a = u(rng);
      const double b = i % 10 == 0 ? a : u(rng);
      const auto base = largest_value(real(a), real(b));
      CHECK(largest_value(real(std::exp(a / 10.0)), real(std::exp(b / 10.0))) == base);
      CHECK(largest_value(real(3.0 * a + 7.0), real(3.0 * b + 7.0)) == base);
    }
  }
}

TEST_SUITE("bernoulli_race") {
  TEST_CASE("no-tie examples") {
    CHECK(bernoulli_race_no_ties(0.7, 0.5).p_home_win == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(bernoulli_race_no_ties(0.3, 0.3).p_home_win == 0.5);
    CHECK(bernoulli_race_no_ties(0.8, 0.6).p_home_win == doctest::Approx(0.32 / 0.44).epsilon(1e-14));
    CHECK(std::abs(bernoulli_race_no_ties(0.8, 0.6).p_home_win - 0.727273) < 5e-7);
    CHECK(bernoulli_race_no_ties(1.0, 1.0) == OutcomeDistribution{0.5, 0.5, 0.0});
    CHECK(bernoulli_race_no_ties(0.0, 0.0) == OutcomeDistribution{0.5, 0.5, 0.0});
  }

  TEST_CASE("with-ties examples") {
    // 0.12 itself is not the rounded value: (1 - 0.7) * 0.4 on the stored
    // doubles rounds to 0.12000000000000002.
    const auto d = bernoulli_race_with_ties(0.7, 0.4);
    CHECK(d.p_home_win == 0.42);
    CHECK(d.p_away_win == 0.12000000000000002);
    CHECK(d.p_tie == 0.46);
    CHECK(bernoulli_race_with_ties(1.0, 0.0) == OutcomeDistribution{1.0, 0.0, 0.0});
    CHECK(bernoulli_race_with_ties(0.0, 0.0) == OutcomeDistribution{0.0, 0.0, 1.0});
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(bernoulli_race_no_ties(-0.1, 0.5), Error);
    CHECK_THROWS_AS(bernoulli_race_no_ties(0.5, 1.1), Error);
    CHECK_THROWS_AS(bernoulli_race_with_ties(std::nan(""), 0.5), Error);
  }

  TEST_CASE("closed form matches a trial-by-trial simulation") {
    std::mt19937_64 rng(17);
    for (auto [p1, p2] : {std::pair{0.8, 0.6}, std::pair{0.3, 0.55}, std::pair{0.1, 0.9}}) {
      const int n = 100000;
      const double p = bernoulli_race_no_ties(p1, p2).p_home_win;
      CHECK(std::abs(simulated_race(p1, p2, n, rng) - p) <= 4.0 * std::sqrt(p * (1 - p) / n));
    }
  }

  TEST_CASE("symmetry, monotonicity and validity over random inputs") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
      const double p1 = u(rng);
      const double p2 = u(rng);
      const auto a = bernoulli_race_no_ties(p1, p2);
      const auto b = bernoulli_race_no_ties(p2, p1);
      CHECK(a.p_home_win == b.p_away_win);
      const auto t1 = bernoulli_race_with_ties(p1, p2);
      const auto t2 = bernoulli_race_with_ties(p2, p1);
      CHECK(t1.p_home_win == t2.p_away_win);
      check_valid(a);
      check_valid(t1);

      if (p1 > 0.0 && p1 < 0.99 && p2 > 0.01 && p2 < 1.0) {
        CHECK(bernoulli_race_no_ties(p1 + 0.01, p2).p_home_win > a.p_home_win);
        CHECK(bernoulli_race_no_ties(p1, p2 - 0.01).p_home_win > a.p_home_win);
      }
    }
  }
}

TEST_SUITE("sample_outcome") {
  TEST_CASE("boundary convention") {
    CHECK(sample_outcome({1.0, 0.0, 0.0}, 0.0) == GameOutcome::home_win);
    CHECK(sample_outcome({1.0, 0.0, 0.0}, 0.999999) == GameOutcome::home_win);
    CHECK(sample_outcome({0.5, 0.5, 0.0}, 0.49) == GameOutcome::home_win);
    CHECK(sample_outcome({0.5, 0.5, 0.0}, 0.50) == GameOutcome::away_win);
    CHECK(sample_outcome({0.0, 1.0, 0.0}, 0.0) == GameOutcome::away_win);
  }

  TEST_CASE("categories ordered home, away, tie") {
    const OutcomeDistribution d{0.42, 0.12, 0.46};
    CHECK(sample_outcome(d, 0.41) == GameOutcome::home_win);
    // Cumulative bounds are 0.42 and 0.54.
    CHECK(sample_outcome(d, 0.53) == GameOutcome::away_win);
    CHECK(sample_outcome(d, 0.55) == GameOutcome::tie);
    CHECK(sample_outcome(d, 0.999) == GameOutcome::tie);
  }

  TEST_CASE("no-tie distributions never produce a tie") {
    const auto d = bernoulli_race_no_ties(0.1, 0.7);
    CHECK(sample_outcome(d, std::nextafter(1.0, 0.0)) == GameOutcome::away_win);
  }

  TEST_CASE("empirical frequencies converge") {
    ReplicationStream stream(2024, 0);
    for (const auto& d : {bernoulli_race_no_ties(0.8, 0.6), bernoulli_race_with_ties(0.7, 0.4)}) {
      const int n = 100000;
      int home = 0, away = 0, tie = 0;
      for (int i = 0; i < n; ++i) {
        switch (sample_outcome(d, stream.next())) {
          case GameOutcome::home_win: ++home; break;
          case GameOutcome::away_win: ++away; break;
          case GameOutcome::tie: ++tie; break;
        }
      }
      for (auto [count, p] : {std::pair{home, d.p_home_win}, std::pair{away, d.p_away_win}, std::pair{tie, d.p_tie}}) {
        CHECK(std::abs(static_cast<double>(count) / n - p) <= 4.0 * std::sqrt(p * (1.0 - p) / n));
      }
    }
  }
}
