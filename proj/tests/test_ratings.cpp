#include <random>

#include "courtsim/outcome.hpp"
#include "courtsim/ratings.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace courtsim;

namespace {

std::vector<TeamOutcome> results(std::initializer_list<bool> won) {
  std::vector<TeamOutcome> out;
  for (bool w : won) out.push_back(TeamOutcome{w, true, w ? 105 : 95, w ? 95 : 105, 100.0});
  return out;
}

}  // namespace

TEST_SUITE("win_percentage") {
  TEST_CASE("spec examples") {
    CHECK(win_percentage({}, 0.5, WindowPolicy::unbounded()).value == 0.5);
    CHECK(win_percentage(results({true, true, false}), 0.5, WindowPolicy::unbounded()).value == 0.625);
    CHECK(win_percentage(results({false, false, false, true, true}), 0.5, WindowPolicy::last(2)).value ==
          doctest::Approx(2.5 / 3.0).epsilon(1e-15));
    CHECK(win_percentage(results({false}), 0.25, WindowPolicy::unbounded()).value == 0.125);
  }

  TEST_CASE("kind is probability") {
    CHECK(win_percentage({}, 0.5, WindowPolicy::unbounded()).kind == RatingKind::probability);
  }

  TEST_CASE("prior outside (0,1) is rejected") {
    CHECK_THROWS_AS(win_percentage({}, 0.0, WindowPolicy::unbounded()), Error);
    CHECK_THROWS_AS(win_percentage({}, 1.0, WindowPolicy::unbounded()), Error);
  }

  TEST_CASE("zero window rejected") { CHECK_THROWS_AS(WindowPolicy::last(0), Error); }

  TEST_CASE("properties over random histories") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> prior_dist(1e-6, 1.0 - 1e-6);
    for (int trial = 0; trial < 500; ++trial) {
      const auto n = static_cast<std::size_t>(rng() % 90);
      std::vector<TeamOutcome> hist(n);
      for (auto& o : hist) o.won = rng() % 2;
      const double prior = prior_dist(rng);
      const auto k = 1 + static_cast<std::size_t>(rng() % 100);
      const auto full = win_percentage(hist, prior, WindowPolicy::unbounded()).value;
      const auto windowed = win_percentage(hist, prior, WindowPolicy::last(k)).value;
      CHECK(full > 0.0);
      CHECK(full < 1.0);
      CHECK(windowed > 0.0);
      CHECK(windowed < 1.0);
      if (k >= n) CHECK(windowed == full);

      // Flipping an in-window loss to a win strictly increases the rating.
      const std::size_t first_in_window = n > k ? n - k : 0;
      for (std::size_t i = first_in_window; i < n; ++i) {
        if (hist[i].won) continue;
        auto flipped = hist;
        flipped[i].won = true;
        CHECK(win_percentage(flipped, prior, WindowPolicy::last(k)).value > windowed);
        break;
      }
    }
  }
}

TEST_SUITE("net_rating") {
  TEST_CASE("empty history starts at zero") { CHECK(net_rating({}, WindowPolicy::unbounded()).value == 0.0); }

  TEST_CASE("one game scaled per 100 possessions") {
    std::vector<TeamOutcome> h{{true, true, 110, 105, 100.0}};
    CHECK(net_rating(h, WindowPolicy::unbounded()).value == 5.0);
  }

  TEST_CASE("symmetric scores give zero") {
    std::vector<TeamOutcome> h{{true, true, 100, 90, 95.0}, {false, false, 90, 100, 97.0}};
    CHECK(net_rating(h, WindowPolicy::unbounded()).value == 0.0);
  }

  TEST_CASE("zero possessions with games is a data error") {
    std::vector<TeamOutcome> h{{true, true, 100, 90, 0.0}};
    try {
      (void)net_rating(h, WindowPolicy::unbounded());
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::data);
    }
  }

  TEST_CASE("head-to-head ratings are opposite with equal possessions") {
    std::vector<TeamOutcome> a{{true, true, 117, 104, 98.0}};
    std::vector<TeamOutcome> b{{false, false, 104, 117, 98.0}};
    CHECK(net_rating(a, WindowPolicy::unbounded()).value == -net_rating(b, WindowPolicy::unbounded()).value);
  }

  TEST_CASE("window keeps only the last games") {
    std::vector<TeamOutcome> h{{true, true, 130, 90, 100.0}, {false, true, 95, 100, 100.0}};
    CHECK(net_rating(h, WindowPolicy::last(1)).value == -5.0);
    CHECK(net_rating(h, WindowPolicy::last(2)).value == 17.5);
  }
}

TEST_SUITE("estimate_possessions") {
  TEST_CASE("recorded count passes through") {
    BoxLine b{90, 25, 10, 12, 98.5};
    CHECK(estimate_possessions(b).value == 98.5);
    CHECK_FALSE(estimate_possessions(b).estimated);
  }

  TEST_CASE("box score formula") {
    BoxLine b{90, 25, 10, 12, std::nullopt};
    CHECK(estimate_possessions(b).value == doctest::Approx(103.0).epsilon(1e-12));
    CHECK(estimate_possessions(b).estimated);
  }

  TEST_CASE("empty box") { CHECK(estimate_possessions(BoxLine{}).value == 0.0); }

  TEST_CASE("negative estimate clamps to zero") {
    BoxLine b{0, 0, 5, 0, std::nullopt};
    const auto est = estimate_possessions(b);
    CHECK(est.value == 0.0);
    CHECK(est.clamped);
  }
}

TEST_SUITE("rate_for_game") {
  using courtsim::testing::make_game;

  // H plays at home, away, at home (W, L, W), then hosts A in game 4.
  SeasonDataset home_split_season() {
    SeasonDataset::Parts parts;
    parts.season_id = "2021-2022";
    parts.games = {make_game("g1", 0, "H", "A", 110, 100), make_game("g2", 1, "A", "H", 110, 100),
                   make_game("g3", 2, "H", "A", 110, 100), make_game("g4", 3, "H", "A", 100, 110)};
    parts.conferences = {{"H", Conference::east}, {"A", Conference::east}};
    return SeasonDataset::build(std::move(parts));
  }

  TEST_CASE("non-adjusted symmetric inputs give equal ratings") {
    auto ds = courtsim::testing::two_team_season({true, false, true, false});
    const auto r = rate_for_game(ds, method_spec(MethodId::i), "X", "Y", 0, WindowPolicy::unbounded());
    CHECK(r.home == r.away);
  }

  TEST_CASE("home-adjusted win percentage filters home games before windowing") {
    auto ds = home_split_season();
    const auto r = rate_for_game(ds, method_spec(MethodId::ii), "H", "A", 3, WindowPolicy::unbounded());
    CHECK(r.home.value == doctest::Approx(2.5 / 3.0).epsilon(1e-15));
    // A is rated on all three games (won only game 2).
    CHECK(r.away.value == doctest::Approx(1.5 / 4.0).epsilon(1e-15));

    const auto w1 = rate_for_game(ds, method_spec(MethodId::ii), "H", "A", 3, WindowPolicy::last(1));
    CHECK(w1.home.value == 0.75);  // last home game was a win
  }

  TEST_CASE("home-adjusted with no home games falls back to the prior") {
    auto ds = home_split_season();
    const auto r = rate_for_game(ds, method_spec(MethodId::ii), "A", "H", 1, WindowPolicy::unbounded());
    CHECK(r.home.value == 0.5);
  }

  TEST_CASE("home adjustment never changes the away rating") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto ds = courtsim::testing::random_mini_season(seed);
      for (std::size_t g = 0; g < ds.game_count(); ++g) {
        const auto& game = ds.game(g);
        for (auto [plain, adjusted] : {std::pair{MethodId::i, MethodId::ii}, std::pair{MethodId::v, MethodId::vi}}) {
          const auto a = rate_for_game(ds, method_spec(plain), game.home, game.away, g, WindowPolicy::unbounded());
          const auto b = rate_for_game(ds, method_spec(adjusted), game.home, game.away, g, WindowPolicy::unbounded());
          CHECK(a.away == b.away);
        }
      }
    }
  }
}
