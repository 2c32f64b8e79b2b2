#include <cmath>

#include "courtsim/analysis.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace courtsim;

namespace {

SimulationConfig config_for(MethodId id, std::size_t reps, std::uint64_t seed = 3) {
  SimulationConfig c;
  c.method = method_spec(id);
  c.replications = reps;
  c.master_seed = seed;
  return c;
}

ReplicationResult fake_result(std::size_t rep, const std::vector<bool>& correct) {
  ReplicationResult r;
  r.rep_index = rep;
  for (std::size_t g = 0; g < correct.size(); ++g) {
    r.predictions.push_back({static_cast<std::uint32_t>(g), 0.5, Winner::home, correct[g]});
  }
  return r;
}

}  // namespace

TEST_SUITE("mean_ci95") {
  TEST_CASE("constant values have zero width") {
    const std::vector<double> v{0.6, 0.6, 0.6};
    const auto ci = mean_ci95(v);
    CHECK(ci.mean == doctest::Approx(0.6));
    CHECK(ci.ci_low == ci.ci_high);
  }

  TEST_CASE("two values") {
    const std::vector<double> v{0.0, 1.0};
    const auto ci = mean_ci95(v);
    CHECK(ci.mean == 0.5);
    // sample sd = sqrt(0.5), half width = 1.96 * sqrt(0.5) / sqrt(2) = 0.98
    CHECK(ci.ci_high - ci.mean == doctest::Approx(0.98).epsilon(1e-12));
  }

  TEST_CASE("single value") {
    const std::vector<double> v{0.25};
    const auto ci = mean_ci95(v);
    CHECK(ci.ci_low == 0.25);
    CHECK(ci.ci_high == 0.25);
  }

  TEST_CASE("empty input is an error") { CHECK_THROWS_AS(mean_ci95({}), Error); }
}

TEST_SUITE("accuracy") {
  TEST_CASE("second half starts at ceil(N/2)") {
    CHECK(interval_start(4, Interval::second_half) == 2);
    CHECK(interval_start(5, Interval::second_half) == 3);
    CHECK(interval_start(1230, Interval::second_half) == 615);
    CHECK(interval_start(1230, Interval::complete) == 0);
  }

  TEST_CASE("all-correct run") {
    auto ds = courtsim::testing::two_team_season({true, true, true, false});
    std::vector<ReplicationResult> results{fake_result(0, {true, true, true, true}),
                                           fake_result(1, {true, true, true, true})};
    const auto r = accuracy(results, ds, config_for(MethodId::i, 2), Interval::complete);
    CHECK(r.mean_accuracy == 1.0);
    CHECK(r.ci_low == 1.0);
    CHECK(r.ci_high == 1.0);
    CHECK(r.replications == 2);
  }

  TEST_CASE("per-replication fractions over the interval") {
    std::vector<ReplicationResult> results{fake_result(0, {true, false, true, false, true}),
                                           fake_result(1, {false, false, false, true, true})};
    const auto full = per_replication_accuracy(results, 5, Interval::complete);
    const auto half = per_replication_accuracy(results, 5, Interval::second_half);
    CHECK(full == std::vector<double>{0.6, 0.4});
    CHECK(half[0] == doctest::Approx(0.5));
    CHECK(half[1] == 1.0);
  }

  TEST_CASE("two-team fixture with method iii averages 0.625") {
    auto ds = courtsim::testing::two_team_season({true, true, true, false});
    const auto cfg = config_for(MethodId::iii, 4000);
    const auto r = accuracy(run_replications(ds, cfg, 1), ds, cfg, Interval::complete);
    CHECK(std::abs(r.mean_accuracy - 0.625) < 0.02);
    CHECK(r.ci_low < r.mean_accuracy);
  }

  TEST_CASE("deterministic second half has zero-width interval") {
    auto ds = courtsim::testing::random_mini_season(4);
    const auto cfg = config_for(MethodId::v, 30);
    const auto results = run_replications(ds, cfg, 1);
    const auto dists = monte_carlo_distributions(ds, cfg);
    bool any_coin = false;
    for (std::size_t g = interval_start(ds.game_count(), Interval::second_half); g < ds.game_count(); ++g) {
      any_coin |= dists[g].p_home_win == 0.5;
    }
    REQUIRE_FALSE(any_coin);
    const auto r = accuracy(results, ds, cfg, Interval::second_half);
    CHECK(r.ci_low == r.ci_high);
  }

  TEST_CASE("interval narrows with the square root of replications") {
    auto ds = courtsim::testing::random_mini_season(10);
    const auto small_cfg = config_for(MethodId::i, 100);
    const auto large_cfg = config_for(MethodId::i, 400);
    const auto small = accuracy(run_replications(ds, small_cfg, 1), ds, small_cfg, Interval::complete);
    const auto large = accuracy(run_replications(ds, large_cfg, 1), ds, large_cfg, Interval::complete);
    const double ratio = (small.ci_high - small.ci_low) / (large.ci_high - large.ci_low);
    CHECK(ratio >= 1.7);
    CHECK(ratio <= 2.3);
  }

  TEST_CASE("complete accuracy is the game-weighted mix of the two halves") {
    auto ds = courtsim::testing::random_mini_season(13);
    const auto results = run_replications(ds, config_for(MethodId::ii, 40), 1);
    const std::size_t n = ds.game_count();
    const std::size_t h = interval_start(n, Interval::second_half);
    const auto full = per_replication_accuracy(results, n, Interval::complete);
    const auto second = per_replication_accuracy(results, n, Interval::second_half);
    for (std::size_t r = 0; r < results.size(); ++r) {
      std::size_t first_correct = 0;
      for (std::size_t g = 0; g < h; ++g) first_correct += results[r].predictions[g].correct;
      const double first = static_cast<double>(first_correct) / static_cast<double>(h);
      const double mix = (first * h + second[r] * (n - h)) / n;
      CHECK(full[r] == doctest::Approx(mix).epsilon(1e-12));
    }
  }
}

TEST_SUITE("pooled_accuracy") {
  TEST_CASE("game-weighted against equal-weight pooling") {
    SeasonTally a{"A", 10, 5, {6, 8}, {3, 5}};
    SeasonTally b{"B", 4, 2, {4, 0}, {2, 0}};
    const std::vector<SeasonTally> seasons{a, b};
    const auto cfg = config_for(MethodId::i, 2);
    const auto weighted = pooled_accuracy(seasons, cfg, Interval::complete, true, "all");
    // rep 0: 10/14, rep 1: 8/14
    CHECK(weighted.mean_accuracy == doctest::Approx(9.0 / 14.0));
    const auto mean = pooled_accuracy(seasons, cfg, Interval::complete, false, "all-season-mean");
    // rep 0: (0.6 + 1.0) / 2, rep 1: (0.8 + 0.0) / 2
    CHECK(mean.mean_accuracy == doctest::Approx(0.6));
    CHECK(mean.season_id == "all-season-mean");
    const auto second = pooled_accuracy(seasons, cfg, Interval::second_half, true, "all");
    CHECK(second.mean_accuracy == doctest::Approx(5.0 / 7.0));
  }

  TEST_CASE("tally matches per-season accuracy") {
    auto ds = courtsim::testing::random_mini_season(14);
    const auto cfg = config_for(MethodId::iii, 25);
    const auto results = run_replications(ds, cfg, 1);
    const std::vector<SeasonTally> t{tally(results, ds)};
    for (auto interval : {Interval::complete, Interval::second_half}) {
      const auto direct = accuracy(results, ds, cfg, interval);
      const auto pooled = pooled_accuracy(t, cfg, interval, true, ds.season_id());
      CHECK(pooled.mean_accuracy == doctest::Approx(direct.mean_accuracy).epsilon(1e-12));
    }
  }
}

TEST_SUITE("wins_delta") {
  TEST_CASE("real wins") {
    auto ds = courtsim::testing::two_team_season({true, true, true, false});
    CHECK(real_wins(ds) == std::map<TeamId, int>{{"X", 3}, {"Y", 1}});
  }

  TEST_CASE("perfect predictor has zero deltas and a flat trend") {
    auto ds = courtsim::testing::random_mini_season(16);
    ReplicationResult r;
    r.sim_wins = real_wins(ds);
    const std::vector<ReplicationResult> results{r, r};
    const auto wd = wins_delta(results, ds);
    for (const auto& rec : wd.records) CHECK(rec.delta == 0);
    CHECK(wd.trend_slope == 0.0);
  }

  TEST_CASE("deltas sum to zero within each replication") {
    auto ds = courtsim::testing::random_mini_season(15);
    const auto results = run_replications(ds, config_for(MethodId::i, 20), 1);
    const auto wd = wins_delta(results, ds);
    REQUIRE(wd.records.size() == ds.teams().size() * 20);
    std::vector<int> per_rep(20, 0);
    for (const auto& rec : wd.records) {
      CHECK(rec.delta == rec.sim_wins - rec.real_wins);
      per_rep[rec.rep] += rec.delta;
    }
    for (int s : per_rep) CHECK(s == 0);
    for (std::size_t i = 1; i < wd.records.size(); ++i) {
      const auto& p = wd.records[i - 1];
      const auto& q = wd.records[i];
      CHECK((p.team < q.team || (p.team == q.team && p.rep < q.rep)));
    }
  }

  TEST_CASE("ols slope against the normal-equation formula") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> x(3 + trial % 20);
      std::vector<double> y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = u(rng);
        y[i] = u(rng);
      }
      double sx = 0, sy = 0, sxy = 0, sxx = 0;
      const double n = static_cast<double>(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxy += x[i] * y[i];
        sxx += x[i] * x[i];
      }
      const double expected = (n * sxy - sx * sy) / (n * sxx - sx * sx);
      CHECK(ols_slope(x, y) == doctest::Approx(expected).epsilon(1e-9));
    }
    const std::vector<double> flat{2.0, 2.0};
    const std::vector<double> any{1.0, 5.0};
    CHECK(ols_slope(flat, any) == 0.0);
  }

  TEST_CASE("two-team fixture slope equals the share of replications X wins game 1") {
    // Method iii: only game 1 is a coin flip, X takes games 2-4. X (3 real
    // wins) ends on +1 or 0 and Y (1 real win) on -1 or 0.
    auto ds = courtsim::testing::two_team_season({true, true, true, false});
    const auto results = run_replications(ds, config_for(MethodId::iii, 400), 1);
    std::size_t x_first = 0;
    for (const auto& r : results) x_first += r.predictions[0].sampled == Winner::home;
    const auto wd = wins_delta(results, ds);
    CHECK(wd.trend_slope == doctest::Approx(static_cast<double>(x_first) / 400.0).epsilon(1e-12));
    CHECK(wd.trend_slope > 0.0);
  }
}

TEST_SUITE("sweep_windows") {
  TEST_CASE("duplicates collapse and points are ordered") {
    std::vector<SeasonDataset> seasons{courtsim::testing::two_team_season({true, true, false, false})};
    const auto points = sweep_windows(seasons, config_for(MethodId::iii, 20), {3, 1, 3}, 1);
    REQUIRE(points.size() == 4);
    CHECK(points[0].window == 1);
    CHECK(points[0].interval == Interval::complete);
    CHECK(points[1].window == 1);
    CHECK(points[1].interval == Interval::second_half);
    CHECK(points[2].window == 3);
  }

  TEST_CASE("short memory wins on a momentum swing") {
    std::vector<SeasonDataset> seasons{courtsim::testing::two_team_season({true, true, false, false})};
    const auto cfg = config_for(MethodId::iii, 4000);
    const auto points = sweep_windows(seasons, cfg, {1, 4}, 1);
    CHECK(std::abs(points[0].mean_accuracy - 0.625) < 0.02);
    CHECK(std::abs(points[2].mean_accuracy - 0.375) < 0.02);

    const auto unbounded = accuracy(run_replications(seasons[0], cfg, 1), seasons[0], cfg, Interval::complete);
    CHECK(points[2].mean_accuracy == unbounded.mean_accuracy);
  }

  TEST_CASE("empty window list is rejected") {
    std::vector<SeasonDataset> seasons{courtsim::testing::two_team_season({true, false})};
    CHECK_THROWS_AS(sweep_windows(seasons, config_for(MethodId::i, 2), {}, 1), Error);
    CHECK_THROWS_AS(sweep_windows(seasons, config_for(MethodId::i, 2), {0}, 1), Error);
  }
}

TEST_SUITE("comparison") {
  TEST_CASE("counts strict wins per season") {
    std::vector<MethodRun> runs{{"i", {{"s1", 0.6}, {"s2", 0.5}}}, {"ii", {{"s1", 0.5}, {"s2", 0.55}}}};
    const auto c = compare_method_runs(runs);
    REQUIRE(c.size() == 1);
    CHECK(c[0].method_a == "i");
    CHECK(c[0].method_b == "ii");
    CHECK(c[0].seasons == 2);
    CHECK(c[0].a_higher == 1);
    CHECK(c[0].b_higher == 1);
  }

  TEST_CASE("identical runs tie everywhere") {
    std::vector<MethodRun> runs{{"a", {{"s1", 0.6}}}, {"b", {{"s1", 0.6}}}, {"c", {{"s1", 0.6}}}};
    const auto c = compare_method_runs(runs);
    CHECK(c.size() == 3);
    for (const auto& x : c) {
      CHECK(x.a_higher == 0);
      CHECK(x.b_higher == 0);
    }
  }

  TEST_CASE("runs over different seasons are rejected") {
    std::vector<MethodRun> runs{{"a", {{"s1", 0.6}}}, {"b", {{"s2", 0.6}}}};
    CHECK_THROWS_AS(compare_method_runs(runs), Error);
  }

  TEST_CASE("compare_methods runs every config on every season") {
    std::vector<SeasonDataset> seasons{courtsim::testing::random_mini_season(1),
                                       courtsim::testing::two_team_season({true, true, true, false})};
    std::vector<SimulationConfig> configs{config_for(MethodId::i, 10), config_for(MethodId::iii, 10),
                                          config_for(MethodId::v, 10)};
    const auto cmp = compare_methods(seasons, configs, 1);
    CHECK(cmp.accuracy.size() == 3 * 2 * 2);
    REQUIRE(cmp.reports.size() == 2);
    CHECK(cmp.reports[0].interval == Interval::complete);
    CHECK(cmp.reports[0].counts.size() == 3);
    for (const auto& c : cmp.reports[1].counts) {
      CHECK(c.seasons == 2);
      CHECK(c.a_higher + c.b_higher <= 2);
    }

    configs[1].master_seed = 99;
    CHECK_THROWS_AS(compare_methods(seasons, configs, 1), Error);
    CHECK_THROWS_AS(compare_methods(seasons, std::span(configs).first(1), 1), Error);
  }
}
