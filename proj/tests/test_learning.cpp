#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "uavgame/learning.hpp"
#include "uavgame/market.hpp"

using namespace uavgame;

namespace {

// Brute-force best response on a dense fixed grid, the oracle route for the
// refine-based solver.
Strategy dense_best_response(int who, const Strategy& rival, const GameConfig& cfg, int n) {
    StrategyProfile p;
    p[static_cast<std::size_t>(1 - who)] = rival;
    double best_u = -1e300;
    Strategy best{0, 0};
    for (int i = 0; i < n; ++i) {
        const double t = cfg.timing.slot_period * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double f = cfg.market.fee_min +
                             (cfg.market.fee_max - cfg.market.fee_min) * j / (n - 1);
            p[static_cast<std::size_t>(who)] = Strategy{t, f};
            const double u = utility(p, cfg, who);
            if (u > best_u) {
                best_u = u;
                best = Strategy{t, f};
            }
        }
    }
    return best;
}

double norm_dist(const Strategy& a, const Strategy& b, const GameConfig& cfg) {
    return std::hypot((a.beacon_duration - b.beacon_duration) / cfg.timing.slot_period,
                      (a.fee - b.fee) / (cfg.market.fee_max - cfg.market.fee_min));
}

}  // namespace

TEST_CASE("refined cell diameter") {
    LearningConfig lc;  // 64 points, 3 refinements, shrink 4
    const double per_axis = (1.0 / 64.0) / 63.0;
    CHECK(refined_cell_diameter(lc) == doctest::Approx(per_axis * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("zero coverage drives the best response to the energy-saving corner") {
    auto cfg = helpers::make_config(4.0, 50, 0.0, 10.0, {1, 1}, {0.0, 0.8});
    const auto br = best_response(0, Strategy{0.5, 5.0}, cfg, {});
    CHECK(br.beacon_duration == 0.0);
    CHECK(br.fee == 0.0);  // revenue plateau, ties break low
}

TEST_CASE("zero coverage respects a positive fee floor") {
    auto cfg = helpers::make_config(4.0, 50, 2.0, 10.0, {1, 1}, {0.0, 0.8});
    const auto br = best_response(0, Strategy{0.5, 5.0}, cfg, {});
    CHECK(br.beacon_duration == 0.0);
    CHECK(br.fee == 2.0);
}

TEST_CASE("collapsed market: the off equilibrium answers itself") {
    // figure-config energy regime at mu = 2: against an off rival the best
    // response is to stay off at the lowest fee
    auto cfg = helpers::make_config(2.0, 50, 0.0, 10.0, {1, 1}, {0.8, 0.8},
                                    helpers::sweep_energy());
    const auto br = best_response(0, Strategy{0.0, 0.0}, cfg, {});
    CHECK(br.beacon_duration == 0.0);
    CHECK(br.fee == 0.0);
}

TEST_CASE("best response agrees with the dense-grid oracle") {
    auto cfg = helpers::make_config();
    LearningConfig lc;
    const Strategy rival{0.5, 5.0};
    const auto fast = best_response(0, rival, cfg, lc);
    const auto dense = dense_best_response(0, rival, cfg, 257);
    // both land within their own grid granularity of the true optimum
    CHECK(norm_dist(fast, dense, cfg) < refined_cell_diameter(lc) + std::sqrt(2.0) / 256.0);
}

TEST_CASE("dynamics from the fixed point converge immediately") {
    auto cfg = helpers::make_config();
    LearningConfig lc;
    const auto first = run_dynamics(cfg, lc, midpoint_profile(cfg));
    REQUIRE(first.converged);
    const auto again = run_dynamics(cfg, lc, first.profile);
    REQUIRE(again.converged);
    CHECK(*again.trace.converged_at == 1);
    CHECK(again.trace.iterations.size() == 1);
    CHECK(again.trace.final_residual < lc.fp_tolerance);
}

TEST_CASE("default game: dynamics land on the dense-grid fixed point") {
    auto cfg = helpers::make_config();
    LearningConfig lc;
    const auto report = run_dynamics(cfg, lc, midpoint_profile(cfg));
    REQUIRE(report.converged);
    CHECK(report.br_residual < 2.0 * refined_cell_diameter(lc));

    // iterate the dense-grid map to its own fixed point
    StrategyProfile dense = midpoint_profile(cfg);
    for (int round = 0; round < 40; ++round) {
        const StrategyProfile next{dense_best_response(0, dense[1], cfg, 257),
                                   dense_best_response(1, dense[0], cfg, 257)};
        const double step = std::max(norm_dist(next[0], dense[0], cfg),
                                     norm_dist(next[1], dense[1], cfg));
        dense = next;
        if (step < 1e-12) break;
    }
    for (int who = 0; who < 2; ++who) {
        CHECK(norm_dist(report.profile[static_cast<std::size_t>(who)],
                        dense[static_cast<std::size_t>(who)], cfg) <
              refined_cell_diameter(lc) + std::sqrt(2.0) / 256.0);
    }
    // the known equilibrium shape: always-on beaconing, fee near 2*mu
    CHECK(report.profile[0].beacon_duration == 1.0);
    CHECK(report.profile[0].fee == doctest::Approx(8.0).epsilon(2e-3));
}

TEST_CASE("five random restarts agree on the default game") {
    auto cfg = helpers::make_config();
    LearningConfig lc;
    lc.restarts = 5;
    lc.seed = 2026;
    const auto report = run_dynamics(cfg, lc, midpoint_profile(cfg));
    REQUIRE(report.converged);
    REQUIRE(report.restart_agreement.has_value());
    CHECK(*report.restart_agreement < 2.0 * refined_cell_diameter(lc));
}

TEST_CASE("restart agreement is absent for a single run") {
    auto cfg = helpers::make_config();
    const auto report = run_dynamics(cfg, {}, midpoint_profile(cfg));
    CHECK_FALSE(report.restart_agreement.has_value());
}

TEST_CASE("non-convergence is reported, not thrown") {
    auto cfg = helpers::make_config();
    LearningConfig lc;
    lc.max_iterations = 1;
    lc.fp_tolerance = 1e-12;
    const auto report = run_dynamics(cfg, lc, random_profile(cfg, 7));
    CHECK_FALSE(report.converged);
    CHECK_FALSE(report.trace.converged_at.has_value());
    CHECK(report.trace.iterations.size() == 1);
}

TEST_CASE("fee best response is nondecreasing in the rival fee") {
    auto cfg = helpers::make_config();
    double prev = -1.0;
    for (int k = 0; k <= 10; ++k) {
        const double rival_fee = k;
        const double br = best_response_fee(0, rival_fee, {0.5, 0.5}, cfg, {});
        CHECK(br >= prev - 1e-12);
        prev = br;
    }
}

TEST_CASE("availability best response is nonincreasing in the rival duration") {
    // interior-response regime (figure energy, mu = 3)
    auto cfg = helpers::make_config(3.0, 50, 0.0, 10.0, {1, 1}, {0.8, 0.8},
                                    helpers::sweep_energy());
    LearningConfig lc;
    double prev = 2.0;
    for (int k = 0; k <= 10; ++k) {
        const double rival_tau = k / 10.0;
        const double br = best_response_tau(0, rival_tau, {6.0, 6.0}, cfg, lc);
        CHECK(br <= prev + 2.0 * refined_cell_diameter(lc));
        prev = br;
    }
}

TEST_CASE("symmetric runs stay symmetric round by round") {
    auto cfg = helpers::make_config();
    const auto report = run_dynamics(cfg, {}, midpoint_profile(cfg));
    for (const auto& row : report.trace.iterations) {
        CHECK(row.profile[0].beacon_duration == row.profile[1].beacon_duration);
        CHECK(row.profile[0].fee == row.profile[1].fee);
        CHECK(row.utilities[0] == row.utilities[1]);
    }
}

TEST_CASE("identical seeds reproduce traces bit for bit") {
    auto cfg = helpers::make_config();
    LearningConfig lc;
    lc.seed = 99;
    const auto a = run_dynamics(cfg, lc, random_profile(cfg, lc.seed));
    const auto b = run_dynamics(cfg, lc, random_profile(cfg, lc.seed));
    CHECK(trace_csv(a.trace, "p") == trace_csv(b.trace, "p"));
}

TEST_CASE("sequential updates converge too") {
    auto cfg = helpers::make_config();
    LearningConfig lc;
    lc.update_mode = UpdateMode::Sequential;
    const auto report = run_dynamics(cfg, lc, random_profile(cfg, 5));
    REQUIRE(report.converged);
    CHECK(report.profile[0].beacon_duration == 1.0);
    CHECK(report.profile[0].fee == doctest::Approx(8.0).epsilon(2e-3));
}

TEST_CASE("sweep value application") {
    auto cfg = helpers::make_config(4.0, 50, 0.0, 10.0, {1.5, 1.0}, {0.5, 0.9});

    const auto mu = apply_sweep_value(cfg, SweepAxis::Temperature, 2.5);
    CHECK(mu.market.temperature == 2.5);

    const auto pop = apply_sweep_value(cfg, SweepAxis::Population, 200.0);
    CHECK(pop.market.population_size == 200);

    // per-operator axes preserve the template ratio, anchored at operator 0
    const auto lam = apply_sweep_value(cfg, SweepAxis::EncounterRate, 0.4);
    CHECK(lam.uav[0].encounter_rate == doctest::Approx(0.4));
    CHECK(lam.uav[1].encounter_rate == doctest::Approx(0.4 / 1.5));

    const auto cov = apply_sweep_value(cfg, SweepAxis::Coverage, 0.3);
    CHECK(cov.resolved_coverage[0] == doctest::Approx(0.3));
    CHECK(cov.resolved_coverage[1] == doctest::Approx(0.54).epsilon(1e-12));

    // the scaled partner clamps at a probability of one
    const auto cov_hi = apply_sweep_value(cfg, SweepAxis::Coverage, 0.8);
    CHECK(cov_hi.resolved_coverage[1] == 1.0);
}

TEST_CASE("temperature sweep is deterministic and ordered") {
    auto cfg = helpers::make_config(4.0, 50, 0.0, 10.0, {1, 1}, {0.8, 0.8},
                                    helpers::sweep_energy());
    LearningConfig lc;
    lc.init_mode = InitMode::Midpoint;
    const std::vector<double> values{2.0, 3.0, 4.0};
    const auto a = sweep_equilibria(cfg, SweepAxis::Temperature, values, lc);
    const auto b = sweep_equilibria(cfg, SweepAxis::Temperature, values, lc);
    REQUIRE(a.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(a[i].value == values[i]);
        CHECK(a[i].report.profile[0].fee == b[i].report.profile[0].fee);
        CHECK(a[i].report.profile[0].beacon_duration == b[i].report.profile[0].beacon_duration);
    }
    // the collapsed low-temperature point and a live one
    CHECK(a[0].report.profile[0].fee == 0.0);
    CHECK(a[2].report.profile[0].fee > 1.0);
}
