#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "test_helpers.hpp"
#include "uavgame/errors.hpp"
#include "uavgame/market.hpp"
#include "uavgame/temporal.hpp"

using namespace uavgame;

TEST_CASE("logit share point values") {
    CHECK(logit_share(3.0, 3.0, 4.0) == 0.5);
    CHECK(logit_share(2.0, 4.0, 2.0) ==
          doctest::Approx(1.0 / (1.0 + std::exp(-1.0))).epsilon(1e-15));
    // weak price sensitivity flattens the market toward an even split
    CHECK(logit_share(0.0, 10.0, 1e9) == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(logit_share(10.0, 0.0, 1e9) == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("share conservation and monotonicity") {
    SplitMix64 rng(31);
    for (int i = 0; i < 1000; ++i) {
        const double fi = helpers::uniform(rng, 0.0, 10.0);
        const double fj = helpers::uniform(rng, 0.0, 10.0);
        const double mu = helpers::uniform(rng, 0.5, 8.0);
        const double a = logit_share(fi, fj, mu);
        CHECK(a > 0.0);
        CHECK(a < 1.0);
        CHECK(std::abs(a + logit_share(fj, fi, mu) - 1.0) < 1e-14);
        // strictly decreasing in the own fee
        CHECK(logit_share(fi + 0.25, fj, mu) < a);
    }
}

TEST_CASE("normalized throughput") {
    CHECK(normalized_throughput(ServedSet{{0.3}}, 0) == 0.3);
    CHECK(normalized_throughput(ServedSet{{0.5, 0.5}}, 0) == 0.25);
    CHECK(normalized_throughput(ServedSet{{0.2, 0.3, 0.4}}, 1) ==
          doctest::Approx(0.3 * 0.8 * 0.6).epsilon(1e-15));
    CHECK_THROWS_AS(normalized_throughput(ServedSet{{0.5}}, 1), IndexOutOfRange);
}

TEST_CASE("energy dissipation") {
    const TimingConfig timing{1.0, 100};
    SUBCASE("empty set and no beaconing leaves only the standby term") {
        EnergyParams e{1.0, 2.0, 3.0, 0.25, BeaconTerm::DutyCycle};
        CHECK(energy(ServedSet{}, e, 0.7, 0.0, timing, 0.5) == 0.25);
    }
    SUBCASE("full-duty beaconing term alone") {
        EnergyParams e{1.0, 0.0, 0.0, 0.0, BeaconTerm::DutyCycle};
        CHECK(energy(ServedSet{{0.5, 0.5}}, e, 0.9, 1.0, timing, 0.5) == 1.0);
    }
    SUBCASE("worked contact-energy example") {
        EnergyParams e{0.0, 2.0, 1.0, 0.0, BeaconTerm::DutyCycle};
        CHECK(energy(ServedSet{{0.5, 0.5}}, e, 0.5, 0.0, timing, 0.5) ==
              doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("literal-share beacon term uses the market share") {
        EnergyParams e{10.0, 0.0, 0.0, 0.0, BeaconTerm::LiteralShare};
        CHECK(energy(ServedSet{}, e, 0.0, 1.0, timing, 0.3) == doctest::Approx(3.0));
    }
    SUBCASE("never below the standby cost") {
        SplitMix64 rng(32);
        for (int i = 0; i < 300; ++i) {
            EnergyParams e{helpers::uniform(rng, 0, 5), helpers::uniform(rng, 0, 5),
                           helpers::uniform(rng, 0, 5), helpers::uniform(rng, 0, 5),
                           BeaconTerm::DutyCycle};
            ServedSet set{{rng.next_double(), rng.next_double()}};
            const double v = energy(set, e, rng.next_double(), rng.next_double(), timing,
                                    rng.next_double());
            CHECK(v >= e.switch_cost);
        }
    }
}

TEST_CASE("utility edge values") {
    // zero fee, no beaconing, empty served set: only standby is lost
    auto cfg = helpers::make_config(4.0, 50, 0.0, 10.0, {1, 1}, {0.8, 0.8},
                                    {0.1, 0.1, 0.1, 0.25, BeaconTerm::DutyCycle}, {});
    StrategyProfile p{Strategy{0.0, 0.0}, Strategy{0.5, 3.0}};
    CHECK(utility(p, cfg, 0) == -0.25);

    // zero coverage: no revenue, energy only
    auto cfg2 = helpers::make_config(4.0, 50, 0.0, 10.0, {1, 1}, {0.0, 0.8});
    StrategyProfile q{Strategy{0.5, 3.0}, Strategy{0.5, 3.0}};
    const double e = energy(served_set_of(cfg2), cfg2.uav[0].energy, 0.0, 0.5, cfg2.timing,
                            logit_share(3.0, 3.0, 4.0));
    CHECK(utility(q, cfg2, 0) == -e);
}

TEST_CASE("symmetric configurations yield equal utilities") {
    auto cfg = helpers::make_config();
    StrategyProfile p{Strategy{0.5, 3.0}, Strategy{0.5, 3.0}};
    CHECK(utility(p, cfg, 0) == utility(p, cfg, 1));

    // value from composing the component oracles
    const double race = oracles::encounter_reduced(1.0, 1.0, 100.0);
    const double asleep = oracles::slot_sum(1.0, 0.5, 1.0, 1.0, 100);
    const double beaconing = oracles::slot_sum(1.0, 0.0, 0.5, 1.0, 100);
    const double p_srv = (race + race * asleep) * beaconing * 0.8;
    const double psi_v = 0.75 * 0.1 + 0.5 * 0.1;
    const double expected = 0.5 * 50 * p_srv * 3.0 - (psi_v * p_srv + 0.1 * 0.5 + 0.1);
    CHECK(utility(p, cfg, 0) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("permuting operators swaps utilities exactly") {
    auto cfg = helpers::make_config(4.0, 50, 0.0, 10.0, {1.4, 0.7}, {0.6, 0.9},
                                    {0.2, 0.3, 0.4, 0.05, BeaconTerm::DutyCycle});
    auto swapped = cfg;
    std::swap(swapped.uav[0], swapped.uav[1]);
    std::swap(swapped.resolved_coverage[0], swapped.resolved_coverage[1]);

    StrategyProfile p{Strategy{0.3, 2.0}, Strategy{0.7, 6.0}};
    StrategyProfile pswap{p[1], p[0]};
    CHECK(utility(p, cfg, 0) == utility(pswap, swapped, 1));
    CHECK(utility(p, cfg, 1) == utility(pswap, swapped, 0));
}

TEST_CASE("revenue vanishes only with zero fee or zero service") {
    auto cfg = helpers::make_config();
    StrategyProfile p{Strategy{0.5, 0.0}, Strategy{0.5, 3.0}};
    const double e = energy(served_set_of(cfg), cfg.uav[0].energy, service_prob(p, cfg, 0), 0.5,
                            cfg.timing, logit_share(0.0, 3.0, 4.0));
    CHECK(utility(p, cfg, 0) == -e);  // fee 0, positive service, still no revenue
}
