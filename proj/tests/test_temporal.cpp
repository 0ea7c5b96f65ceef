#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "test_helpers.hpp"
#include "uavgame/errors.hpp"
#include "uavgame/temporal.hpp"

using namespace uavgame;

namespace {
const TimingConfig kT1L10{1.0, 10};
const TimingConfig kT1L100{1.0, 100};
}  // namespace

TEST_CASE("beacon probability edge values") {
    CHECK(beacon_prob(1.0, 0.0, kT1L100) == 0.0);
    // always-on beaconing reduces to P(first encounter <= m)
    CHECK(beacon_prob(1.0, 1.0, kT1L100) == doctest::Approx(-std::expm1(-100.0)).epsilon(1e-14));
    CHECK(beacon_prob(2.5, 1.0, kT1L10) ==
          doctest::Approx(-std::expm1(-25.0)).epsilon(1e-14));
}

TEST_CASE("beacon probability matches the slot-sum oracle") {
    const double v = beacon_prob(0.5, 0.3, kT1L10);
    CHECK(v == doctest::Approx(0.35162455402917475).epsilon(1e-13));
    CHECK(std::abs(v - oracles::slot_sum(0.5, 0.0, 0.3, 1.0, 10)) < 1e-10);
}

TEST_CASE("sleep probability edge values and oracle") {
    CHECK(sleep_prob(1.3, 1.0, kT1L10) == 0.0);
    CHECK(sleep_prob(1.3, 0.0, kT1L10) ==
          doctest::Approx(-std::expm1(-13.0)).epsilon(1e-14));
    const double v = sleep_prob(0.5, 0.3, kT1L10);
    CHECK(std::abs(v - oracles::slot_sum(0.5, 0.3, 1.0, 1.0, 10)) < 1e-10);
}

TEST_CASE("factored forms agree with the literal reference expressions") {
    SplitMix64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const double lambda = helpers::uniform(rng, 0.05, 3.0);
        const double T = helpers::uniform(rng, 0.25, 2.0);
        const int l = 1 + static_cast<int>(rng.next() % 60);
        const double tau = helpers::uniform(rng, 0.0, T);
        const TimingConfig timing{T, l};
        CHECK(beacon_prob(lambda, tau, timing) ==
              doctest::Approx(oracles::beacon_literal(lambda, tau, T, l)).epsilon(1e-10));
        CHECK(sleep_prob(lambda, tau, timing) ==
              doctest::Approx(oracles::sleep_literal(lambda, tau, T, l)).epsilon(1e-10));
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(beacon_prob(1.0, -0.1, kT1L10), DomainError);
    CHECK_THROWS_AS(beacon_prob(1.0, 1.5, kT1L10), DomainError);
    CHECK_THROWS_AS(beacon_prob(0.0, 0.5, kT1L10), DomainError);
    CHECK_THROWS_AS(sleep_prob(-1.0, 0.5, kT1L10), DomainError);
}

TEST_CASE("partition identity: beacon + sleep tile the window") {
    SplitMix64 rng(12);
    for (int i = 0; i < 1000; ++i) {
        const double lambda = helpers::uniform(rng, 0.01, 4.0);
        const double T = helpers::uniform(rng, 0.25, 2.0);
        const int l = 1 + static_cast<int>(rng.next() % 100);
        const double tau = helpers::uniform(rng, 0.0, T);
        const TimingConfig timing{T, l};
        const double total = beacon_prob(lambda, tau, timing) + sleep_prob(lambda, tau, timing);
        CHECK(std::abs(total + std::expm1(-lambda * timing.window())) < 1e-12);
    }
}

TEST_CASE("beacon strictly increasing, sleep nonincreasing in tau") {
    SplitMix64 rng(13);
    for (int i = 0; i < 50; ++i) {
        const double lambda = helpers::uniform(rng, 0.05, 3.0);
        double prev_b = -1.0, prev_s = 2.0;
        for (int k = 1; k < 40; ++k) {
            const double tau = k / 40.0;
            const double b = beacon_prob(lambda, tau, kT1L10);
            const double s = sleep_prob(lambda, tau, kT1L10);
            CHECK(b > prev_b);
            CHECK(s <= prev_s);
            prev_b = b;
            prev_s = s;
        }
    }
}

TEST_CASE("tiny rates stay finite and match the series expansion") {
    SplitMix64 rng(14);
    for (int i = 0; i < 200; ++i) {
        const double lambda = helpers::uniform(rng, 1e-14, 1e-8);
        const double T = helpers::uniform(rng, 0.5, 1.5);
        const int l = 1 + static_cast<int>(rng.next() % 100);
        const double tau = helpers::uniform(rng, 1e-3, T);
        const TimingConfig timing{T, l};
        const double b = beacon_prob(lambda, tau, timing);
        const double s = sleep_prob(lambda, tau, timing);
        CHECK(std::isfinite(b));
        CHECK(std::isfinite(s));
        CHECK(b == doctest::Approx(oracles::beacon_series(lambda, tau, T, l)).epsilon(1e-6));
        if (tau < T) {
            CHECK(s == doctest::Approx(oracles::sleep_series(lambda, tau, T, l)).epsilon(1e-6));
        }
    }
}

TEST_CASE("encounter race basics") {
    // degenerate window, test-fixture bypass
    const auto degenerate = EncounterPair::unchecked(1.3, 0.7, 0.0);
    CHECK(first_encounter_prob(degenerate, EncounterOrder::IFirst) == 0.0);

    // symmetric rates over a long window split the race evenly
    const EncounterPair sym(1.0, 1.0, 1000.0);
    CHECK(first_encounter_prob(sym, EncounterOrder::IFirst) ==
          doctest::Approx(0.5).epsilon(1e-12));

    // checked constructor rejects degenerate inputs
    CHECK_THROWS_AS(EncounterPair(1.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(EncounterPair(0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("swapping rates and the order flag leaves the race unchanged") {
    SplitMix64 rng(15);
    for (int i = 0; i < 200; ++i) {
        const double li = helpers::uniform(rng, 0.05, 3.0);
        const double lj = helpers::uniform(rng, 0.05, 3.0);
        const double m = helpers::uniform(rng, 0.1, 50.0);
        const EncounterPair a(li, lj, m);
        const EncounterPair b(lj, li, m);
        CHECK(first_encounter_prob(a, EncounterOrder::IFirst) ==
              first_encounter_prob(b, EncounterOrder::JFirst));
    }
}

TEST_CASE("encounter race against quadrature oracles") {
    const EncounterPair pair(1.0, 2.0, 3.0);
    const double v = first_encounter_prob(pair, EncounterOrder::IFirst);
    CHECK(std::abs(v - oracles::encounter_2d(1.0, 2.0, 3.0)) < 1e-8);
    CHECK(std::abs(v - oracles::encounter_reduced(1.0, 2.0, 3.0)) < 1e-10);
    const double w = first_encounter_prob(pair, EncounterOrder::JFirst);
    CHECK(std::abs(w - oracles::encounter_reduced(2.0, 1.0, 3.0)) < 1e-10);
}

TEST_CASE("race total identity") {
    SplitMix64 rng(16);
    for (int i = 0; i < 500; ++i) {
        const double li = helpers::uniform(rng, 0.05, 3.0);
        const double lj = helpers::uniform(rng, 0.05, 3.0);
        const double m = helpers::uniform(rng, 0.1, 40.0);
        const EncounterPair pair(li, lj, m);
        const double total = first_encounter_prob(pair, EncounterOrder::IFirst) +
                             first_encounter_prob(pair, EncounterOrder::JFirst);
        const double expected = std::expm1(-li * m) * std::expm1(-lj * m);
        CHECK(std::abs(total - expected) < 1e-10);
    }
}

TEST_CASE("service probability edge cases") {
    auto cfg = helpers::make_config();
    StrategyProfile p{Strategy{0.0, 3.0}, Strategy{0.5, 3.0}};
    CHECK(service_prob(p, cfg, 0) == 0.0);

    auto cfg_nocov = helpers::make_config(4.0, 50, 0.0, 10.0, {1.0, 1.0}, {0.0, 0.8});
    StrategyProfile q{Strategy{0.5, 3.0}, Strategy{0.5, 3.0}};
    CHECK(service_prob(q, cfg_nocov, 0) == 0.0);
    CHECK(service_prob(q, cfg_nocov, 1) > 0.0);
}

TEST_CASE("symmetric profiles give both operators the same service probability") {
    auto cfg = helpers::make_config();
    StrategyProfile p{Strategy{0.5, 3.0}, Strategy{0.5, 3.0}};
    const double s0 = service_prob(p, cfg, 0);
    const double s1 = service_prob(p, cfg, 1);
    CHECK(s0 == s1);

    // compose the three component oracles
    const double race = oracles::encounter_reduced(1.0, 1.0, 100.0);
    const double asleep = oracles::slot_sum(1.0, 0.5, 1.0, 1.0, 100);
    const double beaconing = oracles::slot_sum(1.0, 0.0, 0.5, 1.0, 100);
    const double expected = (race + race * asleep) * beaconing * 0.8;
    CHECK(s0 == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("service probability monotone in both beacon durations") {
    auto cfg = helpers::make_config();
    double prev_own = -1.0;
    for (int k = 0; k <= 20; ++k) {
        StrategyProfile p{Strategy{k / 20.0, 3.0}, Strategy{0.5, 3.0}};
        const double s = service_prob(p, cfg, 0);
        CHECK(s >= prev_own);
        prev_own = s;
    }
    double prev_rival = 2.0;
    for (int k = 0; k <= 20; ++k) {
        StrategyProfile p{Strategy{0.5, 3.0}, Strategy{k / 20.0, 3.0}};
        const double s = service_prob(p, cfg, 0);
        CHECK(s <= prev_rival);
        prev_rival = s;
    }
}
