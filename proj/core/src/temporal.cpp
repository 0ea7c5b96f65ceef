#include "uavgame/temporal.hpp"

#include <cmath>
#include <string>

#include "uavgame/errors.hpp"

namespace uavgame {

namespace {

void check_slot_args(double lambda, double tau, const TimingConfig& timing) {
    if (!(lambda > 0)) {
        throw DomainError("encounter rate must be positive, got " + std::to_string(lambda));
    }
    if (!(tau >= 0.0 && tau <= timing.slot_period)) {
        throw DomainError("beacon duration " + std::to_string(tau) +
                          " outside [0, T] with T = " + std::to_string(timing.slot_period));
    }
}

}  // namespace

double beacon_prob(double lambda, double tau, const TimingConfig& timing) {
    check_slot_args(lambda, tau, timing);
    const double m = timing.window();
    // (1-e^{-lt})(1-e^{-lm})/(1-e^{-lT}); each factor via expm1.
    return -std::expm1(-lambda * tau) * std::expm1(-lambda * m) /
           std::expm1(-lambda * timing.slot_period);
}

double sleep_prob(double lambda, double tau, const TimingConfig& timing) {
    check_slot_args(lambda, tau, timing);
    const double m = timing.window();
    // (e^{-lt} - e^{-lT})(1-e^{-lm})/(1-e^{-lT}); the leading difference is
    // formed from expm1 values so the constant terms cancel exactly.
    const double num = std::expm1(-lambda * tau) - std::expm1(-lambda * timing.slot_period);
    return num * std::expm1(-lambda * m) / std::expm1(-lambda * timing.slot_period);
}

EncounterPair::EncounterPair(double li, double lj, double m)
    : lambda_i(li), lambda_j(lj), window(m) {
    if (!(li > 0) || !(lj > 0)) throw DomainError("encounter rates must be positive");
    if (!(m > 0)) throw DomainError("encounter window must be positive");
}

EncounterPair EncounterPair::unchecked(double li, double lj, double m) {
    EncounterPair p;
    p.lambda_i = li;
    p.lambda_j = lj;
    p.window = m;
    return p;
}

double first_encounter_prob(const EncounterPair& pair, EncounterOrder order) {
    const double li = order == EncounterOrder::IFirst ? pair.lambda_i : pair.lambda_j;
    const double lj = order == EncounterOrder::IFirst ? pair.lambda_j : pair.lambda_i;
    const double m = pair.window;
    // P(T_first <= T_second <= m) with T_first ~ Exp(li), T_second ~ Exp(lj):
    //   (1 - e^{-lj m}) - lj/(li+lj) (1 - e^{-(li+lj) m})
    const double sum = li + lj;
    return -std::expm1(-lj * m) + lj / sum * std::expm1(-sum * m);
}

double service_prob(const StrategyProfile& profile, const GameConfig& config, int who) {
    if (who != 0 && who != 1) throw IndexOutOfRange("operator index must be 0 or 1");
    const int rival = 1 - who;
    const double li = config.uav[static_cast<std::size_t>(who)].encounter_rate;
    const double lj = config.uav[static_cast<std::size_t>(rival)].encounter_rate;
    const EncounterPair pair(li, lj, config.timing.window());

    const double win_race = first_encounter_prob(pair, EncounterOrder::IFirst);
    const double lose_race = first_encounter_prob(pair, EncounterOrder::JFirst);
    const double rival_asleep =
        sleep_prob(lj, profile[static_cast<std::size_t>(rival)].beacon_duration, config.timing);
    const double own_beaconing =
        beacon_prob(li, profile[static_cast<std::size_t>(who)].beacon_duration, config.timing);

    return (win_race + lose_race * rival_asleep) * own_beaconing *
           config.resolved_coverage[static_cast<std::size_t>(who)];
}

}  // namespace uavgame
