#pragma once

#include "uavgame/types.hpp"

namespace uavgame {

/**
 * Probability that the first encounter (exponential with rate `lambda`)
 * lands inside one of the beaconing intervals [sT, sT + tau], s = 0..l-1,
 * i.e. within the window [0, m]. Closed form
 *
 *     (1 - e^{-lambda tau}) (1 - e^{-lambda m}) / (1 - e^{-lambda T}),
 *
 * evaluated via expm1 so it stays accurate down to lambda -> 0.
 * Nondecreasing in tau; equals 0 at tau = 0 and 1 - e^{-lambda m} at tau = T.
 *
 * Throws DomainError when tau is outside [0, T] or lambda <= 0.
 */
double beacon_prob(double lambda, double tau, const TimingConfig& timing);

/**
 * Probability that the first encounter lands inside one of the idle
 * intervals [sT + tau, (s+1)T]. Complements beacon_prob over [0, m]:
 * beacon_prob + sleep_prob = 1 - e^{-lambda m}. Nonincreasing in tau.
 */
double sleep_prob(double lambda, double tau, const TimingConfig& timing);

/**
 * Probability that, of two independent exponential first-contact times with
 * rates (lambda_i, lambda_j), the selected one comes first and both fall
 * inside the window m. For order IFirst this is P(T_i <= T_j <= m);
 * JFirst is the mirror image.
 */
double first_encounter_prob(const EncounterPair& pair, EncounterOrder order);

/**
 * Successful contact probability for operator `who` under a strategy
 * profile: the operator must beacon at its first encounter, cover the
 * destination, and either win the race outright or find the rival asleep.
 * Nondecreasing in own beacon duration, nonincreasing in the rival's.
 */
double service_prob(const StrategyProfile& profile, const GameConfig& config, int who);

}  // namespace uavgame
