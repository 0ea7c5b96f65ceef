#pragma once

#include <vector>

#include "uavgame/types.hpp"

namespace uavgame {

/// Transmission probabilities of the ground devices inside an operator's
/// service range. Both operators share the same set (one common center).
struct ServedSet {
    std::vector<double> tx_probs;

    std::size_t size() const { return tx_probs.size(); }
    bool empty() const { return tx_probs.empty(); }
};

/**
 * Logit market share of the operator charging `own_fee` against a rival at
 * `rival_fee`:  exp(-f_i/mu) / (exp(-f_i/mu) + exp(-f_j/mu)).
 * Strictly in (0, 1), strictly decreasing in the own fee; the two operators'
 * shares sum to 1. Larger temperatures flatten the response toward 1/2.
 */
double logit_share(double own_fee, double rival_fee, double temperature);

/// Normalized throughput of user u: p_u * prod_{k != u} (1 - p_k), the
/// probability that u transmits while every other served user stays silent.
double normalized_throughput(const ServedSet& set, std::size_t u);

/**
 * Energy dissipated by one operator per window:
 *   [(1 - prod(1-p_u)) rx_cost + sum_u throughput_u * ack_cost] * p_srv
 *   + beacon term + switch_cost.
 * The beacon term is beacon_cost * tau/T under BeaconTerm::DutyCycle and
 * beacon_cost * share under BeaconTerm::LiteralShare.
 */
double energy(const ServedSet& set, const EnergyParams& params, double p_srv, double tau,
              const TimingConfig& timing, double share);

/// Operator utility: share * N * p_srv * fee - energy.
double utility(const StrategyProfile& profile, const GameConfig& config, int who);

/// The served set declared by a game config.
ServedSet served_set_of(const GameConfig& config);

}  // namespace uavgame
