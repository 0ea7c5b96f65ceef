#include "uavgame/market.hpp"

#include <cmath>
#include <string>

#include "uavgame/errors.hpp"
#include "uavgame/temporal.hpp"

namespace uavgame {

double logit_share(double own_fee, double rival_fee, double temperature) {
    // sigma((f_j - f_i)/mu), evaluated with a non-positive exponent.
    const double z = (rival_fee - own_fee) / temperature;
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double normalized_throughput(const ServedSet& set, std::size_t u) {
    if (u >= set.tx_probs.size()) {
        throw IndexOutOfRange("user index " + std::to_string(u) + " of " +
                              std::to_string(set.tx_probs.size()));
    }
    double value = set.tx_probs[u];
    for (std::size_t k = 0; k < set.tx_probs.size(); ++k) {
        if (k != u) value *= 1.0 - set.tx_probs[k];
    }
    return value;
}

namespace {

// Reception + acknowledgment energy spent per successful contact.
double contact_energy(const ServedSet& set, const EnergyParams& params) {
    double all_silent = 1.0;
    for (double p : set.tx_probs) all_silent *= 1.0 - p;
    double ack_sum = 0.0;
    for (std::size_t u = 0; u < set.tx_probs.size(); ++u) {
        ack_sum += normalized_throughput(set, u);
    }
    return (1.0 - all_silent) * params.rx_cost + ack_sum * params.ack_cost;
}

}  // namespace

double energy(const ServedSet& set, const EnergyParams& params, double p_srv, double tau,
              const TimingConfig& timing, double share) {
    const double beacon = params.beacon_term == BeaconTerm::DutyCycle
                              ? params.beacon_cost * tau / timing.slot_period
                              : params.beacon_cost * share;
    return contact_energy(set, params) * p_srv + beacon + params.switch_cost;
}

double utility(const StrategyProfile& profile, const GameConfig& config, int who) {
    if (who != 0 && who != 1) throw IndexOutOfRange("operator index must be 0 or 1");
    const auto& own = profile[static_cast<std::size_t>(who)];
    const auto& rival = profile[static_cast<std::size_t>(1 - who)];
    const double share = logit_share(own.fee, rival.fee, config.market.temperature);
    const double p_srv = service_prob(profile, config, who);
    const ServedSet set = served_set_of(config);
    const double dissipated = energy(set, config.uav[static_cast<std::size_t>(who)].energy,
                                     p_srv, own.beacon_duration, config.timing, share);
    return share * config.market.population_size * p_srv * own.fee - dissipated;
}

ServedSet served_set_of(const GameConfig& config) {
    return ServedSet{config.market.user_tx_probs};
}

}  // namespace uavgame
