#include "uavgame/scenario.hpp"

#include <cmath>
#include <numbers>

#include "uavgame/csvio.hpp"
#include "uavgame/errors.hpp"
#include "uavgame/rng.hpp"

namespace uavgame {

namespace {

// Exact inverse-method Poisson draw: count unit-rate arrivals until the
// accumulated exponential waiting time exceeds the mean.
std::size_t poisson_count(SplitMix64& rng, double mean) {
    if (mean <= 0.0) return 0;
    std::size_t k = 0;
    double acc = 0.0;
    while (true) {
        double u = rng.next_double();
        if (u <= 0.0) u = 0x1.0p-53;
        acc += -std::log(u);
        if (acc >= mean) return k;
        ++k;
    }
}

}  // namespace

DiscScenario sample_ppp(double radius, double density, std::uint64_t seed) {
    if (!(radius > 0)) throw DomainError("disc radius must be positive");
    if (!(density >= 0)) throw DomainError("user density must be nonnegative");

    DiscScenario sc;
    sc.radius = radius;
    sc.user_density = density;
    sc.seed = seed;

    SplitMix64 rng(seed);
    const double mean = density * std::numbers::pi * radius * radius;
    const std::size_t count = poisson_count(rng, mean);
    sc.users.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double r = radius * std::sqrt(rng.next_double());
        const double phi = 2.0 * std::numbers::pi * rng.next_double();
        sc.users.push_back({r, phi});
    }
    return sc;
}

ServedSet served_set(const DiscScenario& scenario, double service_radius,
                     double shared_tx_prob) {
    if (!(service_radius >= 0)) throw DomainError("service radius must be nonnegative");
    if (!(shared_tx_prob >= 0.0 && shared_tx_prob <= 1.0)) {
        throw DomainError("shared transmission probability must be in [0, 1]");
    }
    ServedSet set;
    for (const auto& u : scenario.users) {
        if (u.r <= service_radius) set.tx_probs.push_back(shared_tx_prob);
    }
    return set;
}

std::string scenario_csv(const DiscScenario& scenario) {
    CsvWriter csv("seed=" + std::to_string(scenario.seed) +
                      " radius=" + format_double(scenario.radius) +
                      " density=" + format_double(scenario.user_density),
                  {"index", "r", "phi"});
    for (std::size_t i = 0; i < scenario.users.size(); ++i) {
        csv.add_row({std::to_string(i), CsvWriter::cell(scenario.users[i].r),
                     CsvWriter::cell(scenario.users[i].phi)});
    }
    return csv.str();
}

}  // namespace uavgame
