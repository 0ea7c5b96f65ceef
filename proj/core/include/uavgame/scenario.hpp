#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uavgame/market.hpp"

namespace uavgame {

struct PolarPoint {
    double r = 0;    // meters, <= disc radius
    double phi = 0;  // radians in [0, 2pi)
};

/// A sampled deployment of ground devices on a disc, with the seed that
/// produced it.
struct DiscScenario {
    double radius = 0;
    double user_density = 0;  // users per square meter
    std::vector<PolarPoint> users;
    std::uint64_t seed = 0;
};

/**
 * Homogeneous Poisson placement on the disc: the user count is
 * Poisson(density * pi * radius^2) and positions are uniform (radius via
 * R*sqrt(U), angle uniform). Same seed, same scenario, bit for bit.
 */
DiscScenario sample_ppp(double radius, double density, std::uint64_t seed);

/// Devices within `service_radius` of the disc center (where the UAVs sit),
/// each carrying the shared transmission probability.
ServedSet served_set(const DiscScenario& scenario, double service_radius,
                     double shared_tx_prob);

/// CSV export: index, r, phi.
std::string scenario_csv(const DiscScenario& scenario);

}  // namespace uavgame
