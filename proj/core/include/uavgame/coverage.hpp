#pragma once

#include "uavgame/types.hpp"

namespace uavgame {

/// Radius below which a ground user clears the detection threshold:
/// min((tx_power / (threshold * noise))^(1/alpha), cell_radius).
double snr_radius(const RadioParams& radio);

/// Line-of-sight probability at ground distance r from the point under the
/// UAV. The sigmoid variant evaluates 1 / (1 + a exp(-b (theta_deg - a)))
/// with theta_deg the elevation angle in degrees (90 when r = 0);
/// nonincreasing in r.
double los_probability(const LosModel& model, double r, double altitude);

/**
 * Coverage probability for a user placed uniformly on the disc of radius R:
 * the LoS-weighted radial integral of the density 2r/R^2 from 0 up to
 * snr_radius, by adaptive quadrature (abs tol 1e-10, cap 2^18 subdivisions).
 * With a constant LoS probability p this reduces to p*(snr_radius/R)^2.
 */
double coverage_prob(const RadioParams& radio);

}  // namespace uavgame
