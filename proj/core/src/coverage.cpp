#include "uavgame/coverage.hpp"

#include <cmath>
#include <numbers>

#include "uavgame/quadrature.hpp"

namespace uavgame {

double snr_radius(const RadioParams& radio) {
    const double ratio = radio.tx_power / (radio.sinr_threshold * radio.noise_power);
    return std::min(std::pow(ratio, 1.0 / radio.pathloss_exponent), radio.cell_radius);
}

double los_probability(const LosModel& model, double r, double altitude) {
    if (const auto* c = std::get_if<LosConstant>(&model)) {
        return c->p;
    }
    const auto& s = std::get<LosElevationSigmoid>(model);
    const double theta_deg =
        r == 0.0 ? 90.0 : std::atan(altitude / r) * 180.0 / std::numbers::pi;
    return 1.0 / (1.0 + s.a * std::exp(-s.b * (theta_deg - s.a)));
}

double coverage_prob(const RadioParams& radio) {
    const double upper = snr_radius(radio);
    const double r2 = radio.cell_radius * radio.cell_radius;
    const auto integrand = [&](double r) {
        return los_probability(radio.los_model, r, radio.altitude) * 2.0 * r / r2;
    };
    return integrate(integrand, 0.0, upper, {1e-10, 1 << 18});
}

}  // namespace uavgame
