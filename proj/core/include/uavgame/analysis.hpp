#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uavgame/market.hpp"
#include "uavgame/types.hpp"

namespace uavgame {

enum class GameAxis { Availability, Pricing };

/// Per-contact reception-plus-acknowledgment energy aggregate; the energy
/// coefficient that multiplies the service probability.
struct Psi {
    double value = 0;
};

Psi psi(const ServedSet& set, const EnergyParams& params);

/// First and second derivatives of the logit share with respect to the own
/// fee. With s the share, these are -s(1-s)/mu and s(1-s)(1-2s)/mu^2; the
/// second vanishes exactly at equal fees.
struct ShareDerivatives {
    double first = 0;
    double second = 0;
};

ShareDerivatives price_share_derivatives(double own_fee, double rival_fee, double temperature);

/// Own second derivative of utility in the own fee:
/// N * p_srv * (2 s' + f s''). Nonpositive whenever f/mu stays below the
/// concavity threshold (which holds on the default experiment box).
double utility_second_derivative_price(const StrategyProfile& profile, const GameConfig& config,
                                       int who);

/// Mixed second derivative of utility in (own fee, rival fee), split into a
/// positive factor N * p_srv * s(1-s)/mu and the sign-carrying bracket
/// 1 - (f_i/mu)(1 - 2s). Supermodularity of the pricing game is exactly
/// bracket >= 0; the bracket goes negative when the own fee is large
/// relative to mu and far above the rival's.
struct PricingMixed {
    double value = 0;
    double factor = 0;
    double bracket = 0;
};

PricingMixed utility_mixed_derivative_price(const StrategyProfile& profile,
                                            const GameConfig& config, int who);

/// 2x2 matrix of second partials of one operator's utility along a game
/// axis, by central differences with Richardson refinement. Index 0 is the
/// own coordinate, 1 the rival's. Throws BoundaryPoint when the profile sits
/// too close to the strategy box for the stencil.
struct Hessian2 {
    double own = 0;    // d2U/dx_i^2
    double mixed = 0;  // d2U/dx_j dx_i
    double rival = 0;  // d2U/dx_j^2
};

Hessian2 numeric_hessian(GameAxis axis, const StrategyProfile& profile,
                         const GameConfig& config, int who);

/// Cross-check of the availability-axis factorization: the own second
/// partial of utility divided by (N f s - psi) and by the numeric curvature
/// of the service probability must be 1 up to FD noise. Throws FactorNearZero
/// when the net-gain factor is too small for the ratio to mean anything.
double availability_factor_ratio(const StrategyProfile& profile, const GameConfig& config,
                                 int who);

struct GridSpec {
    int resolution = 25;     // lattice points per axis
    double margin = 0.05;    // fraction of the box clipped off each boundary
    /// Frozen coordinates for the off-axis pair; defaults to the config's
    /// reference strategies, else the box midpoint.
    std::optional<StrategyProfile> reference;
};

/// One surveyed lattice point (strategies of both operators plus the
/// derivative values for one operator).
struct LatticeSample {
    double x_own = 0;
    double x_rival = 0;
    int who = 0;
    double own_second = 0;
    double mixed = 0;
    double margin = 0;        // -own_second - |mixed|
    double demand_margin = 0; // N f s - psi (availability precondition)
    double bracket = 0;       // pricing only: sign bracket of the mixed form
};

enum class ModularityVerdict { Submodular, Supermodular, Indeterminate };

struct ModularityReport {
    GameAxis game_axis = GameAxis::Availability;
    std::vector<LatticeSample> samples;
    int violation_count = 0;  // against the expected direction for the axis
    ModularityVerdict verdict = ModularityVerdict::Indeterminate;
    double min_mixed = 0;
    double max_mixed = 0;
    int demand_margin_violations = 0;  // lattice points with N f s < psi
};

struct SolvabilityReport {
    GameAxis game_axis = GameAxis::Availability;
    std::vector<LatticeSample> samples;
    bool all_satisfied = false;  // every margin >= -1e-9
    double worst_margin = 0;
};

/// Sign survey of the mixed partials over an interior lattice.
/// Availability uses numeric differences of the full utility; pricing uses
/// the closed forms above. Both operators are sampled at every point.
ModularityReport check_modularity(GameAxis axis, const GameConfig& config,
                                  const GridSpec& grid = {});

/// Survey of the dominance-solvability margin -d2U/dx_i^2 - |d2U/dx_j dx_i|.
SolvabilityReport check_solvability(GameAxis axis, const GameConfig& config,
                                    const GridSpec& grid = {});

std::string to_string(ModularityVerdict v);
std::string to_string(GameAxis a);

/// Report serializations: one row per lattice sample.
std::string modularity_csv(const ModularityReport& report, const std::string& provenance);
std::string solvability_csv(const SolvabilityReport& report, const std::string& provenance);

}  // namespace uavgame
