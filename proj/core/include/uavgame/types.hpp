#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace uavgame {

/// Slotted beaconing schedule: a cycle of period T repeated l times, giving
/// the contact window m = l*T. All durations share one arbitrary time unit.
struct TimingConfig {
    double slot_period = 1.0;  // T > 0
    int num_slots = 1;         // l >= 1
    double window() const { return static_cast<double>(num_slots) * slot_period; }
};

/// Line-of-sight probability model for the air-to-ground link, as a function
/// of ground distance r and UAV altitude. Two variants: a constant
/// probability, and the standard elevation-angle sigmoid with environment
/// parameters (a, b).
struct LosConstant {
    double p = 1.0;  // in [0, 1]
};
struct LosElevationSigmoid {
    double a = 0;  // > 0
    double b = 0;  // > 0
};
using LosModel = std::variant<LosConstant, LosElevationSigmoid>;

/// Physical-layer constants used to compute a coverage probability.
/// `noise_power` is the receiver noise; interference is not modelled.
struct RadioParams {
    double tx_power = 0;           // transmit power, watts, > 0
    double noise_power = 0;        // watts, > 0
    double sinr_threshold = 0;     // detection threshold, dimensionless, > 0
    double pathloss_exponent = 0;  // > 0
    double altitude = 0;           // meters, > 0
    double cell_radius = 0;        // meters, > 0
    LosModel los_model = LosConstant{1.0};
};

/// Coverage is either given directly as a probability (the common setting in
/// sweep experiments) or computed from radio parameters.
struct CoverageDirect {
    double p_cov = 0;  // in [0, 1]
};
using CoverageSpec = std::variant<CoverageDirect, RadioParams>;

/// How the per-slot beaconing energy enters the dissipation model:
/// proportional to the beaconing duty cycle tau/T (default), or scaled by
/// the fee-driven market share (the alternative literal reading).
enum class BeaconTerm { DutyCycle, LiteralShare };

struct EnergyParams {
    double beacon_cost = 0;  // >= 0, per slot at full duty
    double rx_cost = 0;      // >= 0, per successful contact
    double ack_cost = 0;     // >= 0, per acknowledged transmission
    double switch_cost = 0;  // >= 0, standby cost of the transceiver
    BeaconTerm beacon_term = BeaconTerm::DutyCycle;
};

/// One operator's fixed characteristics.
struct UavParams {
    double encounter_rate = 0;  // exponential first-contact rate, > 0
    CoverageSpec coverage = CoverageDirect{0};
    EnergyParams energy;
};

/// Market-side constants: logit temperature, subscriber population, fee
/// bounds and the transmission probabilities of the served ground devices.
struct MarketConfig {
    double temperature = 1.0;         // mu > 0
    int population_size = 0;          // N >= 0
    double fee_min = 0.0;             // >= 0
    double fee_max = 1.0;             // > fee_min
    std::vector<double> user_tx_probs;  // each in [0, 1]
};

/// One operator's decision pair: beacon duration within [0, T] and service
/// fee within [fee_min, fee_max].
struct Strategy {
    double beacon_duration = 0;
    double fee = 0;
};
using StrategyProfile = std::array<Strategy, 2>;

/// A complete two-operator game instance. Immutable after validation and
/// safe to share across threads.
struct GameConfig {
    TimingConfig timing;
    MarketConfig market;
    std::array<UavParams, 2> uav;
    /// Optional reference strategies (used as solver inits and as the frozen
    /// coordinates of single-axis surveys).
    std::optional<StrategyProfile> reference;
    /// Coverage probabilities resolved at validation time (quadrature runs
    /// once, not per utility evaluation).
    std::array<double, 2> resolved_coverage{0.0, 0.0};
};

/// Rates and window of the two-operator first-contact race.
struct EncounterPair {
    double lambda_i = 0;
    double lambda_j = 0;
    double window = 0;

    EncounterPair(double li, double lj, double m);
    /// Test-fixture constructor: skips the positivity checks so degenerate
    /// windows (m = 0) can be probed.
    static EncounterPair unchecked(double li, double lj, double m);

  private:
    EncounterPair() = default;
};

enum class EncounterOrder { IFirst, JFirst };

}  // namespace uavgame
