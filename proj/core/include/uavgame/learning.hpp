#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uavgame/types.hpp"

namespace uavgame {

enum class UpdateMode { Simultaneous, Sequential };
enum class InitMode { Random, Midpoint };

/// Knobs of the best-response iteration. The inner argmax is a coarse grid
/// scan refined by shrinking windows; fp_tolerance is compared against the
/// box-normalized step between successive profiles.
struct LearningConfig {
    int max_iterations = 100;
    UpdateMode update_mode = UpdateMode::Simultaneous;
    int grid_resolution = 64;   // >= 8, points per axis
    int refine_iterations = 3;  // local refinement rounds, window shrinks 4x each
    double fp_tolerance = 5e-4;
    int restarts = 1;
    std::uint64_t seed = 1;
    InitMode init_mode = InitMode::Random;
};

/// Normalized diagonal of one cell of the fully refined argmax grid; the
/// resolution floor of every equilibrium coordinate.
double refined_cell_diameter(const LearningConfig& lc);

struct TraceRow {
    int round = 0;
    StrategyProfile profile;
    std::array<double, 2> utilities{0, 0};
    double residual = 0;
};

struct Trace {
    std::vector<TraceRow> iterations;
    std::optional<int> converged_at;
    double final_residual = 0;
};

struct EquilibriumReport {
    StrategyProfile profile;
    Trace trace;
    double br_residual = 0;
    /// Max pairwise normalized distance among converged restart profiles;
    /// present only when restarts > 1.
    std::optional<double> restart_agreement;
    bool converged = false;
};

/// Utility maximizer of one operator over its own (tau, fee) box against a
/// fixed rival strategy. Grid scan plus refine_iterations local refinements;
/// exact ties break toward the lowest tau, then the lowest fee.
Strategy best_response(int who, const Strategy& rival, const GameConfig& config,
                       const LearningConfig& lc);

/// Single-axis variants used by the monotonicity diagnostics: optimize one
/// coordinate with the other frozen.
double best_response_tau(int who, double rival_tau, const std::array<double, 2>& fees,
                         const GameConfig& config, const LearningConfig& lc);
double best_response_fee(int who, double rival_fee, const std::array<double, 2>& taus,
                         const GameConfig& config, const LearningConfig& lc);

/// Iterated best response from `init` until the normalized step falls under
/// fp_tolerance or max_iterations is reached. With restarts > 1, additional
/// runs from seeded random inits probe uniqueness; their spread is reported
/// as restart_agreement.
EquilibriumReport run_dynamics(const GameConfig& config, const LearningConfig& lc,
                               const StrategyProfile& init);

/// Uniform random profile from the strategy box.
StrategyProfile random_profile(const GameConfig& config, std::uint64_t seed);
StrategyProfile midpoint_profile(const GameConfig& config);

enum class SweepAxis { Temperature, Coverage, Population, EncounterRate };

struct SweepPoint {
    double value = 0;
    EquilibriumReport report;
};

/// One equilibrium per swept value. Scalar axes (temperature, population)
/// overwrite the config field; per-operator axes (coverage, encounter rate)
/// anchor operator 0 at the swept value and scale operator 1 to preserve the
/// template's ratio. Points run independently and deterministically.
std::vector<SweepPoint> sweep_equilibria(const GameConfig& config_template, SweepAxis axis,
                                         const std::vector<double>& values,
                                         const LearningConfig& lc);

GameConfig apply_sweep_value(const GameConfig& config_template, SweepAxis axis, double value);

/// Trace serialization: round, tau_1, f_1, tau_2, f_2, u_1, u_2, residual.
std::string trace_csv(const Trace& trace, const std::string& provenance);

}  // namespace uavgame
