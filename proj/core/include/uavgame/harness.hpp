#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "uavgame/analysis.hpp"
#include "uavgame/learning.hpp"
#include "uavgame/types.hpp"

namespace uavgame::harness {

/// Parse a sweep value list: either "start:end:step" (inclusive) or a
/// comma-separated list. Throws DomainError on malformed input.
std::vector<double> parse_values(const std::string& text);

SweepAxis parse_axis(const std::string& name);

/// Run the dynamics on a config file's game and write trace.csv,
/// equilibrium.json and trajectories.svg under out_dir.
/// Returns 0 on convergence, 3 otherwise (files are written either way).
struct SolveOutcome {
    int exit_code = 0;
    EquilibriumReport report;
    std::string trace_path;
    std::string summary_path;
    std::string svg_path;
};

SolveOutcome run_solve(const GameConfig& config, const LearningConfig& lc,
                       const StrategyProfile& init, const std::string& out_dir,
                       std::ostream& log);

/// Sweep an axis and write sweep.csv / sweep.svg. Per-point failures land in
/// the CSV with an empty converged_at; exit 0 when at least 90% of the
/// points converge, else 3.
struct SweepOutcome {
    int exit_code = 0;
    std::vector<SweepPoint> points;
    std::string csv_path;
    std::string svg_path;
};

SweepOutcome run_sweep(const GameConfig& config, SweepAxis axis,
                       const std::vector<double>& values, const LearningConfig& lc,
                       const std::string& out_dir, std::ostream& log);

/// Modularity + solvability surveys on both axes. Writes one CSV per report
/// and prints one summary line per check. Exit 1 when any verdict
/// contradicts the expected claims (availability submodular, pricing
/// supermodular, both axes solvable).
struct VerifyOutcome {
    int exit_code = 0;
    ModularityReport availability_modularity;
    ModularityReport pricing_modularity;
    SolvabilityReport availability_solvability;
    SolvabilityReport pricing_solvability;
};

VerifyOutcome run_verify(const GameConfig& config, const GridSpec& grid,
                         const std::string& out_dir, std::ostream& log);

/// One formula evaluation for the `probe` subcommand: the value, and when an
/// independent oracle exists and was requested, the oracle value too.
struct ProbeResult {
    double value = 0;
    std::optional<double> oracle;
};

ProbeResult probe_beacon(double lambda, double tau, const TimingConfig& timing,
                         bool with_oracle);
ProbeResult probe_sleep(double lambda, double tau, const TimingConfig& timing,
                        bool with_oracle);
ProbeResult probe_encounter(double lambda_i, double lambda_j, double m, EncounterOrder order,
                            bool with_oracle);
/// Coverage of the disc out to `upper_radius` under an explicit LoS model
/// (the --snr-radius-ratio probe path).
ProbeResult probe_coverage_ratio(const LosModel& los, double ratio, double cell_radius,
                                 double altitude, bool with_oracle);
ProbeResult probe_coverage_radio(const RadioParams& radio, bool with_oracle);
ProbeResult probe_share(double own_fee, double rival_fee, double mu);
ProbeResult probe_energy(const GameConfig& config, int who, double p_srv, double tau,
                         double share);
ProbeResult probe_service(const StrategyProfile& profile, const GameConfig& config, int who,
                          bool with_oracle);
ProbeResult probe_utility(const StrategyProfile& profile, const GameConfig& config, int who,
                          bool with_oracle);

std::string provenance_line(const GameConfig& config, std::uint64_t seed);

}  // namespace uavgame::harness
