#include "uavgame/harness.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "uavgame/config.hpp"
#include "uavgame/coverage.hpp"
#include "uavgame/csvio.hpp"
#include "uavgame/errors.hpp"
#include "uavgame/market.hpp"
#include "uavgame/quadrature.hpp"
#include "uavgame/svg.hpp"
#include "uavgame/temporal.hpp"

namespace uavgame::harness {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<double> parse_values(const std::string& text) {
    std::vector<double> out;
    const auto colons = std::count(text.begin(), text.end(), ':');
    try {
        if (colons == 2) {
            const auto c1 = text.find(':');
            const auto c2 = text.find(':', c1 + 1);
            const double start = std::stod(text.substr(0, c1));
            const double end = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
            const double step = std::stod(text.substr(c2 + 1));
            if (!(step > 0) || end < start) {
                throw DomainError("range must satisfy step > 0 and end >= start: " + text);
            }
            const auto n = static_cast<long>(std::floor((end - start) / step + 1e-9));
            for (long k = 0; k <= n; ++k) out.push_back(start + step * static_cast<double>(k));
            return out;
        }
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) out.push_back(std::stod(item));
        }
    } catch (const std::invalid_argument&) {
        throw DomainError("cannot parse sweep values: " + text);
    } catch (const std::out_of_range&) {
        throw DomainError("sweep value out of range: " + text);
    }
    if (out.empty()) throw DomainError("empty sweep value list: " + text);
    return out;
}

SweepAxis parse_axis(const std::string& name) {
    if (name == "mu" || name == "temperature") return SweepAxis::Temperature;
    if (name == "pcov" || name == "coverage") return SweepAxis::Coverage;
    if (name == "population") return SweepAxis::Population;
    if (name == "lambda" || name == "encounter_rate") return SweepAxis::EncounterRate;
    throw DomainError("unknown sweep axis: " + name);
}

std::string provenance_line(const GameConfig& config, std::uint64_t seed) {
    return "config=" + config_hash(config) + " seed=" + std::to_string(seed);
}

namespace {

void write_text(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << body;
}

json strategy_json(const Strategy& s) {
    return json{{"beacon_duration", s.beacon_duration}, {"fee", s.fee}};
}

}  // namespace

SolveOutcome run_solve(const GameConfig& config, const LearningConfig& lc,
                       const StrategyProfile& init, const std::string& out_dir,
                       std::ostream& log) {
    fs::create_directories(out_dir);
    SolveOutcome outcome;
    outcome.report = run_dynamics(config, lc, init);
    const std::string prov = provenance_line(config, lc.seed);

    outcome.trace_path = (fs::path(out_dir) / "trace.csv").string();
    write_text(outcome.trace_path, trace_csv(outcome.report.trace, prov));

    json summary;
    summary["config_hash"] = config_hash(config);
    summary["seed"] = lc.seed;
    summary["profile"] =
        json::array({strategy_json(outcome.report.profile[0]), strategy_json(outcome.report.profile[1])});
    summary["converged"] = outcome.report.converged;
    if (outcome.report.trace.converged_at) {
        summary["converged_at"] = *outcome.report.trace.converged_at;
    }
    summary["final_residual"] = outcome.report.trace.final_residual;
    summary["br_residual"] = outcome.report.br_residual;
    if (outcome.report.restart_agreement) {
        summary["restart_agreement"] = *outcome.report.restart_agreement;
    }
    summary["refined_cell_diameter"] = refined_cell_diameter(lc);
    outcome.summary_path = (fs::path(out_dir) / "equilibrium.json").string();
    write_text(outcome.summary_path, summary.dump(2) + "\n");

    PlotPanel fee_panel{"service fee by round", "round", "fee", {}};
    PlotPanel tau_panel{"beacon duration by round", "round", "tau", {}};
    Series f1{"f_1", "#1f77b4", {}, {}}, f2{"f_2", "#d62728", {}, {}};
    Series t1{"tau_1", "#1f77b4", {}, {}}, t2{"tau_2", "#d62728", {}, {}};
    for (const auto& row : outcome.report.trace.iterations) {
        f1.x.push_back(row.round);
        f1.y.push_back(row.profile[0].fee);
        f2.x.push_back(row.round);
        f2.y.push_back(row.profile[1].fee);
        t1.x.push_back(row.round);
        t1.y.push_back(row.profile[0].beacon_duration);
        t2.x.push_back(row.round);
        t2.y.push_back(row.profile[1].beacon_duration);
    }
    fee_panel.series = {f1, f2};
    tau_panel.series = {t1, t2};
    outcome.svg_path = (fs::path(out_dir) / "trajectories.svg").string();
    write_text(outcome.svg_path, render_svg({fee_panel, tau_panel}, prov));

    log << (outcome.report.converged
                ? "converged at round " + std::to_string(*outcome.report.trace.converged_at)
                : "did not converge within " + std::to_string(lc.max_iterations) + " rounds")
        << ", profile: tau=(" << format_double(outcome.report.profile[0].beacon_duration) << ", "
        << format_double(outcome.report.profile[1].beacon_duration) << ") fee=("
        << format_double(outcome.report.profile[0].fee) << ", "
        << format_double(outcome.report.profile[1].fee) << ")\n";

    outcome.exit_code = outcome.report.converged ? 0 : 3;
    return outcome;
}

SweepOutcome run_sweep(const GameConfig& config, SweepAxis axis,
                       const std::vector<double>& values, const LearningConfig& lc,
                       const std::string& out_dir, std::ostream& log) {
    fs::create_directories(out_dir);
    SweepOutcome outcome;
    outcome.points = sweep_equilibria(config, axis, values, lc);
    const std::string prov = provenance_line(config, lc.seed);

    CsvWriter csv(prov, {"value", "tau_1", "f_1", "tau_2", "f_2", "converged_at"});
    std::size_t converged = 0;
    for (const auto& p : outcome.points) {
        const auto& r = p.report;
        if (r.converged) ++converged;
        csv.add_row({CsvWriter::cell(p.value), CsvWriter::cell(r.profile[0].beacon_duration),
                     CsvWriter::cell(r.profile[0].fee),
                     CsvWriter::cell(r.profile[1].beacon_duration),
                     CsvWriter::cell(r.profile[1].fee),
                     r.trace.converged_at ? std::to_string(*r.trace.converged_at)
                                          : std::string()});
    }
    outcome.csv_path = (fs::path(out_dir) / "sweep.csv").string();
    write_text(outcome.csv_path, csv.str());

    PlotPanel fee_panel{"equilibrium fee", "axis value", "fee", {}};
    PlotPanel tau_panel{"equilibrium beacon duration", "axis value", "tau", {}};
    Series f1{"f_1", "#1f77b4", {}, {}}, f2{"f_2", "#d62728", {}, {}};
    Series t1{"tau_1", "#1f77b4", {}, {}}, t2{"tau_2", "#d62728", {}, {}};
    for (const auto& p : outcome.points) {
        f1.x.push_back(p.value);
        f1.y.push_back(p.report.profile[0].fee);
        f2.x.push_back(p.value);
        f2.y.push_back(p.report.profile[1].fee);
        t1.x.push_back(p.value);
        t1.y.push_back(p.report.profile[0].beacon_duration);
        t2.x.push_back(p.value);
        t2.y.push_back(p.report.profile[1].beacon_duration);
    }
    fee_panel.series = {f1, f2};
    tau_panel.series = {t1, t2};
    outcome.svg_path = (fs::path(out_dir) / "sweep.svg").string();
    write_text(outcome.svg_path, render_svg({fee_panel, tau_panel}, prov));

    log << converged << "/" << outcome.points.size() << " points converged\n";
    outcome.exit_code =
        10 * converged >= 9 * outcome.points.size() ? 0 : 3;  // >= 90% threshold
    return outcome;
}

VerifyOutcome run_verify(const GameConfig& config, const GridSpec& grid,
                         const std::string& out_dir, std::ostream& log) {
    fs::create_directories(out_dir);
    VerifyOutcome outcome;
    const std::string prov = provenance_line(config, 0);

    outcome.availability_modularity = check_modularity(GameAxis::Availability, config, grid);
    outcome.pricing_modularity = check_modularity(GameAxis::Pricing, config, grid);
    outcome.availability_solvability = check_solvability(GameAxis::Availability, config, grid);
    outcome.pricing_solvability = check_solvability(GameAxis::Pricing, config, grid);

    write_text((fs::path(out_dir) / "availability_modularity.csv").string(),
               modularity_csv(outcome.availability_modularity, prov));
    write_text((fs::path(out_dir) / "pricing_modularity.csv").string(),
               modularity_csv(outcome.pricing_modularity, prov));
    write_text((fs::path(out_dir) / "availability_solvability.csv").string(),
               solvability_csv(outcome.availability_solvability, prov));
    write_text((fs::path(out_dir) / "pricing_solvability.csv").string(),
               solvability_csv(outcome.pricing_solvability, prov));

    auto mod_line = [&](const ModularityReport& r) {
        log << to_string(r.game_axis) << ": " << to_string(r.verdict) << " ("
            << r.violation_count << " violations)\n";
        if (r.demand_margin_violations > 0) {
            log << to_string(r.game_axis) << ": demand margin N*f*share - psi < 0 at "
                << r.demand_margin_violations << " lattice points\n";
        }
    };
    mod_line(outcome.availability_modularity);
    mod_line(outcome.pricing_modularity);
    auto solv_line = [&](const SolvabilityReport& r) {
        log << to_string(r.game_axis) << " solvability: "
            << (r.all_satisfied ? "satisfied" : "violated") << " (worst margin "
            << format_double(r.worst_margin) << ")\n";
    };
    solv_line(outcome.availability_solvability);
    solv_line(outcome.pricing_solvability);

    const bool ok =
        outcome.availability_modularity.verdict == ModularityVerdict::Submodular &&
        outcome.pricing_modularity.verdict == ModularityVerdict::Supermodular &&
        outcome.availability_solvability.all_satisfied &&
        outcome.pricing_solvability.all_satisfied;
    outcome.exit_code = ok ? 0 : 1;
    return outcome;
}

namespace {

// Slot-sum quadrature oracle for the beaconing/idle split: integrate the
// first-contact density over each beacon (or idle) interval separately.
double slot_sum(double lambda, double lo_off, double hi_off, const TimingConfig& timing) {
    double total = 0.0;
    for (int s = 0; s < timing.num_slots; ++s) {
        const double a = s * timing.slot_period + lo_off;
        const double b = s * timing.slot_period + hi_off;
        if (b <= a) continue;
        total += integrate([lambda](double x) { return lambda * std::exp(-lambda * x); }, a, b,
                           {1e-12, 1 << 20});
    }
    return total;
}

double encounter_oracle(double li, double lj, double m) {
    // P(first <= second <= m) reduced to one dimension: the inner integral
    // over the winner's time is analytic, the outer is quadrature.
    return integrate(
        [&](double y) { return lj * std::exp(-lj * y) * (1.0 - std::exp(-li * y)); }, 0.0, m,
        {1e-12, 1 << 20});
}

double service_oracle(const StrategyProfile& profile, const GameConfig& config, int who) {
    const int rival = 1 - who;
    const double li = config.uav[static_cast<std::size_t>(who)].encounter_rate;
    const double lj = config.uav[static_cast<std::size_t>(rival)].encounter_rate;
    const double m = config.timing.window();
    const double win = encounter_oracle(li, lj, m);
    const double lose = encounter_oracle(lj, li, m);
    const double asleep =
        slot_sum(lj, profile[static_cast<std::size_t>(rival)].beacon_duration,
                 config.timing.slot_period, config.timing);
    const double beaconing = slot_sum(
        li, 0.0, profile[static_cast<std::size_t>(who)].beacon_duration, config.timing);
    return (win + lose * asleep) * beaconing *
           config.resolved_coverage[static_cast<std::size_t>(who)];
}

}  // namespace

ProbeResult probe_beacon(double lambda, double tau, const TimingConfig& timing,
                         bool with_oracle) {
    ProbeResult r;
    r.value = beacon_prob(lambda, tau, timing);
    if (with_oracle) r.oracle = slot_sum(lambda, 0.0, tau, timing);
    return r;
}

ProbeResult probe_sleep(double lambda, double tau, const TimingConfig& timing,
                        bool with_oracle) {
    ProbeResult r;
    r.value = sleep_prob(lambda, tau, timing);
    if (with_oracle) r.oracle = slot_sum(lambda, tau, timing.slot_period, timing);
    return r;
}

ProbeResult probe_encounter(double lambda_i, double lambda_j, double m, EncounterOrder order,
                            bool with_oracle) {
    ProbeResult r;
    const EncounterPair pair(lambda_i, lambda_j, m);
    r.value = first_encounter_prob(pair, order);
    if (with_oracle) {
        r.oracle = order == EncounterOrder::IFirst ? encounter_oracle(lambda_i, lambda_j, m)
                                                   : encounter_oracle(lambda_j, lambda_i, m);
    }
    return r;
}

namespace {

double trapezoid_coverage(const LosModel& los, double upper, double cell_radius,
                          double altitude) {
    // high-resolution fixed-grid trapezoid, the independent route
    const std::size_t n = 1000000;
    const double h = upper / static_cast<double>(n);
    double acc = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
        const double r = h * static_cast<double>(k);
        const double f =
            los_probability(los, r, altitude) * 2.0 * r / (cell_radius * cell_radius);
        acc += (k == 0 || k == n) ? 0.5 * f : f;
    }
    return acc * h;
}

}  // namespace

ProbeResult probe_coverage_ratio(const LosModel& los, double ratio, double cell_radius,
                                 double altitude, bool with_oracle) {
    if (!(ratio >= 0.0 && ratio <= 1.0)) {
        throw DomainError("snr radius ratio must be in [0, 1]");
    }
    const double upper = ratio * cell_radius;
    ProbeResult r;
    r.value = integrate(
        [&](double x) {
            return los_probability(los, x, altitude) * 2.0 * x / (cell_radius * cell_radius);
        },
        0.0, upper, {1e-10, 1 << 18});
    if (with_oracle) r.oracle = trapezoid_coverage(los, upper, cell_radius, altitude);
    return r;
}

ProbeResult probe_coverage_radio(const RadioParams& radio, bool with_oracle) {
    ProbeResult r;
    r.value = coverage_prob(radio);
    if (with_oracle) {
        r.oracle = trapezoid_coverage(radio.los_model, snr_radius(radio), radio.cell_radius,
                                      radio.altitude);
    }
    return r;
}

ProbeResult probe_share(double own_fee, double rival_fee, double mu) {
    if (!(mu > 0)) throw DomainError("temperature must be positive");
    return {logit_share(own_fee, rival_fee, mu), std::nullopt};
}

ProbeResult probe_energy(const GameConfig& config, int who, double p_srv, double tau,
                         double share) {
    if (who != 0 && who != 1) throw IndexOutOfRange("operator index must be 0 or 1");
    return {energy(served_set_of(config), config.uav[static_cast<std::size_t>(who)].energy,
                   p_srv, tau, config.timing, share),
            std::nullopt};
}

ProbeResult probe_service(const StrategyProfile& profile, const GameConfig& config, int who,
                          bool with_oracle) {
    ProbeResult r;
    r.value = service_prob(profile, config, who);
    if (with_oracle) r.oracle = service_oracle(profile, config, who);
    return r;
}

ProbeResult probe_utility(const StrategyProfile& profile, const GameConfig& config, int who,
                          bool with_oracle) {
    ProbeResult r;
    r.value = utility(profile, config, who);
    if (with_oracle) {
        const auto& own = profile[static_cast<std::size_t>(who)];
        const auto& rival = profile[static_cast<std::size_t>(1 - who)];
        const double share = logit_share(own.fee, rival.fee, config.market.temperature);
        const double p_srv = service_oracle(profile, config, who);
        const double diss = energy(served_set_of(config),
                                   config.uav[static_cast<std::size_t>(who)].energy, p_srv,
                                   own.beacon_duration, config.timing, share);
        r.oracle = share * config.market.population_size * p_srv * own.fee - diss;
    }
    return r;
}

}  // namespace uavgame::harness
