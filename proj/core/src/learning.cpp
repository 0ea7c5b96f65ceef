#include "uavgame/learning.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

#include "uavgame/csvio.hpp"
#include "uavgame/errors.hpp"
#include "uavgame/market.hpp"
#include "uavgame/rng.hpp"
#include "uavgame/temporal.hpp"

namespace uavgame {

namespace {

constexpr double kRefineShrink = 4.0;

double box_normalized_distance(const Strategy& a, const Strategy& b, const GameConfig& cfg) {
    const double dt = (a.beacon_duration - b.beacon_duration) / cfg.timing.slot_period;
    const double df = (a.fee - b.fee) / (cfg.market.fee_max - cfg.market.fee_min);
    return std::hypot(dt, df);
}

double profile_distance(const StrategyProfile& a, const StrategyProfile& b,
                        const GameConfig& cfg) {
    return std::max(box_normalized_distance(a[0], b[0], cfg),
                    box_normalized_distance(a[1], b[1], cfg));
}

struct Window {
    double lo = 0, hi = 0;

    void recenter(double center, double width, double box_lo, double box_hi) {
        lo = std::max(box_lo, center - width / 2.0);
        hi = std::min(box_hi, lo + width);
        lo = std::max(box_lo, hi - width);
    }
    double point(int k, int n) const { return lo + (hi - lo) * k / (n - 1); }
};

// Scan a 2-D grid over (tau, fee), strictly-greater acceptance so ties keep
// the first (lowest tau, then lowest fee) candidate.
template <typename F>
std::pair<double, double> grid_argmax_2d(const F& value, Window taus, Window fees, int n,
                                         int refines, double t_lo, double t_hi, double f_lo,
                                         double f_hi) {
    double best_t = taus.lo, best_f = fees.lo;
    for (int round = 0; round <= refines; ++round) {
        double best_u = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            const double t = taus.point(i, n);
            for (int j = 0; j < n; ++j) {
                const double f = fees.point(j, n);
                const double u = value(t, f);
                if (u > best_u) {
                    best_u = u;
                    best_t = t;
                    best_f = f;
                }
            }
        }
        if (round < refines) {
            taus.recenter(best_t, (taus.hi - taus.lo) / kRefineShrink, t_lo, t_hi);
            fees.recenter(best_f, (fees.hi - fees.lo) / kRefineShrink, f_lo, f_hi);
        }
    }
    return {best_t, best_f};
}

template <typename F>
double grid_argmax_1d(const F& value, double box_lo, double box_hi, int n, int refines) {
    Window w{box_lo, box_hi};
    double best_x = w.lo;
    for (int round = 0; round <= refines; ++round) {
        double best_u = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            const double x = w.point(i, n);
            const double u = value(x);
            if (u > best_u) {
                best_u = u;
                best_x = x;
            }
        }
        if (round < refines) {
            w.recenter(best_x, (w.hi - w.lo) / kRefineShrink, box_lo, box_hi);
        }
    }
    return best_x;
}

void check_learning_config(const LearningConfig& lc) {
    if (lc.max_iterations < 1) throw DomainError("max_iterations must be >= 1");
    if (lc.grid_resolution < 8) throw DomainError("grid_resolution must be >= 8");
    if (!(lc.fp_tolerance > 0)) throw DomainError("fp_tolerance must be positive");
}

}  // namespace

double refined_cell_diameter(const LearningConfig& lc) {
    const double per_axis = std::pow(1.0 / kRefineShrink, lc.refine_iterations) /
                            static_cast<double>(lc.grid_resolution - 1);
    return per_axis * std::numbers::sqrt2;
}

Strategy best_response(int who, const Strategy& rival, const GameConfig& config,
                       const LearningConfig& lc) {
    check_learning_config(lc);
    StrategyProfile p;
    p[static_cast<std::size_t>(1 - who)] = rival;
    auto value = [&](double t, double f) {
        StrategyProfile q = p;
        q[static_cast<std::size_t>(who)] = Strategy{t, f};
        return utility(q, config, who);
    };
    const double t_lo = 0.0, t_hi = config.timing.slot_period;
    const double f_lo = config.market.fee_min, f_hi = config.market.fee_max;
    auto [t, f] = grid_argmax_2d(value, Window{t_lo, t_hi}, Window{f_lo, f_hi},
                                 lc.grid_resolution, lc.refine_iterations, t_lo, t_hi, f_lo,
                                 f_hi);
    return Strategy{t, f};
}

double best_response_tau(int who, double rival_tau, const std::array<double, 2>& fees,
                         const GameConfig& config, const LearningConfig& lc) {
    check_learning_config(lc);
    auto value = [&](double t) {
        StrategyProfile q;
        q[static_cast<std::size_t>(who)] = Strategy{t, fees[static_cast<std::size_t>(who)]};
        q[static_cast<std::size_t>(1 - who)] =
            Strategy{rival_tau, fees[static_cast<std::size_t>(1 - who)]};
        return utility(q, config, who);
    };
    return grid_argmax_1d(value, 0.0, config.timing.slot_period, lc.grid_resolution,
                          lc.refine_iterations);
}

double best_response_fee(int who, double rival_fee, const std::array<double, 2>& taus,
                         const GameConfig& config, const LearningConfig& lc) {
    check_learning_config(lc);
    auto value = [&](double f) {
        StrategyProfile q;
        q[static_cast<std::size_t>(who)] = Strategy{taus[static_cast<std::size_t>(who)], f};
        q[static_cast<std::size_t>(1 - who)] =
            Strategy{taus[static_cast<std::size_t>(1 - who)], rival_fee};
        return utility(q, config, who);
    };
    return grid_argmax_1d(value, config.market.fee_min, config.market.fee_max,
                          lc.grid_resolution, lc.refine_iterations);
}

StrategyProfile random_profile(const GameConfig& config, std::uint64_t seed) {
    SplitMix64 rng(seed);
    StrategyProfile p;
    for (auto& s : p) {
        s.beacon_duration = rng.next_double() * config.timing.slot_period;
        s.fee = config.market.fee_min +
                rng.next_double() * (config.market.fee_max - config.market.fee_min);
    }
    return p;
}

StrategyProfile midpoint_profile(const GameConfig& config) {
    const Strategy mid{0.5 * config.timing.slot_period,
                       0.5 * (config.market.fee_min + config.market.fee_max)};
    return {mid, mid};
}

namespace {

// One full dynamics run; shared by the main run and the restart probes.
std::pair<Trace, StrategyProfile> iterate(const GameConfig& config, const LearningConfig& lc,
                                          StrategyProfile current) {
    Trace trace;
    for (int round = 1; round <= lc.max_iterations; ++round) {
        StrategyProfile next = current;
        if (lc.update_mode == UpdateMode::Simultaneous) {
            next[0] = best_response(0, current[1], config, lc);
            next[1] = best_response(1, current[0], config, lc);
        } else {
            next[0] = best_response(0, current[1], config, lc);
            next[1] = best_response(1, next[0], config, lc);
        }
        const double residual = profile_distance(next, current, config);
        current = next;
        trace.iterations.push_back(TraceRow{
            round,
            current,
            {utility(current, config, 0), utility(current, config, 1)},
            residual});
        trace.final_residual = residual;
        if (residual < lc.fp_tolerance) {
            trace.converged_at = round;
            break;
        }
    }
    return {std::move(trace), current};
}

}  // namespace

EquilibriumReport run_dynamics(const GameConfig& config, const LearningConfig& lc,
                               const StrategyProfile& init) {
    check_learning_config(lc);
    EquilibriumReport report;
    auto [trace, profile] = iterate(config, lc, init);
    report.profile = profile;
    report.converged = trace.converged_at.has_value();
    report.trace = std::move(trace);

    const StrategyProfile br{best_response(0, report.profile[1], config, lc),
                             best_response(1, report.profile[0], config, lc)};
    report.br_residual = profile_distance(br, report.profile, config);

    if (lc.restarts > 1) {
        SplitMix64 master(lc.seed);
        std::vector<StrategyProfile> converged;
        if (report.converged) converged.push_back(report.profile);
        std::vector<std::future<std::pair<Trace, StrategyProfile>>> futures;
        std::vector<std::uint64_t> child_seeds;
        for (int r = 0; r < lc.restarts; ++r) {
            child_seeds.push_back(master.split(static_cast<std::uint64_t>(r)).next());
        }
        for (int r = 0; r < lc.restarts; ++r) {
            futures.push_back(std::async(std::launch::async, [&, r] {
                return iterate(config, lc, random_profile(config, child_seeds[static_cast<std::size_t>(r)]));
            }));
        }
        for (auto& f : futures) {
            auto [t, p] = f.get();
            if (t.converged_at) converged.push_back(p);
        }
        double agreement = 0.0;
        for (std::size_t a = 0; a < converged.size(); ++a) {
            for (std::size_t b = a + 1; b < converged.size(); ++b) {
                agreement = std::max(agreement,
                                     profile_distance(converged[a], converged[b], config));
            }
        }
        report.restart_agreement = agreement;
    }
    return report;
}

GameConfig apply_sweep_value(const GameConfig& config_template, SweepAxis axis, double value) {
    GameConfig cfg = config_template;
    switch (axis) {
        case SweepAxis::Temperature:
            cfg.market.temperature = value;
            break;
        case SweepAxis::Population:
            cfg.market.population_size = static_cast<int>(std::llround(value));
            break;
        case SweepAxis::EncounterRate: {
            const double ratio =
                config_template.uav[1].encounter_rate / config_template.uav[0].encounter_rate;
            cfg.uav[0].encounter_rate = value;
            cfg.uav[1].encounter_rate = value * ratio;
            break;
        }
        case SweepAxis::Coverage: {
            const auto* base0 = std::get_if<CoverageDirect>(&config_template.uav[0].coverage);
            const auto* base1 = std::get_if<CoverageDirect>(&config_template.uav[1].coverage);
            if (!base0 || !base1) {
                throw DomainError("coverage sweep requires direct coverage in the template");
            }
            const double ratio = base1->p_cov / base0->p_cov;
            const double second = std::min(1.0, value * ratio);
            cfg.uav[0].coverage = CoverageDirect{value};
            cfg.uav[1].coverage = CoverageDirect{second};
            cfg.resolved_coverage = {value, second};
            break;
        }
    }
    return cfg;
}

std::vector<SweepPoint> sweep_equilibria(const GameConfig& config_template, SweepAxis axis,
                                         const std::vector<double>& values,
                                         const LearningConfig& lc) {
    check_learning_config(lc);
    std::vector<std::future<SweepPoint>> futures;
    SplitMix64 master(lc.seed);
    std::vector<std::uint64_t> child_seeds;
    child_seeds.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        child_seeds.push_back(master.split(i).next());
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        futures.push_back(std::async(std::launch::async, [&, i] {
            const GameConfig cfg = apply_sweep_value(config_template, axis, values[i]);
            LearningConfig point_lc = lc;
            point_lc.seed = child_seeds[i];
            const StrategyProfile init = lc.init_mode == InitMode::Midpoint
                                             ? midpoint_profile(cfg)
                                             : random_profile(cfg, point_lc.seed);
            return SweepPoint{values[i], run_dynamics(cfg, point_lc, init)};
        }));
    }
    std::vector<SweepPoint> out;
    out.reserve(values.size());
    for (auto& f : futures) out.push_back(f.get());  // collected in axis order
    return out;
}

std::string trace_csv(const Trace& trace, const std::string& provenance) {
    CsvWriter csv(provenance,
                  {"round", "tau_1", "f_1", "tau_2", "f_2", "u_1", "u_2", "residual"});
    for (const auto& row : trace.iterations) {
        csv.add_row({std::to_string(row.round), CsvWriter::cell(row.profile[0].beacon_duration),
                     CsvWriter::cell(row.profile[0].fee),
                     CsvWriter::cell(row.profile[1].beacon_duration),
                     CsvWriter::cell(row.profile[1].fee), CsvWriter::cell(row.utilities[0]),
                     CsvWriter::cell(row.utilities[1]), CsvWriter::cell(row.residual)});
    }
    return csv.str();
}

}  // namespace uavgame
