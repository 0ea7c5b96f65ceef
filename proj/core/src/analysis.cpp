#include "uavgame/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "uavgame/csvio.hpp"
#include "uavgame/errors.hpp"
#include "uavgame/temporal.hpp"

namespace uavgame {

Psi psi(const ServedSet& set, const EnergyParams& params) {
    double all_silent = 1.0;
    for (double p : set.tx_probs) all_silent *= 1.0 - p;
    double ack_sum = 0.0;
    for (std::size_t u = 0; u < set.size(); ++u) ack_sum += normalized_throughput(set, u);
    return Psi{(1.0 - all_silent) * params.rx_cost + ack_sum * params.ack_cost};
}

ShareDerivatives price_share_derivatives(double own_fee, double rival_fee, double temperature) {
    const double s = logit_share(own_fee, rival_fee, temperature);
    const double sp = s * (1.0 - s);
    return {-sp / temperature, sp * (1.0 - 2.0 * s) / (temperature * temperature)};
}

double utility_second_derivative_price(const StrategyProfile& profile, const GameConfig& config,
                                       int who) {
    const auto& own = profile[static_cast<std::size_t>(who)];
    const auto& rival = profile[static_cast<std::size_t>(1 - who)];
    const double p_srv = service_prob(profile, config, who);
    const auto d = price_share_derivatives(own.fee, rival.fee, config.market.temperature);
    const double value =
        config.market.population_size * p_srv * (2.0 * d.first + own.fee * d.second);
#ifndef NDEBUG
    // cheap finite-difference probe of the revenue term (energy does not
    // depend on the own fee under the duty-cycle beacon term)
    {
        const double mu = config.market.temperature;
        const double h = 1e-5 * std::max(1.0, std::abs(own.fee));
        auto rev = [&](double f) {
            return config.market.population_size * p_srv * f *
                   logit_share(f, rival.fee, mu);
        };
        const double fd = (rev(own.fee + h) - 2.0 * rev(own.fee) + rev(own.fee - h)) / (h * h);
        assert(std::abs(fd - value) <= 1e-3 * std::max({std::abs(value), std::abs(fd), 1.0}));
    }
#endif
    return value;
}

PricingMixed utility_mixed_derivative_price(const StrategyProfile& profile,
                                            const GameConfig& config, int who) {
    const auto& own = profile[static_cast<std::size_t>(who)];
    const auto& rival = profile[static_cast<std::size_t>(1 - who)];
    const double mu = config.market.temperature;
    const double s = logit_share(own.fee, rival.fee, mu);
    const double p_srv = service_prob(profile, config, who);
    PricingMixed out;
    out.factor = config.market.population_size * p_srv * s * (1.0 - s) / mu;
    out.bracket = 1.0 - own.fee / mu * (1.0 - 2.0 * s);
    out.value = out.factor * out.bracket;
    return out;
}

namespace {

struct AxisView {
    // evaluate utility of `who` with own/rival coordinates displaced along
    // the surveyed axis, all other coordinates frozen
    const GameConfig& config;
    GameAxis axis;
    int who;
    StrategyProfile base;

    double at(double own_x, double rival_x) const {
        StrategyProfile p = base;
        auto& own = p[static_cast<std::size_t>(who)];
        auto& rival = p[static_cast<std::size_t>(1 - who)];
        if (axis == GameAxis::Availability) {
            own.beacon_duration = own_x;
            rival.beacon_duration = rival_x;
        } else {
            own.fee = own_x;
            rival.fee = rival_x;
        }
        return utility(p, config, who);
    }
};

struct Box {
    double lo, hi;
    double width() const { return hi - lo; }
};

Box axis_box(GameAxis axis, const GameConfig& config) {
    if (axis == GameAxis::Availability) return {0.0, config.timing.slot_period};
    return {config.market.fee_min, config.market.fee_max};
}

double own_coord(GameAxis axis, const Strategy& s) {
    return axis == GameAxis::Availability ? s.beacon_duration : s.fee;
}

// Central second difference with one Richardson refinement step when the
// h and h/2 estimates disagree.
template <typename F>
double central_second(const F& f, double h) {
    auto probe = [&](double step) { return (f(step) - 2.0 * f(0.0) + f(-step)) / (step * step); };
    const double d1 = probe(h);
    const double d2 = probe(h / 2.0);
    if (std::abs(d1 - d2) > 1e-3 * std::max(std::abs(d2), 1e-12)) {
        return (4.0 * d2 - d1) / 3.0;
    }
    return d2;
}

template <typename F>
double central_mixed(const F& f, double hx, double hy) {
    auto probe = [&](double ax, double ay) {
        return (f(ax, ay) - f(ax, -ay) - f(-ax, ay) + f(-ax, -ay)) / (4.0 * ax * ay);
    };
    const double d1 = probe(hx, hy);
    const double d2 = probe(hx / 2.0, hy / 2.0);
    if (std::abs(d1 - d2) > 1e-3 * std::max(std::abs(d2), 1e-12)) {
        return (4.0 * d2 - d1) / 3.0;
    }
    return d2;
}

constexpr double kStepFraction = 1e-4;  // FD step as a fraction of box width

StrategyProfile grid_reference(const GameConfig& config, const GridSpec& grid) {
    if (grid.reference) return *grid.reference;
    if (config.reference) return *config.reference;
    const double tmid = 0.5 * config.timing.slot_period;
    const double fmid = 0.5 * (config.market.fee_min + config.market.fee_max);
    return {Strategy{tmid, fmid}, Strategy{tmid, fmid}};
}

double demand_margin(const StrategyProfile& profile, const GameConfig& config, int who) {
    const auto& own = profile[static_cast<std::size_t>(who)];
    const auto& rival = profile[static_cast<std::size_t>(1 - who)];
    const double share = logit_share(own.fee, rival.fee, config.market.temperature);
    const double ps = psi(served_set_of(config),
                          config.uav[static_cast<std::size_t>(who)].energy).value;
    return config.market.population_size * own.fee * share - ps;
}

LatticeSample sample_point(GameAxis axis, const GameConfig& config,
                           const StrategyProfile& base, int who, double x_own, double x_rival,
                           double h) {
    StrategyProfile p = base;
    auto& own = p[static_cast<std::size_t>(who)];
    auto& rival = p[static_cast<std::size_t>(1 - who)];
    LatticeSample out;
    out.x_own = x_own;
    out.x_rival = x_rival;
    out.who = who;

    if (axis == GameAxis::Availability) {
        own.beacon_duration = x_own;
        rival.beacon_duration = x_rival;
        AxisView view{config, axis, who, p};
        out.own_second = central_second([&](double d) { return view.at(x_own + d, x_rival); }, h);
        out.mixed = central_mixed(
            [&](double dx, double dy) { return view.at(x_own + dx, x_rival + dy); }, h, h);
    } else {
        own.fee = x_own;
        rival.fee = x_rival;
        out.own_second = utility_second_derivative_price(p, config, who);
        const auto mx = utility_mixed_derivative_price(p, config, who);
        out.mixed = mx.value;
        out.bracket = mx.bracket;
    }
    out.margin = -out.own_second - std::abs(out.mixed);
    out.demand_margin = demand_margin(p, config, who);
    return out;
}

std::vector<LatticeSample> survey(GameAxis axis, const GameConfig& config,
                                  const GridSpec& grid) {
    const Box box = axis_box(axis, config);
    const double lo = box.lo + grid.margin * box.width();
    const double hi = box.hi - grid.margin * box.width();
    const int n = std::max(grid.resolution, 2);
    const double h = kStepFraction * box.width();
    const StrategyProfile base = grid_reference(config, grid);

    std::vector<LatticeSample> samples;
    samples.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * 2);
    for (int i = 0; i < n; ++i) {
        const double xi = lo + (hi - lo) * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double xj = lo + (hi - lo) * j / (n - 1);
            for (int who = 0; who < 2; ++who) {
                samples.push_back(sample_point(axis, config, base, who, xi, xj, h));
            }
        }
    }
    return samples;
}

constexpr double kSignTolerance = 1e-9;

}  // namespace

Hessian2 numeric_hessian(GameAxis axis, const StrategyProfile& profile,
                         const GameConfig& config, int who) {
    const Box box = axis_box(axis, config);
    const double h = kStepFraction * box.width();
    const double x_own = own_coord(axis, profile[static_cast<std::size_t>(who)]);
    const double x_rival = own_coord(axis, profile[static_cast<std::size_t>(1 - who)]);
    for (double x : {x_own, x_rival}) {
        if (x - h < box.lo || x + h > box.hi) {
            throw BoundaryPoint("strategy coordinate " + format_double(x) +
                                " within one step of the box boundary");
        }
    }
    AxisView view{config, axis, who, profile};
    Hessian2 out;
    out.own = central_second([&](double d) { return view.at(x_own + d, x_rival); }, h);
    out.rival = central_second([&](double d) { return view.at(x_own, x_rival + d); }, h);
    out.mixed =
        central_mixed([&](double dx, double dy) { return view.at(x_own + dx, x_rival + dy); },
                      h, h);
    return out;
}

double availability_factor_ratio(const StrategyProfile& profile, const GameConfig& config,
                                 int who) {
    const double factor = demand_margin(profile, config, who);
    const Psi p = psi(served_set_of(config), config.uav[static_cast<std::size_t>(who)].energy);
    const double scale = std::max(std::abs(p.value), 1.0);
    if (std::abs(factor) < 1e-6 * scale) {
        throw FactorNearZero("net-gain factor " + format_double(factor) +
                             " too close to zero for the ratio check");
    }
    const Hessian2 hess = numeric_hessian(GameAxis::Availability, profile, config, who);

    // numeric curvature of the service probability in the own duration
    const double h = kStepFraction * config.timing.slot_period;
    const double x = profile[static_cast<std::size_t>(who)].beacon_duration;
    auto srv = [&](double t) {
        StrategyProfile q = profile;
        q[static_cast<std::size_t>(who)].beacon_duration = t;
        return service_prob(q, config, who);
    };
    const double curv = central_second([&](double d) { return srv(x + d); }, h);
    if (std::abs(curv) < 1e-12) {
        throw FactorNearZero("service-probability curvature vanishes at this point");
    }
    return hess.own / (curv * factor);
}

ModularityReport check_modularity(GameAxis axis, const GameConfig& config,
                                  const GridSpec& grid) {
    ModularityReport report;
    report.game_axis = axis;
    report.samples = survey(axis, config, grid);

    double mn = std::numeric_limits<double>::infinity();
    double mx = -std::numeric_limits<double>::infinity();
    for (const auto& s : report.samples) {
        mn = std::min(mn, s.mixed);
        mx = std::max(mx, s.mixed);
        if (s.demand_margin < 0) ++report.demand_margin_violations;
        const bool violates = axis == GameAxis::Availability ? s.mixed > kSignTolerance
                                                             : s.mixed < -kSignTolerance;
        if (violates) ++report.violation_count;
    }
    report.min_mixed = mn;
    report.max_mixed = mx;

    const bool all_nonpos = mx <= kSignTolerance;
    const bool all_nonneg = mn >= -kSignTolerance;
    if (all_nonpos && all_nonneg) {
        report.verdict = ModularityVerdict::Indeterminate;  // everything ~0
    } else if (all_nonpos) {
        report.verdict = ModularityVerdict::Submodular;
    } else if (all_nonneg) {
        report.verdict = ModularityVerdict::Supermodular;
    } else {
        report.verdict = ModularityVerdict::Indeterminate;
    }
    return report;
}

SolvabilityReport check_solvability(GameAxis axis, const GameConfig& config,
                                    const GridSpec& grid) {
    SolvabilityReport report;
    report.game_axis = axis;
    report.samples = survey(axis, config, grid);
    report.worst_margin = std::numeric_limits<double>::infinity();
    report.all_satisfied = true;
    for (const auto& s : report.samples) {
        report.worst_margin = std::min(report.worst_margin, s.margin);
        if (s.margin < -kSignTolerance) report.all_satisfied = false;
    }
    return report;
}

std::string to_string(ModularityVerdict v) {
    switch (v) {
        case ModularityVerdict::Submodular: return "submodular";
        case ModularityVerdict::Supermodular: return "supermodular";
        default: return "indeterminate";
    }
}

std::string to_string(GameAxis a) {
    return a == GameAxis::Availability ? "availability" : "pricing";
}

namespace {

std::string samples_csv(const std::vector<LatticeSample>& samples, GameAxis axis,
                        const std::string& provenance) {
    CsvWriter csv(provenance, {"x_own", "x_rival", "who", "own_second", "mixed", "margin",
                               "demand_margin", "bracket"});
    for (const auto& s : samples) {
        csv.add_row({CsvWriter::cell(s.x_own), CsvWriter::cell(s.x_rival),
                     std::to_string(s.who), CsvWriter::cell(s.own_second),
                     CsvWriter::cell(s.mixed), CsvWriter::cell(s.margin),
                     CsvWriter::cell(s.demand_margin),
                     axis == GameAxis::Pricing ? CsvWriter::cell(s.bracket) : std::string()});
    }
    return csv.str();
}

}  // namespace

std::string modularity_csv(const ModularityReport& report, const std::string& provenance) {
    return samples_csv(report.samples, report.game_axis, provenance);
}

std::string solvability_csv(const SolvabilityReport& report, const std::string& provenance) {
    return samples_csv(report.samples, report.game_axis, provenance);
}

}  // namespace uavgame
