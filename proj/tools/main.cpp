// Command-line front end: probe single formulas, verify the game's
// structural properties, solve for equilibria, and run parameter sweeps.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "uavgame/config.hpp"
#include "uavgame/csvio.hpp"
#include "uavgame/errors.hpp"
#include "uavgame/harness.hpp"
#include "uavgame/scenario.hpp"

namespace {

using namespace uavgame;

struct LearningFlags {
    std::uint64_t seed = 1;
    int restarts = 1;
    int max_iterations = 100;
    int grid_resolution = 64;
    int refine_iterations = 3;
    double fp_tolerance = 5e-4;
    std::string update = "simultaneous";
    std::string init = "random";
};

void add_learning_flags(CLI::App* cmd, LearningFlags& lf) {
    cmd->add_option("--seed", lf.seed, "master RNG seed (all randomness derives from it)");
    cmd->add_option("--restarts", lf.restarts, "extra random-init runs probing uniqueness");
    cmd->add_option("--max-iter", lf.max_iterations, "best-response round limit");
    cmd->add_option("--grid-res", lf.grid_resolution, "argmax grid points per axis");
    cmd->add_option("--refines", lf.refine_iterations, "argmax refinement rounds");
    cmd->add_option("--fp-tol", lf.fp_tolerance, "normalized fixed-point residual threshold");
    cmd->add_option("--update", lf.update, "simultaneous|sequential")
        ->check(CLI::IsMember({"simultaneous", "sequential"}));
    cmd->add_option("--init", lf.init, "random|midpoint starting profile")
        ->check(CLI::IsMember({"random", "midpoint"}));
}

LearningConfig to_learning_config(const LearningFlags& lf) {
    LearningConfig lc;
    lc.seed = lf.seed;
    lc.restarts = lf.restarts;
    lc.max_iterations = lf.max_iterations;
    lc.grid_resolution = lf.grid_resolution;
    lc.refine_iterations = lf.refine_iterations;
    lc.fp_tolerance = lf.fp_tolerance;
    lc.update_mode =
        lf.update == "sequential" ? UpdateMode::Sequential : UpdateMode::Simultaneous;
    lc.init_mode = lf.init == "midpoint" ? InitMode::Midpoint : InitMode::Random;
    return lc;
}

GameConfig load_or_exit(const std::string& path) {
    auto result = load_config(path);
    if (!result.ok()) {
        std::cerr << "invalid config " << path << ":\n";
        for (const auto& d : result.diagnostics) {
            std::cerr << "  " << d.code << " " << d.field << ": " << d.message << "\n";
        }
        std::exit(1);
    }
    return *result.config;
}

LosModel parse_los_flag(const std::string& text) {
    if (text.rfind("const:", 0) == 0) {
        return LosConstant{std::stod(text.substr(6))};
    }
    if (text.rfind("sigmoid:", 0) == 0) {
        const auto body = text.substr(8);
        const auto comma = body.find(',');
        if (comma == std::string::npos) {
            throw DomainError("sigmoid LoS needs two parameters: sigmoid:a,b");
        }
        return LosElevationSigmoid{std::stod(body.substr(0, comma)),
                                   std::stod(body.substr(comma + 1))};
    }
    throw DomainError("LoS model must be const:p or sigmoid:a,b, got " + text);
}

void print_probe(const std::string& name, const harness::ProbeResult& r) {
    std::cout << name << " = " << format_double(r.value) << "\n";
    if (r.oracle) {
        std::cout << "oracle = " << format_double(*r.oracle) << "\n";
        std::cout << "abs_diff = " << format_double(std::abs(r.value - *r.oracle)) << "\n";
    }
}

StrategyProfile profile_from(double tau1, double f1, double tau2, double f2) {
    return {Strategy{tau1, f1}, Strategy{tau2, f2}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-operator UAV availability-pricing game toolkit"};
    app.require_subcommand(1);

    // ---- probe ----
    auto* probe = app.add_subcommand("probe", "evaluate one model quantity");
    probe->require_subcommand(1);
    probe->fallthrough();  // lets --oracle appear after the quantity's own flags
    bool with_oracle = false;
    probe->add_flag("--oracle", with_oracle,
                    "also print the independent-oracle value and the difference");

    double lambda = 1.0, tau = 0.0, slot_T = 1.0;
    int slots = 1;
    auto* pb = probe->add_subcommand("beacon-prob", "first-encounter-while-beaconing probability");
    pb->add_option("--lambda", lambda)->required();
    pb->add_option("--tau", tau)->required();
    pb->add_option("--T", slot_T)->required();
    pb->add_option("--l", slots)->required();

    auto* ps = probe->add_subcommand("sleep-prob", "first-encounter-while-idle probability");
    ps->add_option("--lambda", lambda)->required();
    ps->add_option("--tau", tau)->required();
    ps->add_option("--T", slot_T)->required();
    ps->add_option("--l", slots)->required();

    double lam_i = 1.0, lam_j = 1.0, window_m = 1.0;
    std::string order = "i";
    auto* pe = probe->add_subcommand("encounter", "race-winning probability within the window");
    pe->add_option("--lambda-i", lam_i)->required();
    pe->add_option("--lambda-j", lam_j)->required();
    pe->add_option("--m", window_m)->required();
    pe->add_option("--order", order, "which operator encounters first")
        ->check(CLI::IsMember({"i", "j"}));

    std::string los_text = "const:1";
    double ratio = -1.0, radius = 1.0, altitude = 1.0;
    double tx_power = 0, noise = 0, beta = 0, alpha = 0;
    auto* pc = probe->add_subcommand("coverage", "disc coverage probability");
    pc->add_option("--los", los_text, "const:p or sigmoid:a,b");
    pc->add_option("--snr-radius-ratio", ratio, "detection radius as a fraction of the cell");
    pc->add_option("--radius", radius, "cell radius");
    pc->add_option("--altitude", altitude, "UAV altitude");
    pc->add_option("--tx-power", tx_power);
    pc->add_option("--noise", noise);
    pc->add_option("--beta", beta, "detection threshold");
    pc->add_option("--alpha", alpha, "path-loss exponent");

    double fi = 0, fj = 0, mu = 1.0;
    auto* psh = probe->add_subcommand("share", "logit market share");
    psh->add_option("--fi", fi)->required();
    psh->add_option("--fj", fj)->required();
    psh->add_option("--mu", mu)->required();

    std::string config_path;
    int who = 1;
    double p_srv = 0, share_in = 0;
    auto* pen = probe->add_subcommand("energy", "dissipated energy for one operator");
    pen->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
    pen->add_option("--who", who, "operator index, 1 or 2")->check(CLI::Range(1, 2));
    pen->add_option("--psrv", p_srv)->required();
    pen->add_option("--tau", tau)->required();
    pen->add_option("--share", share_in, "market share (literal_share beacon term only)");

    double tau1 = 0, f1 = 0, tau2 = 0, f2 = 0;
    auto* psv = probe->add_subcommand("service-prob", "successful contact probability");
    psv->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
    psv->add_option("--who", who)->check(CLI::Range(1, 2));
    psv->add_option("--tau1", tau1)->required();
    psv->add_option("--f1", f1)->required();
    psv->add_option("--tau2", tau2)->required();
    psv->add_option("--f2", f2)->required();

    auto* pu = probe->add_subcommand("utility", "operator utility at a strategy profile");
    pu->add_option("--config", config_path)->required()->check(CLI::ExistingFile);
    pu->add_option("--who", who)->check(CLI::Range(1, 2));
    pu->add_option("--tau1", tau1)->required();
    pu->add_option("--f1", f1)->required();
    pu->add_option("--tau2", tau2)->required();
    pu->add_option("--f2", f2)->required();

    double density = 0;
    std::uint64_t ppp_seed = 1;
    std::string ppp_out;
    auto* ppp = probe->add_subcommand("ppp", "sample a Poisson disc scenario");
    ppp->add_option("--radius", radius)->required();
    ppp->add_option("--density", density)->required();
    ppp->add_option("--seed", ppp_seed);
    ppp->add_option("--out", ppp_out, "write the scenario CSV here (default stdout)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "survey modularity and solvability");
    std::string v_config, v_out = "out";
    int v_grid = 25;
    double v_margin = 0.05;
    verify->add_option("--config", v_config)->required()->check(CLI::ExistingFile);
    verify->add_option("--grid", v_grid, "lattice points per axis");
    verify->add_option("--margin", v_margin, "box fraction clipped off each boundary");
    verify->add_option("--out", v_out, "report directory");

    // ---- solve ----
    auto* solve = app.add_subcommand("solve", "best-response dynamics to an equilibrium");
    std::string s_config, s_out = "out";
    LearningFlags s_lf;
    solve->add_option("--config", s_config)->required()->check(CLI::ExistingFile);
    solve->add_option("--out", s_out, "output directory");
    add_learning_flags(solve, s_lf);

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "equilibria along a parameter axis");
    std::string w_config, w_out = "out", w_axis, w_values;
    LearningFlags w_lf;
    w_lf.init = "midpoint";  // deterministic basin selection across points
    sweep->add_option("--config", w_config)->required()->check(CLI::ExistingFile);
    sweep->add_option("--axis", w_axis, "mu|pcov|population|lambda")->required();
    sweep->add_option("--values", w_values, "start:end:step or comma list")->required();
    sweep->add_option("--out", w_out, "output directory");
    add_learning_flags(sweep, w_lf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (probe->parsed()) {
            const TimingConfig timing{slot_T, slots};
            if (pb->parsed()) {
                print_probe("beacon-prob", harness::probe_beacon(lambda, tau, timing, with_oracle));
            } else if (ps->parsed()) {
                print_probe("sleep-prob", harness::probe_sleep(lambda, tau, timing, with_oracle));
            } else if (pe->parsed()) {
                print_probe("encounter",
                            harness::probe_encounter(lam_i, lam_j, window_m,
                                                     order == "i" ? EncounterOrder::IFirst
                                                                  : EncounterOrder::JFirst,
                                                     with_oracle));
            } else if (pc->parsed()) {
                if (ratio >= 0.0) {
                    print_probe("coverage",
                                harness::probe_coverage_ratio(parse_los_flag(los_text), ratio,
                                                              radius, altitude, with_oracle));
                } else {
                    RadioParams rp;
                    rp.tx_power = tx_power;
                    rp.noise_power = noise;
                    rp.sinr_threshold = beta;
                    rp.pathloss_exponent = alpha;
                    rp.altitude = altitude;
                    rp.cell_radius = radius;
                    rp.los_model = parse_los_flag(los_text);
                    if (!(rp.tx_power > 0) || !(rp.noise_power > 0) ||
                        !(rp.sinr_threshold > 0) || !(rp.pathloss_exponent > 0) ||
                        !(rp.altitude > 0) || !(rp.cell_radius > 0)) {
                        throw DomainError(
                            "radio probe needs positive --tx-power --noise --beta --alpha "
                            "--altitude --radius (or use --snr-radius-ratio)");
                    }
                    print_probe("coverage", harness::probe_coverage_radio(rp, with_oracle));
                }
            } else if (psh->parsed()) {
                print_probe("share", harness::probe_share(fi, fj, mu));
            } else if (pen->parsed()) {
                const GameConfig cfg = load_or_exit(config_path);
                print_probe("energy",
                            harness::probe_energy(cfg, who - 1, p_srv, tau, share_in));
            } else if (psv->parsed()) {
                const GameConfig cfg = load_or_exit(config_path);
                print_probe("service-prob",
                            harness::probe_service(profile_from(tau1, f1, tau2, f2), cfg,
                                                   who - 1, with_oracle));
            } else if (pu->parsed()) {
                const GameConfig cfg = load_or_exit(config_path);
                print_probe("utility",
                            harness::probe_utility(profile_from(tau1, f1, tau2, f2), cfg,
                                                   who - 1, with_oracle));
            } else if (ppp->parsed()) {
                const DiscScenario sc = sample_ppp(radius, density, ppp_seed);
                std::cout << "users = " << sc.users.size() << "\n";
                const std::string csv = scenario_csv(sc);
                if (ppp_out.empty()) {
                    std::cout << csv;
                } else {
                    std::ofstream f(ppp_out, std::ios::binary);
                    f << csv;
                }
            }
            return 0;
        }

        if (verify->parsed()) {
            const GameConfig cfg = load_or_exit(v_config);
            GridSpec grid;
            grid.resolution = v_grid;
            grid.margin = v_margin;
            return harness::run_verify(cfg, grid, v_out, std::cout).exit_code;
        }

        if (solve->parsed()) {
            const GameConfig cfg = load_or_exit(s_config);
            const LearningConfig lc = to_learning_config(s_lf);
            const StrategyProfile init =
                lc.init_mode == InitMode::Midpoint
                    ? midpoint_profile(cfg)
                    : (cfg.reference ? *cfg.reference : random_profile(cfg, lc.seed));
            return harness::run_solve(cfg, lc, init, s_out, std::cout).exit_code;
        }

        if (sweep->parsed()) {
            const GameConfig cfg = load_or_exit(w_config);
            const LearningConfig lc = to_learning_config(w_lf);
            return harness::run_sweep(cfg, harness::parse_axis(w_axis),
                                      harness::parse_values(w_values), lc, w_out, std::cout)
                .exit_code;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
