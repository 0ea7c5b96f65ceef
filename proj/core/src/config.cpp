#include "uavgame/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "uavgame/coverage.hpp"
#include "uavgame/csvio.hpp"
#include "uavgame/errors.hpp"

namespace uavgame {

using nlohmann::json;

namespace {

class Collector {
  public:
    void missing(const std::string& field) {
        items_.push_back({"MissingField", field, "required field is absent"});
    }
    void out_of_range(const std::string& field, double value, const std::string& bound) {
        items_.push_back({"OutOfRange", field,
                          "value " + format_double(value) + " violates " + bound});
    }
    void bad_type(const std::string& field, const std::string& expected) {
        items_.push_back({"BadType", field, "expected " + expected});
    }
    void bad_value(const std::string& field, const std::string& msg) {
        items_.push_back({"BadValue", field, msg});
    }
    void inconsistent_timing(const std::string& msg) {
        items_.push_back({"InconsistentTiming", "timing.window", msg});
    }
    bool clean() const { return items_.empty(); }
    std::vector<Diagnostic> take() { return std::move(items_); }

  private:
    std::vector<Diagnostic> items_;
};

// Fetch a finite number; records a diagnostic and returns fallback on failure.
double get_number(const json& obj, const std::string& path, const std::string& key,
                  Collector& diag, bool required, double fallback) {
    if (!obj.contains(key)) {
        if (required) diag.missing(path + key);
        return fallback;
    }
    const auto& v = obj.at(key);
    if (!v.is_number()) {
        diag.bad_type(path + key, "number");
        return fallback;
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        diag.bad_value(path + key, "must be finite");
        return fallback;
    }
    return d;
}

long get_integer(const json& obj, const std::string& path, const std::string& key,
                 Collector& diag, bool required, long fallback) {
    if (!obj.contains(key)) {
        if (required) diag.missing(path + key);
        return fallback;
    }
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) {
        diag.bad_type(path + key, "integer");
        return fallback;
    }
    return v.get<long>();
}

LosModel parse_los(const json& j, const std::string& path, Collector& diag) {
    if (!j.is_object()) {
        diag.bad_type(path, "object");
        return LosConstant{1.0};
    }
    if (j.contains("constant")) {
        if (!j.at("constant").is_number()) {
            diag.bad_type(path + ".constant", "number");
            return LosConstant{1.0};
        }
        const double p = j.at("constant").get<double>();
        if (!(p >= 0.0 && p <= 1.0)) diag.out_of_range(path + ".constant", p, "[0, 1]");
        return LosConstant{p};
    }
    if (j.contains("elevation_sigmoid")) {
        const auto& s = j.at("elevation_sigmoid");
        if (!s.is_object()) {
            diag.bad_type(path + ".elevation_sigmoid", "object");
            return LosConstant{1.0};
        }
        LosElevationSigmoid model;
        model.a = get_number(s, path + ".elevation_sigmoid.", "a", diag, true, 1.0);
        model.b = get_number(s, path + ".elevation_sigmoid.", "b", diag, true, 1.0);
        if (!(model.a > 0)) diag.out_of_range(path + ".elevation_sigmoid.a", model.a, ">0");
        if (!(model.b > 0)) diag.out_of_range(path + ".elevation_sigmoid.b", model.b, ">0");
        return model;
    }
    diag.bad_value(path, "must contain 'constant' or 'elevation_sigmoid'");
    return LosConstant{1.0};
}

RadioParams parse_radio(const json& j, const std::string& path, Collector& diag) {
    RadioParams r;
    r.tx_power = get_number(j, path, "tx_power", diag, true, 1.0);
    r.noise_power = get_number(j, path, "noise_power", diag, true, 1.0);
    r.sinr_threshold = get_number(j, path, "sinr_threshold", diag, true, 1.0);
    r.pathloss_exponent = get_number(j, path, "pathloss_exponent", diag, true, 1.0);
    r.altitude = get_number(j, path, "altitude", diag, true, 1.0);
    r.cell_radius = get_number(j, path, "cell_radius", diag, true, 1.0);
    const struct {
        const char* name;
        double value;
    } positives[] = {
        {"tx_power", r.tx_power},           {"noise_power", r.noise_power},
        {"sinr_threshold", r.sinr_threshold}, {"pathloss_exponent", r.pathloss_exponent},
        {"altitude", r.altitude},           {"cell_radius", r.cell_radius},
    };
    for (const auto& p : positives) {
        if (!(p.value > 0)) diag.out_of_range(path + p.name, p.value, ">0");
    }
    if (j.contains("los_model")) {
        r.los_model = parse_los(j.at("los_model"), path + "los_model", diag);
    } else {
        diag.missing(path + "los_model");
    }
    return r;
}

UavParams parse_uav(const json& j, const std::string& path, Collector& diag) {
    UavParams u;
    u.encounter_rate = get_number(j, path, "encounter_rate", diag, true, 1.0);
    if (!(u.encounter_rate > 0)) diag.out_of_range(path + "encounter_rate", u.encounter_rate, ">0");

    if (!j.contains("coverage")) {
        diag.missing(path + "coverage");
    } else if (!j.at("coverage").is_object()) {
        diag.bad_type(path + "coverage", "object");
    } else {
        const auto& c = j.at("coverage");
        if (c.contains("direct")) {
            if (!c.at("direct").is_number()) {
                diag.bad_type(path + "coverage.direct", "number");
            } else {
                const double p = c.at("direct").get<double>();
                if (!(p >= 0.0 && p <= 1.0)) {
                    diag.out_of_range(path + "coverage.direct", p, "[0, 1]");
                }
                u.coverage = CoverageDirect{p};
            }
        } else if (c.contains("computed")) {
            u.coverage = parse_radio(c.at("computed"), path + "coverage.computed.", diag);
        } else {
            diag.bad_value(path + "coverage", "must contain 'direct' or 'computed'");
        }
    }

    if (!j.contains("energy")) {
        diag.missing(path + "energy");
    } else {
        const auto& e = j.at("energy");
        u.energy.beacon_cost = get_number(e, path + "energy.", "beacon_cost", diag, true, 0.0);
        u.energy.rx_cost = get_number(e, path + "energy.", "rx_cost", diag, true, 0.0);
        u.energy.ack_cost = get_number(e, path + "energy.", "ack_cost", diag, true, 0.0);
        u.energy.switch_cost = get_number(e, path + "energy.", "switch_cost", diag, true, 0.0);
        const struct {
            const char* name;
            double value;
        } costs[] = {{"beacon_cost", u.energy.beacon_cost},
                     {"rx_cost", u.energy.rx_cost},
                     {"ack_cost", u.energy.ack_cost},
                     {"switch_cost", u.energy.switch_cost}};
        for (const auto& c : costs) {
            if (!(c.value >= 0)) diag.out_of_range(path + "energy." + c.name, c.value, ">=0");
        }
        if (e.contains("beacon_term")) {
            const auto& t = e.at("beacon_term");
            if (t.is_string() && t.get<std::string>() == "duty_cycle") {
                u.energy.beacon_term = BeaconTerm::DutyCycle;
            } else if (t.is_string() && t.get<std::string>() == "literal_share") {
                u.energy.beacon_term = BeaconTerm::LiteralShare;
            } else {
                diag.bad_value(path + "energy.beacon_term",
                               "must be 'duty_cycle' or 'literal_share'");
            }
        }
    }
    return u;
}

}  // namespace

ValidationResult validate_config(const std::string& json_text) {
    Collector diag;
    json root = json::parse(json_text, nullptr, false);
    if (root.is_discarded() || !root.is_object()) {
        diag.bad_value("(document)", "not a JSON object");
        return {std::nullopt, diag.take()};
    }

    GameConfig cfg;

    // timing
    if (!root.contains("timing")) {
        diag.missing("timing");
    } else {
        const auto& t = root.at("timing");
        cfg.timing.slot_period = get_number(t, "timing.", "slot_period", diag, true, 1.0);
        cfg.timing.num_slots =
            static_cast<int>(get_integer(t, "timing.", "num_slots", diag, true, 1));
        if (!(cfg.timing.slot_period > 0)) {
            diag.out_of_range("timing.slot_period", cfg.timing.slot_period, ">0");
        }
        if (cfg.timing.num_slots < 1) {
            diag.out_of_range("timing.num_slots", cfg.timing.num_slots, ">=1");
        }
        if (t.contains("window")) {
            const double w = get_number(t, "timing.", "window", diag, false, 0.0);
            if (w != cfg.timing.num_slots * cfg.timing.slot_period) {
                diag.inconsistent_timing("window " + format_double(w) +
                                         " != num_slots * slot_period = " +
                                         format_double(cfg.timing.window()));
            }
        }
    }

    // market
    if (!root.contains("market")) {
        diag.missing("market");
    } else {
        const auto& mkt = root.at("market");
        cfg.market.temperature = get_number(mkt, "market.", "temperature", diag, true, 1.0);
        cfg.market.population_size =
            static_cast<int>(get_integer(mkt, "market.", "population_size", diag, true, 0));
        cfg.market.fee_min = get_number(mkt, "market.", "fee_min", diag, false, 0.0);
        cfg.market.fee_max = get_number(mkt, "market.", "fee_max", diag, true, 1.0);
        if (!(cfg.market.temperature > 0)) {
            diag.out_of_range("market.temperature", cfg.market.temperature, ">0");
        }
        if (cfg.market.population_size < 0) {
            diag.out_of_range("market.population_size", cfg.market.population_size, ">=0");
        }
        if (!(cfg.market.fee_min >= 0)) {
            diag.out_of_range("market.fee_min", cfg.market.fee_min, ">=0");
        }
        if (!(cfg.market.fee_max > cfg.market.fee_min)) {
            diag.out_of_range("market.fee_max", cfg.market.fee_max, ">fee_min");
        }
        if (!mkt.contains("user_tx_probs")) {
            diag.missing("market.user_tx_probs");
        } else if (mkt.at("user_tx_probs").is_array()) {
            for (std::size_t i = 0; i < mkt.at("user_tx_probs").size(); ++i) {
                const auto& p = mkt.at("user_tx_probs").at(i);
                const std::string field = "market.user_tx_probs[" + std::to_string(i) + "]";
                if (!p.is_number()) {
                    diag.bad_type(field, "number");
                    continue;
                }
                const double v = p.get<double>();
                if (!(v >= 0.0 && v <= 1.0)) diag.out_of_range(field, v, "[0, 1]");
                cfg.market.user_tx_probs.push_back(v);
            }
        } else if (mkt.at("user_tx_probs").is_object()) {
            // shorthand: one shared probability replicated `count` times
            // (count defaults to the population size)
            const auto& s = mkt.at("user_tx_probs");
            const double p = get_number(s, "market.user_tx_probs.", "shared", diag, true, 0.0);
            const long count = get_integer(s, "market.user_tx_probs.", "count", diag, false,
                                           cfg.market.population_size);
            if (!(p >= 0.0 && p <= 1.0)) {
                diag.out_of_range("market.user_tx_probs.shared", p, "[0, 1]");
            }
            if (count < 0) {
                diag.out_of_range("market.user_tx_probs.count", static_cast<double>(count),
                                  ">=0");
            } else {
                cfg.market.user_tx_probs.assign(static_cast<std::size_t>(count), p);
            }
        } else {
            diag.bad_type("market.user_tx_probs", "array or {shared, count}");
        }
    }

    // uav pair
    if (!root.contains("uav")) {
        diag.missing("uav");
    } else if (!root.at("uav").is_array() || root.at("uav").size() != 2) {
        diag.bad_value("uav", "must be an array of exactly 2 operators");
    } else {
        for (std::size_t i = 0; i < 2; ++i) {
            const std::string path = "uav[" + std::to_string(i) + "].";
            cfg.uav[i] = parse_uav(root.at("uav").at(i), path, diag);

            const auto& u = root.at("uav").at(i);
            if (u.contains("strategy")) {
                if (!cfg.reference) cfg.reference = StrategyProfile{};
                const auto& s = u.at("strategy");
                auto& st = (*cfg.reference)[i];
                st.beacon_duration =
                    get_number(s, path + "strategy.", "beacon_duration", diag, true, 0.0);
                st.fee = get_number(s, path + "strategy.", "fee", diag, true, 0.0);
                if (!(st.beacon_duration >= 0 && st.beacon_duration <= cfg.timing.slot_period)) {
                    diag.out_of_range(path + "strategy.beacon_duration", st.beacon_duration,
                                      "[0, T]");
                }
                if (!(st.fee >= cfg.market.fee_min && st.fee <= cfg.market.fee_max)) {
                    diag.out_of_range(path + "strategy.fee", st.fee, "[fee_min, fee_max]");
                }
            }
        }
    }

    if (!diag.clean()) {
        return {std::nullopt, diag.take()};
    }

    // Resolve coverage once; a quadrature failure is itself a diagnostic.
    for (std::size_t i = 0; i < 2; ++i) {
        if (const auto* d = std::get_if<CoverageDirect>(&cfg.uav[i].coverage)) {
            cfg.resolved_coverage[i] = d->p_cov;
        } else {
            try {
                cfg.resolved_coverage[i] =
                    coverage_prob(std::get<RadioParams>(cfg.uav[i].coverage));
            } catch (const Error& e) {
                diag.bad_value("uav[" + std::to_string(i) + "].coverage.computed", e.what());
            }
        }
    }
    if (!diag.clean()) {
        return {std::nullopt, diag.take()};
    }
    return {cfg, {}};
}

ValidationResult load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        return {std::nullopt, {{"BadValue", "(file)", "cannot open " + path}}};
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return validate_config(buf.str());
}

namespace {

json los_to_json(const LosModel& m) {
    if (const auto* c = std::get_if<LosConstant>(&m)) {
        return json{{"constant", c->p}};
    }
    const auto& s = std::get<LosElevationSigmoid>(m);
    return json{{"elevation_sigmoid", {{"a", s.a}, {"b", s.b}}}};
}

json uav_to_json(const UavParams& u) {
    json e{{"beacon_cost", u.energy.beacon_cost},
           {"rx_cost", u.energy.rx_cost},
           {"ack_cost", u.energy.ack_cost},
           {"switch_cost", u.energy.switch_cost}};
    if (u.energy.beacon_term == BeaconTerm::LiteralShare) {
        e["beacon_term"] = "literal_share";
    }
    json cov;
    if (const auto* d = std::get_if<CoverageDirect>(&u.coverage)) {
        cov = json{{"direct", d->p_cov}};
    } else {
        const auto& r = std::get<RadioParams>(u.coverage);
        cov = json{{"computed",
                    {{"tx_power", r.tx_power},
                     {"noise_power", r.noise_power},
                     {"sinr_threshold", r.sinr_threshold},
                     {"pathloss_exponent", r.pathloss_exponent},
                     {"altitude", r.altitude},
                     {"cell_radius", r.cell_radius},
                     {"los_model", los_to_json(r.los_model)}}}};
    }
    return json{{"encounter_rate", u.encounter_rate}, {"coverage", cov}, {"energy", e}};
}

}  // namespace

std::string serialize_config(const GameConfig& config) {
    json root;
    root["timing"] = {{"slot_period", config.timing.slot_period},
                      {"num_slots", config.timing.num_slots}};
    root["market"] = {{"temperature", config.market.temperature},
                      {"population_size", config.market.population_size},
                      {"fee_min", config.market.fee_min},
                      {"fee_max", config.market.fee_max},
                      {"user_tx_probs", config.market.user_tx_probs}};
    root["uav"] = json::array();
    for (std::size_t i = 0; i < 2; ++i) {
        json u = uav_to_json(config.uav[i]);
        if (config.reference) {
            u["strategy"] = {{"beacon_duration", (*config.reference)[i].beacon_duration},
                             {"fee", (*config.reference)[i].fee}};
        }
        root["uav"].push_back(u);
    }
    return root.dump(2);
}

std::string config_hash(const GameConfig& config) {
    return fnv1a_hex(serialize_config(config));
}

bool config_equal(const GameConfig& a, const GameConfig& b) {
    return serialize_config(a) == serialize_config(b);
}

}  // namespace uavgame
