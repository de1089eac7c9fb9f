#include "rgqme/run_config.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "rgqme/errors.hpp"

namespace rgqme::cli {

using nlohmann::json;

const char* to_string(Command c) {
    switch (c) {
        case Command::oscillator: return "oscillator";
        case Command::spin_boson: return "spin-boson";
        case Command::lindblad: return "lindblad";
        case Command::compare: return "compare";
    }
    return "?";
}

namespace {

double require_number(const json& j, const std::string& key) {
    if (!j.at(key).is_number()) throw SchemaError("field '" + key + "' must be a number");
    return j.at(key).get<double>();
}

double number_or(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    return require_number(j, key);
}

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const std::string& scope) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!allowed.count(it.key())) {
            throw SchemaError("unknown field '" + it.key() + "'" +
                              (scope.empty() ? "" : " in " + scope));
        }
    }
}

} // namespace

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("config must be a JSON object");
    if (!j.contains("command")) throw SchemaError("missing field 'command'");
    if (!j.at("command").is_string()) throw SchemaError("field 'command' must be a string");

    RunConfig cfg;
    const std::string cmd = j.at("command").get<std::string>();
    if (cmd == "oscillator") cfg.command = Command::oscillator;
    else if (cmd == "spin-boson") cfg.command = Command::spin_boson;
    else if (cmd == "lindblad") cfg.command = Command::lindblad;
    else if (cmd == "compare") cfg.command = Command::compare;
    else throw SchemaError("unknown command '" + cmd + "'");

    const bool oscillator = cfg.command == Command::oscillator;
    std::set<std::string> allowed = {"command", "t_max", "dt"};
    if (oscillator) {
        allowed.insert({"epsilon", "amplitude", "phase"});
    } else {
        allowed.insert({"delta", "alpha", "lambda", "methods", "sign_variant", "oracle",
                        "schroedinger_output"});
    }
    reject_unknown(j, allowed, "");

    if (!j.contains("t_max")) throw SchemaError("missing field 't_max'");
    if (!j.contains("dt")) throw SchemaError("missing field 'dt'");
    cfg.t_max = require_number(j, "t_max");
    cfg.dt = require_number(j, "dt");
    if (cfg.t_max <= 0.0) throw SchemaError("field 't_max' must be positive");
    if (cfg.dt <= 0.0) throw SchemaError("field 'dt' must be positive");
    if (cfg.dt >= cfg.t_max) throw SchemaError("field 'dt' must be smaller than t_max");

    if (oscillator) {
        if (!j.contains("epsilon")) throw SchemaError("missing field 'epsilon'");
        cfg.epsilon = require_number(j, "epsilon");
        if (cfg.epsilon < 0.0 || cfg.epsilon >= 2.0) {
            throw SchemaError("field 'epsilon' must lie in [0, 2)");
        }
        cfg.amplitude = number_or(j, "amplitude", 1.0);
        if (cfg.amplitude < 0.0) throw SchemaError("field 'amplitude' must be >= 0");
        cfg.phase = number_or(j, "phase", cfg.phase);
        return cfg;
    }

    cfg.params.delta = number_or(j, "delta", 10.0);
    cfg.params.alpha = number_or(j, "alpha", 1.0);
    cfg.params.lambda = number_or(j, "lambda", 1.0);
    if (cfg.params.delta < 0.0) throw SchemaError("field 'delta' must be >= 0");
    if (cfg.params.alpha <= 0.0) throw SchemaError("field 'alpha' must be positive");
    if (cfg.params.lambda <= 0.0) throw SchemaError("field 'lambda' must be positive");

    if (j.contains("sign_variant")) {
        if (!j.at("sign_variant").is_string()) {
            throw SchemaError("field 'sign_variant' must be a string");
        }
        const std::string v = j.at("sign_variant").get<std::string>();
        if (v == "plus") cfg.variant = spin_boson::SignVariant::plus;
        else if (v == "minus") cfg.variant = spin_boson::SignVariant::minus;
        else throw SchemaError("field 'sign_variant' must be 'plus' or 'minus'");
    }

    if (j.contains("schroedinger_output")) {
        if (!j.at("schroedinger_output").is_boolean()) {
            throw SchemaError("field 'schroedinger_output' must be a boolean");
        }
        cfg.schroedinger_output = j.at("schroedinger_output").get<bool>();
    }

    if (j.contains("methods")) {
        if (!j.at("methods").is_array()) throw SchemaError("field 'methods' must be an array");
        for (const auto& entry : j.at("methods")) {
            if (!entry.is_string()) throw SchemaError("entries of 'methods' must be strings");
            try {
                cfg.methods.push_back(harness::method_from_string(entry.get<std::string>()));
            } catch (const Error&) {
                throw SchemaError("unknown method '" + entry.get<std::string>() +
                                  "' in 'methods'");
            }
        }
    } else {
        if (cfg.command == Command::lindblad) {
            cfg.methods = {harness::Method::exact, harness::Method::rwa};
        } else {
            cfg.methods = {harness::Method::exact, harness::Method::tcl,
                           harness::Method::rwa, harness::Method::rg};
        }
    }
    if (cfg.methods.empty()) throw SchemaError("field 'methods' must not be empty");
    bool has_exact = false;
    for (auto m : cfg.methods) has_exact = has_exact || m == harness::Method::exact;
    if (!has_exact) throw SchemaError("field 'methods' must include 'exact'");

    if (j.contains("oracle")) {
        const json& jo = j.at("oracle");
        if (!jo.is_object()) throw SchemaError("field 'oracle' must be an object");
        reject_unknown(jo, {"enabled", "modes", "window_halfwidth"}, "'oracle'");
        if (jo.contains("enabled")) {
            if (!jo.at("enabled").is_boolean()) {
                throw SchemaError("field 'oracle.enabled' must be a boolean");
            }
            cfg.oracle.enabled = jo.at("enabled").get<bool>();
        }
        if (jo.contains("modes")) {
            if (!jo.at("modes").is_number_unsigned()) {
                throw SchemaError("field 'oracle.modes' must be a positive integer");
            }
            cfg.oracle.modes = jo.at("modes").get<std::size_t>();
            if (cfg.oracle.modes < 2) throw SchemaError("field 'oracle.modes' must be >= 2");
        }
        if (jo.contains("window_halfwidth")) {
            cfg.oracle.window_halfwidth = require_number(jo, "window_halfwidth");
            if (cfg.oracle.window_halfwidth <= 0.0) {
                throw SchemaError("field 'oracle.window_halfwidth' must be positive");
            }
        }
    }
    return cfg;
}

} // namespace rgqme::cli
