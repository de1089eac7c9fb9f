// run_config.hpp — validated run configuration parsed from JSON

#pragma once

#include <string>
#include <vector>

#include "rgqme/compare.hpp"
#include "rgqme/spin_boson.hpp"

namespace rgqme::cli {

enum class Command { oscillator, spin_boson, lindblad, compare };

const char* to_string(Command c);

struct OracleSettings {
    bool enabled = false;
    std::size_t modes = 2000;
    double window_halfwidth = 100.0;  // units of alpha
};

struct RunConfig {
    Command command = Command::oscillator;
    double t_max = 0.0;  // oscillator: plain time; others: units of 1/lambda^2
    double dt = 0.0;

    // oscillator
    double epsilon = 0.1;
    double amplitude = 1.0;
    double phase = 1.5707963267948966;  // pi/2

    // spin-boson family
    spin_boson::Params params;
    std::vector<harness::Method> methods;
    spin_boson::SignVariant variant = spin_boson::SignVariant::plus;
    OracleSettings oracle;
    bool schroedinger_output = false;
};

// Parses and fully validates a JSON document. Unknown keys are rejected with
// the offending key named; malformed JSON raises ParseError, anything else
// SchemaError naming the field.
RunConfig parse_config(const std::string& text);

} // namespace rgqme::cli
