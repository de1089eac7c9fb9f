#include "rgqme/execute.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "rgqme/integrate.hpp"
#include "rgqme/rg_linear.hpp"
#include "rgqme/solvers.hpp"

namespace rgqme::cli {

using nlohmann::json;

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw InvalidState("cannot open output file " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

json parameter_block(const RunConfig& cfg) {
    json p;
    p["t_max"] = cfg.t_max;
    p["dt"] = cfg.dt;
    if (cfg.command == Command::oscillator) {
        p["epsilon"] = cfg.epsilon;
        p["amplitude"] = cfg.amplitude;
        p["phase"] = cfg.phase;
    } else {
        p["delta"] = cfg.params.delta;
        p["alpha"] = cfg.params.alpha;
        p["lambda"] = cfg.params.lambda;
        p["initial_state"] = "excited";
        p["sign_variant"] = spin_boson::to_string(cfg.variant);
        p["picture"] = cfg.schroedinger_output ? "schroedinger" : "interaction";
    }
    return p;
}

int run_oscillator(const RunConfig& cfg, const std::filesystem::path& dir) {
    const std::vector<double> grid = uniform_grid(cfg.t_max, cfg.dt);
    const rglin::OscillatorParams p{cfg.epsilon, cfg.amplitude, cfg.phase};

    std::string csv = "t,exact,naive,rg\n";
    for (double t : grid) {
        const double xe = rglin::oscillator_exact(cfg.epsilon, cfg.amplitude, cfg.phase, 0.0, t);
        const double xn = rglin::oscillator_naive(cfg.epsilon, cfg.amplitude, cfg.phase, 0.0, t);
        const double xr = rglin::oscillator_rg(p, t);
        csv += g17(t) + "," + g17(xe) + "," + g17(xn) + "," + g17(xr) + "\n";
    }
    write_atomic(dir / "oscillator.csv", csv);

    json summary;
    summary["command"] = "oscillator";
    summary["parameters"] = parameter_block(cfg);
    summary["columns"] = {"exact", "naive", "rg"};
    summary["rows"] = grid.size();
    write_atomic(dir / "oscillator_summary.json", summary.dump(2) + "\n");
    return 0;
}

int run_spin_boson_family(const RunConfig& cfg, const std::filesystem::path& dir,
                          bool quiet) {
    const std::vector<double> grid = uniform_grid(cfg.t_max, cfg.dt);
    const DensityMatrix rho0 = DensityMatrix::pure(ComplexVector::Unit(2, 0));

    harness::ComparisonResult result =
        harness::compare_methods(cfg.params, rho0, grid, cfg.methods, cfg.variant);
    const harness::SummaryStats stats = harness::summary_stats(result);

    const ComplexMatrix h = spin_boson::make_system(cfg.params).hamiltonian;
    const Picture picture =
        cfg.schroedinger_output ? Picture::schroedinger : Picture::interaction;

    std::string csv = "t,method,fidelity,rho_pp,re_rho_pm,im_rho_pm\n";
    for (harness::Method m : result.methods) {
        const TimeSeries series = qme::to_picture(result.series.at(m), h, picture);
        const auto& f = result.fidelity_by_method.at(m);
        for (std::size_t k = 0; k < result.grid.size(); ++k) {
            const ComplexMatrix& rho = series.states[k];
            csv += g17(result.grid[k]);
            csv += ",";
            csv += harness::to_string(m);
            csv += "," + g17(f[k]) + "," + g17(rho(0, 0).real()) + "," +
                   g17(rho(0, 1).real()) + "," + g17(rho(0, 1).imag()) + "\n";
        }
    }
    const std::string name = to_string(cfg.command);
    write_atomic(dir / (name + ".csv"), csv);

    json summary;
    summary["command"] = name;
    summary["parameters"] = parameter_block(cfg);
    json methods = json::array();
    for (harness::Method m : result.methods) methods.push_back(harness::to_string(m));
    summary["methods"] = methods;
    json per_method;
    for (const auto& [m, s] : stats.per_method) {
        json entry;
        entry["min_fidelity"] = s.min_fidelity;
        entry["argmin_t"] = s.argmin_time;
        entry["mean_fidelity"] = s.mean_fidelity;
        per_method[harness::to_string(m)] = entry;
    }
    summary["per_method"] = per_method;
    summary["orderings"] = stats.orderings;
    summary["clamp_events"] = {{"count", result.clamp_log.events},
                               {"worst_eigenvalue", result.clamp_log.worst_eigenvalue}};

    if (cfg.oracle.enabled) {
        const double hw = cfg.oracle.window_halfwidth * cfg.params.alpha_abs();
        const spin_boson::BathWindow window{cfg.params.delta_abs() - hw,
                                            cfg.params.delta_abs() + hw};
        const double l2 = cfg.params.lambda * cfg.params.lambda;
        std::vector<double> grid_abs(grid.size());
        for (std::size_t k = 0; k < grid.size(); ++k) grid_abs[k] = grid[k] / l2;
        const TimeSeries oracle = spin_boson::discretized_bath_oracle(
            cfg.params, cfg.oracle.modes, window, rho0, grid_abs, Picture::interaction);
        double worst = 0.0;
        const TimeSeries& exact = result.series.at(harness::Method::exact);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            worst = std::max(worst, max_abs(oracle.states[k] - exact.states[k]));
        }
        summary["oracle"] = {{"modes", cfg.oracle.modes},
                             {"window_halfwidth_alpha", cfg.oracle.window_halfwidth},
                             {"max_state_deviation", worst}};
    }
    write_atomic(dir / (name + "_summary.json"), summary.dump(2) + "\n");

    if (!quiet) {
        for (const auto& [m, s] : stats.per_method) {
            std::cout << harness::to_string(m) << ": min F = " << s.min_fidelity
                      << " at t = " << s.argmin_time << "\n";
        }
    }
    return 0;
}

} // namespace

int execute(const RunConfig& cfg, const std::string& out_dir, bool quiet) {
    try {
        const std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
        std::filesystem::create_directories(dir);
        if (cfg.command == Command::oscillator) return run_oscillator(cfg, dir);
        return run_spin_boson_family(cfg, dir, quiet);
    } catch (const ParseError& e) {
        std::cerr << "rgqme: " << e.tag() << ": " << e.what() << "\n";
        return 1;
    } catch (const SchemaError& e) {
        std::cerr << "rgqme: " << e.tag() << ": " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "rgqme: " << e.tag() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "rgqme: InternalError: " << e.what() << "\n";
        return 2;
    }
}

int run(const std::string& config_text, const std::string& out_dir, bool quiet) {
    RunConfig cfg;
    try {
        cfg = parse_config(config_text);
    } catch (const Error& e) {
        std::cerr << "rgqme: " << e.tag() << ": " << e.what() << "\n";
        return 1;
    }
    return execute(cfg, out_dir, quiet);
}

} // namespace rgqme::cli
