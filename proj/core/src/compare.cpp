#include "rgqme/compare.hpp"

#include <algorithm>
#include <cmath>

#include "rgqme/master.hpp"
#include "rgqme/solvers.hpp"

namespace rgqme::harness {

const char* to_string(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::tcl: return "tcl";
        case Method::rwa: return "rwa";
        case Method::rg: return "rg";
        case Method::tc: return "tc";
    }
    return "?";
}

Method method_from_string(const std::string& name) {
    for (Method m : {Method::exact, Method::tcl, Method::rwa, Method::rg, Method::tc}) {
        if (name == to_string(m)) return m;
    }
    throw InvalidState("unknown method name: " + name);
}

ComparisonResult compare_methods(const spin_boson::Params& p, const DensityMatrix& rho0,
                                 const std::vector<double>& grid,
                                 std::vector<Method> methods,
                                 spin_boson::SignVariant variant) {
    if (methods.empty()) throw InvalidState("compare_methods: empty method list");
    const bool has_exact =
        std::find(methods.begin(), methods.end(), Method::exact) != methods.end();
    // fidelities are always taken against the exact solution
    if (!has_exact) throw InvalidState("compare_methods: method set must include exact");

    // fixed evaluation order keeps the output deterministic
    std::vector<Method> ordered;
    for (Method m : {Method::exact, Method::tcl, Method::rwa, Method::rg, Method::tc}) {
        if (std::find(methods.begin(), methods.end(), m) != methods.end()) {
            ordered.push_back(m);
        }
    }

    const double l2 = p.lambda * p.lambda;
    std::vector<double> grid_abs(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) grid_abs[k] = grid[k] / l2;

    ComparisonResult result;
    result.grid = grid;
    result.params = p;
    result.methods = ordered;

    const spin_boson::Amplitude amp{p, variant};
    const qme::SystemModel sys = spin_boson::make_system(p);
    const qme::BathModel bath = spin_boson::make_bath(p);

    for (Method m : ordered) {
        switch (m) {
            case Method::exact:
                result.series[m] =
                    spin_boson::exact_map(amp, rho0, grid_abs, Picture::interaction);
                break;
            case Method::tcl:
                result.series[m] = qme::tcl2_solve(qme::GeneratorContext(sys, bath), rho0, grid_abs);
                break;
            case Method::rwa:
                result.series[m] = qme::rwa_solve(qme::rwa_generator(sys, bath), rho0, grid_abs);
                break;
            case Method::rg:
                result.series[m] =
                    qme::rg_map_solve(qme::GeneratorContext(sys, bath), rho0, grid_abs);
                break;
            case Method::tc:
                result.series[m] = qme::tc2_solve(qme::GeneratorContext(sys, bath), rho0, grid_abs);
                break;
        }
    }

    const TimeSeries& exact = result.series.at(Method::exact);
    for (Method m : ordered) {
        const TimeSeries& s = result.series.at(m);
        std::vector<double> f(grid.size());
        ComparisonResult::Minimum minimum;
        minimum.value = 2.0;
        for (std::size_t k = 0; k < grid.size(); ++k) {
            f[k] = fidelity(s.states[k], exact.states[k], 1e-2, &result.clamp_log);
            if (f[k] < minimum.value) {
                minimum.value = f[k];
                minimum.time = grid[k];
            }
        }
        result.fidelity_by_method[m] = std::move(f);
        result.min_fidelity[m] = minimum;
    }
    return result;
}

SummaryStats summary_stats(const ComparisonResult& result) {
    if (result.methods.empty()) throw InvalidState("summary_stats: empty result");
    SummaryStats stats;
    for (Method m : result.methods) {
        const auto& f = result.fidelity_by_method.at(m);
        MethodStats s;
        s.min_fidelity = result.min_fidelity.at(m).value;
        s.argmin_time = result.min_fidelity.at(m).time;
        s.mean_fidelity = 0.0;
        for (double v : f) s.mean_fidelity += v;
        s.mean_fidelity /= static_cast<double>(f.size());
        stats.per_method[m] = s;
    }

    auto has = [&](Method m) { return stats.per_method.count(m) > 0; };
    if (has(Method::rg) && has(Method::tcl)) {
        stats.orderings["rg_min_exceeds_tcl_min"] =
            stats.per_method[Method::rg].min_fidelity >
            stats.per_method[Method::tcl].min_fidelity;
    }
    if (has(Method::rwa) && has(Method::tcl)) {
        stats.orderings["rwa_min_below_tcl_min"] =
            stats.per_method[Method::rwa].min_fidelity <
            stats.per_method[Method::tcl].min_fidelity;
    }
    if (has(Method::rwa) && has(Method::rg)) {
        stats.orderings["rwa_min_below_rg_min"] =
            stats.per_method[Method::rwa].min_fidelity <
            stats.per_method[Method::rg].min_fidelity;
    }
    if (has(Method::rwa) && !result.grid.empty()) {
        const double span = result.grid.back() - result.grid.front();
        stats.orderings["rwa_argmin_in_first_quarter"] =
            stats.per_method[Method::rwa].argmin_time <=
            result.grid.front() + 0.25 * span;
    }
    if (has(Method::tcl) && has(Method::rg) && !result.grid.empty()) {
        const double cutoff =
            result.grid.front() + 0.05 * (result.grid.back() - result.grid.front());
        double tcl_mean = 0.0, rg_mean = 0.0;
        std::size_t count = 0;
        const auto& ftcl = result.fidelity_by_method.at(Method::tcl);
        const auto& frg = result.fidelity_by_method.at(Method::rg);
        for (std::size_t k = 0; k < result.grid.size() && result.grid[k] <= cutoff; ++k) {
            tcl_mean += ftcl[k];
            rg_mean += frg[k];
            ++count;
        }
        if (count > 0) {
            stats.orderings["tcl_early_mean_ge_rg"] = tcl_mean >= rg_mean;
        }
    }
    return stats;
}

} // namespace rgqme::harness
