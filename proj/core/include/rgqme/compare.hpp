// compare.hpp — method-comparison runner for the spin-boson benchmark

#pragma once

#include <map>
#include <string>
#include <vector>

#include "rgqme/density.hpp"
#include "rgqme/fidelity.hpp"
#include "rgqme/spin_boson.hpp"
#include "rgqme/timeseries.hpp"

namespace rgqme::harness {

enum class Method { exact, tcl, rwa, rg, tc };

const char* to_string(Method m);
Method method_from_string(const std::string& name);

struct ComparisonResult {
    std::vector<double> grid;  // units of 1/lambda^2
    spin_boson::Params params;
    // deterministic method order: exact, tcl, rwa, rg, tc
    std::vector<Method> methods;
    std::map<Method, TimeSeries> series;              // interaction picture
    std::map<Method, std::vector<double>> fidelity_by_method;
    struct Minimum {
        double value = 1.0;
        double time = 0.0;
    };
    std::map<Method, Minimum> min_fidelity;
    ClampLog clamp_log;
};

// Runs the requested solvers on a shared grid and computes F(method, exact)
// pointwise. `exact` must be requested whenever any other method is.
ComparisonResult compare_methods(const spin_boson::Params& p, const DensityMatrix& rho0,
                                 const std::vector<double>& grid,
                                 std::vector<Method> methods,
                                 spin_boson::SignVariant variant = spin_boson::SignVariant::plus);

struct MethodStats {
    double min_fidelity = 1.0;
    double argmin_time = 0.0;
    double mean_fidelity = 1.0;
};

struct SummaryStats {
    std::map<Method, MethodStats> per_method;
    // pairwise ordering flags consumed by the acceptance suite
    std::map<std::string, bool> orderings;
};

SummaryStats summary_stats(const ComparisonResult& result);

} // namespace rgqme::harness
