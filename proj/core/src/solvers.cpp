#include "rgqme/solvers.hpp"

#include <cmath>
#include <map>
#include <string>

#include "rgqme/integrate.hpp"
#include "rgqme/linalg.hpp"

namespace rgqme::qme {

namespace {

// loose floor for perturbative solvers; anything worse aborts the run
constexpr double kPerturbativeEigFloor = 1e-2;

void require_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw InvalidState("solver: empty grid");
    for (std::size_t k = 1; k < grid.size(); ++k)
        if (grid[k] <= grid[k - 1]) throw InvalidState("solver: grid not ascending");
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void validate_series(TimeSeries& series, double eig_floor) {
    double worst = 0.0;
    for (std::size_t k = 0; k < series.states.size(); ++k) {
        double lo = 0.0;
        if (!DensityMatrix::check(series.states[k], eig_floor, &lo)) {
            throw InvalidState("solver: state at t = " + std::to_string(series.times[k]) +
                               " violates density-matrix invariants (min eig " +
                               std::to_string(lo) + ")");
        }
        worst = std::min(worst, lo);
    }
    series.metadata["min_eigenvalue"] = format_double(worst);
}

TimeSeries rwa_solve(const RWAGenerator& gen, const DensityMatrix& rho0,
                     const std::vector<double>& grid) {
    require_grid(grid);
    const Eigen::Index d = rho0.dim();
    if (gen.generator.dim() != d) throw DimMismatch("rwa_solve: dim mismatch");

    TimeSeries out;
    out.times = grid;
    out.states.reserve(grid.size());
    out.picture = Picture::interaction;
    out.metadata["method"] = "rwa";

    // exact stepping: expm per distinct gap, reused across the grid
    std::map<double, ComplexMatrix> step_cache;
    ComplexVector v = vec(rho0.matrix());
    double t_prev = grid.front();
    if (grid.front() != 0.0) {
        v = expm(gen.generator.matrix() * grid.front()) * v;
    }
    out.states.push_back(devec(v, d, d));
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double h = grid[k] - t_prev;
        auto it = step_cache.find(h);
        if (it == step_cache.end()) {
            it = step_cache.emplace(h, expm(gen.generator.matrix() * h)).first;
        }
        v = it->second * v;
        t_prev = grid[k];
        out.states.push_back(devec(v, d, d));
    }
    validate_series(out, kPerturbativeEigFloor);
    return out;
}

TimeSeries tcl2_solve(const GeneratorContext& ctx, const DensityMatrix& rho0,
                      const std::vector<double>& grid) {
    require_grid(grid);
    TimeSeries out = ode_propagate([&ctx](double t) { return ctx.tcl2(t); }, rho0, grid);
    out.picture = Picture::interaction;
    out.metadata["method"] = "tcl";
    validate_series(out, kPerturbativeEigFloor);
    return out;
}

TimeSeries tc2_solve(const GeneratorContext& ctx, const DensityMatrix& rho0,
                     const std::vector<double>& grid) {
    require_grid(grid);
    if (grid.size() >= 2) {
        const double h0 = grid[1] - grid[0];
        for (std::size_t k = 1; k < grid.size(); ++k) {
            if (std::abs(grid[k] - grid[k - 1] - h0) > 1e-9 * h0) {
                throw NonUniformGrid("tc2_solve: grid must be uniform");
            }
        }
    }
    const Eigen::Index d = ctx.dim();
    const std::size_t n_pts = grid.size();
    const double h = n_pts > 1 ? grid[1] - grid[0] : 0.0;
    const double l2 = ctx.system().lambda * ctx.system().lambda;
    const std::size_t m = ctx.system().couplings.size();

    // interaction-picture couplings cached on the grid
    std::vector<std::vector<ComplexMatrix>> a_t(n_pts, std::vector<ComplexMatrix>(m));
    for (std::size_t k = 0; k < n_pts; ++k)
        for (std::size_t p = 0; p < m; ++p)
            a_t[k][p] = ctx.decompositions()[p].interaction_op(grid[k]);

    // kernel values C_ij((n - m) h) cached per lag
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) pairs.emplace_back(i, j);
    std::vector<std::vector<Complex>> lag(pairs.size(), std::vector<Complex>(n_pts));
    for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t k = 0; k < n_pts; ++k)
            lag[p][k] = ctx.bath().correlation(pairs[p].first, pairs[p].second,
                                               h * static_cast<double>(k));

    // K(t_n, t_k) applied to a Hermitian state
    auto kernel_apply = [&](std::size_t n, std::size_t k, const ComplexMatrix& rho) {
        ComplexMatrix acc = ComplexMatrix::Zero(d, d);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const Complex c = lag[p][n - k];
            if (c == Complex(0.0, 0.0)) continue;
            const ComplexMatrix& ai = a_t[n][pairs[p].first];
            const ComplexMatrix& aj = a_t[k][pairs[p].second];
            acc += c * (ai * (aj * rho) - aj * rho * ai);
        }
        ComplexMatrix sym = acc + acc.adjoint();
        return ComplexMatrix(-l2 * sym);
    };

    std::vector<ComplexMatrix> states;
    states.reserve(n_pts);
    states.push_back(rho0.matrix());

    // memory integral by trapezoid over stored states
    auto derivative = [&](std::size_t n, const std::vector<ComplexMatrix>& hist) {
        ComplexMatrix acc = ComplexMatrix::Zero(d, d);
        if (n == 0) return acc;
        acc += 0.5 * kernel_apply(n, 0, hist[0]);
        for (std::size_t k = 1; k < n; ++k) acc += kernel_apply(n, k, hist[k]);
        acc += 0.5 * kernel_apply(n, n, hist[n]);
        return ComplexMatrix(h * acc);
    };

    for (std::size_t n = 0; n + 1 < n_pts; ++n) {
        const ComplexMatrix f_n = derivative(n, states);
        states.push_back(states[n] + h * f_n);  // predictor
        const ComplexMatrix f_p = derivative(n + 1, states);
        states[n + 1] = states[n] + 0.5 * h * (f_n + f_p);
        if (!all_finite(states[n + 1])) {
            throw NonFiniteState("tc2_solve: non-finite state at t = " +
                                 std::to_string(grid[n + 1]));
        }
    }

    TimeSeries out;
    out.times = grid;
    out.states = std::move(states);
    out.picture = Picture::interaction;
    out.metadata["method"] = "tc";
    validate_series(out, kPerturbativeEigFloor);
    return out;
}

TimeSeries rg_map_solve(const GeneratorContext& ctx, const DensityMatrix& rho0,
                        const std::vector<double>& grid) {
    require_grid(grid);
    const RWAGenerator gen = rwa_generator(ctx.system(), ctx.bath());
    TimeSeries base = rwa_solve(gen, rho0, grid);

    TimeSeries out;
    out.times = grid;
    out.states.reserve(grid.size());
    out.picture = Picture::interaction;
    out.metadata["method"] = "rg";
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const Superoperator phi = ctx.rg_correction(grid[k]);
        out.states.push_back(base.states[k] + phi.apply(base.states[k]));
    }
    validate_series(out, kPerturbativeEigFloor);
    return out;
}

TimeSeries to_picture(const TimeSeries& series, const ComplexMatrix& hamiltonian,
                      Picture target) {
    if (series.picture == target) return series;
    const HermEig eig = herm_eig(hamiltonian);
    TimeSeries out = series;
    out.picture = target;
    // interaction -> schroedinger: rho_s = e^{-iHt} rho e^{+iHt}
    const double sign = (target == Picture::schroedinger) ? -1.0 : 1.0;
    for (std::size_t k = 0; k < series.states.size(); ++k) {
        ComplexVector phase(eig.values.size());
        for (Eigen::Index n = 0; n < eig.values.size(); ++n) {
            phase(n) = std::exp(Complex(0.0, sign * eig.values(n) * series.times[k]));
        }
        const ComplexMatrix u = eig.vectors * phase.asDiagonal() * eig.vectors.adjoint();
        out.states[k] = u * series.states[k] * u.adjoint();
    }
    return out;
}

} // namespace rgqme::qme
