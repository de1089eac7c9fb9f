#include "rgqme/integrate.hpp"

#include <cmath>
#include <string>

namespace rgqme {

TimeSeries ode_propagate(const GeneratorFn& generator, const DensityMatrix& rho0,
                         const std::vector<double>& grid) {
    if (grid.empty()) throw InvalidState("ode_propagate: empty grid");
    for (std::size_t k = 1; k < grid.size(); ++k) {
        if (grid[k] <= grid[k - 1]) throw InvalidState("ode_propagate: grid not ascending");
    }

    TimeSeries out;
    out.times = grid;
    out.states.reserve(grid.size());
    out.states.push_back(rho0.matrix());

    ComplexMatrix rho = rho0.matrix();
    double cached_t = grid.front();
    Superoperator cached_gen = generator(cached_t);

    for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const double t = grid[k];
        const double h = grid[k + 1] - t;

        const Superoperator& g1 = (cached_t == t) ? cached_gen : (cached_gen = generator(t), cached_gen);
        const ComplexMatrix k1 = g1.apply(rho);
        const Superoperator g2 = generator(t + 0.5 * h);
        const ComplexMatrix k2 = g2.apply(rho + (0.5 * h) * k1);
        const ComplexMatrix k3 = g2.apply(rho + (0.5 * h) * k2);
        cached_gen = generator(t + h);
        cached_t = t + h;
        const ComplexMatrix k4 = cached_gen.apply(rho + h * k3);

        rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!all_finite(rho)) {
            throw NonFiniteState("ode_propagate: non-finite state at t = " +
                                 std::to_string(t + h));
        }
        out.states.push_back(rho);
    }
    return out;
}

namespace {

void require_uniform(const std::vector<double>& grid) {
    if (grid.size() < 2) return;
    const double h = grid[1] - grid[0];
    if (h <= 0.0) throw NonUniformGrid("volterra_solve: grid not ascending");
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double step = grid[k] - grid[k - 1];
        if (std::abs(step - h) > 1e-9 * std::abs(h)) {
            throw NonUniformGrid("volterra_solve: non-uniform step at index " +
                                 std::to_string(k));
        }
    }
}

} // namespace

std::vector<Complex> volterra_solve(Complex a,
                                    const std::function<Complex(double, double)>& kernel,
                                    Complex u0, const std::vector<double>& grid) {
    require_uniform(grid);
    const std::size_t n_pts = grid.size();
    std::vector<Complex> u(n_pts);
    if (n_pts == 0) return u;
    u[0] = u0;
    if (n_pts == 1) return u;
    const double h = grid[1] - grid[0];
    const double t0 = grid[0];

    // trapezoid over the stored history points 0..n at evaluation time te
    auto history_integral = [&](double te, std::size_t n) {
        Complex acc(0.0, 0.0);
        if (n == 0) return acc;
        acc += 0.5 * kernel(te, t0) * u[0];
        for (std::size_t m = 1; m < n; ++m) acc += kernel(te, grid[m]) * u[m];
        acc += 0.5 * kernel(te, grid[n]) * u[n];
        return h * acc;
    };

    for (std::size_t n = 0; n + 1 < n_pts; ++n) {
        const double tn = grid[n];
        const double tm = tn + 0.5 * h;
        const double tp = grid[n + 1];

        const Complex hist_n = history_integral(tn, n);
        const Complex hist_m = history_integral(tm, n);
        const Complex hist_p = history_integral(tp, n);

        const Complex k1 = a * u[n] - hist_n;

        // half panel [tn, tm] closed with the developing stage value
        auto deriv_mid = [&](Complex u_stage) {
            const Complex tail = 0.25 * h * (kernel(tm, tn) * u[n] + kernel(tm, tm) * u_stage);
            return a * u_stage - (hist_m + tail);
        };
        const Complex k2 = deriv_mid(u[n] + 0.5 * h * k1);
        const Complex k3 = deriv_mid(u[n] + 0.5 * h * k2);

        const Complex u4 = u[n] + h * k3;
        // hist_p half-weights tn; the [tn, tp] panel restores the full
        // interior weight there and half-weights the new endpoint
        const Complex tail4 = 0.5 * h * (kernel(tp, tn) * u[n] + kernel(tp, tp) * u4);
        const Complex k4 = a * u4 - (hist_p + tail4);

        u[n + 1] = u[n] + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return u;
}

std::vector<double> uniform_grid(double t_max, double dt) {
    if (dt <= 0.0 || t_max < 0.0) throw InvalidState("uniform_grid: need dt > 0, t_max >= 0");
    const auto n = static_cast<std::size_t>(std::llround(t_max / dt));
    std::vector<double> grid(n + 1);
    for (std::size_t k = 0; k <= n; ++k) grid[k] = static_cast<double>(k) * dt;
    return grid;
}

} // namespace rgqme
