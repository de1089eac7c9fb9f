#include <doctest.h>

#include <cmath>

#include "rgqme/integrate.hpp"
#include "rgqme/linalg.hpp"
#include "test_util.hpp"

using namespace rgqme;

namespace {

ComplexMatrix pauli_z() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

ComplexMatrix pauli_x() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

double rabi_max_error(double dt) {
    const Superoperator gen = Superoperator::commutator(pauli_z());
    ComplexVector plus_x(2);
    plus_x << 1.0, 1.0;
    const DensityMatrix rho0 = DensityMatrix::pure(plus_x);
    const TimeSeries series =
        ode_propagate([&](double) { return gen; }, rho0, uniform_grid(2.0, dt));
    double worst = 0.0;
    for (std::size_t k = 0; k < series.size(); ++k) {
        const double sx = (pauli_x() * series.states[k]).trace().real();
        worst = std::max(worst, std::abs(sx - std::cos(2.0 * series.times[k])));
    }
    return worst;
}

} // namespace

TEST_CASE("ode_propagate keeps the state constant for a zero generator") {
    auto gen = testutil::rng(41);
    const DensityMatrix rho0 =
        DensityMatrix::validated(testutil::random_density(3, gen));
    const TimeSeries series = ode_propagate(
        [](double) { return Superoperator::zero(3); }, rho0, uniform_grid(1.0, 0.1));
    for (const auto& s : series.states) CHECK(max_abs(s - rho0.matrix()) == 0.0);
}

TEST_CASE("ode_propagate reproduces Rabi precession") {
    CHECK(rabi_max_error(1e-3) < 1e-6);
}

TEST_CASE("ode_propagate is fourth order in dt") {
    const double e1 = rabi_max_error(4e-3);
    const double e2 = rabi_max_error(2e-3);
    const double ratio = e1 / e2;
    CHECK(ratio > 10.0);
    CHECK(ratio < 26.0);
}

TEST_CASE("volterra_solve without memory reduces to the ODE") {
    const auto u = volterra_solve(
        Complex(-1.0, 0.0), [](double, double) { return Complex(0.0, 0.0); },
        Complex(1.0, 0.0), uniform_grid(1.0, 1e-3));
    CHECK(std::abs(u.back() - std::exp(-1.0)) < 1e-6);
}

TEST_CASE("volterra_solve with constant kernel gives a cosine") {
    const double c = 2.0;
    const auto grid = uniform_grid(5.0, 1e-3);
    const auto u = volterra_solve(
        Complex(0.0, 0.0), [c](double, double) { return Complex(c, 0.0); },
        Complex(1.0, 0.0), grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        worst = std::max(worst, std::abs(u[k] - std::cos(std::sqrt(c) * grid[k])));
    }
    CHECK(worst < 1e-5);
}

namespace {

// two-pole closed form for K(t,s) = g e^{-kappa (t-s)}: from
// u' = a u - g z, z' = u - kappa z the roots give
// u = e^{(a-kappa)t/2} [cosh(D t/2) + ((a+kappa)/D) sinh(D t/2)],
// D = sqrt((a+kappa)^2 - 4 g)
Complex exp_kernel_reference(Complex a, double kappa, double g, double t) {
    const Complex s = a + kappa;
    const Complex d = std::sqrt(s * s - 4.0 * g);
    return std::exp(0.5 * (a - kappa) * t) *
           (std::cosh(0.5 * d * t) + (s / d) * std::sinh(0.5 * d * t));
}

double exp_kernel_error(double dt) {
    const Complex a(-0.3, 0.0);
    const double kappa = 1.2, g = 0.5;
    const auto grid = uniform_grid(5.0, dt);
    const auto u = volterra_solve(
        a, [&](double t, double s) { return Complex(g * std::exp(-kappa * (t - s)), 0.0); },
        Complex(1.0, 0.0), grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        worst = std::max(worst, std::abs(u[k] - exp_kernel_reference(a, kappa, g, grid[k])));
    }
    return worst;
}

} // namespace

TEST_CASE("volterra_solve matches the exponential-kernel closed form") {
    CHECK(exp_kernel_error(1e-3) < 1e-6);
}

TEST_CASE("volterra_solve converges at second order or better") {
    const double e1 = exp_kernel_error(4e-3);
    const double e2 = exp_kernel_error(2e-3);
    CHECK(e1 / e2 > 3.0);
}

TEST_CASE("volterra_solve rejects non-uniform grids") {
    std::vector<double> grid = {0.0, 0.1, 0.25, 0.3};
    CHECK_THROWS_AS(volterra_solve(
                        Complex(0.0, 0.0),
                        [](double, double) { return Complex(0.0, 0.0); },
                        Complex(1.0, 0.0), grid),
                    NonUniformGrid);
}
