#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rgqme/linalg.hpp"
#include "rgqme/rg_linear.hpp"
#include "test_util.hpp"

using namespace rgqme;
using namespace rgqme::rglin;

namespace {

// independent RK4 oracle for x'' + x = -eps x'
std::pair<double, double> damped_oscillator_rk4(double epsilon, double x0, double v0,
                                                double t_end, double dt) {
    double x = x0, v = v0, t = 0.0;
    auto ax = [epsilon](double xx, double vv) { return -xx - epsilon * vv; };
    const auto steps = static_cast<long>(std::llround(t_end / dt));
    for (long k = 0; k < steps; ++k) {
        const double k1x = v, k1v = ax(x, v);
        const double k2x = v + 0.5 * dt * k1v, k2v = ax(x + 0.5 * dt * k1x, v + 0.5 * dt * k1v);
        const double k3x = v + 0.5 * dt * k2v, k3v = ax(x + 0.5 * dt * k2x, v + 0.5 * dt * k2v);
        const double k4x = v + dt * k3v, k4v = ax(x + dt * k3x, v + dt * k3v);
        x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        t += dt;
    }
    return {x, v};
}

} // namespace

TEST_CASE("secular_generator keeps everything when G commutes with F") {
    auto gen = testutil::rng(51);
    // F normal with distinct eigenvalues; any polynomial in F commutes
    const ComplexMatrix u = testutil::random_unitary(3, gen);
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d(0, 0) = Complex(0.0, 1.0);
    d(1, 1) = Complex(0.0, -1.0);
    d(2, 2) = Complex(0.0, 2.5);
    LinearPerturbedSystem sys;
    sys.drift = u * d * u.adjoint();
    sys.perturbation = u * (d * d) * u.adjoint();
    sys.epsilon = 0.05;
    CHECK(max_abs(secular_generator(sys) - sys.epsilon * sys.perturbation) < 1e-10);
}

TEST_CASE("secular_generator drops fully off-resonant perturbations") {
    LinearPerturbedSystem sys;
    sys.drift = ComplexMatrix::Zero(2, 2);
    sys.drift(0, 0) = Complex(0.0, 1.0);
    sys.drift(1, 1) = Complex(0.0, -1.0);
    sys.perturbation = ComplexMatrix::Zero(2, 2);
    sys.perturbation(0, 1) = 1.0;
    sys.perturbation(1, 0) = Complex(0.0, 2.0);
    sys.epsilon = 0.1;
    CHECK(max_abs(secular_generator(sys)) < 1e-12);
}

TEST_CASE("secular_generator equals the time average over the resonant torus") {
    auto gen = testutil::rng(53);
    // diagonal drift with commensurate imaginary spectrum; period 2 pi
    ComplexMatrix f = ComplexMatrix::Zero(3, 3);
    f(0, 0) = Complex(0.0, 1.0);
    f(1, 1) = Complex(0.0, -1.0);
    f(2, 2) = Complex(0.0, 2.0);
    LinearPerturbedSystem sys{f, testutil::random_matrix(3, gen), 0.2};

    const int n = 4096;
    const double period = 2.0 * std::numbers::pi;
    ComplexMatrix avg = ComplexMatrix::Zero(3, 3);
    for (int k = 0; k < n; ++k) {
        const double s = period * k / n;
        ComplexMatrix phase_neg = ComplexMatrix::Zero(3, 3), phase_pos = phase_neg;
        for (int m = 0; m < 3; ++m) {
            phase_neg(m, m) = std::exp(-f(m, m) * s);
            phase_pos(m, m) = std::exp(f(m, m) * s);
        }
        avg += phase_neg * (sys.epsilon * sys.perturbation) * phase_pos;
    }
    avg /= static_cast<double>(n);
    CHECK(max_abs(avg - secular_generator(sys)) < 1e-8);
}

TEST_CASE("secular_generator commutes with normal drifts") {
    auto gen = testutil::rng(59);
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::Index d = 2 + (trial % 5);
        const ComplexMatrix u = testutil::random_unitary(d, gen);
        ComplexMatrix diag = ComplexMatrix::Zero(d, d);
        std::normal_distribution<double> dist(0.0, 1.0);
        for (Eigen::Index k = 0; k < d; ++k) diag(k, k) = Complex(dist(gen), dist(gen));
        LinearPerturbedSystem sys{u * diag * u.adjoint(), testutil::random_matrix(d, gen),
                                  0.1};
        const ComplexMatrix p = secular_generator(sys);
        CHECK(max_abs(sys.drift * p - p * sys.drift) < 1e-9);
    }
}

TEST_CASE("secular_generator is idempotent under re-projection") {
    auto gen = testutil::rng(61);
    ComplexMatrix f = ComplexMatrix::Zero(4, 4);
    f(0, 0) = Complex(0.0, 1.0);
    f(1, 1) = Complex(0.0, 1.0);  // degenerate pair
    f(2, 2) = Complex(0.0, -1.0);
    f(3, 3) = Complex(-0.5, 0.7);
    LinearPerturbedSystem sys{f, testutil::random_matrix(4, gen), 1.0};
    const ComplexMatrix p = secular_generator(sys);
    LinearPerturbedSystem again{f, p, 1.0};
    CHECK(max_abs(secular_generator(again) - p) < 1e-12);
}

TEST_CASE("rg_improved_solution is exact at epsilon = 0") {
    auto gen = testutil::rng(67);
    LinearPerturbedSystem sys = oscillator_system(0.0);
    const ComplexVector y0 = testutil::random_vector(2, gen);
    const auto traj = rg_improved_solution(sys, y0, {0.0, 0.5, 1.0, 2.0});
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        const ComplexVector expected = expm(sys.drift * traj.times[k]) * y0;
        CHECK(max_abs(ComplexMatrix(traj.states[k] - expected)) < 1e-12);
    }
}

TEST_CASE("rg_improved_solution damps the oscillator envelope at rate eps/2") {
    const double eps = 0.1;
    LinearPerturbedSystem sys = oscillator_system(eps);
    // the resonant flow generator has both eigenvalues at -eps/2
    const ComplexMatrix p = secular_generator(sys);
    const HermEig he = herm_eig(ComplexMatrix(-(p + p.adjoint()) / 2.0));
    CHECK(he.values(0) == doctest::Approx(eps / 2).epsilon(1e-9));
    CHECK(he.values(1) == doctest::Approx(eps / 2).epsilon(1e-9));

    ComplexVector y0(2);
    y0 << 1.0, 0.0;
    const auto traj = rg_improved_solution(sys, y0, {0.0, 20.0});
    const double envelope = std::sqrt(std::norm(traj.states[1](0)) +
                                      std::norm(traj.states[1](1)));
    CHECK(envelope == doctest::Approx(std::exp(-1.0)).epsilon(0.1));
}

TEST_CASE("matrix RG pipeline matches the closed-form oscillator solution") {
    const double eps = 0.1;
    const OscillatorParams p{eps, 1.0, std::numbers::pi / 2};
    LinearPerturbedSystem sys = oscillator_system(eps);
    ComplexVector y0(2);
    y0 << p.amplitude * std::sin(p.phase), p.amplitude * std::cos(p.phase);

    std::vector<double> grid;
    for (double t = 0.0; t <= 1.0 / eps + 1e-9; t += 0.02) grid.push_back(t);
    const auto traj = rg_improved_solution(sys, y0, grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        worst = std::max(worst,
                         std::abs(traj.states[k](0).real() - oscillator_rg(p, grid[k])));
    }
    CHECK(worst <= 5.0 * eps * eps);
}

TEST_CASE("oscillator_exact matches an independent RK4 integration") {
    const double eps = 0.1, amp = 1.0, theta = std::numbers::pi / 2;
    // exact solution fixes the initial data; integrate the same ODE from there
    const double x0 = oscillator_exact(eps, amp, theta, 0.0, 0.0);
    const double half = 0.5 * eps;
    const double omega = std::sqrt(1.0 - half * half);
    const double v0 = amp * (-half * std::sin(theta) + omega * std::cos(theta));
    const auto [x20, v20] = damped_oscillator_rk4(eps, x0, v0, 20.0, 1e-3);
    CHECK(std::abs(oscillator_exact(eps, amp, theta, 0.0, 20.0) - x20) < 1e-6);
    CHECK(oscillator_exact(eps, amp, theta, 0.0, 20.0) ==
          doctest::Approx(std::exp(-1.0) *
                          std::sin(std::sqrt(1.0 - 0.0025) * 20.0 + theta))
              .epsilon(1e-12));
}

TEST_CASE("oscillator_naive reduces to the free solution at t = tau and eps = 0") {
    CHECK(oscillator_naive(0.3, 2.0, 0.4, 5.0, 5.0) ==
          doctest::Approx(2.0 * std::sin(5.0 + 0.4)));
    CHECK(oscillator_naive(0.0, 2.0, 0.4, 0.0, 7.0) ==
          doctest::Approx(2.0 * std::sin(7.0 + 0.4)));
}

TEST_CASE("oscillator_naive blows up while oscillator_rg stays close") {
    const double eps = 0.1;
    const OscillatorParams p{eps, 1.0, std::numbers::pi / 2};

    double worst_rg = 0.0;
    for (double t = 0.0; t <= 50.0; t += 0.01) {
        worst_rg = std::max(worst_rg, std::abs(oscillator_rg(p, t) -
                                               oscillator_exact(eps, 1.0, p.phase, 0.0, t)));
    }
    CHECK(worst_rg <= 0.02);

    // secular blow-up with theta = 0 (the documented demonstration)
    double worst_naive = 0.0;
    for (double t = 0.0; t <= 50.0; t += 0.01) {
        worst_naive = std::max(worst_naive, std::abs(oscillator_naive(eps, 1.0, 0.0, 0.0, t) -
                                                     oscillator_exact(eps, 1.0, 0.0, 0.0, t)));
    }
    CHECK(worst_naive >= 0.5);

    // the gap grows with time
    double prev = 0.0;
    for (double t : {10.0, 20.0, 40.0}) {
        double local = 0.0;
        for (double s = t - 1.0; s <= t + 1.0; s += 0.01) {
            local = std::max(local, std::abs(oscillator_naive(eps, 1.0, 0.0, 0.0, s) -
                                             oscillator_exact(eps, 1.0, 0.0, 0.0, s)));
        }
        CHECK(local > prev);
        prev = local;
    }
}

TEST_CASE("ill-conditioned drifts are rejected") {
    LinearPerturbedSystem sys;
    sys.drift = ComplexMatrix::Zero(2, 2);
    sys.drift(0, 1) = 1.0;  // Jordan block, not diagonalizable
    sys.perturbation = ComplexMatrix::Identity(2, 2);
    sys.epsilon = 0.1;
    CHECK_THROWS_AS(secular_generator(sys), NotDiagonalizable);
}
