#include "rgqme/spin_boson.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rgqme/integrate.hpp"
#include "rgqme/solvers.hpp"
#include "rgqme/superop.hpp"

namespace rgqme::spin_boson {

namespace {

const Complex kImag(0.0, 1.0);

ComplexMatrix number_op() {
    ComplexMatrix n = ComplexMatrix::Zero(2, 2);
    n(0, 0) = 1.0;  // sigma_+ sigma_- = |+><+|
    return n;
}

} // namespace

Complex Params::pole_split() const {
    const double a = alpha_abs();
    const double l2 = lambda * lambda;
    return std::sqrt(Complex(a * a - 2.0 * l2 * a, 0.0));
}

ComplexMatrix sigma_plus() {
    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    s(0, 1) = 1.0;
    return s;
}

ComplexMatrix sigma_minus() {
    ComplexMatrix s = ComplexMatrix::Zero(2, 2);
    s(1, 0) = 1.0;
    return s;
}

Complex f_kernel(const Params& p, double t) {
    const double a = p.alpha_abs();
    return 0.5 * a * std::exp(-(a + kImag * p.delta_abs()) * t);
}

Complex u_closed_form(const Amplitude& a, double t) {
    const Params& p = a.params;
    const double al = p.alpha_abs();
    const Complex d = p.pole_split();
    const double sign = a.variant == SignVariant::plus ? 1.0 : -1.0;
    const Complex envelope = std::exp(-(al + 2.0 * kImag * p.delta_abs()) * t / 2.0);
    const Complex x = 0.5 * d * t;
    if (std::abs(x) < 1e-4) {
        // d -> 0: cosh -> 1 + x^2/2, (alpha/d) sinh(dt/2) -> (alpha t/2)(1 + x^2/6)
        const Complex bracket =
            1.0 + 0.5 * x * x + sign * (0.5 * al * t) * (1.0 + x * x / 6.0);
        return envelope * bracket;
    }
    const Complex bracket = std::cosh(x) + sign * (al / d) * std::sinh(x);
    return envelope * bracket;
}

Complex u_log_derivative(const Amplitude& a, double t) {
    const Params& p = a.params;
    const double al = p.alpha_abs();
    const Complex d = p.pole_split();
    const double sign = a.variant == SignVariant::plus ? 1.0 : -1.0;
    const Complex x = 0.5 * d * t;
    Complex bracket, dbracket;
    if (std::abs(x) < 1e-4) {
        bracket = 1.0 + 0.5 * x * x + sign * (0.5 * al * t) * (1.0 + x * x / 6.0);
        dbracket = 0.25 * d * d * t * (1.0 + x * x / 6.0) +
                   sign * 0.5 * al * (1.0 + 0.5 * x * x);
    } else {
        bracket = std::cosh(x) + sign * (al / d) * std::sinh(x);
        dbracket = 0.5 * d * std::sinh(x) + sign * 0.5 * al * std::cosh(x);
    }
    return -(al + 2.0 * kImag * p.delta_abs()) / 2.0 + dbracket / bracket;
}

std::vector<Complex> amplitude_oracle(const Params& p, const std::vector<double>& grid) {
    const double l2 = p.lambda * p.lambda;
    auto kernel = [&p, l2](double t, double s) { return l2 * f_kernel(p, t - s); };
    return volterra_solve(-kImag * p.delta_abs(), kernel, Complex(1.0, 0.0), grid);
}

namespace {

TimeSeries map_from_amplitude(const std::vector<Complex>& u,
                              const std::vector<double>& grid, const DensityMatrix& rho0,
                              Picture picture, const Params& p,
                              const std::string& method) {
    if (rho0.dim() != 2) throw DimMismatch(method + ": state must be 2x2");
    TimeSeries out;
    out.times = grid;
    out.states.reserve(grid.size());
    out.picture = Picture::schroedinger;
    out.metadata["method"] = method;
    const Complex p0 = rho0.matrix()(0, 0);
    const Complex c0 = rho0.matrix()(0, 1);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
        const double pop = std::norm(u[k]) * p0.real();
        rho(0, 0) = pop;
        rho(0, 1) = u[k] * c0;
        rho(1, 0) = std::conj(rho(0, 1));
        rho(1, 1) = 1.0 - pop;
        out.states.push_back(std::move(rho));
    }
    ComplexMatrix h = Complex(0.0, 0.0) * number_op();
    h(0, 0) = p.delta_abs();
    TimeSeries converted = qme::to_picture(out, h, picture);
    qme::validate_series(converted, 1e-8);
    return converted;
}

} // namespace

TimeSeries exact_map(const Amplitude& a, const DensityMatrix& rho0,
                     const std::vector<double>& grid, Picture picture) {
    std::vector<Complex> u(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) u[k] = u_closed_form(a, grid[k]);
    TimeSeries out = map_from_amplitude(u, grid, rho0, picture, a.params, "exact");
    out.metadata["sign_variant"] = to_string(a.variant);
    return out;
}

TimeSeries exact_qme_solve(const Amplitude& a, const DensityMatrix& rho0,
                           const std::vector<double>& grid) {
    const ComplexMatrix n = number_op();
    const Superoperator damp = Complex(2.0, 0.0) *
                                   Superoperator::sandwich(sigma_minus(), sigma_plus()) -
                               (Superoperator::left_mult(n) + Superoperator::right_mult(n));
    auto generator = [&](double t) {
        const Complex r = u_log_derivative(a, t);
        // i Im(r) [n, rho] - Re(r) (2 s- rho s+ - {n, rho})
        Superoperator g = Superoperator::commutator(-r.imag() * n);
        g += Complex(-r.real(), 0.0) * damp;
        return g;
    };
    TimeSeries out = ode_propagate(generator, rho0, grid);
    out.picture = Picture::schroedinger;
    out.metadata["method"] = "exact-qme";
    return out;
}

TimeSeries tcl_literal(const Params& p, const DensityMatrix& rho0,
                       const std::vector<double>& grid, Picture picture) {
    if (rho0.dim() != 2) throw DimMismatch("tcl_literal: state must be 2x2");
    const double l2 = p.lambda * p.lambda;
    const double al = p.alpha_abs();
    const ComplexMatrix n = number_op();
    const Superoperator decay_term =
        Superoperator::sandwich(sigma_minus(), sigma_plus()) - Superoperator::left_mult(n);
    const Superoperator decay_conj = decay_term.adjoint_conjugate();
    const bool schroedinger = picture == Picture::schroedinger;

    auto generator = [&, schroedinger](double t) {
        // int_0^t f(s) e^{+i Delta s} ds = (1 - e^{-alpha t}) / 2
        const Complex weight(0.5 * (1.0 - std::exp(-al * t)), 0.0);
        Superoperator g = (l2 * weight) * decay_term;
        g += (l2 * std::conj(weight)) * decay_conj;
        if (schroedinger) g += Superoperator::commutator(p.delta_abs() * n);
        return g;
    };
    TimeSeries out = ode_propagate(generator, rho0, grid);
    out.picture = picture;
    out.metadata["method"] = "tcl-literal";
    qme::validate_series(out, 1e-2);
    return out;
}

BathWindow default_window(const Params& p) {
    return {p.delta_abs() - 100.0 * p.alpha_abs(), p.delta_abs() + 100.0 * p.alpha_abs()};
}

DiscretizedBath discretize_bath(const Params& p, std::size_t n_modes,
                                const BathWindow& window, double kernel_tol,
                                double t_check) {
    if (n_modes < 2 || window.omega_max <= window.omega_min) {
        throw InvalidState("discretize_bath: bad window or mode count");
    }
    const double l2 = p.lambda * p.lambda;
    const double al = p.alpha_abs();
    const double de = p.delta_abs();
    const double dw = (window.omega_max - window.omega_min) / static_cast<double>(n_modes);

    DiscretizedBath bath;
    bath.omegas.resize(n_modes);
    bath.weights.resize(n_modes);
    for (std::size_t k = 0; k < n_modes; ++k) {
        const double w = window.omega_min + (static_cast<double>(k) + 0.5) * dw;
        bath.omegas[k] = w;
        const double lorentz = (al * al / (2.0 * std::numbers::pi)) /
                               ((w - de) * (w - de) + al * al);
        bath.weights[k] = l2 * lorentz * dw;
    }

    // kernel reproduction check against lambda^2 f(t)
    if (t_check < 0.0) t_check = 4.0 / al;
    const double f0 = std::abs(l2 * f_kernel(p, 0.0));
    const int samples = 256;
    double worst = 0.0;
    for (int s = 0; s <= samples; ++s) {
        const double t = t_check * s / samples;
        Complex acc(0.0, 0.0);
        for (std::size_t k = 0; k < n_modes; ++k) {
            acc += bath.weights[k] * std::exp(-kImag * bath.omegas[k] * t);
        }
        worst = std::max(worst, std::abs(acc - l2 * f_kernel(p, t)));
    }
    if (worst > kernel_tol * f0) {
        throw WindowTooNarrow("discretize_bath: kernel error " + std::to_string(worst) +
                              " exceeds " + std::to_string(kernel_tol * f0) +
                              " (window too narrow or too few modes)");
    }
    return bath;
}

std::vector<Complex> discretized_bath_amplitude(const Params& p, std::size_t n_modes,
                                                const BathWindow& window,
                                                const std::vector<double>& grid,
                                                double kernel_tol) {
    const DiscretizedBath bath = discretize_bath(p, n_modes, window, kernel_tol);
    const auto n = static_cast<Eigen::Index>(n_modes);

    ComplexVector g(n);
    ComplexVector omegas(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        g(k) = std::sqrt(bath.weights[k]);
        omegas(k) = bath.omegas[k];
    }

    // mode amplitudes in their own rotating frames: c_k = e^{-i w_k t} b_k.
    // The linear phases are applied exactly; RK4 only sees the envelope.
    const double de = p.delta_abs();
    Complex c0(1.0, 0.0);
    ComplexVector b = ComplexVector::Zero(n);

    double w_scale = std::max({std::abs(window.omega_min), std::abs(window.omega_max), de});
    if (w_scale <= 0.0) w_scale = 1.0;

    std::vector<Complex> u(grid.size());
    u[0] = c0;

    // phase(k) = e^{+i w_k t}, advanced incrementally
    ComplexVector phase = ComplexVector::Ones(n);
    double t_now = grid.front();

    auto rhs = [&](const Complex& c0_s, const ComplexVector& b_s, const ComplexVector& ph,
                   Complex& dc0, ComplexVector& db) {
        // dc0 = -i De c0 - i sum_k g_k conj(ph_k) b_k; db_k = -i g_k ph_k c0
        const Complex coupling = (g.array() * ph.array().conjugate() * b_s.array()).sum();
        dc0 = -kImag * (de * c0_s + coupling);
        db = (-kImag * c0_s) * (g.array() * ph.array()).matrix();
    };

    for (std::size_t step = 0; step + 1 < grid.size(); ++step) {
        const double t_target = grid[step + 1];
        const double span = t_target - t_now;
        // resolve the oscillatory forcing: per-substep phase change <= 0.2 rad
        int subs = std::max(1, static_cast<int>(std::ceil(span * w_scale / 0.2)));
        const double h = span / subs;

        ComplexVector half_fac(n), full_fac(n);
        for (Eigen::Index k = 0; k < n; ++k) {
            half_fac(k) = std::exp(kImag * omegas(k).real() * (0.5 * h));
            full_fac(k) = half_fac(k) * half_fac(k);
        }

        ComplexVector ph_mid(n), ph_end(n), db1(n), db2(n), db3(n), db4(n);
        Complex dc1, dc2, dc3, dc4;
        for (int s = 0; s < subs; ++s) {
            ph_mid = phase.cwiseProduct(half_fac);
            ph_end = phase.cwiseProduct(full_fac);

            rhs(c0, b, phase, dc1, db1);
            rhs(c0 + 0.5 * h * dc1, b + 0.5 * h * db1, ph_mid, dc2, db2);
            rhs(c0 + 0.5 * h * dc2, b + 0.5 * h * db2, ph_mid, dc3, db3);
            rhs(c0 + h * dc3, b + h * db3, ph_end, dc4, db4);

            c0 += (h / 6.0) * (dc1 + 2.0 * dc2 + 2.0 * dc3 + dc4);
            b += (h / 6.0) * (db1 + 2.0 * db2 + 2.0 * db3 + db4);
            phase = ph_end;
        }
        t_now = t_target;
        u[step + 1] = c0;
    }
    return u;
}

TimeSeries discretized_bath_oracle(const Params& p, std::size_t n_modes,
                                   const BathWindow& window, const DensityMatrix& rho0,
                                   const std::vector<double>& grid, Picture picture,
                                   double kernel_tol) {
    const std::vector<Complex> u =
        discretized_bath_amplitude(p, n_modes, window, grid, kernel_tol);
    TimeSeries out = map_from_amplitude(u, grid, rho0, picture, p, "bath-oracle");
    out.metadata["modes"] = std::to_string(n_modes);
    return out;
}

qme::SystemModel make_system(const Params& p) {
    qme::SystemModel sys;
    sys.hamiltonian = p.delta_abs() * number_op();
    sys.couplings = {sigma_plus(), sigma_minus()};
    sys.lambda = p.lambda;
    return sys;
}

qme::BathModel make_bath(const Params& p) {
    // V = sigma_+ (x) B + sigma_- (x) B^dag; in vacuum only <B(t) B^dag> = f(t)
    // survives, i.e. the (sigma_+, sigma_-) kernel entry
    std::vector<std::vector<std::vector<qme::ExpTerm>>> terms(
        2, std::vector<std::vector<qme::ExpTerm>>(2));
    terms[0][1].push_back(
        {Complex(0.5 * p.alpha_abs(), 0.0), Complex(p.alpha_abs(), p.delta_abs())});
    return qme::BathModel::exponential(std::move(terms), {1, 0});
}

} // namespace rgqme::spin_boson
