// spin_boson.hpp — exactly solvable two-level system in a vacuum boson field
// with a Lorentzian coupling kernel
//
// Basis convention: index 0 is the excited state |+>, index 1 the ground
// state |->. Rates and times are expressed in units of lambda^2 (matching the
// figure-axis convention); *_abs() accessors give absolute values.

#pragma once

#include <vector>

#include "rgqme/bath.hpp"
#include "rgqme/density.hpp"
#include "rgqme/system.hpp"
#include "rgqme/timeseries.hpp"

namespace rgqme::spin_boson {

struct Params {
    double delta = 10.0;  // level splitting, units of lambda^2
    double alpha = 1.0;   // kernel decay rate, units of lambda^2
    double lambda = 1.0;  // coupling strength

    double delta_abs() const { return delta * lambda * lambda; }
    double alpha_abs() const { return alpha * lambda * lambda; }
    // d = sqrt(alpha^2 - 2 lambda^2 alpha); imaginary below the crossover
    Complex pole_split() const;
};

// bracket sign of the (alpha/d) sinh term in u(t)
enum class SignVariant { plus, minus };

inline const char* to_string(SignVariant v) {
    return v == SignVariant::plus ? "plus" : "minus";
}

ComplexMatrix sigma_plus();
ComplexMatrix sigma_minus();

// f(t) = (alpha/2) exp(-(alpha + i Delta) t)
Complex f_kernel(const Params& p, double t);

struct Amplitude {
    Params params;
    SignVariant variant = SignVariant::plus;
};

// u(t) = e^{-(alpha + 2 i Delta) t / 2} [cosh(d t/2) +- (alpha/d) sinh(d t/2)];
// the removable d -> 0 singularity is series-expanded.
Complex u_closed_form(const Amplitude& a, double t);

// logarithmic derivative of u, used by the exact master equation
Complex u_log_derivative(const Amplitude& a, double t);

// Independent amplitude solution of u' = -i Delta u - lambda^2 int f(t-s) u(s) ds
// on a uniform grid (numeric_core Volterra solver).
std::vector<Complex> amplitude_oracle(const Params& p, const std::vector<double>& grid);

// Exact reduced dynamics as the amplitude-damping map driven by u(t).
TimeSeries exact_map(const Amplitude& a, const DensityMatrix& rho0,
                     const std::vector<double>& grid,
                     Picture picture = Picture::interaction);

// The same dynamics via RK4 integration of the exact master equation (the
// dual path that pins the coherence phase convention). Schroedinger picture.
TimeSeries exact_qme_solve(const Amplitude& a, const DensityMatrix& rho0,
                           const std::vector<double>& grid);

// The model-specific second-order time-local equation with its kernel weight
// int_0^t f(s) e^{+i Delta s} ds evaluated in closed form. The weight's phase
// sign is the one fixed by the amplitude and finite-bath oracles.
TimeSeries tcl_literal(const Params& p, const DensityMatrix& rho0,
                       const std::vector<double>& grid,
                       Picture picture = Picture::interaction);

struct BathWindow {
    double omega_min = 0.0;  // absolute units
    double omega_max = 0.0;
};

// Delta +- 100 alpha: wide enough that the truncated Lorentzian reproduces
// f(t) within the 1% kernel tolerance, and the mode spacing at the default
// N keeps the recurrence time beyond the simulated horizon.
BathWindow default_window(const Params& p);

struct DiscretizedBath {
    std::vector<double> omegas;   // mode frequencies (midpoint grid)
    std::vector<double> weights;  // |g_k|^2, includes lambda^2 and bin width
};

// Lorentzian-weighted discretization; throws WindowTooNarrow unless
// sum_k |g_k|^2 e^{-i w_k t} reproduces lambda^2 f(t) on [0, t_check] within
// kernel_tol * lambda^2 f(0).
DiscretizedBath discretize_bath(const Params& p, std::size_t n_modes,
                                const BathWindow& window, double kernel_tol = 1e-2,
                                double t_check = -1.0);

// Excited-state amplitude from the (N+1)-dimensional single-excitation
// Schroedinger equation (brute-force finite bath).
std::vector<Complex> discretized_bath_amplitude(const Params& p, std::size_t n_modes,
                                                const BathWindow& window,
                                                const std::vector<double>& grid,
                                                double kernel_tol = 1e-2);

TimeSeries discretized_bath_oracle(const Params& p, std::size_t n_modes,
                                   const BathWindow& window, const DensityMatrix& rho0,
                                   const std::vector<double>& grid,
                                   Picture picture = Picture::interaction,
                                   double kernel_tol = 1e-2);

// Bridges to the generic machinery: sigma_+ and sigma_- couplings with the
// single vacuum kernel C(t) = f(t) on the (sigma_+, sigma_-) pair.
qme::SystemModel make_system(const Params& p);
qme::BathModel make_bath(const Params& p);

} // namespace rgqme::spin_boson
