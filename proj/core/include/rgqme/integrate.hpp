// integrate.hpp — fixed-step RK4 propagation and a Volterra integro-differential solver

#pragma once

#include <functional>
#include <vector>

#include "rgqme/density.hpp"
#include "rgqme/superop.hpp"
#include "rgqme/timeseries.hpp"

namespace rgqme {

using GeneratorFn = std::function<Superoperator(double)>;

// Classical RK4 over the given grid: the step from t to t+h evaluates the
// generator at t, t+h/2 and t+h. The grid need not be uniform. Throws
// NonFiniteState if an entry stops being finite.
TimeSeries ode_propagate(const GeneratorFn& generator, const DensityMatrix& rho0,
                         const std::vector<double>& grid);

// Solves u'(t) = a u(t) - int_0^t K(t,s) u(s) ds on a uniform grid by RK4
// with trapezoidal quadrature over the stored history (second order overall).
std::vector<Complex> volterra_solve(Complex a,
                                    const std::function<Complex(double, double)>& kernel,
                                    Complex u0, const std::vector<double>& grid);

// Uniform grid helper: n+1 points 0, dt, ..., n*dt.
std::vector<double> uniform_grid(double t_max, double dt);

} // namespace rgqme
