// solvers.hpp — trajectory solvers for the second-order master equations

#pragma once

#include <vector>

#include "rgqme/density.hpp"
#include "rgqme/master.hpp"
#include "rgqme/timeseries.hpp"

namespace rgqme::qme {

// rho(t) = devec(expm(L t) vec(rho0)): exact propagation of the
// time-independent RWA generator, no stepping error.
TimeSeries rwa_solve(const RWAGenerator& gen, const DensityMatrix& rho0,
                     const std::vector<double>& grid);

// RK4 integration of the time-local TCL2 equation.
TimeSeries tcl2_solve(const GeneratorContext& ctx, const DensityMatrix& rho0,
                      const std::vector<double>& grid);

// Time-convolution equation: the same reduced kernel applied to the
// historical state, trapezoid in the memory integral, Heun marching
// (second order overall). Requires a uniform grid.
TimeSeries tc2_solve(const GeneratorContext& ctx, const DensityMatrix& rho0,
                     const std::vector<double>& grid);

// RG-improved reduced map: rho(t) = (I + Phi(t)) rho_RWA(t). Trace and
// Hermiticity are preserved; positivity is not guaranteed (worst eigenvalue
// is recorded in the series metadata).
TimeSeries rg_map_solve(const GeneratorContext& ctx, const DensityMatrix& rho0,
                        const std::vector<double>& grid);

// Conjugates every state by e^{-+ i H t} to switch pictures; no-op when the
// series is already in the requested picture.
TimeSeries to_picture(const TimeSeries& series, const ComplexMatrix& hamiltonian,
                      Picture target);

// Validates states (Hermiticity, trace, eigenvalue floor), records the worst
// eigenvalue in metadata["min_eigenvalue"], throws InvalidState beyond floor.
void validate_series(TimeSeries& series, double eig_floor);

} // namespace rgqme::qme
