// fidelity.hpp — Uhlmann fidelity with declared eigenvalue clamping

#pragma once

#include "rgqme/types.hpp"

namespace rgqme::harness {

struct ClampLog {
    int events = 0;                 // inputs that needed clamping
    double worst_eigenvalue = 0.0;  // most negative eigenvalue seen
};

// F(rho1, rho2) = Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)). Eigenvalues in
// [-clamp_tol, 0) are clamped to zero (and logged); below -clamp_tol throws
// NotPSD. Symmetric in its arguments to 1e-10.
double fidelity(const ComplexMatrix& rho1, const ComplexMatrix& rho2,
                double clamp_tol = 1e-8, ClampLog* log = nullptr);

} // namespace rgqme::harness
