// linalg.hpp — Hermitian eigendecomposition, matrix exponential, PSD square root

#pragma once

#include "rgqme/errors.hpp"
#include "rgqme/types.hpp"

namespace rgqme {

struct HermEig {
    RealVector values;      // ascending
    ComplexMatrix vectors;  // unitary, columns are eigenvectors
};

// Diagonalize a Hermitian matrix. Throws NonHermitianInput if the defect
// exceeds tol, NoConvergence if the backend iteration fails.
HermEig herm_eig(const ComplexMatrix& h, double tol = kHermTol);

// Matrix exponential of a square complex matrix (Pade scaling-and-squaring).
ComplexMatrix expm(const ComplexMatrix& m);

// Hermitian PSD square root. Eigenvalues in [-clamp_tol, 0) are clamped to
// zero; anything below -clamp_tol throws NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& rho, double clamp_tol = 1e-8);

// Clamp negative eigenvalues of a Hermitian matrix to zero. Records the most
// negative eigenvalue encountered in *min_eig when non-null.
ComplexMatrix psd_clamp(const ComplexMatrix& rho, double clamp_tol,
                        double* min_eig = nullptr);

// Absolute tolerance for grouping nearby eigenvalues into one eigenspace.
double eig_group_tol(const RealVector& values);

} // namespace rgqme
