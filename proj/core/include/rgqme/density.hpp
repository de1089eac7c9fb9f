// density.hpp — validated density matrices

#pragma once

#include "rgqme/errors.hpp"
#include "rgqme/types.hpp"

namespace rgqme {

// Hermitian, unit-trace, eigenvalues >= -eig_floor. The default floor admits
// only rounding noise; perturbative solvers pass a looser floor and record
// the worst eigenvalue they actually produced.
class DensityMatrix {
public:
    DensityMatrix() = default;

    // Validates invariants; throws InvalidState on violation.
    static DensityMatrix validated(ComplexMatrix m, double eig_floor = 1e-8);

    // Validation result without construction; returns the most negative
    // eigenvalue through *min_eig.
    static bool check(const ComplexMatrix& m, double eig_floor, double* min_eig = nullptr);

    static DensityMatrix pure(const ComplexVector& psi);
    static DensityMatrix maximally_mixed(Eigen::Index dim);

    Eigen::Index dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
    ComplexMatrix matrix_;
};

} // namespace rgqme
