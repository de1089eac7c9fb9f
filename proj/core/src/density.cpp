#include "rgqme/density.hpp"

#include <cmath>
#include <string>

#include "rgqme/linalg.hpp"

namespace rgqme {

bool DensityMatrix::check(const ComplexMatrix& m, double eig_floor, double* min_eig) {
    if (m.rows() != m.cols() || m.rows() == 0) return false;
    if (!all_finite(m)) return false;
    if (hermiticity_defect(m) > 1e-10) return false;
    if (std::abs(m.trace().real() - 1.0) > 1e-10 || std::abs(m.trace().imag()) > 1e-10)
        return false;
    const HermEig eig = herm_eig(0.5 * (m + m.adjoint()), 1e-8);
    const double lo = eig.values.minCoeff();
    if (min_eig) *min_eig = lo;
    return lo >= -eig_floor;
}

DensityMatrix DensityMatrix::validated(ComplexMatrix m, double eig_floor) {
    double lo = 0.0;
    if (!check(m, eig_floor, &lo)) {
        throw InvalidState("DensityMatrix: invariant violation (min eigenvalue " +
                           std::to_string(lo) + ", floor " + std::to_string(eig_floor) + ")");
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
    const double n = psi.norm();
    if (n == 0.0) throw InvalidState("DensityMatrix::pure: zero vector");
    ComplexVector unit = psi / n;
    return DensityMatrix(unit * unit.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
    return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

} // namespace rgqme
