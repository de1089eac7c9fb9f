// types.hpp — dense complex matrix aliases and elementwise predicates

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace rgqme {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermTol = 1e-10;

// max|entry| norm used by most tolerance checks
inline double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool all_finite(const ComplexMatrix& m) {
    return m.allFinite();
}

inline double hermiticity_defect(const ComplexMatrix& m) {
    return max_abs(m - m.adjoint());
}

inline bool is_hermitian(const ComplexMatrix& m, double tol = kHermTol) {
    return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

} // namespace rgqme
