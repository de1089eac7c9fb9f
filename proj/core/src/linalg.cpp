#include "rgqme/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace rgqme {

HermEig herm_eig(const ComplexMatrix& h, double tol) {
    if (h.rows() != h.cols()) {
        throw NonSquare("herm_eig: matrix is " + std::to_string(h.rows()) + "x" +
                        std::to_string(h.cols()));
    }
    const double defect = hermiticity_defect(h);
    if (defect > tol) {
        throw NonHermitianInput("herm_eig: hermiticity defect " + std::to_string(defect));
    }
    // Symmetrize so the solver sees an exactly Hermitian input.
    ComplexMatrix hs = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hs);
    if (solver.info() != Eigen::Success) {
        throw NoConvergence("herm_eig: eigensolver did not converge");
    }
    return HermEig{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix expm(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw NonSquare("expm: matrix is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()));
    }
    return m.exp();
}

ComplexMatrix psd_clamp(const ComplexMatrix& rho, double clamp_tol, double* min_eig) {
    const HermEig eig = herm_eig(rho, 1e-8);
    const double lo = eig.values.size() ? eig.values.minCoeff() : 0.0;
    if (min_eig) *min_eig = lo;
    if (lo < -clamp_tol) {
        throw NotPSD("psd_clamp: eigenvalue " + std::to_string(lo) +
                     " below -clamp_tol " + std::to_string(clamp_tol));
    }
    if (lo >= 0.0) return 0.5 * (rho + rho.adjoint());
    RealVector clamped = eig.values.cwiseMax(0.0);
    return eig.vectors * clamped.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& rho, double clamp_tol) {
    const HermEig eig = herm_eig(rho, 1e-8);
    const double lo = eig.values.size() ? eig.values.minCoeff() : 0.0;
    if (lo < -clamp_tol) {
        throw NotPSD("psd_sqrt: eigenvalue " + std::to_string(lo) +
                     " below -clamp_tol " + std::to_string(clamp_tol));
    }
    RealVector root = eig.values.cwiseMax(0.0).cwiseSqrt();
    return eig.vectors * root.asDiagonal() * eig.vectors.adjoint();
}

double eig_group_tol(const RealVector& values) {
    const double scale = values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
    return std::max(1e-9 * scale, 1e-12);
}

} // namespace rgqme
