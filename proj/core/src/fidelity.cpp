#include "rgqme/fidelity.hpp"

#include <algorithm>
#include <limits>
#include <cmath>

#include "rgqme/errors.hpp"
#include "rgqme/linalg.hpp"

namespace rgqme::harness {

namespace {

ComplexMatrix clamp_logged(const ComplexMatrix& rho, double clamp_tol, ClampLog* log) {
    double lo = 0.0;
    ComplexMatrix out = psd_clamp(rho, clamp_tol, &lo);
    if (log && lo < 0.0) {
        log->events += 1;
        log->worst_eigenvalue = std::min(log->worst_eigenvalue, lo);
    }
    return out;
}

} // namespace

double fidelity(const ComplexMatrix& rho1, const ComplexMatrix& rho2, double clamp_tol,
                ClampLog* log) {
    if (rho1.rows() != rho2.rows() || rho1.cols() != rho2.cols()) {
        throw DimMismatch("fidelity: state dims differ");
    }
    const ComplexMatrix a = clamp_logged(rho1, clamp_tol, log);
    const ComplexMatrix b = clamp_logged(rho2, clamp_tol, log);
    const ComplexMatrix root = psd_sqrt(a, 1e-12);
    ComplexMatrix inner = root * b * root;
    inner = 0.5 * (inner + inner.adjoint());
    const HermEig eig = herm_eig(inner, 1e-8);
    // rank-deficient inputs leave eigenvalues at rounding scale whose square
    // roots would pollute the sum; drop anything below the noise floor
    const double floor = 16.0 * std::numeric_limits<double>::epsilon() *
                         std::max(0.0, eig.values.cwiseAbs().maxCoeff());
    double acc = 0.0;
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
        if (eig.values(k) > floor) acc += std::sqrt(eig.values(k));
    }
    return acc;
}

} // namespace rgqme::harness
