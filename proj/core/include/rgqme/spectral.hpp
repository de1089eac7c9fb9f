// spectral.hpp — decomposition of coupling operators by Bohr frequency

#pragma once

#include <vector>

#include "rgqme/linalg.hpp"
#include "rgqme/types.hpp"

namespace rgqme::qme {

// A = sum_omega A(omega) with Pi(e1) A Pi(e2) labeled omega = e2 - e1, so that
// e^{-i H t} A e^{i H t} = sum_omega e^{i omega t} A(omega). The standard
// interaction picture e^{i H t} A e^{-i H t} then carries e^{-i omega t}.
struct SpectralDecomposition {
    struct Term {
        double omega = 0.0;
        ComplexMatrix op;
    };
    std::vector<Term> terms;

    ComplexMatrix reconstruct() const;
    // e^{i H t} A e^{-i H t} rebuilt from the terms
    ComplexMatrix interaction_op(double t) const;
};

// Eigendecomposes the Hermitian h, groups eigenvalues to eig_group_tol, and
// collects the frequency components of a; components with max|entry| below
// drop_tol are discarded.
SpectralDecomposition bohr_decompose(const ComplexMatrix& h, const ComplexMatrix& a,
                                     double drop_tol = 1e-14);

} // namespace rgqme::qme
