// master.hpp — second-order master-equation generators built from bath
// correlation transforms and the Bohr decomposition of the couplings
//
// All generators act in the interaction picture. The elementary contribution
// from coupling pair (i, j) and frequency components A_i(w1), A_j(w2) is
//
//   -lambda^2 [ e^{-i(w1+w2)t} W_ij(w2; t) (A_i(w1) A_j(w2) rho - A_j(w2) rho A_i(w1))
//               + (Hermitian-conjugate partner with conjugated weight) ]
//
// with W_ij(w; t) = int_0^t C_ij(s) e^{i w s} ds. The time-independent RWA
// generator keeps the resonant pairs w2 = -w1 with the t -> infinity weights.

#pragma once

#include <vector>

#include "rgqme/bath.hpp"
#include "rgqme/spectral.hpp"
#include "rgqme/superop.hpp"
#include "rgqme/system.hpp"

namespace rgqme::qme {

struct GeneratorTerm {
    std::size_t i = 0, j = 0;        // kernel indices of C_ij
    double omega1 = 0.0, omega2 = 0.0;
    bool secular = false;            // |omega1 + omega2| within tolerance
    Superoperator direct;            // rho -> Ai(w1) Aj(w2) rho - Aj(w2) rho Ai(w1)
    Superoperator conjugate;         // its Hermitian-conjugate partner
};

class GeneratorContext {
public:
    GeneratorContext(SystemModel sys, BathModel bath);

    const SystemModel& system() const { return sys_; }
    const BathModel& bath() const { return bath_; }
    Eigen::Index dim() const { return sys_.dim(); }
    const std::vector<GeneratorTerm>& terms() const { return terms_; }
    const std::vector<SpectralDecomposition>& decompositions() const { return specs_; }
    double freq_tol() const { return freq_tol_; }

    // finite-time TCL2 generator; zero at t = 0
    Superoperator tcl2(double t) const;
    // converged (t -> infinity) weights with oscillating phases kept at time t
    Superoperator redfield(double t) const;
    // secular terms only, converged weights, time independent
    Superoperator rwa() const;
    // Phi(t) = int_0^t (tcl2(s) - rwa) ds; bounded for integrable kernels.
    // Closed form for exponential kernels, Simpson in s otherwise.
    Superoperator rg_correction(double t) const;

private:
    SystemModel sys_;
    BathModel bath_;
    std::vector<SpectralDecomposition> specs_;
    std::vector<GeneratorTerm> terms_;
    double freq_tol_ = 0.0;

    Superoperator assemble(double t, bool finite_weights, bool secular_only) const;
};

struct RWAGenerator {
    Superoperator generator;

    struct SecularTerm {
        std::size_t i = 0, j = 0;
        double omega1 = 0.0, omega2 = 0.0;
        Complex weight;   // lambda^2 Gamma_ij(omega2), the one-sided transform
        double rate = 0.0;   // dissipative part, 2 lambda^2 Re Gamma
        double shift = 0.0;  // Hamiltonian (Lamb-shift) part, lambda^2 Im Gamma
        ComplexMatrix a_i;   // A_i(omega1)
        ComplexMatrix a_j;   // A_j(omega2)
    };
    std::vector<SecularTerm> terms;

    // diagonal entries of the rate matrix in the jump basis {A_p(omega)};
    // all >= 0 is the precondition for the complete-positivity check
    std::vector<double> diagonal_rates;
};

RWAGenerator rwa_generator(const SystemModel& sys, const BathModel& bath);

// convenience wrappers over a one-shot context
Superoperator tcl2_generator(const SystemModel& sys, const BathModel& bath, double t);
Superoperator rg_correction(const SystemModel& sys, const BathModel& bath, double t);

// Projects a superoperator onto the secular subspace of the given Hamiltonian:
// in the eigenbasis, matrix elements between |a><b| and |c><d| survive only if
// the Bohr differences match, (e_c - e_d) = (e_a - e_b). Averaging the
// interaction-picture generator over long times acts exactly this way.
Superoperator secular_projection(const Superoperator& s, const ComplexMatrix& hamiltonian);

} // namespace rgqme::qme
