// system.hpp — target system plus coupling operators

#pragma once

#include <vector>

#include "rgqme/bath.hpp"
#include "rgqme/types.hpp"

namespace rgqme::qme {

// Target Hamiltonian and the system half of V = sum_i A_i (x) B_i. The list
// of couplings must be closed under the bath's adjoint pairing: A_{i*} = A_i^dag.
struct SystemModel {
    ComplexMatrix hamiltonian;            // Hermitian
    std::vector<ComplexMatrix> couplings; // one per bath channel
    double lambda = 0.0;                  // coupling strength, >= 0

    Eigen::Index dim() const { return hamiltonian.rows(); }
};

// Checks Hermiticity, dimensions, and pairing closure; throws on violation.
void validate_model(const SystemModel& sys, const BathModel& bath);

} // namespace rgqme::qme
