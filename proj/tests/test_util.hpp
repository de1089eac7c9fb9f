// test_util.hpp — deterministic random inputs shared by the test suites

#pragma once

#include <random>

#include <Eigen/Dense>

#include "rgqme/types.hpp"

namespace testutil {

using rgqme::Complex;
using rgqme::ComplexMatrix;
using rgqme::ComplexVector;

inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

inline ComplexMatrix random_matrix(Eigen::Index d, std::mt19937& gen) {
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) m(i, j) = Complex(dist(gen), dist(gen));
    return m;
}

inline ComplexMatrix random_hermitian(Eigen::Index d, std::mt19937& gen) {
    ComplexMatrix m = random_matrix(d, gen);
    return 0.5 * (m + m.adjoint());
}

inline ComplexVector random_vector(Eigen::Index d, std::mt19937& gen) {
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexVector v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = Complex(dist(gen), dist(gen));
    return v;
}

inline ComplexVector random_pure(Eigen::Index d, std::mt19937& gen) {
    ComplexVector v = random_vector(d, gen);
    return v / v.norm();
}

inline ComplexMatrix random_unitary(Eigen::Index d, std::mt19937& gen) {
    Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(d, gen));
    ComplexMatrix q = qr.householderQ();
    return q;
}

inline ComplexMatrix random_density(Eigen::Index d, std::mt19937& gen) {
    ComplexMatrix m = random_matrix(d, gen);
    ComplexMatrix p = m * m.adjoint();
    return p / p.trace();
}

} // namespace testutil
