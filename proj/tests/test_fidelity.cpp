#include <doctest.h>

#include <cmath>

#include "rgqme/errors.hpp"
#include "rgqme/fidelity.hpp"
#include "test_util.hpp"

using namespace rgqme;
using rgqme::harness::ClampLog;
using rgqme::harness::fidelity;

namespace {

// closed-form qubit identity: F^2 = Tr(rho1 rho2) + 2 sqrt(det rho1 det rho2)
double qubit_reference(const ComplexMatrix& a, const ComplexMatrix& b) {
    const double cross = (a * b).trace().real();
    const double dets = std::max(0.0, (a.determinant() * b.determinant()).real());
    return std::sqrt(std::max(0.0, cross + 2.0 * std::sqrt(dets)));
}

} // namespace

TEST_CASE("fidelity of identical and orthogonal states") {
    auto gen = testutil::rng(211);
    const ComplexMatrix rho = testutil::random_density(3, gen);
    CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-10));

    ComplexMatrix up = ComplexMatrix::Zero(2, 2), down = ComplexMatrix::Zero(2, 2);
    up(0, 0) = 1.0;
    down(1, 1) = 1.0;
    CHECK(fidelity(up, down) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("fidelity matches the qubit closed form on 1000 random pairs") {
    auto gen = testutil::rng(223);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const ComplexMatrix a = testutil::random_density(2, gen);
        const ComplexMatrix b = testutil::random_density(2, gen);
        worst = std::max(worst, std::abs(fidelity(a, b) - qubit_reference(a, b)));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("fidelity metric axioms") {
    auto gen = testutil::rng(227);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index d = 2 + (trial % 3);
        const ComplexMatrix a = testutil::random_density(d, gen);
        const ComplexMatrix b = testutil::random_density(d, gen);
        const double f = fidelity(a, b);
        CHECK(f >= 0.0);
        CHECK(f <= 1.0 + 1e-8);
        CHECK(std::abs(f - fidelity(b, a)) < 1e-10);
        // invariance under a common unitary
        const ComplexMatrix u = testutil::random_unitary(d, gen);
        CHECK(std::abs(f - fidelity(ComplexMatrix(u * a * u.adjoint()),
                                    ComplexMatrix(u * b * u.adjoint()))) < 1e-10);
    }
}

TEST_CASE("pure-state fidelity is the overlap magnitude") {
    auto gen = testutil::rng(229);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexVector psi = testutil::random_pure(2, gen);
        const ComplexVector phi = testutil::random_pure(2, gen);
        const ComplexMatrix a = psi * psi.adjoint();
        const ComplexMatrix b = phi * phi.adjoint();
        const double overlap = std::abs(psi.dot(phi));
        CHECK(std::abs(fidelity(a, b) - overlap) < 1e-10);
    }
}

TEST_CASE("unit fidelity implies equal clamped states") {
    auto gen = testutil::rng(233);
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexMatrix a = testutil::random_density(2, gen);
        ComplexMatrix b = testutil::random_density(2, gen);
        if (trial % 4 == 0) b = a;  // exercise the equal branch too
        const double f = fidelity(a, b);
        if (f > 1.0 - 1e-9) {
            CHECK(max_abs(a - b) < 1e-6);
        } else {
            CHECK(max_abs(a - b) > 0.0);
        }
    }
}

TEST_CASE("clamping is logged and hard failures throw") {
    ComplexMatrix slight = ComplexMatrix::Zero(2, 2);
    slight(0, 0) = 1.0 + 1e-9;
    slight(1, 1) = -1e-9;
    ComplexMatrix clean = ComplexMatrix::Zero(2, 2);
    clean(0, 0) = 1.0;

    ClampLog log;
    const double f = fidelity(slight, clean, 1e-8, &log);
    CHECK(f == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(log.events == 1);
    CHECK(log.worst_eigenvalue == doctest::Approx(-1e-9).epsilon(1e-3));

    ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
    bad(0, 0) = 1.1;
    bad(1, 1) = -0.1;
    CHECK_THROWS_AS(fidelity(bad, clean, 1e-2), NotPSD);
}
