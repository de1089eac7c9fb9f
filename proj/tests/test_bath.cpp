#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rgqme/bath.hpp"
#include "test_util.hpp"

using namespace rgqme;
using namespace rgqme::qme;

namespace {

BathModel single_exponential(Complex c, Complex kappa) {
    std::vector<std::vector<std::vector<ExpTerm>>> terms(
        1, std::vector<std::vector<ExpTerm>>(1));
    terms[0][0].push_back({c, kappa});
    return BathModel::exponential(std::move(terms), {0});
}

} // namespace

TEST_CASE("half_fourier closed forms") {
    // C(t) = e^{-t}, omega = 0 -> Gamma = 1
    const BathModel simple = single_exponential({1.0, 0.0}, {1.0, 0.0});
    CHECK(std::abs(half_fourier(simple, 0, 0, 0.0, 1.0).transform - Complex(1.0, 0.0)) <
          1e-14);

    // resonant spin-boson kernel (alpha/2) e^{-alpha t}: Gamma(0) = 1/2 for any alpha
    for (double alpha : {0.7, 3.0}) {
        const BathModel res = single_exponential({0.5 * alpha, 0.0}, {alpha, 0.0});
        const HalfFourierData hf = half_fourier(res, 0, 0, 0.0, 1.0);
        CHECK(std::abs(hf.transform - Complex(0.5, 0.0)) < 1e-14);
        CHECK(hf.spectrum == doctest::Approx(1.0));       // 2 Re Gamma at lambda = 1
        CHECK(std::abs(hf.dispersion) < 1e-14);           // no shift at resonance
    }

    // phase-carrying kernel evaluated at omega = -Delta: pole moves onto alpha
    const double alpha = 1.3, delta = 10.0;
    const BathModel sb = single_exponential({0.5 * alpha, 0.0}, {alpha, delta});
    CHECK(std::abs(half_fourier(sb, 0, 0, -delta, 1.0).transform - Complex(0.5, 0.0)) <
          1e-14);
}

TEST_CASE("sampled kernel transform matches the exponential closed form") {
    const double alpha = 1.0, delta = 4.0, dt = 0.005;
    const std::size_t n = 6001;  // out to t = 30, tail ~ 1e-13 of C(0)
    std::vector<std::vector<std::vector<Complex>>> values(
        1, std::vector<std::vector<Complex>>(1));
    values[0][0].resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        values[0][0][k] =
            0.5 * alpha * std::exp(-(Complex(alpha, delta)) * (dt * static_cast<double>(k)));
    }
    const BathModel sampled = BathModel::sampled(dt, std::move(values), {0});
    const BathModel exact = single_exponential({0.5 * alpha, 0.0}, {alpha, delta});

    for (double omega : {-6.0, -4.0, 0.0, 2.0}) {
        const Complex got = half_fourier(sampled, 0, 0, omega, 1.0).transform;
        const Complex want = half_fourier(exact, 0, 0, omega, 1.0).transform;
        CHECK(std::abs(got - want) < 1e-7);
    }
    // finite-time transforms as well
    for (double t : {0.5, 2.0, 10.0}) {
        const Complex got = sampled.corr_transform(0, 0, 3.0, t);
        const Complex want = exact.corr_transform(0, 0, 3.0, t);
        CHECK(std::abs(got - want) < 1e-7);
    }
}

TEST_CASE("dispersion relation links Im Gamma to a principal-value integral") {
    const double c = 1.3, kappa = 0.8, lambda = 1.0;
    const BathModel bath = single_exponential({c, 0.0}, {kappa, 0.0});

    auto spectrum = [&](double w) {
        return half_fourier(bath, 0, 0, w, lambda).spectrum;
    };

    for (double omega : {0.5, 2.0}) {
        // PV integral of G(zeta)/(omega - zeta) with the singularity subtracted
        const double cut = 2000.0;
        const int n = 400000;
        const double h = 2.0 * cut / n;
        const double g_at = spectrum(omega);
        double acc = 0.0;
        for (int k = 0; k <= n; ++k) {
            const double zeta = -cut + h * k;
            const double w = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
            if (std::abs(zeta - omega) < 1e-9) {
                // removable singularity: limit is -G'(omega)
                const double d = 1e-5;
                acc += w * -(spectrum(omega + d) - spectrum(omega - d)) / (2.0 * d);
                continue;
            }
            acc += w * (spectrum(zeta) - g_at) / (omega - zeta);
        }
        double pv = acc * h / 3.0 + g_at * std::log((omega + cut) / (cut - omega));
        const double im_expected = -pv / (2.0 * std::numbers::pi);
        const Complex gamma = half_fourier(bath, 0, 0, omega, lambda).transform;
        CHECK(gamma.imag() == doctest::Approx(im_expected).epsilon(1e-4));
        // exact check on the closed form too
        CHECK(gamma.imag() == doctest::Approx(-c * omega / (kappa * kappa + omega * omega))
                                  .epsilon(1e-12));
    }
}

TEST_CASE("check_integrability reports per-pair integrals") {
    const BathModel good = single_exponential({1.0, 0.0}, {1.0, 0.0});
    const IntegrabilityReport r1 = check_integrability(good);
    CHECK(r1.all_pass);
    CHECK(r1.entries[0].integral == doctest::Approx(1.0));

    // purely oscillatory correlation never decays
    const BathModel bad = single_exponential({1.0, 0.0}, {0.0, 2.0});
    CHECK_FALSE(check_integrability(bad).all_pass);
    CHECK_THROWS_AS(require_integrable(bad), NotIntegrable);

    const double alpha = 2.2, delta = 7.0;
    const BathModel sb = single_exponential({0.5 * alpha, 0.0}, {alpha, delta});
    const IntegrabilityReport r2 = check_integrability(sb);
    CHECK(r2.all_pass);
    CHECK(r2.entries[0].integral == doctest::Approx(0.5));
}

TEST_CASE("multi-term kernels integrate through the numeric path") {
    std::vector<std::vector<std::vector<ExpTerm>>> terms(
        1, std::vector<std::vector<ExpTerm>>(1));
    terms[0][0].push_back({{0.5, 0.0}, {1.0, 0.0}});
    terms[0][0].push_back({{0.5, 0.0}, {1.0, 0.0}});
    const BathModel split = BathModel::exponential(std::move(terms), {0});
    const IntegrabilityReport r = check_integrability(split);
    CHECK(r.all_pass);
    CHECK(r.entries[0].integral == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("negative-time values follow from stationarity and the pairing") {
    // two channels, pairing 0 <-> 1, kernel only on (0, 1)
    std::vector<std::vector<std::vector<ExpTerm>>> terms(
        2, std::vector<std::vector<ExpTerm>>(2));
    terms[0][1].push_back({{0.3, 0.1}, {1.0, 2.0}});
    const BathModel bath = BathModel::exponential(std::move(terms), {1, 0});
    const Complex fwd = bath.correlation(0, 1, 0.7);
    // C_01(-t) = conj(C_{0*1*}(t)) = conj(C_10(t)) = 0 here
    CHECK(std::abs(bath.correlation(0, 1, -0.7)) == 0.0);
    // C_10(-t) = conj(C_01(t))
    CHECK(std::abs(bath.correlation(1, 0, -0.7) - std::conj(fwd)) < 1e-15);
}
