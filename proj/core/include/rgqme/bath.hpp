// bath.hpp — stationary bath correlation kernels and their one-sided transforms

#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "rgqme/errors.hpp"
#include "rgqme/types.hpp"

namespace rgqme::qme {

// one term c * exp(-kappa t); integrable when Re kappa > 0
struct ExpTerm {
    Complex amplitude;
    Complex rate;
};

// Matrix-valued correlation function C_ij(t) for t >= 0, given either in the
// exponential family or sampled on a uniform grid. The pairing involution
// i -> i* declares which channel carries the adjoint coupling operator; values
// at negative times follow from stationarity, C_ij(-t) = conj(C_{i*j*}(t)).
class BathModel {
public:
    static BathModel exponential(std::vector<std::vector<std::vector<ExpTerm>>> terms,
                                 std::vector<std::size_t> pairing);
    static BathModel sampled(double dt,
                             std::vector<std::vector<std::vector<Complex>>> values,
                             std::vector<std::size_t> pairing);

    std::size_t channels() const { return pairing_.size(); }
    std::size_t partner(std::size_t i) const { return pairing_.at(i); }
    const std::vector<std::size_t>& pairing() const { return pairing_; }
    bool is_exponential() const { return exponential_; }

    Complex correlation(std::size_t i, std::size_t j, double t) const;
    const std::vector<ExpTerm>& exp_terms(std::size_t i, std::size_t j) const;

    double sample_dt() const { return dt_; }
    std::size_t sample_count() const;
    double sample_end() const;

    // int_0^t C_ij(s) e^{+i omega s} ds; pass t_max = infinity for the full
    // one-sided transform. Closed form for exponential kernels, cumulative
    // Simpson plus an exponential tail estimate for sampled ones.
    Complex corr_transform(std::size_t i, std::size_t j, double omega,
                           double t_max = std::numeric_limits<double>::infinity()) const;

private:
    BathModel() = default;

    bool exponential_ = true;
    std::vector<std::size_t> pairing_;
    // indexed [i][j]
    std::vector<std::vector<std::vector<ExpTerm>>> terms_;
    double dt_ = 0.0;
    std::vector<std::vector<std::vector<Complex>>> samples_;
};

struct HalfFourierData {
    double omega = 0.0;
    Complex transform;   // Gamma(omega) = int_0^inf e^{-i omega s} C(s) ds
    double spectrum = 0.0;  // G(omega) = 2 lambda^2 Re Gamma (full Fourier transform)
    Complex dispersion;     // K(omega) = 2i lambda^2 Im Gamma (principal-value part)
};

HalfFourierData half_fourier(const BathModel& bath, std::size_t i, std::size_t j,
                             double omega, double lambda);

struct IntegrabilityReport {
    struct Entry {
        std::size_t i = 0, j = 0;
        double integral = 0.0;  // int_0^inf |C_ij|
        bool pass = true;
    };
    std::vector<Entry> entries;
    bool all_pass = true;
};

IntegrabilityReport check_integrability(const BathModel& bath);

// Throws NotIntegrable unless every pair passes.
void require_integrable(const BathModel& bath);

} // namespace rgqme::qme
