#include "rgqme/bath.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rgqme::qme {

namespace {

void validate_pairing(const std::vector<std::size_t>& pairing) {
    const std::size_t m = pairing.size();
    if (m == 0) throw InvalidState("BathModel: empty pairing");
    for (std::size_t i = 0; i < m; ++i) {
        if (pairing[i] >= m || pairing[pairing[i]] != i) {
            throw InvalidState("BathModel: pairing is not an involution");
        }
    }
}

// (1 - e^{-z t}) / z, continuous at z = 0
Complex em1_over(Complex z, double t) {
    if (std::abs(z) * t < 1e-8) {
        const Complex zt = z * t;
        return t * (1.0 - 0.5 * zt + zt * zt / 6.0);
    }
    return (1.0 - std::exp(-z * t)) / z;
}

} // namespace

BathModel BathModel::exponential(std::vector<std::vector<std::vector<ExpTerm>>> terms,
                                 std::vector<std::size_t> pairing) {
    validate_pairing(pairing);
    const std::size_t m = pairing.size();
    if (terms.size() != m) throw DimMismatch("BathModel: terms rows != channels");
    for (const auto& row : terms)
        if (row.size() != m) throw DimMismatch("BathModel: terms cols != channels");
    BathModel bath;
    bath.exponential_ = true;
    bath.pairing_ = std::move(pairing);
    bath.terms_ = std::move(terms);
    return bath;
}

BathModel BathModel::sampled(double dt,
                             std::vector<std::vector<std::vector<Complex>>> values,
                             std::vector<std::size_t> pairing) {
    validate_pairing(pairing);
    if (dt <= 0.0) throw InvalidState("BathModel: sample dt must be positive");
    const std::size_t m = pairing.size();
    if (values.size() != m) throw DimMismatch("BathModel: sample rows != channels");
    std::size_t n = 0;
    for (const auto& row : values) {
        if (row.size() != m) throw DimMismatch("BathModel: sample cols != channels");
        for (const auto& v : row) {
            if (n == 0) n = v.size();
            if (!v.empty() && v.size() != n)
                throw DimMismatch("BathModel: sample grids differ between pairs");
        }
    }
    if (n < 3) throw InvalidState("BathModel: need at least 3 samples");
    BathModel bath;
    bath.exponential_ = false;
    bath.pairing_ = std::move(pairing);
    bath.dt_ = dt;
    bath.samples_ = std::move(values);
    return bath;
}

std::size_t BathModel::sample_count() const {
    for (const auto& row : samples_)
        for (const auto& v : row)
            if (!v.empty()) return v.size();
    return 0;
}

double BathModel::sample_end() const {
    const std::size_t n = sample_count();
    return n == 0 ? 0.0 : dt_ * static_cast<double>(n - 1);
}

const std::vector<ExpTerm>& BathModel::exp_terms(std::size_t i, std::size_t j) const {
    if (!exponential_) throw InvalidState("BathModel: not an exponential kernel");
    return terms_.at(i).at(j);
}

Complex BathModel::correlation(std::size_t i, std::size_t j, double t) const {
    if (t < 0.0) {
        // stationarity: C_ij(-t) = conj(C_{i*j*}(t))
        return std::conj(correlation(partner(i), partner(j), -t));
    }
    if (exponential_) {
        Complex acc(0.0, 0.0);
        for (const auto& term : terms_.at(i).at(j)) {
            acc += term.amplitude * std::exp(-term.rate * t);
        }
        return acc;
    }
    const auto& v = samples_.at(i).at(j);
    if (v.empty()) return {0.0, 0.0};
    const double pos = t / dt_;
    const auto k = static_cast<std::size_t>(pos);
    if (k + 1 >= v.size()) {
        // beyond the grid: exponential tail fitted to the last two samples
        const Complex c_end = v.back();
        if (std::abs(c_end) == 0.0) return {0.0, 0.0};
        const double prev = std::abs(v[v.size() - 2]);
        double decay = 1.0 / dt_;
        if (prev > std::abs(c_end)) decay = std::log(prev / std::abs(c_end)) / dt_;
        return c_end * std::exp(-decay * (t - sample_end()));
    }
    const double w = pos - static_cast<double>(k);
    return (1.0 - w) * v[k] + w * v[k + 1];
}

Complex BathModel::corr_transform(std::size_t i, std::size_t j, double omega,
                                  double t_max) const {
    const Complex iw(0.0, omega);
    if (exponential_) {
        Complex acc(0.0, 0.0);
        for (const auto& term : terms_.at(i).at(j)) {
            const Complex z = term.rate - iw;
            if (std::isinf(t_max)) {
                acc += term.amplitude / z;
            } else {
                acc += term.amplitude * em1_over(z, t_max);
            }
        }
        return acc;
    }

    const auto& v = samples_.at(i).at(j);
    if (v.empty()) return {0.0, 0.0};
    const std::size_t n = v.size();
    const double t_end = sample_end();

    auto g = [&](std::size_t k) { return v[k] * std::exp(iw * (dt_ * static_cast<double>(k))); };

    const double upto = std::isinf(t_max) ? t_end : std::min(t_max, t_end);
    const auto full = static_cast<std::size_t>(std::floor(upto / dt_ + 1e-12));

    // cumulative Simpson over whole panels, trapezoid on the partial remainder
    Complex acc(0.0, 0.0);
    std::size_t k = 0;
    while (k + 2 <= full) {
        acc += (dt_ / 3.0) * (g(k) + 4.0 * g(k + 1) + g(k + 2));
        k += 2;
    }
    if (k + 1 <= full) {
        acc += (dt_ / 2.0) * (g(k) + g(k + 1));
        k += 1;
    }
    const double rem = upto - dt_ * static_cast<double>(full);
    if (rem > 1e-12 * dt_ && full + 1 < n) {
        const double w = rem / dt_;
        const Complex c_mid = (1.0 - w) * v[full] + w * v[full + 1];
        const Complex g_mid = c_mid * std::exp(iw * upto);
        acc += 0.5 * rem * (g(full) + g_mid);
    }

    if (std::isinf(t_max)) {
        // exponential tail beyond the grid, decay rate fitted to the last samples
        const Complex c_end = v[n - 1];
        if (std::abs(c_end) > 0.0) {
            const double prev = std::abs(v[n - 2]);
            double decay = 1.0 / dt_;
            if (prev > std::abs(c_end)) decay = std::log(prev / std::abs(c_end)) / dt_;
            const Complex z = Complex(decay, 0.0) - iw;
            acc += c_end * std::exp(iw * t_end) / z;
        }
    }
    return acc;
}

HalfFourierData half_fourier(const BathModel& bath, std::size_t i, std::size_t j,
                             double omega, double lambda) {
    require_integrable(bath);
    HalfFourierData out;
    out.omega = omega;
    // Gamma(omega) = int_0^inf e^{-i omega s} C(s) ds
    out.transform = bath.corr_transform(i, j, -omega);
    const double l2 = lambda * lambda;
    out.spectrum = 2.0 * l2 * out.transform.real();
    out.dispersion = Complex(0.0, 2.0 * l2 * out.transform.imag());
    return out;
}

IntegrabilityReport check_integrability(const BathModel& bath) {
    IntegrabilityReport report;
    const std::size_t m = bath.channels();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            IntegrabilityReport::Entry e;
            e.i = i;
            e.j = j;
            if (bath.is_exponential()) {
                const auto& terms = bath.exp_terms(i, j);
                double min_rate = std::numeric_limits<double>::infinity();
                double scale = 0.0;
                for (const auto& t : terms) {
                    min_rate = std::min(min_rate, t.rate.real());
                    scale += std::abs(t.amplitude);
                }
                if (terms.empty()) {
                    e.integral = 0.0;
                } else if (min_rate <= 0.0 || scale == 0.0) {
                    e.pass = (scale == 0.0);
                    e.integral = e.pass ? 0.0 : std::numeric_limits<double>::infinity();
                } else if (terms.size() == 1) {
                    e.integral = std::abs(terms[0].amplitude) / terms[0].rate.real();
                } else {
                    // |sum of exponentials| has no closed form; Simpson out to
                    // where the envelope is negligible
                    const double t_end = std::log(1e14) / min_rate;
                    const int n = 20000;
                    const double h = t_end / n;
                    double acc = 0.0;
                    for (int k = 0; k <= n; ++k) {
                        const double w = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
                        acc += w * std::abs(bath.correlation(i, j, h * k));
                    }
                    e.integral = acc * h / 3.0;
                }
            } else {
                double acc = 0.0;
                const std::size_t n = bath.sample_count();
                double c0 = std::abs(bath.correlation(i, j, 0.0));
                double c_end = std::abs(bath.correlation(i, j, bath.sample_end()));
                for (std::size_t k = 0; k + 1 < n; ++k) {
                    acc += 0.5 * bath.sample_dt() *
                           (std::abs(bath.correlation(i, j, bath.sample_dt() * k)) +
                            std::abs(bath.correlation(i, j, bath.sample_dt() * (k + 1))));
                }
                e.integral = acc;
                // tail must be negligible for the transform's tail estimate to hold
                e.pass = (c0 == 0.0) || (c_end <= 1e-6 * c0);
            }
            report.entries.push_back(e);
            report.all_pass = report.all_pass && e.pass;
        }
    }
    return report;
}

void require_integrable(const BathModel& bath) {
    const IntegrabilityReport report = check_integrability(bath);
    if (!report.all_pass) {
        for (const auto& e : report.entries) {
            if (!e.pass) {
                throw NotIntegrable("bath correlation pair (" + std::to_string(e.i) + "," +
                                    std::to_string(e.j) + ") is not integrable");
            }
        }
    }
}

} // namespace rgqme::qme
