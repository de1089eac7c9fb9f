#include "rgqme/master.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rgqme/linalg.hpp"

namespace rgqme::qme {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// (1 - e^{-z t}) / z, continuous at z = 0
Complex em1_over(Complex z, double t) {
    if (std::abs(z) * std::abs(t) < 1e-8) {
        const Complex zt = z * t;
        return t * (1.0 - 0.5 * zt + zt * zt / 6.0);
    }
    return (1.0 - std::exp(-z * t)) / z;
}

bool kernel_is_zero(const BathModel& bath, std::size_t i, std::size_t j) {
    if (bath.is_exponential()) {
        for (const auto& term : bath.exp_terms(i, j)) {
            if (std::abs(term.amplitude) > 0.0) return false;
        }
        return true;
    }
    const std::size_t n = bath.sample_count();
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(bath.correlation(i, j, bath.sample_dt() * k)) > 0.0) return false;
    }
    return true;
}

} // namespace

void validate_model(const SystemModel& sys, const BathModel& bath) {
    if (sys.hamiltonian.rows() != sys.hamiltonian.cols()) {
        throw NonSquare("SystemModel: Hamiltonian not square");
    }
    if (hermiticity_defect(sys.hamiltonian) > 1e-10) {
        throw NonHermitianInput("SystemModel: Hamiltonian not Hermitian");
    }
    if (sys.lambda < 0.0) throw InvalidState("SystemModel: lambda must be >= 0");
    if (sys.couplings.size() != bath.channels()) {
        throw DimMismatch("SystemModel: coupling count != bath channels");
    }
    for (std::size_t i = 0; i < sys.couplings.size(); ++i) {
        const auto& a = sys.couplings[i];
        if (a.rows() != sys.dim() || a.cols() != sys.dim()) {
            throw DimMismatch("SystemModel: coupling " + std::to_string(i) + " dim mismatch");
        }
        const auto& partner = sys.couplings[bath.partner(i)];
        if (max_abs(partner - a.adjoint()) > 1e-10) {
            throw InvalidState("SystemModel: coupling list not closed under adjoint pairing");
        }
    }
}

GeneratorContext::GeneratorContext(SystemModel sys, BathModel bath)
    : sys_(std::move(sys)), bath_(std::move(bath)) {
    validate_model(sys_, bath_);
    require_integrable(bath_);

    const HermEig eig = herm_eig(sys_.hamiltonian);
    freq_tol_ = 2.0 * eig_group_tol(eig.values);

    specs_.reserve(sys_.couplings.size());
    for (const auto& a : sys_.couplings) {
        specs_.push_back(bohr_decompose(sys_.hamiltonian, a));
    }

    const std::size_t m = sys_.couplings.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (kernel_is_zero(bath_, i, j)) continue;
            for (const auto& ti : specs_[i].terms) {
                for (const auto& tj : specs_[j].terms) {
                    GeneratorTerm term;
                    term.i = i;
                    term.j = j;
                    term.omega1 = ti.omega;
                    term.omega2 = tj.omega;
                    term.secular = std::abs(ti.omega + tj.omega) <= freq_tol_;
                    const ComplexMatrix prod = ti.op * tj.op;
                    term.direct = Superoperator::left_mult(prod) -
                                  Superoperator::sandwich(tj.op, ti.op);
                    term.conjugate = Superoperator::right_mult(prod.adjoint()) -
                                     Superoperator::sandwich(ti.op.adjoint(), tj.op.adjoint());
                    terms_.push_back(std::move(term));
                }
            }
        }
    }
}

Superoperator GeneratorContext::assemble(double t, bool finite_weights,
                                         bool secular_only) const {
    Superoperator acc = Superoperator::zero(dim());
    const double l2 = sys_.lambda * sys_.lambda;
    for (const auto& term : terms_) {
        if (secular_only && !term.secular) continue;
        const Complex w = bath_.corr_transform(term.i, term.j, term.omega2,
                                               finite_weights ? t : kInf);
        Complex scale = -l2 * w;
        if (!secular_only) {
            const double big_omega = term.omega1 + term.omega2;
            scale *= std::exp(Complex(0.0, -big_omega * t));
        }
        Superoperator piece = scale * term.direct;
        piece += std::conj(scale) * term.conjugate;
        acc += piece;
    }
    return acc;
}

Superoperator GeneratorContext::tcl2(double t) const { return assemble(t, true, false); }

Superoperator GeneratorContext::redfield(double t) const { return assemble(t, false, false); }

Superoperator GeneratorContext::rwa() const { return assemble(0.0, false, true); }

Superoperator GeneratorContext::rg_correction(double t) const {
    const double l2 = sys_.lambda * sys_.lambda;
    Superoperator acc = Superoperator::zero(dim());

    if (bath_.is_exponential()) {
        for (const auto& term : terms_) {
            const Complex i_omega(0.0, term.omega1 + term.omega2);
            Complex w(0.0, 0.0);
            for (const auto& et : bath_.exp_terms(term.i, term.j)) {
                // int_0^t e^{-i(w1+w2)s} W_ij(w2; s) ds, minus the RWA plateau
                // t * c/z on secular terms
                const Complex z = et.rate - Complex(0.0, term.omega2);
                const Complex plateau = et.amplitude / z;
                Complex contrib =
                    plateau * (em1_over(i_omega, t) - em1_over(i_omega + z, t));
                if (term.secular) contrib -= plateau * t;
                w += contrib;
            }
            const Complex scale = -l2 * w;
            Superoperator piece = scale * term.direct;
            piece += std::conj(scale) * term.conjugate;
            acc += piece;
        }
        return acc;
    }

    // sampled kernel: composite Simpson in s over [0, t]
    if (t == 0.0) return acc;
    const Superoperator stat = rwa();
    int n = std::max(64, static_cast<int>(std::ceil(t / bath_.sample_dt())));
    if (n % 2) ++n;
    const double h = t / n;
    for (int k = 0; k <= n; ++k) {
        const double w = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
        Superoperator delta = tcl2(h * k);
        delta -= stat;
        acc += Complex(w * h / 3.0, 0.0) * delta;
    }
    return acc;
}

RWAGenerator rwa_generator(const SystemModel& sys, const BathModel& bath) {
    GeneratorContext ctx(sys, bath);
    RWAGenerator out;
    out.generator = ctx.rwa();
    const double l2 = sys.lambda * sys.lambda;

    for (const auto& term : ctx.terms()) {
        if (!term.secular) continue;
        const Complex gamma = ctx.bath().corr_transform(term.i, term.j, term.omega2, kInf);
        RWAGenerator::SecularTerm st;
        st.i = term.i;
        st.j = term.j;
        st.omega1 = term.omega1;
        st.omega2 = term.omega2;
        st.weight = l2 * gamma;
        st.rate = 2.0 * l2 * gamma.real();
        st.shift = l2 * gamma.imag();
        // recover the operator factors for reporting
        for (const auto& ti : ctx.decompositions()[term.i].terms) {
            if (ti.omega == term.omega1) st.a_i = ti.op;
        }
        for (const auto& tj : ctx.decompositions()[term.j].terms) {
            if (tj.omega == term.omega2) st.a_j = tj.op;
        }
        out.terms.push_back(std::move(st));
    }

    // diagonal rate for jump label (p, omega): 2 lambda^2 Re W_{p* p}(omega)
    const auto& pairing = bath.pairing();
    for (std::size_t p = 0; p < pairing.size(); ++p) {
        if (kernel_is_zero(bath, pairing[p], p)) continue;
        for (const auto& tp : ctx.decompositions()[p].terms) {
            const Complex g = bath.corr_transform(pairing[p], p, tp.omega, kInf);
            out.diagonal_rates.push_back(2.0 * l2 * g.real());
        }
    }
    return out;
}

Superoperator tcl2_generator(const SystemModel& sys, const BathModel& bath, double t) {
    return GeneratorContext(sys, bath).tcl2(t);
}

Superoperator rg_correction(const SystemModel& sys, const BathModel& bath, double t) {
    return GeneratorContext(sys, bath).rg_correction(t);
}

Superoperator secular_projection(const Superoperator& s, const ComplexMatrix& hamiltonian) {
    const HermEig eig = herm_eig(hamiltonian);
    const double tol = 2.0 * eig_group_tol(eig.values);
    const Eigen::Index d = s.dim();
    if (hamiltonian.rows() != d) throw DimMismatch("secular_projection: dim mismatch");

    // transform to the eigenbasis: rho_eig = U^dag rho U
    const Superoperator to_eig =
        Superoperator::sandwich(eig.vectors.adjoint(), eig.vectors);
    const Superoperator from_eig =
        Superoperator::sandwich(eig.vectors, eig.vectors.adjoint());
    ComplexMatrix m = (to_eig * s * from_eig).matrix();

    for (Eigen::Index c = 0; c < d; ++c)
        for (Eigen::Index e = 0; e < d; ++e)
            for (Eigen::Index a = 0; a < d; ++a)
                for (Eigen::Index b = 0; b < d; ++b) {
                    const double gap_out = eig.values(c) - eig.values(e);
                    const double gap_in = eig.values(a) - eig.values(b);
                    if (std::abs(gap_out - gap_in) > tol) {
                        m(c + e * d, a + b * d) = 0.0;
                    }
                }
    return from_eig * Superoperator(d, std::move(m)) * to_eig;
}

} // namespace rgqme::qme
