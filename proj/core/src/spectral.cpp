#include "rgqme/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "rgqme/errors.hpp"

namespace rgqme::qme {

ComplexMatrix SpectralDecomposition::reconstruct() const {
    if (terms.empty()) return {};
    ComplexMatrix acc = ComplexMatrix::Zero(terms[0].op.rows(), terms[0].op.cols());
    for (const auto& t : terms) acc += t.op;
    return acc;
}

ComplexMatrix SpectralDecomposition::interaction_op(double t) const {
    if (terms.empty()) return {};
    ComplexMatrix acc = ComplexMatrix::Zero(terms[0].op.rows(), terms[0].op.cols());
    for (const auto& term : terms) {
        acc += std::exp(Complex(0.0, -term.omega * t)) * term.op;
    }
    return acc;
}

SpectralDecomposition bohr_decompose(const ComplexMatrix& h, const ComplexMatrix& a,
                                     double drop_tol) {
    if (h.rows() != a.rows() || h.cols() != a.cols()) {
        throw DimMismatch("bohr_decompose: operator and Hamiltonian dims differ");
    }
    const HermEig eig = herm_eig(h);
    const double tol = eig_group_tol(eig.values);
    const Eigen::Index d = h.rows();

    // group degenerate eigenvalues
    std::vector<std::pair<double, std::vector<Eigen::Index>>> groups;
    for (Eigen::Index k = 0; k < d; ++k) {
        if (!groups.empty() && std::abs(eig.values(k) - groups.back().first) <= tol) {
            groups.back().second.push_back(k);
        } else {
            groups.emplace_back(eig.values(k), std::vector<Eigen::Index>{k});
        }
    }

    const ComplexMatrix a_eig = eig.vectors.adjoint() * a * eig.vectors;

    // collect blocks per frequency gap, merging gaps equal within tolerance
    SpectralDecomposition out;
    const double freq_tol = 2.0 * tol;
    for (std::size_t g1 = 0; g1 < groups.size(); ++g1) {
        for (std::size_t g2 = 0; g2 < groups.size(); ++g2) {
            const double omega = groups[g2].first - groups[g1].first;
            ComplexMatrix block = ComplexMatrix::Zero(d, d);
            for (Eigen::Index r : groups[g1].second)
                for (Eigen::Index c : groups[g2].second)
                    block(r, c) = a_eig(r, c);
            if (max_abs(block) <= drop_tol) continue;

            auto it = std::find_if(out.terms.begin(), out.terms.end(), [&](const auto& t) {
                return std::abs(t.omega - omega) <= freq_tol;
            });
            ComplexMatrix lab = eig.vectors * block * eig.vectors.adjoint();
            if (it == out.terms.end()) {
                out.terms.push_back({omega, std::move(lab)});
            } else {
                it->op += lab;
            }
        }
    }
    std::sort(out.terms.begin(), out.terms.end(),
              [](const auto& x, const auto& y) { return x.omega < y.omega; });
    return out;
}

} // namespace rgqme::qme
