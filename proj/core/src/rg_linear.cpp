#include "rgqme/rg_linear.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "rgqme/linalg.hpp"

namespace rgqme::rglin {

namespace {

struct EigenFrame {
    ComplexVector values;
    ComplexMatrix vectors;      // columns
    ComplexMatrix vectors_inv;
    double group_tol = 0.0;
};

EigenFrame diagonalize_drift(const ComplexMatrix& f) {
    if (f.rows() != f.cols()) throw NonSquare("rg_linear: drift matrix not square");
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(f);
    if (solver.info() != Eigen::Success) {
        throw NotDiagonalizable("rg_linear: eigensolver failed on drift matrix");
    }
    EigenFrame frame;
    frame.values = solver.eigenvalues();
    frame.vectors = solver.eigenvectors();

    Eigen::JacobiSVD<ComplexMatrix> svd(frame.vectors);
    const double smin = svd.singularValues().minCoeff();
    const double smax = svd.singularValues().maxCoeff();
    if (smin <= 0.0 || smax / smin > 1e12) {
        throw NotDiagonalizable("rg_linear: eigenvector condition number exceeds 1e12");
    }
    frame.vectors_inv = frame.vectors.inverse();
    frame.group_tol = std::max(1e-9 * frame.values.cwiseAbs().maxCoeff(), 1e-12);
    return frame;
}

bool resonant(const EigenFrame& fr, Eigen::Index k, Eigen::Index l) {
    return std::abs(fr.values(k) - fr.values(l)) <= fr.group_tol;
}

} // namespace

ComplexMatrix secular_generator(const LinearPerturbedSystem& sys) {
    const EigenFrame fr = diagonalize_drift(sys.drift);
    ComplexMatrix g_eig = fr.vectors_inv * sys.perturbation * fr.vectors;
    for (Eigen::Index k = 0; k < g_eig.rows(); ++k)
        for (Eigen::Index l = 0; l < g_eig.cols(); ++l)
            if (!resonant(fr, k, l)) g_eig(k, l) = 0.0;
    return sys.epsilon * (fr.vectors * g_eig * fr.vectors_inv);
}

RGDecomposition rg_decompose(const LinearPerturbedSystem& sys) {
    const EigenFrame fr = diagonalize_drift(sys.drift);
    const Eigen::Index n = sys.drift.rows();

    ComplexMatrix g_eig = fr.vectors_inv * sys.perturbation * fr.vectors;
    ComplexMatrix p_eig = g_eig;
    for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index l = 0; l < n; ++l)
            if (!resonant(fr, k, l)) p_eig(k, l) = 0.0;

    RGDecomposition out;
    out.secular_generator = sys.epsilon * (fr.vectors * p_eig * fr.vectors_inv);
    // Off-resonant entries of e^{-Ft} G e^{Ft} integrate in closed form; the
    // constant of integration is zero on every entry, which makes W vanish on
    // the resonant positions (zero time average).
    out.bounded_primitive = [fr, g_eig, n](double t) {
        ComplexMatrix w = ComplexMatrix::Zero(n, n);
        for (Eigen::Index k = 0; k < n; ++k) {
            for (Eigen::Index l = 0; l < n; ++l) {
                if (resonant(fr, k, l)) continue;
                const Complex gap = fr.values(l) - fr.values(k);
                w(k, l) = g_eig(k, l) * std::exp(gap * t) / gap;
            }
        }
        return ComplexMatrix(fr.vectors * w * fr.vectors_inv);
    };
    return out;
}

Trajectory rg_improved_solution(const LinearPerturbedSystem& sys, const ComplexVector& y0,
                                const std::vector<double>& grid) {
    if (y0.size() != sys.drift.rows()) {
        throw DimMismatch("rg_improved_solution: y0 length != system dimension");
    }
    const EigenFrame fr = diagonalize_drift(sys.drift);
    const RGDecomposition dec = rg_decompose(sys);

    // flow of the renormalized initial data in the drift eigenbasis
    const ComplexMatrix p_flow = fr.vectors_inv * dec.secular_generator * fr.vectors;

    Trajectory traj;
    traj.times = grid;
    traj.states.reserve(grid.size());
    const ComplexVector y0_eig = fr.vectors_inv * y0;
    const Eigen::Index n = sys.drift.rows();
    for (double t : grid) {
        const ComplexVector y_eig = expm(p_flow * t) * y0_eig;
        const ComplexVector y = fr.vectors * y_eig;
        ComplexMatrix exp_ft_eig = ComplexMatrix::Zero(n, n);
        for (Eigen::Index k = 0; k < n; ++k) exp_ft_eig(k, k) = std::exp(fr.values(k) * t);
        const ComplexMatrix exp_ft = fr.vectors * exp_ft_eig * fr.vectors_inv;
        const ComplexVector x = exp_ft * (y + sys.epsilon * (dec.bounded_primitive(t) * y));
        traj.states.push_back(x);
    }
    return traj;
}

double oscillator_exact(double epsilon, double amplitude, double phase, double tau, double t) {
    const double half = 0.5 * epsilon;
    const double omega = std::sqrt(1.0 - half * half);
    return amplitude * std::exp(-half * (t - tau)) * std::sin(omega * (t - tau) + phase);
}

double oscillator_naive(double epsilon, double amplitude, double phase, double tau, double t) {
    const double dt = t - tau;
    return amplitude * std::sin(t + phase) +
           0.5 * epsilon * dt * amplitude * std::sin(t - phase) +
           (epsilon * epsilon * amplitude / 8.0) *
               (dt * dt * std::sin(t + phase) - dt * std::cos(t + phase));
}

double oscillator_rg(const OscillatorParams& p, double t) {
    return p.amplitude * std::exp(-0.5 * p.epsilon * t) *
           std::sin((1.0 - p.epsilon * p.epsilon / 8.0) * t + p.phase);
}

LinearPerturbedSystem oscillator_system(double epsilon) {
    LinearPerturbedSystem sys;
    sys.drift = ComplexMatrix::Zero(2, 2);
    sys.drift(0, 1) = 1.0;
    sys.drift(1, 0) = -1.0;
    sys.perturbation = ComplexMatrix::Zero(2, 2);
    sys.perturbation(1, 1) = -1.0;
    sys.epsilon = epsilon;
    return sys;
}

} // namespace rgqme::rglin
