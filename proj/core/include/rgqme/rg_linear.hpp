// rg_linear.hpp — first-order renormalization-group treatment of x' = F x + eps G x
//
// The perturbation is split into a resonant (secular) part, which is resummed
// into a slow flow of the initial data, and a bounded oscillating remainder.

#pragma once

#include <functional>
#include <vector>

#include "rgqme/errors.hpp"
#include "rgqme/types.hpp"

namespace rgqme::rglin {

struct LinearPerturbedSystem {
    ComplexMatrix drift;         // F, diagonalizable
    ComplexMatrix perturbation;  // G
    double epsilon = 0.0;        // >= 0
};

struct RGDecomposition {
    // eps * P: the resonant projection of eps G in the eigenbasis of F;
    // generates the flow of the renormalized initial data.
    ComplexMatrix secular_generator;
    // W(t): zero-average primitive of e^{-Ft} G e^{Ft} - P (eps excluded)
    std::function<ComplexMatrix(double)> bounded_primitive;
};

// Resonant part eps*P of the perturbation: keeps matrix elements of G between
// eigenspaces of F with equal eigenvalues (grouped to tolerance), which equals
// the long-time average of e^{-Ft} (eps G) e^{Ft}.
// Throws NotDiagonalizable if the eigenvector condition number exceeds 1e12.
ComplexMatrix secular_generator(const LinearPerturbedSystem& sys);

RGDecomposition rg_decompose(const LinearPerturbedSystem& sys);

struct Trajectory {
    std::vector<double> times;
    std::vector<ComplexVector> states;
};

// Improved solution x(t) = e^{Ft} (I + eps W(t)) y(t) with y' = (eps P) y,
// y(0) = y0. First-order accurate uniformly on t = O(1/eps).
Trajectory rg_improved_solution(const LinearPerturbedSystem& sys, const ComplexVector& y0,
                                const std::vector<double>& grid);

struct OscillatorParams {
    double epsilon = 0.0;
    double amplitude = 1.0;  // initial envelope
    double phase = 0.0;      // radians
};

// Exact damped oscillation of x'' + x = -eps x' (valid for eps < 2).
double oscillator_exact(double epsilon, double amplitude, double phase, double tau, double t);

// Second-order naive perturbative expansion, with its secular terms.
double oscillator_naive(double epsilon, double amplitude, double phase, double tau, double t);

// Resummed closed form: A e^{-eps t/2} sin((1 - eps^2/8) t + phase).
double oscillator_rg(const OscillatorParams& p, double t);

// The oscillator as a first-order system (F = [[0,1],[-1,0]], G = [[0,0],[0,-1]]).
LinearPerturbedSystem oscillator_system(double epsilon);

} // namespace rgqme::rglin
