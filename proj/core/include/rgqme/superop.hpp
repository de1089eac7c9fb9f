// superop.hpp — superoperators on column-stacked vectorized operators
//
// Convention: vec() stacks columns (Eigen's native layout), so the map
// rho -> L rho R vectorizes as (R^T kron L) vec(rho).

#pragma once

#include "rgqme/errors.hpp"
#include "rgqme/types.hpp"

namespace rgqme {

ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix devec(const ComplexVector& v, Eigen::Index rows, Eigen::Index cols);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

class Superoperator {
public:
    Superoperator() = default;

    // dim x dim operator space; matrix must be dim^2 x dim^2
    Superoperator(Eigen::Index dim, ComplexMatrix matrix);

    static Superoperator zero(Eigen::Index dim);
    static Superoperator identity(Eigen::Index dim);

    // rho -> L rho R
    static Superoperator sandwich(const ComplexMatrix& l, const ComplexMatrix& r);
    static Superoperator left_mult(const ComplexMatrix& l);
    static Superoperator right_mult(const ComplexMatrix& r);
    // rho -> -i [h, rho]
    static Superoperator commutator(const ComplexMatrix& h);

    Eigen::Index dim() const { return dim_; }
    const ComplexMatrix& matrix() const { return matrix_; }
    ComplexMatrix& matrix() { return matrix_; }

    ComplexMatrix apply(const ComplexMatrix& rho) const;

    // S* with S*(rho) := (S(rho^dagger))^dagger; adding it to S yields a
    // Hermiticity-preserving map.
    Superoperator adjoint_conjugate() const;

    // row vector representing rho -> Tr(S(rho)); its norm measures how far
    // the superoperator is from trace-annihilating.
    double trace_defect() const;

    Superoperator& operator+=(const Superoperator& other);
    Superoperator& operator-=(const Superoperator& other);
    Superoperator& operator*=(Complex scale);

    friend Superoperator operator+(Superoperator a, const Superoperator& b) { return a += b; }
    friend Superoperator operator-(Superoperator a, const Superoperator& b) { return a -= b; }
    friend Superoperator operator*(Complex s, Superoperator a) { return a *= s; }
    // composition: (a * b)(rho) = a(b(rho))
    friend Superoperator operator*(const Superoperator& a, const Superoperator& b);

private:
    Eigen::Index dim_ = 0;
    ComplexMatrix matrix_;
};

// Choi matrix of the channel rho -> S(rho); PSD iff the channel is CP.
ComplexMatrix choi_matrix(const Superoperator& s);

} // namespace rgqme
