#include "rgqme/superop.hpp"

#include <string>

namespace rgqme {

ComplexVector vec(const ComplexMatrix& m) {
    return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix devec(const ComplexVector& v, Eigen::Index rows, Eigen::Index cols) {
    if (v.size() != rows * cols) {
        throw DimMismatch("devec: vector length " + std::to_string(v.size()) +
                          " != " + std::to_string(rows) + "*" + std::to_string(cols));
    }
    return Eigen::Map<const ComplexMatrix>(v.data(), rows, cols);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Superoperator::Superoperator(Eigen::Index dim, ComplexMatrix matrix)
    : dim_(dim), matrix_(std::move(matrix)) {
    if (matrix_.rows() != dim * dim || matrix_.cols() != dim * dim) {
        throw DimMismatch("Superoperator: matrix must be dim^2 x dim^2");
    }
}

Superoperator Superoperator::zero(Eigen::Index dim) {
    return Superoperator(dim, ComplexMatrix::Zero(dim * dim, dim * dim));
}

Superoperator Superoperator::identity(Eigen::Index dim) {
    return Superoperator(dim, ComplexMatrix::Identity(dim * dim, dim * dim));
}

Superoperator Superoperator::sandwich(const ComplexMatrix& l, const ComplexMatrix& r) {
    if (l.rows() != l.cols() || r.rows() != r.cols() || l.rows() != r.rows()) {
        throw DimMismatch("sandwich: L and R must be square of equal dim");
    }
    return Superoperator(l.rows(), kron(r.transpose(), l));
}

Superoperator Superoperator::left_mult(const ComplexMatrix& l) {
    return sandwich(l, ComplexMatrix::Identity(l.rows(), l.rows()));
}

Superoperator Superoperator::right_mult(const ComplexMatrix& r) {
    return sandwich(ComplexMatrix::Identity(r.rows(), r.rows()), r);
}

Superoperator Superoperator::commutator(const ComplexMatrix& h) {
    const Complex mi(0.0, -1.0);
    Superoperator s = left_mult(h);
    s -= right_mult(h);
    s *= mi;
    return s;
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& rho) const {
    if (rho.rows() != dim_ || rho.cols() != dim_) {
        throw DimMismatch("Superoperator::apply: state dim mismatch");
    }
    return devec(matrix_ * vec(rho), dim_, dim_);
}

Superoperator Superoperator::adjoint_conjugate() const {
    // (S(rho^dag))^dag in vectorized form: conjugate the matrix in the
    // basis-swapped ordering. Derived entrywise: T_{(ab),(cd)} = conj(S_{(ba),(dc)}).
    const Eigen::Index d = dim_;
    ComplexMatrix t(d * d, d * d);
    for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = 0; b < d; ++b)
            for (Eigen::Index c = 0; c < d; ++c)
                for (Eigen::Index e = 0; e < d; ++e)
                    t(a + b * d, c + e * d) = std::conj(matrix_(b + a * d, e + c * d));
    return Superoperator(d, std::move(t));
}

double Superoperator::trace_defect() const {
    const Eigen::Index d = dim_;
    ComplexVector id = vec(ComplexMatrix::Identity(d, d));
    return (id.adjoint() * matrix_).norm();
}

Superoperator& Superoperator::operator+=(const Superoperator& other) {
    if (dim_ == 0) { *this = other; return *this; }
    if (other.dim_ != dim_) throw DimMismatch("Superoperator: dim mismatch in +=");
    matrix_ += other.matrix_;
    return *this;
}

Superoperator& Superoperator::operator-=(const Superoperator& other) {
    if (dim_ == 0) { *this = other; matrix_ = -matrix_; return *this; }
    if (other.dim_ != dim_) throw DimMismatch("Superoperator: dim mismatch in -=");
    matrix_ -= other.matrix_;
    return *this;
}

Superoperator& Superoperator::operator*=(Complex scale) {
    matrix_ *= scale;
    return *this;
}

Superoperator operator*(const Superoperator& a, const Superoperator& b) {
    if (a.dim() != b.dim()) throw DimMismatch("Superoperator: dim mismatch in composition");
    return Superoperator(a.dim(), a.matrix() * b.matrix());
}

ComplexMatrix choi_matrix(const Superoperator& s) {
    const Eigen::Index d = s.dim();
    ComplexMatrix choi = ComplexMatrix::Zero(d * d, d * d);
    ComplexMatrix unit = ComplexMatrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            unit(i, j) = 1.0;
            const ComplexMatrix block = s.apply(unit);
            unit(i, j) = 0.0;
            // Choi = sum_{ij} S(|i><j|) kron |i><j|
            for (Eigen::Index m = 0; m < d; ++m)
                for (Eigen::Index n = 0; n < d; ++n)
                    choi(m * d + i, n * d + j) += block(m, n);
        }
    }
    return choi;
}

} // namespace rgqme
