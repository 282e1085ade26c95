#include "irscf/matops.hpp"

#include <cmath>
#include <numbers>

#include "irscf/errors.hpp"
#include "irscf/kernels.hpp"

namespace irscf {
namespace {

std::span<const Complex> flat(const CMatrix& a) {
    return {a.data(), static_cast<std::size_t>(a.size())};
}

}  // namespace

CVector vec(const CMatrix& a) { return Eigen::Map<const CVector>(a.data(), a.size()); }

CMatrix unvec(const CVector& v, Index rows, Index cols) {
    if (rows * cols != v.size()) throw ShapeError("unvec: size does not match rows*cols");
    return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

CVector vecd(const CMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeError("vecd: matrix is not square");
    return a.diagonal();
}

CMatrix diag(const CVector& v) { return v.asDiagonal(); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index j = 0; j < a.cols(); ++j)
        for (Index i = 0; i < a.rows(); ++i)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMatrix hadamard(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("hadamard: shape mismatch");
    return a.cwiseProduct(b);
}

CMatrix hadamard_conj(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("hadamard_conj: shape mismatch");
    CMatrix out(a.rows(), a.cols());
    simd::mul_conj(flat(a), flat(b), {out.data(), static_cast<std::size_t>(out.size())});
    return out;
}

CMatrix blkdiag(std::span<const CMatrix> blocks) {
    Index rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    CMatrix out = CMatrix::Zero(rows, cols);
    Index r = 0, c = 0;
    for (const auto& b : blocks) {
        out.block(r, c, b.rows(), b.cols()) = b;
        r += b.rows();
        c += b.cols();
    }
    return out;
}

CMatrix vstack(std::span<const CMatrix> blocks) {
    if (blocks.empty()) return {};
    const Index cols = blocks.front().cols();
    Index rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw ShapeError("vstack: column count mismatch");
        rows += b.rows();
    }
    CMatrix out(rows, cols);
    Index r = 0;
    for (const auto& b : blocks) {
        out.middleRows(r, b.rows()) = b;
        r += b.rows();
    }
    return out;
}

Complex inner(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("inner: shape mismatch");
    return simd::dotc(flat(a), flat(b));
}

double frob2(const CMatrix& a) { return simd::norm2(flat(a)); }

Complex quad_form(const CMatrix& m, const CVector& x) {
    if (m.rows() != m.cols() || m.cols() != x.size()) throw ShapeError("quad_form: shape mismatch");
    const std::span<const Complex> xs{x.data(), static_cast<std::size_t>(x.size())};
    const auto n = static_cast<std::size_t>(m.rows());
    Complex acc = 0.0;
    for (Index j = 0; j < m.cols(); ++j) {
        // (xᴴ M)_j = conj-dot of x with column j
        acc += simd::dotc(xs, {m.col(j).data(), n}) * x(j);
    }
    return acc;
}

CMatrix hermitian_part(const CMatrix& a) { return 0.5 * (a + a.adjoint()); }

double log_det_hpd(const CMatrix& a) {
    Eigen::LLT<CMatrix> llt(a);
    if (llt.info() != Eigen::Success) throw NumericalError("log_det_hpd: matrix is not positive definite");
    const auto& l = llt.matrixLLT();
    double s = 0.0;
    for (Index i = 0; i < a.rows(); ++i) s += std::log(l(i, i).real());
    return 2.0 * s;
}

Complex log_det(const CMatrix& a) {
    if (a.rows() != a.cols()) throw ShapeError("log_det: matrix is not square");
    Eigen::PartialPivLU<CMatrix> lu(a);
    const auto& m = lu.matrixLU();
    Complex s = 0.0;
    for (Index i = 0; i < a.rows(); ++i) s += std::log(m(i, i));
    if (lu.permutationP().determinant() < 0) s += Complex(0.0, std::numbers::pi);
    return s;
}

bool all_finite(const CMatrix& a) { return a.allFinite(); }

}  // namespace irscf
