#pragma once

// Dense complex matrix helpers.
//
// Stacking convention: vec() is column-major everywhere in the library, which
// is also Eigen's storage order, so vec(A) is a copy of A's memory.

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>

namespace irscf {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Index = Eigen::Index;

CVector vec(const CMatrix& a);
CMatrix unvec(const CVector& v, Index rows, Index cols);

/// Diagonal of a square matrix; throws ShapeError otherwise.
CVector vecd(const CMatrix& a);
/// Diag(v): square matrix with v on the diagonal.
CMatrix diag(const CVector& v);

CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix hadamard(const CMatrix& a, const CMatrix& b);
/// a ⊙ conj(b). For Hermitian b this equals a ⊙ bᵀ.
CMatrix hadamard_conj(const CMatrix& a, const CMatrix& b);
CMatrix blkdiag(std::span<const CMatrix> blocks);
/// Row-concatenation [b0; b1; ...]; all blocks need the same column count.
CMatrix vstack(std::span<const CMatrix> blocks);

/// Tr(Aᴴ B) computed as a flat conjugated dot product.
Complex inner(const CMatrix& a, const CMatrix& b);
/// ‖A‖_F²
double frob2(const CMatrix& a);
/// xᴴ M x
Complex quad_form(const CMatrix& m, const CVector& x);

CMatrix hermitian_part(const CMatrix& a);

/// log det of a Hermitian positive-definite matrix (Cholesky).
/// Throws NumericalError if the factorization fails.
double log_det_hpd(const CMatrix& a);
/// log det of a general square matrix via partial-pivot LU; the real part is
/// log|det|.
Complex log_det(const CMatrix& a);

bool all_finite(const CMatrix& a);

}  // namespace irscf
