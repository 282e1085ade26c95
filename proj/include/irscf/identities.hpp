#pragma once

#include <array>
#include <cstdint>

namespace irscf {

struct IdentityOptions {
    int max_dim = 5;
    /// Monte Carlo draws for the quadratic-form expectation; 0 skips it.
    int draws = 100000;
    /// Use all-zero operands (degenerate case, residuals must be exactly 0).
    bool zero_operands = false;
};

struct IdentityReport {
    /// Relative residuals of
    ///   [0] Tr(AᵀB) = vec(A)ᵀ vec(B)
    ///   [1] Tr(A⊗B) = Tr(A) Tr(B)
    ///   [2] vec(ABC) = (Cᵀ⊗A) vec(B)
    ///   [3] Tr(A M B M) = mᵀ (A⊙Bᵀ) m, M = Diag(m)
    ///   [4] A⊙I = Diag(vecd(A))
    std::array<double, 5> residual{};
    double max_residual = 0.0;

    /// E{xᴴAx} = Tr(AΣ) + cᴴAc for x ~ c + CN(0, Σ): sample mean vs closed form.
    double quad_expected_re = 0.0, quad_expected_im = 0.0;
    double quad_mean_re = 0.0, quad_mean_im = 0.0;
    /// max over real/imag parts of |mean - expected| / standard error
    double quad_z = 0.0;
    int draws = 0;
};

IdentityReport check_identities(std::uint64_t seed, const IdentityOptions& opts = {});

}  // namespace irscf
