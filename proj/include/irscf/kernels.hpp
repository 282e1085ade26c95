#pragma once

// Complex double-precision vector kernels.
//
// Every kernel has a scalar reference implementation; AVX2+FMA (x86-64) and
// NEON (aarch64) variants are compiled when the target allows it and picked at
// first use by a CPU probe. Variants may sum in a different order than the
// reference, so results agree to rounding, not bit-for-bit.
//
// Set IRSCF_SIMD=scalar in the environment to force the reference path.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace irscf::simd {

using cd = std::complex<double>;

struct KernelTable {
    std::string_view name;
    /// sum_i conj(a_i) * b_i
    cd (*dotc)(const cd* a, const cd* b, std::size_t n);
    /// sum_i a_i * b_i
    cd (*dotu)(const cd* a, const cd* b, std::size_t n);
    /// sum_i |a_i|^2
    double (*norm2)(const cd* a, std::size_t n);
    /// y += alpha * x
    void (*axpy)(cd alpha, const cd* x, cd* y, std::size_t n);
    /// out_i = a_i * conj(b_i); out may alias a or b
    void (*mul_conj)(const cd* a, const cd* b, cd* out, std::size_t n);
};

const KernelTable& scalar_kernels();

/// nullptr when the variant is not compiled in or the CPU lacks the ISA.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// The table used by the library. Resolved once, then fixed for the process.
const KernelTable& active();

cd dotc(std::span<const cd> a, std::span<const cd> b);
cd dotu(std::span<const cd> a, std::span<const cd> b);
double norm2(std::span<const cd> a);
void axpy(cd alpha, std::span<const cd> x, std::span<cd> y);
void mul_conj(std::span<const cd> a, std::span<const cd> b, std::span<cd> out);

}  // namespace irscf::simd
