#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "irscf/kernels.hpp"

namespace irscf::simd {

#ifndef IRSCF_HAVE_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif
#ifndef IRSCF_HAVE_NEON
const KernelTable* neon_kernels() { return nullptr; }
#endif

namespace {

const KernelTable& resolve() {
    const char* forced = std::getenv("IRSCF_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return *t;
    if (const KernelTable* t = neon_kernels()) return *t;
    return scalar_kernels();
}

void require_same_size(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("simd kernel: operand length mismatch");
}

}  // namespace

const KernelTable& active() {
    static const KernelTable& table = resolve();
    return table;
}

cd dotc(std::span<const cd> a, std::span<const cd> b) {
    require_same_size(a.size(), b.size());
    return active().dotc(a.data(), b.data(), a.size());
}

cd dotu(std::span<const cd> a, std::span<const cd> b) {
    require_same_size(a.size(), b.size());
    return active().dotu(a.data(), b.data(), a.size());
}

double norm2(std::span<const cd> a) { return active().norm2(a.data(), a.size()); }

void axpy(cd alpha, std::span<const cd> x, std::span<cd> y) {
    require_same_size(x.size(), y.size());
    active().axpy(alpha, x.data(), y.data(), x.size());
}

void mul_conj(std::span<const cd> a, std::span<const cd> b, std::span<cd> out) {
    require_same_size(a.size(), b.size());
    require_same_size(a.size(), out.size());
    active().mul_conj(a.data(), b.data(), out.data(), a.size());
}

}  // namespace irscf::simd
