#include <arm_neon.h>

#include "irscf/kernels.hpp"

namespace irscf::simd {
namespace {

// One complex value per register: [re, im].
inline float64x2_t load1(const cd* p) { return vld1q_f64(reinterpret_cast<const double*>(p)); }
inline void store1(cd* p, float64x2_t v) { vst1q_f64(reinterpret_cast<double*>(p), v); }
inline float64x2_t swap_ri(float64x2_t v) { return vextq_f64(v, v, 1); }

cd dotc_neon(const cd* a, const cd* b, std::size_t n) {
    float64x2_t acc_re = vdupq_n_f64(0.0);
    float64x2_t acc_im = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t va = load1(a + i);
        const float64x2_t vb = load1(b + i);
        acc_re = vfmaq_f64(acc_re, va, vb);
        acc_im = vfmaq_f64(acc_im, va, swap_ri(vb));
    }
    return {vaddvq_f64(acc_re), vgetq_lane_f64(acc_im, 0) - vgetq_lane_f64(acc_im, 1)};
}

cd dotu_neon(const cd* a, const cd* b, std::size_t n) {
    float64x2_t acc_re = vdupq_n_f64(0.0);
    float64x2_t acc_im = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t va = load1(a + i);
        const float64x2_t vb = load1(b + i);
        acc_re = vfmaq_f64(acc_re, va, vb);
        acc_im = vfmaq_f64(acc_im, va, swap_ri(vb));
    }
    return {vgetq_lane_f64(acc_re, 0) - vgetq_lane_f64(acc_re, 1), vaddvq_f64(acc_im)};
}

double norm2_neon(const cd* a, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t v = load1(a + i);
        acc = vfmaq_f64(acc, v, v);
    }
    return vaddvq_f64(acc);
}

void axpy_neon(cd alpha, const cd* x, cd* y, std::size_t n) {
    const float64x2_t p = vdupq_n_f64(alpha.real());
    const double qv[2] = {-alpha.imag(), alpha.imag()};
    const float64x2_t q = vld1q_f64(qv);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t vx = load1(x + i);
        float64x2_t vy = load1(y + i);
        vy = vfmaq_f64(vy, p, vx);
        vy = vfmaq_f64(vy, q, swap_ri(vx));
        store1(y + i, vy);
    }
}

void mul_conj_neon(const cd* a, const cd* b, cd* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t va = load1(a + i);
        const float64x2_t vb = load1(b + i);
        const float64x2_t p1 = vmulq_f64(va, vb);           // ar*br, ai*bi
        const float64x2_t p2 = vmulq_f64(va, swap_ri(vb));  // ar*bi, ai*br
        const double re = vaddvq_f64(p1);
        const double im = vgetq_lane_f64(p2, 1) - vgetq_lane_f64(p2, 0);
        out[i] = {re, im};
    }
}

}  // namespace

const KernelTable* neon_kernels() {
    static const KernelTable table{"neon", dotc_neon, dotu_neon, norm2_neon, axpy_neon, mul_conj_neon};
    return &table;
}

}  // namespace irscf::simd
