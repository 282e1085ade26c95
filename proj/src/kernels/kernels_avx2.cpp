// Compiled with -mavx2 -mfma. Only reached after a runtime CPU check.

#include <immintrin.h>

#include "irscf/kernels.hpp"

namespace irscf::simd {
namespace {

// Two complex values per register: [re0, im0, re1, im1].
inline __m256d load2(const cd* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cd* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }
inline __m256d swap_ri(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// lanes [x0, x1, x2, x3] -> (x0 - x1) + (x2 - x3)
inline double hdiff(__m256d v) {
    const __m256d d = _mm256_hsub_pd(v, v);
    const __m128d lo = _mm256_castpd256_pd128(d);
    const __m128d hi = _mm256_extractf128_pd(d, 1);
    return _mm_cvtsd_f64(_mm_add_sd(lo, hi));
}

cd dotc_avx2(const cd* a, const cd* b, std::size_t n) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = load2(a + i);
        const __m256d vb = load2(b + i);
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);           // ar*br, ai*bi
        acc_im = _mm256_fmadd_pd(va, swap_ri(vb), acc_im);  // ar*bi, ai*br
    }
    double re = hsum(acc_re);
    double im = hdiff(acc_im);
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

cd dotu_avx2(const cd* a, const cd* b, std::size_t n) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = load2(a + i);
        const __m256d vb = load2(b + i);
        acc_re = _mm256_fmadd_pd(va, vb, acc_re);
        acc_im = _mm256_fmadd_pd(va, swap_ri(vb), acc_im);
    }
    double re = hdiff(acc_re);
    double im = hsum(acc_im);
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

double norm2_avx2(const cd* a, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v0 = load2(a + i);
        const __m256d v1 = load2(a + i + 2);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    for (; i + 2 <= n; i += 2) {
        const __m256d v = load2(a + i);
        acc0 = _mm256_fmadd_pd(v, v, acc0);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
}

void axpy_avx2(cd alpha, const cd* x, cd* y, std::size_t n) {
    const __m256d p = _mm256_set1_pd(alpha.real());
    const __m256d q = _mm256_setr_pd(-alpha.imag(), alpha.imag(), -alpha.imag(), alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d vx = load2(x + i);
        __m256d vy = load2(y + i);
        vy = _mm256_fmadd_pd(p, vx, vy);
        vy = _mm256_fmadd_pd(q, swap_ri(vx), vy);
        store2(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void mul_conj_avx2(const cd* a, const cd* b, cd* out, std::size_t n) {
    const __m256d sign = _mm256_setr_pd(-1.0, 1.0, -1.0, 1.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d va = load2(a + i);
        const __m256d vb = load2(b + i);
        const __m256d p1 = _mm256_mul_pd(va, vb);                               // ar*br, ai*bi
        const __m256d p2 = _mm256_mul_pd(_mm256_mul_pd(va, swap_ri(vb)), sign);  // -ar*bi, ai*br
        store2(out + i, _mm256_hadd_pd(p1, p2));
    }
    for (; i < n; ++i) out[i] = a[i] * std::conj(b[i]);
}

}  // namespace

const KernelTable* avx2_kernels() {
    static const KernelTable table{"avx2", dotc_avx2, dotu_avx2, norm2_avx2, axpy_avx2, mul_conj_avx2};
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? &table : nullptr;
}

}  // namespace irscf::simd
