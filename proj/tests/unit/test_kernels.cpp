#include <random>
#include <vector>

#include "doctest.h"
#include "irscf/kernels.hpp"

using irscf::simd::cd;
using irscf::simd::KernelTable;

namespace {

std::vector<cd> random_vec(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<cd> v(n);
    for (auto& x : v) {
        const double re = g(rng);
        x = cd(re, g(rng));
    }
    return v;
}

double rel(cd a, cd b) {
    const double s = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) / s;
}

std::vector<const KernelTable*> variants() {
    std::vector<const KernelTable*> out;
    if (auto* t = irscf::simd::avx2_kernels()) out.push_back(t);
    if (auto* t = irscf::simd::neon_kernels()) out.push_back(t);
    out.push_back(&irscf::simd::active());
    return out;
}

}  // namespace

TEST_CASE("SIMD kernels agree with the scalar reference for every length up to 37") {
    std::mt19937_64 rng(7);
    const KernelTable& ref = irscf::simd::scalar_kernels();
    for (const KernelTable* t : variants()) {
        INFO("variant " << t->name);
        for (std::size_t n = 0; n <= 37; ++n) {
            const auto a = random_vec(n, rng);
            const auto b = random_vec(n, rng);
            CHECK(rel(t->dotc(a.data(), b.data(), n), ref.dotc(a.data(), b.data(), n)) < 1e-13);
            CHECK(rel(t->dotu(a.data(), b.data(), n), ref.dotu(a.data(), b.data(), n)) < 1e-13);
            CHECK(rel(t->norm2(a.data(), n), ref.norm2(a.data(), n)) < 1e-13);

            auto y1 = b, y2 = b;
            const cd alpha(0.3, -1.7);
            t->axpy(alpha, a.data(), y1.data(), n);
            ref.axpy(alpha, a.data(), y2.data(), n);
            for (std::size_t i = 0; i < n; ++i) CHECK(rel(y1[i], y2[i]) < 1e-14);

            std::vector<cd> o1(n), o2(n);
            t->mul_conj(a.data(), b.data(), o1.data(), n);
            ref.mul_conj(a.data(), b.data(), o2.data(), n);
            for (std::size_t i = 0; i < n; ++i) CHECK(rel(o1[i], o2[i]) < 1e-14);
        }
    }
}

TEST_CASE("mul_conj may write in place") {
    std::mt19937_64 rng(8);
    for (const KernelTable* t : variants()) {
        const auto a = random_vec(9, rng);
        const auto b = random_vec(9, rng);
        auto inplace = a;
        t->mul_conj(inplace.data(), b.data(), inplace.data(), 9);
        for (std::size_t i = 0; i < 9; ++i) CHECK(rel(inplace[i], a[i] * std::conj(b[i])) < 1e-14);
    }
}

TEST_CASE("scalar reference matches the definitions") {
    const std::vector<cd> a = {{1, 2}, {3, -1}};
    const std::vector<cd> b = {{0, 1}, {2, 2}};
    const auto& ref = irscf::simd::scalar_kernels();
    CHECK(ref.dotc(a.data(), b.data(), 2) == std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1]);
    CHECK(ref.dotu(a.data(), b.data(), 2) == a[0] * b[0] + a[1] * b[1]);
    CHECK(ref.norm2(a.data(), 2) == doctest::Approx(15.0));
}

TEST_CASE("span wrappers reject mismatched lengths") {
    std::vector<cd> a(3), b(4), out(3);
    CHECK_THROWS_AS(irscf::simd::dotc(a, b), std::invalid_argument);
    CHECK_THROWS_AS(irscf::simd::mul_conj(a, b, out), std::invalid_argument);
    CHECK_THROWS_AS(irscf::simd::axpy(cd(1), a, b), std::invalid_argument);
}
