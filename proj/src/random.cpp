#include "irscf/random.hpp"

#include <cmath>
#include <numbers>

namespace irscf {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng make_rng(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t s = master;
    splitmix64(s);
    s ^= stream * 0xd1b54a32d192ed03ULL;
    splitmix64(s);
    s ^= index * 0xaef17502108ef2d9ULL;
    std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s)),
                      static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s))};
    return Rng(seq);
}

CMatrix cscg(Index rows, Index cols, double variance, Rng& rng) {
    CMatrix out(rows, cols);
    if (variance == 0.0) {
        out.setZero();
        return out;
    }
    std::normal_distribution<double> n(0.0, std::sqrt(variance / 2.0));
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) {
            const double re = n(rng);
            const double im = n(rng);
            out(i, j) = {re, im};
        }
    return out;
}

CVector random_phases(Index n, double modulus, Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    CVector out(n);
    for (Index i = 0; i < n; ++i) out(i) = std::polar(modulus, u(rng));
    return out;
}

}  // namespace irscf
