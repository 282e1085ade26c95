#pragma once

#include <cstdint>
#include <random>

#include "irscf/matops.hpp"

namespace irscf {

using Rng = std::mt19937_64;

/// Independent stream for (master seed, stream tag, index). Mixing is a
/// SplitMix64 chain, so nearby indices give unrelated states.
Rng make_rng(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

/// i.i.d. circularly-symmetric complex Gaussian entries with the given
/// per-entry variance E|x|².
CMatrix cscg(Index rows, Index cols, double variance, Rng& rng);

/// Uniform phase on [0, 2π), modulus `modulus`.
CVector random_phases(Index n, double modulus, Rng& rng);

}  // namespace irscf
