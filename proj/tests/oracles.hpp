#pragma once

// Test-side reference computations. These deliberately avoid the library's
// own formulas: channels are assembled per IRS block with explicit Θ
// matrices, and expectations are estimated by drawing raw Gaussian errors.

#include <cmath>
#include <random>
#include <vector>

#include "irscf/optim.hpp"

namespace oracle {

using irscf::CMatrix;
using irscf::CVector;
using irscf::Complex;
using irscf::Index;

inline CMatrix gaussian(Index rows, Index cols, double var, std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    const double s = std::sqrt(var / 2.0);
    CMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) {
            const double re = n(rng);
            m(i, j) = Complex(s * re, s * n(rng));
        }
    return m;
}

inline irscf::SystemConfig desk_config() {
    irscf::SystemConfig c;
    c.L = 2;
    c.R = 2;
    c.K = 2;
    c.M_B = 2;
    c.M_U = 2;
    c.N = 4;
    c.N_h = 2;
    c.d = 2;
    return c;
}

inline irscf::ChannelEstimate channels(const irscf::SystemConfig& cfg, std::uint64_t seed) {
    irscf::Rng rng = irscf::make_rng(seed, 100, 0);
    const auto pl = irscf::make_placement(cfg, rng);
    return irscf::generate_channels(cfg, pl, rng);
}

/// Ĥ_{l,k} = D̂ + Σ_r Ŝ_{l,r}ᴴ Θ_rᴴ Ĝ_{r,k}, per IRS block.
inline CMatrix channel_blockwise(const irscf::ChannelEstimate& est, const CVector& theta, int l, int k) {
    CMatrix h = est.D_hat[l][k];
    const Index n = est.G_hat[0][k].rows();
    for (std::size_t r = 0; r < est.G_hat.size(); ++r) {
        CMatrix Th = CMatrix::Zero(n, n);
        for (Index i = 0; i < n; ++i) Th(i, i) = theta(static_cast<Index>(r) * n + i);
        h += est.S_hat[l][r].adjoint() * Th.adjoint() * est.G_hat[r][k];
    }
    return h;
}

/// Random Hermitian PSD matrix scaled to unit average diagonal.
inline CMatrix random_psd(Index n, std::mt19937_64& rng) {
    const CMatrix a = gaussian(n, n, 1.0, rng);
    return a * a.adjoint() / static_cast<double>(n);
}

/// Random auxiliaries shaped for the per-link stream model, with Y scaled so
/// the f₁ terms are of order one (Y ~ T / σ² in practice).
inline irscf::AuxiliaryState random_aux(const irscf::SystemConfig& cfg, double y_scale, std::mt19937_64& rng) {
    irscf::AuxiliaryState aux;
    const Index ld = static_cast<Index>(cfg.L) * cfg.streams();
    for (int k = 0; k < cfg.K; ++k) {
        aux.Y.push_back(y_scale * gaussian(cfg.M_U, ld, 1.0, rng));
        aux.U.push_back(random_psd(ld, rng));
    }
    return aux;
}

inline irscf::BeamformerSet random_beamformers(const irscf::SystemConfig& cfg, const irscf::ChannelEstimate& est,
                                               std::mt19937_64& rng) {
    irscf::BeamformerSet bf;
    bf.W.assign(cfg.L, std::vector<CMatrix>(cfg.K));
    for (int l = 0; l < cfg.L; ++l) {
        double p = 0.0;
        for (int k = 0; k < cfg.K; ++k) {
            bf.W[l][k] = gaussian(cfg.M_B, cfg.streams(), 1.0, rng);
            p += bf.W[l][k].squaredNorm();
        }
        for (auto& w : bf.W[l]) w *= std::sqrt(cfg.p_max_w / p);
    }
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    const Index rn = est.G_stack[0].rows();
    bf.theta.resize(rn);
    for (Index i = 0; i < rn; ++i) bf.theta(i) = std::polar(cfg.alpha, u(rng));
    return bf;
}

struct MeanSe {
    double mean = 0.0;
    double se = 0.0;
};

inline MeanSe mean_se(const std::vector<double>& xs) {
    MeanSe m;
    for (double x : xs) m.mean += x;
    m.mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    m.se = std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
    return m;
}

/// Monte Carlo estimate of Σ_{k,l,i} Tr(Ū_k Y_kᴴ H̄ᴴ_{l,k} W_{l,i} W_{l,i}ᴴ H̄_{l,k} Y_k),
/// with H̄ the difference between the actual and estimated channel,
/// built from per-IRS error blocks of variance δ².
inline MeanSe expectation_mc(const irscf::ChannelEstimate& est, const irscf::BeamformerSet& bf,
                             const irscf::AuxiliaryState& aux, int draws, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int L = static_cast<int>(est.D_hat.size());
    const int K = static_cast<int>(est.D_hat[0].size());
    const int R = static_cast<int>(est.G_hat.size());
    const Index n = est.G_hat[0][0].rows();

    std::vector<CMatrix> Th(R);
    for (int r = 0; r < R; ++r) {
        Th[r] = CMatrix::Zero(n, n);
        for (Index i = 0; i < n; ++i) Th[r](i, i) = bf.theta(r * n + i);
    }
    std::vector<CMatrix> Ubar(K);
    for (int k = 0; k < K; ++k) Ubar[k] = CMatrix::Identity(aux.U[k].rows(), aux.U[k].cols()) + aux.U[k];

    std::vector<double> samples;
    samples.reserve(draws);
    for (int s = 0; s < draws; ++s) {
        std::vector<std::vector<CMatrix>> Gb(R, std::vector<CMatrix>(K)), Sb(L, std::vector<CMatrix>(R));
        for (int r = 0; r < R; ++r)
            for (int k = 0; k < K; ++k)
                Gb[r][k] = gaussian(n, est.G_hat[r][k].cols(), est.delta2_G[k], rng);
        for (int l = 0; l < L; ++l)
            for (int r = 0; r < R; ++r) Sb[l][r] = gaussian(n, est.S_hat[l][r].cols(), est.delta2_S[l], rng);

        double total = 0.0;
        for (int l = 0; l < L; ++l)
            for (int k = 0; k < K; ++k) {
                const CMatrix Db = gaussian(est.D_hat[l][k].rows(), est.D_hat[l][k].cols(), est.delta2_D[l][k], rng);
                // actual − estimate, per IRS block
                CMatrix Hb = Db;
                for (int r = 0; r < R; ++r) {
                    const CMatrix act = (est.S_hat[l][r] + Sb[l][r]).adjoint() * Th[r].adjoint() *
                                        (est.G_hat[r][k] + Gb[r][k]);
                    const CMatrix nom = est.S_hat[l][r].adjoint() * Th[r].adjoint() * est.G_hat[r][k];
                    Hb += act - nom;
                }
                for (int i = 0; i < K; ++i) {
                    const CMatrix x = aux.Y[k].adjoint() * Hb.adjoint() * bf.W[l][i];
                    total += (Ubar[k] * x * x.adjoint()).trace().real();
                }
            }
        samples.push_back(total);
    }
    return mean_se(samples);
}

/// Best ρ over `draws` random unit-modulus (times α) phase vectors.
inline double best_random_rho(const irscf::ThetaSubproblem& sub, double alpha, int draws, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    const Index n = sub.omega.size();
    CVector t(n);
    double best = -INFINITY;
    for (int s = 0; s < draws; ++s) {
        for (Index i = 0; i < n; ++i) t(i) = std::polar(alpha, u(rng));
        const double v = -(t.adjoint() * sub.Zcal * t)(0, 0).real() + 2.0 * (t.adjoint() * sub.omega)(0, 0).real();
        best = std::max(best, v);
    }
    return best;
}

/// Exhaustive search of ρ over the 2^b-level grid (small n only).
inline double exhaustive_rho(const irscf::ThetaSubproblem& sub, double alpha, int b) {
    const Index n = sub.omega.size();
    const long levels = 1L << b;
    long total = 1;
    for (Index i = 0; i < n; ++i) total *= levels;
    double best = -INFINITY;
    CVector t(n);
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (Index i = 0; i < n; ++i) {
            t(i) = std::polar(alpha, 2.0 * M_PI * static_cast<double>(c % levels) / static_cast<double>(levels));
            c /= levels;
        }
        const double v = -(t.adjoint() * sub.Zcal * t)(0, 0).real() + 2.0 * (t.adjoint() * sub.omega)(0, 0).real();
        best = std::max(best, v);
    }
    return best;
}

}  // namespace oracle
