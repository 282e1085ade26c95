#pragma once

// Block coordinate descent over (Y, U, W, θ) for the deterministic surrogate
// f₁, with bisection for the per-AP power multipliers and alternate
// sequential optimization (ASO) of the phase vector.

#include <functional>
#include <vector>

#include "irscf/rate.hpp"

namespace irscf {

/// Y_k = Ṽ_k⁻¹ T_k
std::vector<CMatrix> update_Y(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& bf);
/// U_k = T_kᴴ (Ṽ_k − T_kT_kᴴ)⁻¹ T_k, Hermitian by construction.
std::vector<CMatrix> update_U(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& bf);

/// Quadratic weight of W_{l,·} in f₁; Hermitian PSD.
CMatrix build_A(const SystemConfig& cfg, const ChannelEstimate& est, const CVector& theta,
                const AuxiliaryState& aux, int l);

struct ApPowerSolution {
    double lambda = 0.0;
    double residual = 0.0;     // g_l(λ) = Σ_k‖W_{l,k}(λ)‖² − P_max
    double power = 0.0;
    int iterations = 0;        // bisection steps (0 when λ = 0)
    double upper_bound0 = 0.0; // initial bracket end before doubling
    bool ridge = false;        // A_l was regularized at λ = 0
};

struct WUpdate {
    ChannelSet W;
    std::vector<ApPowerSolution> ap;
};

WUpdate update_W(const SystemConfig& cfg, const ChannelEstimate& est, const CVector& theta,
                 const AuxiliaryState& aux);

/// f₁ restricted to θ: const − θᴴ𝒵θ + 2Re{θᴴω}.
struct ThetaSubproblem {
    CMatrix Z, Q, C, E;
    CMatrix Zcal;   // Z ⊙ Qᵀ
    CVector omega;  // vecd(E − C)

    /// ρ(θ) = −θᴴ𝒵θ + 2Re{θᴴω}
    double rho(const CVector& theta) const;
};

ThetaSubproblem build_theta_subproblem(const ChannelEstimate& est, const BeamformerSet& bf,
                                       const AuxiliaryState& aux);

struct AsoOptions {
    double eps = 1e-9;
    int max_sweeps = 1000;
    /// Called after each element update with (n, θ after the update,
    /// ρ before, ρ after). The ρ values are tracked incrementally.
    std::function<void(Index, const CVector&, double, double)> on_element;
};

struct AsoResult {
    CVector theta;
    double rho = 0.0;
    int sweeps = 0;
    bool converged = false;
};

AsoResult aso_optimize(const ThetaSubproblem& sub, const CVector& theta_init, double alpha,
                       const AsoOptions& opts = {});

/// −α²·n·λ_min(𝒵) + 2α·Σ|ω_n|, an upper bound on ρ over the feasible set.
double aso_rho_bound(const ThetaSubproblem& sub, double alpha);

/// Nearest point of α·e^{j2πg/2^b}, g = 0..2^b−1, per element.
CVector project_discrete(const CVector& theta, int b, double alpha);

/// CSCG W scaled to full power at every AP; uniform phases of modulus α,
/// projected to the grid when b ≥ 1.
BeamformerSet initial_beamformers(const SystemConfig& cfg, const ChannelEstimate& est, Rng& rng);

struct IterationRecord {
    double f1_after_Y = 0.0;
    double f1_after_U = 0.0;
    double f1_after_W = 0.0;
    double f1_after_theta = 0.0;
    double rate = 0.0;  // deterministic rate after the θ step, i.e. Σ_k log det(I + U_k) at the next U step
    std::vector<double> ap_power;
    std::vector<ApPowerSolution> bisection;
    double rho = 0.0;
    int aso_sweeps = 0;
    double modulus_error = 0.0;  // max_n ||θ_n| − α|
    bool projection_accepted = true;
};

struct SolverTrace {
    std::vector<IterationRecord> iterations;
};

struct BcdResult {
    BeamformerSet bf;
    AuxiliaryState aux;
    SolverTrace trace;
    int iterations = 0;
    bool converged = false;
};

/// Iterates Y → U → W → θ until |ΔR̃| < cfg.eps or cfg.max_iters. With
/// b ≥ 1 the ASO output is projected and kept only if it does not lower the
/// deterministic rate relative to the previous θ. Throws NumericalError on a
/// non-finite objective.
BcdResult run_bcd(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& init);

}  // namespace irscf
