#pragma once

// Objective evaluation: effective channels, the instantaneous and Monte Carlo
// average sum-rate, the closed-form error expectation and the deterministic
// surrogate f₁ with its auxiliary variables.
//
// Stream model: each (AP l, UE k) link carries its own d streams, so user k
// receives the M_U × (L·d) signal block
//     T_k = [Ĥᴴ_{1,k}W_{1,k}, …, Ĥᴴ_{L,k}W_{L,k}]
// and the auxiliaries are Y_k ∈ C^{M_U×Ld}, U_k ∈ C^{Ld×Ld}, Ū_k = I + U_k.
//
// All rates are in nats; convert with nats_to_bits for reporting.

#include <optional>
#include <vector>

#include "irscf/matops.hpp"
#include "irscf/random.hpp"
#include "irscf/scenario.hpp"

namespace irscf {

using ChannelSet = std::vector<std::vector<CMatrix>>;  // [l][k]

struct BeamformerSet {
    ChannelSet W;  // [l][k]  M_B × d
    CVector theta; // R·N, |θ_n| = α
};

struct AuxiliaryState {
    std::vector<CMatrix> Y;  // [k]  M_U × L·d
    std::vector<CMatrix> U;  // [k]  L·d × L·d

    CMatrix U_bar(std::size_t k) const;
};

/// Ĥ_{l,k} = D̂_{l,k} + Ŝ_lᴴ Θᴴ Ĝ_k  (M_B × M_U).
CMatrix effective_channel(const ChannelEstimate& est, const CVector& theta, int l, int k);
ChannelSet effective_channels(const ChannelEstimate& est, const CVector& theta);

/// T_k from precomputed channels.
CMatrix signal_block(const ChannelSet& H, const ChannelSet& W, int k);

/// Interference-plus-noise covariance of user k under one error draw: the
/// estimated-channel multi-user interference plus the error-channel leakage
/// of every stream (own streams included) plus σ²I.
CMatrix interference_covariance(const SystemConfig& cfg, const ChannelEstimate& est,
                                const ErrorSample& err, const BeamformerSet& bf, int k);

/// Σ_k log det(V_k + T_kT_kᴴ) − log det V_k for one error draw.
double instant_sum_rate(const SystemConfig& cfg, const ChannelEstimate& est, const ErrorSample& err,
                        const BeamformerSet& bf);

struct McEstimate {
    double mean = 0.0;
    std::optional<double> std_error;  // absent for a single sample
    int samples = 0;
};

/// Average of instant_sum_rate over `samples` fresh error draws from `rng`,
/// accumulated in draw order.
McEstimate avg_sum_rate_mc(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& bf,
                           Rng& rng, int samples);

/// Closed form of Σ_{k,l,i} E{Tr(Ū_k Y_kᴴ H̄ᴴ_{l,k} W_{l,i} W_{l,i}ᴴ H̄_{l,k} Y_k)}.
/// Uses |θ_n|² = α² and never reads the phases of θ.
double expectation_closed_form(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& bf,
                               const AuxiliaryState& aux);

struct DeterministicCovariance {
    CMatrix full;       // Ṽ_k
    CMatrix leave_out;  // Ṽ_k − T_k T_kᴴ
};

DeterministicCovariance deterministic_V(const SystemConfig& cfg, const ChannelEstimate& est,
                                        const BeamformerSet& bf, int k);
/// Same, with H = effective_channels(est, bf.theta) supplied by the caller.
DeterministicCovariance deterministic_V(const SystemConfig& cfg, const ChannelEstimate& est,
                                        const BeamformerSet& bf, const ChannelSet& H, int k);

/// Surrogate f₁ with the expectation replaced by its closed form. The complex
/// variant keeps the imaginary part that cancels for Hermitian Ū_k.
double surrogate_f1(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& bf,
                    const AuxiliaryState& aux);
Complex surrogate_f1_complex(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& bf,
                             const AuxiliaryState& aux);

/// Σ_k log det Ṽ_k − log det(Ṽ_k − T_kT_kᴴ); equals f₁ at the inner optimum
/// of (Y, U).
double deterministic_rate(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& bf);

double nats_to_bits(double nats);

/// Σ_k ‖W_{l,k}‖_F² for each AP.
std::vector<double> ap_powers(const BeamformerSet& bf);

}  // namespace irscf
