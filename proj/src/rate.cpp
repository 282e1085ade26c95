#include "irscf/rate.hpp"

#include <cmath>
#include <numbers>

#include "irscf/errors.hpp"

namespace irscf {
namespace {

int num_aps(const ChannelEstimate& est) { return static_cast<int>(est.D_hat.size()); }
int num_ues(const ChannelEstimate& est) { return est.D_hat.empty() ? 0 : static_cast<int>(est.D_hat[0].size()); }
Index num_elements(const ChannelEstimate& est) { return est.G_stack.empty() ? 0 : est.G_stack[0].rows(); }

// Scalar weights of the error-induced terms of Ṽ_k:
//   Ṽ_k ∋ c_k I + a_k Ĝ_kᴴĜ_k.
struct ErrorWeights {
    std::vector<double> c;  // [k]
    std::vector<double> a;  // [k]
};

ErrorWeights error_weights(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& bf) {
    const int L = num_aps(est), K = num_ues(est);
    const double a2 = cfg.alpha * cfg.alpha;
    const double rn = static_cast<double>(num_elements(est));
    ErrorWeights w{std::vector<double>(K, 0.0), std::vector<double>(K, 0.0)};
    for (int l = 0; l < L; ++l) {
        double p_l = 0.0, sp_l = 0.0;
        for (int i = 0; i < K; ++i) {
            p_l += frob2(bf.W[l][i]);
            sp_l += frob2(est.S_stack[l] * bf.W[l][i]);
        }
        for (int k = 0; k < K; ++k) {
            w.c[k] += (est.delta2_D[l][k] + a2 * rn * est.delta2_G[k] * est.delta2_S[l]) * p_l +
                      a2 * est.delta2_G[k] * sp_l;
            w.a[k] += a2 * est.delta2_S[l] * p_l;
        }
    }
    return w;
}

// Σ_{l,i} Ĥᴴ_{l,k} W_{l,i} W_{l,i}ᴴ Ĥ_{l,k}, optionally without i = k
CMatrix multiuser_term(const ChannelSet& H, const ChannelSet& W, int k, bool skip_own = false) {
    const Index mu = H[0][k].cols();
    CMatrix out = CMatrix::Zero(mu, mu);
    for (std::size_t l = 0; l < H.size(); ++l)
        for (std::size_t i = 0; i < W[l].size(); ++i) {
            if (skip_own && static_cast<int>(i) == k) continue;
            const CMatrix f = H[l][k].adjoint() * W[l][i];
            out.noalias() += f * f.adjoint();
        }
    return out;
}

// Per-user pieces of the closed-form expectation: t_k = Tr(YŪYᴴ) and
// g_k = Tr(ĜYŪYᴴĜᴴ).
Complex trace_t(const CMatrix& Y, const CMatrix& Ubar) { return (Y * Ubar * Y.adjoint()).trace(); }
Complex trace_g(const CMatrix& G, const CMatrix& Y, const CMatrix& Ubar) {
    const CMatrix gy = G * Y;
    return (gy * Ubar * gy.adjoint()).trace();
}

Complex expectation_complex(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& bf,
                            const AuxiliaryState& aux) {
    const ErrorWeights w = error_weights(cfg, est, bf);
    Complex sum = 0.0;
    for (int k = 0; k < num_ues(est); ++k) {
        const CMatrix ub = aux.U_bar(k);
        sum += w.c[k] * trace_t(aux.Y[k], ub);
        if (w.a[k] != 0.0) sum += w.a[k] * trace_g(est.G_stack[k], aux.Y[k], ub);
    }
    return sum;
}

}  // namespace

CMatrix AuxiliaryState::U_bar(std::size_t k) const {
    return CMatrix::Identity(U[k].rows(), U[k].cols()) + U[k];
}

CMatrix effective_channel(const ChannelEstimate& est, const CVector& theta, int l, int k) {
    const CMatrix tg = theta.conjugate().asDiagonal() * est.G_stack[k];
    return est.D_hat[l][k] + est.S_stack[l].adjoint() * tg;
}

ChannelSet effective_channels(const ChannelEstimate& est, const CVector& theta) {
    const int L = num_aps(est), K = num_ues(est);
    ChannelSet H(L, std::vector<CMatrix>(K));
    for (int k = 0; k < K; ++k) {
        const CMatrix tg = theta.conjugate().asDiagonal() * est.G_stack[k];
        for (int l = 0; l < L; ++l) H[l][k] = est.D_hat[l][k] + est.S_stack[l].adjoint() * tg;
    }
    return H;
}

CMatrix signal_block(const ChannelSet& H, const ChannelSet& W, int k) {
    const Index L = static_cast<Index>(H.size());
    const Index d = W[0][k].cols();
    CMatrix T(H[0][k].cols(), L * d);
    for (Index l = 0; l < L; ++l) T.middleCols(l * d, d) = H[l][k].adjoint() * W[l][k];
    return T;
}

CMatrix interference_covariance(const SystemConfig& cfg, const ChannelEstimate& est, const ErrorSample& err,
                                const BeamformerSet& bf, int k) {
    const int L = num_aps(est), K = num_ues(est);
    const Index mu = est.D_hat[0][k].cols();
    CMatrix V = cfg.sigma2_w * CMatrix::Identity(mu, mu);

    const auto tconj = bf.theta.conjugate().asDiagonal();
    const CMatrix tg_hat = tconj * est.G_stack[k];
    const CMatrix tg_bar = tconj * err.G_bar[k];
    const CMatrix tg_act = tg_hat + tg_bar;
    for (int l = 0; l < L; ++l) {
        const CMatrix H = est.D_hat[l][k] + est.S_stack[l].adjoint() * tg_hat;
        // H̄ = D̄ + ŜᴴΘᴴḠ + S̄ᴴΘᴴ(Ĝ + Ḡ)
        const CMatrix Hbar =
            err.D_bar[l][k] + est.S_stack[l].adjoint() * tg_bar + err.S_bar[l].adjoint() * tg_act;
        for (int i = 0; i < K; ++i) {
            if (i != k) {
                const CMatrix f = H.adjoint() * bf.W[l][i];
                V.noalias() += f * f.adjoint();
            }
            const CMatrix e = Hbar.adjoint() * bf.W[l][i];
            V.noalias() += e * e.adjoint();
        }
    }
    return V;
}

double instant_sum_rate(const SystemConfig& cfg, const ChannelEstimate& est, const ErrorSample& err,
                        const BeamformerSet& bf) {
    const ChannelSet H = effective_channels(est, bf.theta);
    double sum = 0.0;
    for (int k = 0; k < num_ues(est); ++k) {
        const CMatrix V = interference_covariance(cfg, est, err, bf, k);
        const CMatrix T = signal_block(H, bf.W, k);
        sum += log_det_hpd(V + T * T.adjoint()) - log_det_hpd(V);
    }
    return sum;
}

McEstimate avg_sum_rate_mc(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& bf,
                           Rng& rng, int samples) {
    if (samples < 1) throw std::invalid_argument("avg_sum_rate_mc: samples must be >= 1");
    // Welford accumulation in draw order.
    double mean = 0.0, m2 = 0.0;
    for (int s = 0; s < samples; ++s) {
        const ErrorSample err = sample_csi_error(est, rng);
        const double r = instant_sum_rate(cfg, est, err, bf);
        const double delta = r - mean;
        mean += delta / (s + 1);
        m2 += delta * (r - mean);
    }
    McEstimate out;
    out.mean = mean;
    out.samples = samples;
    if (samples >= 2) out.std_error = std::sqrt(m2 / (samples - 1) / samples);
    return out;
}

double expectation_closed_form(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& bf,
                               const AuxiliaryState& aux) {
    return expectation_complex(cfg, est, bf, aux).real();
}

DeterministicCovariance deterministic_V(const SystemConfig& cfg, const ChannelEstimate& est,
                                        const BeamformerSet& bf, int k) {
    return deterministic_V(cfg, est, bf, effective_channels(est, bf.theta), k);
}

DeterministicCovariance deterministic_V(const SystemConfig& cfg, const ChannelEstimate& est,
                                        const BeamformerSet& bf, const ChannelSet& H, int k) {
    const ErrorWeights w = error_weights(cfg, est, bf);
    DeterministicCovariance out;
    out.leave_out = multiuser_term(H, bf.W, k, true);
    out.leave_out.diagonal().array() += w.c[k] + cfg.sigma2_w;
    if (w.a[k] != 0.0) out.leave_out.noalias() += w.a[k] * est.G_stack[k].adjoint() * est.G_stack[k];
    out.leave_out = hermitian_part(out.leave_out);
    const CMatrix T = signal_block(H, bf.W, k);
    out.full = hermitian_part(out.leave_out + T * T.adjoint());
    return out;
}

Complex surrogate_f1_complex(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& bf,
                             const AuxiliaryState& aux) {
    const ChannelSet H = effective_channels(est, bf.theta);
    Complex sum = 0.0;
    for (int k = 0; k < num_ues(est); ++k) {
        const CMatrix ub = aux.U_bar(k);
        const CMatrix& Y = aux.Y[k];
        const CMatrix T = signal_block(H, bf.W, k);
        const CMatrix yt = Y.adjoint() * T;
        const CMatrix yvy = Y.adjoint() * multiuser_term(H, bf.W, k) * Y;
        sum += log_det(ub) - aux.U[k].trace();
        sum += (ub * yt).trace() + (ub * yt.adjoint()).trace();
        sum -= (ub * yvy).trace();
        sum -= cfg.sigma2_w * (ub * Y.adjoint() * Y).trace();
    }
    return sum - expectation_complex(cfg, est, bf, aux);
}

double surrogate_f1(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& bf,
                    const AuxiliaryState& aux) {
    return surrogate_f1_complex(cfg, est, bf, aux).real();
}

double deterministic_rate(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& bf) {
    const ChannelSet H = effective_channels(est, bf.theta);
    double sum = 0.0;
    for (int k = 0; k < num_ues(est); ++k) {
        const DeterministicCovariance v = deterministic_V(cfg, est, bf, H, k);
        sum += log_det_hpd(v.full) - log_det_hpd(v.leave_out);
    }
    return sum;
}

double nats_to_bits(double nats) { return nats / std::numbers::ln2; }

std::vector<double> ap_powers(const BeamformerSet& bf) {
    std::vector<double> p;
    for (const auto& row : bf.W) {
        double s = 0.0;
        for (const auto& w : row) s += frob2(w);
        p.push_back(s);
    }
    return p;
}

}  // namespace irscf
