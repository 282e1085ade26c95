#include <Eigen/Cholesky>

#include "irscf/errors.hpp"
#include "irscf/optim.hpp"

namespace irscf {
namespace {

Eigen::LLT<CMatrix> factor(const CMatrix& v, const char* what) {
    Eigen::LLT<CMatrix> llt(v);
    if (llt.info() != Eigen::Success) throw NumericalError(std::string(what) + ": covariance not positive definite");
    return llt;
}

}  // namespace

std::vector<CMatrix> update_Y(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& bf) {
    const ChannelSet H = effective_channels(est, bf.theta);
    const int K = static_cast<int>(est.G_stack.size());
    std::vector<CMatrix> Y(K);
    for (int k = 0; k < K; ++k) {
        const DeterministicCovariance v = deterministic_V(cfg, est, bf, H, k);
        Y[k] = factor(v.full, "update_Y").solve(signal_block(H, bf.W, k));
    }
    return Y;
}

std::vector<CMatrix> update_U(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& bf) {
    const ChannelSet H = effective_channels(est, bf.theta);
    const int K = static_cast<int>(est.G_stack.size());
    std::vector<CMatrix> U(K);
    for (int k = 0; k < K; ++k) {
        const DeterministicCovariance v = deterministic_V(cfg, est, bf, H, k);
        const auto llt = factor(v.leave_out, "update_U");
        const CMatrix x = llt.matrixL().solve(signal_block(H, bf.W, k));
        U[k] = hermitian_part(x.adjoint() * x);
    }
    return U;
}

}  // namespace irscf
