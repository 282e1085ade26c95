#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "irscf/kernels.hpp"
#include "irscf/optim.hpp"

namespace irscf {

double ThetaSubproblem::rho(const CVector& theta) const {
    const std::span<const Complex> t(theta.data(), static_cast<std::size_t>(theta.size()));
    const std::span<const Complex> w(omega.data(), static_cast<std::size_t>(omega.size()));
    return -quad_form(Zcal, theta).real() + 2.0 * simd::dotc(t, w).real();
}

ThetaSubproblem build_theta_subproblem(const ChannelEstimate& est, const BeamformerSet& bf,
                                       const AuxiliaryState& aux) {
    const int L = static_cast<int>(est.S_stack.size());
    const int K = static_cast<int>(est.G_stack.size());
    const Index rn = est.G_stack.empty() ? 0 : est.G_stack[0].rows();

    // Per-AP transmit covariance Σ_i W_{l,i} W_{l,i}ᴴ.
    std::vector<CMatrix> Rl(L);
    for (int l = 0; l < L; ++l) {
        const Index mb = est.S_stack[l].cols();
        Rl[l] = CMatrix::Zero(mb, mb);
        for (const auto& w : bf.W[l]) Rl[l].noalias() += w * w.adjoint();
    }

    ThetaSubproblem sub;
    sub.Z = CMatrix::Zero(rn, rn);
    sub.Q = CMatrix::Zero(rn, rn);
    sub.C = CMatrix::Zero(rn, rn);
    sub.E = CMatrix::Zero(rn, rn);
    for (int l = 0; l < L; ++l) sub.Q.noalias() += est.S_stack[l] * Rl[l] * est.S_stack[l].adjoint();

    for (int k = 0; k < K; ++k) {
        const CMatrix gyu = est.G_stack[k] * aux.Y[k] * aux.U_bar(k);
        const CMatrix gyuy = gyu * aux.Y[k].adjoint();
        sub.Z.noalias() += gyuy * est.G_stack[k].adjoint();

        CMatrix drs = CMatrix::Zero(est.D_hat[0][k].cols(), rn);
        for (int l = 0; l < L; ++l) drs.noalias() += est.D_hat[l][k].adjoint() * Rl[l] * est.S_stack[l].adjoint();
        sub.C.noalias() += gyuy * drs;

        const Index d = bf.W[0][k].cols();
        CMatrix sw(rn, L * d);
        for (int l = 0; l < L; ++l) sw.middleCols(l * d, d) = est.S_stack[l] * bf.W[l][k];
        sub.E.noalias() += gyu * sw.adjoint();
    }
    sub.Z = hermitian_part(sub.Z);
    sub.Q = hermitian_part(sub.Q);
    sub.Zcal = hermitian_part(hadamard_conj(sub.Z, sub.Q));
    sub.omega = vecd(sub.E - sub.C);
    return sub;
}

AsoResult aso_optimize(const ThetaSubproblem& sub, const CVector& theta_init, double alpha,
                       const AsoOptions& opts) {
    const Index n = theta_init.size();
    AsoResult res;
    res.theta = theta_init;
    double rho = sub.rho(res.theta);
    const auto len = static_cast<std::size_t>(n);

    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        const double rho_start = rho;
        double running = rho;
        for (Index i = 0; i < n; ++i) {
            // 𝒵 is Hermitian, so row i of 𝒵 is conj(column i).
            const std::span<const Complex> col(sub.Zcal.col(i).data(), len);
            const std::span<const Complex> th(res.theta.data(), len);
            const Complex mu = sub.omega(i) - (simd::dotc(col, th) - sub.Zcal(i, i) * res.theta(i));
            if (mu == Complex(0.0, 0.0)) {
                if (opts.on_element) opts.on_element(i, res.theta, running, running);
                continue;
            }
            const Complex updated = alpha * mu / std::abs(mu);
            const double after = running + 2.0 * (std::conj(updated - res.theta(i)) * mu).real();
            res.theta(i) = updated;
            if (opts.on_element) opts.on_element(i, res.theta, running, after);
            running = after;
        }
        rho = sub.rho(res.theta);
        res.sweeps = sweep + 1;
        if (std::abs(rho - rho_start) <= opts.eps) {
            res.converged = true;
            break;
        }
    }
    res.rho = rho;
    return res;
}

double aso_rho_bound(const ThetaSubproblem& sub, double alpha) {
    const Index n = sub.Zcal.rows();
    if (n == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(sub.Zcal, Eigen::EigenvaluesOnly);
    return -alpha * alpha * static_cast<double>(n) * eig.eigenvalues().minCoeff() +
           2.0 * alpha * sub.omega.cwiseAbs().sum();
}

CVector project_discrete(const CVector& theta, int b, double alpha) {
    const long levels = 1L << b;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(levels);
    CVector out(theta.size());
    for (Index i = 0; i < theta.size(); ++i) {
        long g = std::lround(std::arg(theta(i)) / step) % levels;
        if (g < 0) g += levels;
        out(i) = std::polar(alpha, step * static_cast<double>(g));
    }
    return out;
}

}  // namespace irscf
