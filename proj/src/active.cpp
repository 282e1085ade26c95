#include <Eigen/Eigenvalues>
#include <cmath>

#include "irscf/errors.hpp"
#include "irscf/optim.hpp"

namespace irscf {

CMatrix build_A(const SystemConfig& cfg, const ChannelEstimate& est, const CVector& theta,
                const AuxiliaryState& aux, int l) {
    const int K = static_cast<int>(est.G_stack.size());
    const Index mb = est.S_stack[l].cols();
    const double a2 = cfg.alpha * cfg.alpha;
    const double rn = static_cast<double>(est.S_stack[l].rows());

    CMatrix A = CMatrix::Zero(mb, mb);
    double scaled_identity = 0.0, sts_weight = 0.0;
    for (int k = 0; k < K; ++k) {
        const CMatrix ub = aux.U_bar(k);
        const CMatrix hy = effective_channel(est, theta, l, k) * aux.Y[k];
        A.noalias() += hy * ub * hy.adjoint();

        const double t = (aux.Y[k] * ub * aux.Y[k].adjoint()).trace().real();
        scaled_identity += (est.delta2_D[l][k] + a2 * rn * est.delta2_G[k] * est.delta2_S[l]) * t;
        sts_weight += a2 * est.delta2_G[k] * t;
        if (est.delta2_S[l] != 0.0) {
            const CMatrix gy = est.G_stack[k] * aux.Y[k];
            scaled_identity += a2 * est.delta2_S[l] * (gy * ub * gy.adjoint()).trace().real();
        }
    }
    A.diagonal().array() += scaled_identity;
    if (sts_weight != 0.0) A.noalias() += sts_weight * est.S_stack[l].adjoint() * est.S_stack[l];
    return hermitian_part(A);
}

WUpdate update_W(const SystemConfig& cfg, const ChannelEstimate& est, const CVector& theta,
                 const AuxiliaryState& aux) {
    const int L = static_cast<int>(est.S_stack.size());
    const int K = static_cast<int>(est.G_stack.size());
    const Index d = aux.Y.empty() ? 0 : aux.Y[0].cols() / L;
    const double P = cfg.p_max_w;

    WUpdate out;
    out.W.assign(L, std::vector<CMatrix>(K));
    out.ap.resize(L);
    for (int l = 0; l < L; ++l) {
        const Index mb = est.S_stack[l].cols();
        std::vector<CMatrix> B(K);
        double b_energy = 0.0;
        for (int k = 0; k < K; ++k) {
            B[k] = (effective_channel(est, theta, l, k) * aux.Y[k] * aux.U_bar(k)).middleCols(l * d, d);
            b_energy += frob2(B[k]);
        }
        ApPowerSolution& sol = out.ap[l];
        if (b_energy == 0.0) {
            for (int k = 0; k < K; ++k) out.W[l][k] = CMatrix::Zero(mb, d);
            sol.residual = -P;
            continue;
        }

        const CMatrix A = build_A(cfg, est, theta, aux, l);
        Eigen::SelfAdjointEigenSolver<CMatrix> eig(A);
        if (eig.info() != Eigen::Success) throw NumericalError("update_W: eigendecomposition failed");
        const Eigen::VectorXd lam = eig.eigenvalues().cwiseMax(0.0);
        const CMatrix& Qm = eig.eigenvectors();

        std::vector<CMatrix> QB(K);
        Eigen::VectorXd c = Eigen::VectorXd::Zero(mb);
        for (int k = 0; k < K; ++k) {
            QB[k] = Qm.adjoint() * B[k];
            c += QB[k].rowwise().squaredNorm();
        }
        auto g = [&](double x, double shift) {
            double s = 0.0;
            for (Index j = 0; j < mb; ++j) s += c(j) / ((lam(j) + shift + x) * (lam(j) + shift + x));
            return s - P;
        };

        double ridge = 0.0;
        const double scale = A.trace().real() / static_cast<double>(mb);
        if (lam.minCoeff() <= 1e-12 * scale) ridge = 1e-12 * scale;

        double lambda = 0.0;
        const double g0 = g(0.0, ridge);
        if (std::isfinite(g0) && g0 <= 0.0) {
            sol.ridge = ridge > 0.0;
            sol.residual = g0;
        } else {
            ridge = 0.0;
            double lo = 0.0;
            double hi = std::sqrt(b_energy / P);
            sol.upper_bound0 = hi;
            while (g(hi, 0.0) > 0.0) {
                lo = hi;
                hi *= 2.0;
            }
            const double tol = cfg.bisection_eps;
            double g_hi = g(hi, 0.0);
            while (hi - lo > tol * hi) {
                const double mid = 0.5 * (lo + hi);
                const double gm = g(mid, 0.0);
                ++sol.iterations;
                if (std::abs(gm) <= 1e-10 * P) {
                    hi = mid;
                    g_hi = gm;
                    break;
                }
                if (gm > 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                    g_hi = gm;
                }
            }
            lambda = hi;
            sol.residual = g_hi;
        }
        sol.lambda = lambda;

        const Eigen::VectorXd inv = (lam.array() + ridge + lambda).inverse().matrix();
        double power = 0.0;
        for (int k = 0; k < K; ++k) {
            out.W[l][k] = Qm * (inv.asDiagonal() * QB[k]);
            power += frob2(out.W[l][k]);
        }
        sol.power = power;
    }
    return out;
}

}  // namespace irscf
