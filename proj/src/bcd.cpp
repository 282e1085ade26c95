#include <cmath>

#include "irscf/errors.hpp"
#include "irscf/optim.hpp"

namespace irscf {
namespace {

double modulus_error(const CVector& theta, double alpha) {
    double e = 0.0;
    for (Index i = 0; i < theta.size(); ++i) e = std::max(e, std::abs(std::abs(theta(i)) - alpha));
    return e;
}

double checked(double v, const char* what) {
    if (!std::isfinite(v)) throw NumericalError(std::string("run_bcd: non-finite ") + what);
    return v;
}

}  // namespace

BeamformerSet initial_beamformers(const SystemConfig& cfg, const ChannelEstimate& est, Rng& rng) {
    const int L = static_cast<int>(est.S_stack.size());
    const int K = static_cast<int>(est.G_stack.size());
    BeamformerSet bf;
    bf.W.assign(L, std::vector<CMatrix>(K));
    for (int l = 0; l < L; ++l) {
        double p = 0.0;
        for (int k = 0; k < K; ++k) {
            bf.W[l][k] = cscg(cfg.M_B, cfg.streams(), 1.0, rng);
            p += frob2(bf.W[l][k]);
        }
        const double s = std::sqrt(cfg.p_max_w / p);
        for (auto& w : bf.W[l]) w *= s;
    }
    const Index rn = est.G_stack.empty() ? 0 : est.G_stack[0].rows();
    bf.theta = random_phases(rn, cfg.alpha, rng);
    if (cfg.b >= 1) bf.theta = project_discrete(bf.theta, cfg.b, cfg.alpha);
    return bf;
}

BcdResult run_bcd(const SystemConfig& cfg, const ChannelEstimate& est, const BeamformerSet& init) {
    BcdResult res;
    res.bf = init;
    if (cfg.max_iters == 0) return res;

    const int K = static_cast<int>(est.G_stack.size());
    const Index ld = static_cast<Index>(est.S_stack.size()) * init.W[0][0].cols();
    res.aux.U.assign(K, CMatrix::Zero(ld, ld));

    double prev_rate = checked(deterministic_rate(cfg, est, res.bf), "rate");
    for (int t = 0; t < cfg.max_iters; ++t) {
        IterationRecord rec;
        BeamformerSet& bf = res.bf;
        AuxiliaryState& aux = res.aux;

        aux.Y = update_Y(cfg, est, bf);
        rec.f1_after_Y = checked(surrogate_f1(cfg, est, bf, aux), "f1");
        aux.U = update_U(cfg, est, bf);
        rec.f1_after_U = checked(surrogate_f1(cfg, est, bf, aux), "f1");

        WUpdate wu = update_W(cfg, est, bf.theta, aux);
        bf.W = std::move(wu.W);
        rec.bisection = std::move(wu.ap);
        rec.ap_power = ap_powers(bf);
        rec.f1_after_W = checked(surrogate_f1(cfg, est, bf, aux), "f1");

        if (cfg.alpha > 0.0) {
            const ThetaSubproblem sub = build_theta_subproblem(est, bf, aux);
            const AsoResult aso = aso_optimize(sub, bf.theta, cfg.alpha, {cfg.aso_eps, cfg.aso_max_sweeps, {}});
            rec.aso_sweeps = aso.sweeps;
            if (cfg.b >= 1) {
                BeamformerSet candidate = bf;
                candidate.theta = project_discrete(aso.theta, cfg.b, cfg.alpha);
                rec.projection_accepted = deterministic_rate(cfg, est, candidate) >= deterministic_rate(cfg, est, bf);
                if (rec.projection_accepted) bf.theta = std::move(candidate.theta);
            } else {
                bf.theta = aso.theta;
            }
            rec.rho = sub.rho(bf.theta);
        }
        rec.modulus_error = modulus_error(bf.theta, cfg.alpha);
        rec.f1_after_theta = checked(surrogate_f1(cfg, est, bf, aux), "f1");

        rec.rate = checked(deterministic_rate(cfg, est, bf), "rate");
        const double change = std::abs(rec.rate - prev_rate);
        prev_rate = rec.rate;
        res.trace.iterations.push_back(std::move(rec));
        res.iterations = t + 1;
        if (change < cfg.eps) {
            res.converged = true;
            break;
        }
    }
    res.aux.Y = update_Y(cfg, est, res.bf);
    res.aux.U = update_U(cfg, est, res.bf);
    return res;
}

}  // namespace irscf
