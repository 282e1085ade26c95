#include "irscf/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "irscf/errors.hpp"

namespace irscf {

double SystemConfig::c0_linear() const { return std::pow(10.0, C0_dB / 10.0); }

double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

void SystemConfig::validate() const {
    auto positive_count = [](const char* name, int v) {
        if (v < 1) throw ConfigError(name, "must be >= 1");
    };
    positive_count("L", L);
    positive_count("R", R);
    positive_count("K", K);
    positive_count("M_B", M_B);
    positive_count("M_U", M_U);
    positive_count("N", N);
    positive_count("N_h", N_h);
    if (d < 0) throw ConfigError("d", "must be >= 1 (or 0 for M_U)");
    if (streams() > std::min(M_B, M_U)) throw ConfigError("d", "must not exceed min(M_B, M_U)");
    if (N % N_h != 0) throw ConfigError("N_h", "must divide N");
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha", "must lie in [0, 1]");
    if (!(p_max_w > 0.0)) throw ConfigError("P_max", "must be positive");
    if (!(sigma2_w > 0.0)) throw ConfigError("sigma2", "must be positive");
    auto kappa = [](const char* name, double v) {
        if (!(v >= 0.0 && v < 1.0)) throw ConfigError(name, "must lie in [0, 1)");
    };
    kappa("kappa2_D", kappa2_D);
    kappa("kappa2_G", kappa2_G);
    kappa("kappa2_S", kappa2_S);
    if (!(beta_G >= 0.0)) throw ConfigError("beta_G", "must be non-negative");
    if (!(beta_S >= 0.0)) throw ConfigError("beta_S", "must be non-negative");
    if (!(d0 > 0.0)) throw ConfigError("d0", "must be positive");
    if (b < 0 || b > 16) throw ConfigError("b", "must lie in [0, 16]");
    if (!(eps > 0.0)) throw ConfigError("eps", "must be positive");
    if (max_iters < 0) throw ConfigError("max_iters", "must be non-negative");
    if (!(aso_eps > 0.0)) throw ConfigError("aso_eps", "must be positive");
    if (aso_max_sweeps < 1) throw ConfigError("aso_max_sweeps", "must be >= 1");
    if (!(bisection_eps > 0.0)) throw ConfigError("bisection_eps", "must be positive");
    if (mc_samples < 1) throw ConfigError("mc_samples", "must be >= 1");
    if (!(ue_radius >= 0.0)) throw ConfigError("ue_radius", "must be non-negative");
}

Placement make_placement(const SystemConfig& cfg, Rng& rng) {
    Placement p;
    for (int l = 0; l < cfg.L; ++l) {
        const double x = cfg.L == 1 ? 100.0 : 200.0 * l / (cfg.L - 1);
        p.ap.emplace_back(x, 0.0, cfg.ap_height);
    }
    for (int r = 0; r < cfg.R; ++r) p.irs.emplace_back(200.0 * (r + 1) / (cfg.R + 1), 115.0, cfg.irs_height);

    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < cfg.K; ++k) {
        const double rad = cfg.ue_radius * std::sqrt(u(rng));
        const double phi = 2.0 * std::numbers::pi * u(rng);
        p.ue.emplace_back(cfg.chi + rad * std::cos(phi), 100.0 + rad * std::sin(phi), cfg.ue_height);
    }
    return p;
}

double path_loss(const SystemConfig& cfg, double distance, double exponent) {
    if (!(distance > 0.0)) throw std::invalid_argument("path_loss: distance must be positive");
    return cfg.c0_linear() * std::pow(distance / cfg.d0, -exponent);
}

namespace {

CVector phase_ramp(int count, double psi) {
    CVector a(count);
    for (int n = 0; n < count; ++n) a(n) = std::polar(1.0, psi * n);
    return a;
}

// Linear arrays lie along x. The response towards `to` only depends on the
// direction cosine along the array axis.
CVector ula_towards(int count, const Eigen::Vector3d& from, const Eigen::Vector3d& to) {
    const Eigen::Vector3d u = (to - from).normalized();
    return phase_ramp(count, std::numbers::pi * u.x());
}

// IRS panels lie in the x–z plane: horizontal elements along x, vertical along z.
CVector upa_towards(int n_h, int n_v, const Eigen::Vector3d& from, const Eigen::Vector3d& to) {
    const Eigen::Vector3d u = (to - from).normalized();
    const double el = std::asin(std::clamp(u.z(), -1.0, 1.0));
    const double c = std::cos(el);
    const double az = c > 0.0 ? std::asin(std::clamp(u.x() / c, -1.0, 1.0)) : 0.0;
    return steering_upa(n_h, n_v, az, el);
}

CMatrix rician(const CMatrix& los, double beta, double gain, Rng& rng) {
    const double w_los = std::sqrt(beta / (1.0 + beta));
    const double w_nlos = std::sqrt(1.0 / (1.0 + beta));
    return std::sqrt(gain) * (w_los * los + w_nlos * cscg(los.rows(), los.cols(), 1.0, rng));
}

}  // namespace

CVector steering_ula(int count, double angle) {
    return phase_ramp(count, std::numbers::pi * std::sin(angle));
}

CVector steering_upa(int n_h, int n_v, double azimuth, double elevation) {
    return kron(phase_ramp(n_h, std::numbers::pi * std::sin(azimuth) * std::cos(elevation)),
                phase_ramp(n_v, std::numbers::pi * std::sin(elevation)));
}

ChannelEstimate generate_channels(const SystemConfig& cfg, const Placement& pl, Rng& rng) {
    const int n_v = cfg.N / cfg.N_h;
    ChannelEstimate est;
    est.D_hat.assign(cfg.L, std::vector<CMatrix>(cfg.K));
    est.G_hat.assign(cfg.R, std::vector<CMatrix>(cfg.K));
    est.S_hat.assign(cfg.L, std::vector<CMatrix>(cfg.R));

    for (int l = 0; l < cfg.L; ++l)
        for (int k = 0; k < cfg.K; ++k) {
            const double g = path_loss(cfg, (pl.ap[l] - pl.ue[k]).norm(), cfg.p_D);
            est.D_hat[l][k] = std::sqrt(g) * cscg(cfg.M_B, cfg.M_U, 1.0, rng);
        }
    for (int r = 0; r < cfg.R; ++r)
        for (int k = 0; k < cfg.K; ++k) {
            const CMatrix los = upa_towards(cfg.N_h, n_v, pl.irs[r], pl.ue[k]) *
                                ula_towards(cfg.M_U, pl.ue[k], pl.irs[r]).adjoint();
            const double g = path_loss(cfg, (pl.irs[r] - pl.ue[k]).norm(), cfg.p_G);
            est.G_hat[r][k] = rician(los, cfg.beta_G, g, rng);
        }
    for (int l = 0; l < cfg.L; ++l)
        for (int r = 0; r < cfg.R; ++r) {
            const CMatrix los = upa_towards(cfg.N_h, n_v, pl.irs[r], pl.ap[l]) *
                                ula_towards(cfg.M_B, pl.ap[l], pl.irs[r]).adjoint();
            const double g = path_loss(cfg, (pl.ap[l] - pl.irs[r]).norm(), cfg.p_S);
            est.S_hat[l][r] = rician(los, cfg.beta_S, g, rng);
        }
    restack(est);
    set_error_variances(est, cfg.kappa2_D, cfg.kappa2_G, cfg.kappa2_S);
    return est;
}

void restack(ChannelEstimate& est) {
    const std::size_t L = est.S_hat.size(), R = est.G_hat.size();
    const std::size_t K = R > 0 ? est.G_hat.front().size() : 0;
    est.G_stack.assign(K, CMatrix{});
    est.S_stack.assign(L, CMatrix{});
    std::vector<CMatrix> parts(R);
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t r = 0; r < R; ++r) parts[r] = est.G_hat[r][k];
        est.G_stack[k] = vstack(parts);
    }
    for (std::size_t l = 0; l < L; ++l) est.S_stack[l] = vstack(est.S_hat[l]);
}

void set_error_variances(ChannelEstimate& est, double kappa2_D, double kappa2_G, double kappa2_S) {
    est.delta2_D.assign(est.D_hat.size(), {});
    for (std::size_t l = 0; l < est.D_hat.size(); ++l)
        for (const auto& d : est.D_hat[l]) est.delta2_D[l].push_back(kappa2_D * frob2(d));
    est.delta2_G.clear();
    for (const auto& g : est.G_stack) est.delta2_G.push_back(kappa2_G * frob2(g));
    est.delta2_S.clear();
    for (const auto& s : est.S_stack) est.delta2_S.push_back(kappa2_S * frob2(s));
}

ErrorSample sample_csi_error(const ChannelEstimate& est, Rng& rng) {
    ErrorSample e;
    e.D_bar.resize(est.D_hat.size());
    for (std::size_t l = 0; l < est.D_hat.size(); ++l)
        for (std::size_t k = 0; k < est.D_hat[l].size(); ++k) {
            const auto& d = est.D_hat[l][k];
            e.D_bar[l].push_back(cscg(d.rows(), d.cols(), est.delta2_D[l][k], rng));
        }
    for (std::size_t k = 0; k < est.G_stack.size(); ++k)
        e.G_bar.push_back(cscg(est.G_stack[k].rows(), est.G_stack[k].cols(), est.delta2_G[k], rng));
    for (std::size_t l = 0; l < est.S_stack.size(); ++l)
        e.S_bar.push_back(cscg(est.S_stack[l].rows(), est.S_stack[l].cols(), est.delta2_S[l], rng));
    return e;
}

}  // namespace irscf
