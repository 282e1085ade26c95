#pragma once

// Network geometry, large-scale path loss, small-scale fading and the
// statistical CSI error model.

#include <Eigen/Dense>
#include <vector>

#include "irscf/matops.hpp"
#include "irscf/random.hpp"

namespace irscf {

struct SystemConfig {
    int L = 6;    // APs
    int R = 3;    // IRSs
    int K = 4;    // UEs
    int M_B = 4;  // transmit antennas per AP
    int M_U = 2;  // receive antennas per UE
    int N = 20;   // phase shifters per IRS
    int N_h = 10; // horizontal phase shifters; N_v = N / N_h
    int d = 0;    // streams per (AP, UE) link; 0 means M_U

    double alpha = 1.0;     // reflecting efficiency
    double p_max_w = 0.1;   // per-AP power budget [W]
    double sigma2_w = 1e-12;  // per-UE noise power [W] (-90 dBm)

    double kappa2_D = 0.001;
    double kappa2_G = 0.001;
    double kappa2_S = 0.001;
    double beta_G = 3.0;  // Rician factors, linear
    double beta_S = 3.0;

    double C0_dB = -30.0;
    double d0 = 1.0;
    double p_D = 3.75;
    double p_S = 2.2;
    double p_G = 2.2;

    int b = 0;            // phase resolution bits, 0 = continuous
    double chi = 100.0;   // UE cluster centre abscissa [m]

    double eps = 1e-4;            // BCD stop threshold on the rate change [nats]
    int max_iters = 200;
    double aso_eps = 1e-9;        // ASO stop threshold on |Δρ|
    int aso_max_sweeps = 1000;
    double bisection_eps = 1e-8;  // relative bracket width for λ
    int mc_samples = 1000;

    double ap_height = 3.0;
    double irs_height = 6.0;
    double ue_height = 1.5;
    double ue_radius = 10.0;

    int streams() const { return d > 0 ? d : M_U; }
    int elements() const { return R * N; }
    double c0_linear() const;

    /// Throws ConfigError naming the first violated field.
    void validate() const;
};

double dbm_to_watts(double dbm);

struct Placement {
    std::vector<Eigen::Vector3d> ap;
    std::vector<Eigen::Vector3d> irs;
    std::vector<Eigen::Vector3d> ue;
};

/// APs on the line y = 0 spanning x ∈ [0, 200] m, IRSs on y = 115 m at
/// x = 200·(r+1)/(R+1), UEs uniform in a disc of radius ue_radius around
/// (chi, 100).
Placement make_placement(const SystemConfig& cfg, Rng& rng);

/// C0 · (distance / d0)^(-exponent), linear. Throws std::invalid_argument for
/// distance <= 0.
double path_loss(const SystemConfig& cfg, double distance, double exponent);

/// Half-wavelength ULA response e^{jπ n sin(angle)}, n = 0..count-1.
CVector steering_ula(int count, double angle);
/// UPA response a_h(π sin(az) cos(el)) ⊗ a_v(π sin(el)).
CVector steering_upa(int n_h, int n_v, double azimuth, double elevation);

struct ChannelEstimate {
    std::vector<std::vector<CMatrix>> D_hat;  // [l][k]  M_B × M_U
    std::vector<std::vector<CMatrix>> G_hat;  // [r][k]  N × M_U
    std::vector<std::vector<CMatrix>> S_hat;  // [l][r]  N × M_B
    std::vector<CMatrix> G_stack;             // [k]     RN × M_U
    std::vector<CMatrix> S_stack;             // [l]     RN × M_B

    std::vector<std::vector<double>> delta2_D;  // [l][k]
    std::vector<double> delta2_G;               // [k]
    std::vector<double> delta2_S;               // [l]
};

/// Rayleigh direct links, Rician IRS links with geometric LOS, then the δ²
/// fields for the configured κ².
ChannelEstimate generate_channels(const SystemConfig& cfg, const Placement& placement, Rng& rng);

/// Fill stacked forms from the per-IRS blocks.
void restack(ChannelEstimate& est);

/// δ²_D = κ²_D‖D̂_{l,k}‖², δ²_G = κ²_G‖Ĝ_k‖², δ²_S = κ²_S‖Ŝ_l‖² (stacked).
void set_error_variances(ChannelEstimate& est, double kappa2_D, double kappa2_G, double kappa2_S);

/// One draw of the CSI errors. IRS-link errors are kept in stacked form; rows
/// r·N .. r·N+N-1 of G_bar[k] are the error of Ĝ_{r,k}.
struct ErrorSample {
    std::vector<std::vector<CMatrix>> D_bar;  // [l][k]  M_B × M_U
    std::vector<CMatrix> G_bar;               // [k]     RN × M_U
    std::vector<CMatrix> S_bar;               // [l]     RN × M_B
};

ErrorSample sample_csi_error(const ChannelEstimate& est, Rng& rng);

}  // namespace irscf
