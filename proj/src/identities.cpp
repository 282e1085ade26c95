#include "irscf/identities.hpp"

#include <algorithm>
#include <cmath>

#include "irscf/matops.hpp"
#include "irscf/random.hpp"

namespace irscf {
namespace {

double rel(Complex lhs, Complex rhs) {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

double rel(const CMatrix& lhs, const CMatrix& rhs) {
    const double scale = std::max(lhs.norm(), rhs.norm());
    return scale == 0.0 ? 0.0 : (lhs - rhs).norm() / scale;
}

}  // namespace

IdentityReport check_identities(std::uint64_t seed, const IdentityOptions& opts) {
    Rng rng = make_rng(seed, 0x1d, 0);
    std::uniform_int_distribution<int> dim(1, std::max(1, opts.max_dim));
    const double var = opts.zero_operands ? 0.0 : 1.0;
    auto draw = [&](Index r, Index c) { return cscg(r, c, var, rng); };

    IdentityReport rep;

    {
        const Index m = dim(rng), n = dim(rng);
        const CMatrix a = draw(m, n), b = draw(m, n);
        const Complex lhs = (a.transpose() * b).trace();
        const Complex rhs = vec(a).transpose() * vec(b);
        rep.residual[0] = rel(lhs, rhs);
    }
    {
        const Index p = dim(rng), q = dim(rng);
        const CMatrix a = draw(p, p), b = draw(q, q);
        rep.residual[1] = rel(kron(a, b).trace(), a.trace() * b.trace());
    }
    {
        const Index m = dim(rng), n = dim(rng), p = dim(rng), q = dim(rng);
        const CMatrix a = draw(m, n), b = draw(n, p), c = draw(p, q);
        const CMatrix lhs = vec(a * b * c);
        const CMatrix rhs = kron(c.transpose(), a) * vec(b);
        rep.residual[2] = rel(lhs, rhs);
    }
    {
        const Index n = dim(rng);
        const CMatrix a = draw(n, n), b = draw(n, n);
        const CVector m = draw(n, 1);
        const CMatrix mm = diag(m);
        const Complex lhs = (a * mm * b * mm).trace();
        const Complex rhs = m.transpose() * hadamard(a, b.transpose()) * m;
        rep.residual[3] = rel(lhs, rhs);
    }
    {
        const Index n = dim(rng);
        const CMatrix a = draw(n, n);
        rep.residual[4] = rel(hadamard(a, CMatrix::Identity(n, n)), diag(vecd(a)));
    }
    rep.max_residual = *std::max_element(rep.residual.begin(), rep.residual.end());

    if (opts.draws > 0) {
        const Index n = dim(rng);
        const CMatrix a = draw(n, n);
        const CVector c = draw(n, 1);
        const CMatrix l = draw(n, n).triangularView<Eigen::Lower>();
        const CMatrix sigma = l * l.adjoint();
        const Complex expected = (a * sigma).trace() + (c.adjoint() * a * c)(0, 0);

        double s_re = 0.0, s_im = 0.0, ss_re = 0.0, ss_im = 0.0;
        for (int t = 0; t < opts.draws; ++t) {
            const CVector x = c + l * cscg(n, 1, 1.0, rng);
            const Complex v = quad_form(a, x);
            s_re += v.real();
            s_im += v.imag();
            ss_re += v.real() * v.real();
            ss_im += v.imag() * v.imag();
        }
        const double nd = opts.draws;
        rep.draws = opts.draws;
        rep.quad_mean_re = s_re / nd;
        rep.quad_mean_im = s_im / nd;
        rep.quad_expected_re = expected.real();
        rep.quad_expected_im = expected.imag();
        auto z = [&](double mean, double sumsq, double exp_v) {
            if (opts.draws < 2) return 0.0;
            const double var_s = std::max(0.0, (sumsq - nd * mean * mean) / (nd - 1.0));
            const double se = std::sqrt(var_s / nd);
            if (se == 0.0) return mean == exp_v ? 0.0 : std::abs(mean - exp_v) / 1e-300;
            return std::abs(mean - exp_v) / se;
        };
        rep.quad_z = std::max(z(rep.quad_mean_re, ss_re, rep.quad_expected_re),
                              z(rep.quad_mean_im, ss_im, rep.quad_expected_im));
    }
    return rep;
}

}  // namespace irscf
