#include <Eigen/Eigenvalues>
#include <random>
#include <vector>

#include "doctest.h"
#include "irscf/errors.hpp"
#include "irscf/identities.hpp"
#include "irscf/matops.hpp"
#include "oracles.hpp"

using namespace irscf;

TEST_CASE("vec stacks columns") {
    CMatrix a(2, 2);
    a << 1, 2, 3, 4;
    const CVector v = vec(a);
    REQUIRE(v.size() == 4);
    CHECK(v(0) == Complex(1));
    CHECK(v(1) == Complex(3));
    CHECK(v(2) == Complex(2));
    CHECK(v(3) == Complex(4));

    std::mt19937_64 rng(1);
    const CMatrix col = oracle::gaussian(5, 1, 1.0, rng);
    CHECK(vec(col) == CVector(col));

    const CMatrix r = oracle::gaussian(3, 2, 1.0, rng);
    CHECK(unvec(vec(r), 3, 2) == r);
    CHECK_THROWS_AS(unvec(vec(r), 4, 2), ShapeError);
}

TEST_CASE("vecd and diag") {
    CVector abc(3);
    abc << Complex(1, 1), Complex(2, 0), Complex(0, -3);
    CHECK(vecd(diag(abc)) == abc);
    CHECK(vecd(CMatrix::Identity(3, 3)) == CVector::Ones(3));
    CHECK_THROWS_AS(vecd(CMatrix::Zero(2, 3)), ShapeError);

    std::mt19937_64 rng(2);
    const CMatrix a = oracle::gaussian(4, 4, 1.0, rng);
    const CMatrix lhs = hadamard(diag(vecd(a)), CMatrix::Ones(4, 4));
    for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < 4; ++j) CHECK(lhs(i, j) == (i == j ? a(i, j) : Complex(0)));
}

TEST_CASE("kron, hadamard and blkdiag") {
    std::mt19937_64 rng(3);
    const CMatrix a = oracle::gaussian(2, 2, 1.0, rng);
    const CMatrix b = oracle::gaussian(2, 2, 1.0, rng);
    CHECK(kron(CMatrix::Identity(1, 1), a) == a);
    CHECK(hadamard(a, CMatrix::Ones(2, 2)) == a);
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-12);
    CHECK_THROWS_AS(hadamard(a, CMatrix::Ones(2, 3)), ShapeError);
    CHECK_THROWS_AS(hadamard_conj(a, CMatrix::Ones(3, 2)), ShapeError);

    const CMatrix hc = hadamard_conj(a, b);
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j) CHECK(std::abs(hc(i, j) - a(i, j) * std::conj(b(i, j))) < 1e-15);

    const CMatrix c = oracle::gaussian(3, 1, 1.0, rng);
    const std::vector<CMatrix> blocks = {a, c};
    const CMatrix bd = blkdiag(blocks);
    REQUIRE(bd.rows() == 5);
    REQUIRE(bd.cols() == 3);
    CHECK(bd.topLeftCorner(2, 2) == a);
    CHECK(bd.bottomRightCorner(3, 1) == c);
    CHECK(bd.topRightCorner(2, 1).isZero(0.0));
    CHECK(bd.bottomLeftCorner(3, 2).isZero(0.0));

    const std::vector<CMatrix> rows = {a, b};
    const CMatrix vs = vstack(rows);
    CHECK(vs.topRows(2) == a);
    CHECK(vs.bottomRows(2) == b);
    const std::vector<CMatrix> bad = {a, c};
    CHECK_THROWS_AS(vstack(bad), ShapeError);
}

TEST_CASE("trace and norm helpers match explicit loops") {
    std::mt19937_64 rng(4);
    const CMatrix a = oracle::gaussian(4, 3, 1.0, rng);
    const CMatrix b = oracle::gaussian(4, 3, 1.0, rng);
    Complex tr = 0;
    double f = 0;
    for (Index i = 0; i < 4; ++i)
        for (Index j = 0; j < 3; ++j) {
            tr += std::conj(a(i, j)) * b(i, j);
            f += std::norm(a(i, j));
        }
    CHECK(std::abs(inner(a, b) - tr) < 1e-12);
    CHECK(frob2(a) == doctest::Approx(f).epsilon(1e-13));

    const CMatrix m = oracle::gaussian(5, 5, 1.0, rng);
    const CVector x = oracle::gaussian(5, 1, 1.0, rng);
    CHECK(std::abs(quad_form(m, x) - (x.adjoint() * m * x)(0, 0)) < 1e-12);

    const CMatrix h = hermitian_part(m);
    CHECK((h - h.adjoint()).norm() == 0.0);
}

TEST_CASE("log determinants") {
    std::mt19937_64 rng(5);
    const CMatrix p = oracle::random_psd(4, rng) + CMatrix::Identity(4, 4);
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(p);
    const double expected = eig.eigenvalues().array().log().sum();
    CHECK(log_det_hpd(p) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(log_det(p).real() == doctest::Approx(expected).epsilon(1e-12));

    CMatrix neg = CMatrix::Identity(2, 2);
    neg(0, 0) = -2.0;
    CHECK(log_det(neg).real() == doctest::Approx(std::log(2.0)));
    CHECK(std::abs(std::abs(log_det(neg).imag()) - M_PI) < 1e-12);
    CHECK_THROWS_AS(log_det_hpd(neg), NumericalError);

    CHECK(all_finite(p));
    CMatrix bad = p;
    bad(1, 2) = Complex(NAN, 0);
    CHECK_FALSE(all_finite(bad));
}

TEST_CASE("identity suite, seed 0, dimensions up to 5") {
    const IdentityReport rep = check_identities(0);
    CHECK(rep.max_residual <= 1e-10);
    CHECK(rep.draws == 100000);
    CHECK(rep.quad_z <= 3.0);
}

TEST_CASE("identity suite with zero operands has exactly zero residual") {
    IdentityOptions opts;
    opts.zero_operands = true;
    opts.draws = 1000;
    const IdentityReport rep = check_identities(11, opts);
    CHECK(rep.max_residual == 0.0);
    CHECK(rep.quad_mean_re == rep.quad_expected_re);
    CHECK(rep.quad_mean_im == rep.quad_expected_im);
}

TEST_CASE("deterministic identities hold on 300 random shapes up to 6x6") {
    IdentityOptions opts;
    opts.max_dim = 6;
    opts.draws = 0;
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        const IdentityReport rep = check_identities(seed, opts);
        for (double r : rep.residual) CHECK(r <= 1e-10);
    }
}
