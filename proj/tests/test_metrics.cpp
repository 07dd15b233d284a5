// cartan-metrics: norms, exterior square, Cartan projection, envelope fits.
#include <gtest/gtest.h>

#include "su2n/metrics.hpp"
#include "su2n/shape.hpp"

using namespace su2n;

namespace {
Matrix<cd> torus(int n, double a1, double a2) { return torus_element<cd>(n, a1, a2); }

Matrix<cd> random_g(int n, Rng& rng) {
    // k a k' with a random point of A+ and a random nilpotent factor
    std::uniform_real_distribution<double> u(0.0, 6.0);
    double l1 = u(rng), l2 = u(rng);
    if (l2 > l1) std::swap(l1, l2);
    auto g = random_k(n, rng) * torus(n, std::exp(l1), std::exp(l2)) * random_k(n, rng);
    return g * exp_closed(rand_nil_d(rng, n, 0.5));
}
}  // namespace

TEST(Norms, Identity) {
    auto I = Matrix<cd>::identity(5);
    EXPECT_DOUBLE_EQ(sup_norm(I), 1.0);
    EXPECT_DOUBLE_EQ(rho_norm(I), 1.0);
}

TEST(Norms, TorusElement) {
    auto a = torus(4, 4.0, 2.0);
    EXPECT_DOUBLE_EQ(sup_norm(a), 4.0);
    EXPECT_DOUBLE_EQ(rho_norm(a), 8.0);
}

TEST(Norms, CentralExponential) {
    EQ u(4);
    u.xx = 7;
    EXPECT_DOUBLE_EQ(sup_norm(exp_closed(u)), 7.0);
}

TEST(Norms, RhoMatchesExteriorSquareOracle) {
    Rng rng(21);
    for (int k = 0; k < 100; ++k) {
        int n = 3 + k % 3;
        auto g = random_g(n, rng);
        double a = rho_norm(g), b = rho_norm_oracle(g);
        EXPECT_NEAR(a, b, 1e-10 * std::max(1.0, b));
    }
}

TEST(Norms, ExteriorSquareIsMultiplicative) {
    Rng rng(22);
    auto g = random_g(4, rng), h = random_g(4, rng);
    Eigen::MatrixXcd d = exterior_square(g * h) - exterior_square(g) * exterior_square(h);
    EXPECT_LT(d.cwiseAbs().maxCoeff(), 1e-8 * exterior_square(g * h).cwiseAbs().maxCoeff());
}

TEST(Mu, TorusIsFixed) {
    auto p = mu(torus(4, 4.0, 2.0));
    EXPECT_NEAR(p.a1, 4.0, 1e-12);
    EXPECT_NEAR(p.a2, 2.0, 1e-12);
    auto q = mu(Matrix<cd>::identity(6));
    EXPECT_NEAR(q.a1, 1.0, 1e-12);
    EXPECT_NEAR(q.a2, 1.0, 1e-12);
}

TEST(Mu, RandomKIsInK) {
    Rng rng(23);
    auto k = random_k(5, rng);
    auto [res, d] = isometry_residual(k);
    EXPECT_LT(res, 1e-10);
    EXPECT_LT(d, 1e-10);
    Eigen::MatrixXcd e = to_eigen(k);
    EXPECT_LT((e.adjoint() * e - Eigen::MatrixXcd::Identity(7, 7)).norm(), 1e-10);
}

TEST(Mu, BiInvariantUnderK) {
    Rng rng(24);
    auto g = random_k(4, rng) * torus(4, 4.0, 2.0) * random_k(4, rng);
    auto p = mu(g);
    EXPECT_NEAR(p.a1, 4.0, 1e-8);
    EXPECT_NEAR(p.a2, 2.0, 1e-8);
}

TEST(Mu, InverseHasSameProjection) {
    Rng rng(25);
    for (int k = 0; k < 20; ++k) {
        auto g = random_g(4, rng);
        auto p = mu(g), q = mu(group_inverse(g));
        EXPECT_NEAR(p.a1 / q.a1, 1.0, 1e-8);
        EXPECT_NEAR(p.a2 / q.a2, 1.0, 1e-8);
    }
}

TEST(Mu, NormsComparableToProjection) {
    Rng rng(26);
    for (int k = 0; k < 50; ++k) {
        int n = 3 + k % 3;
        auto g = random_g(n, rng);
        auto p = mu(g);
        double C = std::pow(n + 2.0, 4);
        double r1 = sup_norm(g) / p.a1, r2 = rho_norm(g) / (p.a1 * p.a2);
        EXPECT_GE(r1, 1 / C);
        EXPECT_LE(r1, C);
        EXPECT_GE(r2, 1 / C);
        EXPECT_LE(r2, C);
    }
}

TEST(Fit, TorusRays) {
    SampleCloud a, b;
    for (int i = 0; i <= 64; ++i) {
        double l = 0.1 + 8.0 * i / 64.0, a1 = std::pow(10.0, l);
        auto g = torus(3, a1, 1.0);
        a.add(l, sup_norm(g), rho_norm(g), 0);
        auto h = torus(3, a1, a1);
        b.add(l, sup_norm(h), rho_norm(h), 0);
    }
    auto fa = fit_exponents(a), fb = fit_exponents(b);
    EXPECT_NEAR(fa.s_lo, 1.0, 0.05);
    EXPECT_NEAR(fa.s_hi, 1.0, 0.05);
    EXPECT_NEAR(fb.s_lo, 2.0, 0.05);
    EXPECT_NEAR(fb.s_hi, 2.0, 0.05);
}

TEST(Fit, CentralCurveIsQuadratic) {
    ED z(4);
    z.eta = 1;
    z.xx = 1;
    SampleCloud c;
    for (int i = 0; i <= 64; ++i) {
        double t = std::pow(10.0, 0.5 + 7.5 * i / 64.0);
        auto g = exp_closed(t * z);
        c.add(t, sup_norm(g), rho_norm(g), 0);
    }
    auto f = fit_exponents(c);
    EXPECT_NEAR(f.s_lo, 2.0, 0.08);
    EXPECT_NEAR(f.s_hi, 2.0, 0.08);
}

TEST(Fit, InsufficientRangeRejected) {
    SampleCloud c;
    for (int i = 0; i < 40; ++i) c.add(i, 10.0 + i, 100.0 + i, 0);
    EXPECT_THROW(fit_exponents(c), InsufficientRange);
}

TEST(ShapeCheck, FullChamberGrid) {
    SampleCloud c;
    for (int i = 0; i <= 40; ++i)
        for (int j = 0; j <= 4; ++j) {
            double l1 = 0.2 + 7.8 * i / 40.0, l2 = l1 * j / 4.0;
            auto g = torus(3, std::pow(10.0, l1), std::pow(10.0, l2));
            c.add(l1, sup_norm(g), rho_norm(g), j);
        }
    EXPECT_TRUE(shape_check(c, MuShape::full()).pass);
}

TEST(ShapeCheck, Line2BetaIsLinear) {
    ED z(4);
    z.yy = 1;
    SampleCloud c;
    for (int i = 0; i <= 64; ++i) {
        double t = std::pow(10.0, 0.5 + 7.5 * i / 64.0);
        auto g = exp_closed(t * z);
        c.add(t, sup_norm(g), rho_norm(g), 0);
    }
    EXPECT_TRUE(shape_check(c, MuShape::curve(1)).pass);
    EXPECT_FALSE(shape_check(c, MuShape::curve(2)).pass);
    EXPECT_THROW(shape_check(c, MuShape::curve(Exponent::sym("s"))), SymbolicShape);
}

TEST(ShapeJson, RoundTrip) {
    auto m = MuShape::band(Exponent(5, 4), Exponent(2), 0, -1);
    auto j = shape_to_json(m);
    EXPECT_EQ(j["s_lo"], "5/4");
    EXPECT_TRUE(shape_from_json(j).same(m));
}
