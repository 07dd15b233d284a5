// su2n-core: coordinates, brackets, exponentials, Delta, roots.
#include <gtest/gtest.h>

#include "su2n/json_io.hpp"
#include "su2n/random.hpp"
#include "su2n/roots.hpp"
#include "su2n/subalgebra.hpp"

using namespace su2n;

namespace {
EQ el(int n) { return EQ(n); }
GQ gi(long re, long im = 0) { return GQ(qq(re), qq(im)); }
}  // namespace

TEST(MatrixOf, ZeroElementGivesZeroMatrix) {
    EXPECT_TRUE(matrix_of(el(4)).is_zero());
}

TEST(MatrixOf, PhiEntriesN3) {
    EQ u = el(3);
    u.phi = 1;
    auto a = matrix_of(u);
    EXPECT_EQ(a(0, 1), gi(1));
    EXPECT_EQ(a(3, 4), gi(-1));
    int nonzero = 0;
    for (auto& v : a.a) nonzero += !is_zero(v);
    EXPECT_EQ(nonzero, 2);
}

TEST(MatrixOf, EtaPatternN4) {
    EQ u = el(4);
    u.eta = gi(0, 1);
    auto a = matrix_of(u);
    EXPECT_EQ(a(0, 4), gi(0, 1));
    EXPECT_EQ(a(1, 5), gi(0, 1));  // -conj(i) = i
}

TEST(MatrixOf, LiesInSu2n) {
    Rng rng(1);
    for (int n : {3, 4, 6}) {
        for (int k = 0; k < 20; ++k) {
            EQ u = rand_nil_q(rng, n);
            u.t1 = rand_q(rng);
            u.t2 = rand_q(rng);
            auto X = matrix_of(u);
            auto J = gram<GQ>(n);
            EXPECT_TRUE((X.adjoint() * J + J * X).is_zero());
        }
    }
}

TEST(Bracket, SelfBracketVanishes) {
    Rng rng(2);
    EQ u = rand_nil_q(rng, 4);
    EXPECT_TRUE(bracket(u, u).is_zero_el());
}

TEST(Bracket, PhiWithYGivesX) {
    EQ u = el(4), v = el(4);
    u.phi = 1;
    v.y[0] = 1;
    EQ w = bracket(u, v);
    EQ expect = el(4);
    expect.x[0] = 1;
    EXPECT_EQ(w, expect);
    EQ w2 = bracket(w, v);
    EQ expect2 = el(4);
    expect2.eta = -1;
    EXPECT_EQ(w2, expect2);
}

TEST(Bracket, MatchesCommutatorWithTorus) {
    Rng rng(3);
    for (int n : {3, 4, 5}) {
        for (int k = 0; k < 50; ++k) {
            EQ u = rand_nil_q(rng, n, 0.7), v = rand_nil_q(rng, n, 0.7);
            if (k % 2) { u.t1 = rand_q(rng); v.t2 = rand_q(rng); }
            EXPECT_EQ(matrix_of(bracket(u, v)), commutator(matrix_of(u), matrix_of(v)));
        }
    }
}

TEST(Bracket, Jacobi) {
    Rng rng(4);
    for (int k = 0; k < 50; ++k) {
        EQ a = rand_nil_q(rng, 4), b = rand_nil_q(rng, 4), c = rand_nil_q(rng, 4);
        a.t1 = rand_q(rng);
        EQ j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
        EXPECT_TRUE(j.is_zero_el());
    }
}

TEST(Exp, ZeroGivesIdentity) {
    EXPECT_EQ(exp_closed(el(4)), Matrix<GQ>::identity(6));
    EXPECT_EQ(exp_series(el(4)), Matrix<GQ>::identity(6));
}

TEST(Exp, YZeroEntryAndDelta) {
    EQ u = el(3);
    u.phi = 2;
    u.yy = 1;
    auto g = exp_closed(u);
    EXPECT_EQ(g(0, 3), gi(0, 1));
    EXPECT_EQ(delta(g), GQ(qq(1, 3)));
}

TEST(Exp, CentralDeltaVanishes) {
    EQ z = el(4);
    z.eta = 1;
    z.xx = 1;
    z.yy = 1;
    EXPECT_TRUE(is_zero(delta(exp_closed(z))));
}

TEST(Exp, ClosedEqualsSeriesExactly) {
    Rng rng(5);
    for (int n : {3, 4, 6})
        for (int k = 0; k < 40; ++k) {
            EQ u = rand_nil_q(rng, n, 0.8);
            EXPECT_EQ(exp_closed(u), exp_series(u));
            EXPECT_EQ(exp_closed_general(u), exp_series(u));
        }
}

TEST(Exp, SpecialFormsAgreeOnOverlap) {
    Rng rng(6);
    for (int k = 0; k < 20; ++k) {
        EQ u = rand_nil_q(rng, 4);
        u.phi = 0;
        for (auto& s : u.y) s = 0;
        EXPECT_EQ(exp_closed_phi0(u), exp_closed_y0(u));
        EXPECT_EQ(exp_closed_phi0(u), exp_closed_general(u));
    }
}

TEST(Exp, IsometryAndDeterminant) {
    Rng rng(7);
    for (int k = 0; k < 20; ++k) {
        auto g = exp_closed(rand_nil_q(rng, 5));
        auto J = gram<GQ>(5);
        EXPECT_EQ(g.adjoint() * J * g, J);
        EXPECT_EQ(det(g), GQ(1));
    }
}

TEST(Exp, DiagonalTorus) {
    ED u(3);
    u.t1 = std::log(2.0);
    auto g = exp_series(u);
    EXPECT_NEAR(g(0, 0).real(), 2.0, 1e-12);
    EXPECT_NEAR(g(4, 4).real(), 0.5, 1e-12);
    EXPECT_NEAR(g(1, 1).real(), 1.0, 1e-12);
}

TEST(Exp, MixedTorusAndNilpotentIsIsometry) {
    Rng rng(8);
    ED u = rand_nil_d(rng, 4);
    u.t1 = 0.7;
    u.t2 = -0.3;
    auto g = exp_series(u);
    auto [res, d] = isometry_residual(g);
    EXPECT_LT(res, 1e-10);
    EXPECT_LT(d, 1e-10);
}

TEST(Delta, IdentityIsZero) {
    EXPECT_TRUE(is_zero(delta(Matrix<GQ>::identity(5))));
}

TEST(Delta, MatchesExpandedFormula) {
    Rng rng(9);
    for (int n : {3, 4, 6})
        for (int k = 0; k < 50; ++k) {
            EQ u = rand_nil_q(rng, n, 0.8);
            EXPECT_EQ(delta(exp_closed(u)), delta_formula(u));
        }
}

TEST(Form, BasisValues) {
    int n = 4;
    auto e = [&](int i) { std::vector<GQ> v(n + 2, GQ(0)); v[i] = 1; return v; };
    EXPECT_EQ(form_value(e(0), e(0)), GQ(0));
    EXPECT_EQ(form_value(e(0), e(n + 1)), GQ(1));
    EXPECT_EQ(form_value(e(2), e(2)), GQ(1));
    EXPECT_THROW(form_value(e(0), std::vector<GQ>(3, GQ(0))), std::invalid_argument);
}

TEST(Roots, ProjectionsSumToElement) {
    Rng rng(10);
    EQ u = rand_nil_q(rng, 5);
    EQ s = el(5);
    for (auto r : all_roots) s += root_project(u, r);
    EXPECT_EQ(s, u);
    EQ p = el(4);
    p.phi = 1;
    p.y[0] = 1;
    EQ a = el(4);
    a.phi = 1;
    EXPECT_EQ(root_project(p, Root::alpha), a);
    EQ h = el(4);
    h.eta = gi(0, 3);
    EXPECT_EQ(root_project(h, Root::alpha_2beta), h);
}

TEST(Roots, WeylMatricesAreInSU) {
    for (auto r : {Root::alpha, Root::beta}) {
        auto w = weyl_matrix<GQ>(4, r);
        auto J = gram<GQ>(4);
        EXPECT_EQ(w.adjoint() * J * w, J);
        EXPECT_EQ(det(w), GQ(1));
    }
}

TEST(Roots, WeylAlphaSendsYToX) {
    EQ u = el(4);
    u.y[0] = 1;
    EQ v = weyl_reflect(u, Root::alpha);
    EQ expect = el(4);
    expect.x[0] = 1;
    EXPECT_EQ(v, expect);
}

TEST(Roots, WeylActionPermutesRootSpaces) {
    // for each root whose image stays positive, the image of a root vector lies in the image root space
    for (auto s : {Root::alpha, Root::beta})
        for (auto r : all_roots) {
            auto [sign, img] = reflect_root(s, r);
            EQ u = el(4);
            switch (r) {
                case Root::alpha: u.phi = 1; break;
                case Root::beta: u.y[1] = 1; break;
                case Root::alpha_beta: u.x[0] = 1; break;
                case Root::two_beta: u.yy = 1; break;
                case Root::alpha_2beta: u.eta = gi(1, 1); break;
                case Root::two_alpha_2beta: u.xx = 1; break;
            }
            if (sign < 0) {
                EXPECT_THROW(weyl_reflect(u, s), NotInAN);
                continue;
            }
            EQ v = weyl_reflect(u, s);
            EXPECT_EQ(root_project(v, img), v);
            EXPECT_FALSE(v.is_zero_el());
        }
}

TEST(Roots, WeylTwiceIsIdentityUpToSign) {
    Rng rng(11);
    EQ u = el(4);
    u.x[0] = gi(2, 1);
    u.eta = gi(1, -3);
    u.xx = 5;
    EQ v = weyl_reflect(weyl_reflect(u, Root::alpha), Root::alpha);
    EXPECT_EQ(v, u);
    // w_beta squared is diag(1,-1,1,..,1,-1,1): x is fixed, y changes sign
    EQ w = el(4);
    w.x[1] = gi(1, 1);
    EXPECT_EQ(weyl_reflect(weyl_reflect(w, Root::beta), Root::beta), w);
    auto w2m = weyl_matrix<GQ>(4, Root::beta) * weyl_matrix<GQ>(4, Root::beta);
    EXPECT_EQ(w2m(1, 1), GQ(-1));
    EXPECT_EQ(w2m(4, 4), GQ(-1));
    EXPECT_EQ(w2m(0, 0), GQ(1));
}

TEST(Roots, ConjugationByPhiPreservesCenter) {
    EQ g = el(4);
    g.phi = gi(1, 2);
    auto G = exp_closed(g);
    // the slots eta, xx, yy span an ideal of n; Ad(exp) maps it into itself
    for (int k = 0; k < 4; ++k) {
        EQ z = el(4);
        if (k == 0) z.eta = 1;
        if (k == 1) z.eta = gi(0, 1);
        if (k == 2) z.xx = 1;
        if (k == 3) z.yy = 1;
        EQ c = conjugate(G, z);
        EXPECT_EQ(mask_slots(c, ETA | XX | YY), c);
    }
}

TEST(Subalgebra, SinglePhi) {
    EQ u = el(4);
    u.phi = 1;
    auto h = subalgebra_new<GQ>({u});
    EXPECT_EQ(h.dim(), 1);
    EXPECT_TRUE(h.z_part.empty());
}

TEST(Subalgebra, NotClosedReportsPair) {
    EQ u = el(4), v = el(4);
    u.phi = 1;
    v.y[0] = 1;
    try {
        subalgebra_new<GQ>({u, v});
        FAIL();
    } catch (const SubalgebraError& e) {
        EXPECT_EQ(e.code, "NotClosed");
        EXPECT_EQ(e.i, 0);
        EXPECT_EQ(e.j, 1);
    }
}

TEST(Subalgebra, SaturationClosesAndFindsCenter) {
    EQ u = el(4), v = el(4);
    u.phi = 1;
    v.y[0] = 1;
    auto b = saturate({u, v});
    auto h = subalgebra_new(b);
    EXPECT_GE(h.dim(), 4);
    EQ z = el(4);
    z.eta = -1;
    auto zr = coord_rows(h.z_part);
    EXPECT_TRUE(la::in_span(zr, z.coords()));
}

TEST(Subalgebra, DependentBasisRejected) {
    EQ u = el(4);
    u.xx = 1;
    EXPECT_THROW(subalgebra_new<GQ>({u, u}), SubalgebraError);
}

TEST(Json, RoundTripExact) {
    Rng rng(12);
    EQ u = rand_nil_q(rng, 5);
    u.t1 = qq(3, 7);
    auto j = element_to_json(u);
    EQ v = element_from_json<GQ>(json::parse(j.dump()), 5);
    EXPECT_EQ(u, v);
}

TEST(Json, MixedModesRejected) {
    auto j = json::parse(R"({"n":3,"mode":"exact","basis":[{"phi":[0.5,0]}]})");
    EXPECT_THROW(subalgebra_file_from_json(j), SubalgebraError);
}
