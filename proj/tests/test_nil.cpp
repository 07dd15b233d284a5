// nil-classifier: square/linear conditions, templates, normalizer, classification.
#include <gtest/gtest.h>

#include "su2n/corpus.hpp"
#include "su2n/nil/classify.hpp"
#include "su2n/nil/witness.hpp"

using namespace su2n;
using namespace su2n::nil;

namespace {

GQ gi(long re, long im = 0) { return GQ(qq(re), qq(im)); }

SubQ sub(const std::vector<EQ>& b) { return subalgebra_new(b); }

EQ zel(int n, GQ eta, long xx, long yy) {
    EQ z(n);
    z.eta = eta;
    z.xx = xx;
    z.yy = yy;
    return z;
}

/// the (n+1)-dimensional algebra with phi = 0 mixing dim-1 and dim-2 elements
SubQ type7_max(int n) {
    std::vector<EQ> b;
    EQ ex(n);
    ex.xx = 1;
    ex.y[0] = gi(0, 1);
    b.push_back(ex);
    for (int k = 0; k < n - 2; ++k) {
        EQ e(n);
        e.x[k] = 1;
        if (k + 1 < n - 2) e.y[k + 1] = 1;
        else e.yy = 1;
        b.push_back(e);
    }
    b.push_back(zel(n, gi(1), 0, 0));
    b.push_back(zel(n, gi(0, 1), 0, 0));
    return sub(b);
}

}  // namespace

TEST(Square, IndependentXY) {
    EQ u(4);
    u.x[0] = 1;
    u.y[1] = 1;
    auto w = check_square(sub({u}));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->id, 1);
    EXPECT_TRUE(xy_independent(w->get("u").q));
}

TEST(Square, CentralNonNull) {
    auto w = check_square(sub({zel(4, gi(1), 1, 0)}));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->id, 2);
    EXPECT_NE(sgn(qz(w->get("z").q)), 0);
}

TEST(Square, YYLineHasNone) {
    EXPECT_FALSE(check_square(sub({zel(4, gi(0), 0, 1)})));
}

TEST(Square, Condition4ZeroOfQ4) {
    // |x|^2 + 2 Re(phi conj eta) = 0 since eta = i
    EQ u(4);
    u.phi = 1;
    u.eta = gi(0, 1);
    auto w = check_square(sub({u}));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->id, 4);
    EXPECT_EQ(q4(w->get("u").q), 0);
}

TEST(Linear, CentralNull) {
    auto w = check_linear(sub({zel(4, gi(1), 1, 1)}));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->id, 1);
    EXPECT_EQ(qz(w->get("z").q), 0);
}

TEST(Linear, PhiWithX) {
    EQ u(4);
    u.phi = 1;
    u.x[0] = 1;
    auto w = check_linear(sub({u}));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->id, 3);
}

TEST(Linear, PhiAloneHasNone) {
    EQ u(4);
    u.phi = 1;
    EXPECT_FALSE(check_linear(sub({u})));
}

TEST(Templates, YYLineIsType1) {
    auto m = match_notcds(sub({zel(4, gi(0), 0, 1)}));
    ASSERT_TRUE(m);
    EXPECT_EQ(m->type, 1);
    EXPECT_TRUE(m->shape.same(MuShape::curve(1)));
}

TEST(Templates, BetaSpaceIsType3b) {
    std::vector<EQ> b;
    for (int i = 0; i < 2; ++i)
        for (GQ s : {gi(1), gi(0, 1)}) {
            EQ u(4);
            u.y[size_t(i)] = s;
            b.push_back(u);
        }
    auto h = sub(saturate(b));
    EXPECT_EQ(h.dim(), 5);  // closes up with the yy line
    auto m = match_notcds(h);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->type, 3);
    EXPECT_EQ(m->subcase, "b");
    EXPECT_EQ(*m->lambda, gi(0));
    EXPECT_TRUE(m->shape.same(MuShape::curve(1)));
}

TEST(Templates, PhiLineIsType10) {
    EQ u(4);
    u.phi = 1;
    auto m = match_notcds(sub({u}));
    ASSERT_TRUE(m);
    EXPECT_EQ(m->type, 10);
    EXPECT_TRUE(m->shape.same(MuShape::curve(2)));
}

TEST(Templates, MaximalType7) {
    for (int n : {4, 5}) {
        auto h = type7_max(n);
        EXPECT_EQ(h.dim(), n + 1);
        auto m = match_notcds(h);
        ASSERT_TRUE(m) << n;
        EXPECT_EQ(m->type, 7);
        EXPECT_TRUE(m->shape.same(MuShape::band(Exponent(3, 2), Exponent(2))));
    }
}

TEST(Templates, Type5PhiProportionalToYY) {
    EQ u(4);
    u.phi = gi(2, 1);
    u.yy = 1;
    u.x[0] = 1;
    auto h = sub({u});
    auto m = match_notcds(h);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->type, 5);
    EXPECT_EQ(*m->phi0, gi(2, 1));
    EXPECT_TRUE(m->shape.same(MuShape::curve(Exponent(4, 3))));
}

TEST(Classify, CdsExample) {
    EQ u(4);
    u.x[0] = 1;
    u.y[1] = 1;
    auto c = classify(sub({u, zel(4, gi(1), 1, 1)}));
    EXPECT_TRUE(c.cds);
    EXPECT_TRUE(c.shape.same(MuShape::full()));
    EXPECT_EQ(c.square->id, 1);
    EXPECT_EQ(c.linear->id, 1);
}

TEST(Classify, AlphaBetaSpaceIsType4) {
    std::vector<EQ> b;
    for (int i = 0; i < 2; ++i)
        for (GQ s : {gi(1), gi(0, 1)}) {
            EQ u(4);
            u.x[size_t(i)] = s;
            b.push_back(u);
        }
    auto h = sub(saturate(b));
    EXPECT_EQ(h.dim(), 5);  // closes up with the xx line
    auto c = classify(h);
    EXPECT_FALSE(c.cds);
    EXPECT_EQ(c.match->type, 4);
    EXPECT_TRUE(c.shape.same(MuShape::curve(1)));
    EXPECT_TRUE(c.normalizer_consistent);
}

TEST(Classify, ReportJson) {
    EQ u(4);
    u.phi = 1;
    auto j = classification_to_json(classify(sub({u}), 7));
    EXPECT_EQ(j["verdict"], "NotCDS");
    EXPECT_EQ(j["type"], 10);
    EXPECT_EQ(j["seed"], 7);
    EXPECT_EQ(j["shape"]["kind"], "curve");
}

TEST(Classify, RejectsTorusPart) {
    EQ u(4);
    u.t1 = 1;
    EXPECT_THROW(classify(sub({u})), NotInN);
}

TEST(Normalizer, Examples) {
    EXPECT_EQ(normalizer_in_A(sub({zel(4, gi(0), 0, 1)})).name(), "full A");
    EXPECT_EQ(normalizer_in_A(sub({zel(4, gi(1), 1, 1)})).name(), "ker(alpha)");
    EQ u(4), v(4);
    u.phi = 1;
    u.x[0] = 1;
    EXPECT_EQ(normalizer_in_A(sub({u})).name(), "ker(beta)");
    v.x[1] = 1;
    v.xx = 1;
    EXPECT_EQ(normalizer_in_A(sub({u, v})).name(), "trivial");
}

TEST(Normalizer, KernelLines) {
    EXPECT_EQ(kernel_line(1, -1).name(), "ker(alpha)");
    EXPECT_EQ(kernel_line(1, -2).name(), "ker(alpha-beta)");
    EXPECT_EQ(kernel_line(2, -1).name(), "ker(2alpha+beta)");
    EXPECT_EQ(kernel_line(1, 1).name(), "ker(alpha+2beta)");
}

TEST(WitnessCurve, CentralSquare) {
    auto w = check_square(sub({zel(4, gi(1), 1, 0)}));
    auto h = witness_curve(*w, 10);
    EXPECT_NEAR(rho_norm(h), 100.0, 1e-9);
}

TEST(WitnessCurve, CentralLinearBounded) {
    auto w = check_linear(sub({zel(4, gi(1), 1, 1)}));
    for (double t : {10.0, 1e3, 1e6}) {
        auto h = witness_curve(*w, t);
        double r = rho_norm(h) / sup_norm(h);
        EXPECT_GT(r, 1e-2);
        EXPECT_LT(r, 1e2);
    }
}

namespace {

/// slope of log rho against log |h| along a witness curve, |h| in [1e2, 1e8]
double witness_slope(const Witness& w) {
    std::vector<std::pair<double, double>> pts;
    for (double t = 1; t < 1e9; t *= 1.2) {
        Matrix<cd> h;
        try {
            h = witness_curve(w, t);
        } catch (const ImplicitSolveFailed&) {
            continue;
        }
        double nm = sup_norm(h);
        if (nm > 1e8) break;
        if (nm > 1e2) pts.push_back({std::log10(nm), std::log10(rho_norm(h))});
    }
    if (pts.size() < 8) return -1;
    return su2n::detail::linfit(pts).first;
}

}  // namespace

TEST(WitnessCurve, ExponentsOnCorpus) {
    int checked = 0;
    for (auto& e : random_corpus(3, 60)) {
        auto c = classify(e.h);
        for (auto* w : {c.square ? &*c.square : nullptr, c.linear ? &*c.linear : nullptr}) {
            if (!w) continue;
            double s = witness_slope(*w);
            if (s < 0) continue;
            ++checked;
            EXPECT_NEAR(s, w->square ? 2.0 : 1.0, 0.08) << e.id << " condition " << w->id;
        }
    }
    EXPECT_GT(checked, 20);
}

TEST(Conjugation, ShapeInvariant) {
    for (auto& p : conjugation_pairs(9, 30)) {
        auto a = classify(p.h.h), b = classify(conjugate_sub(p.g, p.h.h));
        EXPECT_TRUE(a.shape.same(b.shape)) << p.h.id << " " << p.kind;
        EXPECT_EQ(a.cds, b.cds) << p.h.id;
    }
}
