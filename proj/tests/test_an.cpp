// an-classifier: compatibility, T x| U cases, graphs of psi, one-parameter subgroups, normalization.
#include <gtest/gtest.h>

#include "su2n/an/classify.hpp"
#include "su2n/corpus.hpp"

using namespace su2n;
using namespace su2n::an;

namespace {

GQ gi(long re, long im = 0) { return GQ(qq(re), qq(im)); }

EQ el(int n, std::function<void(EQ&)> f) {
    EQ e(n);
    f(e);
    return e;
}

const TorusLine K_A = ker_of(Root::alpha), K_B = ker_of(Root::beta), K_AB = ker_of(Root::alpha_beta),
                K_A2B = ker_of(Root::alpha_2beta), K_2AB = nil::kernel_line(2, -1), K_AMB = nil::kernel_line(1, -2);

}  // namespace

TEST(Compatible, SemidirectYYLine) {
    AnSpec s{4, Semidirect{K_A, {el(4, [](EQ& e) { e.yy = 1; })}}};
    EXPECT_TRUE(is_compatible(s));
}

TEST(Compatible, GraphAlphaEta) {
    AnSpec s{4, Graph{Root::alpha, el(4, [](EQ& e) { e.phi = 1; }), {el(4, [](EQ& e) { e.eta = 1; })}}};
    EXPECT_TRUE(is_compatible(s));
}

TEST(Compatible, MixedCoordinatesFail) {
    // x is not centralized by ker(alpha) and H meets n trivially
    EQ X = el(4, [](EQ& e) { e.t1 = 1; e.t2 = 1; e.x[0] = 1; });
    EXPECT_FALSE(is_compatible_basis({X}, 4));
}

TEST(Semidirect, CentralNullLineIsCds) {
    auto r = classify_semidirect(K_A, {el(4, [](EQ& e) { e.eta = 1; e.xx = 1; e.yy = 1; })}, 4);
    EXPECT_TRUE(r.cds);
    EXPECT_EQ(r.label, "TU 1(b)");
    EXPECT_TRUE(r.shape.same(MuShape::full()));
}

TEST(Semidirect, BetaPlusXXLine) {
    auto r = classify_semidirect(K_2AB, {el(4, [](EQ& e) { e.y[0] = 1; e.xx = 1; })}, 4);
    EXPECT_EQ(r.label, "TU 4(b)(ii)");
    EXPECT_TRUE(r.shape.same(MuShape::curve(Exponent(3, 2))));
}

TEST(Semidirect, AlphaPlusXXOffAxis) {
    auto r = classify_semidirect(K_A2B, {el(4, [](EQ& e) { e.phi = 1; e.xx = 1; })}, 4);
    EXPECT_EQ(r.label, "TU 11(c)");
    EXPECT_TRUE(r.shape.same(MuShape::curve(2)));
}

TEST(Semidirect, DeferredCasesAreSymbolic) {
    auto r = classify_semidirect(K_B, {el(4, [](EQ& e) { e.phi = 1; })}, 4);
    EXPECT_EQ(r.label, "TU 11(a)");
    EXPECT_TRUE(r.shape.symbolic());
}

TEST(Semidirect, Errors) {
    EXPECT_THROW(classify_semidirect(K_B, {el(4, [](EQ& e) { e.eta = 1; e.xx = 1; e.yy = 1; })}, 4), UNotNormalized);
    EXPECT_THROW(classify_semidirect(K_A, {el(4, [](EQ& e) { e.x[0] = 1; e.y[1] = 1; }),
                                           el(4, [](EQ& e) { e.eta = 1; e.xx = 1; e.yy = 1; })},
                                     4),
                 UIsCds);
    // type 5 forces ker(alpha-2beta)
    EXPECT_THROW(classify_semidirect(K_A, {el(4, [](EQ& e) { e.phi = 1; e.yy = 1; })}, 4), UNotNormalized);
}

TEST(Semidirect, ReflectionInvariance) {
    // 4(b)(i) under s_alpha becomes 5(c); both curve 1
    AnSpec s{4, Semidirect{K_AB, {el(4, [](EQ& e) { e.y[0] = 1; e.eta = 1; })}}};
    auto a = classify_an(s);
    auto b = classify_an(reflect_spec(s, Root::alpha));
    EXPECT_EQ(a.label, "TU 4(b)(i)");
    EXPECT_EQ(b.label, "TU 5(c)");
    EXPECT_TRUE(a.shape.same(b.shape));
}

TEST(Semidirect, CorpusCompletenessAndContainment) {
    // every not-CDS U with a normalizing line lands in a case, and the exponent range only grows
    auto corp = random_corpus(11, 300);
    int checked = 0;
    for (auto& e : corp) {
        auto c = nil::classify(e.h);
        if (c.cds || c.normalizer.dim != 1) continue;
        AnResult r;
        ASSERT_NO_THROW(r = classify_semidirect(c.normalizer, e.h.basis, e.h.n)) << e.id;
        ++checked;
        if (r.cds || r.shape.symbolic() || c.shape.symbolic()) continue;
        EXPECT_LE(r.shape.s_lo.value, c.shape.s_lo.value) << e.id;
        EXPECT_GE(r.shape.s_hi.value, c.shape.s_hi.value) << e.id;
    }
    EXPECT_GT(checked, 30);
}

TEST(Graph, AlphaWithXLine) {
    Graph g{Root::alpha, el(4, [](EQ& e) { e.phi = 1; }), {el(4, [](EQ& e) { e.x[0] = 1; })}};
    auto r = classify_graph(g, 4);
    EXPECT_EQ(r.label, "graph 1");
    EXPECT_TRUE(r.shape.same(MuShape::band(Exponent(1), Exponent(2), 0, -1)));
}

TEST(Graph, BetaYYWithEta) {
    Graph g{Root::beta, el(4, [](EQ& e) { e.yy = 1; }), {el(4, [](EQ& e) { e.eta = 1; })}};
    auto r = classify_graph(g, 4);
    EXPECT_EQ(r.label, "graph 3");
    EXPECT_EQ(r.r, 1);
    EXPECT_TRUE(r.shape.same(MuShape::band(Exponent(1), Exponent(2), Q(1, 2), 0)));
    g.psi.y[0] = 1;  // psi leaves u_2beta
    r = classify_graph(g, 4);
    EXPECT_EQ(r.r, 2);
    EXPECT_TRUE(r.shape.same(MuShape::band(Exponent(1), Exponent(2), 1, 0)));
}

TEST(Graph, BetaMeetsOmegaIsCds) {
    Graph g{Root::beta, el(4, [](EQ& e) { e.yy = 1; }), {el(4, [](EQ& e) { e.y[0] = 1; })}};
    auto r = classify_graph(g, 4);
    EXPECT_TRUE(r.cds);
    EXPECT_EQ(r.label, "graph 5");
}

TEST(Graph, Violations) {
    EXPECT_THROW(classify_graph({Root::alpha, EQ(4), {el(4, [](EQ& e) { e.x[0] = 1; })}}, 4), SpecViolation);
    EXPECT_THROW(classify_graph({Root::alpha, el(4, [](EQ& e) { e.y[0] = 1; }), {}}, 4), SpecViolation);
    // [phi, y] = x is not in the y-line
    EXPECT_THROW(classify_graph({Root::alpha, el(4, [](EQ& e) { e.phi = 1; }), {el(4, [](EQ& e) { e.y[0] = 1; })}}, 4),
                 SpecViolation);
}

TEST(Graph, ReflectionInvariance) {
    AnSpec s{4, Graph{Root::beta, el(4, [](EQ& e) { e.yy = 1; }), {el(4, [](EQ& e) { e.eta = 1; })}}};
    auto t = reflect_spec(s, Root::alpha);
    auto* g = std::get_if<Graph>(&t.v);
    ASSERT_TRUE(g);
    EXPECT_EQ(g->omega, Root::alpha_beta);
    auto a = classify_an(s), b = classify_an(t);
    EXPECT_EQ(b.label, "graph 3");
    EXPECT_EQ(a.r, b.r);
    EXPECT_TRUE(a.shape.same(b.shape));
}

TEST(OneParam, RayWithSymbolicK) {
    OneParam p{el(4, [](EQ& e) { e.t1 = 1; e.t2 = 1; e.phi = 1; })};
    auto r = one_param_shape(p, 4);
    EXPECT_EQ(r.shape.kind, ShapeKind::ray);
    EXPECT_TRUE(r.shape.k.symbolic());
    EXPECT_THROW(one_param_shape({el(4, [](EQ& e) { e.t1 = 1; })}, 4), SpecViolation);
    EXPECT_THROW(one_param_shape({el(4, [](EQ& e) { e.phi = 1; })}, 4), SpecViolation);
}

TEST(Normalize, CompatibleInputIsFixed) {
    std::vector<EQ> h = {el(4, [](EQ& e) { e.t1 = 1; e.t2 = 1; e.phi = 1; }), el(4, [](EQ& e) { e.x[0] = 1; })};
    auto [spec, g] = normalize_to_compatible(h, 4);
    EXPECT_TRUE(g == Matrix<GQ>::identity(6));
    auto* gr = std::get_if<Graph>(&spec.v);
    ASSERT_TRUE(gr);
    EXPECT_EQ(gr->omega, Root::alpha);
}

TEST(Normalize, RecoversConjugatedGraph) {
    AnSpec s{4, Graph{Root::alpha, el(4, [](EQ& e) { e.phi = 1; }), {el(4, [](EQ& e) { e.x[0] = 1; })}}};
    auto base = classify_an(s);
    Rng rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        EQ u = rand_nil_q(rng, 4);
        auto e = exp_series(u);
        auto ei = group_inverse(e);
        std::vector<EQ> h;
        for (auto& b : spec_basis(s)) h.push_back(conjugate_with(e, ei, b));
        EXPECT_FALSE(is_compatible_basis(h, 4));
        auto [back, g] = normalize_to_compatible(h, 4);
        EXPECT_TRUE(is_compatible(back));
        EXPECT_TRUE(classify_an(back).shape.same(base.shape));
    }
}

TEST(Json, RoundTrip) {
    AnSpec s{4, Graph{Root::beta, el(4, [](EQ& e) { e.yy = 1; }), {el(4, [](EQ& e) { e.eta = 1; })}}};
    auto j = an_spec_to_json(s);
    EXPECT_EQ(j["kind"], "graph");
    auto t = an_spec_from_json(j);
    EXPECT_TRUE(classify_an(t).shape.same(classify_an(s).shape));
    json sd = {{"n", 4}, {"kind", "semidirect"}, {"T", "ker(alpha)"}, {"U", json::array({{{"eta", 1}, {"xx", 1}, {"yy", 1}}})}};
    EXPECT_TRUE(classify_an(an_spec_from_json(sd)).cds);
}
