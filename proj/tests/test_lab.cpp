// empirical-lab: sampling plans, envelope verification, dimension table, log corrections.
#include <gtest/gtest.h>

#include "su2n/lab.hpp"

using namespace su2n;

namespace {

GQ gi(long re, long im = 0) { return GQ(qq(re), qq(im)); }

SubQ sat(const std::vector<EQ>& g) { return subalgebra_new(saturate(g)); }

SubQ sub(const std::vector<EQ>& b) { return subalgebra_new(b); }

SubQ yy_line(int n) {
    EQ z(n);
    z.yy = 1;
    return sub({z});
}

}  // namespace

TEST(Sample, FullChamberFillsBand) {
    an::AnSpec a{4, an::Semidirect{nil::TorusLine{2, 0, 0}, {}}};
    auto c = sample_an(a);
    auto r = verify_cloud("A+", c, MuShape::full());
    EXPECT_TRUE(r.pass) << r.detail;
    EXPECT_NEAR(r.fit.s_lo, 1.0, 0.02);
    EXPECT_NEAR(r.fit.s_hi, 2.0, 0.02);
}

TEST(Sample, YYLineIsLinear) {
    auto c = sample_subgroup(yy_line(4));
    auto f = fit_exponents(c, fit_floor_log10);
    EXPECT_NEAR(f.s_lo, 1.0, 0.02);
    EXPECT_NEAR(f.s_hi, 1.0, 0.02);
}

TEST(Sample, DeterministicGivenSeed) {
    EQ u(4);
    u.phi = 1;
    u.x[0] = 1;
    auto h = sub({u});
    SamplingPlan p;
    p.seed = 5;
    auto c1 = sample_subgroup(h, p), c2 = sample_subgroup(h, p);
    ASSERT_EQ(c1.samples.size(), c2.samples.size());
    EXPECT_EQ(c1.csv(), c2.csv());
}

TEST(Sample, CeilingTooLowRaises) {
    SamplingPlan p;
    p.ceiling = 1.0;
    EXPECT_THROW(sample_subgroup(yy_line(4), p), OverflowCeiling);
}

TEST(Verify, AlphaPlusBetaSpaceIsLinear) {
    std::vector<EQ> g;
    for (int i = 0; i < 2; ++i)
        for (GQ s : {gi(1), gi(0, 1)}) {
            EQ u(4);
            u.x[size_t(i)] = s;
            g.push_back(u);
        }
    auto r = verify_shape(sat(g), "u_alpha+beta");
    EXPECT_TRUE(r.pass) << r.detail;
    EXPECT_TRUE(r.predicted.same(MuShape::curve(1)));
}

TEST(Verify, CdsExampleFillsBand) {
    EQ u(4), z(4);
    u.x[0] = 1;
    u.y[1] = 1;
    z.eta = 1;
    z.xx = 1;
    z.yy = 1;
    auto r = verify_shape(sub({u, z}), "cds");
    EXPECT_TRUE(r.predicted.same(MuShape::full()));
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Verify, Type5FourThirds) {
    EQ u(4);
    u.phi = gi(2, 1);
    u.yy = 1;
    u.x[0] = 1;
    auto r = verify_shape(sub({u}), "type5");
    EXPECT_TRUE(r.pass) << r.detail;
    EXPECT_NEAR(r.fit.s_lo, 4.0 / 3, 0.02);
}

TEST(Verify, Type11LowerEnvelopeFromValleys) {
    auto& e = gallery_entry("type11-n4");
    SamplingPlan p;
    p.valleys = 0;
    auto without = fit_exponents(sample_subgroup(*e.sub, p), fit_floor_log10);
    auto with = fit_exponents(sample_subgroup(*e.sub), fit_floor_log10);
    EXPECT_NEAR(with.s_lo, 1.25, tolerances().gallery);
    EXPECT_LT(with.s_lo, without.s_lo + 1e-9);
}

TEST(Verify, ReportJson) {
    auto r = verify_shape(yy_line(4), "yy");
    auto j = report_to_json(r);
    EXPECT_EQ(j["verdict"], "pass");
    EXPECT_EQ(j["predicted"]["kind"], "curve");
    EXPECT_TRUE(j.contains("s_lo_fit"));
    EXPECT_TRUE(j.contains("runtime_s"));
}

TEST(Dimensions, TableRowsPass) {
    auto rows = check_dimension_table(gallery());
    bool saw7 = false, saw8 = false, saw_obstruction = false;
    for (auto& r : rows) {
        EXPECT_TRUE(r.pass) << r.id << " " << r.note;
        if (r.type == 7 && r.dim == r.n + 1) saw7 = true;
        if (r.type == 8 && r.n >= 4 && r.dim == 3) saw8 = true;
        if (r.n == 3 && r.type == 8) saw_obstruction = r.pass;
    }
    EXPECT_TRUE(saw7 && saw8 && saw_obstruction);
}

TEST(Dimensions, TableValues) {
    EXPECT_EQ(table_max_dim(7, 4), 5);
    EXPECT_EQ(table_max_dim(7, 3), 3);
    EXPECT_EQ(table_max_dim(8, 3), 2);
    EXPECT_EQ(table_max_dim(6, 5), 7);
    EXPECT_EQ(table_max_dim(6, 4), 7);
    EXPECT_FALSE(table_max_dim(0, 4));
}

TEST(LogCorrection, GraphCase1) {
    auto& e = gallery_entry("graph-1-n4");
    auto r = log_correction_curve(std::get<an::Graph>(e.an->v), e.n, 1);
    EXPECT_NEAR(r.coefficient, -1.0, tolerances().log_power);
}

TEST(LogCorrection, GraphCase3) {
    for (int r : {1, 2}) {
        auto& e = gallery_entry(r == 1 ? "graph-3-r1-n4" : "graph-3-r2-n4");
        auto res = log_correction_curve(std::get<an::Graph>(e.an->v), e.n, 3, r);
        EXPECT_NEAR(res.coefficient, r / 2.0, tolerances().log_power);
    }
}

TEST(OneParam, RaySlopeBetweenOneAndTwo) {
    auto& e = gallery_entry("oneparam-n4");
    auto k = fit_k(std::get<an::OneParam>(e.an->v), e.n);
    EXPECT_GT(k.k_plus, 1.5);
    EXPECT_LE(k.k_plus, 2.0 + 1e-6);
    EXPECT_NEAR(k.k_plus, k.k_minus, 0.1);
}
