// gallery: coverage, JSON round trip, expected classifications, constructions.
#include <gtest/gtest.h>

#include <set>

#include "su2n/gallery.hpp"

using namespace su2n;

TEST(Gallery, CoversAllTypes) {
    auto g = gallery();
    EXPECT_GE(g.size(), 20u);
    std::set<int> types;
    std::set<std::string> ids;
    for (auto& e : g) {
        if (e.type) types.insert(*e.type);
        EXPECT_TRUE(ids.insert(e.id).second) << "duplicate id " << e.id;
        EXPECT_FALSE(e.provenance.empty()) << e.id;
    }
    for (int t = 1; t <= 11; ++t) EXPECT_TRUE(types.count(t)) << "type " << t;
    EXPECT_TRUE(ids.count("thm61-07-n4"));
    EXPECT_TRUE(ids.count("lem84-3dim-n4"));
}

TEST(Gallery, JsonRoundTrip) {
    for (auto& e : gallery()) {
        json j = json::parse(gallery_to_json(e).dump());
        if (e.sub) {
            auto f = subalgebra_file_from_json(j);
            ASSERT_EQ(f.mode, Mode::exact) << e.id;
            ASSERT_EQ(f.exact.size(), e.sub->basis.size()) << e.id;
            for (size_t i = 0; i < f.exact.size(); ++i) EXPECT_TRUE(f.exact[i] == e.sub->basis[i]) << e.id;
        } else {
            ASSERT_TRUE(an::is_an_spec_json(j)) << e.id;
            auto s = an::an_spec_from_json(j);
            EXPECT_EQ(an::an_spec_to_json(s), an::an_spec_to_json(*e.an)) << e.id;
        }
        EXPECT_EQ(shape_from_json(j.at("expected").at("shape")).str(), e.shape.str()) << e.id;
    }
}

TEST(Gallery, ExpectedClassificationsReproduce) {
    for (auto& e : gallery()) {
        if (e.sub) {
            auto c = nil::classify(*e.sub);
            EXPECT_EQ(c.cds, e.cds) << e.id;
            if (e.type) {
                ASSERT_TRUE(c.match) << e.id;
                EXPECT_EQ(c.match->type, *e.type) << e.id;
            }
            EXPECT_TRUE(c.shape.same(e.shape)) << e.id << ": " << c.shape.str();
        } else {
            auto r = an::classify_an(*e.an);
            EXPECT_EQ(r.cds, e.cds) << e.id;
            EXPECT_EQ(r.label, e.label) << e.id;
            EXPECT_TRUE(r.shape.same(e.shape)) << e.id << ": " << r.shape.str();
            EXPECT_TRUE(an::is_compatible(*e.an)) << e.id;
        }
    }
}

TEST(Gallery, UnknownIdIsInputError) { EXPECT_THROW(gallery_entry("no-such-entry"), InputError); }

TEST(Construct, Type7MaximalDimension) {
    for (int n : {4, 5, 6}) EXPECT_EQ(construct::type7_max(n).dim(), n + 1);
}

TEST(Construct, Type8ThreeDimensional) {
    for (int n : {4, 5}) {
        auto h = construct::type8_3dim(n);
        EXPECT_EQ(h.dim(), 3);
        // |y|^2 = |y~|^2 = 3i y y~^dagger
        const auto& u = h.basis[0];
        const auto& w = h.basis[1];
        GQ yw = hdot(u.y, w.y);
        EXPECT_EQ(hnorm2(u.y), hnorm2(w.y));
        EXPECT_EQ(GQ(hnorm2(u.y), qq(0)), GQ(qq(0), qq(3)) * yw);
    }
    EXPECT_THROW(construct::type8_3dim(3), construct::Obstruction);
}

TEST(Construct, MaximalType2And4) {
    for (int n : {4, 5}) {
        EXPECT_EQ(construct::type2_max(n).dim(), 2 * n - 3);
        EXPECT_EQ(construct::type4_max(n).dim(), 2 * n - 1);
    }
}
