#pragma once
// Curated example subalgebras and AN subgroups with their expected classifications.
#include "an/classify.hpp"

namespace su2n {

struct GalleryEntry {
    std::string id;
    int n = 4;
    std::optional<SubQ> sub;
    std::optional<an::AnSpec> an;
    bool cds = false;
    std::optional<int> type;
    std::string label;  // case label for AN entries
    MuShape shape;
    std::string provenance;
    std::optional<int> table_dim;  // maximal dimension for the type, when the entry attains it
    bool exponent_check = false;
};

namespace construct {

inline GQ gi(long re, long im = 0) { return GQ(qq(re), qq(im)); }

inline EQ el(int n, const std::function<void(EQ&)>& f) {
    EQ e(n);
    f(e);
    return e;
}

/// {x_k, eta, xx real}: x = (x_1..x_{n-2}), y = (i xx, x_1, .., x_{n-3}), yy = x_{n-2}; dimension n+1
inline SubQ type7_max(int n) {
    std::vector<EQ> b;
    b.push_back(el(n, [](EQ& e) { e.xx = 1; e.y[0] = gi(0, 1); }));
    for (int k = 0; k < n - 2; ++k)
        b.push_back(el(n, [&](EQ& e) {
            e.x[size_t(k)] = 1;
            if (k + 1 < n - 2) e.y[size_t(k + 1)] = 1;
            else e.yy = 1;
        }));
    b.push_back(el(n, [](EQ& e) { e.eta = 1; }));
    b.push_back(el(n, [](EQ& e) { e.eta = gi(0, 1); }));
    return subalgebra_new(b);
}

struct Obstruction : std::domain_error {
    using std::domain_error::domain_error;
};

/// u, u~ with phi = 1, i and |y|^2 = |y~|^2 = 3i y y~^dagger != 0, yy and yy~ solved so [[u,u~],u] = [[u,u~],u~] = 0
inline SubQ type8_3dim(int n) {
    if (n < 4)
        throw Obstruction(
            "no 3-dimensional example for n = 3: |y y~^dagger| = |y|^2/3 forces y, y~ to be C-independent in C^1");
    EQ u(n), w(n);
    u.phi = 1;
    w.phi = gi(0, 1);
    // y y~^dagger = 3 conj(i) = -3i = -i |y|^2 / 3 and |y~|^2 = 1 + 8 = 9 = |y|^2
    u.y[0] = 3;
    w.y[0] = gi(0, 1);
    w.y[1] = gi(2, 2);
    u.x[0] = 1;
    w.x[1] = 1;
    // the constraints are affine in (yy, yy~): evaluate the xx-parts of [v,u], [v,u~] at three points and solve
    auto resid = [&](const Q& a, const Q& b) {
        EQ p = u, q = w;
        p.yy = a;
        q.yy = b;
        EQ v = bracket_nil(p, q);
        EQ r1 = bracket_nil(v, p), r2 = bracket_nil(v, q);
        return std::pair<EQ, EQ>{r1, r2};
    };
    auto [c1, c2] = resid(0, 0);
    auto [a1, a2] = resid(1, 0);
    auto [b1, b2] = resid(0, 1);
    // r(a, b) = c + a (A - c) + b (B - c) on the xx coordinate
    Q m11 = a1.xx - c1.xx, m12 = b1.xx - c1.xx, m21 = a2.xx - c2.xx, m22 = b2.xx - c2.xx;
    Q det = m11 * m22 - m12 * m21;
    if (det == 0) throw std::logic_error("type8_3dim: singular constraint system");
    Q ya = (-c1.xx * m22 + m12 * c2.xx) / det, yb = (-m11 * c2.xx + m21 * c1.xx) / det;
    u.yy = ya;
    w.yy = yb;
    EQ v = bracket_nil(u, w);
    return subalgebra_new(std::vector<EQ>{u, w, v});
}

/// y = 0, yy = 0, q4 definite off the xx line: x-space, (phi, eta) = (1, 1), (i, i), xx; dimension 2n-1
inline SubQ type4_max(int n) {
    std::vector<EQ> b;
    for (int k = 0; k < n - 2; ++k)
        for (GQ s : {gi(1), gi(0, 1)}) b.push_back(el(n, [&](EQ& e) { e.x[size_t(k)] = s; }));
    b.push_back(el(n, [](EQ& e) { e.phi = 1; e.eta = 1; }));
    b.push_back(el(n, [](EQ& e) { e.phi = gi(0, 1); e.eta = gi(0, 1); }));
    b.push_back(el(n, [](EQ& e) { e.xx = 1; }));
    return subalgebra_new(b);
}

/// phi = y = 0 with yy carried by x_1: dimension 2n-3
inline SubQ type2_max(int n) {
    std::vector<EQ> b;
    b.push_back(el(n, [](EQ& e) { e.x[0] = 1; e.yy = 1; }));
    b.push_back(el(n, [](EQ& e) { e.x[0] = gi(0, 1); }));
    for (int k = 1; k < n - 2; ++k)
        for (GQ s : {gi(1), gi(0, 1)}) b.push_back(el(n, [&](EQ& e) { e.x[size_t(k)] = s; }));
    b.push_back(el(n, [](EQ& e) { e.xx = 1; }));
    return subalgebra_new(b);
}

inline SubQ sat(const std::vector<EQ>& g) { return subalgebra_new(saturate(g)); }

}  // namespace construct

inline std::vector<GalleryEntry> gallery() {
    using namespace construct;
    using an::AnSpec;
    std::vector<GalleryEntry> g;
    auto nil_entry = [&](std::string id, SubQ h, std::optional<int> type, MuShape shape, std::string prov,
                         bool expo = false, std::optional<int> tdim = std::nullopt) {
        GalleryEntry e;
        e.id = std::move(id);
        e.n = h.n;
        e.sub = std::move(h);
        e.cds = !type;
        e.type = type;
        e.shape = std::move(shape);
        e.provenance = std::move(prov);
        e.exponent_check = expo;
        e.table_dim = tdim;
        g.push_back(std::move(e));
    };
    auto an_entry = [&](std::string id, AnSpec s, bool cds, std::string label, MuShape shape, std::string prov) {
        GalleryEntry e;
        e.id = std::move(id);
        e.n = s.n;
        e.an = std::move(s);
        e.cds = cds;
        e.label = std::move(label);
        e.shape = std::move(shape);
        e.provenance = std::move(prov);
        g.push_back(std::move(e));
    };
    const MuShape c1 = MuShape::curve(1), c32 = MuShape::curve(Exponent(3, 2)), c43 = MuShape::curve(Exponent(4, 3)),
                  c2 = MuShape::curve(2);
    const int n = 4;

    nil_entry("type01-n4", subalgebra_new(std::vector<EQ>{el(n, [](EQ& e) { e.eta = 1; e.xx = 1; e.yy = 1; })}), 1, c1,
              "type 1: central null line", true);
    nil_entry("type01-yy-n3", subalgebra_new(std::vector<EQ>{el(3, [](EQ& e) { e.yy = 1; })}), 1, c1,
              "type 1: the 2beta root line");
    nil_entry("type02-n4", subalgebra_new(std::vector<EQ>{el(n, [](EQ& e) { e.x[0] = 1; e.yy = 1; })}), 2, c32,
              "type 2, dim 1", true);
    nil_entry("type02-max-n4", type2_max(n), 2, MuShape::band(Exponent(1), Exponent(3, 2)),
              "type 2, maximal dimension 2n-3", false, 2 * n - 3);
    nil_entry("type03a-n4",
              subalgebra_new(std::vector<EQ>{el(n, [](EQ& e) { e.y[0] = 1; e.x[0] = gi(1, 1); e.yy = 1; })}), 3, c32,
              "type 3(a), lambda = 1+i, dim 1");
    {
        std::vector<EQ> b;
        for (int i = 0; i < 2; ++i)
            for (GQ s : {gi(1), gi(0, 1)}) b.push_back(el(n, [&](EQ& e) { e.y[size_t(i)] = s; }));
        nil_entry("type03b-n4", sat(b), 3, c1, "type 3(b): beta root space with its 2beta closure");
    }
    {
        std::vector<EQ> b;
        for (int i = 0; i < 2; ++i)
            for (GQ s : {gi(1), gi(0, 1)}) b.push_back(el(n, [&](EQ& e) { e.x[size_t(i)] = s; }));
        nil_entry("type04-n4", sat(b), 4, c1, "type 4: alpha+beta root space with its 2alpha+2beta closure", true);
    }
    nil_entry("type04-max-n4", type4_max(n), 4, c1, "type 4, maximal dimension 2n-1", false, 2 * n - 1);
    nil_entry("type05-n4",
              subalgebra_new(std::vector<EQ>{el(n, [](EQ& e) { e.phi = gi(2, 1); e.yy = 1; e.x[0] = 1; })}), 5, c43,
              "type 5, dim 1, phi0 = 2+i", true);
    nil_entry("type06-n4", subalgebra_new(std::vector<EQ>{el(n, [](EQ& e) { e.x[0] = 1; e.y[1] = 1; }),
                                                            el(n, [](EQ& e) { e.eta = 1; })}),
              6, c2, "type 6: independent x, y with an anisotropic center", true);
    nil_entry("thm61-07-n4", type7_max(4), 7, MuShape::band(Exponent(3, 2), Exponent(2)),
              "type 7, maximal dimension n+1", false, 5);
    nil_entry("type07-max-n5", type7_max(5), 7, MuShape::band(Exponent(3, 2), Exponent(2)),
              "type 7, maximal dimension n+1", false, 6);
    nil_entry("type08-n4", subalgebra_new(std::vector<EQ>{el(n, [](EQ& e) { e.phi = 1; e.y[0] = 1; })}), 8, c32,
              "type 8, dim 1", true);
    nil_entry("lem84-3dim-n4", type8_3dim(4), 8, c32, "type 8, maximal dimension 3 (solved exactly)", true, 3);
    nil_entry("type08-3dim-n5", type8_3dim(5), 8, c32, "type 8, maximal dimension 3 (solved exactly)", false, 3);
    nil_entry("type09-n4", subalgebra_new(std::vector<EQ>{el(n, [](EQ& e) { e.phi = 1; e.y[0] = 1; }),
                                                            el(n, [](EQ& e) { e.xx = 1; })}),
              9, MuShape::band(Exponent(1), Exponent(3, 2)), "type 9: phi, y plus the xx line", false, 2);
    nil_entry("type10-n4", subalgebra_new(std::vector<EQ>{el(n, [](EQ& e) { e.phi = 1; })}), 10, c2,
              "type 10: the alpha root line", true);
    nil_entry("type10-dim2-n4",
              subalgebra_new(std::vector<EQ>{el(n, [](EQ& e) { e.phi = 1; e.eta = gi(0, 1); }),
                                             el(n, [](EQ& e) { e.phi = gi(0, 1); e.eta = -1; })}),
              10, c2, "type 10, dim 2", false, 2);
    nil_entry("type11-n4", subalgebra_new(std::vector<EQ>{el(n, [](EQ& e) { e.phi = 1; e.y[0] = 1; }),
                                                            el(n, [](EQ& e) { e.eta = 1; e.xx = 1; })}),
              11, MuShape::band(Exponent(5, 4), Exponent(2)), "type 11", true, 2);
    nil_entry("cds-xy-central-n4", subalgebra_new(std::vector<EQ>{el(n, [](EQ& e) { e.x[0] = 1; e.y[1] = 1; }),
                                                                  el(n, [](EQ& e) { e.eta = 1; e.xx = 1; e.yy = 1; })}),
              std::nullopt, MuShape::full(), "CDS: square 1 and linear 1");
    {
        std::vector<EQ> b;
        b.push_back(el(3, [](EQ& e) { e.phi = 1; }));
        b.push_back(el(3, [](EQ& e) { e.phi = gi(0, 1); }));
        b.push_back(el(3, [](EQ& e) { e.y[0] = 1; }));
        b.push_back(el(3, [](EQ& e) { e.y[0] = gi(0, 1); }));
        nil_entry("cds-n-n3", sat(b), std::nullopt, MuShape::full(), "CDS: all of n");
    }

    using an::Graph;
    using an::OneParam;
    using an::Semidirect;
    auto K = [](long c1_, long c2_) { return nil::kernel_line(c1_, c2_); };
    an_entry("tu-01b-n4", AnSpec{n, Semidirect{K(1, -1), {el(n, [](EQ& e) { e.eta = 1; e.xx = 1; e.yy = 1; })}}}, true,
             "TU 1(b)", MuShape::full(), "T x| U: central null line under ker(alpha)");
    an_entry("tu-04bii-n4", AnSpec{n, Semidirect{K(2, -1), {el(n, [](EQ& e) { e.y[0] = 1; e.xx = 1; })}}}, false,
             "TU 4(b)(ii)", c32, "T x| U: beta + 2alpha+2beta line under ker(2alpha+beta)");
    an_entry("tu-07b-n4", AnSpec{n, Semidirect{K(1, -1), {el(n, [](EQ& e) { e.x[0] = 1; e.y[1] = 1; })}}}, false,
             "TU 7(b)", c2, "T x| U: independent x, y under ker(alpha)");
    an_entry("tu-11c-n4", AnSpec{n, Semidirect{K(1, 1), {el(n, [](EQ& e) { e.phi = 1; e.xx = 1; })}}}, false,
             "TU 11(c)", c2, "T x| U: alpha + 2alpha+2beta line under ker(alpha+2beta)");
    an_entry("graph-1-n4",
             AnSpec{n, Graph{Root::alpha, el(n, [](EQ& e) { e.phi = 1; }), {el(n, [](EQ& e) { e.x[0] = 1; })}}}, false,
             "graph 1", MuShape::band(Exponent(1), Exponent(2), 0, -1), "graph: omega = alpha, sigma = alpha+beta");
    an_entry("graph-2-n4",
             AnSpec{n, Graph{Root::alpha, el(n, [](EQ& e) { e.phi = 1; }), {el(n, [](EQ& e) { e.eta = 1; })}}}, false,
             "graph 2", MuShape::band(Exponent(2), Exponent(2), -2, 0), "graph: omega = alpha, sigma = alpha+2beta");
    an_entry("graph-3-r1-n4",
             AnSpec{n, Graph{Root::beta, el(n, [](EQ& e) { e.yy = 1; }), {el(n, [](EQ& e) { e.eta = 1; })}}}, false,
             "graph 3", MuShape::band(Exponent(1), Exponent(2), Q(1, 2), 0), "graph: omega = beta, sigma = alpha+2beta, r = 1");
    an_entry("graph-3-r2-n4",
             AnSpec{n, Graph{Root::beta, el(n, [](EQ& e) { e.y[0] = 1; }), {el(n, [](EQ& e) { e.eta = 1; })}}}, false,
             "graph 3", MuShape::band(Exponent(1), Exponent(2), 1, 0), "graph: omega = beta, sigma = alpha+2beta, r = 2");
    an_entry("graph-4-n4",
             AnSpec{n, Graph{Root::beta, el(n, [](EQ& e) { e.yy = 1; }), {el(n, [](EQ& e) { e.x[0] = 1; })}}}, false,
             "graph 4", MuShape::band(Exponent(1), Exponent(1), 0, 1), "graph: omega = beta, sigma = alpha+beta, r = 1");
    an_entry("graph-5-cds-n4",
             AnSpec{n, Graph{Root::beta, el(n, [](EQ& e) { e.yy = 1; }), {el(n, [](EQ& e) { e.y[0] = 1; })}}}, true,
             "graph 5", MuShape::full(), "graph: U meets u_beta + u_2beta");
    an_entry("oneparam-n4", AnSpec{n, OneParam{el(n, [](EQ& e) { e.t1 = 1; e.t2 = 1; e.phi = 1; })}}, false,
             "one-parameter", MuShape::ray(Exponent::sym("k")), "one-parameter: ker(alpha) with an alpha component");
    return g;
}

inline const GalleryEntry& gallery_entry(const std::string& id) {
    static const std::vector<GalleryEntry> all = gallery();
    for (auto& e : all)
        if (e.id == id) return e;
    throw InputError("unknown gallery id: " + id);
}

inline json gallery_to_json(const GalleryEntry& e) {
    json j = e.sub ? subalgebra_to_json(*e.sub) : an::an_spec_to_json(*e.an);
    j["id"] = e.id;
    json x;
    x["verdict"] = e.cds ? "CDS" : "NotCDS";
    if (e.type) x["type"] = *e.type;
    if (!e.label.empty()) x["case"] = e.label;
    x["shape"] = shape_to_json(e.shape);
    x["provenance"] = e.provenance;
    if (e.table_dim) x["max_dim"] = *e.table_dim;
    j["expected"] = x;
    return j;
}

}  // namespace su2n
