#pragma once
// CDS / not-CDS classification of subalgebras of n, the normalizer in a, and the JSON report.
#include "../algebra.hpp"
#include "templates.hpp"

namespace su2n::nil {

struct InconsistentClassification : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// {t in a : [t, h] in h}: trivial, a line spanned by (p, q), or all of a
struct TorusLine {
    int dim = 0;
    long p = 0, q = 0;
    std::string name() const {
        if (dim == 0) return "trivial";
        if (dim == 2) return "full A";
        static const std::vector<std::tuple<long, long, const char*>> roots = {
            {1, 1, "alpha"}, {1, 0, "beta"}, {0, 1, "alpha+beta"}, {2, 1, "alpha-beta"},
            {-1, 1, "alpha+2beta"}, {1, 2, "2alpha+beta"}, {3, 1, "alpha-2beta"}};
        for (auto& [a, b, nm] : roots)
            if ((a == p && b == q) || (a == -p && b == -q)) return std::string("ker(") + nm + ")";
        return "span(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
};

/// primitive integer generator of the kernel of the root functional (c1, c2)
inline TorusLine kernel_line(long c1, long c2) {
    TorusLine t;
    t.dim = 1;
    t.p = -c2;
    t.q = c1;
    long g = std::gcd(std::abs(t.p), std::abs(t.q));
    if (g) { t.p /= g; t.q /= g; }
    if (t.p < 0 || (t.p == 0 && t.q < 0)) { t.p = -t.p; t.q = -t.q; }
    return t;
}

inline TorusLine normalizer_in_A(const SubQ& h) {
    const int n = h.n;
    la::Mat rows = coord_rows(h.basis);
    auto ann = la::kernel(rows, size_t(EQ::dim(n)));
    la::Mat sys;
    for (auto& b : h.basis) {
        auto a1 = torus_action(Q(1), Q(0), b).coords(), a2 = torus_action(Q(0), Q(1), b).coords();
        for (auto& f : ann) sys.push_back({la::dot(f, a1), la::dot(f, a2)});
    }
    auto ker = la::kernel(sys, 2);
    TorusLine t;
    t.dim = int(ker.size());
    if (t.dim == 1) {
        // scale to a primitive integer pair
        mpz_class l = 1;
        for (auto& v : ker[0]) l = lcm(l, mpz_class(v.get_den()));
        mpz_class a = mpz_class(ker[0][0] * l), b = mpz_class(ker[0][1] * l), g = gcd(a, b);
        if (g != 0) { a /= g; b /= g; }
        if (a < 0 || (a == 0 && b < 0)) { a = -a; b = -b; }
        t.p = a.get_si();
        t.q = b.get_si();
    }
    return t;
}

/// normalizer answers allowed for each not-CDS type
inline std::vector<std::string> allowed_normalizers(int type) {
    switch (type) {
        case 1: return {"full A", "ker(alpha)"};
        case 2: return {"ker(alpha-beta)"};
        case 3: return {"ker(alpha)", "full A", "ker(alpha+beta)", "ker(2alpha+beta)", "ker(beta)"};
        case 4: return {"full A", "ker(alpha+beta)", "ker(beta)"};
        case 5: return {"ker(alpha-2beta)"};
        case 6: return {"full A", "ker(alpha)"};
        case 7: return {"ker(alpha-beta)", "ker(2alpha+beta)"};
        case 8: return {"ker(alpha-beta)"};
        case 9: return {"ker(alpha-beta)"};
        case 10: return {"full A", "ker(beta)", "ker(alpha+2beta)"};
        default: return {};
    }
}

struct Classification {
    bool cds = false;
    MuShape shape;
    std::optional<NotCdsMatch> match;
    std::optional<Witness> square, linear;
    TorusLine normalizer;
    bool normalizer_consistent = true;
    uint64_t seed = 0;
    int attempts = 1;
    int dim = 0;
};

inline Classification classify_once(const SubQ& h, uint64_t seed) {
    Context c(h, seed);
    if (c.H.empty()) throw std::invalid_argument("trivial subalgebra");
    Classification r;
    r.seed = seed;
    r.dim = int(c.H.size());
    r.square = check_square(c);
    r.linear = check_linear(c);
    r.match = match_notcds(c);
    bool both = r.square && r.linear;
    if (both == r.match.has_value()) {
        std::string msg = both ? "both witnesses and template " + std::to_string(r.match->type)
                               : std::string("no witness pair and no template");
        throw InconsistentClassification(msg);
    }
    r.cds = both;
    r.shape = both ? MuShape::full("CDS") : r.match->shape;
    r.normalizer = normalizer_in_A(h);
    if (r.match && r.normalizer.dim > 0) {
        auto ok = allowed_normalizers(r.match->type);
        r.normalizer_consistent = std::find(ok.begin(), ok.end(), r.normalizer.name()) != ok.end();
    }
    return r;
}

/// classify, rerunning with fresh randomness if the double-entry check fails
inline Classification classify(const SubQ& h, uint64_t seed = 0, int attempts = 3) {
    for (int a = 0;; ++a) {
        try {
            auto r = classify_once(h, seed + uint64_t(a) * 0x9e3779b97f4a7c15ULL);
            r.attempts = a + 1;
            return r;
        } catch (const InconsistentClassification&) {
            if (a + 1 >= attempts) throw;
        }
    }
}

inline json witness_to_json(const Witness& w) {
    json j;
    j["condition"] = w.id;
    j["exact"] = w.exact();
    j["curve"] = w.curve;
    json el = json::object();
    for (auto& e : w.elements) el[e.name] = e.exact ? element_to_json(e.q) : element_to_json(e.d);
    j["elements"] = el;
    return j;
}

inline json gq_json(const GQ& g) { return complex_json(g); }

inline json classification_to_json(const Classification& c) {
    json j;
    j["verdict"] = c.cds ? "CDS" : "NotCDS";
    j["type"] = c.match ? json(c.match->type) : json(nullptr);
    if (c.match && !c.match->subcase.empty()) j["subcase"] = c.match->subcase;
    j["shape"] = shape_to_json(c.shape);
    json w = json::object();
    if (c.square) w["square"] = witness_to_json(*c.square);
    if (c.linear) w["linear"] = witness_to_json(*c.linear);
    j["witnesses"] = w;
    if (c.match) {
        if (c.match->lambda) j["lambda"] = gq_json(*c.match->lambda);
        if (c.match->phi0) j["phi0"] = gq_json(*c.match->phi0);
    }
    j["normalizer"] = c.normalizer.name();
    j["dim"] = c.dim;
    j["seed"] = c.seed;
    return j;
}

}  // namespace su2n::nil
