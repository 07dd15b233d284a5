#pragma once
// Subgroups of AN not inside N: compatibility with A, T x| U, graphs of psi: ker(omega) -> U_omega U_2omega,
// one-parameter subgroups.
#include "../nil/classify.hpp"
#include "../roots.hpp"

#include <variant>

namespace su2n::an {

using nil::Space;
using nil::TorusLine;

struct SpecViolation : std::runtime_error { using std::runtime_error::runtime_error; };
struct UNotNormalized : std::runtime_error { using std::runtime_error::runtime_error; };
struct UIsCds : std::runtime_error { using std::runtime_error::runtime_error; };
struct NoCaseMatched : std::runtime_error { using std::runtime_error::runtime_error; };
struct NormalizationFailed : std::runtime_error { using std::runtime_error::runtime_error; };

struct Semidirect {
    TorusLine T;
    Space U;
};

/// H = {a psi(a)} U; psi stored by its value on the primitive generator of ker(omega)
struct Graph {
    Root omega = Root::alpha;
    EQ psi;
    Space U;
};

struct OneParam {
    EQ X;
};

struct AnSpec {
    int n = 3;
    std::variant<Semidirect, Graph, OneParam> v;
};

struct AnResult {
    MuShape shape;
    std::string label;
    std::string notes;
    int r = 0;
    bool cds = false;
    std::optional<int> u_type;
};

inline const std::vector<Root> reduced_roots = {Root::alpha, Root::beta, Root::alpha_beta, Root::alpha_2beta};

/// slots of u_omega + u_2omega
inline unsigned pair_slots(Root w) {
    switch (w) {
        case Root::alpha: return PHI;
        case Root::beta: return Y | YY;
        case Root::alpha_beta: return X | XX;
        case Root::alpha_2beta: return ETA;
        default: throw SpecViolation("omega must be a reduced positive root");
    }
}

inline TorusLine ker_of(Root w) {
    auto [c1, c2] = root_functional(w);
    return nil::kernel_line(c1, c2);
}

inline EQ torus_el(int n, const TorusLine& t) {
    EQ e(n);
    e.t1 = Q(t.p);
    e.t2 = Q(t.q);
    return e;
}

inline bool same_line(const TorusLine& a, const TorusLine& b) {
    return a.dim == b.dim && (a.dim != 1 || (a.p == b.p && a.q == b.q));
}

/// slots whose root vanishes on every element of the torus span
inline unsigned centralizer_slots(const std::vector<std::pair<Q, Q>>& ts) {
    unsigned m = 0;
    for (auto r : all_roots) {
        auto [c1, c2] = root_functional(r);
        bool zero = true;
        for (auto& [a, b] : ts)
            if (c1 * a + c2 * b != 0) zero = false;
        if (zero) m |= root_slot(r);
    }
    return m;
}

inline std::vector<EQ> spec_basis(const AnSpec& s) {
    std::vector<EQ> b;
    if (auto* sd = std::get_if<Semidirect>(&s.v)) {
        if (sd->T.dim == 2) {
            b.push_back(torus_el(s.n, {1, 1, 0}));
            b.push_back(torus_el(s.n, {1, 0, 1}));
        } else if (sd->T.dim == 1) b.push_back(torus_el(s.n, sd->T));
        for (auto& u : sd->U) b.push_back(u);
    } else if (auto* g = std::get_if<Graph>(&s.v)) {
        b.push_back(torus_el(s.n, ker_of(g->omega)) + g->psi);
        for (auto& u : g->U) b.push_back(u);
    } else {
        b.push_back(std::get<OneParam>(s.v).X);
    }
    return b;
}

/// H in T U C_N(T), T = A cap HN, U = H cap N, checked on the Lie algebra
inline bool is_compatible_basis(const std::vector<EQ>& h, int n) {
    Space U = restrict_zero(h, T, n);
    std::vector<std::pair<Q, Q>> ts;
    for (auto& b : h)
        if (!b.is_nilpotent()) ts.push_back({b.t1, b.t2});
    const unsigned rest = NIL & ~centralizer_slots(ts);
    la::Mat rows;
    for (auto& u : U) rows.push_back(u.coords(rest));
    for (auto& b : h) {
        auto v = b.coords(rest);
        if (la::is_zero_vec(v)) continue;
        if (rows.empty() || !la::in_span(rows, v)) return false;
    }
    return true;
}

inline bool is_compatible(const AnSpec& s) { return is_compatible_basis(spec_basis(s), s.n); }

namespace detail {

inline Space meet(const Space& U, unsigned slots, int n) { return restrict_zero(U, NIL & ~slots, n); }

/// U = sum of its intersections with the listed slot sets
inline bool spanned_by(const Space& U, const std::vector<unsigned>& parts, int n) {
    Space all;
    for (auto p : parts)
        for (auto& e : meet(U, p, n)) all.push_back(e);
    return nil::dim(all) == nil::dim(U);
}

inline bool inside(const Space& U, unsigned slots) { return nil::vanishes(U, NIL & ~slots); }

inline MuShape deferred(const std::string& label) {
    return MuShape::curve(Exponent::sym("s"), 0, label + " (exponent from the rank-one T x| U analysis; s symbolic)");
}

inline MuShape band_or_curve(Exponent hi, bool dim2, const std::string& prov) {
    return dim2 ? MuShape::curve(hi, 0, prov) : MuShape::band(Exponent(1), hi, 0, 0, prov);
}

}  // namespace detail

inline AnResult classify_semidirect(const TorusLine& t, const Space& U0, int n, uint64_t seed = 0) {
    using namespace detail;
    Space U = nil::span_basis(U0, n);
    if (U.empty()) throw SpecViolation("U must be nontrivial");
    for (auto& u : U)
        if (!u.is_nilpotent()) throw SpecViolation("U must lie in n");
    if (t.dim != 1) throw SpecViolation("T must be one-dimensional");
    auto h = subalgebra_new(U);
    auto norm = nil::normalizer_in_A(h);
    if (norm.dim == 0 || (norm.dim == 1 && !same_line(norm, t)))
        throw UNotNormalized("T = " + t.name() + " does not normalize U (normalizer " + norm.name() + ")");
    auto c = nil::classify(h, seed);
    if (c.cds) throw UIsCds("U is a Cartan-decomposition subgroup, hence so is H");
    const int k = c.match->type;
    const bool dim2 = U.size() == 1;
    Space Z = meet(U, ETA | XX | YY, n);
    AnResult r;
    r.u_type = k;
    auto need = [&](const TorusLine& want, const std::string& label) {
        if (!same_line(t, want)) throw NoCaseMatched(label + " requires T = " + want.name() + ", got " + t.name());
        r.label = label;
    };
    const TorusLine k_a = ker_of(Root::alpha), k_b = ker_of(Root::beta), k_ab = ker_of(Root::alpha_beta),
                    k_a2b = ker_of(Root::alpha_2beta), k_amb = nil::kernel_line(1, -2),
                    k_2ab = nil::kernel_line(2, -1), k_am2b = nil::kernel_line(1, -3);
    auto cds = [&](const std::string& label) {
        r.cds = true;
        r.shape = MuShape::full(label);
    };
    auto defer = [&](const std::string& label) {
        r.label = label;
        r.shape = deferred(label);
        r.notes = "deferred: rank-one analysis, s symbolic";
    };
    switch (k) {
        case 1:
            if (inside(U, YY) || inside(U, XX)) defer("TU 1(a)");
            else { need(k_a, "TU 1(b)"); cds("TU 1(b)"); }
            break;
        case 2:
            if (!spanned_by(U, {X | YY, ETA | XX | YY}, n)) throw NoCaseMatched("type 2 without the root-space splitting");
            need(k_amb, "TU 2");
            r.shape = band_or_curve(Exponent(3, 2), dim2, r.label);
            break;
        case 3:
            if (c.match->lambda && *c.match->lambda != GQ(0)) {
                need(k_a, "TU 3");
                cds("TU 3");
            } else if (spanned_by(U, {Y, ETA | XX | YY}, n)) {
                defer("TU 4(a)");
            } else if (spanned_by(U, {Y | ETA, ETA | XX | YY}, n)) {
                need(k_ab, "TU 4(b)(i)");
                r.shape = MuShape::curve(1, 0, "TU 4(b)(i)");
            } else if (spanned_by(U, {Y | XX, ETA | XX | YY}, n)) {
                need(k_2ab, "TU 4(b)(ii)");
                r.shape = band_or_curve(Exponent(3, 2), dim2, r.label);
            } else if (Z.empty() && inside(U, Y | YY)) {
                need(k_b, "TU 4(b)(iii)");
                cds("TU 4(b)(iii)");
            } else {
                throw NoCaseMatched("type 3 with lambda = 0 outside the listed splittings");
            }
            break;
        case 4:
            if (spanned_by(U, {X, ETA | XX | YY}, n)) defer("TU 5(a)");
            else if (inside(U, X | XX)) { need(k_ab, "TU 5(b)"); cds("TU 5(b)"); }
            else if (spanned_by(U, {PHI | X | ETA, ETA | XX | YY}, n)) {
                need(k_b, "TU 5(c)");
                r.shape = MuShape::curve(1, 0, "TU 5(c)");
            } else throw NoCaseMatched("type 4 outside the listed splittings");
            break;
        case 5:
            if (!spanned_by(U, {PHI | YY, X}, n)) throw NoCaseMatched("type 5 without the root-space splitting");
            need(k_am2b, "TU 6");
            r.shape = band_or_curve(Exponent(4, 3), dim2, r.label);
            break;
        case 6:
            if (inside(U, ETA)) defer("TU 7(a)");
            else if (spanned_by(U, {Y | X, ETA | XX | YY}, n)) {
                need(k_a, "TU 7(b)");
                r.shape = MuShape::curve(2, 0, "TU 7(b)");
            } else throw NoCaseMatched("type 6 outside the listed splittings");
            break;
        case 7:
            if (spanned_by(U, {X | YY, ETA}, n) && same_line(t, k_amb)) r.label = "TU 8(x)";
            else if (spanned_by(U, {Y | XX, ETA}, n) && same_line(t, k_2ab)) r.label = "TU 8(y)";
            else throw NoCaseMatched("type 7 with T = " + t.name());
            r.shape = MuShape::band(Exponent(3, 2), Exponent(2), 0, 0, r.label);
            break;
        case 8:
            if (!spanned_by(U, {PHI | Y, X | YY}, n) || meet(U, PHI | Y, n).empty())
                throw NoCaseMatched("type 8 without the root-space splitting");
            need(k_amb, "TU 9");
            r.shape = MuShape::curve(Exponent(3, 2), 0, r.label);
            break;
        case 9:
            if (!spanned_by(U, {PHI | Y, ETA | XX | YY}, n)) throw NoCaseMatched("type 9 without the root-space splitting");
            need(k_amb, "TU 10");
            r.shape = MuShape::band(Exponent(1), Exponent(3, 2), 0, 0, r.label);
            break;
        case 10:
            if (inside(U, PHI)) defer("TU 11(a)");
            else if (inside(U, PHI | X | ETA)) { need(k_b, "TU 11(b)"); cds("TU 11(b)"); }
            else if (inside(U, PHI | XX)) {
                need(k_a2b, "TU 11(c)");
                r.shape = MuShape::curve(2, 0, "TU 11(c)");
            } else throw NoCaseMatched("type 10 outside the listed splittings");
            break;
        default: throw NoCaseMatched("type " + std::to_string(k) + " has no normalizing torus line");
    }
    return r;
}

namespace detail {

inline bool closed_under(const Space& U, const std::function<EQ(const EQ&)>& f) {
    for (auto& u : U)
        if (!nil::contains(U, f(u))) return false;
    return true;
}

/// (omega, sigma) -> graph case, after the Weyl reductions
inline int graph_case(Root w, Root s) {
    using R = Root;
    static const std::vector<std::tuple<R, R, int>> table = {
        {R::beta, R::alpha_2beta, 3},       {R::beta, R::alpha_beta, 4},
        {R::alpha, R::alpha_beta, 1},       {R::alpha, R::alpha_2beta, 2},
        {R::alpha_beta, R::alpha_2beta, 3}, {R::alpha_beta, R::beta, 4},
        {R::alpha_beta, R::alpha, 3},       {R::alpha_2beta, R::alpha_beta, 1},
        {R::alpha_2beta, R::alpha, 2},      {R::alpha_2beta, R::beta, 1}};
    for (auto& [a, b, c] : table)
        if (a == w && b == s) return c;
    return 0;
}

}  // namespace detail

inline void check_graph(const Graph& g, int n) {
    using namespace detail;
    const unsigned ps = pair_slots(g.omega);
    if (g.psi.is_zero_el()) throw SpecViolation("psi must be nontrivial");
    if (!g.psi.is_nilpotent() || !la::is_zero_vec(g.psi.coords(NIL & ~ps)))
        throw SpecViolation("psi must take values in u_omega + u_2omega");
    for (auto& u : g.U)
        if (!u.is_nilpotent()) throw SpecViolation("U must lie in n");
    if (nil::contains(g.U, g.psi)) throw SpecViolation("U meets the image of psi");
    auto t = ker_of(g.omega);
    if (!closed_under(g.U, [&](const EQ& u) { return torus_action(Q(t.p), Q(t.q), u); }))
        throw SpecViolation("U is not normalized by ker(omega)");
    if (!closed_under(g.U, [&](const EQ& u) { return bracket_nil(g.psi, u); }))
        throw SpecViolation("U is not normalized by psi(ker omega)");
    if (!g.U.empty()) subalgebra_new(g.U);
    (void)n;
}

inline AnResult classify_graph(const Graph& g0, int n, uint64_t seed = 0) {
    using namespace detail;
    Graph g = g0;
    g.U = nil::span_basis(g.U, n);
    check_graph(g, n);
    if (g.U.empty()) throw SpecViolation("dim H = 1: use the one-parameter case");
    auto c = nil::classify(subalgebra_new(g.U), seed);
    if (c.cds) throw UIsCds("U is a Cartan-decomposition subgroup, hence so is H");
    AnResult r;
    r.u_type = c.match->type;
    if (!meet(g.U, pair_slots(g.omega), n).empty()) {
        r.cds = true;
        r.label = "graph 5";
        r.shape = MuShape::full(r.label);
        return r;
    }
    int cs = 0;
    for (auto s : reduced_roots)
        if (inside(g.U, pair_slots(s))) cs = graph_case(g.omega, s);
    if (cs == 0 && g.U.size() == 1) {
        // a line in u_(a+2b) + u_(2a+2b) is conjugate under U_alpha into u_(a+2b); likewise after s_beta
        if (g.omega == Root::alpha && inside(g.U, ETA | XX)) cs = 2;
        if (g.omega == Root::alpha_2beta && inside(g.U, PHI | XX)) cs = 2;
    }
    if (cs == 0) throw NoCaseMatched("no (omega, sigma) pair for omega = " + root_name(g.omega));
    r.label = "graph " + std::to_string(cs);
    if (cs >= 3) {
        unsigned one = g.omega == Root::beta ? Y : X;
        r.r = la::is_zero_vec(g.psi.coords(one)) ? 1 : 2;
    }
    switch (cs) {
        case 1: r.shape = MuShape::band(Exponent(1), Exponent(2), 0, -1, r.label); break;
        case 2: r.shape = MuShape::band(Exponent(2), Exponent(2), -2, 0, r.label); break;
        case 3: r.shape = MuShape::band(Exponent(1), Exponent(2), Q(r.r) / 2, 0, r.label); break;
        case 4: r.shape = MuShape::band(Exponent(1), Exponent(1), 0, Q(r.r), r.label); break;
    }
    return r;
}

inline AnResult one_param_shape(const OneParam& p, int n) {
    const EQ& X = p.X;
    if (X.is_nilpotent()) throw SpecViolation("X lies in n");
    EQ w = mask_slots(X, NIL);
    if (w.is_zero_el()) throw SpecViolation("X lies in a, so H = H cap A");
    unsigned c = centralizer_slots({{X.t1, X.t2}});
    if (!la::is_zero_vec(w.coords(NIL & ~c))) throw SpecViolation("X is not compatible with A");
    AnResult r;
    r.label = "one-parameter";
    r.shape = MuShape::ray(Exponent::sym("k"), r.label);
    r.notes = "k symbolic; estimate it with the empirical lab";
    (void)n;
    return r;
}

namespace detail {

inline int height(Root r) {
    auto [c1, c2] = root_functional(r);
    // alpha = (1,-1), beta = (0,1): height = a + b in r = a alpha + b beta
    int a = c1, b = c1 + c2;
    return a + b;
}

/// t-parts of h reduced to one element carrying the torus part (dim 1), plus U = h cap n
inline std::pair<std::optional<EQ>, Space> split(const std::vector<EQ>& h, int n) {
    Space U = restrict_zero(h, T, n);
    for (auto& b : h)
        if (!b.is_nilpotent()) return {b, U};
    return {std::nullopt, U};
}

inline int torus_rank(const std::vector<EQ>& h) {
    la::Mat rows;
    for (auto& b : h) rows.push_back({b.t1, b.t2});
    return int(la::rank(rows));
}

inline TorusLine primitive(const Q& a, const Q& b, Q& scale) {
    mpz_class l = lcm(mpz_class(a.get_den()), mpz_class(b.get_den()));
    mpz_class p = mpz_class(a * l), q = mpz_class(b * l), g = gcd(p, q);
    p /= g;
    q /= g;
    if (p < 0 || (p == 0 && q < 0)) { p = -p; q = -q; }
    TorusLine t;
    t.dim = 1;
    t.p = p.get_si();
    t.q = q.get_si();
    scale = (t.p != 0 ? Q(t.p) / a : Q(t.q) / b);
    return t;
}

}  // namespace detail

/// spec of a compatible presentation of h (already compatible), without conjugating
inline AnSpec spec_from_compatible(const std::vector<EQ>& h, int n) {
    using namespace detail;
    AnSpec s;
    s.n = n;
    int tr = torus_rank(h);
    auto [X0, U] = split(h, n);
    U = nil::span_basis(U, n);
    if (tr == 0) throw SpecViolation("subalgebra lies in n");
    if (tr == 2) {
        TorusLine full;
        full.dim = 2;
        s.v = Semidirect{full, U};
        return s;
    }
    Q scale;
    TorusLine t = primitive(X0->t1, X0->t2, scale);
    EQ X = scale * *X0;
    EQ w = mask_slots(X, NIL);
    const unsigned rest = NIL & ~centralizer_slots({{X.t1, X.t2}});
    la::Mat rows;
    for (auto& u : U) rows.push_back(u.coords(rest));
    la::Vec coef;
    if (!la::is_zero_vec(w.coords(rest))) {
        if (rows.empty() || !la::solve_in_span(rows, w.coords(rest), coef)) throw SpecViolation("not compatible with A");
        w -= combine(U, coef, n);
    }
    if (w.is_zero_el()) {
        s.v = Semidirect{t, U};
        return s;
    }
    if (U.empty()) {
        s.v = OneParam{torus_el(n, t) + w};
        return s;
    }
    for (auto om : reduced_roots)
        if (same_line(ker_of(om), t)) {
            s.v = Graph{om, w, U};
            return s;
        }
    throw SpecViolation("centralizer part without a root kernel");
}

/// Ad(w_r) applied to a spec (throws NotInAN when a root space leaves n)
inline AnSpec reflect_spec(const AnSpec& s, Root r) {
    std::vector<EQ> b;
    for (auto& e : spec_basis(s)) b.push_back(weyl_reflect(e, r));
    return spec_from_compatible(b, s.n);
}

/// conjugate by exp(n) elements, lowest root height first, until compatible (at most iters rounds)
inline std::pair<AnSpec, Matrix<GQ>> normalize_to_compatible(const std::vector<EQ>& h0, int n, int iters = 64) {
    using namespace detail;
    std::vector<EQ> h = h0;
    Matrix<GQ> g = Matrix<GQ>::identity(n + 2);
    if (torus_rank(h) == 0) throw SpecViolation("subalgebra lies in n");
    std::vector<Root> order(all_roots.begin(), all_roots.end());
    std::stable_sort(order.begin(), order.end(), [](Root a, Root b) { return height(a) < height(b); });
    for (int it = 0; it <= iters; ++it) {
        if (is_compatible_basis(h, n)) return {spec_from_compatible(h, n), g};
        if (it == iters) break;
        if (torus_rank(h) == 2) {
            // H contains a conjugate of A
            TorusLine full;
            full.dim = 2;
            return {AnSpec{n, Semidirect{full, nil::span_basis(restrict_zero(h, T, n), n)}}, g};
        }
        auto [X, U] = split(h, n);
        const Q t1 = X->t1, t2 = X->t2;
        // reduce X modulo U, clearing the lowest-height coordinates first
        la::Mat urows;
        std::vector<unsigned> slot_order;
        for (auto r : order) slot_order.push_back(root_slot(r));
        auto ordered = [&](const EQ& e) {
            la::Vec v;
            for (auto sl : slot_order)
                for (auto& c : e.coords(sl)) v.push_back(c);
            return v;
        };
        EQ w = mask_slots(*X, NIL);
        if (!U.empty()) {
            la::Mat m;
            for (auto& u : U) m.push_back(ordered(u));
            auto piv = la::rref(m);
            // the rref rows are combinations of U; rebuild them as elements
            Space red;
            for (auto& row : m) {
                la::Vec coef;
                la::Mat rows;
                for (auto& u : U) rows.push_back(ordered(u));
                la::solve_in_span(rows, row, coef);
                red.push_back(combine(U, coef, n));
            }
            la::Vec wv = ordered(w);
            for (size_t i = 0; i < piv.size(); ++i) {
                Q c = wv[piv[i]];
                if (c != 0) {
                    w -= c * red[i];
                    wv = ordered(w);
                }
            }
        }
        EQ conj(n);
        bool found = false;
        int hgt = 0;
        for (auto r : order) {
            if (found && height(r) != hgt) break;
            auto [c1, c2] = root_functional(r);
            Q val = c1 * t1 + c2 * t2;
            if (val == 0) continue;
            EQ part = mask_slots(root_project(w, r), NIL);
            if (part.is_zero_el()) continue;
            conj += (Q(1) / val) * part;
            found = true;
            hgt = height(r);
        }
        if (!found) break;
        Matrix<GQ> e = exp_series(conj);
        Matrix<GQ> ei = group_inverse(e);
        for (auto& b : h) b = conjugate_with(e, ei, b);
        g = e * g;
    }
    throw NormalizationFailed("no compatible presentation found");
}

inline std::pair<AnSpec, Matrix<GQ>> normalize_to_compatible(const SubQ& h, int iters = 64) {
    return normalize_to_compatible(h.basis, h.n, iters);
}

inline AnResult classify_an(const AnSpec& s, uint64_t seed = 0) {
    if (auto* sd = std::get_if<Semidirect>(&s.v)) {
        if (sd->T.dim == 2) {
            AnResult r;
            r.cds = true;
            r.label = "contains A";
            r.shape = MuShape::full(r.label);
            return r;
        }
        if (nil::span_basis(sd->U, s.n).empty()) throw SpecViolation("H lies in A");
        try {
            return classify_semidirect(sd->T, sd->U, s.n, seed);
        } catch (const UIsCds&) {
            AnResult r;
            r.cds = true;
            r.label = "U is CDS";
            r.shape = MuShape::full(r.label);
            return r;
        }
    }
    if (auto* g = std::get_if<Graph>(&s.v)) {
        try {
            return classify_graph(*g, s.n, seed);
        } catch (const UIsCds&) {
            AnResult r;
            r.cds = true;
            r.label = "U is CDS";
            r.shape = MuShape::full(r.label);
            return r;
        }
    }
    return one_param_shape(std::get<OneParam>(s.v), s.n);
}

inline TorusLine torus_line_from_json(const json& j) {
    if (j.is_array()) {
        Q scale;
        return detail::primitive(json_q(j.at(0)), json_q(j.at(1)), scale);
    }
    std::string nm = j.get<std::string>();
    if (nm == "full A") {
        TorusLine t;
        t.dim = 2;
        return t;
    }
    static const std::vector<std::pair<long, long>> funcs = {{1, -1}, {0, 1}, {1, 0}, {1, 1}, {1, -2}, {2, -1}, {1, -3}};
    for (auto [c1, c2] : funcs)
        if (nil::kernel_line(c1, c2).name() == nm) return nil::kernel_line(c1, c2);
    throw InputError("unknown torus line: " + nm);
}

inline json torus_line_to_json(const TorusLine& t) {
    if (t.dim == 1) return json::array({t.p, t.q});
    return t.name();
}

inline Space space_from_json(const json& j, int n) {
    Space U;
    for (auto& e : j) U.push_back(element_from_json<GQ>(e, n));
    return U;
}

inline json space_to_json(const Space& U) {
    json a = json::array();
    for (auto& u : U) a.push_back(element_to_json(u));
    return a;
}

inline bool is_an_spec_json(const json& j) {
    if (!j.contains("kind")) return false;
    auto k = j.at("kind").get<std::string>();
    return k == "semidirect" || k == "graph" || k == "oneparam";
}

inline AnSpec an_spec_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("kind")) throw InputError("AN spec needs 'n' and 'kind'");
    AnSpec s;
    s.n = j.at("n").get<int>();
    if (s.n < 3) throw InputError("n must be >= 3");
    auto k = j.at("kind").get<std::string>();
    if (k == "semidirect") s.v = Semidirect{torus_line_from_json(j.at("T")), space_from_json(j.value("U", json::array()), s.n)};
    else if (k == "graph")
        s.v = Graph{parse_root(j.at("omega").get<std::string>()), element_from_json<GQ>(j.at("psi"), s.n),
                    space_from_json(j.value("U", json::array()), s.n)};
    else if (k == "oneparam") s.v = OneParam{element_from_json<GQ>(j.at("X"), s.n)};
    else throw InputError("unknown kind: " + k);
    return s;
}

inline json an_spec_to_json(const AnSpec& s) {
    json j;
    j["n"] = s.n;
    if (auto* sd = std::get_if<Semidirect>(&s.v)) {
        j["kind"] = "semidirect";
        j["T"] = torus_line_to_json(sd->T);
        j["U"] = space_to_json(sd->U);
    } else if (auto* g = std::get_if<Graph>(&s.v)) {
        j["kind"] = "graph";
        j["omega"] = root_name(g->omega);
        j["psi"] = element_to_json(g->psi);
        j["U"] = space_to_json(g->U);
    } else {
        j["kind"] = "oneparam";
        j["X"] = element_to_json(std::get<OneParam>(s.v).X);
    }
    return j;
}

inline json an_result_to_json(const AnResult& r) {
    json j;
    j["verdict"] = r.cds ? "CDS" : "NotCDS";
    j["case"] = r.label;
    j["shape"] = shape_to_json(r.shape);
    if (r.r) j["r"] = r.r;
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (r.u_type) j["u_type"] = *r.u_type;
    return j;
}

}  // namespace su2n::an
