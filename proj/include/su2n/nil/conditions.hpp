#pragma once
// The eight square conditions and five linear conditions, decided exactly, with witnesses.
#include "locus.hpp"

#include <map>

namespace su2n::nil {

struct NotInN : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct FloatingModeUnsupported : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// a cited element; approximate when the defining equation has only irrational solutions
struct WitnessElement {
    std::string name;
    EQ q;
    ED d;
    bool exact = true;
};

struct Witness {
    bool square = true;  // square (rho ~ |h|^2) or linear (rho ~ |h|)
    int id = 0;
    std::vector<WitnessElement> elements;
    std::string curve;  // recipe of the witness curve
    bool exact() const {
        for (auto& e : elements)
            if (!e.exact) return false;
        return true;
    }
    const WitnessElement& get(const std::string& nm) const {
        for (auto& e : elements)
            if (e.name == nm) return e;
        throw std::out_of_range("witness has no element " + nm);
    }
    bool has(const std::string& nm) const {
        for (auto& e : elements)
            if (e.name == nm) return true;
        return false;
    }
};

inline WitnessElement wel(std::string nm, const EQ& q) { return {std::move(nm), q, to_double(q), true}; }
inline WitnessElement wel_approx(std::string nm, const ED& d) { return {std::move(nm), to_exact(d), d, false}; }

inline EQ xx_unit(int n) {
    EQ e(n);
    e.xx = 1;
    return e;
}

/// shared data of one subalgebra
struct Context {
    int n;
    Space H, Z, W, V4;
    bool xx_in_h = false;
    Rng rng;
    std::optional<LocusResult> locus_cache;

    Context(const SubQ& h, uint64_t seed) : n(h.n), rng(seed) {
        if (h.mode != Mode::exact) throw FloatingModeUnsupported("classification needs an exact subalgebra");
        for (auto& b : h.basis)
            if (!is_zero(b.t1) || !is_zero(b.t2)) throw NotInN("subalgebra has a torus component");
        H = h.basis;
        Z = span_basis(h.z_part, n);
        W = restrict_zero(H, PHI, n);
        V4 = restrict_zero(H, Y | YY, n);
        xx_in_h = contains(H, xx_unit(n));
    }
    const LocusResult& locus() {
        if (!locus_cache) locus_cache = locus_analysis(W, Z, rng, n);
        return *locus_cache;
    }
    bool phi_zero() const { return vanishes(H, PHI); }
    bool y_zero_all() const { return vanishes(H, Y); }
};

inline bool phi_nz(const EQ& u) { return !is_zero(u.phi); }
inline bool y_nz(const EQ& u) { return !y_zero(u); }
inline bool x_nz(const EQ& u) { return !x_zero(u); }

/// a zero of q on span V outside the sets where all slots of some mask vanish
struct QuadZero {
    bool found = false;
    std::optional<EQ> exact;
    std::optional<ED> approx;
};

inline QuadZero quad_zero_avoiding(const Space& V0, const std::function<Q(const EQ&)>& q, const std::vector<unsigned>& avoid,
                                   Rng& rng, int n) {
    QuadZero out;
    const Space V = span_basis(V0, n);
    if (V.empty()) return out;
    auto bad_q = [&](const EQ& u) {
        for (unsigned m : avoid)
            if (la::is_zero_vec(u.coords(m))) return true;
        return false;
    };
    std::vector<Space> P;
    for (unsigned m : avoid) {
        P.push_back(restrict_zero(V, m, n));
        if (dim(P.back()) == int(V.size())) return out;
    }
    la::Mat G = gram_of(V, q);
    la::Signature sig = la::signature(G);
    if (!sig.indefinite()) {
        Space R = radical(V, G, n);
        auto u = find_generic(R, [&](const EQ& e) { return !bad_q(e); }, rng, n);
        if (u) {
            out.found = true;
            out.exact = *u;
        }
        return out;
    }
    if (sig.rank() == 2) {
        // q = l1 l2 with zero set two hyperplanes; false iff both are among the avoided sets
        std::vector<Space> null_h;
        for (auto& p : P) {
            if (dim(p) != int(V.size()) - 1) continue;
            if (!la::is_zero_mat(gram_of(p, q))) continue;
            bool dup = false;
            for (auto& o : null_h)
                if (contains(o, p)) dup = true;
            if (!dup) null_h.push_back(p);
        }
        if (null_h.size() >= 2) return out;
    }
    out.found = true;
    // witness: intersect random lines with the null cone
    auto bad_d = [&](const ED& u) {
        double sc = 0;
        for (auto& c : u.coords()) sc = std::max(sc, std::abs(c));
        for (unsigned m : avoid) {
            double s = 0;
            for (auto& c : u.coords(m)) s = std::max(s, std::abs(c));
            if (s < 1e-8 * sc) return true;
        }
        return false;
    };
    std::vector<EQ> pos, neg;
    for (size_t i = 0; i < sig.basis.size(); ++i) {
        if (sgn(sig.diag[i]) > 0) pos.push_back(combine(V, sig.basis[i], n));
        if (sgn(sig.diag[i]) < 0) neg.push_back(combine(V, sig.basis[i], n));
    }
    for (int tries = 0; tries < 200; ++tries) {
        EQ a = rand_comb(V, rng, n, 50);
        Q qa = q(a);
        if (sgn(qa) == 0) {
            if (!bad_q(a)) { out.exact = a; return out; }
            continue;
        }
        const EQ& e = sgn(qa) > 0 ? neg[size_t(tries) % neg.size()] : pos[size_t(tries) % pos.size()];
        Q qe = q(e), b = (q(a + e) - qa - qe) / 2;
        Q disc = b * b - qa * qe;  // > 0
        Q root;
        bool rational = q_sqrt(disc, root);
        for (int sgn_r : {1, -1}) {
            if (rational) {
                Q s = (-b + sgn_r * root) / qe;
                EQ u = a + s * e;
                if (!bad_q(u)) { out.exact = u; return out; }
            } else {
                double s = (-b.get_d() + sgn_r * std::sqrt(disc.get_d())) / qe.get_d();
                ED u = to_double(a) + s * to_double(e);
                if (!bad_d(u)) { out.approx = u; return out; }
            }
        }
    }
    return out;
}

// ---------------- square conditions ----------------

inline std::optional<Witness> square_condition(Context& c, int id) {
    const int n = c.n;
    Witness w;
    w.square = true;
    w.id = id;
    switch (id) {
        case 1: {
            auto u = find_generic(c.W, xy_independent, c.rng, n);
            if (!u) return std::nullopt;
            w.elements = {wel("u", *u)};
            w.curve = "exp(t u)";
            return w;
        }
        case 2: {
            auto z = nonzero_value(c.Z, qz);
            if (!z) return std::nullopt;
            w.elements = {wel("z", *z)};
            w.curve = "exp(t z)";
            return w;
        }
        case 3: {
            for (auto& z : c.Z) {
                auto u = nonzero_value(c.W, [&](const EQ& e) { return cross_l(e, z); });
                if (u) {
                    w.elements = {wel("u", *u), wel("z", z)};
                    w.curve = "exp(t u + t^2 z)";
                    return w;
                }
            }
            return std::nullopt;
        }
        case 4: {
            auto r = quad_zero_avoiding(c.V4, q4, {PHI}, c.rng, n);
            if (!r.found) return std::nullopt;
            w.elements = {r.exact ? wel("u", *r.exact) : wel_approx("u", *r.approx)};
            w.curve = "exp(t u)";
            return w;
        }
        case 5: {
            if (!c.xx_in_h) return std::nullopt;
            auto u = find_generic(restrict_zero(c.H, Y, n), [](const EQ& e) { return phi_nz(e) && !is_zero(e.yy); },
                                  c.rng, n);
            if (!u) return std::nullopt;
            w.elements = {wel("u", *u), wel("z", xx_unit(n))};
            w.curve = "exp(t u + c z), c cancelling Im h(1,n+2)";
            return w;
        }
        case 6: {
            auto u = find_generic(c.H, [](const EQ& e) { return phi_nz(e) && y_nz(e); }, c.rng, n);
            if (!u) return std::nullopt;
            auto v = find_generic(restrict_zero(c.H, PHI | Y | YY, n), x_nz, c.rng, n);
            if (!v) return std::nullopt;
            w.elements = {wel("u", *u), wel("v", *v)};
            w.curve = "exp(t u + r v), Re h(1,n+2) = 0";
            return w;
        }
        case 7: {
            if (!c.xx_in_h) return std::nullopt;
            auto u = find_generic(c.H, [](const EQ& e) { return phi_nz(e) && y_nz(e); }, c.rng, n);
            if (!u) return std::nullopt;
            auto v = find_generic(restrict_zero(c.H, PHI | Y, n), x_nz, c.rng, n);
            if (!v) return std::nullopt;
            w.elements = {wel("u", *u), wel("v", *v), wel("z", xx_unit(n))};
            w.curve = "exp(t u + r v + c z), h(1,n+2) = 0";
            return w;
        }
        case 8: {
            if (c.H.size() != 3 || c.Z.size() != 1 || !c.xx_in_h) return std::nullopt;
            if (dim(restrict_zero(c.H, PHI, n)) != 1) return std::nullopt;  // phi != 0 off Z
            auto u = find_generic(c.H, y_nz, c.rng, n);
            if (!u) return std::nullopt;
            Space V = complement(c.V4, c.Z);
            la::Signature s = la::signature(gram_of(V, q4));
            if (s.pos == 0) return std::nullopt;
            EQ v(n);
            for (size_t i = 0; i < s.basis.size(); ++i)
                if (sgn(s.diag[i]) > 0) {
                    v = combine(V, s.basis[i], n);
                    break;
                }
            w.elements = {wel("u", *u), wel("v", v), wel("z", xx_unit(n))};
            w.curve = "exp(s u + t v + c z), h(1,n+2) = 0";
            return w;
        }
    }
    return std::nullopt;
}

inline std::optional<Witness> check_square(Context& c) {
    for (int id = 1; id <= 8; ++id)
        if (auto w = square_condition(c, id)) return w;
    return std::nullopt;
}

// ---------------- linear conditions ----------------

/// the linear condition with the realness constraint on phi_u conj(eta_z)
inline std::optional<Witness> linear_five(Context& c) {
    const int n = c.n;
    Space Zp = restrict_zero(c.Z, YY, n);
    const int d = int(Zp.size());
    if (d == 0) return std::nullopt;
    if (!find_generic(c.H, [](const EQ& e) { return phi_nz(e) && y_nz(e); }, c.rng, n)) return std::nullopt;
    Witness w;
    w.square = false;
    w.id = 5;
    w.curve = "exp(t u + s z), s minimizing rho/|h|";
    auto im_fn = [](const EQ& z1) {
        return [z1](const EQ& u) { return Q(im(u.phi * conj(z1.eta))); };
    };
    auto solve_with = [&](const EQ& u, const EQ& z1) {
        // E(u, z1) real here
        return re(cross_e(u, z1));
    };
    if (d == 1) {
        const EQ z1 = Zp[0];
        Space P = restrict_kernel(c.H, im_fn(z1), n);
        auto r = quad_zero_avoiding(P, [&](const EQ& u) { return solve_with(u, z1); }, {PHI, Y}, c.rng, n);
        if (!r.found) return std::nullopt;
        w.elements = {r.exact ? wel("u", *r.exact) : wel_approx("u", *r.approx), wel("z", z1)};
        return w;
    }
    // eta not injective on Zp: Zp contains the xx-line
    Space ker_eta = restrict_zero(Zp, ETA, n);
    if (!ker_eta.empty()) {
        const EQ z0 = ker_eta[0];
        auto rest = complement(Zp, ker_eta);
        std::optional<EQ> u;
        EQ z1(n);
        if (rest.size() == 1) {
            z1 = rest[0];
            u = find_generic(restrict_kernel(c.H, im_fn(z1), n), [](const EQ& e) { return phi_nz(e) && y_nz(e); },
                             c.rng, n);
        } else {
            // eta onto C: take eta_z = phi_u
            u = find_generic(c.H, [](const EQ& e) { return phi_nz(e) && y_nz(e); }, c.rng, n);
            if (u) {
                la::Mat sys = {{rest[0].eta.re, rest[1].eta.re, u->phi.re}, {rest[0].eta.im, rest[1].eta.im, u->phi.im}};
                la::rref(sys);
                z1 = sys[0][2] * rest[0] + sys[1][2] * rest[1];
            }
        }
        if (!u) return std::nullopt;
        // E(u, a z0 + z1) = a xx_{z0} |y|^2 + E(u, z1)
        Q a = -solve_with(*u, z1) / Q(z0.xx * hnorm2(u->y));
        w.elements = {wel("u", *u), wel("z", a * z0 + z1)};
        return w;
    }
    // eta bijective Zp -> C: z(u) = eta^{-1}(phi_u) and E(u, z(u)) is an odd cubic
    auto z_of = [&](const EQ& u) {
        // solve eta(c0 Zp0 + c1 Zp1) = phi_u
        la::Mat sys = {{Zp[0].eta.re, Zp[1].eta.re, u.phi.re}, {Zp[0].eta.im, Zp[1].eta.im, u.phi.im}};
        la::rref(sys);
        return sys[0][2] * Zp[0] + sys[1][2] * Zp[1];
    };
    auto f = [&](const EQ& u) { return re(cross_e(u, z_of(u))); };
    auto accept = [&](const EQ& u) {
        w.elements = {wel("u", u), wel("z", z_of(u))};
        return w;
    };
    Space kphi = restrict_zero(c.H, PHI, n), ky = restrict_zero(c.H, Y, n);
    const int codim_phi = int(c.H.size()) - dim(kphi), codim_y = int(c.H.size()) - dim(ky);
    if (codim_phi >= 2 && codim_y >= 2) {
        // {phi != 0, y != 0} connected and f odd: a zero exists; locate one numerically
        auto u0 = find_generic(c.H, [](const EQ& e) { return phi_nz(e) && y_nz(e); }, c.rng, n);
        if (sgn(f(*u0)) == 0) return accept(*u0);
        EQ mid = rand_comb(c.H, c.rng, n, 1 << 10);
        // path u0 -> mid -> -u0, bisect on the leg with a sign change
        auto leg = [&](const EQ& a, const EQ& b) -> std::optional<Witness> {
            Q fa = f(a), fb = f(b);
            if (sgn(fa) == 0) return accept(a);
            if (sgn(fb) == 0) return accept(b);
            if (sgn(fa) == sgn(fb)) return std::nullopt;
            Q lo = 0, hi = 1;
            EQ best = a;
            for (int i = 0; i < 60; ++i) {
                Q m = (lo + hi) / 2;
                EQ p = (1 - m) * a + m * b;
                Q fm = f(p);
                if (sgn(fm) == 0) return accept(p);
                if (sgn(fm) == sgn(fa)) lo = m; else hi = m;
                best = p;
            }
            Witness ww = w;
            ED ud = to_double(best);
            ww.elements = {wel_approx("u", ud), wel_approx("z", to_double(z_of(best)))};
            return ww;
        };
        if (auto r = leg(*u0, mid)) return r;
        if (auto r = leg(mid, -1 * *u0)) return r;
        return std::nullopt;
    }
    // sign components are convex: sample each and look for a sign change or an exact zero
    std::vector<EQ> pts;
    for (int i = 0; i < 400; ++i) {
        EQ u = rand_comb(c.H, c.rng, n, 1 << 10);
        if (!phi_nz(u) || !y_nz(u)) continue;
        if (sgn(f(u)) == 0) return accept(u);
        pts.push_back(u);
    }
    // component label: signs of the real functionals cutting out the rank-1 slot
    auto label = [&](const EQ& u) {
        std::vector<int> l;
        if (codim_phi == 1) l.push_back(sgn(u.phi.re) != 0 ? sgn(u.phi.re) : sgn(u.phi.im));
        if (codim_y == 1)
            for (auto& s : u.y)
                if (!is_zero(s)) { l.push_back(sgn(s.re) != 0 ? sgn(s.re) : sgn(s.im)); break; }
        return l;
    };
    std::map<std::vector<int>, std::vector<EQ>> comps;
    for (auto& p : pts) comps[label(p)].push_back(p);
    for (auto& [lab, ps] : comps)
        for (size_t i = 1; i < ps.size(); ++i)
            if (sgn(f(ps[i])) != sgn(f(ps[0]))) {
                // convex component: bisect the segment
                EQ a = ps[0], b = ps[i];
                Q fa = f(a);
                Q lo = 0, hi = 1;
                EQ best = a;
                for (int it = 0; it < 60; ++it) {
                    Q m = (lo + hi) / 2;
                    EQ p = (1 - m) * a + m * b;
                    Q fm = f(p);
                    if (sgn(fm) == 0) return accept(p);
                    if (sgn(fm) == sgn(fa)) lo = m; else hi = m;
                    best = p;
                }
                w.elements = {wel_approx("u", to_double(best)), wel_approx("z", to_double(z_of(best)))};
                return w;
            }
    return std::nullopt;
}

inline std::optional<Witness> linear_condition(Context& c, int id) {
    const int n = c.n;
    Witness w;
    w.square = false;
    w.id = id;
    switch (id) {
        case 1: {
            auto r = quad_zero_avoiding(c.Z, qz, {NIL}, c.rng, n);
            if (!r.found) return std::nullopt;
            w.elements = {r.exact ? wel("z", *r.exact) : wel_approx("z", *r.approx)};
            w.curve = "exp(t z)";
            return w;
        }
        case 2: {
            const LocusResult& L = c.locus();
            if (!L.has_zero) return std::nullopt;
            w.elements = {L.zero ? wel("u", *L.zero) : wel_approx("u", *L.zero_approx)};
            w.curve = "exp(t u)";
            return w;
        }
        case 3: {
            auto u = nonzero_value(c.V4, q4);
            if (!u) return std::nullopt;
            w.elements = {wel("u", *u)};
            w.curve = "exp(t u)";
            return w;
        }
        case 4: {
            auto u = find_generic(restrict_zero(c.H, Y, n), [](const EQ& e) { return phi_nz(e) && !is_zero(e.yy); },
                                  c.rng, n);
            if (!u) return std::nullopt;
            auto z = find_generic(restrict_zero(c.Z, YY, n), [](const EQ& e) { return !is_zero(e.eta); }, c.rng, n);
            if (!z) return std::nullopt;
            w.elements = {wel("u", *u), wel("z", *z)};
            w.curve = "exp(t u + s z), Re Delta = 0";
            return w;
        }
        case 5: return linear_five(c);
    }
    return std::nullopt;
}

inline std::optional<Witness> check_linear(Context& c) {
    for (int id = 1; id <= 5; ++id)
        if (auto w = linear_condition(c, id)) return w;
    return std::nullopt;
}

inline std::optional<Witness> check_square(const SubQ& h, uint64_t seed = 0) {
    Context c(h, seed);
    return check_square(c);
}
inline std::optional<Witness> check_linear(const SubQ& h, uint64_t seed = 0) {
    Context c(h, seed);
    return check_linear(c);
}

}  // namespace su2n::nil
