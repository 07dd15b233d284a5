#pragma once
// Subspaces of a subalgebra (as lists of exact elements), the slot polynomials, quadratic forms.
#include "../random.hpp"
#include "../subalgebra.hpp"

#include <functional>
#include <optional>

namespace su2n::nil {

using Space = std::vector<EQ>;

inline Space span_basis(const Space& s, int n) {
    Space out;
    la::Mat rows;
    for (auto& e : s) {
        auto c = e.coords();
        if (la::is_zero_vec(c)) continue;
        if (!rows.empty() && la::in_span(rows, c)) continue;
        rows.push_back(c);
        out.push_back(e);
    }
    (void)n;
    return out;
}

inline int dim(const Space& s) { return int(la::rank(coord_rows(s))); }

inline bool vanishes(const Space& s, unsigned mask) {
    for (auto& e : s)
        if (!la::is_zero_vec(e.coords(mask))) return false;
    return true;
}

inline bool contains(const Space& big, const EQ& v) {
    auto c = v.coords();
    if (la::is_zero_vec(c)) return true;
    if (big.empty()) return false;
    return la::in_span(coord_rows(big), c);
}

inline bool contains(const Space& big, const Space& small) {
    for (auto& e : small)
        if (!contains(big, e)) return false;
    return true;
}

inline Space intersect(const Space& a, const Space& b, int n) {
    auto rows = la::intersect(coord_rows(a), coord_rows(b));
    Space out;
    for (auto& r : rows) out.push_back(EQ::from_coords(n, r));
    return out;
}

/// {u in span s : f(u) = 0} for a real-linear functional f
inline Space restrict_kernel(const Space& s, const std::function<Q(const EQ&)>& f, int n) {
    if (s.empty()) return {};
    la::Mat sys(1, la::zeros(s.size()));
    for (size_t j = 0; j < s.size(); ++j) sys[0][j] = f(s[j]);
    auto ker = la::kernel(sys, s.size());
    Space out;
    for (auto& c : ker) out.push_back(combine(s, c, n));
    return out;
}

/// an element of a not in span b (a, b with b inside a), if any
inline std::optional<EQ> outside(const Space& a, const Space& b) {
    for (auto& e : a)
        if (!contains(b, e)) return e;
    return std::nullopt;
}

/// basis of a complement of b inside a
inline Space complement(const Space& a, const Space& b) {
    Space cur = span_basis(b, 0), out;
    la::Mat rows = coord_rows(cur);
    for (auto& e : a) {
        auto c = e.coords();
        if (!rows.empty() && la::in_span(rows, c)) continue;
        if (la::is_zero_vec(c)) continue;
        rows.push_back(c);
        out.push_back(e);
    }
    return out;
}

/// random integer combination of a basis
inline EQ rand_comb(const Space& s, Rng& rng, int n, long range = 1L << 20) {
    std::uniform_int_distribution<long> d(-range, range);
    EQ r(n);
    for (auto& e : s) r += Q(d(rng)) * e;
    return r;
}

/// Schwartz-Zippel search for a point of span s where pred holds (pred open and polynomial)
inline std::optional<EQ> find_generic(const Space& s, const std::function<bool(const EQ&)>& pred, Rng& rng, int n,
                                      int rounds = 80) {
    if (s.empty()) return std::nullopt;
    for (auto& e : s)
        if (pred(e)) return e;
    for (int r = 0; r < rounds; ++r) {
        EQ u = rand_comb(s, rng, n);
        if (pred(u)) return u;
    }
    return std::nullopt;
}

// ---- slot polynomials ----

inline bool x_zero(const EQ& u) { for (auto& s : u.x) if (!is_zero(s)) return false; return true; }
inline bool y_zero(const EQ& u) { for (auto& s : u.y) if (!is_zero(s)) return false; return true; }

/// x and y linearly independent over C
inline bool xy_independent(const EQ& u) {
    for (int i = 0; i < u.m(); ++i)
        for (int j = i + 1; j < u.m(); ++j)
            if (!is_zero(u.x[i] * u.y[j] - u.x[j] * u.y[i])) return true;
    return false;
}

/// dim_C <x, y>
inline int xy_rank(const EQ& u) {
    if (x_zero(u) && y_zero(u)) return 0;
    return xy_independent(u) ? 2 : 1;
}

/// |eta|^2 - xx yy
inline Q qz(const EQ& z) { return Q(norm2(z.eta) - z.xx * z.yy); }
/// |x|^2 + 2 Re(phi conj eta)
inline Q q4(const EQ& u) { return Q(hnorm2(u.x) + 2 * re(u.phi * conj(u.eta))); }
/// xx |y|^2 + yy |x|^2 + 2 Im(x y^dagger conj eta)
inline Q cubic_c(const EQ& u) {
    return Q(u.xx * hnorm2(u.y) + u.yy * hnorm2(u.x) + 2 * im(hdot(u.x, u.y) * conj(u.eta)));
}
/// the same expression with the central slots taken from z
inline Q cross_l(const EQ& u, const EQ& z) {
    return Q(z.xx * hnorm2(u.y) + z.yy * hnorm2(u.x) + 2 * im(hdot(u.x, u.y) * conj(z.eta)));
}
/// xx_z |y_u|^2 - phi_u yy_u conj(eta_z) + 2 Im(conj(eta_z) x_u y_u^dagger)
inline GQ cross_e(const EQ& u, const EQ& z) {
    return GQ(Q(z.xx * hnorm2(u.y))) - u.phi * GQ(u.yy) * conj(z.eta) +
           GQ(Q(2 * im(conj(z.eta) * hdot(u.x, u.y))));
}
/// xx + |lambda|^2 yy + 2 Im(lambda conj eta)
inline Q ell(const EQ& u, const GQ& lam) {
    return Q(u.xx + norm2(lam) * u.yy + 2 * im(lam * conj(u.eta)));
}

/// Gram matrix of a quadratic form on span s, by polarization
inline la::Mat gram_of(const Space& s, const std::function<Q(const EQ&)>& q) {
    size_t k = s.size();
    la::Mat g(k, la::zeros(k));
    std::vector<Q> d(k);
    for (size_t i = 0; i < k; ++i) d[i] = q(s[i]);
    for (size_t i = 0; i < k; ++i) {
        g[i][i] = d[i];
        for (size_t j = i + 1; j < k; ++j) {
            Q v = (q(s[i] + s[j]) - d[i] - d[j]) / 2;
            g[i][j] = g[j][i] = v;
        }
    }
    return g;
}

/// radical of a form on span s
inline Space radical(const Space& s, const la::Mat& g, int n) {
    auto ker = la::kernel(g, s.size());
    Space out;
    for (auto& c : ker) out.push_back(combine(s, c, n));
    return out;
}

/// a nonzero element of span s with q != 0, if q is not identically zero
inline std::optional<EQ> nonzero_value(const Space& s, const std::function<Q(const EQ&)>& q) {
    for (auto& e : s)
        if (sgn(q(e)) != 0) return e;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (sgn(q(s[i] + s[j])) != 0) return s[i] + s[j];
    return std::nullopt;
}

}  // namespace su2n::nil
