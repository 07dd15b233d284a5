#pragma once
// Root labels, root-space projections, Weyl reflections and the adjoint action.
#include "group.hpp"

#include <array>
#include <string>

namespace su2n {

enum class Root { alpha, beta, alpha_beta, two_beta, alpha_2beta, two_alpha_2beta };

inline constexpr std::array<Root, 6> all_roots = {Root::alpha, Root::beta, Root::alpha_beta,
                                                  Root::two_beta, Root::alpha_2beta, Root::two_alpha_2beta};

/// functional c1 t1 + c2 t2 on a
inline std::pair<int, int> root_functional(Root r) {
    switch (r) {
        case Root::alpha: return {1, -1};
        case Root::beta: return {0, 1};
        case Root::alpha_beta: return {1, 0};
        case Root::two_beta: return {0, 2};
        case Root::alpha_2beta: return {1, 1};
        case Root::two_alpha_2beta: return {2, 0};
    }
    return {0, 0};
}

inline Slot root_slot(Root r) {
    switch (r) {
        case Root::alpha: return PHI;
        case Root::beta: return Y;
        case Root::alpha_beta: return X;
        case Root::two_beta: return YY;
        case Root::alpha_2beta: return ETA;
        case Root::two_alpha_2beta: return XX;
    }
    return PHI;
}

inline std::string root_name(Root r) {
    switch (r) {
        case Root::alpha: return "alpha";
        case Root::beta: return "beta";
        case Root::alpha_beta: return "alpha+beta";
        case Root::two_beta: return "2beta";
        case Root::alpha_2beta: return "alpha+2beta";
        case Root::two_alpha_2beta: return "2alpha+2beta";
    }
    return "";
}

inline Root parse_root(const std::string& s) {
    for (auto r : all_roots)
        if (root_name(r) == s) return r;
    throw std::invalid_argument("unknown root: " + s);
}

/// keep only the slots selected by mask (t-part dropped unless T is in mask)
template <class S>
Element<S> mask_slots(const Element<S>& u, unsigned mask) {
    Element<S> r(u.n);
    if (mask & T) { r.t1 = u.t1; r.t2 = u.t2; }
    if (mask & PHI) r.phi = u.phi;
    if (mask & X) r.x = u.x;
    if (mask & Y) r.y = u.y;
    if (mask & ETA) r.eta = u.eta;
    if (mask & XX) r.xx = u.xx;
    if (mask & YY) r.yy = u.yy;
    return r;
}

template <class S>
Element<S> root_project(const Element<S>& u, Root r) {
    return mask_slots(u, root_slot(r));
}

/// Ad(g) u = g u g^{-1}, read back into coordinates (throws NotInAN)
template <class S>
Element<S> conjugate(const Matrix<S>& g, const Element<S>& u, double tol = 0) {
    return read_element(g * matrix_of(u) * group_inverse(g), tol);
}

/// Ad(g) with an explicit inverse, for g outside U(2,n)
template <class S>
Element<S> conjugate_with(const Matrix<S>& g, const Matrix<S>& ginv, const Element<S>& u, double tol = 0) {
    return read_element(g * matrix_of(u) * ginv, tol);
}

/// Ad(diag(a1, a2, ...)) scales each root slot by a1^c1 a2^c2
template <class S>
Element<S> torus_conjugate(const Element<S>& u, const real_t<S>& a1, const real_t<S>& a2) {
    using R = real_t<S>;
    auto pw = [&](int c1, int c2) {
        R v = 1;
        for (int i = 0; i < std::abs(c1); ++i) v = c1 > 0 ? R(v * a1) : R(v / a1);
        for (int i = 0; i < std::abs(c2); ++i) v = c2 > 0 ? R(v * a2) : R(v / a2);
        return v;
    };
    Element<S> r = u;
    r.phi *= S(pw(1, -1));
    for (auto& s : r.x) s *= S(pw(1, 0));
    for (auto& s : r.y) s *= S(pw(0, 1));
    r.eta *= S(pw(1, 1));
    r.xx = R(r.xx * pw(2, 0));
    r.yy = R(r.yy * pw(0, 2));
    return r;
}

/// monomial Weyl representatives in SU(2,n):
/// w_alpha permutes e1<->e2 and e_{n+1}<->e_{n+2};
/// w_beta sends e2 -> i e_{n+1} and e_{n+1} -> i e2.
template <class S>
Matrix<S> weyl_matrix(int n, Root r) {
    const int N = n + 2;
    Matrix<S> w = Matrix<S>::identity(N);
    if (r == Root::alpha) {
        w(0, 0) = w(1, 1) = w(N - 2, N - 2) = w(N - 1, N - 1) = S(0);
        w(1, 0) = w(0, 1) = S(1);
        w(N - 1, N - 2) = w(N - 2, N - 1) = S(1);
    } else if (r == Root::beta) {
        w(1, 1) = w(N - 2, N - 2) = S(0);
        w(N - 2, 1) = scalar_traits<S>::I();
        w(1, N - 2) = scalar_traits<S>::I();
    } else {
        throw std::invalid_argument("weyl_reflect: only alpha and beta");
    }
    return w;
}

/// image of a root under the reflection s_r, as (sign, root); sign -1 means a negative root
inline std::pair<int, Root> reflect_root(Root s, Root r) {
    auto [a, b] = root_functional(r);
    // reflections on functionals (c1,c2): s_alpha swaps t1,t2; s_beta negates t2
    int c1 = a, c2 = b;
    if (s == Root::alpha) std::swap(c1, c2);
    else c2 = -c2;
    int sign = (c1 > 0 || (c1 == 0 && c2 > 0)) ? 1 : -1;
    std::pair<int, int> pos = {sign * c1, sign * c2};
    for (auto q : all_roots)
        if (root_functional(q) == pos) return {sign, q};
    throw std::logic_error("reflect_root");
}

/// Ad(w_r) u; throws NotInAN when the image leaves a+n
template <class S>
Element<S> weyl_reflect(const Element<S>& u, Root r) {
    return conjugate(weyl_matrix<S>(u.n, r), u);
}

}  // namespace su2n
