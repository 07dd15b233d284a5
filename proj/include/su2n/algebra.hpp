#pragma once
// Brackets in a+n: coordinate formula and matrix commutator.
#include "element.hpp"

namespace su2n {

/// [t, u] for t in a acting on the nilpotent slots of u
template <class S>
Element<S> torus_action(const real_t<S>& t1, const real_t<S>& t2, const Element<S>& u) {
    using R = real_t<S>;
    Element<S> r(u.n);
    r.phi = S(R(t1 - t2)) * u.phi;
    for (int j = 0; j < u.m(); ++j) {
        r.x[j] = S(t1) * u.x[j];
        r.y[j] = S(t2) * u.y[j];
    }
    r.eta = S(R(t1 + t2)) * u.eta;
    r.xx = R(2 * t1 * u.xx);
    r.yy = R(2 * t2 * u.yy);
    return r;
}

/// bracket of the nilpotent parts
template <class S>
Element<S> bracket_nil(const Element<S>& u, const Element<S>& v) {
    u.check(v);
    const S I = scalar_traits<S>::I();
    Element<S> r(u.n);
    for (int j = 0; j < u.m(); ++j) r.x[j] = u.phi * v.y[j] - v.phi * u.y[j];
    r.eta = hdot(v.x, u.y) - hdot(u.x, v.y) + I * u.phi * S(v.yy) - I * v.phi * S(u.yy);
    r.yy = real_t<S>(-2 * im(hdot(u.y, v.y)));
    r.xx = real_t<S>(-2 * im(hdot(u.x, v.x) + u.phi * conj(v.eta) - v.phi * conj(u.eta)));
    return r;
}

/// [u, v] for u, v in a+n
template <class S>
Element<S> bracket(const Element<S>& u, const Element<S>& v) {
    Element<S> r = bracket_nil(u, v);
    if (!u.is_nilpotent()) r += torus_action(u.t1, u.t2, v);
    if (!v.is_nilpotent()) r -= torus_action(v.t1, v.t2, u);
    return r;
}

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
    return a * b - b * a;
}

}  // namespace su2n
