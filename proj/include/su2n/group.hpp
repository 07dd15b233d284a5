#pragma once
// Group-level formulas: the form, closed-form exp on n, exp series, Delta.
#include "algebra.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace su2n {

/// Gram matrix of the form <v|w> = v1 w_{n+2} + v2 w_{n+1} + sum v_i w_i + ...
template <class S>
Matrix<S> gram(int n) {
    const int N = n + 2;
    Matrix<S> J(N, N);
    J(0, N - 1) = J(N - 1, 0) = S(1);
    J(1, N - 2) = J(N - 2, 1) = S(1);
    for (int i = 2; i < N - 2; ++i) J(i, i) = S(1);
    return J;
}

template <class S>
S form_value(const std::vector<S>& v, const std::vector<S>& w) {
    if (v.size() != w.size() || v.size() < 5) throw std::invalid_argument("form_value: length mismatch");
    const size_t N = v.size();
    S s = v[0] * conj(w[N - 1]) + v[1] * conj(w[N - 2]) + v[N - 2] * conj(w[1]) + v[N - 1] * conj(w[0]);
    for (size_t i = 2; i < N - 2; ++i) s += v[i] * conj(w[i]);
    return s;
}

/// g^{-1} = J g^dagger J for g in U(2,n)
template <class S>
Matrix<S> group_inverse(const Matrix<S>& g) {
    Matrix<S> J = gram<S>(g.rows - 2);
    return J * g.adjoint() * J;
}

template <class S>
S det(Matrix<S> a) {
    const int n = a.rows;
    S d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        if constexpr (scalar_traits<S>::exact) {
            for (int r = c; r < n; ++r)
                if (!is_zero(a(r, c))) { p = r; break; }
        } else {
            double best = 0;
            for (int r = c; r < n; ++r)
                if (std::abs(a(r, c)) > best) { best = std::abs(a(r, c)); p = r; }
        }
        if (p < 0) return S(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            d = -d;
        }
        d *= a(c, c);
        S inv = S(1) / a(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (is_zero(a(r, c))) continue;
            S f = a(r, c) * inv;
            for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return d;
}

/// Frobenius residual of g^dagger J g - J and |det g - 1|
template <class S>
std::pair<double, double> isometry_residual(const Matrix<S>& g) {
    Matrix<S> J = gram<S>(g.rows - 2);
    Matrix<S> r = g.adjoint() * J * g - J;
    double f = 0;
    for (auto& v : r.a) f += norm2(scalar_traits<S>::to_cd(v));
    return {std::sqrt(f), std::abs(scalar_traits<S>::to_cd(det(g)) - cd(1))};
}

struct NotNilpotent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {
template <class S> S rs(const real_t<S>& r) { return S(r); }
template <class S> S frac(long p, long q) { return S(real_t<S>(p)) / S(real_t<S>(q)); }
}  // namespace detail

/// general closed form
template <class S>
Matrix<S> exp_closed_general(const Element<S>& u) {
    using detail::frac;
    using detail::rs;
    using R = real_t<S>;
    const int N = u.n + 2, m = u.m();
    const S I = scalar_traits<S>::I();
    const S phi = u.phi, eta = u.eta, xx = rs<S>(u.xx), yy = rs<S>(u.yy);
    const S xy = hdot(u.x, u.y);
    const S y2 = rs<S>(hnorm2(u.y)), x2 = rs<S>(hnorm2(u.x)), p2 = rs<S>(norm2(phi));
    Matrix<S> g = Matrix<S>::identity(N);
    g(0, 1) = phi;
    for (int j = 0; j < m; ++j) {
        g(0, 2 + j) = u.x[j] + frac<S>(1, 2) * phi * u.y[j];
        g(1, 2 + j) = u.y[j];
        g(2 + j, N - 2) = -conj(u.y[j]);
        g(2 + j, N - 1) = -conj(u.x[j]) + frac<S>(1, 2) * conj(phi) * conj(u.y[j]);
    }
    g(0, N - 2) = eta - frac<S>(1, 2) * xy + frac<S>(1, 2) * I * phi * yy - frac<S>(1, 6) * phi * y2;
    S re_part = -frac<S>(1, 2) * x2 - rs<S>(R(re(phi * conj(eta)))) + frac<S>(1, 24) * p2 * y2;
    S im_part = xx - frac<S>(1, 6) * p2 * yy + frac<S>(1, 3) * rs<S>(R(im(conj(phi) * xy)));
    g(0, N - 1) = re_part + I * im_part;
    g(1, N - 2) = I * yy - frac<S>(1, 2) * y2;
    g(1, N - 1) = -conj(eta) - frac<S>(1, 2) * conj(xy) - frac<S>(1, 2) * I * conj(phi) * yy +
                  frac<S>(1, 6) * conj(phi) * y2;
    g(N - 2, N - 1) = -conj(phi);
    return g;
}

/// closed form when phi = 0
template <class S>
Matrix<S> exp_closed_phi0(const Element<S>& u) {
    using detail::frac;
    using detail::rs;
    const int N = u.n + 2, m = u.m();
    const S I = scalar_traits<S>::I();
    const S xy = hdot(u.x, u.y);
    Matrix<S> g = Matrix<S>::identity(N);
    for (int j = 0; j < m; ++j) {
        g(0, 2 + j) = u.x[j];
        g(1, 2 + j) = u.y[j];
        g(2 + j, N - 2) = -conj(u.y[j]);
        g(2 + j, N - 1) = -conj(u.x[j]);
    }
    g(0, N - 2) = u.eta - frac<S>(1, 2) * xy;
    g(0, N - 1) = I * rs<S>(u.xx) - frac<S>(1, 2) * rs<S>(hnorm2(u.x));
    g(1, N - 2) = I * rs<S>(u.yy) - frac<S>(1, 2) * rs<S>(hnorm2(u.y));
    g(1, N - 1) = -conj(u.eta) - frac<S>(1, 2) * conj(xy);
    return g;
}

/// closed form when y = 0
template <class S>
Matrix<S> exp_closed_y0(const Element<S>& u) {
    using detail::frac;
    using detail::rs;
    using R = real_t<S>;
    const int N = u.n + 2, m = u.m();
    const S I = scalar_traits<S>::I();
    const S phi = u.phi, yy = rs<S>(u.yy);
    Matrix<S> g = Matrix<S>::identity(N);
    g(0, 1) = phi;
    for (int j = 0; j < m; ++j) {
        g(0, 2 + j) = u.x[j];
        g(2 + j, N - 1) = -conj(u.x[j]);
    }
    g(0, N - 2) = u.eta + frac<S>(1, 2) * I * phi * yy;
    S re_part = -frac<S>(1, 2) * rs<S>(hnorm2(u.x)) - rs<S>(R(re(phi * conj(u.eta))));
    S im_part = rs<S>(u.xx) - frac<S>(1, 6) * rs<S>(norm2(phi)) * yy;
    g(0, N - 1) = re_part + I * im_part;
    g(1, N - 2) = I * yy;
    g(1, N - 1) = -conj(u.eta) - frac<S>(1, 2) * I * conj(phi) * yy;
    g(N - 2, N - 1) = -conj(phi);
    return g;
}

template <class S>
bool y_is_zero(const Element<S>& u) {
    for (auto& v : u.y)
        if (!is_zero(v)) return false;
    return true;
}

/// exp(u) for nilpotent u; dispatches to the specialised displays
template <class S>
Matrix<S> exp_closed(const Element<S>& u) {
    if (!u.is_nilpotent()) throw NotNilpotent("exp_closed: t-part must vanish");
    if (is_zero(u.phi)) return exp_closed_phi0(u);
    if (y_is_zero(u)) return exp_closed_y0(u);
    return exp_closed_general(u);
}

/// sum u^k/k! for nilpotent u; matrix exponential otherwise (floating only)
template <class S>
Matrix<S> exp_series(const Element<S>& u) {
    const int N = u.n + 2;
    Matrix<S> U = matrix_of(u);
    if (u.is_nilpotent()) {
        Matrix<S> g = Matrix<S>::identity(N), p = Matrix<S>::identity(N);
        for (int k = 1; k <= N; ++k) {
            p = S(real_t<S>(1)) / S(real_t<S>(k)) * (p * U);
            if (p.is_zero()) break;
            g = g + p;
        }
        return g;
    }
    if constexpr (scalar_traits<S>::exact) {
        throw std::invalid_argument("exp_series: torus part needs floating mode");
    } else {
        bool diag = true;
        for (int i = 0; i < N && diag; ++i)
            for (int j = 0; j < N; ++j)
                if (i != j && U(i, j) != cd(0)) { diag = false; break; }
        Matrix<S> g(N, N);
        if (diag) {
            for (int i = 0; i < N; ++i) g(i, i) = std::exp(U(i, i));
            return g;
        }
        Eigen::MatrixXcd e(N, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) e(i, j) = U(i, j);
        Eigen::MatrixXcd r = e.exp();
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) g(i, j) = r(i, j);
        return g;
    }
}

/// det of rows 1,2 x columns n+1,n+2
template <class S>
S delta(const Matrix<S>& g) {
    const int N = g.rows;
    return g(0, N - 2) * g(1, N - 1) - g(0, N - 1) * g(1, N - 2);
}

/// fully expanded Delta(exp u) for nilpotent u
template <class S>
S delta_formula(const Element<S>& u) {
    using detail::frac;
    using detail::rs;
    using R = real_t<S>;
    const S I = scalar_traits<S>::I();
    const S xy = hdot(u.x, u.y);
    const S x2 = rs<S>(hnorm2(u.x)), y2 = rs<S>(hnorm2(u.y)), p2 = rs<S>(norm2(u.phi));
    const S e2 = rs<S>(norm2(u.eta)), xx = rs<S>(u.xx), yy = rs<S>(u.yy);
    S rpart = -e2 + xx * yy - frac<S>(1, 4) * x2 * y2 + frac<S>(1, 4) * rs<S>(norm2(xy)) -
              frac<S>(1, 6) * y2 * rs<S>(R(re(u.eta * conj(u.phi)))) -
              frac<S>(1, 6) * yy * rs<S>(R(im(xy * conj(u.phi)))) + frac<S>(1, 12) * yy * yy * p2 -
              frac<S>(1, 144) * y2 * y2 * p2;
    S ipart = frac<S>(1, 24) * yy * p2 * y2 + rs<S>(R(im(xy * conj(u.eta)))) + frac<S>(1, 2) * xx * y2 +
              frac<S>(1, 2) * yy * x2;
    return rpart + I * ipart;
}

/// diagonal group element diag(a1, a2, 1, ..., 1, 1/a2, 1/a1)
template <class S>
Matrix<S> torus_element(int n, const real_t<S>& a1, const real_t<S>& a2) {
    const int N = n + 2;
    Matrix<S> g = Matrix<S>::identity(N);
    g(0, 0) = S(a1);
    g(1, 1) = S(a2);
    g(N - 2, N - 2) = S(real_t<S>(1)) / S(a2);
    g(N - 1, N - 1) = S(real_t<S>(1)) / S(a1);
    return g;
}

}  // namespace su2n
