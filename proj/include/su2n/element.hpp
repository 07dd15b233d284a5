#pragma once
// Elements of a+n in coordinates (t1, t2, phi, x, y, eta, xx, yy) and dense matrices.
#include "scalar.hpp"

#include <stdexcept>
#include <vector>

namespace su2n {

/// dense row-major matrix
template <class S>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<S> a;
    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, S(0)) {}
    S& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    const S& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }
    Matrix adjoint() const {
        Matrix m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(j, i) = conj((*this)(i, j));
        return m;
    }
    bool is_zero() const {
        for (auto& x : a)
            if (!su2n::is_zero(x)) return false;
        return true;
    }
};

template <class S>
Matrix<S> operator*(const Matrix<S>& x, const Matrix<S>& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    Matrix<S> m(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const S& v = x(i, k);
            if (su2n::is_zero(v)) continue;
            for (int j = 0; j < y.cols; ++j) m(i, j) += v * y(k, j);
        }
    return m;
}
template <class S>
Matrix<S> operator+(Matrix<S> x, const Matrix<S>& y) {
    for (size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
    return x;
}
template <class S>
Matrix<S> operator-(Matrix<S> x, const Matrix<S>& y) {
    for (size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
    return x;
}
template <class S>
Matrix<S> operator*(const S& s, Matrix<S> x) {
    for (auto& v : x.a) v *= s;
    return x;
}
template <class S>
bool operator==(const Matrix<S>& x, const Matrix<S>& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

/// coordinate slots
enum Slot : unsigned {
    T = 1, PHI = 2, X = 4, Y = 8, ETA = 16, XX = 32, YY = 64,
    NIL = PHI | X | Y | ETA | XX | YY,
    ALL = T | NIL
};

/// u in a+n with x, y in C^{n-2}
template <class S>
struct Element {
    using R = real_t<S>;
    int n = 3;
    R t1 = 0, t2 = 0;
    S phi = S(0);
    std::vector<S> x, y;
    S eta = S(0);
    R xx = 0, yy = 0;

    Element() : Element(3) {}
    explicit Element(int n_) : n(n_), x(size_t(n_ - 2), S(0)), y(size_t(n_ - 2), S(0)) {
        if (n_ < 3) throw std::invalid_argument("n must be >= 3");
    }
    int m() const { return n - 2; }

    bool is_nilpotent() const { return is_zero(t1) && is_zero(t2); }

    /// real coordinate vector: t1 t2 phi x y eta xx yy (complex slots as re,im)
    std::vector<R> coords(unsigned mask = ALL) const {
        std::vector<R> v;
        auto cplx = [&](const S& s) { v.push_back(re(s)); v.push_back(im(s)); };
        if (mask & T) { v.push_back(t1); v.push_back(t2); }
        if (mask & PHI) cplx(phi);
        if (mask & X) for (auto& s : x) cplx(s);
        if (mask & Y) for (auto& s : y) cplx(s);
        if (mask & ETA) cplx(eta);
        if (mask & XX) v.push_back(xx);
        if (mask & YY) v.push_back(yy);
        return v;
    }
    static int dim(int n) { return 8 + 4 * (n - 2); }

    static Element from_coords(int n, const std::vector<R>& v) {
        Element e(n);
        size_t k = 0;
        auto cplx = [&]() { S s = scalar_traits<S>::make(v[k], v[k + 1]); k += 2; return s; };
        e.t1 = v[k++]; e.t2 = v[k++];
        e.phi = cplx();
        for (auto& s : e.x) s = cplx();
        for (auto& s : e.y) s = cplx();
        e.eta = cplx();
        e.xx = v[k++]; e.yy = v[k++];
        return e;
    }

    bool is_zero_el() const {
        for (auto& c : coords())
            if (!is_zero(c)) return false;
        return true;
    }

    Element& operator+=(const Element& o) {
        check(o);
        t1 += o.t1; t2 += o.t2; phi += o.phi; eta += o.eta; xx += o.xx; yy += o.yy;
        for (int i = 0; i < m(); ++i) { x[i] += o.x[i]; y[i] += o.y[i]; }
        return *this;
    }
    Element& operator-=(const Element& o) {
        check(o);
        t1 -= o.t1; t2 -= o.t2; phi -= o.phi; eta -= o.eta; xx -= o.xx; yy -= o.yy;
        for (int i = 0; i < m(); ++i) { x[i] -= o.x[i]; y[i] -= o.y[i]; }
        return *this;
    }
    Element& operator*=(const R& c) {
        t1 *= c; t2 *= c; xx *= c; yy *= c;
        S s(c);
        phi *= s; eta *= s;
        for (int i = 0; i < m(); ++i) { x[i] *= s; y[i] *= s; }
        return *this;
    }
    void check(const Element& o) const {
        if (o.n != n) throw std::invalid_argument("mismatched n");
    }
    bool operator==(const Element& o) const { return n == o.n && coords() == o.coords(); }
};

template <class S> Element<S> operator+(Element<S> a, const Element<S>& b) { return a += b; }
template <class S> Element<S> operator-(Element<S> a, const Element<S>& b) { return a -= b; }
template <class S> Element<S> operator*(const real_t<S>& c, Element<S> a) { return a *= c; }

using EQ = Element<GQ>;
using ED = Element<cd>;

/// x y^dagger = sum x_i conj(y_i)
template <class S>
S hdot(const std::vector<S>& a, const std::vector<S>& b) {
    S s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * conj(b[i]);
    return s;
}
template <class S>
real_t<S> hnorm2(const std::vector<S>& a) {
    real_t<S> s = 0;
    for (auto& v : a) s += norm2(v);
    return s;
}

/// (n+2)x(n+2) Lie-algebra matrix
template <class S>
Matrix<S> matrix_of(const Element<S>& u) {
    const int N = u.n + 2, m = u.m();
    const S I = scalar_traits<S>::I();
    Matrix<S> a(N, N);
    a(0, 0) = S(u.t1);
    a(1, 1) = S(u.t2);
    a(N - 2, N - 2) = S(-u.t2);
    a(N - 1, N - 1) = S(-u.t1);
    a(0, 1) = u.phi;
    for (int j = 0; j < m; ++j) {
        a(0, 2 + j) = u.x[j];
        a(1, 2 + j) = u.y[j];
        a(2 + j, N - 2) = -conj(u.y[j]);
        a(2 + j, N - 1) = -conj(u.x[j]);
    }
    a(0, N - 2) = u.eta;
    a(0, N - 1) = I * S(u.xx);
    a(1, N - 2) = I * S(u.yy);
    a(1, N - 1) = -conj(u.eta);
    a(N - 2, N - 1) = -conj(u.phi);
    return a;
}

/// error thrown when a matrix does not have the a+n pattern
struct NotInAN : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// read coordinates back from a Lie-algebra matrix; tol = 0 demands an exact pattern
template <class S>
Element<S> read_element(const Matrix<S>& a, double tol = 0) {
    const int N = a.rows, n = N - 2, m = n - 2;
    Element<S> u(n);
    u.t1 = re(a(0, 0));
    u.t2 = re(a(1, 1));
    u.phi = a(0, 1);
    for (int j = 0; j < m; ++j) {
        u.x[j] = a(0, 2 + j);
        u.y[j] = a(1, 2 + j);
    }
    u.eta = a(0, N - 2);
    u.xx = im(a(0, N - 1));
    u.yy = im(a(1, N - 2));
    Matrix<S> b = matrix_of(u);
    if constexpr (scalar_traits<S>::exact) {
        if (!(b == a)) throw NotInAN("matrix is not in a+n");
    } else {
        double err = 0, scale = 1;
        for (size_t i = 0; i < a.a.size(); ++i) {
            err = std::max(err, std::abs(a.a[i] - b.a[i]));
            scale = std::max(scale, std::abs(a.a[i]));
        }
        if (err > (tol > 0 ? tol : 1e-10) * scale) throw NotInAN("matrix is not in a+n");
    }
    return u;
}

template <class S>
Element<cd> to_double(const Element<S>& u) {
    Element<cd> v(u.n);
    using tr = scalar_traits<S>;
    v.t1 = tr::to_d(u.t1); v.t2 = tr::to_d(u.t2);
    v.phi = tr::to_cd(u.phi); v.eta = tr::to_cd(u.eta);
    v.xx = tr::to_d(u.xx); v.yy = tr::to_d(u.yy);
    for (int i = 0; i < u.m(); ++i) { v.x[i] = tr::to_cd(u.x[i]); v.y[i] = tr::to_cd(u.y[i]); }
    return v;
}

template <class S>
Matrix<cd> to_double(const Matrix<S>& a) {
    Matrix<cd> b(a.rows, a.cols);
    for (size_t i = 0; i < a.a.size(); ++i) b.a[i] = scalar_traits<S>::to_cd(a.a[i]);
    return b;
}

/// exact copy of a double element (every double is a dyadic rational)
inline EQ to_exact(const ED& u) {
    EQ v(u.n);
    auto g = [](cd s) { return GQ(Q(s.real()), Q(s.imag())); };
    v.t1 = Q(u.t1); v.t2 = Q(u.t2); v.xx = Q(u.xx); v.yy = Q(u.yy);
    v.phi = g(u.phi); v.eta = g(u.eta);
    for (int i = 0; i < u.m(); ++i) { v.x[i] = g(u.x[i]); v.y[i] = g(u.y[i]); }
    return v;
}

}  // namespace su2n
