#pragma once
// Exact linear algebra over Q: row reduction, kernels, spans, LDL^T signature.
#include "scalar.hpp"

#include <algorithm>
#include <vector>

namespace su2n::la {

using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;  // row-major, rows of equal length

inline Vec zeros(size_t n) { return Vec(n, Q(0)); }

inline bool is_zero_vec(const Vec& v) {
    for (auto& a : v)
        if (sgn(a) != 0) return false;
    return true;
}

inline Q dot(const Vec& a, const Vec& b) {
    Q s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// reduced row echelon form in place; returns pivot columns
inline std::vector<size_t> rref(Mat& m) {
    std::vector<size_t> piv;
    if (m.empty()) return piv;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && sgn(m[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Q inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Q f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    m.resize(r);
    return piv;
}

inline size_t rank(Mat m) { return rref(m).size(); }

/// basis of {c : m c = 0}; ncols given so an empty m is allowed
inline Mat kernel(Mat m, size_t ncols) {
    Mat out;
    if (m.empty()) {
        for (size_t i = 0; i < ncols; ++i) {
            Vec e = zeros(ncols);
            e[i] = 1;
            out.push_back(e);
        }
        return out;
    }
    auto piv = rref(m);
    std::vector<bool> is_piv(ncols, false);
    for (auto p : piv) is_piv[p] = true;
    for (size_t f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        Vec v = zeros(ncols);
        v[f] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        out.push_back(v);
    }
    return out;
}

/// rows of m as a basis of their span (echelon form)
inline Mat row_basis(Mat m) {
    rref(m);
    return m;
}

/// coefficients c with sum c_i rows_i = v, if any
inline bool solve_in_span(const Mat& rows, const Vec& v, Vec& coef) {
    size_t k = rows.size();
    if (k == 0) {
        coef.clear();
        return is_zero_vec(v);
    }
    size_t d = v.size();
    // augmented system: columns = rows, last column = v
    Mat a(d, zeros(k + 1));
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < k; ++j) a[i][j] = rows[j][i];
        a[i][k] = v[i];
    }
    auto piv = rref(a);
    if (!piv.empty() && piv.back() == k) return false;
    coef = zeros(k);
    for (size_t r = 0; r < piv.size(); ++r) coef[piv[r]] = a[r][k];
    return true;
}

inline bool in_span(const Mat& rows, const Vec& v) {
    Vec c;
    return solve_in_span(rows, v, c);
}

/// intersection of row spans of a and b (vectors in the same ambient space)
inline Mat intersect(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty()) return {};
    size_t ka = a.size(), kb = b.size(), d = a[0].size();
    Mat sys(d, zeros(ka + kb));
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < ka; ++j) sys[i][j] = a[j][i];
        for (size_t j = 0; j < kb; ++j) sys[i][ka + j] = -b[j][i];
    }
    Mat ker = kernel(sys, ka + kb);
    Mat out;
    for (auto& c : ker) {
        Vec v = zeros(d);
        for (size_t j = 0; j < ka; ++j)
            if (sgn(c[j]) != 0)
                for (size_t i = 0; i < d; ++i) v[i] += c[j] * a[j][i];
        out.push_back(v);
    }
    return row_basis(out);
}

/// signature of a symmetric form and a congruence basis P (columns) with P^T G P diagonal
struct Signature {
    int pos = 0, neg = 0, zero = 0;
    Vec diag;     // diagonal entries d_i
    Mat basis;    // basis[i] is the i-th vector (coefficients), G-orthogonal
    bool definite() const { return zero == 0 && (pos == 0 || neg == 0); }
    bool semidefinite() const { return pos == 0 || neg == 0; }
    bool indefinite() const { return pos > 0 && neg > 0; }
    int rank() const { return pos + neg; }
};

/// LDL^T with symmetric pivoting (2x2 pivots resolved by the i+j trick)
inline Signature signature(Mat g) {
    size_t n = g.size();
    Mat p(n, zeros(n));
    for (size_t i = 0; i < n; ++i) p[i][i] = 1;  // p[i] is the current i-th basis vector
    Signature s;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = n;
        for (size_t i = k; i < n; ++i)
            if (sgn(g[i][i]) != 0) { piv = i; break; }
        if (piv == n) {
            size_t bi = n, bj = n;
            for (size_t i = k; i < n && bi == n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (sgn(g[i][j]) != 0) { bi = i; bj = j; break; }
            if (bi == n) break;  // remaining block vanishes
            // e_bi <- e_bi + e_bj
            for (size_t c = 0; c < n; ++c) g[bi][c] += g[bj][c];
            for (size_t r = 0; r < n; ++r) g[r][bi] += g[r][bj];
            for (size_t c = 0; c < n; ++c) p[bi][c] += p[bj][c];
            piv = bi;
        }
        if (piv != k) {
            std::swap(g[piv], g[k]);
            for (auto& row : g) std::swap(row[piv], row[k]);
            std::swap(p[piv], p[k]);
        }
        Q d = g[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (sgn(g[i][k]) == 0) continue;
            Q f = g[i][k] / d;
            for (size_t c = 0; c < n; ++c) g[i][c] -= f * g[k][c];
            for (size_t r = 0; r < n; ++r) g[r][i] -= f * g[r][k];
            for (size_t c = 0; c < n; ++c) p[i][c] -= f * p[k][c];
        }
    }
    for (size_t i = 0; i < n; ++i) {
        int sg = sgn(g[i][i]);
        if (sg > 0) ++s.pos;
        else if (sg < 0) ++s.neg;
        else ++s.zero;
        s.diag.push_back(g[i][i]);
    }
    s.basis = p;
    return s;
}

inline Q quad_eval(const Mat& g, const Vec& v) {
    Q s = 0;
    for (size_t i = 0; i < g.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        for (size_t j = 0; j < g.size(); ++j) s += v[i] * g[i][j] * v[j];
    }
    return s;
}

inline bool is_zero_mat(const Mat& m) {
    for (auto& r : m)
        if (!is_zero_vec(r)) return false;
    return true;
}

}  // namespace su2n::la
