#pragma once
// Elements of W = h ∩ {phi = 0} with dim_C <x, y> = 1, and zeros of the cubic C on that locus.
#include "space.hpp"

#include <Eigen/Dense>

namespace su2n::nil {

/// damped Gauss-Newton on a residual map, forward-difference Jacobian
template <class F>
double levenberg_marquardt(F&& resid, Eigen::VectorXd& v, int iters = 200) {
    Eigen::VectorXd r = resid(v);
    double cost = r.squaredNorm(), lam = 1e-3;
    const int p = int(v.size());
    for (int it = 0; it < iters && cost > 1e-30; ++it) {
        Eigen::MatrixXd J(r.size(), p);
        for (int j = 0; j < p; ++j) {
            double h = 1e-7 * std::max(1.0, std::abs(v(j)));
            Eigen::VectorXd w = v;
            w(j) += h;
            J.col(j) = (resid(w) - r) / h;
        }
        Eigen::MatrixXd A = J.transpose() * J;
        Eigen::VectorXd g = J.transpose() * r;
        bool improved = false;
        for (int k = 0; k < 12; ++k) {
            Eigen::MatrixXd M = A;
            M.diagonal().array() += lam * (1.0 + A.diagonal().array());
            Eigen::VectorXd d = M.ldlt().solve(-g);
            Eigen::VectorXd w = v + d;
            Eigen::VectorXd rw = resid(w);
            double cw = rw.squaredNorm();
            if (std::isfinite(cw) && cw < cost) {
                v = w; r = rw; cost = cw;
                lam = std::max(lam / 4, 1e-12);
                improved = true;
                break;
            }
            lam *= 8;
        }
        if (!improved) break;
    }
    return std::sqrt(cost);
}

struct LocusResult {
    bool has_dim2 = false;
    bool has_dim1 = false;
    bool has_zero = false;       // some dim-1 element with C = 0
    bool zero_exact = true;      // has_zero established by an exact computation
    std::optional<EQ> dim1;      // exact dim-1 element
    std::optional<EQ> zero;      // exact zero of C on the locus
    std::optional<ED> zero_approx;
    std::string method;
};

namespace detail {

/// points of V with x = lam y (or y = mu x when swap), where C = |y|^2 ell
struct LineFamily {
    GQ lam;
    bool swap = false;
};

inline Space family_space(const Space& W, const LineFamily& f, int n) {
    // x - lam y = 0 (or y - lam x = 0), 2m real constraints
    const int m = n - 2;
    la::Mat sys;
    for (int i = 0; i < m; ++i)
        for (int part = 0; part < 2; ++part) {
            la::Vec row;
            for (auto& w : W) {
                GQ a = f.swap ? w.y[i] - f.lam * w.x[i] : w.x[i] - f.lam * w.y[i];
                row.push_back(part == 0 ? a.re : a.im);
            }
            sys.push_back(row);
        }
    auto ker = la::kernel(sys, W.size());
    Space out;
    for (auto& c : ker) out.push_back(combine(W, c, n));
    return out;
}

inline Q family_ell(const EQ& u, const LineFamily& f) {
    if (!f.swap) return ell(u, f.lam);
    // y = mu x: C = |x|^2 (|mu|^2 xx + yy - 2 Im(mu eta))
    return Q(norm2(f.lam) * u.xx + u.yy - 2 * im(f.lam * u.eta));
}

/// exact analysis of one family: does it contain dim-1 elements / zeros of C
inline void analyse_family(const Space& W, const Space& Z, const LineFamily& f, int n, LocusResult& r) {
    Space V = family_space(W, f, n);
    if (dim(V) <= dim(Z)) return;
    if (!r.dim1) r.dim1 = outside(V, Z);
    r.has_dim1 = true;
    auto ellf = [&](const EQ& u) { return family_ell(u, f); };
    Space K = restrict_kernel(V, ellf, n), KZ = restrict_kernel(Z, ellf, n);
    if (dim(K) > dim(KZ)) {
        r.has_zero = true;
        r.zero_exact = true;
        if (!r.zero) r.zero = outside(K, Z);
    }
}

}  // namespace detail

/// decide the dim-1 locus questions for W (phi = 0 part) with center part Z
inline LocusResult locus_analysis(const Space& W0, const Space& Z0, Rng& rng, int n) {
    LocusResult r;
    const Space W = span_basis(W0, n), Z = span_basis(Z0, n);
    const Space Wp = complement(W, Z);
    const int k = int(Wp.size());
    if (k == 0) {
        r.method = "empty";
        return r;
    }
    r.has_dim2 = find_generic(W, xy_independent, rng, n).has_value();
    if (!r.has_dim2) {
        r.method = "no-dim2";
        r.has_dim1 = true;
        r.dim1 = Wp[0];
        for (auto& z : Z) {
            auto w = find_generic(Wp, [&](const EQ& u) { return sgn(cross_l(u, z)) != 0; }, rng, n);
            if (w) {
                Q s = -cubic_c(*w) / cross_l(*w, z);
                r.has_zero = true;
                r.zero = *w + s * z;
                return r;
            }
        }
        for (auto& w : Wp)
            if (sgn(cubic_c(w)) == 0) {
                r.has_zero = true;
                r.zero = w;
                return r;
            }
        if (k >= 2) {
            // C is odd on the connected sphere of span(Wp): a sign change exists on any great circle
            r.has_zero = true;
            ED a = to_double(Wp[0]), b = to_double(Wp[1]);
            auto f = [&](double th) {
                ED u = std::cos(th) * a + std::sin(th) * b;
                return u.xx * hnorm2(u.y) + u.yy * hnorm2(u.x) +
                       2 * std::imag(hdot(u.x, u.y) * std::conj(u.eta));
            };
            double lo = 0, hi = M_PI, flo = f(lo);
            for (int i = 0; i < 200; ++i) {
                double mid = 0.5 * (lo + hi);
                double fm = f(mid);
                if ((fm > 0) == (flo > 0)) { lo = mid; flo = fm; } else hi = mid;
            }
            r.zero_approx = std::cos(lo) * a + std::sin(lo) * b;
        }
        return r;
    }

    // exact checks on the families y = 0 and x = 0
    detail::analyse_family(W, Z, {GQ(0), true}, n, r);   // y = 0
    detail::analyse_family(W, Z, {GQ(0), false}, n, r);  // x = 0
    if (r.has_zero) {
        r.method = "axis";
        return r;
    }
    const int m = n - 2;
    std::vector<ED> Wd, Zd;
    for (auto& w : Wp) Wd.push_back(to_double(w));
    for (auto& z : Z) Zd.push_back(to_double(z));
    auto build = [&](const Eigen::VectorXd& v, bool with_z) {
        ED u(n);
        for (int a = 0; a < k; ++a) u += v(a) * Wd[a];
        if (with_z)
            for (size_t b = 0; b < Zd.size(); ++b) u += v(k + int(b)) * Zd[b];
        return u;
    };
    auto minors = [&](const ED& u, std::vector<double>& out) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                cd d = u.x[i] * u.y[j] - u.x[j] * u.y[i];
                out.push_back(d.real());
                out.push_back(d.imag());
            }
    };
    auto to_vec = [](const std::vector<double>& o) {
        Eigen::VectorXd e(o.size());
        for (size_t i = 0; i < o.size(); ++i) e(Eigen::Index(i)) = o[i];
        return e;
    };
    auto sphere = [&](const Eigen::VectorXd& v) { return v.head(k).squaredNorm() - 1.0; };
    auto res_dim1 = [&](const Eigen::VectorXd& v) {
        std::vector<double> o;
        minors(build(v, false), o);
        o.push_back(sphere(v));
        return to_vec(o);
    };
    auto cubic_d = [](const ED& u) {
        return u.xx * hnorm2(u.y) + u.yy * hnorm2(u.x) +
               2 * std::imag(hdot(u.x, u.y) * std::conj(u.eta));
    };
    auto res_zero = [&](const Eigen::VectorXd& v) {
        std::vector<double> o;
        ED u = build(v, true);
        minors(u, o);
        o.push_back(sphere(v));
        o.push_back(cubic_d(u));
        return to_vec(o);
    };
    auto family_of = [&](const ED& u) -> std::optional<detail::LineFamily> {
        double nx = std::sqrt(hnorm2(u.x)), ny = std::sqrt(hnorm2(u.y));
        detail::LineFamily f;
        cd l;
        if (ny >= nx) l = hdot(u.x, u.y) / (ny * ny);
        else { l = hdot(u.y, u.x) / (nx * nx); f.swap = true; }
        Q a = rationalize(l.real(), 1000), b = rationalize(l.imag(), 1000);
        if (std::abs(a.get_d() - l.real()) > 1e-7 || std::abs(b.get_d() - l.imag()) > 1e-7) return std::nullopt;
        f.lam = GQ(a, b);
        return f;
    };
    std::normal_distribution<double> g(0.0, 1.0);
    const int starts = 60 + 20 * k;
    r.method = "numeric";
    for (int s = 0; s < starts && !r.has_zero; ++s) {
        // zero search on the locus, shifting by the center part
        Eigen::VectorXd v(k + int(Zd.size()));
        for (int i = 0; i < v.size(); ++i) v(i) = g(rng);
        v.head(k).normalize();
        bool seek_zero = (s % 2 == 0);
        double res = seek_zero ? levenberg_marquardt(res_zero, v) : levenberg_marquardt(res_dim1, v);
        if (res > 1e-9) continue;
        ED u = build(v, seek_zero);
        r.has_dim1 = true;
        if (auto f = family_of(u)) {
            detail::analyse_family(W, Z, *f, n, r);
            if (r.has_zero) break;
        }
        if (seek_zero) {
            r.has_zero = true;
            r.zero_exact = false;
            r.zero_approx = u;
        }
    }
    return r;
}

}  // namespace su2n::nil
