#pragma once
// Curves h(t) in H along which rho(h) ~ |h|^2 (square witnesses) or rho(h) ~ |h| (linear witnesses).
#include "../group.hpp"
#include "../metrics.hpp"
#include "conditions.hpp"

namespace su2n::nil {

struct ImplicitSolveFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline cd corner(const Matrix<cd>& h) { return h(0, h.cols - 1); }

/// a root of f near 0, searching outward in both directions for a sign change
inline double root_near_zero(const std::function<double(double)>& f, double scale, const char* what) {
    double f0 = f(0);
    if (f0 == 0) return 0;
    for (double r = scale * 1e-3; r < scale * 1e9; r *= 1.5)
        for (double s : {r, -r}) {
            double fs = f(s);
            if ((fs > 0) != (f0 > 0)) {
                double lo = 0, hi = s, flo = f0;
                for (int i = 0; i < 200; ++i) {
                    double mid = 0.5 * (lo + hi);
                    double fm = f(mid);
                    if ((fm > 0) == (flo > 0)) { lo = mid; flo = fm; } else hi = mid;
                }
                return 0.5 * (lo + hi);
            }
        }
    throw ImplicitSolveFailed(std::string("no sign change for ") + what);
}

/// adds c z (z the xx unit, central in n) so that Im h(1, n+2) = 0
inline Matrix<cd> kill_imag_corner(const ED& w, int n) {
    Matrix<cd> h = exp_closed(w);
    ED z(n);
    z.xx = -corner(h).imag();
    return exp_closed(w + z);
}

}  // namespace detail

inline Matrix<cd> witness_curve(const Witness& w, double t) {
    if (!(t >= 1)) throw std::invalid_argument("witness_curve: t >= 1 required");
    auto el = [&](const char* nm) { return w.get(nm).d; };
    const int n = w.elements.at(0).d.n;
    if (w.square) {
        switch (w.id) {
            case 1: return exp_closed(t * el("u"));
            case 2: return exp_closed(t * el("z"));
            case 3: return exp_closed(t * el("u") + (t * t) * el("z"));
            case 4: return exp_closed(t * el("u"));
            case 5: return detail::kill_imag_corner(t * el("u"), n);
            case 6: {
                ED u = el("u"), v = el("v");
                double r = detail::root_near_zero(
                    [&](double r) { return detail::corner(exp_closed(t * u + r * v)).real(); }, t * t, "square 6");
                return exp_closed(t * u + r * v);
            }
            case 7: {
                ED u = el("u"), v = el("v");
                double r = detail::root_near_zero(
                    [&](double r) { return detail::corner(exp_closed(t * u + r * v)).real(); }, t * t, "square 7");
                return detail::kill_imag_corner(t * u + r * v, n);
            }
            case 8: {
                ED u = el("u"), v = el("v");
                double s = detail::root_near_zero(
                    [&](double s) { return detail::corner(exp_closed(s * u + t * v)).real(); }, 1.0, "square 8");
                return detail::kill_imag_corner(s * u + t * v, n);
            }
        }
    } else {
        switch (w.id) {
            case 1: return exp_closed(t * el("z"));
            case 2:
            case 3: return exp_closed(t * el("u"));
            case 4: {
                ED u = el("u"), z = el("z");
                double s = detail::root_near_zero(
                    [&](double s) { return delta(exp_closed(t * u + s * z)).real(); }, t * t, "linear 4");
                return exp_closed(t * u + s * z);
            }
            case 5: {
                // s minimizing log rho - log |h| on a log grid, then refined
                ED u = el("u"), z = el("z");
                auto cost = [&](double s) {
                    auto h = exp_closed(t * u + s * z);
                    return std::log(rho_norm(h)) - std::log(sup_norm(h));
                };
                double best = 0, bc = cost(0);
                for (double r = 1e-2; r < t * t * 1e3; r *= 1.25)
                    for (double s : {r, -r})
                        if (double cs = cost(s); cs < bc) { bc = cs; best = s; }
                double step = std::abs(best) * 0.2 + 1e-3;
                for (int i = 0; i < 80; ++i) {
                    for (double s : {best - step, best + step})
                        if (double cs = cost(s); cs < bc) { bc = cs; best = s; }
                    step *= 0.7;
                }
                return exp_closed(t * u + best * z);
            }
        }
    }
    throw std::invalid_argument("witness_curve: unknown condition");
}

}  // namespace su2n::nil
