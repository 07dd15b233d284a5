#pragma once
// Scalars: exact Gaussian rationals (GMP) or std::complex<double>.
#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace su2n {

using Q = mpq_class;
using cd = std::complex<double>;

/// a + b i with a, b rational
struct GQ {
    Q re, im;
    GQ() : re(0), im(0) {}
    GQ(const Q& r) : re(r), im(0) {}
    GQ(const Q& r, const Q& i) : re(r), im(i) {}
    GQ(long r) : re(r), im(0) {}
    GQ(int r) : re(r), im(0) {}

    GQ& operator+=(const GQ& o) { re += o.re; im += o.im; return *this; }
    GQ& operator-=(const GQ& o) { re -= o.re; im -= o.im; return *this; }
    GQ& operator*=(const GQ& o) {
        Q r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    GQ& operator/=(const GQ& o) {
        Q d = o.re * o.re + o.im * o.im;
        if (d == 0) throw std::domain_error("GQ: division by zero");
        Q r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = r;
        return *this;
    }
};

inline GQ operator+(GQ a, const GQ& b) { return a += b; }
inline GQ operator-(GQ a, const GQ& b) { return a -= b; }
inline GQ operator*(GQ a, const GQ& b) { return a *= b; }
inline GQ operator/(GQ a, const GQ& b) { return a /= b; }
inline GQ operator-(const GQ& a) { return GQ(-a.re, -a.im); }
inline bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

inline GQ conj(const GQ& a) { return GQ(a.re, -a.im); }
inline Q re(const GQ& a) { return a.re; }
inline Q im(const GQ& a) { return a.im; }
inline Q norm2(const GQ& a) { return a.re * a.re + a.im * a.im; }
inline bool is_zero(const GQ& a) { return sgn(a.re) == 0 && sgn(a.im) == 0; }

inline cd conj(const cd& a) { return std::conj(a); }
inline double re(const cd& a) { return a.real(); }
inline double im(const cd& a) { return a.imag(); }
inline double norm2(const cd& a) { return std::norm(a); }
inline bool is_zero(const cd& a) { return a == cd(0.0, 0.0); }

inline bool is_zero(const Q& a) { return sgn(a) == 0; }
inline bool is_zero(double a) { return a == 0.0; }

template <class S> struct scalar_traits;

template <> struct scalar_traits<GQ> {
    using real = Q;
    static constexpr bool exact = true;
    static GQ make(const Q& r, const Q& i) { return GQ(r, i); }
    static GQ I() { return GQ(Q(0), Q(1)); }
    static cd to_cd(const GQ& a) { return cd(a.re.get_d(), a.im.get_d()); }
    static double to_d(const Q& a) { return a.get_d(); }
};

template <> struct scalar_traits<cd> {
    using real = double;
    static constexpr bool exact = false;
    static cd make(double r, double i) { return cd(r, i); }
    static cd I() { return cd(0.0, 1.0); }
    static cd to_cd(const cd& a) { return a; }
    static double to_d(double a) { return a; }
};

template <class S> using real_t = typename scalar_traits<S>::real;

/// rational from an int pair
inline Q qq(long p, long q = 1) {
    Q r{mpz_class(p), mpz_class(q)};
    r.canonicalize();
    return r;
}

/// parse "p/q", "p" or a decimal literal into an exact rational
inline Q parse_q(const std::string& s) {
    auto dot = s.find_first_of(".eE");
    if (dot != std::string::npos) return Q(std::stod(s));
    Q r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string q_str(const Q& a) { return a.get_str(); }

/// rational sqrt when a is a perfect square of a rational
inline bool q_sqrt(const Q& a, Q& out) {
    if (sgn(a) < 0) return false;
    mpz_class n = a.get_num(), d = a.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    out = Q(rn, rd);
    out.canonicalize();
    return true;
}

/// best rational approximation with bounded denominator (continued fractions)
inline Q rationalize(double v, long maxden = 100000) {
    if (!std::isfinite(v)) throw std::domain_error("rationalize: non-finite");
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double x = v;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(x);
        if (std::abs(a) > 1e15) break;
        long ai = (long)a;
        long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > maxden) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = x - a;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
    }
    if (q1 == 0) return Q(v);
    return qq(p1, q1);
}

}  // namespace su2n
