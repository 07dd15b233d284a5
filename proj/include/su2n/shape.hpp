#pragma once
// Shapes of mu(H) up to coarse equivalence, sample clouds and envelope fits.
#include "json_io.hpp"
#include "scalar.hpp"

#include <map>
#include <optional>
#include <sstream>

namespace su2n {

/// a rational exponent, or a named symbolic one
struct Exponent {
    Q value = 1;
    std::string symbol;  // nonempty = symbolic
    Exponent() = default;
    Exponent(const Q& v) : value(v) {}
    Exponent(long p, long q = 1) : value(qq(p, q)) {}
    static Exponent sym(std::string s) {
        Exponent e;
        e.symbol = std::move(s);
        return e;
    }
    bool symbolic() const { return !symbol.empty(); }
    double d() const { return value.get_d(); }
    std::string str() const { return symbolic() ? symbol : q_str(value); }
    bool operator==(const Exponent& o) const {
        return symbolic() == o.symbolic() && (symbolic() ? symbol == o.symbol : value == o.value);
    }
};

enum class ShapeKind { full, curve, band, ray };

/// <f1 -> f2> with f = |h|^s (log |h|)^p
struct MuShape {
    ShapeKind kind = ShapeKind::full;
    Exponent s_lo, s_hi;  // curve: s_lo == s_hi
    Q log_lo = 0, log_hi = 0;
    Exponent k;  // ray
    std::string provenance;

    static MuShape full(std::string prov = "") { MuShape m; m.kind = ShapeKind::full; m.s_lo = 1; m.s_hi = 2; m.provenance = std::move(prov); return m; }
    static MuShape curve(Exponent s, Q logpow = 0, std::string prov = "") {
        MuShape m; m.kind = ShapeKind::curve; m.s_lo = m.s_hi = s; m.log_lo = m.log_hi = logpow; m.provenance = std::move(prov); return m;
    }
    static MuShape band(Exponent lo, Exponent hi, Q llo = 0, Q lhi = 0, std::string prov = "") {
        MuShape m; m.kind = ShapeKind::band; m.s_lo = lo; m.s_hi = hi; m.log_lo = llo; m.log_hi = lhi; m.provenance = std::move(prov); return m;
    }
    static MuShape ray(Exponent k, std::string prov = "") { MuShape m; m.kind = ShapeKind::ray; m.k = k; m.provenance = std::move(prov); return m; }

    bool symbolic() const {
        if (kind == ShapeKind::ray) return true;
        return s_lo.symbolic() || s_hi.symbolic();
    }
    bool has_log() const { return log_lo != 0 || log_hi != 0; }

    /// equality of the shape itself (provenance ignored)
    bool same(const MuShape& o) const {
        if (kind != o.kind) return false;
        switch (kind) {
            case ShapeKind::full: return true;
            case ShapeKind::ray: return k == o.k;
            default: return s_lo == o.s_lo && s_hi == o.s_hi && log_lo == o.log_lo && log_hi == o.log_hi;
        }
    }

    std::string str() const {
        std::ostringstream o;
        auto lg = [](const Q& p) { return p == 0 ? std::string() : " (log)^" + q_str(p); };
        switch (kind) {
            case ShapeKind::full: o << "full chamber"; break;
            case ShapeKind::curve: o << "curve s=" << s_lo.str() << lg(log_lo); break;
            case ShapeKind::band: o << "band [" << s_lo.str() << lg(log_lo) << ", " << s_hi.str() << lg(log_hi) << "]"; break;
            case ShapeKind::ray: o << "ray k=" << k.str(); break;
        }
        return o.str();
    }
};

inline json shape_to_json(const MuShape& m) {
    json j;
    switch (m.kind) {
        case ShapeKind::full: j["kind"] = "full"; break;
        case ShapeKind::curve:
            j["kind"] = "curve";
            j["s"] = m.s_lo.str();
            j["logpow"] = m.log_lo.get_d();
            break;
        case ShapeKind::band:
            j["kind"] = "band";
            j["s_lo"] = m.s_lo.str();
            j["s_hi"] = m.s_hi.str();
            j["log_lo"] = m.log_lo.get_d();
            j["log_hi"] = m.log_hi.get_d();
            break;
        case ShapeKind::ray:
            j["kind"] = "ray";
            j["k"] = m.k.str();
            break;
    }
    if (!m.provenance.empty()) j["provenance"] = m.provenance;
    return j;
}

inline Exponent exponent_from_json(const json& j) {
    if (j.is_number()) return Exponent(Q(j.get<double>()));
    std::string s = j.get<std::string>();
    try {
        return Exponent(parse_q(s));
    } catch (...) {
        return Exponent::sym(s);
    }
}

inline Q logpow_from_json(const json& j, const char* key) {
    if (!j.contains(key)) return 0;
    if (j.at(key).is_string()) return parse_q(j.at(key).get<std::string>());
    return rationalize(j.at(key).get<double>(), 1000);
}

inline MuShape shape_from_json(const json& j) {
    std::string k = j.at("kind").get<std::string>();
    MuShape m;
    if (k == "full") m = MuShape::full();
    else if (k == "curve") m = MuShape::curve(exponent_from_json(j.at("s")), logpow_from_json(j, "logpow"));
    else if (k == "band")
        m = MuShape::band(exponent_from_json(j.at("s_lo")), exponent_from_json(j.at("s_hi")), logpow_from_json(j, "log_lo"),
                          logpow_from_json(j, "log_hi"));
    else if (k == "ray") m = MuShape::ray(exponent_from_json(j.at("k")));
    else throw InputError("unknown shape kind: " + k);
    m.provenance = j.value("provenance", "");
    return m;
}

struct Sample {
    double t = 0;
    double log10_norm = 0;
    double log10_rho = 0;
    int curve_id = 0;
};

struct SampleCloud {
    std::vector<Sample> samples;
    std::string meta;
    void add(double t, double norm, double rho, int curve) {
        if (!(norm > 1.0) || !std::isfinite(norm) || !std::isfinite(rho) || rho <= 0) return;
        samples.push_back({t, std::log10(norm), std::log10(rho), curve});
    }
    void append(const SampleCloud& o) { samples.insert(samples.end(), o.samples.begin(), o.samples.end()); }
    std::string csv() const {
        std::ostringstream o;
        o.precision(12);
        o << "t,log10_norm,log10_rho,curve_id\n";
        for (auto& s : samples) o << s.t << ',' << s.log10_norm << ',' << s.log10_rho << ',' << s.curve_id << '\n';
        return o.str();
    }
};

struct InsufficientRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SymbolicShape : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExponentFit {
    double s_lo = 0, s_hi = 0;
    double confidence = 0;  // rms residual of the two envelope fits
    std::vector<std::pair<double, double>> lo_pts, hi_pts;  // envelope points (log10 norm, log10 rho)
};

namespace detail {
inline std::pair<double, double> linfit(const std::vector<std::pair<double, double>>& p, double* rms = nullptr) {
    double n = double(p.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [x, y] : p) { sx += x; sy += y; sxx += x * x; sxy += x * y; }
    double den = n * sxx - sx * sx;
    double slope = den != 0 ? (n * sxy - sx * sy) / den : 0;
    double icpt = (sy - slope * sx) / n;
    if (rms) {
        double s = 0;
        for (auto& [x, y] : p) s += (y - slope * x - icpt) * (y - slope * x - icpt);
        *rms = std::sqrt(s / n);
    }
    return {slope, icpt};
}
}  // namespace detail

/// slopes of the per-decade max and min envelopes of log rho against log |h|
inline ExponentFit fit_exponents(const SampleCloud& c, double min_log10 = 0.0, double bin = 1.0) {
    std::map<long, std::pair<Sample, Sample>> env;  // bin -> (min, max)
    size_t used = 0;
    double lo = 1e300, hi = -1e300;
    for (auto& s : c.samples) {
        if (s.log10_norm < min_log10) continue;
        ++used;
        lo = std::min(lo, s.log10_norm);
        hi = std::max(hi, s.log10_norm);
        long b = long(std::floor(s.log10_norm / bin));
        auto it = env.find(b);
        if (it == env.end()) env[b] = {s, s};
        else {
            if (s.log10_rho < it->second.first.log10_rho) it->second.first = s;
            if (s.log10_rho > it->second.second.log10_rho) it->second.second = s;
        }
    }
    if (used < 32 || hi - lo < 3.0 || env.size() < 3)
        throw InsufficientRange("fit_exponents: need >= 32 samples over >= 3 decades");
    ExponentFit f;
    for (auto& [b, mm] : env) {
        f.lo_pts.push_back({mm.first.log10_norm, mm.first.log10_rho});
        f.hi_pts.push_back({mm.second.log10_norm, mm.second.log10_rho});
    }
    double r1 = 0, r2 = 0;
    f.s_lo = detail::linfit(f.lo_pts, &r1).first;
    f.s_hi = detail::linfit(f.hi_pts, &r2).first;
    f.confidence = std::max(r1, r2);
    return f;
}

/// coefficient c in log rho - s log|h| = c log log|h| + const over the given points
inline double log_power_fit(const std::vector<std::pair<double, double>>& pts, double s) {
    std::vector<std::pair<double, double>> q;
    for (auto& [x, y] : pts) {
        double lnh = x * std::log(10.0);
        if (lnh <= 1.0) continue;
        q.push_back({std::log10(lnh), y - s * x});
    }
    if (q.size() < 3) throw InsufficientRange("log_power_fit: too few points");
    return detail::linfit(q).first;
}

struct ShapeReport {
    bool pass = false;
    double s_lo_fit = 0, s_hi_fit = 0;
    double log_lo_fit = 0, log_hi_fit = 0;
    std::string detail;
};

struct Tolerances {
    double identity = 1e-10;
    double derived = 1e-8;
    double fit = 0.06;
    double gallery = 0.08;
    double log_power = 0.3;
};
inline const Tolerances& tolerances() {
    static const Tolerances t;
    return t;
}

/// compare fitted envelopes with a numeric shape
inline ShapeReport shape_check(const SampleCloud& c, const MuShape& m, double tol = tolerances().fit,
                               double min_log10 = 0.0) {
    if (m.symbolic()) throw SymbolicShape("shape_check: symbolic shape " + m.str());
    ShapeReport r;
    ExponentFit f = fit_exponents(c, min_log10);
    r.s_lo_fit = f.s_lo;
    r.s_hi_fit = f.s_hi;
    double lo = m.s_lo.d(), hi = m.s_hi.d();
    bool ok = true;
    std::ostringstream o;
    if (m.log_lo != 0 || m.log_hi != 0) {
        // with log factors the slope alone is biased; compare the log coefficient at the nominal exponent
        r.log_lo_fit = log_power_fit(f.lo_pts, lo);
        r.log_hi_fit = log_power_fit(f.hi_pts, hi);
        if (m.log_lo != 0 && std::abs(r.log_lo_fit - m.log_lo.get_d()) > tolerances().log_power) ok = false;
        if (m.log_hi != 0 && std::abs(r.log_hi_fit - m.log_hi.get_d()) > tolerances().log_power) ok = false;
        if (m.log_lo == 0 && std::abs(f.s_lo - lo) > tol) ok = false;
        if (m.log_hi == 0 && std::abs(f.s_hi - hi) > tol) ok = false;
    } else {
        if (std::abs(f.s_lo - lo) > tol || std::abs(f.s_hi - hi) > tol) ok = false;
    }
    o << "fit [" << f.s_lo << ", " << f.s_hi << "] vs " << m.str();
    r.pass = ok;
    r.detail = o.str();
    return r;
}

}  // namespace su2n
