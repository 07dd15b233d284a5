#pragma once
// The eleven families of subalgebras of n that are not Cartan-decomposition subalgebras.
#include "../shape.hpp"
#include "conditions.hpp"

namespace su2n::nil {

struct NotCdsMatch {
    int type = 0;          // 1..11
    std::string subcase;   // "a"/"b" for type 3
    MuShape shape;
    int dim_h = 0;
    std::optional<GQ> lambda;  // type 3
    std::optional<GQ> phi0;    // type 5
    std::string evidence;
};

inline MuShape band_or_curve(int dim_h, Exponent hi, const std::string& prov) {
    if (dim_h == 1) return MuShape::curve(hi, 0, prov);
    return MuShape::band(Exponent(1), hi, 0, 0, prov);
}

/// q definite on span Z (vacuous when Z = 0)
inline bool anisotropic(const Space& Z, const std::function<Q(const EQ&)>& q) {
    if (Z.empty()) return true;
    return la::signature(gram_of(Z, q)).definite();
}

inline std::optional<NotCdsMatch> match_type(Context& c, int type) {
    const int n = c.n, d = int(c.H.size());
    NotCdsMatch m;
    m.type = type;
    m.dim_h = d;
    const std::string prov = "type " + std::to_string(type);
    switch (type) {
        case 1: {
            if (d != 1 || c.Z.size() != 1) return std::nullopt;
            if (sgn(qz(c.H[0])) != 0) return std::nullopt;
            m.shape = MuShape::curve(1, 0, prov);
            return m;
        }
        case 2: {
            if (!vanishes(c.H, PHI | Y)) return std::nullopt;
            if (vanishes(c.H, YY)) return std::nullopt;
            if (!contains(Space{xx_unit(n)}, c.Z)) return std::nullopt;
            m.shape = band_or_curve(d, Exponent(3, 2), prov);
            return m;
        }
        case 3: {
            if (!c.phi_zero()) return std::nullopt;
            std::optional<GQ> lam;
            for (auto& h : c.H) {
                for (int i = 0; i < h.m() && !lam; ++i)
                    if (!is_zero(h.y[i])) lam = h.x[i] / h.y[i];
                if (lam) break;
            }
            if (!lam) {
                if (!vanishes(c.H, X)) return std::nullopt;
                for (auto& z : c.Z)
                    if (!is_zero(z.yy)) { lam = z.eta / (GQ(0, 1) * GQ(z.yy)); break; }
            }
            if (!lam) return std::nullopt;
            for (auto& h : c.H)
                for (int i = 0; i < h.m(); ++i)
                    if (h.x[i] != *lam * h.y[i]) return std::nullopt;
            for (auto& z : c.Z) {
                if (z.eta != GQ(0, 1) * *lam * GQ(z.yy)) return std::nullopt;
                if (z.xx != Q(norm2(*lam) * z.yy)) return std::nullopt;
            }
            m.lambda = lam;
            bool a = false;
            for (auto& h : c.H)
                if (sgn(ell(h, *lam)) != 0) a = true;
            m.subcase = a ? "a" : "b";
            m.evidence = "lambda = " + q_str(lam->re) + (lam->im != 0 ? " + " + q_str(lam->im) + "i" : "");
            m.shape = a ? band_or_curve(d, Exponent(3, 2), prov + "(a)") : MuShape::curve(1, 0, prov + "(b)");
            return m;
        }
        case 4: {
            if (!vanishes(c.H, Y | YY)) return std::nullopt;
            Space rest = complement(c.H, c.xx_in_h ? Space{xx_unit(n)} : Space{});
            if (!rest.empty() && !la::signature(gram_of(rest, q4)).definite()) return std::nullopt;
            m.shape = MuShape::curve(1, 0, prov);
            return m;
        }
        case 5: {
            if (!c.Z.empty() || !vanishes(c.H, Y) || c.phi_zero()) return std::nullopt;
            std::optional<GQ> p0;
            for (auto& h : c.H)
                if (!is_zero(h.yy)) { p0 = h.phi / GQ(h.yy); break; }
            if (!p0 || is_zero(*p0)) return std::nullopt;
            for (auto& h : c.H)
                if (h.phi != *p0 * GQ(h.yy)) return std::nullopt;
            m.phi0 = p0;
            m.evidence = "phi0 = " + q_str(p0->re) + (p0->im != 0 ? " + " + q_str(p0->im) + "i" : "");
            m.shape = band_or_curve(d, Exponent(4, 3), prov);
            return m;
        }
        case 6: {
            if (!c.phi_zero() || !anisotropic(c.Z, qz)) return std::nullopt;
            if (c.locus().has_dim1) return std::nullopt;
            m.shape = MuShape::curve(2, 0, prov);
            return m;
        }
        case 7: {
            if (!c.phi_zero() || !anisotropic(c.Z, qz)) return std::nullopt;
            const LocusResult& L = c.locus();
            if (!(L.has_dim2 || !c.Z.empty())) return std::nullopt;
            if (!L.has_dim1 || L.has_zero) return std::nullopt;
            m.shape = MuShape::band(Exponent(3, 2), Exponent(2), 0, 0, prov);
            return m;
        }
        case 8: {
            if (d > 3 || !c.Z.empty() || c.phi_zero()) return std::nullopt;
            Space kphi = restrict_zero(c.H, PHI, n), ky = restrict_zero(c.H, Y, n);
            if (dim(kphi) != dim(ky) || !contains(kphi, ky)) return std::nullopt;
            if (!restrict_zero(c.H, PHI | YY, n).empty()) return std::nullopt;
            m.shape = MuShape::curve(Exponent(3, 2), 0, prov);
            return m;
        }
        case 9: {
            if (d != 2 || c.Z.size() != 1 || !c.xx_in_h) return std::nullopt;
            EQ u = complement(c.H, c.Z)[0];
            if (!phi_nz(u) || !y_nz(u)) return std::nullopt;
            m.shape = MuShape::band(Exponent(1), Exponent(3, 2), 0, 0, prov);
            return m;
        }
        case 10: {
            if (d > 2 || !vanishes(c.H, Y | YY)) return std::nullopt;
            if (!restrict_zero(c.H, PHI, n).empty()) return std::nullopt;
            if (!la::is_zero_mat(gram_of(c.H, q4))) return std::nullopt;
            m.shape = MuShape::curve(2, 0, prov);
            return m;
        }
        case 11: {
            if (d != 2 || c.Z.size() != 1) return std::nullopt;
            const EQ z = c.Z[0];
            EQ u = complement(c.H, c.Z)[0];
            if (!phi_nz(u) || !y_nz(u) || !is_zero(z.yy)) return std::nullopt;
            GQ pe = u.phi * conj(z.eta);
            if (is_zero(pe) || !is_zero(pe.im)) return std::nullopt;
            if (is_zero(cross_e(u, z))) return std::nullopt;
            m.shape = MuShape::band(Exponent(5, 4), Exponent(2), 0, 0, prov);
            return m;
        }
    }
    return std::nullopt;
}

inline std::optional<NotCdsMatch> match_notcds(Context& c) {
    if (c.H.empty()) throw std::invalid_argument("trivial subalgebra");
    for (int t = 1; t <= 11; ++t)
        if (auto m = match_type(c, t)) return m;
    return std::nullopt;
}

inline std::optional<NotCdsMatch> match_notcds(const SubQ& h, uint64_t seed = 0) {
    Context c(h, seed);
    return match_notcds(c);
}

}  // namespace su2n::nil
