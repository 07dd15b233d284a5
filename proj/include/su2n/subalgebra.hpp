#pragma once
// Basis-presented real subalgebras of a+n with the central part z.
#include "linalg.hpp"
#include "roots.hpp"

#include <Eigen/Dense>
#include <string>

namespace su2n {

enum class Mode { exact, floating };

struct SubalgebraError : std::runtime_error {
    std::string code;
    int i = -1, j = -1;
    SubalgebraError(std::string c, const std::string& msg, int i_ = -1, int j_ = -1)
        : std::runtime_error(msg), code(std::move(c)), i(i_), j(j_) {}
};

/// real coordinates of a list of elements as rows
template <class S>
std::vector<std::vector<real_t<S>>> coord_rows(const std::vector<Element<S>>& b, unsigned mask = ALL) {
    std::vector<std::vector<real_t<S>>> m;
    for (auto& e : b) m.push_back(e.coords(mask));
    return m;
}

/// sum c_i b_i
template <class S>
Element<S> combine(const std::vector<Element<S>>& b, const std::vector<real_t<S>>& c, int n) {
    Element<S> r(n);
    for (size_t i = 0; i < b.size(); ++i)
        if (!is_zero(c[i])) r += c[i] * b[i];
    return r;
}

namespace detail {
inline Eigen::MatrixXd to_eigen(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return Eigen::MatrixXd(0, 0);
    Eigen::MatrixXd m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[0].size(); ++j) m(i, j) = rows[i][j];
    return m;
}
}  // namespace detail

template <class S>
struct Subalgebra {
    using R = real_t<S>;
    int n = 3;
    Mode mode = scalar_traits<S>::exact ? Mode::exact : Mode::floating;
    std::vector<Element<S>> basis;
    std::vector<Element<S>> z_part;                  // basis of z
    std::vector<std::vector<std::vector<R>>> structure;  // [b_i,b_j] = sum_k c^{ij}_k b_k

    int dim() const { return int(basis.size()); }
    bool in_n() const {
        for (auto& b : basis)
            if (!b.is_nilpotent()) return false;
        return true;
    }
};

using SubQ = Subalgebra<GQ>;
using SubD = Subalgebra<cd>;

/// kernel of the slot map restricted to span(b): basis of {u in span b : slots(mask) of u vanish}
inline std::vector<EQ> restrict_zero(const std::vector<EQ>& b, unsigned mask, int n) {
    if (b.empty()) return {};
    auto rows = coord_rows(b, mask);  // k x d
    size_t k = b.size(), d = rows[0].size();
    la::Mat sys(d, la::zeros(k));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < k; ++j) sys[i][j] = rows[j][i];
    auto ker = la::kernel(sys, k);
    std::vector<EQ> out;
    for (auto& c : ker) out.push_back(combine(b, c, n));
    return out;
}

template <class S>
Subalgebra<S> subalgebra_new(const std::vector<Element<S>>& basis) {
    using R = real_t<S>;
    if (basis.empty()) throw SubalgebraError("Empty", "basis is empty");
    Subalgebra<S> h;
    h.n = basis[0].n;
    for (auto& b : basis)
        if (b.n != h.n) throw SubalgebraError("MixedN", "inconsistent n in basis");
    h.basis = basis;
    const int k = int(basis.size());
    auto rows = coord_rows(basis);
    if constexpr (scalar_traits<S>::exact) {
        if (la::rank(rows) != size_t(k)) throw SubalgebraError("NotIndependent", "basis is not linearly independent");
        for (int i = 0; i < k; ++i) {
            h.structure.emplace_back();
            for (int j = 0; j < k; ++j) {
                std::vector<R> c;
                if (j <= i) {
                    c = la::zeros(k);
                    if (j < i)
                        for (int l = 0; l < k; ++l) c[l] = -h.structure[j][i][l];
                } else {
                    auto br = bracket(basis[i], basis[j]);
                    if (!la::solve_in_span(rows, br.coords(), c))
                        throw SubalgebraError("NotClosed",
                                              "not closed under bracket: pair (" + std::to_string(i) + "," +
                                                  std::to_string(j) + ")",
                                              i, j);
                }
                h.structure[i].push_back(c);
            }
        }
        std::vector<EQ> nil;
        for (auto& b : restrict_zero(basis, T, h.n)) nil.push_back(b);
        h.z_part = restrict_zero(nil, T | PHI | X | Y, h.n);
    } else {
        Eigen::MatrixXd m = detail::to_eigen(rows).transpose();  // d x k
        double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        if (svd.singularValues().minCoeff() < 1e-10 * scale)
            throw SubalgebraError("NotIndependent", "basis is not linearly independent");
        for (int i = 0; i < k; ++i) {
            h.structure.emplace_back();
            for (int j = 0; j < k; ++j) {
                auto br = bracket(basis[i], basis[j]).coords();
                Eigen::VectorXd v = Eigen::Map<Eigen::VectorXd>(br.data(), br.size());
                Eigen::VectorXd c = svd.solve(v);
                double res = (m * c - v).norm();
                if (res > 1e-8 * std::max(1.0, v.norm()) * scale)
                    throw SubalgebraError("NotClosed",
                                          "not closed under bracket: pair (" + std::to_string(i) + "," +
                                              std::to_string(j) + ")",
                                          i, j);
                h.structure[i].push_back(std::vector<double>(c.data(), c.data() + k));
            }
        }
        // z via the exact copy; floating inputs are dyadic rationals
        std::vector<EQ> ex;
        for (auto& b : basis) ex.push_back(to_exact(to_double(b)));
        std::vector<EQ> nil = restrict_zero(ex, T, h.n);
        for (auto& z : restrict_zero(nil, T | PHI | X | Y, h.n)) h.z_part.push_back(to_double(z));
    }
    return h;
}

/// exact copy of a floating subalgebra (fails if rounding broke closure)
inline SubQ to_exact(const SubD& h) {
    std::vector<EQ> b;
    for (auto& e : h.basis) b.push_back(to_exact(e));
    return subalgebra_new(b);
}

inline SubD to_double(const SubQ& h) {
    SubD d;
    d.n = h.n;
    for (auto& e : h.basis) d.basis.push_back(to_double(e));
    for (auto& e : h.z_part) d.z_part.push_back(to_double(e));
    for (auto& row : h.structure) {
        d.structure.emplace_back();
        for (auto& c : row) {
            std::vector<double> v;
            for (auto& q : c) v.push_back(q.get_d());
            d.structure.back().push_back(v);
        }
    }
    return d;
}

/// smallest subalgebra containing the given elements (bracket saturation, exact)
inline std::vector<EQ> saturate(std::vector<EQ> gens, size_t max_dim = 64) {
    std::vector<EQ> basis;
    la::Mat rows;
    auto add = [&](const EQ& e) {
        auto c = e.coords();
        if (la::is_zero_vec(c)) return false;
        if (!rows.empty() && la::in_span(rows, c)) return false;
        rows.push_back(c);
        basis.push_back(e);
        return true;
    };
    for (auto& g : gens) add(g);
    bool grew = true;
    while (grew && basis.size() <= max_dim) {
        grew = false;
        size_t k = basis.size();
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j)
                if (add(bracket(basis[i], basis[j]))) grew = true;
    }
    return basis;
}

/// Ad(g) applied to every basis element
inline SubQ conjugate_sub(const Matrix<GQ>& g, const SubQ& h) {
    std::vector<EQ> b;
    Matrix<GQ> gi = group_inverse(g);
    for (auto& e : h.basis) b.push_back(conjugate_with(g, gi, e));
    return subalgebra_new(b);
}

}  // namespace su2n
