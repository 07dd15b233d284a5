#pragma once
// Norms, the second exterior power, and the Cartan projection.
#include "group.hpp"
#include "random.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

namespace su2n {

struct CartanPoint {
    double a1 = 1, a2 = 1;
};

struct NonFinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class S>
double sup_norm(const Matrix<S>& g) {
    double m = 0;
    for (auto& v : g.a) m = std::max(m, std::abs(scalar_traits<S>::to_cd(v)));
    return m;
}

/// max |det| over 2x2 submatrices
template <class S>
double rho_norm(const Matrix<S>& g0) {
    Matrix<cd> g = to_double(g0);
    const int N = g.rows;
    double best = 0;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            for (int k = 0; k < N; ++k) {
                cd a = g(i, k), b = g(j, k);
                for (int l = k + 1; l < N; ++l) best = std::max(best, std::abs(a * g(j, l) - g(i, l) * b));
            }
    return best;
}

inline Eigen::MatrixXcd to_eigen(const Matrix<cd>& g) {
    Eigen::MatrixXcd e(g.rows, g.cols);
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j) e(i, j) = g(i, j);
    return e;
}
inline Matrix<cd> from_eigen(const Eigen::MatrixXcd& e) {
    Matrix<cd> g(int(e.rows()), int(e.cols()));
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j) g(i, j) = e(i, j);
    return g;
}

/// Lambda^2(g) as the restriction of g (x) g to antisymmetric tensors
inline Eigen::MatrixXcd exterior_square(const Matrix<cd>& g) {
    const int N = g.rows;
    Eigen::MatrixXcd G = to_eigen(g);
    Eigen::MatrixXcd K = Eigen::kroneckerProduct(G, G);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) pairs.push_back({i, j});
    const int P = int(pairs.size());
    // wedge basis e_i^e_j = e_i(x)e_j - e_j(x)e_i; coefficient read from the (i,j) slot
    Eigen::MatrixXcd W(N * N, P);
    W.setZero();
    for (int c = 0; c < P; ++c) {
        W(pairs[c].first * N + pairs[c].second, c) = 1;
        W(pairs[c].second * N + pairs[c].first, c) = -1;
    }
    Eigen::MatrixXcd img = K * W;
    Eigen::MatrixXcd out(P, P);
    for (int r = 0; r < P; ++r) out.row(r) = img.row(pairs[r].first * N + pairs[r].second);
    return out;
}

inline double rho_norm_oracle(const Matrix<cd>& g) {
    return exterior_square(g).cwiseAbs().maxCoeff();
}

/// unitary S with S^dagger J S = diag(+1 (n times), -1, -1):
/// columns (e1+e_{N})/sqrt2, (e2+e_{N-1})/sqrt2, e3..e_n, (e2-e_{N-1})/sqrt2, (e1-e_N)/sqrt2
inline Eigen::MatrixXcd s_basis(int n) {
    const int N = n + 2;
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(N, N);
    S(0, 0) = r; S(N - 1, 0) = r;
    S(1, 1) = r; S(N - 2, 1) = r;
    for (int i = 2; i < N - 2; ++i) S(i, i) = 1;
    S(1, N - 2) = r; S(N - 2, N - 2) = -r;
    S(0, N - 1) = r; S(N - 1, N - 1) = -r;
    return S;
}

/// mu(g) = (a1, a2): top singular values of g in the S-basis (K is unitary there)
inline CartanPoint mu(const Matrix<cd>& g) {
    const int n = g.rows - 2;
    Eigen::MatrixXcd S = s_basis(n);
    Eigen::MatrixXcd gp = S.adjoint() * to_eigen(g) * S;
    if (!gp.allFinite()) throw NonFinite("mu: non-finite input");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(gp);
    auto sv = svd.singularValues();
    CartanPoint p{sv(0), sv(1)};
    if (!std::isfinite(p.a1) || !std::isfinite(p.a2)) throw NonFinite("mu: overflow");
    return p;
}

inline Eigen::MatrixXcd random_unitary(int d, Rng& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a(i, j) = cd(g(rng), g(rng));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < d; ++i) {
        cd ph = r(i, i) / std::abs(r(i, i));
        q.col(i) *= ph;
    }
    return q;
}

/// random element of K = S(U(n) x U(2))
inline Matrix<cd> random_k(int n, Rng& rng) {
    const int N = n + 2;
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(N, N);
    B.topLeftCorner(n, n) = random_unitary(n, rng);
    B.bottomRightCorner(2, 2) = random_unitary(2, rng);
    cd d = B.determinant();
    B.col(0) /= d;  // fix det = 1 inside U(n)
    Eigen::MatrixXcd S = s_basis(n);
    return from_eigen(S * B * S.adjoint());
}

}  // namespace su2n
