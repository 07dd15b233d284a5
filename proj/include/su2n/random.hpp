#pragma once
// Seeded random elements for tests, corpora and sampling.
#include "element.hpp"

#include <random>

namespace su2n {

using Rng = std::mt19937_64;

/// small rational p/q with |p| <= pmax, 1 <= q <= qmax
inline Q rand_q(Rng& rng, long pmax = 9, long qmax = 4) {
    std::uniform_int_distribution<long> dp(-pmax, pmax), dq(1, qmax);
    return qq(dp(rng), dq(rng));
}

inline GQ rand_gq(Rng& rng, long pmax = 9, long qmax = 4) { return GQ(rand_q(rng, pmax, qmax), rand_q(rng, pmax, qmax)); }

/// random nilpotent element; each slot kept with probability keep
inline EQ rand_nil_q(Rng& rng, int n, double keep = 1.0, long pmax = 9, long qmax = 4) {
    std::bernoulli_distribution on(keep);
    EQ u(n);
    if (on(rng)) u.phi = rand_gq(rng, pmax, qmax);
    if (on(rng)) for (auto& s : u.x) s = rand_gq(rng, pmax, qmax);
    if (on(rng)) for (auto& s : u.y) s = rand_gq(rng, pmax, qmax);
    if (on(rng)) u.eta = rand_gq(rng, pmax, qmax);
    if (on(rng)) u.xx = rand_q(rng, pmax, qmax);
    if (on(rng)) u.yy = rand_q(rng, pmax, qmax);
    return u;
}

inline ED rand_nil_d(Rng& rng, int n, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    ED u(n);
    u.phi = cd(g(rng), g(rng));
    for (auto& s : u.x) s = cd(g(rng), g(rng));
    for (auto& s : u.y) s = cd(g(rng), g(rng));
    u.eta = cd(g(rng), g(rng));
    u.xx = g(rng);
    u.yy = g(rng);
    return u;
}

/// basis vector e_i of C^{n-2} as a complex vector
template <class S>
std::vector<S> unit_vec(int n, int i, S val = S(1)) {
    std::vector<S> v(size_t(n - 2), S(0));
    v[size_t(i)] = val;
    return v;
}

}  // namespace su2n
