#pragma once
// Generated subalgebras of n: sparse random generators closed under brackets, gallery members and conjugates.
#include "gallery.hpp"
#include "group.hpp"
#include "random.hpp"
#include "subalgebra.hpp"

namespace su2n {

struct CorpusEntry {
    std::string id;
    std::string family;
    SubQ h;
};

namespace detail {

inline GQ small_gq(Rng& rng, long p) {
    std::uniform_int_distribution<long> d(-p, p);
    std::bernoulli_distribution half(0.5);
    GQ g(Q(d(rng)), half(rng) ? Q(d(rng)) : Q(0));
    return g;
}

/// element supported on a random subset of slots, with sparse small entries
inline EQ sparse_element(Rng& rng, int n, double keep) {
    std::bernoulli_distribution on(keep), half(0.5);
    std::uniform_int_distribution<int> comp(0, n - 3);
    for (;;) {
        EQ u(n);
        if (on(rng)) u.phi = small_gq(rng, 2);
        if (on(rng)) {
            if (half(rng)) u.x[size_t(comp(rng))] = small_gq(rng, 2);
            else for (auto& s : u.x) s = small_gq(rng, 2);
        }
        if (on(rng)) {
            if (half(rng)) u.y[size_t(comp(rng))] = small_gq(rng, 2);
            else for (auto& s : u.y) s = small_gq(rng, 2);
        }
        if (on(rng)) u.eta = small_gq(rng, 2);
        if (on(rng)) u.xx = small_gq(rng, 2).re;
        if (on(rng)) u.yy = small_gq(rng, 2).re;
        if (!u.is_zero_el()) return u;
    }
}

}  // namespace detail

/// count subalgebras from 1-3 sparse generators each, saturated, of dimension <= max_dim
inline std::vector<CorpusEntry> random_corpus(uint64_t seed, size_t count, const std::vector<int>& ns = {3, 4, 5},
                                              size_t max_dim = 10, double keep_hi = 0.6) {
    Rng rng(seed);
    std::vector<CorpusEntry> out;
    std::uniform_int_distribution<size_t> pick_n(0, ns.size() - 1);
    std::uniform_int_distribution<int> ngen(1, 3);
    std::uniform_real_distribution<double> keep(0.2, keep_hi);
    while (out.size() < count) {
        int n = ns[pick_n(rng)];
        int g = ngen(rng);
        double k = keep(rng);
        std::vector<EQ> gens;
        for (int i = 0; i < g; ++i) gens.push_back(detail::sparse_element(rng, n, k));
        auto b = saturate(gens, max_dim + 2);
        if (b.empty() || b.size() > max_dim) continue;
        out.push_back({"rand-" + std::to_string(out.size()), "random", subalgebra_new(b)});
    }
    return out;
}

/// random saturated subalgebras followed by every nil gallery entry
inline std::vector<CorpusEntry> classifier_corpus(uint64_t seed, size_t random_count = 500) {
    auto out = random_corpus(seed, random_count);
    for (auto& e : gallery())
        if (e.sub) out.push_back({e.id, "gallery", *e.sub});
    return out;
}

struct ConjugationPair {
    CorpusEntry h;
    Matrix<GQ> g;
    std::string kind;  // "torus" or "root"
};

/// exp of a random rational element of one root space
inline Matrix<GQ> random_root_exp(Rng& rng, int n) {
    std::uniform_int_distribution<size_t> pick(0, all_roots.size() - 1);
    Root r = all_roots[pick(rng)];
    EQ u = root_project(rand_nil_q(rng, n, 1.0, 3, 2), r);
    return exp_series(u);
}

/// (subalgebra, conjugator) pairs: nil gallery entries and random corpus members against
/// rational torus elements and products of root-group elements
inline std::vector<ConjugationPair> conjugation_pairs(uint64_t seed, size_t count) {
    Rng rng(seed);
    std::vector<CorpusEntry> pool;
    for (auto& e : gallery())
        if (e.sub) pool.push_back({e.id, "gallery", *e.sub});
    for (auto& e : random_corpus(seed + 1, pool.size(), {3, 4, 5}, 6)) pool.push_back(e);
    std::uniform_int_distribution<long> num(1, 5);
    std::bernoulli_distribution coin(0.5);
    std::vector<ConjugationPair> out;
    for (size_t i = 0; i < count; ++i) {
        const CorpusEntry& h = pool[i % pool.size()];
        const int n = h.h.n;
        if (coin(rng)) {
            Q a1 = qq(num(rng), num(rng)), a2 = qq(num(rng), num(rng));
            out.push_back({h, torus_element<GQ>(n, a1, a2), "torus"});
        } else {
            Matrix<GQ> g = random_root_exp(rng, n);
            if (coin(rng)) g = g * random_root_exp(rng, n);
            out.push_back({h, g, "root"});
        }
    }
    return out;
}

}  // namespace su2n
