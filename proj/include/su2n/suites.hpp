#pragma once
// Invariant suites shared by `su2n verify` and the acceptance binary; one CheckLine per check.
#include "corpus.hpp"
#include "lab.hpp"

#include <iomanip>

namespace su2n::suites {

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

using Clock = std::chrono::steady_clock;

inline double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

inline bool all_pass(const std::vector<CheckLine>& v) {
    return std::all_of(v.begin(), v.end(), [](const CheckLine& c) { return c.pass; });
}

inline std::string format_line(const CheckLine& c) {
    std::ostringstream o;
    o << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << " (" << std::fixed << std::setprecision(2)
      << c.seconds << " s)";
    return o.str();
}

/// exp_closed = exp_series, Delta(exp u) = expanded formula, bracket = commutator, Jacobi; count elements per n
inline std::vector<CheckLine> formulas(uint64_t seed = 0, int count = 1000, const std::vector<int>& ns = {3, 4, 6}) {
    Rng rng(seed);
    int bad_exp = 0, bad_delta = 0, bad_br = 0, bad_jac = 0, total = 0;
    auto t0 = Clock::now();
    for (int n : ns)
        for (int k = 0; k < count; ++k) {
            ++total;
            EQ u = rand_nil_q(rng, n, 0.8), v = rand_nil_q(rng, n, 0.8), w = rand_nil_q(rng, n, 0.8);
            auto g = exp_closed(u);
            if (!(g == exp_series(u))) ++bad_exp;
            if (!(delta(g) == delta_formula(u))) ++bad_delta;
            if (k % 2) { u.t1 = rand_q(rng); v.t2 = rand_q(rng); }
            if (!(matrix_of(bracket(u, v)) == commutator(matrix_of(u), matrix_of(v)))) ++bad_br;
            if (!(bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v))).is_zero_el())
                ++bad_jac;
        }
    double s = since(t0);
    auto line = [&](std::string name, int bad) {
        return CheckLine{std::move(name), bad == 0, std::to_string(bad) + "/" + std::to_string(total) + " mismatches", s};
    };
    return {line("exp_closed = exp_series", bad_exp), line("Delta(exp u) = expanded formula", bad_delta),
            line("bracket = commutator", bad_br), line("Jacobi", bad_jac)};
}

/// mu(a) = a, mu(k g k') = mu(g), mu(g^-1) = mu(g), rho(a) = a1 a2, rho_norm = exterior-square oracle
inline std::vector<CheckLine> metrics(uint64_t seed = 0, int count = 1000, int oracle_count = 100) {
    Rng rng(seed);
    std::uniform_real_distribution<double> L(0.0, 8.0);
    std::uniform_int_distribution<int> pn(3, 6);
    const double tol = tolerances().derived;
    auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1.0); };
    double worst_a = 0, worst_k = 0, worst_inv = 0, worst_or = 0;
    int bad_rho = 0;
    auto t0 = Clock::now();
    for (int i = 0; i < count; ++i) {
        int n = pn(rng);
        double l1 = L(rng), l2 = L(rng);
        if (l2 > l1) std::swap(l1, l2);
        double a1 = std::exp(l1), a2 = std::exp(l2);
        auto a = torus_element<cd>(n, a1, a2);
        auto p = mu(a);
        worst_a = std::max({worst_a, rel(p.a1, a1), rel(p.a2, a2)});
        if (rho_norm(a) != a1 * a2) ++bad_rho;
        auto g = random_k(n, rng) * a * exp_closed(rand_nil_d(rng, n, 0.5));
        auto q = mu(g), r = mu(random_k(n, rng) * g * random_k(n, rng)), s = mu(group_inverse(g));
        worst_k = std::max({worst_k, rel(r.a1, q.a1), rel(r.a2, q.a2)});
        worst_inv = std::max({worst_inv, rel(s.a1, q.a1), rel(s.a2, q.a2)});
        if (i < oracle_count) worst_or = std::max(worst_or, rel(rho_norm(g), rho_norm_oracle(g)));
    }
    double sec = since(t0);
    auto line = [&](std::string name, double worst) {
        std::ostringstream o;
        o << "max rel err " << std::scientific << std::setprecision(2) << worst << " <= " << tol;
        return CheckLine{std::move(name), worst <= tol, o.str(), sec};
    };
    return {line("mu(a) = a", worst_a), line("mu(k g k') = mu(g)", worst_k), line("mu(g^-1) = mu(g)", worst_inv),
            CheckLine{"rho(a) = a1 a2", bad_rho == 0, std::to_string(bad_rho) + " inexact", sec},
            line("rho_norm = exterior-square oracle", worst_or)};
}

/// exactly one of template match and square+linear witnesses on the classifier corpus
inline std::vector<CheckLine> classifier(uint64_t seed = 0, size_t random_count = 500) {
    auto t0 = Clock::now();
    auto corpus = classifier_corpus(seed, random_count);
    int bad = 0, other = 0, cds = 0;
    std::map<int, int> types;
    std::string first;
    for (auto& e : corpus) {
        try {
            auto c = nil::classify(e.h, seed);
            if (c.cds) ++cds;
            else ++types[c.match->type];
        } catch (const nil::InconsistentClassification& ex) {
            ++bad;
            if (first.empty()) first = e.id + ": " + ex.what();
        } catch (const std::exception& ex) {
            ++other;
            if (first.empty()) first = e.id + ": " + ex.what();
        }
    }
    std::ostringstream o;
    o << corpus.size() << " subalgebras, " << cds << " CDS, " << (corpus.size() - cds - bad - other)
      << " not CDS over " << types.size() << " types, " << bad << " inconsistent, " << other << " errors";
    if (!first.empty()) o << "; first: " << first;
    return {{"classifier double-entry", bad == 0 && other == 0 && corpus.size() >= 500, o.str(), since(t0)}};
}

inline CheckLine shape_line(const std::string& id, const std::function<VerificationReport()>& run) {
    auto t0 = Clock::now();
    try {
        auto r = run();
        return {id, r.pass, r.detail, since(t0)};
    } catch (const std::exception& ex) {
        return {id, false, ex.what(), since(t0)};
    }
}

/// envelope fits of gallery entries; only_flagged keeps the exponent-reproduction set
inline std::vector<CheckLine> shapes(uint64_t seed = 0, bool only_flagged = false, bool include_an = true) {
    std::vector<CheckLine> out;
    SamplingPlan plan;
    plan.seed = seed;
    for (auto& e : gallery()) {
        if (e.shape.symbolic()) continue;
        if (only_flagged && !e.exponent_check) continue;
        if (e.sub) {
            out.push_back(shape_line(e.id, [&] {
                return verify_cloud(e.id, sample_subgroup(*e.sub, plan), e.shape, tolerances().gallery);
            }));
        } else if (e.an && include_an && !only_flagged) {
            out.push_back(shape_line(e.id, [&] {
                return verify_cloud(e.id, sample_an(*e.an, plan), e.shape, tolerances().gallery);
            }));
        }
    }
    return out;
}

/// log-power coefficients along the extremal curves of graph cases 1 and 3
inline std::vector<CheckLine> log_corrections() {
    std::vector<CheckLine> out;
    struct Case { const char* id; int gcase, r; };
    for (auto c : {Case{"graph-1-n4", 1, 1}, Case{"graph-3-r1-n4", 3, 1}, Case{"graph-3-r2-n4", 3, 2}}) {
        auto t0 = Clock::now();
        auto& e = gallery_entry(c.id);
        auto res = log_correction_curve(std::get<an::Graph>(e.an->v), e.n, c.gcase, c.r);
        std::ostringstream o;
        o << "coefficient " << std::setprecision(4) << res.coefficient << " vs " << res.expected << " at s = " << res.s
          << " (tol " << tolerances().log_power << ")";
        out.push_back({std::string(c.id) + " log correction", res.pass, o.str(), since(t0)});
    }
    return out;
}

/// maximal-dimension rows, optionally restricted to some types
inline std::vector<CheckLine> dimensions(const std::vector<int>& types = {}) {
    std::vector<CheckLine> out;
    auto t0 = Clock::now();
    for (auto& r : check_dimension_table(gallery())) {
        if (!types.empty() && std::find(types.begin(), types.end(), r.type) == types.end()) continue;
        std::ostringstream o;
        if (r.type == 8 && r.n == 3) o << "obstruction: " << r.note;
        else
            o << "type " << r.type << ", dim " << r.dim << " vs table " << r.expected_dim
              << (r.type_ok ? "" : ", type mismatch") << (r.shape_ok ? "" : ", shape mismatch");
        out.push_back({r.id, r.pass, o.str(), since(t0)});
    }
    return out;
}

/// classify(h) and classify(Ad(g) h) give the same shape
inline std::vector<CheckLine> conjugation(uint64_t seed = 0, size_t count = 100) {
    auto t0 = Clock::now();
    int bad = 0, torus = 0;
    std::string first;
    auto pairs = conjugation_pairs(seed, count);
    for (auto& p : pairs) {
        if (p.kind == "torus") ++torus;
        auto a = nil::classify(p.h.h, seed);
        auto b = nil::classify(conjugate_sub(p.g, p.h.h), seed);
        if (!a.shape.same(b.shape)) {
            ++bad;
            if (first.empty()) first = p.h.id + " (" + p.kind + "): " + a.shape.str() + " vs " + b.shape.str();
        }
    }
    std::ostringstream o;
    o << pairs.size() << " pairs (" << torus << " torus, " << pairs.size() - torus << " root-group), " << bad
      << " shape changes";
    if (!first.empty()) o << "; first: " << first;
    return {{"conjugation invariance", bad == 0 && pairs.size() >= count, o.str(), since(t0)}};
}

}  // namespace su2n::suites
