// su2n: classify, mu-scan, verify, gallery.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "su2n/suites.hpp"

using namespace su2n;

namespace {

enum Exit { ok = 0, input_error = 1, inconsistency = 2 };

json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("parse error: ") + e.what());
    }
}

uint64_t effective_seed(uint64_t flag) {
    if (const char* env = std::getenv("SU2N_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError(std::string("SU2N_SEED is not an integer: ") + env);
        }
    }
    return flag;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json error_json(const std::string& kind, const std::string& msg) { return {{"error", kind}, {"message", msg}}; }

/// the subgroup a file describes: a subalgebra of n, or an AN spec (given or normalized)
struct Loaded {
    std::optional<SubQ> nil;
    std::optional<an::AnSpec> an;
    bool normalized = false;
};

Loaded load(const json& j) {
    Loaded l;
    if (an::is_an_spec_json(j)) {
        l.an = an::an_spec_from_json(j);
        return l;
    }
    auto f = subalgebra_file_from_json(j);
    SubQ h;
    if (f.mode == Mode::exact) h = subalgebra_new(f.exact);
    else h = to_exact(subalgebra_new(f.floating));
    if (h.in_n()) l.nil = h;
    else {
        l.an = an::normalize_to_compatible(h).first;
        l.normalized = true;
    }
    return l;
}

int cmd_classify(const std::string& path, uint64_t seed) {
    Loaded l = load(read_json(path));
    if (l.nil) {
        print(nil::classification_to_json(nil::classify(*l.nil, seed)));
    } else {
        json r = an::an_result_to_json(an::classify_an(*l.an, seed));
        if (l.normalized) r["normalized_spec"] = an::an_spec_to_json(*l.an);
        print(r);
    }
    return ok;
}

int cmd_mu_scan(const std::string& path, double tmax, int samples, uint64_t seed, const std::string& out) {
    Loaded l = load(read_json(path));
    SamplingPlan plan;
    plan.seed = seed;
    if (samples > 0) plan.step = std::pow(tmax / 1e-3, 1.0 / samples);
    plan.t_max = tmax;
    SampleCloud c = l.nil ? sample_subgroup(*l.nil, plan) : sample_an(*l.an, plan);
    if (out.empty() || out == "-") std::cout << c.csv();
    else {
        std::ofstream f(out);
        if (!f) throw InputError("cannot write " + out);
        f << c.csv();
    }
    json fit;
    fit["samples"] = c.samples.size();
    try {
        auto e = fit_exponents(c, fit_floor_log10);
        fit["s_lo_fit"] = e.s_lo;
        fit["s_hi_fit"] = e.s_hi;
        fit["residual"] = e.confidence;
        if (l.an)
            if (auto* op = std::get_if<an::OneParam>(&l.an->v)) {
                auto k = fit_k(*op, l.an->n);
                fit["k_plus"] = k.k_plus;
                fit["k_minus"] = k.k_minus;
            }
    } catch (const InsufficientRange& ex) {
        fit["warning"] = ex.what();
    }
    std::cerr << fit.dump() << "\n";
    return ok;
}

int cmd_verify(const std::string& suite, uint64_t seed) {
    std::vector<suites::CheckLine> lines;
    if (suite == "formulas") lines = suites::formulas(seed);
    else if (suite == "metrics") lines = suites::metrics(seed);
    else if (suite == "classifier") lines = suites::classifier(seed);
    else if (suite == "shapes") {
        lines = suites::shapes(seed);
        for (auto& l : suites::log_corrections()) lines.push_back(l);
    } else if (suite == "dimensions") lines = suites::dimensions();
    else if (suite == "conjugation") lines = suites::conjugation(seed);
    else throw InputError("unknown suite: " + suite);
    for (auto& l : lines) std::cout << suites::format_line(l) << "\n";
    return suites::all_pass(lines) ? ok : inconsistency;
}

int cmd_gallery(bool list, const std::string& emit) {
    if (list) {
        for (auto& e : gallery()) {
            std::cout << e.id << "  n=" << e.n << "  ";
            if (e.cds) std::cout << "CDS";
            else if (e.type) std::cout << "type " << *e.type;
            else std::cout << e.label;
            std::cout << "  " << e.shape.str() << "  " << e.provenance << "\n";
        }
        return ok;
    }
    if (emit.empty()) throw InputError("gallery needs --list or --emit <id>");
    print(gallery_to_json(gallery_entry(emit)));
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cartan projections of subgroups of SU(2,n)"};
    app.require_subcommand(1);

    uint64_t seed = 0;
    std::string path, out, suite, emit;
    double tmax = 1e12;
    int samples = 0;
    bool list = false;

    auto* cl = app.add_subcommand("classify", "classify a subalgebra file or AN subgroup spec");
    cl->add_option("file", path, "JSON file")->required();
    cl->add_option("--seed", seed, "seed for randomized checks");

    auto* ms = app.add_subcommand("mu-scan", "sample (log |h|, log rho(h)) as CSV; fitted exponents on stderr");
    ms->add_option("file", path, "JSON file")->required();
    ms->add_option("--tmax", tmax, "largest curve parameter");
    ms->add_option("--samples", samples, "grid points per curve between 1e-3 and tmax");
    ms->add_option("--seed", seed, "sampling seed");
    ms->add_option("--out", out, "CSV path (default stdout)");

    auto* ve = app.add_subcommand("verify", "run an invariant suite");
    ve->add_option("--suite", suite, "formulas|metrics|classifier|shapes|dimensions|conjugation")->required();
    ve->add_option("--seed", seed, "seed");

    auto* ga = app.add_subcommand("gallery", "list or emit gallery entries");
    ga->add_flag("--list", list, "list entries");
    ga->add_option("--emit", emit, "print the JSON spec of an entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? ok : input_error;
    }

    try {
        seed = effective_seed(seed);
        if (*cl) return cmd_classify(path, seed);
        if (*ms) return cmd_mu_scan(path, tmax, samples, seed, out);
        if (*ve) return cmd_verify(suite, seed);
        if (*ga) return cmd_gallery(list, emit);
    } catch (const SubalgebraError& e) {
        json j = error_json(e.code, e.what());
        if (e.i >= 0) j["pair"] = {e.i, e.j};
        print(j);
        return input_error;
    } catch (const nil::InconsistentClassification& e) {
        print(error_json("InconsistentClassification", e.what()));
        return inconsistency;
    } catch (const an::NoCaseMatched& e) {
        print(error_json("NoCaseMatched", e.what()));
        return inconsistency;
    } catch (const InputError& e) {
        print(error_json("InputError", e.what()));
        return input_error;
    } catch (const an::SpecViolation& e) {
        print(error_json("SpecViolation", e.what()));
        return input_error;
    } catch (const an::UNotNormalized& e) {
        print(error_json("UNotNormalized", e.what()));
        return input_error;
    } catch (const an::NormalizationFailed& e) {
        print(error_json("NormalizationFailed", e.what()));
        return input_error;
    } catch (const OverflowCeiling& e) {
        print(error_json("OverflowCeiling", e.what()));
        return input_error;
    } catch (const json::exception& e) {
        print(error_json("InputError", e.what()));
        return input_error;
    } catch (const std::exception& e) {
        print(error_json("Error", e.what()));
        return input_error;
    }
    return ok;
}
