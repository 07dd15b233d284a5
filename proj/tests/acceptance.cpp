// Acceptance criteria 1-7: one PASS/FAIL line each, details below it; exit status 1 if any fails.
#include <iostream>

#include "su2n/suites.hpp"

using namespace su2n;
using namespace su2n::suites;

namespace {

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<std::vector<CheckLine>()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "formula suite, 1000 elements for each n in {3,4,6}", 30, [] { return formulas(0, 1000); }},
        {2, "Cartan projection suite, 1000 cases, 100 oracle cases", 60, [] { return metrics(0, 1000, 100); }},
        {3, "classifier double-entry on >= 500 subalgebras, seed 0", 600, [] { return classifier(0, 500); }},
        {4, "exponent reproduction within 0.08 up to |h| = 1e8", 300, [] { return shapes(0, true); }},
        {5, "log corrections along extremal curves within 0.3", 120, [] { return log_corrections(); }},
        {6, "dimension table rows for types 7 and 8", 30, [] { return dimensions({7, 8}); }},
        {7, "conjugation invariance of shapes, 100 pairs", 120, [] { return conjugation(0, 100); }},
    };
    bool ok = true;
    std::vector<std::string> summary;
    for (auto& c : criteria) {
        auto t0 = Clock::now();
        std::vector<CheckLine> lines;
        std::string err;
        try {
            lines = c.run();
        } catch (const std::exception& ex) {
            err = ex.what();
        }
        double s = since(t0);
        bool pass = err.empty() && !lines.empty() && all_pass(lines) && s < c.budget_s;
        ok = ok && pass;
        for (auto& l : lines) std::cout << "  " << format_line(l) << "\n";
        if (!err.empty()) std::cout << "  error: " << err << "\n";
        std::ostringstream o;
        o << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << " " << c.title << " [" << std::fixed
          << std::setprecision(1) << s << " s of " << c.budget_s << " s]";
        std::cout << o.str() << "\n" << std::flush;
        summary.push_back(o.str());
    }
    std::cout << "\n";
    for (auto& l : summary) std::cout << l << "\n";
    return ok ? 0 : 1;
}
