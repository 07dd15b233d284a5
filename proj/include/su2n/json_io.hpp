#pragma once
// JSON encoding of elements and subalgebra files.
#include "subalgebra.hpp"

#include <json.hpp>

#include <functional>

namespace su2n {

using json = nlohmann::json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Q json_q(const json& j) {
    if (j.is_string()) return parse_q(j.get<std::string>());
    if (j.is_number_integer()) return Q(mpz_class(std::to_string(j.get<long long>())));
    if (j.is_number()) return Q(j.get<double>());
    throw InputError("expected a number or \"p/q\" string");
}

inline double json_d(const json& j) {
    if (j.is_string()) return parse_q(j.get<std::string>()).get_d();
    if (j.is_number()) return j.get<double>();
    throw InputError("expected a number or \"p/q\" string");
}

template <class S> real_t<S> json_real(const json& j);
template <> inline Q json_real<GQ>(const json& j) { return json_q(j); }
template <> inline double json_real<cd>(const json& j) { return json_d(j); }

template <class S>
S json_complex(const json& j) {
    if (j.is_array() && j.size() == 2) return scalar_traits<S>::make(json_real<S>(j[0]), json_real<S>(j[1]));
    return scalar_traits<S>::make(json_real<S>(j), real_t<S>(0));
}

template <class S>
Element<S> element_from_json(const json& j, int n) {
    Element<S> u(n);
    auto get = [&](const char* k) -> const json* { return j.contains(k) ? &j.at(k) : nullptr; };
    if (auto v = get("t1")) u.t1 = json_real<S>(*v);
    if (auto v = get("t2")) u.t2 = json_real<S>(*v);
    if (auto v = get("phi")) u.phi = json_complex<S>(*v);
    if (auto v = get("eta")) u.eta = json_complex<S>(*v);
    if (auto v = get("xx")) u.xx = json_real<S>(*v);
    if (auto v = get("yy")) u.yy = json_real<S>(*v);
    for (auto key : {"x", "y"}) {
        auto v = get(key);
        if (!v) continue;
        if (!v->is_array() || int(v->size()) != n - 2)
            throw InputError(std::string("vector '") + key + "' must have length n-2");
        auto& dst = key[0] == 'x' ? u.x : u.y;
        for (int i = 0; i < n - 2; ++i) dst[i] = json_complex<S>((*v)[i]);
    }
    return u;
}

inline json real_json(const Q& q) {
    if (q.get_den() == 1 && abs(q.get_num()) < mpz_class("9007199254740992")) return q.get_num().get_si();
    return q_str(q);
}
inline json real_json(double d) { return d; }

template <class S>
json complex_json(const S& s) {
    return json::array({real_json(re(s)), real_json(im(s))});
}

template <class S>
json element_to_json(const Element<S>& u) {
    json j;
    j["t1"] = real_json(u.t1);
    j["t2"] = real_json(u.t2);
    j["phi"] = complex_json(u.phi);
    j["x"] = json::array();
    j["y"] = json::array();
    for (auto& s : u.x) j["x"].push_back(complex_json(s));
    for (auto& s : u.y) j["y"].push_back(complex_json(s));
    j["eta"] = complex_json(u.eta);
    j["xx"] = real_json(u.xx);
    j["yy"] = real_json(u.yy);
    return j;
}

/// parsed subalgebra file; exact files hold exact values, float files doubles
struct SubalgebraFile {
    int n = 3;
    Mode mode = Mode::exact;
    std::vector<EQ> exact;
    std::vector<ED> floating;
};

inline SubalgebraFile subalgebra_file_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("basis")) throw InputError("subalgebra file needs 'n' and 'basis'");
    SubalgebraFile f;
    f.n = j.at("n").get<int>();
    if (f.n < 3) throw InputError("n must be >= 3");
    std::string mode = j.value("mode", "exact");
    if (mode == "exact") f.mode = Mode::exact;
    else if (mode == "float") f.mode = Mode::floating;
    else throw InputError("mode must be 'exact' or 'float'");
    for (auto& e : j.at("basis")) {
        if (f.mode == Mode::exact) {
            // non-integral doubles in an exact file mix modes
            for (auto& [k, v] : e.items()) {
                std::vector<json> leaves;
                std::function<void(const json&)> walk = [&](const json& a) {
                    if (a.is_array()) for (auto& b : a) walk(b);
                    else leaves.push_back(a);
                };
                walk(v);
                for (auto& l : leaves)
                    if (l.is_number_float() && l.get<double>() != std::floor(l.get<double>()))
                        throw SubalgebraError("MixedModes", "exact file contains floating value in '" + k + "'");
            }
            f.exact.push_back(element_from_json<GQ>(e, f.n));
        } else {
            f.floating.push_back(element_from_json<cd>(e, f.n));
        }
    }
    return f;
}

template <class S>
json subalgebra_to_json(const Subalgebra<S>& h) {
    json j;
    j["n"] = h.n;
    j["mode"] = scalar_traits<S>::exact ? "exact" : "float";
    j["basis"] = json::array();
    for (auto& b : h.basis) j["basis"].push_back(element_to_json(b));
    return j;
}

template <class S>
json basis_to_json(int n, const std::vector<Element<S>>& b) {
    json j;
    j["n"] = n;
    j["mode"] = scalar_traits<S>::exact ? "exact" : "float";
    j["basis"] = json::array();
    for (auto& e : b) j["basis"].push_back(element_to_json(e));
    return j;
}

}  // namespace su2n
