// pybind11 bindings: the main pipeline operations, returning JSON strings that
// the python package parses into plain dicts/lists.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "wqs/catalog.hpp"
#include "wqs/monodromy.hpp"
#include "wqs/smoothing.hpp"

namespace py = pybind11;
using json = nlohmann::json;
using namespace wqs;

namespace {

json int_j(const Int& v) { return v.str(); }
json rat_j(const Rat& v) { return to_string(v); }

json quotient_j(const CyclicQuotient& q) {
    json a = json::array();
    for (const auto& x : q.a) a.push_back(int_j(x));
    return {{"r", int_j(q.r)}, {"a", a}, {"str", q.str()}};
}

struct Resolved {
    WeightSystem ws;
    MonomialSupport sup;
};

Resolved resolve_entry(const std::string& name) {
    for (const auto& e : load_catalog(default_catalog_path())) {
        bool match = e.name == name;
        for (const auto& a : e.aliases) match = match || a == name;
        if (!match) continue;
        NormalForm nf = e.normal_form();
        Resolved r;
        r.ws = solve_weights(nf);
        r.sup = normal_form_support(nf, r.ws);
        return r;
    }
    throw InvalidInput("unknown catalog entry: " + name);
}

Resolved resolve_weights(const std::vector<long long>& w, long long d) {
    Resolved r;
    for (long long x : w) r.ws.w.push_back(x);
    r.ws.d = d;
    r.sup = generic_support(r.ws);
    return r;
}

json analyze_j(const Resolved& r) {
    OrbitInvariants inv = orbit_invariants(r.ws, r.sup);
    json B = json::array();
    for (const auto& p : inv.pairs) B.push_back(quotient_j(p.type));
    json weights = json::array();
    for (const auto& w : r.ws.w) weights.push_back(int_j(w));
    CharPoly cp = char_poly(r.ws, inv);
    return {{"weights", weights},
            {"degree", int_j(r.ws.d)},
            {"milnor_number", int_j(milnor_number(r.ws))},
            {"B", B},
            {"chat_squared", rat_j(chat_squared(r.ws, inv.pairs))},
            {"exponent_R", int_j(inv.R)},
            {"genus", int_j(inv.genus)},
            {"b", int_j(inv.b)},
            {"dolgachev_check", check_dolgachev(inv)},
            {"unipotent_exponent", int_j(unipotent_exponent(cp))}};
}

json dual_sets_j(const Resolved& r) {
    OrbitInvariants inv = orbit_invariants(r.ws, r.sup);
    std::vector<CyclicQuotient> B;
    for (const auto& p : inv.pairs) B.push_back(p.type);
    json sets = json::array();
    for (const auto& s : dual_sets(B)) {
        json one = json::array();
        for (const auto& q : s) one.push_back(quotient_j(q));
        sets.push_back(one);
    }
    return {{"dual_sets", sets}};
}

json search_j(const Resolved& r, long long lo, long long hi) {
    OrbitInvariants inv = orbit_invariants(r.ws, r.sup);
    std::vector<CyclicQuotient> B;
    for (const auto& p : inv.pairs) B.push_back(p.type);
    auto ds = dual_sets(B);
    Int top = hi > 0 ? Int(hi) : r.ws.d;
    json hits = json::array();
    for (const auto& h : search_smoothings(r.ws, r.sup, ds, lo, top)) {
        json set = json::array();
        for (const auto& q : ds[h.dual_set_id]) set.push_back(quotient_j(q));
        json hit = {{"w3", int_j(h.w3)},
                    {"dual_set_id", h.dual_set_id},
                    {"dual_set", set},
                    {"k3", h.report.k3}};
        if (h.report.intersections) {
            const auto& ix = *h.report.intersections;
            hit["c_squared"] = rat_j(ix.c_squared);
            hit["c_squared_check"] = ix.check;
        }
        hits.push_back(hit);
    }
    return {{"hits", hits}};
}

json verify_j() {
    json entries = json::array();
    bool ok = true;
    for (const auto& e : load_catalog(default_catalog_path())) {
        VerifyReport rep = verify_entry(e);
        ok = ok && !rep.failed();
        json claims = json::array();
        for (const auto& c : rep.claims)
            claims.push_back({{"claim", c.claim},
                              {"status", to_string(c.status)},
                              {"details", c.details}});
        entries.push_back({{"name", rep.name},
                           {"failed", rep.failed()},
                           {"claims", claims}});
    }
    return {{"ok", ok}, {"entries", entries}};
}

}  // namespace

PYBIND11_MODULE(_wqs, m) {
    m.doc() = "exact classifier for weighted-quasihomogeneous surface "
              "singularities (JSON-string core bindings)";

    m.def("catalog_path", &default_catalog_path,
          "Path of the catalog honored by all catalog-backed calls.");
    m.def("list_entries", []() {
        json out = json::array();
        for (const auto& e : load_catalog(default_catalog_path())) {
            json weights = json::array();
            for (const auto& w : e.expected.weights) weights.push_back(int_j(w));
            out.push_back({{"name", e.name},
                           {"class", e.class_tag},
                           {"weights", weights},
                           {"degree", int_j(e.expected.degree)}});
        }
        return out.dump();
    });
    m.def("analyze_entry",
          [](const std::string& name) { return analyze_j(resolve_entry(name)).dump(); });
    m.def("analyze_weights", [](const std::vector<long long>& w, long long d) {
        return analyze_j(resolve_weights(w, d)).dump();
    });
    m.def("dual_sets_entry", [](const std::string& name) {
        return dual_sets_j(resolve_entry(name)).dump();
    });
    m.def("search_entry",
          [](const std::string& name, long long lo, long long hi) {
              return search_j(resolve_entry(name), lo, hi).dump();
          },
          py::arg("name"), py::arg("lo") = 1, py::arg("hi") = 0);
    m.def("verify_catalog", []() { return verify_j().dump(); });

    // most recently registered translator runs first, so the derived
    // exception must come after the base
    py::register_exception<Error>(m, "WqsError", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInputError",
                                         PyExc_ValueError);
}
