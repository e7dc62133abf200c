#include "wqs/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wqs/monodromy.hpp"
#include "wqs/orbit.hpp"
#include "wqs/smoothing.hpp"
#include "wqs/wps.hpp"

namespace wqs {

using nlohmann::json;

namespace {

Int to_int(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw SchemaError("expected integer at " + where);
}

json from_int(const Int& v) {
    // JSON numbers up to 2^53 are exact; larger values round-trip as strings.
    if (v >= -(Int(1) << 53) && v <= (Int(1) << 53))
        return json(v.convert_to<long long>());
    return json(v.str());
}

CyclicQuotient quotient_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("r") || !j.contains("c"))
        throw SchemaError("expected {r, c} at " + where);
    return CyclicQuotient::surface(to_int(j.at("r"), where),
                                   Int(1), to_int(j.at("c"), where));
}

json quotient_to_json(const CyclicQuotient& q) {
    return json{{"r", from_int(q.r)}, {"c", from_int(q.a[1])}};
}

std::vector<CyclicQuotient> quotients_from_json(const json& j,
                                                const std::string& where) {
    if (!j.is_array()) throw SchemaError("expected array at " + where);
    std::vector<CyclicQuotient> out;
    for (const auto& e : j) out.push_back(quotient_from_json(e, where));
    return out;
}

json quotients_to_json(const std::vector<CyclicQuotient>& qs) {
    json arr = json::array();
    for (const auto& q : qs) arr.push_back(quotient_to_json(q));
    return arr;
}

std::vector<std::pair<Int, Int>> multiset_key(
    const std::vector<CyclicQuotient>& qs) {
    std::vector<std::pair<Int, Int>> k;
    for (const auto& q : qs) k.emplace_back(q.r, q.a[1]);
    std::sort(k.begin(), k.end());
    return k;
}

std::string quotients_str(const std::vector<CyclicQuotient>& qs) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (i) os << ", ";
        os << qs[i].str();
    }
    os << "}";
    return os.str();
}

}  // namespace

NormalForm CatalogEntry::normal_form() const {
    if (class_tag == "raw") return NormalForm::raw(monomials);
    if (exponents.size() != 3)
        throw SchemaError("entry " + name + ": need three exponents");
    return NormalForm::from_class(normal_form_class_from_string(class_tag),
                                  exponents[0], exponents[1], exponents[2],
                                  extra);
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open catalog file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("catalog parse error: ") + e.what());
    }
    if (!doc.is_array()) throw SchemaError("catalog root must be an array");
    std::vector<CatalogEntry> out;
    std::set<std::string> names;
    for (const auto& j : doc) {
        CatalogEntry e;
        try {
            e.name = j.at("name").get<std::string>();
            if (!names.insert(e.name).second)
                throw SchemaError("duplicate catalog entry: " + e.name);
            for (const auto& a : j.at("aliases"))
                e.aliases.push_back(a.get<std::string>());
            e.class_tag = j.at("class").get<std::string>();
            for (const auto& p : j.at("exponents"))
                e.exponents.push_back(to_int(p, e.name + ".exponents"));
            if (j.contains("extra"))
                e.extra = {to_int(j.at("extra").at("a"), e.name),
                           to_int(j.at("extra").at("b"), e.name)};
            if (j.contains("monomials"))
                for (const auto& m : j.at("monomials")) {
                    Monomial mono;
                    for (const auto& x : m)
                        mono.push_back(to_int(x, e.name + ".monomials"));
                    e.monomials.push_back(std::move(mono));
                }
            const auto& ex = j.at("expected");
            for (const auto& w : ex.at("weights"))
                e.expected.weights.push_back(to_int(w, e.name + ".weights"));
            e.expected.degree = to_int(ex.at("degree"), e.name + ".degree");
            e.expected.B = quotients_from_json(ex.at("B"), e.name + ".B");
            for (const auto& ds : ex.at("dual_sets"))
                e.expected.dual_sets.push_back(
                    quotients_from_json(ds, e.name + ".dual_sets"));
            for (const auto& h : ex.at("hits")) {
                ExpectedHit hit;
                hit.w3 = to_int(h.at("w3"), e.name + ".hits");
                hit.dual_set =
                    quotients_from_json(h.at("dual_set"), e.name + ".hits");
                hit.k3 = h.at("k3").get<bool>();
                e.expected.hits.push_back(std::move(hit));
            }
            e.expected.exponent =
                to_int(ex.at("exponent"), e.name + ".exponent");
            e.expected.c_squared =
                Rat(to_int(ex.at("c_squared").at("num"), e.name),
                    to_int(ex.at("c_squared").at("den"), e.name));
            if (j.contains("yonemura_case"))
                e.yonemura_case = to_int(j.at("yonemura_case"), e.name);
            if (j.contains("notes")) e.notes = j.at("notes").get<std::string>();
        } catch (const json::exception& err) {
            throw SchemaError("catalog entry " +
                              (e.name.empty() ? "<unnamed>" : e.name) + ": " +
                              err.what());
        }
        // Cross-validation at load time: the stored weights must match the
        // normal form.
        WeightSystem ws = solve_weights(e.normal_form());
        if (ws.w != e.expected.weights || ws.d != e.expected.degree)
            throw ConsistencyError("entry " + e.name +
                                   ": stored weights do not match the normal "
                                   "form");
        out.push_back(std::move(e));
    }
    return out;
}

std::string save_catalog(const std::vector<CatalogEntry>& entries) {
    json doc = json::array();
    for (const auto& e : entries) {
        json j;
        j["name"] = e.name;
        j["aliases"] = e.aliases;
        j["class"] = e.class_tag;
        json exps = json::array();
        for (const auto& p : e.exponents) exps.push_back(from_int(p));
        j["exponents"] = exps;
        if (e.extra)
            j["extra"] = {{"a", from_int(e.extra->first)},
                          {"b", from_int(e.extra->second)}};
        if (!e.monomials.empty()) {
            json ms = json::array();
            for (const auto& m : e.monomials) {
                json mono = json::array();
                for (const auto& x : m) mono.push_back(from_int(x));
                ms.push_back(mono);
            }
            j["monomials"] = ms;
        }
        json ex;
        json ws = json::array();
        for (const auto& w : e.expected.weights) ws.push_back(from_int(w));
        ex["weights"] = ws;
        ex["degree"] = from_int(e.expected.degree);
        ex["B"] = quotients_to_json(e.expected.B);
        json dss = json::array();
        for (const auto& ds : e.expected.dual_sets)
            dss.push_back(quotients_to_json(ds));
        ex["dual_sets"] = dss;
        json hits = json::array();
        for (const auto& h : e.expected.hits)
            hits.push_back(json{{"w3", from_int(h.w3)},
                                {"dual_set", quotients_to_json(h.dual_set)},
                                {"k3", h.k3}});
        ex["hits"] = hits;
        ex["exponent"] = from_int(e.expected.exponent);
        ex["c_squared"] = {{"num", from_int(Int(numerator(e.expected.c_squared)))},
                           {"den", from_int(Int(denominator(e.expected.c_squared)))}};
        j["expected"] = ex;
        if (e.yonemura_case) j["yonemura_case"] = from_int(*e.yonemura_case);
        if (!e.notes.empty()) j["notes"] = e.notes;
        doc.push_back(std::move(j));
    }
    return doc.dump(2) + "\n";
}

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::PASS: return "PASS";
        case ClaimStatus::FAIL: return "FAIL";
        case ClaimStatus::KNOWN_ERRATUM: return "KNOWN_ERRATUM";
    }
    return "?";
}

bool VerifyReport::failed() const {
    return std::any_of(claims.begin(), claims.end(), [](const ClaimResult& c) {
        return c.status == ClaimStatus::FAIL;
    });
}

VerifyReport verify_entry(const CatalogEntry& e) {
    VerifyReport rep;
    rep.name = e.name;
    auto add = [&](const std::string& claim, bool ok,
                   const std::string& details) {
        rep.claims.push_back(
            {claim, ok ? ClaimStatus::PASS : ClaimStatus::FAIL, details});
    };
    try {
        NormalForm nf = e.normal_form();
        WeightSystem ws = solve_weights(nf);
        {
            std::ostringstream os;
            os << "computed P(";
            for (std::size_t i = 0; i < ws.w.size(); ++i)
                os << (i ? "," : "") << ws.w[i];
            os << ")/" << ws.d;
            add("weights_degree",
                ws.w == e.expected.weights && ws.d == e.expected.degree,
                os.str());
        }
        MonomialSupport sup = normal_form_support(nf, ws);
        OrbitInvariants inv = orbit_invariants(ws, sup);
        {
            std::vector<CyclicQuotient> B;
            for (const auto& p : inv.pairs) B.push_back(p.type);
            add("B_multiset", multiset_key(B) == multiset_key(e.expected.B),
                "computed " + quotients_str(B));
        }
        add("dolgachev_relations", check_dolgachev(inv),
            "R = " + inv.R.str() + ", b = " + inv.b.str() +
                ", g = " + inv.genus.str());
        {
            std::vector<CyclicQuotient> B;
            for (const auto& p : inv.pairs) B.push_back(p.type);
            auto computed = dual_sets(B);
            bool ok = computed.size() == e.expected.dual_sets.size();
            if (ok) {
                auto sorted_exp = e.expected.dual_sets;
                std::sort(sorted_exp.begin(), sorted_exp.end(),
                          [](const auto& a, const auto& b) {
                              return multiset_key(a) < multiset_key(b);
                          });
                for (std::size_t i = 0; ok && i < computed.size(); ++i)
                    ok = multiset_key(computed[i]) ==
                         multiset_key(sorted_exp[i]);
            }
            add("dual_sets", ok,
                "computed " + std::to_string(computed.size()) + " sets");
        }
        {
            CharPoly cp = char_poly(ws, inv);
            Int m = unipotent_exponent(cp);
            std::ostringstream os;
            os << "deg theta = " << cp.degree << ", m = " << m;
            add("monodromy",
                cp.degree == milnor_number(ws) && m == e.expected.exponent &&
                    m == ws.d,
                os.str());
        }
        {
            std::vector<CyclicQuotient> B;
            for (const auto& p : inv.pairs) B.push_back(p.type);
            auto ds = dual_sets(B);
            auto hits = search_smoothings(ws, sup, ds, 1, ws.d);
            bool ok = hits.size() == e.expected.hits.size();
            std::ostringstream os;
            os << "hits:";
            for (std::size_t i = 0; i < hits.size(); ++i) {
                os << " w3=" << hits[i].w3
                   << (hits[i].report.k3 ? " (K3)" : " (not K3)");
                if (ok) {
                    const auto& exp = e.expected.hits[i];
                    ok = hits[i].w3 == exp.w3 &&
                         multiset_key(ds[hits[i].dual_set_id]) ==
                             multiset_key(exp.dual_set) &&
                         hits[i].report.k3 == exp.k3;
                }
            }
            add("smoothing_search", ok, os.str());
        }
        {
            SmoothingModel sm = SmoothingModel::make(ws, sup, 1);
            CentralFiberReport cf = central_fiber_report(sm, {});
            bool ok = false;
            std::string details = "intersection numbers unavailable";
            if (cf.intersections) {
                const auto& ix = *cf.intersections;
                std::ostringstream os;
                os << "C~^2 = " << to_string(ix.c_tilde_squared)
                   << ", C^2 = " << to_string(ix.c_squared)
                   << ", target = " << to_string(ix.target);
                details = os.str();
                Rat chat = chat_squared(ws, inv.pairs);
                ok = ix.check && ix.c_squared == e.expected.c_squared &&
                     ix.c_tilde_squared + chat == -Rat(ix.n_p);
            }
            add("intersection_numbers", ok, details);
        }
    } catch (const Error& err) {
        rep.claims.push_back(
            {"pipeline", ClaimStatus::FAIL, err.what()});
    }
    if (e.notes.find("erratum") != std::string::npos)
        rep.claims.push_back(
            {"source_errata", ClaimStatus::KNOWN_ERRATUM, e.notes});
    return rep;
}

std::string default_catalog_path() {
    if (const char* env = std::getenv("WPS_CATALOG")) return env;
#ifdef WQS_DEFAULT_CATALOG
    return WQS_DEFAULT_CATALOG;
#else
    return "data/catalog.json";
#endif
}

}  // namespace wqs
