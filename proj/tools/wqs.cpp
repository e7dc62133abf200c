// Command-line front end: classifies weighted-quasihomogeneous surface
// singularities, enumerates dual sets, and verifies the bundled catalog.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wqs/catalog.hpp"
#include "wqs/cyclicq.hpp"
#include "wqs/exactmath.hpp"
#include "wqs/monodromy.hpp"
#include "wqs/orbit.hpp"
#include "wqs/quasihom.hpp"
#include "wqs/smoothing.hpp"
#include "wqs/wps.hpp"

using nlohmann::json;
using namespace wqs;

namespace {

json rat_json(const Rat& q) { return json(to_string(q)); }

json quotient_json(const CyclicQuotient& q) {
    json a = json::array();
    for (const auto& x : q.a) a.push_back(x.str());
    return json{{"r", q.r.str()}, {"a", a}, {"str", q.str()}};
}

json quotients_json(const std::vector<CyclicQuotient>& qs) {
    json arr = json::array();
    for (const auto& q : qs) arr.push_back(quotient_json(q));
    return arr;
}

struct InputSpec {
    std::string name;
    std::string cls;
    std::vector<std::string> exponents_s;
    std::vector<std::string> extra_s;
    std::vector<std::string> weights_s;
    std::string degree_s;
    std::string catalog_path;

    std::vector<Int> exponents() const { return to_ints(exponents_s); }
    std::vector<Int> extra() const { return to_ints(extra_s); }
    std::vector<Int> weights() const { return to_ints(weights_s); }
    Int degree() const { return degree_s.empty() ? Int(0) : Int(degree_s); }

    int sources() const {
        return int(!name.empty()) + int(!cls.empty()) +
               int(!weights_s.empty());
    }

  private:
    static std::vector<Int> to_ints(const std::vector<std::string>& v) {
        std::vector<Int> out;
        for (const auto& s : v) out.emplace_back(s);
        return out;
    }
};

struct Resolved {
    WeightSystem ws;
    MonomialSupport support;
    std::optional<CatalogEntry> entry;
};

std::vector<CatalogEntry> load_entries(const InputSpec& in) {
    return load_catalog(in.catalog_path.empty() ? default_catalog_path()
                                                : in.catalog_path);
}

Resolved resolve(const InputSpec& in) {
    if (in.sources() != 1)
        throw CLI::ValidationError(
            "input", "give exactly one of: entry name, --class, --weights");
    Resolved r;
    if (!in.name.empty()) {
        for (auto& e : load_entries(in)) {
            bool match = e.name == in.name;
            for (const auto& a : e.aliases) match = match || a == in.name;
            if (match) {
                NormalForm nf = e.normal_form();
                r.ws = solve_weights(nf);
                r.support = normal_form_support(nf, r.ws);
                r.entry = std::move(e);
                return r;
            }
        }
        throw CLI::ValidationError("input", "unknown catalog entry: " + in.name);
    }
    if (!in.cls.empty()) {
        auto exps = in.exponents();
        if (exps.size() != 3)
            throw CLI::ValidationError("input", "--exponents needs p0,p1,p2");
        std::optional<std::pair<Int, Int>> extra;
        auto ex = in.extra();
        if (!ex.empty()) {
            if (ex.size() != 2)
                throw CLI::ValidationError("input", "--extra needs a,b");
            extra = {ex[0], ex[1]};
        }
        NormalForm nf = NormalForm::from_class(
            normal_form_class_from_string(in.cls), exps[0], exps[1], exps[2],
            extra);
        r.ws = solve_weights(nf);
        r.support = normal_form_support(nf, r.ws);
        return r;
    }
    auto ws = in.weights();
    if (ws.size() != 3 && ws.size() != 4)
        throw CLI::ValidationError("input", "--weights needs w0,w1,w2");
    if (in.degree() <= 0)
        throw CLI::ValidationError("input", "--degree must be positive");
    r.ws = WeightSystem{ws, in.degree()};
    r.support = generic_support(r.ws);
    return r;
}

std::vector<CyclicQuotient> b_types(const BSet& B) {
    std::vector<CyclicQuotient> out;
    for (const auto& p : B) out.push_back(p.type);
    return out;
}

json intersections_json(const IntersectionNumbers& ix) {
    return json{{"c_tilde_squared", rat_json(ix.c_tilde_squared)},
                {"c_squared", rat_json(ix.c_squared)},
                {"c_squared_alias", rat_json(ix.c_squared_alias)},
                {"target", rat_json(ix.target)},
                {"check", ix.check},
                {"orientation_ambiguous", ix.orientation_ambiguous},
                {"n_p", ix.n_p.str()}};
}

json singular_locus_json(const SingularLocusReport& rep) {
    json edges = json::array();
    for (const auto& e : rep.edge_points)
        edges.push_back(json{{"edge", {e.i, e.j}},
                             {"count", e.count.str()},
                             {"type", quotient_json(e.type)}});
    json verts = json::array();
    for (const auto& v : rep.vertex_points)
        verts.push_back(json{{"vertex", v.i},
                             {"type", quotient_json(v.type)},
                             {"eliminated_with", v.eliminated}});
    json contained = json::array();
    for (const auto& [i, j] : rep.contained_edges)
        contained.push_back(json::array({i, j}));
    return json{{"quasismooth", rep.quasismooth},
                {"well_formed", rep.well_formed},
                {"quasismooth_witness", rep.quasismooth_witness},
                {"edge_points", edges},
                {"vertex_points", verts},
                {"contained_edges", contained},
                {"review_flags", rep.review_flags}};
}

json hit_json(const SearchHit& h,
              const std::vector<std::vector<CyclicQuotient>>& ds) {
    json j;
    j["w3"] = h.w3.str();
    j["dual_set_id"] = h.dual_set_id;
    j["dual_set"] = quotients_json(ds[h.dual_set_id]);
    j["k3"] = h.report.k3;
    j["singular_locus"] = singular_locus_json(h.report.st_report);
    json oc = json::array();
    for (const auto& t : h.report.on_curve)
        oc.push_back(json{{"type", quotient_json(t.type)}, {"odnc", t.odnc}});
    j["on_curve_threefold_types"] = oc;
    if (h.report.intersections)
        j["intersections"] = intersections_json(*h.report.intersections);
    j["notes"] = h.report.notes;
    return j;
}

void emit(const json& j, bool json_mode, const std::string& human) {
    if (json_mode)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << human;
}

std::string render_quotients(const std::vector<CyclicQuotient>& qs) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < qs.size(); ++i)
        os << (i ? ", " : "") << qs[i].str();
    os << "}";
    return os.str();
}

int cmd_analyze(const InputSpec& in, bool json_mode) {
    Resolved r = resolve(in);
    OrbitInvariants inv = orbit_invariants(r.ws, r.support);
    Rat chat = chat_squared(r.ws, inv.pairs);
    json j;
    json w = json::array();
    for (const auto& wi : r.ws.w) w.push_back(wi.str());
    j["weights"] = w;
    j["degree"] = r.ws.d.str();
    j["milnor_number"] = milnor_number(r.ws).str();
    j["B"] = quotients_json(b_types(inv.pairs));
    j["chat_squared"] = rat_json(chat);
    j["exponent_R"] = inv.R.str();
    j["genus"] = inv.genus.str();
    j["b"] = inv.b.str();
    j["dolgachev_check"] = check_dolgachev(inv);
    std::ostringstream os;
    os << "weights: (" << r.ws.w[0] << "," << r.ws.w[1] << "," << r.ws.w[2]
       << ")  degree: " << r.ws.d << "\n"
       << "Milnor number: " << milnor_number(r.ws) << "\n"
       << "B: " << render_quotients(b_types(inv.pairs)) << "\n"
       << "Chat^2: " << to_string(chat) << "  R: " << inv.R
       << "  genus: " << inv.genus << "  b: " << inv.b << "\n";
    emit(j, json_mode, os.str());
    return 0;
}

int cmd_duals(const InputSpec& in, bool json_mode) {
    Resolved r = resolve(in);
    OrbitInvariants inv = orbit_invariants(r.ws, r.support);
    auto B = b_types(inv.pairs);
    json j;
    json cands = json::array();
    std::ostringstream os;
    for (const auto& t : B) {
        DualOptions opts = dual_candidates(t);
        json ds = json::array();
        os << opts.base.str() << " duals:";
        for (const auto& d : opts.duals) {
            ds.push_back(json{{"d2", d.d2.str()},
                              {"tag", d.tag},
                              {"reid_tai", to_string(d.rt)}});
            os << " " << d.d2 << " (" << d.tag << ", " << to_string(d.rt)
               << ")";
        }
        os << "\n";
        cands.push_back(json{{"base", quotient_json(opts.base)},
                             {"candidates", ds}});
    }
    j["candidates"] = cands;
    auto sets = dual_sets(B);
    json js = json::array();
    os << sets.size() << " dual sets:\n";
    for (const auto& s : sets) {
        js.push_back(quotients_json(s));
        os << "  " << render_quotients(s) << "\n";
    }
    j["dual_sets"] = js;
    emit(j, json_mode, os.str());
    return 0;
}

int cmd_monodromy(const InputSpec& in, bool json_mode) {
    Resolved r = resolve(in);
    OrbitInvariants inv = orbit_invariants(r.ws, r.support);
    CharPoly cp = char_poly(r.ws, inv);
    json j;
    json facs = json::array();
    std::ostringstream theta;
    for (const auto& [k, m] : cp.factors.factors) {
        facs.push_back(json{{"k", k.str()}, {"mult", m.str()}});
        theta << "(1-t^" << k << ")^" << m << " ";
    }
    j["factors"] = facs;
    json cyc = json::object();
    for (const auto& [e, c] : cp.cyclotomic) cyc[e.str()] = c.str();
    j["cyclotomic_exponents"] = cyc;
    j["degree"] = cp.degree.str();
    Int m = unipotent_exponent(cp);
    j["unipotent_exponent"] = m.str();
    j["exponent_equals_degree"] = (m == r.ws.d);
    std::ostringstream os;
    os << "theta(t) = " << theta.str() << "\n"
       << "degree: " << cp.degree << "  unipotent exponent: " << m << "\n";
    emit(j, json_mode, os.str());
    return 0;
}

std::pair<Int, Int> parse_range(const std::string& s, const Int& d) {
    if (s.empty()) return {Int(1), d};
    auto pos = s.find("..");
    if (pos == std::string::npos)
        throw CLI::ValidationError("--w3-range", "expected A..B");
    return {Int(s.substr(0, pos)), Int(s.substr(pos + 2))};
}

int cmd_search(const InputSpec& in, bool json_mode, const std::string& range) {
    Resolved r = resolve(in);
    OrbitInvariants inv = orbit_invariants(r.ws, r.support);
    auto B = b_types(inv.pairs);
    auto ds = dual_sets(B);
    auto [lo, hi] = parse_range(range, r.ws.d);
    auto hits = search_smoothings(r.ws, r.support, ds, lo, hi);
    json j;
    j["w3_range"] = {{"lo", lo.str()}, {"hi", hi.str()}};
    json jh = json::array();
    std::ostringstream os;
    os << hits.size() << " hit(s) for w3 in " << lo << ".." << hi << ":\n";
    for (const auto& h : hits) {
        jh.push_back(hit_json(h, ds));
        os << "  w3 = " << h.w3 << "  dual set "
           << render_quotients(ds[h.dual_set_id])
           << (h.report.k3 ? "  [K3]" : "  [not K3]") << "\n";
    }
    j["hits"] = jh;
    emit(j, json_mode, os.str());
    return 0;
}

int cmd_intersect(const InputSpec& in, bool json_mode, const Int& w3) {
    Resolved r = resolve(in);
    SmoothingModel sm = SmoothingModel::make(r.ws, r.support, w3);
    CentralFiberReport cf = central_fiber_report(sm, {});
    json j;
    std::ostringstream os;
    if (!cf.intersections) {
        j["error"] = "intersection numbers unavailable";
        j["notes"] = cf.notes;
        os << "intersection numbers unavailable\n";
        emit(j, json_mode, os.str());
        return 1;
    }
    j = intersections_json(*cf.intersections);
    const auto& ix = *cf.intersections;
    os << "C~^2 = " << to_string(ix.c_tilde_squared)
       << "\nC^2 = " << to_string(ix.c_squared)
       << (ix.orientation_ambiguous
               ? " (alias " + to_string(ix.c_squared_alias) + ")"
               : "")
       << "\ntarget d/(w0 w1 w2) = " << to_string(ix.target)
       << "\ncheck: " << (ix.check ? "true" : "false") << "\n";
    emit(j, json_mode, os.str());
    return ix.check ? 0 : 1;
}

int cmd_ishii(const InputSpec& in, bool json_mode, const Int& w3,
              const Int& bound) {
    Resolved r = resolve(in);
    SmoothingModel sm = SmoothingModel::make(r.ws, r.support, w3);
    Int b = bound > 0 ? bound : r.ws.d;
    IshiiReport rep = check_canonical_modification(sm, b);
    json j;
    j["w_in_cone"] = rep.w_in_cone;
    j["discrepancy_w"] = rep.discrepancy_w.str();
    j["verdict"] = to_string(rep.verdict);
    j["bound"] = rep.bound.str();
    j["cone_vectors_tested"] = rep.cone_vectors_tested.str();
    if (rep.counterexample) {
        json c = json::array();
        for (const auto& x : *rep.counterexample) c.push_back(x.str());
        j["counterexample"] = c;
    }
    j["cross_report"] = rep.rt_cross_report;
    std::ostringstream os;
    os << "w in essential cone: " << (rep.w_in_cone ? "yes" : "no")
       << "  a(w) = " << rep.discrepancy_w << "\n"
       << "verdict: " << to_string(rep.verdict) << " (bound " << rep.bound
       << ", " << rep.cone_vectors_tested << " cone vectors tested)\n";
    for (const auto& s : rep.rt_cross_report) os << "note: " << s << "\n";
    emit(j, json_mode, os.str());
    return 0;
}

int cmd_verify(const InputSpec& in, bool json_mode, bool /*all*/) {
    auto entries = load_entries(in);
    std::vector<CatalogEntry> selected;
    if (!in.name.empty()) {
        for (auto& e : entries)
            if (e.name == in.name) selected.push_back(e);
        if (selected.empty())
            throw CLI::ValidationError("input",
                                       "unknown catalog entry: " + in.name);
    } else {
        selected = entries;
    }
    bool any_fail = false;
    json j = json::array();
    std::ostringstream os;
    for (const auto& e : selected) {
        VerifyReport rep = verify_entry(e);
        any_fail = any_fail || rep.failed();
        json claims = json::array();
        os << rep.name << ":\n";
        for (const auto& c : rep.claims) {
            claims.push_back(json{{"claim", c.claim},
                                  {"status", to_string(c.status)},
                                  {"details", c.details}});
            os << "  [" << to_string(c.status) << "] " << c.claim;
            if (!c.details.empty()) os << " — " << c.details;
            os << "\n";
        }
        j.push_back(json{{"name", rep.name}, {"claims", claims}});
    }
    emit(j, json_mode, os.str());
    return any_fail ? 1 : 0;
}

int cmd_list(const InputSpec& in, bool json_mode) {
    auto entries = load_entries(in);
    json j = json::array();
    std::ostringstream os;
    for (const auto& e : entries) {
        json w = json::array();
        for (const auto& wi : e.expected.weights) w.push_back(wi.str());
        json a = e.aliases;
        j.push_back(json{{"name", e.name},
                         {"aliases", a},
                         {"weights", w},
                         {"degree", e.expected.degree.str()}});
        os << e.name << "  P(";
        for (std::size_t i = 0; i < e.expected.weights.size(); ++i)
            os << (i ? "," : "") << e.expected.weights[i];
        os << ",1)/" << e.expected.degree << "  aliases:";
        for (const auto& al : e.aliases) os << " " << al;
        os << "\n";
    }
    emit(j, json_mode, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted-quasihomogeneous surface singularity classifier"};
    app.require_subcommand(1);

    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit machine-readable JSON");

    InputSpec in;
    std::string w3_range;
    std::string w3_str = "1";
    std::string bound_str = "0";
    bool all = false;

    auto add_input = [&](CLI::App* sub, bool positional = true) {
        if (positional) sub->add_option("entry", in.name, "catalog entry name");
        sub->add_option("--class", in.cls, "normal-form class (I..VII)");
        sub->add_option("--exponents", in.exponents_s, "p0,p1,p2")
            ->delimiter(',');
        sub->add_option("--extra", in.extra_s, "a,b for classes VI/VII")
            ->delimiter(',');
        sub->add_option("--weights", in.weights_s, "w0,w1,w2")->delimiter(',');
        sub->add_option("--degree", in.degree_s, "weighted degree d");
        sub->add_option("--catalog", in.catalog_path, "catalog file override");
    };

    auto* analyze = app.add_subcommand("analyze", "orbit invariants");
    add_input(analyze);
    auto* duals = app.add_subcommand("duals", "dual candidates and dual sets");
    add_input(duals);
    auto* monodromy = app.add_subcommand("monodromy",
                                         "characteristic polynomial");
    add_input(monodromy);
    auto* search = app.add_subcommand("search", "smoothing search over w3");
    add_input(search);
    search->add_option("--w3-range", w3_range, "A..B (default 1..d)");
    auto* intersect = app.add_subcommand("intersect", "intersection numbers");
    add_input(intersect);
    intersect->add_option("--w3", w3_str, "fourth weight (default 1)");
    auto* ishii = app.add_subcommand("ishii", "canonical-modification check");
    add_input(ishii);
    ishii->add_option("--w3", w3_str, "fourth weight (default 1)");
    ishii->add_option("--bound", bound_str, "enumeration bound (default d)");
    auto* verify = app.add_subcommand("verify", "verify catalog expectations");
    add_input(verify);
    verify->add_flag("--all", all, "verify every entry (default)");
    auto* list = app.add_subcommand("list", "list catalog entries");
    add_input(list, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return cmd_analyze(in, json_mode);
        if (*duals) return cmd_duals(in, json_mode);
        if (*monodromy) return cmd_monodromy(in, json_mode);
        if (*search) return cmd_search(in, json_mode, w3_range);
        if (*intersect) return cmd_intersect(in, json_mode, Int(w3_str));
        if (*ishii)
            return cmd_ishii(in, json_mode, Int(w3_str), Int(bound_str));
        if (*verify) return cmd_verify(in, json_mode, all);
        if (*list) return cmd_list(in, json_mode);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
