// Acceptance gate: runs the full pipeline against the frozen expectations and
// prints one pass/fail line per criterion.
#include <algorithm>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wqs/catalog.hpp"
#include "wqs/monodromy.hpp"
#include "wqs/smoothing.hpp"

using namespace wqs;

namespace {

int failures = 0;

void report(int id, const std::string& label, bool ok,
            const std::string& detail = "") {
    std::cout << "criterion " << id << " [" << label << "]: "
              << (ok ? "PASS" : "FAIL");
    if (!ok && !detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

const std::vector<std::pair<std::string, long long>> kFourteen = {
    {"E12", 42}, {"E13", 30}, {"E14", 24}, {"Z11", 30}, {"Z12", 22},
    {"Z13", 18}, {"W12", 20}, {"W13", 16}, {"Q10", 24}, {"Q11", 18},
    {"Q12", 15}, {"S11", 16}, {"S12", 13}, {"U12", 12},
};

std::map<std::string, CatalogEntry> by_name() {
    std::map<std::string, CatalogEntry> out;
    for (auto& e : load_catalog(default_catalog_path())) out.emplace(e.name, e);
    return out;
}

std::vector<CyclicQuotient> key(std::vector<CyclicQuotient> v) {
    for (auto& q : v) q = normalize_surface(q);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return a.r != b.r ? a.r < b.r : a.a < b.a;
    });
    return v;
}

struct Pipeline {
    WeightSystem ws;
    MonomialSupport sup;
    OrbitInvariants inv;
    std::vector<std::vector<CyclicQuotient>> ds;
    std::vector<SearchHit> hits;
};

Pipeline run_pipeline(const CatalogEntry& e) {
    Pipeline p;
    NormalForm nf = e.normal_form();
    p.ws = solve_weights(nf);
    p.sup = normal_form_support(nf, p.ws);
    p.inv = orbit_invariants(p.ws, p.sup);
    std::vector<CyclicQuotient> B;
    for (const auto& bp : p.inv.pairs) B.push_back(bp.type);
    p.ds = dual_sets(B);
    p.hits = search_smoothings(p.ws, p.sup, p.ds, 1, p.ws.d);
    return p;
}

HypersurfaceFamily generic_family(std::vector<Int> w, Int d) {
    WeightSystem ws;
    ws.w = w;
    ws.d = d;
    return HypersurfaceFamily::make(std::move(w), d, generic_support(ws));
}

SmoothingModel model_from(const std::vector<Int>& w3base, const Int& d,
                          const Int& w3) {
    WeightSystem base;
    base.w = w3base;
    base.d = d;
    return SmoothingModel::make(base, generic_support(base), w3);
}

}  // namespace

static void criterion1(const std::map<std::string, CatalogEntry>& cat) {
    bool ok = true;
    std::ostringstream why;
    for (const auto& [name, m] : kFourteen) {
        const CatalogEntry& e = cat.at(name);
        Pipeline p = run_pipeline(e);
        std::vector<CyclicQuotient> B;
        for (const auto& bp : p.inv.pairs) B.push_back(bp.type);
        bool entry_ok = p.ws.w == e.expected.weights &&
                        p.ws.d == e.expected.degree &&
                        key(B) == key(e.expected.B);
        // exactly one realizing deformation produces the surface verdict,
        // and it is the weight-1 one with the stored dual multiset
        std::vector<const SearchHit*> k3hits;
        for (const auto& h : p.hits)
            if (h.report.k3) k3hits.push_back(&h);
        entry_ok = entry_ok && k3hits.size() == 1 && k3hits[0]->w3 == 1;
        if (entry_ok) {
            const auto& exp_hit = e.expected.hits.front();
            entry_ok = key(p.ds[k3hits[0]->dual_set_id]) == key(exp_hit.dual_set);
        }
        // unipotent order equals the degree and the frozen table value
        CharPoly cp = char_poly(p.ws, p.inv);
        entry_ok = entry_ok && unipotent_exponent(cp) == p.ws.d &&
                   p.ws.d == m && cp.degree == milnor_number(p.ws);
        if (!entry_ok) {
            ok = false;
            why << name << " ";
        }
    }
    report(1, "fourteen-case reproduction", ok, "mismatch in: " + why.str());
}

static void criterion2(const std::map<std::string, CatalogEntry>& cat) {
    Pipeline p = run_pipeline(cat.at("E12"));
    std::set<std::size_t> realized;
    for (const auto& h : p.hits) realized.insert(h.dual_set_id);
    report(2, "dual-set count and unique realization",
           p.ds.size() == 4 && realized.size() == 1 && p.hits.size() == 1);
}

static void criterion3() {
    bool ok = true;
    std::ostringstream why;

    {  // quasismoothness failure at the last vertex, ambient type reported
        SmoothingModel sm = model_from({12, 8, 3}, 24, 13);
        VertexAnalysis va = vertex_threefold_type(sm, 3);
        if (!(va.on_surface && !va.quasismooth && va.ambient &&
              *va.ambient == CyclicQuotient::threefold(13, 1, 5, 10))) {
            ok = false;
            why << "(12,8,3,13;24) ";
        }
    }
    {  // on-curve threefold quotient that is not canonical
        WeightSystem base;
        base.w = {4, 4, 3};
        base.d = 12;
        auto sup = generic_support(base);
        SmoothingModel sm = SmoothingModel::make(base, sup, 3);
        BSet B = compute_B(base, sup);
        auto ts = on_curve_threefold_types(sm, B);
        bool found = false;
        for (const auto& t : ts)
            if (is_isomorphic_threefold(t.type,
                                        CyclicQuotient::threefold(4, 1, 1, 1)) &&
                reid_tai_class(t.type) == ReidTai::not_canonical &&
                min_age(t.type) == Rat(3, 4))
                found = true;
        if (!found) {
            ok = false;
            why << "(4,4,3,3;12) ";
        }
    }
    {  // quasismooth but with non-du-val excess: no dual set matches
        WeightSystem base;
        base.w = {4, 4, 3};
        base.d = 12;
        auto sup = generic_support(base);
        SmoothingModel sm = SmoothingModel::make(base, sup, 9);
        HypersurfaceFamily H = exceptional_surface(sm);
        auto rep = singular_locus(H);
        BSet B = compute_B(base, sup);
        std::vector<CyclicQuotient> Bq;
        for (const auto& p : B) Bq.push_back(p.type);
        bool any_match = false;
        for (const auto& ds : dual_sets(Bq))
            if (matches_dual_set(rep, ds)) any_match = true;
        auto all = rep.all_types();
        auto has = [&](const CyclicQuotient& q) {
            for (const auto& t : all)
                if (is_isomorphic_surface(t, q)) return true;
            return false;
        };
        if (!(rep.quasismooth && !any_match &&
              has(CyclicQuotient::surface(3, 1, 1)) &&
              has(CyclicQuotient::surface(9, 1, 1)))) {
            ok = false;
            why << "(4,4,3,9;12) ";
        }
    }
    {  // a non-du-val vertex quotient
        auto H = generic_family({8, 4, 3, 13}, 16);
        auto rep = singular_locus(H);
        bool found = false;
        for (const auto& v : rep.vertex_points)
            if (is_isomorphic_surface(v.type, CyclicQuotient::surface(13, 1, 7)) &&
                !is_du_val(v.type))
                found = true;
        if (!found) {
            ok = false;
            why << "(8,4,3,13;16) ";
        }
    }
    {  // contained singular edge
        auto H = generic_family({6, 5, 3, 2}, 15);
        auto rep = singular_locus(H);
        bool edge = std::find(rep.contained_edges.begin(),
                              rep.contained_edges.end(),
                              std::make_pair(0, 3)) != rep.contained_edges.end();
        if (!(edge && !rep.well_formed)) {
            ok = false;
            why << "(6,5,3,2;15) ";
        }
    }
    report(3, "counterexample battery", ok, why.str());
}

static void criterion4(const std::map<std::string, CatalogEntry>& cat) {
    bool ok = true;
    std::ostringstream why;
    {
        Pipeline p = run_pipeline(cat.at("E20"));
        std::set<Int> w3s;
        for (const auto& h : p.hits) w3s.insert(h.w3);
        if (w3s != std::set<Int>{1, 5}) {
            ok = false;
            why << "deep-deformation hit set ";
        }
        VerifyReport rep = verify_entry(cat.at("E20"));
        bool erratum = false;
        for (const auto& c : rep.claims)
            if (c.status == ClaimStatus::KNOWN_ERRATUM) erratum = true;
        if (!erratum || rep.failed()) {
            ok = false;
            why << "erratum reporting ";
        }
    }
    {
        Pipeline p = run_pipeline(cat.at("V18'"));
        std::set<Int> w3s;
        for (const auto& h : p.hits) w3s.insert(h.w3);
        if (w3s != std::set<Int>{1, 2}) {
            ok = false;
            why << "four-branch hit set ";
        }
        for (const auto& h : p.hits) {
            if (h.w3 != 2) continue;
            auto ts = key(h.report.st_report.all_types());
            std::vector<CyclicQuotient> expect;
            for (int i = 0; i < 4; ++i)
                expect.push_back(CyclicQuotient::surface(3, 1, 2));
            for (int i = 0; i < 3; ++i)
                expect.push_back(CyclicQuotient::surface(2, 1, 1));
            if (!(h.report.k3 && ts == key(expect))) {
                ok = false;
                why << "4A2+3A1 surface ";
            }
        }
    }
    report(4, "higher-modality searches", ok, why.str());
}

static void criterion5(const std::map<std::string, CatalogEntry>& cat) {
    bool ok = true;
    std::ostringstream why;
    for (const auto& [name, m] : kFourteen) {
        Pipeline p = run_pipeline(cat.at(name));
        SmoothingModel sm = SmoothingModel::make(p.ws, p.sup, 1);
        CentralFiberReport cf = central_fiber_report(sm, {});
        bool entry_ok = cf.intersections.has_value();
        if (entry_ok) {
            const auto& ix = *cf.intersections;
            Rat chat = chat_squared(p.ws, p.inv.pairs);
            entry_ok = ix.check &&
                       ix.c_squared == Rat(p.ws.d) / Rat(p.ws.product_of_weights()) &&
                       ix.c_tilde_squared + chat == -Rat(ix.n_p);
        }
        if (!entry_ok) {
            ok = false;
            why << name << " ";
        }
    }
    report(5, "intersection numbers", ok, why.str());
}

static void criterion6() {
    bool ok = true;
    std::ostringstream why;
    std::mt19937 rng(4242);

    {  // congruence shortcut vs brute-force age enumeration, exhaustive
        auto igcd = [](long long a, long long b) {
            while (b) {
                long long t = a % b;
                a = b;
                b = t;
            }
            return a;
        };
        bool sub_ok = true;
        for (long long r = 2; r <= 50 && sub_ok; ++r)
            for (long long b = 1; b < r && sub_ok; ++b) {
                if (igcd(b, r) != 1) continue;
                std::set<long long> brute;
                for (long long d2 = 1; d2 < r; ++d2) {
                    if (igcd(d2, r) != 1) continue;
                    bool canonical = true;
                    for (long long j = 1; j < r && canonical; ++j)
                        if (j % r + j * b % r + j * d2 % r < r) canonical = false;
                    if (canonical) brute.insert(d2);
                }
                std::set<long long> got;
                for (const auto& c :
                     dual_candidates(CyclicQuotient::surface(r, 1, b)).duals)
                    got.insert(c.d2.convert_to<long long>());
                if (got != brute) sub_ok = false;
            }
        if (!sub_ok) {
            ok = false;
            why << "dual-candidate shortcut ";
        }
    }
    {  // expansion round-trip
        bool sub_ok = true;
        int done = 0;
        while (done < 1000) {
            Int alpha = 2 + rng() % 2000, beta = 1 + rng() % 1999;
            if (beta >= alpha || gcd(alpha, beta) != 1) continue;
            if (hj_evaluate(hj_expansion(alpha, beta)) != Rat(alpha) / Rat(beta))
                sub_ok = false;
            ++done;
        }
        if (!sub_ok) {
            ok = false;
            why << "expansion round-trip ";
        }
    }
    {  // chain corner vs dense inversion (corner = -beta/alpha for expansions)
        bool sub_ok = true;
        int done = 0;
        while (done < 200) {
            Int alpha = 2 + rng() % 500, beta = 1 + rng() % 499;
            if (beta >= alpha || gcd(alpha, beta) != 1) continue;
            if (chain_inverse_corner(hj_expansion(alpha, beta)) !=
                -Rat(beta) / Rat(alpha))
                sub_ok = false;
            ++done;
        }
        if (!sub_ok) {
            ok = false;
            why << "chain corner ";
        }
    }
    {  // degree and order on random three-power germs
        bool sub_ok = true;
        int done = 0;
        while (done < 100) {
            Int p0 = 2 + rng() % 12, p1 = 2 + rng() % 12, p2 = 2 + rng() % 12;
            auto nf = NormalForm::from_class(NormalFormClass::I, p0, p1, p2);
            WeightSystem ws = solve_weights(nf);
            if (exponent_R(ws) <= 0) continue;
            auto sup = normal_form_support(nf, ws);
            OrbitInvariants inv = orbit_invariants(ws, sup);
            CharPoly cp = char_poly(ws, inv);
            if (cp.degree != milnor_number(ws) || unipotent_exponent(cp) != ws.d)
                sub_ok = false;
            ++done;
        }
        if (!sub_ok) {
            ok = false;
            why << "monodromy degree/order ";
        }
    }
    {  // weight-1 realization pairs branch points with opposite residues
        bool sub_ok = true;
        int done = 0;
        while (done < 50) {
            Int p0 = 3 + rng() % 8, p1 = 3 + rng() % 8, p2 = 3 + rng() % 8;
            auto nf = NormalForm::from_class(NormalFormClass::I, p0, p1, p2);
            WeightSystem ws = solve_weights(nf);
            if (exponent_R(ws) <= 0) continue;
            auto sup = normal_form_support(nf, ws);
            BSet B = compute_B(ws, sup);
            SmoothingModel sm = SmoothingModel::make(ws, sup, 1);
            auto rep = singular_locus(exceptional_surface(sm));
            if (!rep.quasismooth || !rep.well_formed) continue;
            std::vector<CyclicQuotient> expect;
            for (const auto& p : B)
                expect.push_back(CyclicQuotient::surface(
                    p.alpha(), 1, mod_reduce(-p.beta(), p.alpha())));
            if (key(rep.all_types()) != key(expect)) sub_ok = false;
            ++done;
        }
        if (!sub_ok) {
            ok = false;
            why << "dual pairing ";
        }
    }
    report(6, "property suites", ok, why.str());
}

static void criterion7(const std::map<std::string, CatalogEntry>& cat) {
    bool ok = true;
    std::ostringstream why;
    {
        Pipeline p = run_pipeline(cat.at("E12"));
        SmoothingModel sm = SmoothingModel::make(p.ws, p.sup, 1);
        IshiiReport rep = check_canonical_modification(sm, 42);
        if (rep.verdict != IshiiVerdict::canonical_modification) {
            ok = false;
            why << "bounded minimality ";
        }
    }
    for (const auto& [name, m] : kFourteen) {
        Pipeline p = run_pipeline(cat.at(name));
        SmoothingModel sm = SmoothingModel::make(p.ws, p.sup, 1);
        std::vector<Int> w = sm.weights4();
        if (!(in_essential_cone(w, sm.support) &&
              discrepancy(w, sm.support) == -1)) {
            ok = false;
            why << name << " ";
        }
    }
    report(7, "weight vector in the essential cone", ok, why.str());
}

int main() {
    auto cat = by_name();
    criterion1(cat);
    criterion2(cat);
    criterion3();
    criterion4(cat);
    criterion5(cat);
    criterion6();
    criterion7(cat);
    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " criterion(s) failed\n";
    return 1;
}
