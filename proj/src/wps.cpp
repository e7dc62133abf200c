#include "wqs/wps.hpp"

#include <algorithm>
#include <sstream>

namespace wqs {

HypersurfaceFamily HypersurfaceFamily::make(std::vector<Int> weights, Int d,
                                            MonomialSupport support) {
    if (weights.size() != 3 && weights.size() != 4)
        throw InvalidInput("hypersurface: need 3 or 4 weights");
    if (d <= 0) throw InvalidInput("hypersurface: degree must be positive");
    if (support.monomials.empty())
        throw EmptySupport("hypersurface: empty support");
    if (support.nvars != static_cast<int>(weights.size()))
        throw InvalidInput("hypersurface: support/weights size mismatch");
    HypersurfaceFamily H{{std::move(weights)}, std::move(d), std::move(support)};
    WeightSystem ws = H.weight_system();
    for (const auto& m : H.support.monomials)
        if (ws.weighted_degree(m) != H.d)
            throw InvalidInput("hypersurface: off-degree monomial in support");
    return H;
}

WeightSystem HypersurfaceFamily::weight_system() const {
    return {ambient.w, d};
}

std::vector<CyclicQuotient> SingularLocusReport::all_types() const {
    std::vector<CyclicQuotient> out;
    for (const auto& e : edge_points)
        for (Int c = 0; c < e.count; ++c) out.push_back(e.type);
    for (const auto& v : vertex_points) out.push_back(v.type);
    return out;
}

std::vector<CyclicQuotient> SingularLocusReport::types_on_base_strata() const {
    std::vector<CyclicQuotient> out;
    for (const auto& e : edge_points) {
        if (e.i > 2 || e.j > 2) continue;
        for (Int c = 0; c < e.count; ++c) out.push_back(e.type);
    }
    for (const auto& v : vertex_points)
        if (v.i <= 2) out.push_back(v.type);
    return out;
}

bool is_well_formed_space(const WeightedProjectiveSpace& P) {
    const std::size_t n = P.w.size();
    for (std::size_t skip = 0; skip < n; ++skip) {
        Int g = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (i != skip) g = gcd(g, P.w[i]);
        if (g != 1) return false;
    }
    return true;
}

bool edge_contained(const HypersurfaceFamily& H, int i, int j) {
    if (i == j) throw InvalidInput("edge_contained: need distinct vertices");
    return !H.support.touches_edge(i, j);
}

bool is_well_formed_hypersurface(const HypersurfaceFamily& H) {
    const auto& w = H.ambient.w;
    if (w.size() != 4)
        throw InvalidInput("is_well_formed_hypersurface: need 4 weights");
    if (!is_well_formed_space(H.ambient)) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (gcd(gcd(w[i], w[j]), w[k]) != 1) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (gcd(w[i], w[j]) > 1 && edge_contained(H, i, j)) return false;
    return true;
}

namespace {

/// Variable subsets ordered by size then bitmask, so the witness is the
/// smallest failing subset.
std::vector<std::vector<int>> subsets_by_size(int n) {
    std::vector<std::vector<int>> out;
    for (int size = 1; size <= n; ++size)
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> vars;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) vars.push_back(i);
            if (static_cast<int>(vars.size()) == size) out.push_back(vars);
        }
    return out;
}

/// External variables e for which some support monomial is (monomial in
/// `vars`) * x_e with exponent exactly 1 on x_e.
std::vector<int> escaping_variables(const MonomialSupport& sup,
                                    const std::vector<int>& vars) {
    std::vector<int> es;
    for (const auto& m : sup.monomials) {
        int external = -1;
        bool ok = true;
        for (int k = 0; ok && k < sup.nvars; ++k) {
            if (m[k] == 0) continue;
            if (std::find(vars.begin(), vars.end(), k) != vars.end()) continue;
            if (m[k] == 1 && external < 0)
                external = k;
            else
                ok = false;
        }
        if (ok && external >= 0 &&
            std::find(es.begin(), es.end(), external) == es.end())
            es.push_back(external);
    }
    return es;
}

struct QuasismoothResult {
    std::optional<std::vector<int>> witness;
    bool multi_variable_clause_used = false;  // clause (b) decisive, |I| >= 2
};

QuasismoothResult quasismooth_scan(const MonomialSupport& sup) {
    QuasismoothResult res;
    for (const auto& vars : subsets_by_size(sup.nvars)) {
        if (sup.has_monomial_within(vars)) continue;
        auto es = escaping_variables(sup, vars);
        if (es.size() < vars.size()) {
            res.witness = vars;
            return res;
        }
        if (vars.size() >= 2) res.multi_variable_clause_used = true;
    }
    return res;
}

}  // namespace

std::optional<std::vector<int>> quasismooth_witness(const HypersurfaceFamily& H) {
    return quasismooth_scan(H.support).witness;
}

bool is_quasismooth(const HypersurfaceFamily& H) {
    return !quasismooth_witness(H).has_value();
}

SingularLocusReport singular_locus(const HypersurfaceFamily& H) {
    const auto& w = H.ambient.w;
    if (w.size() != 4) throw InvalidInput("singular_locus: need 4 weights");
    SingularLocusReport rep;

    QuasismoothResult qs = quasismooth_scan(H.support);
    if (qs.witness) {
        rep.quasismooth = false;
        rep.quasismooth_witness = *qs.witness;
        rep.well_formed = is_well_formed_hypersurface(H);
        return rep;
    }
    if (qs.multi_variable_clause_used)
        rep.review_flags.push_back(
            "quasismoothness decided by a multi-variable escape clause");

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (gcd(w[i], w[j]) > 1 && edge_contained(H, i, j))
                rep.contained_edges.emplace_back(i, j);
    rep.well_formed = is_well_formed_hypersurface(H);
    if (!is_well_formed_space(H.ambient)) {
        // three weights share a factor; the transverse-type formulas below
        // assume a well-formed ambient, so stop at the verdict
        return rep;
    }

    // Singular points on edges P_i P_j with h = gcd(w_i, w_j) > 1.
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Int h = gcd(w[i], w[j]);
            if (h <= 1) continue;
            if (edge_contained(H, i, j)) continue;
            Int count = h * H.d / (w[i] * w[j]);  // floor
            if (count < 1) continue;
            int k = -1, l = -1;
            for (int v = 0; v < 4; ++v)
                if (v != i && v != j) (k < 0 ? k : l) = v;
            Int c = mod_reduce(w[l] * mod_inverse(mod_reduce(w[k], h), h), h);
            rep.edge_points.push_back(
                {i, j, count, CyclicQuotient::surface(h, 1, c)});
            if ((h * H.d) % (w[i] * w[j]) != 0) {
                bool vertex_on_H = !H.support.has_pure_power(i) ||
                                   !H.support.has_pure_power(j);
                if (vertex_on_H) {
                    std::ostringstream os;
                    os << "edge (" << i << "," << j
                       << "): non-integral point count with a vertex of the "
                          "edge on the surface";
                    rep.review_flags.push_back(os.str());
                }
            }
        }

    // Singular points at vertices P_i the surface passes through.
    for (int i = 0; i < 4; ++i) {
        if (w[i] == 1) continue;
        if (H.support.has_pure_power(i)) continue;  // surface misses P_i
        auto partners = H.support.eliminating_partners(i);
        if (partners.empty())
            throw Error("singular_locus: vertex without eliminating monomial "
                        "on a quasismooth surface");
        std::optional<CyclicQuotient> type;
        bool smooth_seen = false;
        for (int k : partners) {
            int j = -1, l = -1;
            for (int v = 0; v < 4; ++v)
                if (v != i && v != k) (j < 0 ? j : l) = v;
            CyclicQuotient red = remove_reflections_surface(
                CyclicQuotient::surface(w[i], -w[j], -w[l]));
            if (red.r == 1) {
                smooth_seen = true;
                continue;
            }
            CyclicQuotient t = normalize_surface(red);
            if (!type)
                type = t;
            else if (!(t == *type)) {
                std::ostringstream os;
                os << "vertex P_" << i
                   << ": eliminating partners give non-isomorphic transverse "
                      "types "
                   << type->str() << " vs " << t.str();
                rep.review_flags.push_back(os.str());
            }
        }
        if (type && smooth_seen) {
            std::ostringstream os;
            os << "vertex P_" << i
               << ": eliminating partners disagree on smoothness";
            rep.review_flags.push_back(os.str());
        }
        if (type) rep.vertex_points.push_back({i, *type, partners.front()});
    }
    return rep;
}

bool is_k3(const HypersurfaceFamily& H,
           const std::vector<CyclicQuotient>& allowed) {
    const auto& w = H.ambient.w;
    if (w.size() != 4) throw InvalidInput("is_k3: need 4 weights");
    Int sum = 0;
    for (const auto& wi : w) sum += wi;
    if (sum != H.d) return false;
    SingularLocusReport rep = singular_locus(H);
    if (!rep.quasismooth || !rep.well_formed) return false;
    std::vector<CyclicQuotient> budget = allowed;
    for (const auto& t : rep.all_types()) {
        auto it = std::find_if(budget.begin(), budget.end(),
                               [&](const CyclicQuotient& a) {
                                   return is_isomorphic_surface(a, t);
                               });
        if (it != budget.end()) {
            budget.erase(it);
            continue;
        }
        if (!is_du_val(t)) return false;
    }
    return true;
}

std::vector<CurvePoint> curve_points(const WeightSystem& ws,
                                     const MonomialSupport& support) {
    if (ws.w.size() != 3 || support.nvars != 3)
        throw InvalidInput("curve_points: need 3 variables");
    std::vector<CurvePoint> out;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Int h = gcd(ws.w[i], ws.w[j]);
            if (h <= 1) continue;
            if (!support.touches_edge(i, j))
                throw InvalidInput("curve_points: contained singular edge");
            Int count = h * ws.d / (ws.w[i] * ws.w[j]);  // floor
            for (Int c = 0; c < count; ++c) {
                CurvePoint p;
                p.alpha = h;
                p.edge_i = i;
                p.edge_j = j;
                out.push_back(p);
            }
        }
    for (int i = 0; i < 3; ++i) {
        if (ws.w[i] == 1) continue;
        if (support.has_pure_power(i)) continue;
        CurvePoint p;
        p.alpha = ws.w[i];
        p.vertex = i;
        out.push_back(p);
    }
    return out;
}

}  // namespace wqs
