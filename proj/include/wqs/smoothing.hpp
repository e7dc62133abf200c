#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wqs/cyclicq.hpp"
#include "wqs/orbit.hpp"
#include "wqs/quasihom.hpp"
#include "wqs/wps.hpp"

namespace wqs {

struct UnmatchedStratum : Error {
    using Error::Error;
};
struct NotQuasismoothAtVertex : Error {
    using Error::Error;
};
struct ZeroDenominator : Error {
    using Error::Error;
};

/// One-parameter smoothing of a 3-variable quasihomogeneous germ: the fourth
/// coordinate t gets weight w3 and the family is the generic degree-d
/// hypersurface in P(w0,w1,w2,w3).
struct SmoothingModel {
    WeightSystem base;          // (w0,w1,w2), degree d
    MonomialSupport base_support;
    Int w3;
    MonomialSupport support;    // 4 variables, degree d

    static SmoothingModel make(const WeightSystem& base,
                               const MonomialSupport& base_support,
                               const Int& w3);
    std::vector<Int> weights4() const;
};

HypersurfaceFamily exceptional_surface(const SmoothingModel& sm);

struct OnCurveType {
    BPoint source;        // the central-curve point this sits over
    CyclicQuotient type;  // normalized threefold quotient
    bool odnc = false;
};

/// Threefold quotient transverse to each central-curve point: edge strata use
/// 1/h(w_k, w_l, beta*w_k) with (w_k, w_l) the two complementary weights, base
/// vertices use the blow-up chart rule.
std::vector<OnCurveType> on_curve_threefold_types(const SmoothingModel& sm,
                                                  const BSet& B);

struct VertexAnalysis {
    int i = -1;
    bool on_surface = false;
    bool quasismooth = true;
    std::optional<CyclicQuotient> type;     // blow-up chart threefold type
    std::optional<CyclicQuotient> ambient;  // 1/w_i(-w_j,-w_k,-w_l) spelling
};

/// Threefold type of the family at vertex P_i, or the quasismoothness failure
/// there with the ambient type still reported.
VertexAnalysis vertex_threefold_type(const SmoothingModel& sm, int i);

/// True iff the singular locus contains Bhat up to surface isomorphism and
/// every excess singularity is Du Val.
bool matches_dual_set(const SingularLocusReport& report,
                      const std::vector<CyclicQuotient>& Bhat);

struct IntersectionNumbers {
    Rat c_tilde_squared;   // self-intersection of C on the resolution of S_T
    Rat c_squared;         // self-intersection of C = S1 * S_T on S_T
    Rat c_squared_alias;   // with the opposite chain orientations
    Rat target;            // d/(w0 w1 w2)
    bool check = false;    // c_squared == target
    bool orientation_ambiguous = false;
    Int n_p = 0;
};

/// Lemma-style computation: C~^2 = d/(w0w1w2) + sum beta/alpha - n_p, then
/// corner corrections from the resolution chains of the on-curve surface
/// singularities of S_T.
IntersectionNumbers intersection_numbers(
    const WeightSystem& base, const BSet& B,
    const std::vector<CyclicQuotient>& st_on_curve);

struct CentralFiberReport {
    BSet s1_singularities;
    SingularLocusReport st_report;
    std::vector<OnCurveType> on_curve;
    std::vector<VertexAnalysis> vertices;
    std::optional<std::size_t> matched_dual_set;
    bool k3 = false;
    std::optional<IntersectionNumbers> intersections;
    std::vector<std::string> notes;
};

CentralFiberReport central_fiber_report(
    const SmoothingModel& sm,
    const std::vector<std::vector<CyclicQuotient>>& dual_sets);

struct SearchHit {
    Int w3;
    std::size_t dual_set_id;
    CentralFiberReport report;
};

/// Scans w3 over [lo, hi]; emits every (w3, dual set) whose generic family is
/// well-formed, quasismooth, and realizes the dual set.
std::vector<SearchHit> search_smoothings(
    const WeightSystem& base, const MonomialSupport& base_support,
    const std::vector<std::vector<CyclicQuotient>>& dual_sets, const Int& lo,
    const Int& hi);

/// a(s) = sum s_i - min_{a in support} <s, a> - 1.
Int discrepancy(const std::vector<Int>& s, const MonomialSupport& support);

/// s >= 0, s != 0, and a(s) <= -1.
bool in_essential_cone(const std::vector<Int>& s,
                       const MonomialSupport& support);

/// w_i/(w(g)-w(1)+1) <= s_i/(s(g)-s(1)+1) for all i.
bool g_order_leq(const std::vector<Int>& w, const std::vector<Int>& s,
                 const MonomialSupport& support);

/// w_i/w(g) <= s_i/s(g) for all i.
bool g_order_preceq(const std::vector<Int>& w, const std::vector<Int>& s,
                    const MonomialSupport& support);

struct MsReport {
    std::vector<Rat> values;  // per-coordinate evaluation
    bool consistent = false;  // all coordinates agree
};

/// m_s = s_i/w_i * (w(g)-w(1)+1) - (s(g)-s(1)+1), evaluated per coordinate.
MsReport m_s(const std::vector<Int>& s, const std::vector<Int>& w,
             const MonomialSupport& support);

enum class IshiiVerdict { canonical_modification, not_minimal, inconclusive };

std::string to_string(IshiiVerdict v);

struct IshiiReport {
    bool w_in_cone = false;
    Int discrepancy_w = 0;
    IshiiVerdict verdict = IshiiVerdict::inconclusive;
    Int bound = 0;
    Int cone_vectors_tested = 0;
    std::optional<std::vector<Int>> counterexample;  // fails both orders
    std::vector<std::string> rt_cross_report;  // Reid-Tai of on-curve types
};

/// Bounded check that the weight vector is minimal in the essential cone for
/// both g-orders, i.e. that the weighted blow-up is a canonical modification
/// as far as vectors with coordinates <= bound can tell.
IshiiReport check_canonical_modification(const SmoothingModel& sm,
                                         const Int& bound);

}  // namespace wqs
