#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wqs/cyclicq.hpp"
#include "wqs/quasihom.hpp"

namespace wqs {

struct WeightedProjectiveSpace {
    std::vector<Int> w;  // n+1 weights, n in {2, 3}
};

struct HypersurfaceFamily {
    WeightedProjectiveSpace ambient;
    Int d;
    MonomialSupport support;

    static HypersurfaceFamily make(std::vector<Int> weights, Int d,
                                   MonomialSupport support);
    WeightSystem weight_system() const;
};

struct EdgePointGroup {
    int i, j;            // edge P_i P_j
    Int count;           // number of singular points on the edge
    CyclicQuotient type; // surface type 1/h(1,c)
};

struct VertexPoint {
    int i;                // vertex P_i
    CyclicQuotient type;  // surface transverse type, normalized
    int eliminated;       // partner variable k of the x_i^a x_k monomial
};

struct SingularLocusReport {
    bool quasismooth = true;
    bool well_formed = true;
    std::vector<int> quasismooth_witness;          // failing variable subset
    std::vector<EdgePointGroup> edge_points;
    std::vector<VertexPoint> vertex_points;
    std::vector<std::pair<int, int>> contained_edges;
    std::vector<std::string> review_flags;

    /// Full singularity multiset (edge points expanded by count).
    std::vector<CyclicQuotient> all_types() const;
    /// Types supported on strata of the first three coordinates only.
    std::vector<CyclicQuotient> types_on_base_strata() const;
};

bool is_well_formed_space(const WeightedProjectiveSpace& P);

bool edge_contained(const HypersurfaceFamily& H, int i, int j);

/// Ambient well-formed, every weight triple coprime, and no singular edge
/// contained in the hypersurface.
bool is_well_formed_hypersurface(const HypersurfaceFamily& H);

/// Empty when quasismooth; otherwise the first failing variable subset of the
/// subset criterion.
std::optional<std::vector<int>> quasismooth_witness(const HypersurfaceFamily& H);

bool is_quasismooth(const HypersurfaceFamily& H);

SingularLocusReport singular_locus(const HypersurfaceFamily& H);

/// Quasismooth + well-formed + sum of weights = d + singularities no worse
/// than Du Val or the allowed multiset.
bool is_k3(const HypersurfaceFamily& H,
           const std::vector<CyclicQuotient>& allowed = {});

struct CurvePoint {
    Int alpha;            // stabilizer order
    int edge_i = -1, edge_j = -1;  // stratum: edge, or
    int vertex = -1;               // vertex index
};

/// Stabilizer orders of the singular points of the quotient curve in
/// P(w0,w1,w2) cut out by a 3-variable support (n = 2 analogue of
/// singular_locus, shared machinery for the orbit invariants).
std::vector<CurvePoint> curve_points(const WeightSystem& ws,
                                     const MonomialSupport& support);

}  // namespace wqs
