#pragma once

#include <vector>

#include "wqs/cyclicq.hpp"
#include "wqs/quasihom.hpp"
#include "wqs/wps.hpp"

namespace wqs {

struct ExponentNotInvertible : Error {
    using Error::Error;
};
struct NoConsistentGenus : Error {
    using Error::Error;
};
struct InconsistentInvariants : Error {
    using Error::Error;
};

/// One singular point of the quotient curve: surface quotient 1/alpha(1,beta)
/// plus the stratum (edge of the base plane or vertex) supporting it.
struct BPoint {
    CyclicQuotient type;  // 1/alpha(1, beta)
    int edge_i = -1, edge_j = -1;
    int vertex = -1;

    Int alpha() const { return type.r; }
    Int beta() const { return type.a[1]; }
};

using BSet = std::vector<BPoint>;

/// Orbit invariants of a graded Gorenstein surface singularity.
struct OrbitInvariants {
    Int genus = 0;
    Int r = 0;                      // number of branch points
    std::vector<BPoint> pairs;      // (alpha_i, beta_i)
    Int b = 0;
    Int R = 0;                      // exponent
};

/// R = d - (w0 + w1 + w2).
Int exponent_R(const WeightSystem& ws);

/// Quotient-curve singularities: stabilizer orders alpha from the edge/vertex
/// strata of P(w0,w1,w2), with beta = R^{-1} mod alpha.
BSet compute_B(const WeightSystem& ws, const MonomialSupport& support);

/// Chat^2 = -(d/(w0 w1 w2) + sum beta_i/alpha_i).
Rat chat_squared(const WeightSystem& ws, const BSet& B);

/// Unique g >= 0 with
/// d(2g-2+r) + sum_{w_j | d} d/w_j - 1 - sum_{alpha_i | d} d/alpha_i = mu.
Int genus(const WeightSystem& ws, const BSet& B);

/// Full invariants; b is solved exactly from
/// R(-b + sum beta_i/alpha_i) = -(2g-2) - r + sum 1/alpha_i.
OrbitInvariants orbit_invariants(const WeightSystem& ws,
                                 const MonomialSupport& support);

/// Re-verifies both exponent relations on assembled invariants.
bool check_dolgachev(const OrbitInvariants& inv);

}  // namespace wqs
