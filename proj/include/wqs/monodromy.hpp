#pragma once

#include <map>
#include <vector>

#include "wqs/exactmath.hpp"
#include "wqs/orbit.hpp"
#include "wqs/quasihom.hpp"

namespace wqs {

struct NotAPolynomial : Error {
    using Error::Error;
};

/// Characteristic polynomial of the monodromy, stored as a factor multiset in
/// (1 - t^k) together with its net cyclotomic content.
struct CharPoly {
    FactorList factors;
    std::map<Int, Int> cyclotomic;  // e -> exponent of Phi_e, all >= 0
    Int degree = 0;
};

/// theta(t) = (1-t^d)^{2g-2+r} * prod_{w_j | d} (1-t^{d/w_j})
///            / [ (1-t) * prod_{alpha_i | d} (1-t^{d/alpha_i}) ].
CharPoly char_poly(const Int& d, const Int& g, const Int& r,
                   const std::vector<Int>& weights,
                   const std::vector<Int>& alphas);

/// Assembles theta from a weight system and its quotient-curve data and checks
/// deg theta = mu.
CharPoly char_poly(const WeightSystem& ws, const OrbitInvariants& inv);

/// lcm of the cyclotomic indices with positive exponent: the minimal m with
/// xi^m = 1 for every monodromy eigenvalue xi.
Int unipotent_exponent(const CharPoly& cp);

}  // namespace wqs
