#include "wqs/orbit.hpp"

namespace wqs {

Int exponent_R(const WeightSystem& ws) {
    if (ws.w.size() != 3) throw InvalidInput("exponent_R: need 3 weights");
    return ws.d - (ws.w[0] + ws.w[1] + ws.w[2]);
}

BSet compute_B(const WeightSystem& ws, const MonomialSupport& support) {
    Int R = exponent_R(ws);
    BSet out;
    for (const auto& p : curve_points(ws, support)) {
        if (gcd(mod_reduce(R, p.alpha), p.alpha) != 1)
            throw ExponentNotInvertible("compute_B: exponent " + R.str() +
                                        " not invertible mod " + p.alpha.str());
        Int beta = mod_inverse(mod_reduce(R, p.alpha), p.alpha);
        BPoint bp;
        bp.type = CyclicQuotient::surface(p.alpha, 1, beta);
        bp.edge_i = p.edge_i;
        bp.edge_j = p.edge_j;
        bp.vertex = p.vertex;
        out.push_back(std::move(bp));
    }
    return out;
}

Rat chat_squared(const WeightSystem& ws, const BSet& B) {
    Rat s(ws.d, ws.product_of_weights());
    for (const auto& p : B) s += Rat(p.beta(), p.alpha());
    return -s;
}

Int genus(const WeightSystem& ws, const BSet& B) {
    Int mu = milnor_number(ws);
    const Int d = ws.d;
    // deg theta = d(2g-2+r) + sum_{w|d} d/w - 1 - sum_{alpha|d} d/alpha = mu
    Int fixed = -1;
    for (const auto& w : ws.w)
        if (d % w == 0) fixed += d / w;
    for (const auto& p : B)
        if (d % p.alpha() == 0) fixed -= d / p.alpha();
    Int r = Int(B.size());
    Int target = mu - fixed;  // = d(2g-2+r)
    if (target % d != 0)
        throw NoConsistentGenus("genus: degree identity has no solution");
    Int twice_g = target / d + 2 - r;
    if (twice_g % 2 != 0 || twice_g < 0)
        throw NoConsistentGenus("genus: no nonnegative integer solution");
    return twice_g / 2;
}

OrbitInvariants orbit_invariants(const WeightSystem& ws,
                                 const MonomialSupport& support) {
    OrbitInvariants inv;
    inv.pairs = compute_B(ws, support);
    inv.r = Int(inv.pairs.size());
    inv.R = exponent_R(ws);
    inv.genus = genus(ws, inv.pairs);
    // R(-b + sum beta/alpha) = -(2g-2) - r + sum 1/alpha
    if (inv.R == 0)
        throw InconsistentInvariants("orbit_invariants: exponent R = 0");
    Rat rhs = -(2 * inv.genus - 2) - inv.r;
    Rat lhs_sum = 0;
    for (const auto& p : inv.pairs) {
        rhs += Rat(1, p.alpha());
        lhs_sum += Rat(p.beta(), p.alpha());
    }
    Rat b = lhs_sum - rhs / inv.R;
    if (denominator(b) != 1)
        throw InconsistentInvariants("orbit_invariants: b is not an integer");
    inv.b = Int(numerator(b));
    return inv;
}

bool check_dolgachev(const OrbitInvariants& inv) {
    Rat lhs_sum = -inv.b;
    Rat rhs = -(2 * inv.genus - 2) - inv.r;
    for (const auto& p : inv.pairs) {
        if (mod_reduce(inv.R * p.beta(), p.alpha()) != 1) return false;
        lhs_sum += Rat(p.beta(), p.alpha());
        rhs += Rat(1, p.alpha());
    }
    return Rat(inv.R) * lhs_sum == rhs;
}

}  // namespace wqs
