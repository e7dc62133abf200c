#include "wqs/monodromy.hpp"

namespace wqs {

CharPoly char_poly(const Int& d, const Int& g, const Int& r,
                   const std::vector<Int>& weights,
                   const std::vector<Int>& alphas) {
    if (d <= 0) throw InvalidInput("char_poly: degree must be positive");
    CharPoly cp;
    cp.factors.mul(d, 2 * g - 2 + r);
    for (const auto& w : weights)
        if (d % w == 0) cp.factors.mul(d / w, 1);
    cp.factors.mul(1, -1);
    for (const auto& a : alphas)
        if (d % a == 0) cp.factors.mul(d / a, -1);
    cp.cyclotomic = cyclotomic_exponents(cp.factors);
    for (const auto& [e, c] : cp.cyclotomic)
        if (c < 0)
            throw NotAPolynomial("char_poly: Phi_" + e.str() +
                                 " has exponent " + c.str());
    cp.degree = cp.factors.degree();
    return cp;
}

CharPoly char_poly(const WeightSystem& ws, const OrbitInvariants& inv) {
    std::vector<Int> alphas;
    for (const auto& p : inv.pairs) alphas.push_back(p.alpha());
    CharPoly cp = char_poly(ws.d, inv.genus, inv.r, ws.w, alphas);
    if (cp.degree != milnor_number(ws))
        throw NotAPolynomial("char_poly: degree differs from Milnor number");
    return cp;
}

Int unipotent_exponent(const CharPoly& cp) {
    Int m = 1;
    for (const auto& [e, c] : cp.cyclotomic)
        if (c > 0) m = lcm(m, e);
    return m;
}

}  // namespace wqs
