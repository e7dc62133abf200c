#include "wqs/exactmath.hpp"

#include <sstream>

namespace wqs {

Int mod_reduce(const Int& a, const Int& r) {
    Int m = a % r;
    if (m < 0) m += r;
    return m;
}

Int mod_inverse(const Int& a, const Int& r) {
    if (r < 2) throw NotInvertible("mod_inverse: modulus must be >= 2");
    // extended Euclid on (a mod r, r)
    Int old_r = mod_reduce(a, r), cur_r = r;
    Int old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        Int q = old_r / cur_r;
        Int tmp = old_r - q * cur_r;
        old_r = cur_r;
        cur_r = tmp;
        tmp = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = tmp;
    }
    if (old_r != 1)
        throw NotInvertible("mod_inverse: gcd(" + old_r.str() + ") != 1");
    return mod_reduce(old_s, r);
}

std::vector<Int> hj_expansion(const Int& alpha, const Int& beta) {
    if (beta < 1 || beta >= alpha)
        throw InvalidInput("hj_expansion: need 1 <= beta < alpha");
    if (gcd(alpha, beta) != 1)
        throw InvalidInput("hj_expansion: gcd(alpha, beta) != 1");
    std::vector<Int> chain;
    Int a = alpha, b = beta;
    while (b != 0) {
        Int q = (a + b - 1) / b;  // ceil(a/b)
        chain.push_back(q);
        Int next = q * b - a;
        a = b;
        b = next;
    }
    return chain;
}

Rat hj_evaluate(const std::vector<Int>& chain) {
    Rat v = 0;
    bool first = true;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        if (first) {
            v = Rat(*it);
            first = false;
        } else {
            v = Rat(*it) - Rat(1) / v;
        }
    }
    return v;
}

Rat chain_inverse_corner(const std::vector<Int>& chain) {
    if (chain.empty()) throw InvalidInput("chain_inverse_corner: empty chain");
    const std::size_t n = chain.size();
    // Solve M x = e1 exactly; the corner entry is x[0].
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = -Rat(chain[i]);
        if (i + 1 < n) {
            m[i][i + 1] = 1;
            m[i + 1][i] = 1;
        }
    }
    m[0][n] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        // negative definite for b_i >= 2, so a pivot always exists
        if (piv == n) throw Error("chain_inverse_corner: singular matrix");
        std::swap(m[piv], m[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rat f = m[row][col] / m[col][col];
            for (std::size_t k = col; k <= n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return m[0][n] / m[0][0];
}

void FactorList::mul(const Int& k, const Int& mult) {
    if (k <= 0) throw InvalidInput("FactorList: factor index must be positive");
    auto it = factors.find(k);
    if (it == factors.end()) {
        if (mult != 0) factors.emplace(k, mult);
    } else {
        it->second += mult;
        if (it->second == 0) factors.erase(it);
    }
}

Int FactorList::degree() const {
    Int deg = 0;
    for (const auto& [k, mult] : factors) deg += k * mult;
    return deg;
}

std::map<Int, Int> cyclotomic_exponents(const FactorList& f) {
    std::map<Int, Int> c;
    for (const auto& [k, mult] : f.factors) {
        for (Int e = 1; e * e <= k; ++e) {
            if (k % e != 0) continue;
            c[e] += mult;
            Int other = k / e;
            if (other != e) c[other] += mult;
        }
    }
    for (auto it = c.begin(); it != c.end();) {
        if (it->second == 0)
            it = c.erase(it);
        else
            ++it;
    }
    return c;
}

std::string to_string(const Rat& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

}  // namespace wqs
