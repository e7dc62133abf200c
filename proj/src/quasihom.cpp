#include "wqs/quasihom.hpp"

#include <algorithm>
#include <functional>

namespace wqs {

std::string to_string(NormalFormClass c) {
    switch (c) {
        case NormalFormClass::I: return "I";
        case NormalFormClass::II: return "II";
        case NormalFormClass::III: return "III";
        case NormalFormClass::IV: return "IV";
        case NormalFormClass::V: return "V";
        case NormalFormClass::VI: return "VI";
        case NormalFormClass::VII: return "VII";
        case NormalFormClass::Raw: return "raw";
    }
    return "?";
}

NormalFormClass normal_form_class_from_string(const std::string& s) {
    if (s == "I") return NormalFormClass::I;
    if (s == "II") return NormalFormClass::II;
    if (s == "III") return NormalFormClass::III;
    if (s == "IV") return NormalFormClass::IV;
    if (s == "V") return NormalFormClass::V;
    if (s == "VI") return NormalFormClass::VI;
    if (s == "VII") return NormalFormClass::VII;
    if (s == "raw") return NormalFormClass::Raw;
    throw InvalidInput("unknown normal-form class: " + s);
}

namespace {

Monomial mono(Int x, Int y, Int z) { return {std::move(x), std::move(y), std::move(z)}; }

}  // namespace

NormalForm NormalForm::from_class(NormalFormClass tag, const Int& p0,
                                  const Int& p1, const Int& p2,
                                  std::optional<std::pair<Int, Int>> extra) {
    if (p0 < 2 || p1 < 2 || p2 < 2)
        throw InvalidInput("normal form: exponents must be >= 2");
    NormalForm nf;
    nf.tag = tag;
    nf.p = {p0, p1, p2};
    nf.extra = extra;
    switch (tag) {
        case NormalFormClass::I:
            nf.monomials = {mono(p0, 0, 0), mono(0, p1, 0), mono(0, 0, p2)};
            break;
        case NormalFormClass::II:
            nf.monomials = {mono(p0, 0, 0), mono(0, p1, 0), mono(0, 1, p2)};
            break;
        case NormalFormClass::III:
            nf.monomials = {mono(p0, 0, 0), mono(0, p1, 1), mono(0, 1, p2)};
            break;
        case NormalFormClass::IV:
            nf.monomials = {mono(p0, 0, 0), mono(0, p1, 1), mono(1, 0, p2)};
            break;
        case NormalFormClass::V:
            nf.monomials = {mono(p0, 1, 0), mono(0, p1, 1), mono(1, 0, p2)};
            break;
        case NormalFormClass::VI: {
            if (!extra) throw InvalidInput("class VI needs (a, b)");
            const auto& [a, b] = *extra;
            if (a < 0 || b < 0) throw InvalidInput("class VI: a, b must be >= 0");
            if ((p0 - 1) * (p0 * a + p2 * b) != p0 * p1 * p2)
                throw InvalidInput("class VI side condition fails");
            nf.monomials = {mono(p0, 0, 0), mono(1, p1, 0), mono(1, 0, p2),
                            mono(0, a, b)};
            break;
        }
        case NormalFormClass::VII: {
            if (!extra) throw InvalidInput("class VII needs (a, b)");
            const auto& [a, b] = *extra;
            if (a < 0 || b < 0) throw InvalidInput("class VII: a, b must be >= 0");
            if ((p0 - 1) * (p0 * a + p2 * b) != b * (p0 * p1 - 1))
                throw InvalidInput("class VII side condition fails");
            // the source lists both x z^{p2} and x z^a; kept as printed
            nf.monomials = {mono(p0, 1, 0), mono(1, p1, 0), mono(1, 0, p2),
                            mono(1, 0, a), mono(0, a, b)};
            break;
        }
        case NormalFormClass::Raw:
            throw InvalidInput("use NormalForm::raw for raw supports");
    }
    return nf;
}

NormalForm NormalForm::raw(std::vector<Monomial> monomials) {
    if (monomials.empty()) throw InvalidInput("raw normal form: empty support");
    for (const auto& m : monomials)
        if (m.size() != 3) throw InvalidInput("raw normal form: need 3 variables");
    NormalForm nf;
    nf.tag = NormalFormClass::Raw;
    nf.monomials = std::move(monomials);
    return nf;
}

Int WeightSystem::weighted_degree(const Monomial& m) const {
    Int deg = 0;
    for (std::size_t i = 0; i < w.size(); ++i) deg += w[i] * m[i];
    return deg;
}

Int WeightSystem::product_of_weights() const {
    Int p = 1;
    for (const auto& wi : w) p *= wi;
    return p;
}

bool MonomialSupport::has_pure_power(int i) const {
    for (const auto& m : monomials) {
        bool pure = m[i] > 0;
        for (int k = 0; pure && k < nvars; ++k)
            if (k != i && m[k] != 0) pure = false;
        if (pure) return true;
    }
    return false;
}

std::vector<int> MonomialSupport::eliminating_partners(int i) const {
    std::vector<int> ks;
    for (const auto& m : monomials) {
        if (m[i] < 1) continue;
        int partner = -1;
        bool ok = true;
        for (int k = 0; k < nvars; ++k) {
            if (k == i || m[k] == 0) continue;
            if (m[k] == 1 && partner < 0)
                partner = k;
            else
                ok = false;
        }
        if (ok && partner >= 0 &&
            std::find(ks.begin(), ks.end(), partner) == ks.end())
            ks.push_back(partner);
    }
    std::sort(ks.begin(), ks.end());
    return ks;
}

bool MonomialSupport::has_monomial_within(const std::vector<int>& vars) const {
    for (const auto& m : monomials) {
        bool inside = true;
        for (int k = 0; inside && k < nvars; ++k)
            if (m[k] != 0 &&
                std::find(vars.begin(), vars.end(), k) == vars.end())
                inside = false;
        if (inside) return true;
    }
    return false;
}

bool MonomialSupport::touches_edge(int i, int j) const {
    return has_monomial_within({i, j});
}

WeightSystem solve_weights(const NormalForm& nf) {
    // Normalize d = 1 and solve <m, w> = 1 exactly; then scale to the
    // primitive integer ray.
    const auto& rows = nf.monomials;
    const std::size_t n = 3;
    std::vector<std::vector<Rat>> m;
    for (const auto& r : rows) {
        std::vector<Rat> row(n + 1);
        for (std::size_t k = 0; k < n; ++k) row[k] = Rat(r[k]);
        row[n] = 1;
        m.push_back(std::move(row));
    }
    // Gaussian elimination to reduced row echelon form.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        Rat p = m[rank][col];
        for (auto& v : m[rank]) v /= p;
        for (std::size_t row = 0; row < m.size(); ++row) {
            if (row == rank || m[row][col] == 0) continue;
            Rat f = m[row][col];
            for (std::size_t k = 0; k <= n; ++k) m[row][k] -= f * m[rank][k];
        }
        ++rank;
    }
    if (rank < n) throw DegenerateSystem("solve_weights: weights not determined");
    for (std::size_t row = rank; row < m.size(); ++row)
        if (m[row][n] != 0)
            throw DegenerateSystem("solve_weights: inconsistent degrees");
    std::vector<Rat> wq(n);
    for (std::size_t i = 0; i < n; ++i) {
        wq[i] = m[i][n];
        if (wq[i] <= 0)
            throw DegenerateSystem("solve_weights: nonpositive weight ray");
    }
    Int den = 1;
    for (const auto& q : wq) den = lcm(den, Int(denominator(q)));
    std::vector<Int> wi(n);
    Int g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        wi[i] = Int(numerator(wq[i])) * (den / Int(denominator(wq[i])));
        g = gcd(g, wi[i]);
    }
    WeightSystem ws;
    ws.w.resize(n);
    for (std::size_t i = 0; i < n; ++i) ws.w[i] = wi[i] / g;
    ws.d = ws.weighted_degree(rows.front());
    for (const auto& r : rows)
        if (ws.weighted_degree(r) != ws.d)
            throw DegenerateSystem("solve_weights: degree check failed");
    return ws;
}

WeightSystem class_I_weights(const Int& p0, const Int& p1, const Int& p2) {
    Int g = gcd(gcd(p0 * p1, p1 * p2), p0 * p2);
    WeightSystem ws;
    ws.w = {p1 * p2 / g, p0 * p2 / g, p0 * p1 / g};
    ws.d = p0 * p1 * p2 / g;
    return ws;
}

Int milnor_number(const WeightSystem& ws) {
    if (ws.w.size() != 3) throw InvalidInput("milnor_number: need 3 variables");
    Rat mu = 1;
    for (const auto& wi : ws.w) {
        if (ws.d <= wi)
            throw NonIsolated("milnor_number: d <= w_i, not an isolated germ");
        mu *= Rat(ws.d - wi, wi);
    }
    if (denominator(mu) != 1)
        throw Error("milnor_number: non-integral product");
    return Int(numerator(mu));
}

MonomialSupport generic_support(const WeightSystem& ws) {
    const int n = static_cast<int>(ws.w.size());
    MonomialSupport sup;
    sup.nvars = n;
    Monomial cur(n, 0);
    std::function<void(int, Int)> rec = [&](int i, Int remaining) {
        if (i == n - 1) {
            if (remaining % ws.w[i] == 0) {
                cur[i] = remaining / ws.w[i];
                sup.monomials.push_back(cur);
                cur[i] = 0;
            }
            return;
        }
        for (Int e = 0; e * ws.w[i] <= remaining; ++e) {
            cur[i] = e;
            rec(i + 1, remaining - e * ws.w[i]);
        }
        cur[i] = 0;
    };
    rec(0, ws.d);
    if (sup.monomials.empty())
        throw EmptySupport("generic_support: no monomial of degree d");
    return sup;
}

MonomialSupport normal_form_support(const NormalForm& nf, const WeightSystem& ws) {
    MonomialSupport sup;
    sup.nvars = 3;
    sup.monomials = nf.monomials;
    for (const auto& m : sup.monomials)
        if (ws.weighted_degree(m) != ws.d)
            throw InvalidInput("normal_form_support: monomial off-degree");
    return sup;
}

}  // namespace wqs
