#include "wqs/cyclicq.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wqs {

CyclicQuotient CyclicQuotient::surface(const Int& r, const Int& a1,
                                       const Int& a2) {
    if (r < 2) throw InvalidInput("cyclic quotient: r must be >= 2");
    return {r, {mod_reduce(a1, r), mod_reduce(a2, r)}};
}

CyclicQuotient CyclicQuotient::threefold(const Int& r, const Int& a1,
                                         const Int& a2, const Int& a3) {
    if (r < 2) throw InvalidInput("cyclic quotient: r must be >= 2");
    return {r, {mod_reduce(a1, r), mod_reduce(a2, r), mod_reduce(a3, r)}};
}

std::string CyclicQuotient::str() const {
    std::ostringstream os;
    os << "1/" << r << "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << ")";
    return os.str();
}

bool is_isolated(const CyclicQuotient& q) {
    for (const auto& ai : q.a)
        if (gcd(ai, q.r) != 1) return false;
    return true;
}

CyclicQuotient normalize_surface(const CyclicQuotient& q) {
    if (!q.is_surface()) throw InvalidInput("normalize_surface: not a surface type");
    if (!is_isolated(q)) throw NotIsolatedQuotient("normalize_surface: " + q.str());
    Int c = mod_reduce(q.a[1] * mod_inverse(q.a[0], q.r), q.r);
    Int cinv = mod_inverse(c, q.r);
    return {q.r, {Int(1), std::min(c, cinv)}};
}

CyclicQuotient remove_reflections_surface(const CyclicQuotient& q) {
    if (!q.is_surface())
        throw InvalidInput("remove_reflections_surface: not a surface type");
    Int r = q.r;
    Int a = mod_reduce(q.a[0], r), b = mod_reduce(q.a[1], r);
    // elements acting trivially on one coordinate are reflections in the
    // other; pass to the quotient by the subgroup they generate until the
    // action is free in codimension one
    bool changed = true;
    while (changed && r > 1) {
        changed = false;
        Int d = gcd(b, r);  // gcd(0, r) = r: the action fixes the whole axis
        if (d > 1) {
            r /= d;
            b = mod_reduce(b / d, r);
            a = mod_reduce(a, r);
            changed = true;
        }
        if (r > 1) {
            d = gcd(a, r);
            if (d > 1) {
                r /= d;
                a = mod_reduce(a / d, r);
                b = mod_reduce(b, r);
                changed = true;
            }
        }
    }
    if (r <= 1) return {Int(1), {Int(0), Int(0)}};
    return {r, {a, b}};
}

Int surface_alias(const CyclicQuotient& q) {
    CyclicQuotient n = normalize_surface(q);
    return mod_inverse(n.a[1], n.r);
}

CyclicQuotient normalize_threefold(const CyclicQuotient& q) {
    if (!is_isolated(q))
        throw NotIsolatedQuotient("normalize_threefold: " + q.str());
    std::vector<Int> best;
    for (Int u = 1; u < q.r; ++u) {
        if (gcd(u, q.r) != 1) continue;
        std::vector<Int> cand;
        cand.reserve(q.a.size());
        for (const auto& ai : q.a) cand.push_back(mod_reduce(u * ai, q.r));
        std::sort(cand.begin(), cand.end());
        if (best.empty() || cand < best) best = std::move(cand);
    }
    return {q.r, best};
}

bool is_isomorphic_surface(const CyclicQuotient& q1, const CyclicQuotient& q2) {
    if (q1.r != q2.r) return false;
    return normalize_surface(q1) == normalize_surface(q2);
}

bool is_isomorphic_threefold(const CyclicQuotient& q1, const CyclicQuotient& q2) {
    if (q1.r != q2.r) return false;
    return normalize_threefold(q1) == normalize_threefold(q2);
}

std::string to_string(ReidTai c) {
    switch (c) {
        case ReidTai::terminal: return "terminal";
        case ReidTai::strictly_canonical: return "strictly_canonical";
        case ReidTai::not_canonical: return "not_canonical";
    }
    return "?";
}

ReidTai reid_tai_class(const CyclicQuotient& q) {
    if (q.a.size() != 3) throw InvalidInput("reid_tai_class: need threefold type");
    if (!is_isolated(q)) throw NotIsolatedQuotient("reid_tai_class: " + q.str());
    bool saw_one = false;
    for (Int j = 1; j < q.r; ++j) {
        Int num = 0;  // age * r
        for (const auto& ai : q.a) num += mod_reduce(j * ai, q.r);
        if (num < q.r) return ReidTai::not_canonical;
        if (num == q.r) saw_one = true;
    }
    return saw_one ? ReidTai::strictly_canonical : ReidTai::terminal;
}

Rat min_age(const CyclicQuotient& q) {
    if (!is_isolated(q)) throw NotIsolatedQuotient("min_age: " + q.str());
    Rat best = 0;
    for (Int j = 1; j < q.r; ++j) {
        Int num = 0;
        for (const auto& ai : q.a) num += mod_reduce(j * ai, q.r);
        Rat age(num, q.r);
        if (j == 1 || age < best) best = age;
    }
    return best;
}

bool is_du_val(const CyclicQuotient& q) {
    if (!q.is_surface()) throw InvalidInput("is_du_val: not a surface type");
    CyclicQuotient n = normalize_surface(q);
    return n.a[1] == mod_reduce(Int(-1), n.r);
}

bool is_odnc(const CyclicQuotient& q) {
    if (q.a.size() != 3) throw InvalidInput("is_odnc: need threefold type");
    if (!is_isolated(q)) return false;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            if (i != j && mod_reduce(q.a[i] + q.a[j], q.r) == 0) return true;
    return false;
}

namespace {

// Canonical residue multisets of the exceptional canonical quotients. The
// second one is stored as 1/14(1,9,11); see ledger notes on the r = 14
// reading of the printed 1/7(1,9,11).
const CyclicQuotient kExc9 = CyclicQuotient::threefold(9, 2, 8, 14);
const CyclicQuotient kExc14 = CyclicQuotient::threefold(14, 1, 9, 11);

}  // namespace

DualOptions dual_candidates(const CyclicQuotient& base) {
    if (!base.is_surface())
        throw InvalidInput("dual_candidates: not a surface type");
    if (!is_isolated(base))
        throw NotIsolatedQuotient("dual_candidates: " + base.str());
    const Int r = base.r;
    // respect the caller's 1/r(1,b) spelling; only reduce other spellings
    Int b = base.a[0] == 1
                ? base.a[1]
                : mod_reduce(base.a[1] * mod_inverse(base.a[0], r), r);
    DualOptions out{CyclicQuotient::surface(r, 1, b), {}};
    for (Int d2 = 1; d2 < r; ++d2) {
        if (gcd(d2, r) != 1) continue;
        std::string tag;
        if (mod_reduce(1 + b, r) == 0)
            tag = "1+d1=0";
        else if (mod_reduce(1 + d2, r) == 0)
            tag = "1+d2=0";
        else if (mod_reduce(b + d2, r) == 0)
            tag = "d1+d2=0";
        else if (mod_reduce(b + d2 + 1, r) == 0)
            tag = "d1+d2=-1";
        else {
            CyclicQuotient t = CyclicQuotient::threefold(r, 1, b, d2);
            if (r == kExc9.r && is_isomorphic_threefold(t, kExc9))
                tag = "exceptional 1/9(2,8,14)";
            else if (r == kExc14.r && is_isomorphic_threefold(t, kExc14))
                tag = "exceptional 1/14(1,9,11)";
            else
                continue;
        }
        ReidTai rt = reid_tai_class(CyclicQuotient::threefold(r, 1, b, d2));
        if (rt == ReidTai::not_canonical) continue;
        out.duals.push_back({d2, tag, rt});
    }
    if (r == 2 && out.duals.empty())
        throw Error("dual_candidates: r=2 must admit d2=1");
    return out;
}

std::vector<std::vector<CyclicQuotient>> dual_sets(
    const std::vector<CyclicQuotient>& B) {
    std::vector<std::vector<CyclicQuotient>> result{{}};
    for (const auto& t : B) {
        DualOptions opts = dual_candidates(t);
        std::vector<std::vector<CyclicQuotient>> next;
        for (const auto& partial : result) {
            for (const auto& cand : opts.duals) {
                auto set = partial;
                set.push_back(
                    normalize_surface(CyclicQuotient::surface(t.r, 1, cand.d2)));
                next.push_back(std::move(set));
            }
        }
        result = std::move(next);
    }
    auto key = [](const std::vector<CyclicQuotient>& set) {
        std::vector<std::pair<Int, Int>> k;
        for (const auto& q : set) k.emplace_back(q.r, q.a[1]);
        std::sort(k.begin(), k.end());
        return k;
    };
    std::sort(result.begin(), result.end(),
              [&](const auto& x, const auto& y) { return key(x) < key(y); });
    result.erase(std::unique(result.begin(), result.end(),
                             [&](const auto& x, const auto& y) {
                                 return key(x) == key(y);
                             }),
                 result.end());
    return result;
}

std::vector<Int> resolution_chain(const CyclicQuotient& q) {
    if (!q.is_surface()) throw InvalidInput("resolution_chain: not a surface type");
    if (!is_isolated(q)) throw NotIsolatedQuotient("resolution_chain: " + q.str());
    // keeps the residue as given when already in the 1/r(1,b) spelling, so the
    // chain orientation follows the caller's convention
    Int b = q.a[0] == 1
                ? q.a[1]
                : mod_reduce(q.a[1] * mod_inverse(q.a[0], q.r), q.r);
    return hj_expansion(q.r, b);
}

}  // namespace wqs
