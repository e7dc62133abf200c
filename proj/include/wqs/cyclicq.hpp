#pragma once

#include <string>
#include <vector>

#include "wqs/exactmath.hpp"

namespace wqs {

struct NotIsolatedQuotient : Error {
    using Error::Error;
};

/// Cyclic quotient singularity 1/r(a_1,...,a_k), k = 2 (surface) or 3
/// (threefold). Residues are stored in [0, r).
struct CyclicQuotient {
    Int r;
    std::vector<Int> a;

    static CyclicQuotient surface(const Int& r, const Int& a1, const Int& a2);
    static CyclicQuotient threefold(const Int& r, const Int& a1, const Int& a2,
                                    const Int& a3);

    bool is_surface() const { return a.size() == 2; }
    bool operator==(const CyclicQuotient& o) const = default;
    std::string str() const;  // "1/r(a1,...,ak)"
};

bool is_isolated(const CyclicQuotient& q);

/// 1/r(1,c) with c = min(c, c^{-1} mod r). Throws NotIsolatedQuotient.
CyclicQuotient normalize_surface(const CyclicQuotient& q);

/// Quotients out the quasi-reflections of a rank-2 cyclic action, returning
/// the type of the genuine singularity of the quotient space. A result with
/// r == 1 means the quotient is smooth at the point.
CyclicQuotient remove_reflections_surface(const CyclicQuotient& q);

/// The other residue spelling of a normalized surface quotient (c^{-1} mod r).
Int surface_alias(const CyclicQuotient& q);

/// Canonical representative of an isolated quotient under coordinate
/// permutation and unit rescaling of the group generator: the lexicographically
/// least sorted residue multiset over all unit scalings.
CyclicQuotient normalize_threefold(const CyclicQuotient& q);

bool is_isomorphic_surface(const CyclicQuotient& q1, const CyclicQuotient& q2);
bool is_isomorphic_threefold(const CyclicQuotient& q1, const CyclicQuotient& q2);

enum class ReidTai { terminal, strictly_canonical, not_canonical };

std::string to_string(ReidTai c);

/// Reid-Tai classification of an isolated threefold quotient via the ages of
/// all nontrivial group elements.
ReidTai reid_tai_class(const CyclicQuotient& q);

/// Smallest age among nontrivial elements (reporting aid).
Rat min_age(const CyclicQuotient& q);

/// True iff the surface quotient is of type A_{r-1} = 1/r(1, r-1).
bool is_du_val(const CyclicQuotient& q);

/// True iff the threefold quotient is isomorphic to 1/r(1,-1,c), the local
/// model transverse to an orbifold double normal crossing.
bool is_odnc(const CyclicQuotient& q);

struct DualCandidate {
    Int d2;
    std::string tag;      // which congruence or exceptional case fired
    ReidTai rt;           // verified class of 1/r(1,b,d2)
};

struct DualOptions {
    CyclicQuotient base;  // 1/r(1,b)
    std::vector<DualCandidate> duals;
};

/// Residues d2 for which 1/r(1,b,d2) is canonical, generated by the congruence
/// shortcut plus the exceptional cases and verified by Reid-Tai.
DualOptions dual_candidates(const CyclicQuotient& base);

/// Cartesian product of per-element dual candidates, deduplicated as multisets
/// of isomorphism classes. Sets are sorted deterministically.
std::vector<std::vector<CyclicQuotient>> dual_sets(
    const std::vector<CyclicQuotient>& B);

/// Exceptional chain of the minimal resolution: hj_expansion(r, b).
std::vector<Int> resolution_chain(const CyclicQuotient& q);

}  // namespace wqs
