#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wqs/exactmath.hpp"

namespace wqs {

/// Exponent vector of a monomial in 3 or 4 variables.
using Monomial = std::vector<Int>;

struct DegenerateSystem : Error {
    using Error::Error;
};
struct NonIsolated : Error {
    using Error::Error;
};
struct EmptySupport : Error {
    using Error::Error;
};

enum class NormalFormClass { I, II, III, IV, V, VI, VII, Raw };

std::string to_string(NormalFormClass c);
NormalFormClass normal_form_class_from_string(const std::string& s);

/// A quasihomogeneous surface normal form: one of the seven classes, or a raw
/// 3-variable monomial support.
struct NormalForm {
    NormalFormClass tag = NormalFormClass::Raw;
    std::vector<Int> p;                          // exponents, classes I..VII
    std::optional<std::pair<Int, Int>> extra;    // (a, b) for VI/VII
    std::vector<Monomial> monomials;             // 3-variable support

    /// Builds a class-form and validates the VI/VII side conditions.
    static NormalForm from_class(NormalFormClass tag, const Int& p0,
                                 const Int& p1, const Int& p2,
                                 std::optional<std::pair<Int, Int>> extra = {});
    static NormalForm raw(std::vector<Monomial> monomials);
};

struct WeightSystem {
    std::vector<Int> w;  // 3 or 4 positive weights, gcd 1
    Int d = 0;

    Int weighted_degree(const Monomial& m) const;
    Int product_of_weights() const;
};

struct MonomialSupport {
    int nvars = 0;
    std::vector<Monomial> monomials;

    bool has_pure_power(int i) const;
    /// Partners k for eliminating monomials x_i^a * x_k (a >= 1, k != i).
    std::vector<int> eliminating_partners(int i) const;
    /// True iff some monomial uses only variables from `vars`.
    bool has_monomial_within(const std::vector<int>& vars) const;
    /// Restriction to the variables i, j: true iff some monomial uses no other
    /// variable.
    bool touches_edge(int i, int j) const;
};

/// Solves "all defining monomials share one weighted degree" and scales to the
/// primitive positive integer solution.
WeightSystem solve_weights(const NormalForm& nf);

/// Closed form for class I (Example-style): w_i = p_j p_k / g, d = p0 p1 p2 / g.
WeightSystem class_I_weights(const Int& p0, const Int& p1, const Int& p2);

/// mu = prod (d - w_i) / w_i for a 3-variable system; throws NonIsolated if
/// some factor is nonpositive.
Int milnor_number(const WeightSystem& ws);

/// All monomials of weighted degree exactly d in ws.w.size() variables.
MonomialSupport generic_support(const WeightSystem& ws);

/// Support of the normal form itself, degree-checked against ws.
MonomialSupport normal_form_support(const NormalForm& nf, const WeightSystem& ws);

}  // namespace wqs
