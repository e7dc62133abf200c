#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wqs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;
using boost::multiprecision::denominator;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInvertible : Error {
    using Error::Error;
};

struct InvalidInput : Error {
    using Error::Error;
};

/// x in [1, r-1] with a*x = 1 (mod r). Throws NotInvertible if gcd(a,r) != 1.
Int mod_inverse(const Int& a, const Int& r);

/// Least nonnegative residue of a mod r (r > 0).
Int mod_reduce(const Int& a, const Int& r);

/// Hirzebruch-Jung expansion: alpha/beta = b1 - 1/(b2 - 1/(...)), all bi >= 2.
/// Requires 1 <= beta < alpha and gcd(alpha, beta) = 1.
std::vector<Int> hj_expansion(const Int& alpha, const Int& beta);

/// Re-evaluates a HJ chain back to a rational (test oracle companion).
Rat hj_evaluate(const std::vector<Int>& chain);

/// (1,1) entry of the inverse of the tridiagonal matrix with diagonal -b_i and
/// off-diagonal 1. The entry corresponds to the chain end listed first.
Rat chain_inverse_corner(const std::vector<Int>& chain);

/// Formal product prod_k (1 - t^k)^{mult_k}; multiplicities may be negative.
struct FactorList {
    std::map<Int, Int> factors;  // k -> multiplicity, zeros dropped

    void mul(const Int& k, const Int& mult);
    Int degree() const;  // sum of mult_k * k
};

/// Net exponents c_e of cyclotomic polynomials Phi_e in the expansion of the
/// factor list via (1 - t^k) = prod_{e | k} Phi_e. Zeros are dropped.
std::map<Int, Int> cyclotomic_exponents(const FactorList& f);

std::string to_string(const Rat& q);

}  // namespace wqs
