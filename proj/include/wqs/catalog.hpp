#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wqs/cyclicq.hpp"
#include "wqs/quasihom.hpp"

namespace wqs {

struct SchemaError : Error {
    using Error::Error;
};
struct ConsistencyError : Error {
    using Error::Error;
};

struct ExpectedHit {
    Int w3;
    std::vector<CyclicQuotient> dual_set;
    bool k3 = false;
};

struct ExpectedData {
    std::vector<Int> weights;
    Int degree;
    std::vector<CyclicQuotient> B;
    std::vector<std::vector<CyclicQuotient>> dual_sets;
    std::vector<ExpectedHit> hits;
    Int exponent;
    Rat c_squared;
};

struct CatalogEntry {
    std::string name;
    std::vector<std::string> aliases;
    std::string class_tag;                       // "I".."VII" or "raw"
    std::vector<Int> exponents;
    std::optional<std::pair<Int, Int>> extra;    // (a, b) for VI/VII
    std::vector<Monomial> monomials;             // raw entries only
    ExpectedData expected;
    std::optional<Int> yonemura_case;
    std::string notes;

    NormalForm normal_form() const;
};

std::vector<CatalogEntry> load_catalog(const std::string& path);
std::string save_catalog(const std::vector<CatalogEntry>& entries);

enum class ClaimStatus { PASS, FAIL, KNOWN_ERRATUM };

std::string to_string(ClaimStatus s);

struct ClaimResult {
    std::string claim;
    ClaimStatus status;
    std::string details;
};

struct VerifyReport {
    std::string name;
    std::vector<ClaimResult> claims;

    bool failed() const;
};

/// Runs the full pipeline (weights, central-curve singularities, dual sets,
/// monodromy, smoothing search, intersection numbers) and diffs against the
/// entry's expectations.
VerifyReport verify_entry(const CatalogEntry& e);

/// Path of the bundled catalog, honoring the WPS_CATALOG override.
std::string default_catalog_path();

}  // namespace wqs
