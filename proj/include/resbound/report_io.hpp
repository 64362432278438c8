#pragma once

#include "resbound/pipeline.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace resbound::io {

using Json = nlohmann::ordered_json;

/// One row of the degree-bound table.
struct BoundsRow {
    int n = 0;
    mpz_class ggl_theorem_bound;
    mpz_class ggl_computed_bound;
    mpz_class kobayashi_bound;
    /// nullopt for formula-only rows (no pipeline run).
    std::optional<bool> certified;
};

BoundsRow formula_row(int n);

/// [{d_power, delta0, delta1}] with exact "num/den" strings, d_power ascending from 1.
Json polynomial_json(const DegreePolynomial& p);
/// Same schema for a polynomial at fixed delta (delta1 is "0/1").
Json polynomial_json(const UniPoly& p);
Json meta_json(int n, const Rational& epsilon, const std::string& delta, int truncation);
Json checks_json(const std::vector<InequalityCheck>& log);
Json report_json(const BoundReport& r);
Json bounds_json(const std::vector<BoundsRow>& rows);

std::string bounds_csv(const std::vector<BoundsRow>& rows);
std::string bounds_text(const std::vector<BoundsRow>& rows);
std::string polynomial_csv(const DegreePolynomial& p);
std::string polynomial_csv(const UniPoly& p);

/// Inverse of polynomial_json; throws on malformed input.
DegreePolynomial parse_polynomial_json(const Json& j, int n);

} // namespace resbound::io
