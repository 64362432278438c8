#pragma once

#include "resbound/rational.hpp"

#include <string>
#include <vector>

namespace resbound {

/// Dense univariate polynomial with rational coefficients, lowest degree first.
/// Trailing zero coefficients are trimmed.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return int(coeffs_.size()) - 1; }
    Rational coeff(int i) const;
    const Rational& leading() const { return coeffs_.back(); }
    bool is_zero() const { return coeffs_.empty(); }

    Rational eval(const Rational& x) const;
    std::string to_string(const std::string& var = "d") const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    std::vector<Rational> coeffs_;
};

} // namespace resbound
