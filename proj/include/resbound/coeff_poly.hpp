#pragma once

#include "resbound/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace resbound {

/// Exponent pair of a CoeffPoly term: d^deg_d * delta^deg_delta.
struct CoeffKey {
    std::uint8_t deg_d = 0;
    std::uint8_t deg_delta = 0;

    friend auto operator<=>(const CoeffKey&, const CoeffKey&) = default;
};

/// Sparse polynomial in the hypersurface degree d and the twist parameter delta
/// with rational coefficients. Terms are kept sorted by key and no stored
/// coefficient is zero.
class CoeffPoly {
public:
    struct Term {
        CoeffKey key;
        Rational value;
    };

    CoeffPoly() = default;
    CoeffPoly(const Rational& c);                      // NOLINT(google-explicit-constructor)
    CoeffPoly(int c) : CoeffPoly(Rational(c)) {}       // NOLINT(google-explicit-constructor)

    static CoeffPoly monomial(const Rational& c, unsigned deg_d, unsigned deg_delta);
    static CoeffPoly d() { return monomial(1, 1, 0); }
    static CoeffPoly delta() { return monomial(1, 0, 1); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of d^i delta^j (zero if absent).
    Rational coeff(unsigned deg_d, unsigned deg_delta) const;

    /// Highest d-power with a nonzero term, -1 for the zero polynomial.
    int degree_d() const;
    int degree_delta() const;

    /// Substitutes delta by a rational value.
    CoeffPoly eval_delta(const Rational& delta) const;
    /// Substitutes d by a rational value.
    CoeffPoly eval_d(const Rational& d) const;
    /// Full evaluation.
    Rational eval(const Rational& d, const Rational& delta) const;

    /// Human-readable form, e.g. "3/2*d^2*delta - 4".
    std::string to_string() const;

    CoeffPoly& operator+=(const CoeffPoly& o);
    CoeffPoly& operator-=(const CoeffPoly& o);
    CoeffPoly& operator*=(const Rational& c);

    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
    friend CoeffPoly operator*(CoeffPoly a, const Rational& c) { return a *= c; }
    friend CoeffPoly operator*(const Rational& c, CoeffPoly a) { return a *= c; }
    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
    friend CoeffPoly operator-(const CoeffPoly& a);

    /// Accumulates a*b into *this without materialising the product.
    void add_product(const CoeffPoly& a, const CoeffPoly& b);

    friend bool operator==(const CoeffPoly& a, const CoeffPoly& b);

private:
    void normalize();

    std::vector<Term> terms_;
};

} // namespace resbound
