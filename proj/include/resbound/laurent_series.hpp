#pragma once

#include "resbound/coeff_poly.hpp"

#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace resbound {

/// Thrown when a coefficient outside the exactly-known part of a series is requested.
class InsufficientOrder : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when exponents leave the configured range (a budget/configuration bug).
class ConfigurationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// z^exp_z * w^exp_w * h^exp_h. Ordered lexicographically by (z, w, h).
struct Monomial {
    std::int16_t exp_z = 0;
    std::int16_t exp_w = 0;
    std::int16_t exp_h = 0;

    int total_degree() const { return int(exp_z) + exp_w + exp_h; }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial make_monomial(int z, int w, int h);

/// Truncation budget of a series. All expansions are in ascending powers of w
/// (the contour z >> w); `max_w` is the largest w-exponent retained and h is
/// nilpotent above `max_h`.
struct OrderSpec {
    int max_w = 0;
    int max_h = 0;
    int min_z = INT16_MIN;
    int min_w = INT16_MIN;

    /// Default budget for dimension n: J = (n^2+n+2)*multiplier powers of w/z.
    static OrderSpec for_dimension(int n, int multiplier = 1);
    /// Budget for series in h alone (z = w = 0), used for characteristic classes.
    static OrderSpec h_only(int max_h);

    /// Componentwise most restrictive of both budgets.
    static OrderSpec intersect(const OrderSpec& a, const OrderSpec& b);

    friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

/// Sparse truncated Laurent series in z, w, h over CoeffPoly, expanded on z >> w.
///
/// Besides the budget, every series carries its precision: the largest
/// w-exponent up to which the stored coefficients are exact. Polynomials whose
/// terms all fit the budget are exact (no precision limit). Products propagate
/// precision as min(prec_a + val_b, prec_b + val_a) where val is the smallest
/// stored w-exponent, so negative w-powers are accounted for rather than trusted.
class LaurentSeries {
public:
    using TermMap = std::map<Monomial, CoeffPoly>;
    static constexpr int exact_precision = INT_MAX;

    explicit LaurentSeries(OrderSpec spec) : spec_(spec) {}

    static LaurentSeries zero(OrderSpec spec) { return LaurentSeries(spec); }
    static LaurentSeries constant(const CoeffPoly& c, OrderSpec spec);
    static LaurentSeries monomial(Monomial m, const CoeffPoly& c, OrderSpec spec);
    /// a*z + b*w + c*h with rational/CoeffPoly coefficients.
    static LaurentSeries linear(const CoeffPoly& a, const CoeffPoly& b, const CoeffPoly& c, OrderSpec spec);

    /// Expansion of 1/(a*z + b*w) on z >> w. For a != 0 this is
    /// (1/(a z)) * sum_k (-b w / (a z))^k truncated at w^max_w; for a == 0 the
    /// exact single term 1/(b w).
    static LaurentSeries linear_inverse(const Rational& a, const Rational& b, OrderSpec spec);

    const OrderSpec& order_spec() const { return spec_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Largest w-exponent known exactly, or exact_precision.
    int precision() const { return precision_; }
    bool is_exact() const { return precision_ == exact_precision; }
    /// Smallest stored w-exponent; for an empty series precision()+1 (or exact_precision).
    int valuation_w() const;

    /// Common total degree of all stored terms; nullopt when terms disagree.
    /// The empty series is reported as homogeneous of degree 0 only via
    /// is_homogeneous_of().
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous_of(int degree) const;

    /// Exact coefficient of m. Throws InsufficientOrder when m lies beyond the
    /// precision or budget of the series.
    CoeffPoly coeff(Monomial m) const;

    /// Canonical serialisation: one "z^a w^b h^c : <CoeffPoly>" line per term,
    /// in lexicographic monomial order.
    std::string to_string() const;

    /// Recomputes the series under a smaller budget (drops out-of-budget terms).
    LaurentSeries truncated(const OrderSpec& spec) const;

    /// Applies f to every coefficient (e.g. evaluating delta); zeros are dropped.
    template <class F>
    LaurentSeries map_coefficients(F&& f) const
    {
        LaurentSeries out(spec_);
        out.precision_ = precision_;
        for (const auto& [m, c] : terms_) {
            CoeffPoly v = f(c);
            if (!v.is_zero())
                out.terms_.emplace(m, std::move(v));
        }
        return out;
    }

    LaurentSeries operator-() const;
    LaurentSeries& operator+=(const LaurentSeries& o);
    LaurentSeries& operator-=(const LaurentSeries& o);
    LaurentSeries& operator*=(const CoeffPoly& c);

    friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
    friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
    friend LaurentSeries operator*(LaurentSeries a, const CoeffPoly& c) { return a *= c; }
    friend LaurentSeries operator*(const CoeffPoly& c, LaurentSeries a) { return a *= c; }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

    /// Exact equality of budget, precision and sparse term maps.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

private:
    // Inserts c at m if m fits the budget; returns false if dropped for exceeding max_w.
    bool insert_in_budget(Monomial m, CoeffPoly c);
    void drop_beyond_precision();

    OrderSpec spec_;
    TermMap terms_;
    int precision_ = exact_precision;
};

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
/// Repeated squaring; pow(a, 0) is the exact constant 1.
LaurentSeries pow(const LaurentSeries& a, unsigned e);
/// Laurent expansion of 1/(l z - (l+1) w) on z >> w; for l = 0 exactly -1/w.
LaurentSeries geom_inverse(unsigned l, const OrderSpec& spec);
/// Exact coefficient lookup, see LaurentSeries::coeff.
CoeffPoly coeff(const LaurentSeries& a, Monomial m);

/// Inverse of a series in h alone whose constant term is a nonzero rational.
LaurentSeries inverse_in_h(const LaurentSeries& a);

/// Number of workers used by the multiplication kernel. Reads RESBOUND_THREADS
/// on first use; results never depend on it.
unsigned worker_count();
void set_worker_count(unsigned workers);

} // namespace resbound
