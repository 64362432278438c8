#pragma once

#include "resbound/chern_segre.hpp"
#include "resbound/laurent_series.hpp"
#include "resbound/residue.hpp"
#include "resbound/uni_poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace resbound {

/// Raised when a computed polynomial violates a structural property that holds
/// for every correct run (degree, constant term, delta-linearity, homogeneity).
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class IntegrandForm {
    /// Residue in the original variables: denominator (w+z) prod_l (lz - w)^n.
    PreChangeOfVariables,
    /// After z' = z + w: denominator z prod_l (lz - (l+1)w)^n. Used for all results.
    PostChangeOfVariables,
};

/// The jet order equals the dimension (k = n); there is no separate k.
struct IntegrandConfig {
    int n = 2;
    Rational epsilon{1, 2};
    IntegrandForm form = IntegrandForm::PostChangeOfVariables;
    int truncation_multiplier = 1;

    /// Throws std::invalid_argument unless n >= 1, 0 < epsilon < 1 and multiplier >= 1.
    void validate() const;
    OrderSpec order_spec() const { return OrderSpec::for_dimension(n, truncation_multiplier); }
};

/// Master integrand (N-free normalisation: the common factor N^{n^2} is dropped).
/// delta and d stay symbolic in the coefficients; the result is homogeneous of
/// degree n-2 in (z, w, h).
LaurentSeries build_integrand(const IntegrandConfig& cfg);

/// p(d) = p_{n+1} d^{n+1} + ... + p_1 d with p_i linear in delta.
struct DegreePolynomial {
    int n = 0;
    /// coeffs[i] is p_i as a polynomial in delta; coeffs[0] is always zero.
    std::vector<CoeffPoly> coeffs;

    const CoeffPoly& coefficient(int i) const { return coeffs.at(i); }
    CoeffPoly leading() const { return coeffs.back(); }
    /// Substitutes delta.
    UniPoly at_delta(const Rational& delta) const;
    /// The polynomial as a CoeffPoly in (d, delta).
    CoeffPoly as_coeff_poly() const;

    friend bool operator==(const DegreePolynomial&, const DegreePolynomial&) = default;
};

/// Converts the integrated residue into a DegreePolynomial after asserting
/// degree n+1 in d, zero constant term and delta-linearity (StructuralError otherwise).
DegreePolynomial to_degree_polynomial(const CoeffPoly& integral, int n);

/// Full pipeline: integrand, homogeneity check, iterated residue, h^n -> d.
DegreePolynomial tautological_integral(const IntegrandConfig& cfg);

/// C^i: residue of (n-1)!(z-w)^{n-1}((1-eps)z+eps w)^{n^2-i} divided by
/// (-1)^{n-1} z prod_l (lz-(l+1)w)^{n+1-i_l}, with i = sum i_l.
/// The sign (-1)^{n-1} is the one of the master integrand, so that
/// p_{n+1}(delta = 0) = C^0. Entries of i may be negative (e_s - e_t patterns).
Rational coefficient_C(int n, const Rational& epsilon, const std::vector<int>& i_vector,
                       int truncation_multiplier = 1);

/// Unit vector e_s of length n (optionally scaled/added by callers).
std::vector<int> unit_index(int n, int s);

struct InequalityCheck {
    std::string name;
    Rational lhs;
    Rational rhs;
    bool strict = true;
    bool holds = false;
};

/// Records lhs < rhs (strict) or lhs <= rhs.
InequalityCheck make_check(std::string name, Rational lhs, Rational rhs, bool strict = true);

/// Audits the coefficient estimates used to prove positivity: C^0 > 0, the
/// C^{e_s} and C^{e_s+e_t} bounds, p_{n+1} against C^0, the per-coefficient
/// bounds on |p_{n-s}| and the Fujiwara hypothesis |p_{n+1-l}| < (4n)^{5l} p_{n+1}.
/// Failures are recorded, never thrown.
std::vector<InequalityCheck> check_estimates(const DegreePolynomial& p, const Rational& epsilon,
                                             const Rational& delta);
std::vector<InequalityCheck> check_estimates(int n, const Rational& epsilon, const Rational& delta);

struct FujiwaraResult {
    bool certified = false;
    /// p(d) > 0 for all real d > threshold when certified (threshold = 2D).
    Rational threshold;
    std::vector<InequalityCheck> hypothesis;
};

/// If p_top > 0 and |p_{top-l}| < D^l p_top for l = 1..top, then p(d) > 0 for d > 2D.
FujiwaraResult fujiwara_positivity(const UniPoly& p, const Rational& D);

/// 1 + max_{i < top} |p_i / p_top|: every real root has absolute value below it.
Rational cauchy_root_bound(const UniPoly& p);

struct PositivityCertificate {
    bool certified = false;
    /// "fujiwara" or "cauchy": which root bound certifies all real d beyond `real_bound`.
    std::string method;
    Rational real_bound;
    /// Integers from `target` up to real_bound checked by exact evaluation (may be empty).
    std::optional<std::pair<Rational, Rational>> integer_window;
    /// Smallest d for which positivity of all integers >= it is certified.
    Rational certified_from;
    std::string diagnostic;
};

/// Certifies p(d) > 0 for every integer d >= target: Fujiwara with the given D
/// first, the Cauchy root bound as fallback, and exact evaluation of the
/// integers between target and the root bound when the bound lies above target.
PositivityCertificate certify_positive(const UniPoly& p, const Rational& D, const Rational& target);

struct BoundReport {
    int n = 0;
    Rational epsilon;
    Rational delta;
    UniPoly poly;
    Rational fujiwara_D;
    bool fujiwara_hypothesis_holds = false;
    bool certified = false;
    std::string certificate_method;
    Rational certified_positive_from;
    mpz_class ggl_computed_bound;
    mpz_class theorem_bound_ggl;
    mpz_class theorem_bound_kobayashi;
    Rational value_at_theorem_bound;
    std::vector<InequalityCheck> estimates_log;
};

/// 16 n^5 (5n+4).
mpz_class ggl_theorem_bound(int n);
/// max(2(4n)^5, (5n+3)/delta + n + 2) evaluated with the closed form 16 n^5 (5n+3) + n + 2.
mpz_class ggl_computed_bound(int n);
/// GGL theorem bound at dimension 2n-1: 16 (2n-1)^5 (10n-1).
mpz_class kobayashi_bound(int n);
/// 1/(16 n^5).
Rational standard_delta(int n);

/// Runs the pipeline at delta = 1/(16n^5), epsilon (default 1/2) and certifies
/// positivity for all d >= the theorem bound.
BoundReport ggl_degree_bound(int n, const Rational& epsilon = Rational(1, 2), int truncation_multiplier = 1);

} // namespace resbound
