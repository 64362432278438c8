#pragma once

#include "resbound/laurent_series.hpp"
#include "resbound/uni_poly.hpp"

#include <span>
#include <stdexcept>

namespace resbound {

/// Raised when a residue is requested from an expression of the wrong degree.
class NonHomogeneousError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ResidueResult {
    CoeffPoly value;
    int h_degree = 0;
};

/// Coefficient of (zw)^{-1} h^exp_h in an expansion on z >> w.
CoeffPoly zw_residue(const LaurentSeries& expr, int exp_h);

/// Iterated residue Res_{w=inf} Res_{z=inf} of an expression homogeneous of
/// degree n-2 in (z, w, h): by degree count the (zw)^{-1} part is a pure h^n
/// class, whose coefficient is returned. The residue is literally the
/// coefficient of (zw)^{-1}; no orientation sign is applied.
ResidueResult iterated_residue(const LaurentSeries& expr, int n);

/// Same value via z = 1: sums the coefficients of w^{-1} h^n over all z-powers.
/// Only valid (and only enabled) after the homogeneity check passes.
ResidueResult dehomogenized_residue(const LaurentSeries& expr, int n);

/// Coefficient of w^{-1} in the 1/w-expansion of P(w) / prod_i (lambda_i - w).
/// Evaluated through the series kernel: w plays the dominant variable and the
/// lambda_i are attached to an auxiliary homogenising variable set to 1.
Rational projective_residue(const UniPoly& p, std::span<const Rational> lambdas);

/// Oriented residue at infinity, Res_{w=inf} = -[w^{-1}] of the same form.
Rational residue_at_infinity(const UniPoly& p, std::span<const Rational> lambdas);

/// Fixed-point side of the projective-space localisation identity:
/// sum_j P(lambda_j) / prod_{i != j} (lambda_i - lambda_j).
Rational fixed_point_sum(const UniPoly& p, std::span<const Rational> lambdas);

} // namespace resbound
