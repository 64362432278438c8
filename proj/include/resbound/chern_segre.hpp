#pragma once

#include "resbound/laurent_series.hpp"
#include "resbound/residue.hpp"

namespace resbound {

/// Total Chern and Segre classes of a smooth degree-d hypersurface X in P^{n+1},
/// as series in h = c_1(O_X(1)) modulo h^{n+1} with coefficients polynomial in d.
struct HypersurfaceClasses {
    int n = 0;
    LaurentSeries total_chern{OrderSpec::h_only(0)};
    LaurentSeries total_segre{OrderSpec::h_only(0)};

    /// Coefficient of h^k in c(X) (a polynomial in d).
    CoeffPoly chern(int k) const;
    /// Coefficient of h^k in s(X).
    CoeffPoly segre(int k) const;
};

/// c(X) = (1+h)^{n+2} / (1+dh) and s(X) = (1+dh) / (1+h)^{n+2}, mod h^{n+1}.
HypersurfaceClasses hypersurface_segre(int n);

/// s(t) evaluated at t = h * inverse_form, where inverse_form is the expansion
/// of 1/(a z + b w):  sum_k segre(k) * (h * inverse_form)^k.
///
/// With the weights lambda_i replaced by the Chern roots of T_X,
/// 1/prod_i(lambda_i + y) = y^{-n} s(1/y); here y is the linear form of one
/// column, so this returns the Segre part s(1/y) of that column.
LaurentSeries segre_factor(const LaurentSeries& inverse_form, const HypersurfaceClasses& classes);

/// Per-column Segre factor of the post-change-of-variables integrand,
/// (1 + d h g)(1 + h g)^{-(n+2)} with g = 1/(l z - (l+1) w).
LaurentSeries segre_substituted_factor(unsigned l, int n, const OrderSpec& spec);

/// Integration over X: h^n integrates to d, so the result is value * d.
CoeffPoly integrate_over_X(const ResidueResult& r, int n);

} // namespace resbound
