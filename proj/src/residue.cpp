#include "resbound/residue.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace resbound {

namespace {

void require_distinct(std::span<const Rational> lambdas)
{
    if (lambdas.empty())
        throw std::invalid_argument("projective residue needs at least one weight");
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        for (std::size_t j = i + 1; j < lambdas.size(); ++j)
            if (lambdas[i] == lambdas[j])
                throw std::invalid_argument("repeated weight " + lambdas[i].to_short_string() +
                                            " in projective residue");
}

void require_degree(const LaurentSeries& expr, int degree)
{
    if (!expr.is_homogeneous_of(degree)) {
        const auto actual = expr.homogeneous_degree();
        throw NonHomogeneousError("residue integrand must be homogeneous of degree " + std::to_string(degree) +
                                  (actual ? " (found " + std::to_string(*actual) + ")" : " (mixed degrees)"));
    }
}

} // namespace

CoeffPoly zw_residue(const LaurentSeries& expr, int exp_h)
{
    return expr.coeff(make_monomial(-1, -1, exp_h));
}

ResidueResult iterated_residue(const LaurentSeries& expr, int n)
{
    if (n < 1)
        throw std::invalid_argument("iterated_residue needs n >= 1");
    require_degree(expr, n - 2);
    if (expr.order_spec().max_h < n)
        throw InsufficientOrder("series budget drops h^" + std::to_string(n));
    return {zw_residue(expr, n), n};
}

ResidueResult dehomogenized_residue(const LaurentSeries& expr, int n)
{
    require_degree(expr, n - 2);
    if (expr.order_spec().max_h < n || std::min(expr.precision(), expr.order_spec().max_w) < -1)
        throw InsufficientOrder("series precision does not reach w^-1 h^" + std::to_string(n));
    CoeffPoly sum;
    for (const auto& [m, c] : expr.terms())
        if (m.exp_w == -1 && m.exp_h == n)
            sum += c;
    return {sum, n};
}

Rational projective_residue(const UniPoly& p, std::span<const Rational> lambdas)
{
    require_distinct(lambdas);
    const int n = int(lambdas.size());
    const int deg = std::max(p.degree(), 0);

    // Residue variable -> z (dominant); homogenising variable -> w, set to 1.
    OrderSpec spec;
    spec.max_w = deg + n + 2;
    spec.max_h = 0;
    spec.min_w = 0;
    spec.min_z = -(spec.max_w + n + 2);

    LaurentSeries numerator(spec);
    for (int k = 0; k <= p.degree(); ++k)
        if (!p.coeff(k).is_zero())
            numerator += LaurentSeries::monomial(make_monomial(k, deg - k, 0), p.coeff(k), spec);

    LaurentSeries expr = numerator;
    for (const Rational& lambda : lambdas)
        expr = expr * LaurentSeries::linear_inverse(Rational(-1), lambda, spec);

    // Homogeneous of degree deg - n, so z^{-1} pairs with w^{deg-n+1}.
    const int w_power = deg - n + 1;
    if (w_power < 0)
        return Rational{};
    const CoeffPoly c = expr.coeff(make_monomial(-1, w_power, 0));
    return c.coeff(0, 0);
}

Rational residue_at_infinity(const UniPoly& p, std::span<const Rational> lambdas)
{
    return -projective_residue(p, lambdas);
}

Rational fixed_point_sum(const UniPoly& p, std::span<const Rational> lambdas)
{
    require_distinct(lambdas);
    Rational sum;
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
        Rational denom(1);
        for (std::size_t i = 0; i < lambdas.size(); ++i)
            if (i != j)
                denom *= lambdas[i] - lambdas[j];
        sum += p.eval(lambdas[j]) / denom;
    }
    return sum;
}

} // namespace resbound
