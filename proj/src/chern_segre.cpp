#include "resbound/chern_segre.hpp"

#include <string>

namespace resbound {

namespace {

CoeffPoly h_coefficient(const LaurentSeries& s, int k)
{
    auto it = s.terms().find(Monomial{0, 0, static_cast<std::int16_t>(k)});
    return it == s.terms().end() ? CoeffPoly{} : it->second;
}

} // namespace

CoeffPoly HypersurfaceClasses::chern(int k) const { return h_coefficient(total_chern, k); }

CoeffPoly HypersurfaceClasses::segre(int k) const { return h_coefficient(total_segre, k); }

HypersurfaceClasses hypersurface_segre(int n)
{
    if (n < 1)
        throw std::invalid_argument("hypersurface_segre needs n >= 1");
    const OrderSpec spec = OrderSpec::h_only(n);
    const LaurentSeries one_plus_h = LaurentSeries::linear(0, 0, 1, spec) + LaurentSeries::constant(1, spec);
    const LaurentSeries one_plus_dh =
        LaurentSeries::linear(0, 0, CoeffPoly::d(), spec) + LaurentSeries::constant(1, spec);
    const LaurentSeries ambient = pow(one_plus_h, unsigned(n + 2));

    HypersurfaceClasses out;
    out.n = n;
    out.total_chern = ambient * inverse_in_h(one_plus_dh);
    out.total_segre = one_plus_dh * inverse_in_h(ambient);
    return out;
}

LaurentSeries segre_factor(const LaurentSeries& inverse_form, const HypersurfaceClasses& classes)
{
    const OrderSpec& spec = inverse_form.order_spec();
    const LaurentSeries x = LaurentSeries::monomial({0, 0, 1}, 1, spec) * inverse_form;
    // Horner in x; terms beyond h^n vanish on X.
    LaurentSeries acc = LaurentSeries::constant(classes.segre(classes.n), spec);
    for (int k = classes.n - 1; k >= 0; --k)
        acc = acc * x + LaurentSeries::constant(classes.segre(k), spec);
    return acc;
}

LaurentSeries segre_substituted_factor(unsigned l, int n, const OrderSpec& spec)
{
    return segre_factor(geom_inverse(l, spec), hypersurface_segre(n));
}

CoeffPoly integrate_over_X(const ResidueResult& r, int n)
{
    if (r.h_degree != n)
        throw std::invalid_argument("integrate_over_X: residue carries h^" + std::to_string(r.h_degree) +
                                    ", expected h^" + std::to_string(n));
    return r.value * CoeffPoly::d();
}

} // namespace resbound
