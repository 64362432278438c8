#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "resbound/chern_segre.hpp"

using namespace resbound;

namespace {

LaurentSeries one(OrderSpec spec) { return LaurentSeries::constant(CoeffPoly(Rational(1)), spec); }

LaurentSeries h_times(const CoeffPoly& c, OrderSpec spec)
{
    return LaurentSeries::monomial(make_monomial(0, 0, 1), c, spec);
}

} // namespace

TEST_CASE("classes of a curve")
{
    const HypersurfaceClasses c = hypersurface_segre(1);
    const CoeffPoly d = CoeffPoly::d();
    CHECK(c.chern(0) == CoeffPoly(Rational(1)));
    CHECK(c.chern(1) == CoeffPoly(Rational(3)) - d);
    CHECK(c.segre(0) == CoeffPoly(Rational(1)));
    CHECK(c.segre(1) == d - CoeffPoly(Rational(3)));
}

TEST_CASE("Chern and Segre identities for n = 1..8")
{
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        const HypersurfaceClasses c = hypersurface_segre(n);
        const OrderSpec spec = OrderSpec::h_only(n);
        const LaurentSeries one_dh = one(spec) + h_times(CoeffPoly::d(), spec);
        const LaurentSeries one_h = one(spec) + h_times(CoeffPoly(Rational(1)), spec);
        CHECK(one_dh * c.total_chern == pow(one_h, n + 2));
        CHECK(c.total_chern * c.total_segre == one(spec));
        CHECK(c.segre(0) == CoeffPoly(Rational(1)));
        CHECK(c.segre(1) == CoeffPoly::d() - CoeffPoly(Rational(n + 2)));
        for (int k = 0; k <= n; ++k) {
            CHECK(c.chern(k).degree_d() <= k);
            CHECK(c.segre(k).degree_d() <= k);
            CHECK(c.segre(k).degree_delta() <= 0);
        }
    }
    CHECK_THROWS_AS(hypersurface_segre(0), std::invalid_argument);
}

TEST_CASE("substituted Segre factor")
{
    for (int n = 1; n <= 4; ++n) {
        const OrderSpec spec = OrderSpec::for_dimension(n);
        for (unsigned l = 0; l <= unsigned(n); ++l) {
            CAPTURE(n);
            CAPTURE(l);
            const LaurentSeries f = segre_substituted_factor(l, n, spec);
            CHECK(f.homogeneous_degree() == 0);
            for (const auto& [m, c] : f.terms())
                if (m.exp_h == 0)
                    CHECK(((m.exp_z == 0 && m.exp_w == 0) ? c == CoeffPoly(Rational(1)) : c.is_zero()));

            // f * (1 + h g)^{n+2} == 1 + d h g.
            const LaurentSeries hg = geom_inverse(l, spec) * LaurentSeries::monomial(make_monomial(0, 0, 1),
                                                                                    CoeffPoly(Rational(1)), spec);
            const LaurentSeries lhs = f * pow(one(spec) + hg, n + 2);
            const LaurentSeries rhs = one(spec) + hg * CoeffPoly::d();
            for (const auto& [m, c] : (lhs - rhs).terms())
                CHECK((m.exp_w > lhs.precision() || c.is_zero()));
        }
    }
}

TEST_CASE("substituted Segre factor at l = 0")
{
    const int n = 3;
    const OrderSpec spec = OrderSpec::for_dimension(n);
    // (1 - d h/w) (1 + h/w + h^2/w^2 + ...)^{n+2}
    LaurentSeries geo = one(spec);
    for (int k = 1; k <= n; ++k)
        geo += LaurentSeries::monomial(make_monomial(0, -k, k), CoeffPoly(Rational(1)), spec);
    const LaurentSeries expected =
        (one(spec) - LaurentSeries::monomial(make_monomial(0, -1, 1), CoeffPoly::d(), spec)) * pow(geo, n + 2);
    CHECK(segre_substituted_factor(0, n, spec) == expected);
}

TEST_CASE("integration over the hypersurface")
{
    const CoeffPoly q = CoeffPoly::d() * CoeffPoly(Rational(2)) - CoeffPoly::delta();
    CHECK(integrate_over_X({q, 3}, 3) == q * CoeffPoly::d());
    CHECK(integrate_over_X({CoeffPoly(), 2}, 2).is_zero());
    CHECK_THROWS_AS(integrate_over_X({q, 2}, 3), std::invalid_argument);
}
