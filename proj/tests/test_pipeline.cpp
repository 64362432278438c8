#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "resbound/oracle.hpp"
#include "resbound/pipeline.hpp"

#include <tuple>

using namespace resbound;

namespace {

struct Row {
    int power;
    const char* delta0;
    const char* delta1;
};

DegreePolynomial expected(int n, std::initializer_list<Row> rows)
{
    DegreePolynomial p;
    p.n = n;
    p.coeffs.assign(n + 2, CoeffPoly{});
    for (const Row& r : rows)
        p.coeffs[r.power] = CoeffPoly(Rational::parse(r.delta0)) + CoeffPoly::monomial(Rational::parse(r.delta1), 0, 1);
    return p;
}

DegreePolynomial integral(int n, const Rational& eps, IntegrandForm form = IntegrandForm::PostChangeOfVariables,
                          int mult = 1)
{
    return tautological_integral({n, eps, form, mult});
}

bool named_check_holds(const std::vector<InequalityCheck>& log, const std::string& name)
{
    for (const auto& c : log)
        if (c.name == name)
            return c.holds;
    FAIL("missing estimate " << name);
    return false;
}

} // namespace

TEST_CASE("configuration validation")
{
    CHECK_THROWS_AS((IntegrandConfig{2, Rational(0)}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((IntegrandConfig{2, Rational(1)}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((IntegrandConfig{0, Rational(1, 2)}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((IntegrandConfig{2, Rational(1, 2), IntegrandForm::PostChangeOfVariables, 0}.validate()),
                    std::invalid_argument);
    CHECK_NOTHROW((IntegrandConfig{3, Rational(2, 3)}.validate()));
}

TEST_CASE("master integrand is homogeneous of degree n-2")
{
    for (int n = 2; n <= 4; ++n)
        for (auto form : {IntegrandForm::PreChangeOfVariables, IntegrandForm::PostChangeOfVariables})
            CHECK(build_integrand({n, Rational(1, 2), form, 1}).is_homogeneous_of(n - 2));
}

// Reference values from an independent symbolic computation of the same residue.
TEST_CASE("frozen polynomials")
{
    CHECK(integral(2, Rational(1, 2)) ==
          expected(2, {{1, "887/8", "-1344"}, {2, "-3/4", "432"}, {3, "11/4", "-24"}}));
    CHECK(integral(2, Rational(1, 3)) ==
          expected(2, {{1, "13376/81", "-5632/3"}, {2, "-64/9", "1792/3"}, {3, "472/81", "-32"}}));
    CHECK(integral(3, Rational(1, 2)) == expected(3, {{1, "3709837/512", "-401669955/4096"},
                                                      {2, "-4355259/8192", "59082723/2048"},
                                                      {3, "124335/8192", "-5807781/4096"},
                                                      {4, "427/1024", "-175851/2048"}}));
    CHECK(integral(2, Rational(1, 2)).at_delta(Rational(1, 512)) ==
          UniPoly({Rational(0), Rational(433, 4), Rational(3, 32), Rational(173, 64)}));
}

TEST_CASE("structure of p(d)")
{
    for (int n = 2; n <= 5; ++n) {
        for (const Rational& eps : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
            CAPTURE(n);
            CAPTURE(eps);
            const DegreePolynomial p = integral(n, eps);
            const CoeffPoly full = p.as_coeff_poly();
            CHECK(full.degree_d() == n + 1);
            CHECK(full.degree_delta() == 1);
            CHECK(full.eval_d(Rational(0)).is_zero());
            CHECK(p.leading().coeff(0, 0).sign() > 0);
            for (int i = 1; i <= n + 1; ++i)
                CHECK(p.coefficient(i).degree_d() <= 0);
        }
    }
}

TEST_CASE("structural assertion rejects malformed residues")
{
    const CoeffPoly d = CoeffPoly::d();
    const CoeffPoly e = CoeffPoly::delta();
    CHECK_NOTHROW(to_degree_polynomial(d * d * d + d * e, 2));
    CHECK_THROWS_AS(to_degree_polynomial(d * d + d, 2), StructuralError);
    CHECK_THROWS_AS(to_degree_polynomial(d * d * d + CoeffPoly(Rational(1)), 2), StructuralError);
    CHECK_THROWS_AS(to_degree_polynomial(d * d * d + d * e * e, 2), StructuralError);
}

TEST_CASE("change of variables leaves p(d) unchanged")
{
    for (int n = 2; n <= 4; ++n)
        CHECK(integral(n, Rational(1, 2), IntegrandForm::PreChangeOfVariables) == integral(n, Rational(1, 2)));
    CHECK(integral(2, Rational(1, 3), IntegrandForm::PreChangeOfVariables) == integral(2, Rational(1, 3)));
    CHECK(change_of_variables_check(3).agrees);
}

TEST_CASE("doubling the truncation budget leaves p(d) unchanged")
{
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        CHECK(integral(n, Rational(1, 2), IntegrandForm::PostChangeOfVariables, 2) == integral(n, Rational(1, 2)));
    }
    CHECK(truncation_doubling_check(2, Rational(2, 3)).agrees);
}

TEST_CASE("leading coefficient")
{
    for (int n = 2; n <= 5; ++n) {
        CAPTURE(n);
        const Rational eps(1, 2);
        const DegreePolynomial p = integral(n, eps);
        const Rational c0 = coefficient_C(n, eps, std::vector<int>(n, 0));
        CHECK(p.leading().coeff(0, 0) == c0);
        Rational sum;
        for (int s = 0; s < n; ++s)
            sum += coefficient_C(n, eps, unit_index(n, s));
        CHECK(p.leading().coeff(0, 1) == -Rational(2 * n * n * n) * sum);
    }
    CHECK(coefficient_C(2, Rational(1, 2), {0, 0}) == Rational(11, 4));
    CHECK(coefficient_C(3, Rational(1, 2), {0, 0, 0}) == Rational(427, 1024));
    CHECK(coefficient_C(4, Rational(1, 2), {0, 0, 0, 0}) == Rational(7119949, 6879707136L));
}

TEST_CASE("leading coefficient is positive below the delta frontier")
{
    for (int n = 2; n <= 5; ++n) {
        for (const Rational& eps : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
            const Rational frontier = eps * (Rational(1) - eps) / Rational(2 * n * n * n * n * n);
            const CoeffPoly lead = integral(n, eps).leading();
            for (const Rational& delta : {Rational(0), frontier / Rational(2), frontier * Rational(999, 1000)}) {
                CAPTURE(n);
                CAPTURE(delta);
                CHECK(lead.eval(Rational(0), delta).sign() > 0);
            }
        }
    }
}

TEST_CASE("C^0 is positive")
{
    for (int n = 2; n <= 6; ++n)
        CHECK(coefficient_C(n, Rational(1, 2), std::vector<int>(n, 0)).sign() > 0);
}

TEST_CASE("estimates on the C coefficients")
{
    for (int n = 2; n <= 5; ++n) {
        const Rational eps(1, 2);
        const Rational eps1 = eps * (Rational(1) - eps);
        const Rational c0 = coefficient_C(n, eps, std::vector<int>(n, 0));
        for (int s = 0; s < n; ++s) {
            CAPTURE(n);
            CAPTURE(s);
            CHECK(coefficient_C(n, eps, unit_index(n, s)) < Rational(n) * c0 / eps1);
            if (n > 4)
                continue;
            for (int t = s; t < n; ++t) {
                std::vector<int> i = unit_index(n, s);
                i[t] += 1;
                CHECK(coefficient_C(n, eps, i) < Rational(n * n) * c0 / (eps1 * eps1));
            }
        }
    }
}

TEST_CASE("estimate chain audit")
{
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        const auto log = check_estimates(n, Rational(1, 2), standard_delta(n));
        const std::string top = "p_" + std::to_string(n + 1);
        CHECK(named_check_holds(log, "0 < C^0"));
        CHECK(named_check_holds(log, "C^0/2 <= " + top));
        for (int l = 1; l <= n + 1; ++l)
            CHECK(named_check_holds(log, "|p_" + std::to_string(n + 1 - l) + "| < (4n)^" + std::to_string(5 * l) +
                                             "*" + top));
        for (const auto& c : log)
            CHECK(c.holds == (c.strict ? c.lhs < c.rhs : c.lhs <= c.rhs));
    }
    // The intermediate bound on |p_n| is recorded as failing from n = 3 on.
    CHECK(named_check_holds(check_estimates(2, Rational(1, 2), standard_delta(2)), "|p_2| < delta*n^9*C^0/(eps(1-eps))^1"));
    CHECK_FALSE(named_check_holds(check_estimates(3, Rational(1, 2), standard_delta(3)),
                                  "|p_3| < delta*n^9*C^0/(eps(1-eps))^1"));
}

TEST_CASE("Fujiwara certificate")
{
    const FujiwaraResult boundary = fujiwara_positivity(UniPoly({Rational(0), Rational(-1), Rational(1)}), Rational(1));
    CHECK_FALSE(boundary.certified);
    const FujiwaraResult ok = fujiwara_positivity(UniPoly({Rational(0), Rational(-1), Rational(2)}), Rational(1));
    CHECK(ok.certified);
    CHECK(ok.threshold == Rational(2));
    CHECK(UniPoly({Rational(0), Rational(-1), Rational(2)}).eval(Rational(3)) == Rational(15));
    CHECK_FALSE(fujiwara_positivity(UniPoly({Rational(1), Rational(-1)}), Rational(5)).certified);

    for (int n = 2; n <= 4; ++n) {
        const UniPoly p = integral(n, Rational(1, 2)).at_delta(standard_delta(n));
        CHECK(fujiwara_positivity(p, Rational(4 * n).pow(5)).certified);
    }
}

TEST_CASE("root bound and positivity certificate")
{
    // (d - 3)(d - 5) = d^2 - 8d + 15
    const UniPoly q({Rational(15), Rational(-8), Rational(1)});
    CHECK(cauchy_root_bound(q) == Rational(16));
    const PositivityCertificate above = certify_positive(q, Rational(1), Rational(100));
    CHECK(above.certified);
    const PositivityCertificate window = certify_positive(q, Rational(1), Rational(6));
    CHECK(window.certified);
    CHECK(window.certified_from == Rational(6));
    const PositivityCertificate fails = certify_positive(q, Rational(1), Rational(4));
    CHECK_FALSE(fails.certified);
    CHECK_FALSE(fails.diagnostic.empty());
}

TEST_CASE("bound formulas")
{
    CHECK(ggl_theorem_bound(2) == 7168);
    CHECK(ggl_theorem_bound(3) == 73872);
    CHECK(ggl_computed_bound(2) == 6660);
    CHECK(kobayashi_bound(1) == 144);
    CHECK(kobayashi_bound(2) == 73872);
    CHECK_THROWS_AS(kobayashi_bound(0), std::invalid_argument);
    CHECK(standard_delta(2) == Rational(1, 512));
    for (int n = 1; n <= 40; ++n) {
        CHECK(ggl_computed_bound(n) <= ggl_theorem_bound(n));
        CHECK(kobayashi_bound(n) == ggl_theorem_bound(2 * n - 1));
        // max(2(4n)^5, (5n+3)/delta + n + 2) once (5n+3)/delta dominates.
        const mpz_class a = 2 * mpz_class(4 * n) * (4 * n) * (4 * n) * (4 * n) * (4 * n);
        const Rational b = Rational(5 * n + 3) / standard_delta(n) + Rational(n + 2);
        if (n >= 25)
            CHECK(Rational(ggl_computed_bound(n)) == std::max(Rational(a), b));
    }
}

TEST_CASE("positivity at the theorem bound")
{
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        const BoundReport r = ggl_degree_bound(n);
        CHECK(r.certified);
        CHECK(r.fujiwara_hypothesis_holds);
        CHECK(r.certified_positive_from <= Rational(r.ggl_computed_bound));
        CHECK(r.value_at_theorem_bound.sign() > 0);
        CHECK(r.value_at_theorem_bound == r.poly.eval(Rational(r.theorem_bound_ggl)));
        const mpz_class start = r.ggl_computed_bound;
        for (mpz_class d = start; d <= start + 100; ++d)
            CHECK(r.poly.eval(Rational(d)).sign() > 0);
        mpz_class from = r.certified_positive_from.num() / r.certified_positive_from.den();
        for (mpz_class d = from; d <= from + 100; ++d)
            CHECK(r.poly.eval(Rational(d)).sign() > 0);
    }
    CHECK_THROWS_AS(ggl_degree_bound(1), std::invalid_argument);
}
