#include "resbound/oracle.hpp"

#include <random>

namespace resbound {

namespace {

long draw(std::mt19937_64& rng, long lo, long hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng() % span);
}

Rational draw_rational(std::mt19937_64& rng) { return Rational(draw(rng, -30, 30), draw(rng, 1, 9)); }

} // namespace

std::vector<ProjectiveOracleTrial> run_projective_oracle(int trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<ProjectiveOracleTrial> out;
    out.reserve(trials);
    for (int t = 0; t < trials; ++t) {
        ProjectiveOracleTrial trial;
        trial.index = t;
        const int n = int(draw(rng, 1, 6));
        const int deg = int(draw(rng, 0, 2 * n));
        std::vector<Rational> coeffs;
        for (int k = 0; k <= deg; ++k)
            coeffs.push_back(draw_rational(rng));
        if (coeffs.back().is_zero())
            coeffs.back() = Rational(1);
        trial.p = UniPoly(std::move(coeffs));
        while (int(trial.lambdas.size()) < n) {
            Rational candidate = draw_rational(rng);
            bool fresh = true;
            for (const auto& l : trial.lambdas)
                fresh = fresh && l != candidate;
            if (fresh)
                trial.lambdas.push_back(std::move(candidate));
        }
        trial.fixed_point = fixed_point_sum(trial.p, trial.lambdas);
        trial.residue = residue_at_infinity(trial.p, trial.lambdas);
        trial.agrees = trial.fixed_point == trial.residue;
        out.push_back(std::move(trial));
    }
    return out;
}

PolynomialComparison truncation_doubling_check(int n, const Rational& epsilon)
{
    PolynomialComparison c;
    c.name = "truncation-doubling";
    c.n = n;
    c.first = tautological_integral({n, epsilon, IntegrandForm::PostChangeOfVariables, 1});
    c.second = tautological_integral({n, epsilon, IntegrandForm::PostChangeOfVariables, 2});
    c.agrees = c.first == c.second;
    return c;
}

PolynomialComparison change_of_variables_check(int n, const Rational& epsilon)
{
    PolynomialComparison c;
    c.name = "change-of-variables";
    c.n = n;
    c.first = tautological_integral({n, epsilon, IntegrandForm::PreChangeOfVariables, 1});
    c.second = tautological_integral({n, epsilon, IntegrandForm::PostChangeOfVariables, 1});
    c.agrees = c.first == c.second;
    return c;
}

} // namespace resbound
