#pragma once

#include "resbound/pipeline.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace resbound {

struct ProjectiveOracleTrial {
    int index = 0;
    UniPoly p;
    std::vector<Rational> lambdas;
    Rational fixed_point;
    Rational residue;
    bool agrees = false;
};

/// Random instances of the projective-space residue identity: n in 1..6,
/// deg P <= 2n, pairwise distinct rational weights. Deterministic in the seed.
std::vector<ProjectiveOracleTrial> run_projective_oracle(int trials, std::uint64_t seed);

struct PolynomialComparison {
    std::string name;
    int n = 0;
    DegreePolynomial first;
    DegreePolynomial second;
    bool agrees = false;
};

/// p(d) at budget J against p(d) at budget 2J.
PolynomialComparison truncation_doubling_check(int n, const Rational& epsilon = Rational(1, 2));
/// p(d) from the pre-change-of-variables integrand against the post form.
PolynomialComparison change_of_variables_check(int n, const Rational& epsilon = Rational(1, 2));

} // namespace resbound
