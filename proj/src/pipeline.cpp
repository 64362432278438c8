#include "resbound/pipeline.hpp"

#include <algorithm>
#include <sstream>

namespace resbound {

namespace {

Rational sign_power(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

Rational rat(const mpz_class& z) { return Rational(z); }

Rational int_pow(long base, unsigned e) { return Rational(base).pow(e); }

// Coefficient of h in the second factor of the numerator:
// -2 delta n^3 d - (4n^2 - 2 n^3 delta (n+2) - 4).
CoeffPoly morse_h_coefficient(int n)
{
    const long n3 = long(n) * n * n;
    CoeffPoly c = CoeffPoly::monomial(Rational(-2 * n3), 1, 1);
    c += CoeffPoly(Rational(-(4L * n * n - 4)));
    c += CoeffPoly::monomial(Rational(2 * n3 * (n + 2)), 0, 1);
    return c;
}

// Product over columns l = 0..n-1 of inverse_l^exponent * s(h * inverse_l),
// with the l = 0 column (the only one with negative w-powers) applied last.
LaurentSeries column_product(const std::vector<LaurentSeries>& inverses, unsigned exponent,
                             const HypersurfaceClasses& classes, const OrderSpec& spec)
{
    LaurentSeries acc = LaurentSeries::constant(1, spec);
    for (std::size_t l = 1; l < inverses.size(); ++l)
        acc = acc * (pow(inverses[l], exponent) * segre_factor(inverses[l], classes));
    return acc;
}

} // namespace

void IntegrandConfig::validate() const
{
    if (n < 1)
        throw std::invalid_argument("dimension n must be >= 1");
    if (!(epsilon > Rational(0) && epsilon < Rational(1)))
        throw std::invalid_argument("epsilon must satisfy 0 < epsilon < 1 (got " + epsilon.to_short_string() + ")");
    if (truncation_multiplier < 1)
        throw std::invalid_argument("truncation multiplier must be >= 1");
}

LaurentSeries build_integrand(const IntegrandConfig& cfg)
{
    cfg.validate();
    const int n = cfg.n;
    const OrderSpec spec = cfg.order_spec();
    const HypersurfaceClasses classes = hypersurface_segre(n);
    const Rational one_minus_eps = Rational(1) - cfg.epsilon;
    const bool post = cfg.form == IntegrandForm::PostChangeOfVariables;

    // u = w + (1-eps) z before the change of variables, (1-eps) z + eps w after it.
    const Rational w_coeff = post ? cfg.epsilon : Rational(1);
    const LaurentSeries lead_factor = LaurentSeries::linear(one_minus_eps, w_coeff, 4, spec);
    const LaurentSeries morse_factor = LaurentSeries::linear(one_minus_eps, w_coeff, morse_h_coefficient(n), spec);
    const unsigned n2 = unsigned(n * n);
    const LaurentSeries numerator = pow(lead_factor, n2 - 1) * morse_factor;

    std::vector<LaurentSeries> inverses;
    inverses.reserve(n);
    for (int l = 0; l < n; ++l)
        inverses.push_back(post ? geom_inverse(unsigned(l), spec)
                                : LaurentSeries::linear_inverse(Rational(l), Rational(-1), spec));

    LaurentSeries expr = column_product(inverses, unsigned(n), classes, spec);

    // (n-1)! (z-w)^{n-1} / ((-1)^{n-1} z)  after the change of variables,
    // (n-1)! (-z)^{n-1} / (w+z)            before it.
    const Rational scalar = rat(factorial(n - 1)) * sign_power(n - 1);
    if (post) {
        expr = expr * pow(LaurentSeries::linear(1, -1, 0, spec), unsigned(n - 1));
        expr = expr * numerator;
        expr = expr * LaurentSeries::monomial(make_monomial(-1, 0, 0), scalar, spec);
    } else {
        expr = expr * LaurentSeries::linear_inverse(1, 1, spec);
        expr = expr * numerator;
        expr = expr * LaurentSeries::monomial(make_monomial(n - 1, 0, 0), scalar, spec);
    }
    expr = expr * (pow(inverses[0], unsigned(n)) * segre_factor(inverses[0], classes));

    if (!expr.is_homogeneous_of(n - 2))
        throw StructuralError("master integrand is not homogeneous of degree n-2");
    return expr;
}

UniPoly DegreePolynomial::at_delta(const Rational& delta) const
{
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& p : coeffs)
        c.push_back(p.eval(0, delta));
    return UniPoly(std::move(c));
}

CoeffPoly DegreePolynomial::as_coeff_poly() const
{
    CoeffPoly out;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (const auto& t : coeffs[i].terms())
            out += CoeffPoly::monomial(t.value, unsigned(i), t.key.deg_delta);
    return out;
}

DegreePolynomial to_degree_polynomial(const CoeffPoly& integral, int n)
{
    if (integral.degree_d() != n + 1)
        throw StructuralError("integral has d-degree " + std::to_string(integral.degree_d()) + ", expected " +
                              std::to_string(n + 1));
    if (integral.degree_delta() > 1)
        throw StructuralError("integral is not linear in delta");
    DegreePolynomial p;
    p.n = n;
    p.coeffs.assign(n + 2, CoeffPoly{});
    for (const auto& t : integral.terms())
        p.coeffs[t.key.deg_d] += CoeffPoly::monomial(t.value, 0, t.key.deg_delta);
    if (!p.coeffs[0].is_zero())
        throw StructuralError("integral has nonzero constant term in d");
    return p;
}

DegreePolynomial tautological_integral(const IntegrandConfig& cfg)
{
    const LaurentSeries expr = build_integrand(cfg);
    const ResidueResult r = iterated_residue(expr, cfg.n);
    return to_degree_polynomial(integrate_over_X(r, cfg.n), cfg.n);
}

std::vector<int> unit_index(int n, int s)
{
    std::vector<int> e(n, 0);
    e.at(s) = 1;
    return e;
}

Rational coefficient_C(int n, const Rational& epsilon, const std::vector<int>& i_vector, int truncation_multiplier)
{
    IntegrandConfig cfg{n, epsilon, IntegrandForm::PostChangeOfVariables, truncation_multiplier};
    cfg.validate();
    if (int(i_vector.size()) != n)
        throw std::invalid_argument("index vector must have n entries");
    int total = 0;
    for (int v : i_vector) {
        if (v > n + 1)
            throw std::invalid_argument("index entries must be <= n+1");
        total += v;
    }
    if (total > n * n)
        throw std::invalid_argument("index total exceeds n^2");

    OrderSpec spec = cfg.order_spec();
    spec.max_h = 0;
    spec.min_w = std::min(spec.min_w, -(n + 2 - i_vector[0]));

    LaurentSeries expr = LaurentSeries::constant(1, spec);
    for (int l = 1; l < n; ++l)
        expr = expr * pow(geom_inverse(unsigned(l), spec), unsigned(n + 1 - i_vector[l]));
    expr = expr * pow(LaurentSeries::linear(1, -1, 0, spec), unsigned(n - 1));
    expr = expr * pow(LaurentSeries::linear(Rational(1) - epsilon, epsilon, 0, spec), unsigned(n * n - total));
    const Rational scalar = rat(factorial(n - 1)) * sign_power(n - 1);
    expr = expr * LaurentSeries::monomial(make_monomial(-1, 0, 0), scalar, spec);
    expr = expr * pow(geom_inverse(0, spec), unsigned(n + 1 - i_vector[0]));

    if (!expr.is_homogeneous_of(-2))
        throw StructuralError("C^i integrand is not homogeneous of degree -2");
    return zw_residue(expr, 0).coeff(0, 0);
}

InequalityCheck make_check(std::string name, Rational lhs, Rational rhs, bool strict)
{
    const bool holds = strict ? lhs < rhs : lhs <= rhs;
    return {std::move(name), std::move(lhs), std::move(rhs), strict, holds};
}

std::vector<InequalityCheck> check_estimates(const DegreePolynomial& p, const Rational& epsilon,
                                             const Rational& delta)
{
    const int n = p.n;
    const Rational eps1 = epsilon * (Rational(1) - epsilon);
    const Rational c0 = coefficient_C(n, epsilon, std::vector<int>(n, 0));
    const UniPoly poly = p.at_delta(delta);
    const Rational lead = poly.coeff(n + 1);
    std::vector<InequalityCheck> log;

    log.push_back(make_check("0 < C^0", 0, c0));
    for (int s = 0; s < n; ++s) {
        const Rational ces = coefficient_C(n, epsilon, unit_index(n, s));
        log.push_back(make_check("C^{e_" + std::to_string(s) + "} < n*C^0/(eps(1-eps))", ces, Rational(n) * c0 / eps1));
    }
    for (int s = 0; s < n; ++s) {
        for (int t = s; t < n; ++t) {
            std::vector<int> idx(n, 0);
            idx[s] += 1;
            idx[t] += 1;
            const Rational cst = coefficient_C(n, epsilon, idx);
            log.push_back(make_check("C^{e_" + std::to_string(s) + "+e_" + std::to_string(t) +
                                         "} < n^2*C^0/(eps(1-eps))^2",
                                     cst, Rational(n * n) * c0 / (eps1 * eps1)));
        }
    }

    const Rational n5 = int_pow(n, 5);
    log.push_back(make_check("C^0*(1 - 2*delta*n^5/(eps(1-eps))) < p_" + std::to_string(n + 1),
                             c0 * (Rational(1) - Rational(2) * delta * n5 / eps1), lead));
    log.push_back(make_check("C^0/2 <= p_" + std::to_string(n + 1), c0 / Rational(2), lead, false));

    const long four_n = 4L * n;
    for (int s = 0; s < n; ++s) {
        const Rational abs_p = poly.coeff(n - s).abs();
        const std::string pname = "|p_" + std::to_string(n - s) + "|";
        log.push_back(make_check(pname + " < delta*n^" + std::to_string(5 * s + 9) + "*C^0/(eps(1-eps))^" +
                                     std::to_string(s + 1),
                                 abs_p, delta * int_pow(n, unsigned(5 * s + 9)) * c0 / eps1.pow(unsigned(s + 1))));
        log.push_back(make_check(pname + " < (4n)^" + std::to_string(5 * s + 4) + "*C^0", abs_p,
                                 int_pow(four_n, unsigned(5 * s + 4)) * c0));
    }
    for (int l = 1; l <= n + 1; ++l) {
        log.push_back(make_check("|p_" + std::to_string(n + 1 - l) + "| < (4n)^" + std::to_string(5 * l) + "*p_" +
                                     std::to_string(n + 1),
                                 poly.coeff(n + 1 - l).abs(), int_pow(four_n, unsigned(5 * l)) * lead));
    }
    return log;
}

std::vector<InequalityCheck> check_estimates(int n, const Rational& epsilon, const Rational& delta)
{
    return check_estimates(tautological_integral({n, epsilon}), epsilon, delta);
}

FujiwaraResult fujiwara_positivity(const UniPoly& p, const Rational& D)
{
    FujiwaraResult out;
    out.threshold = Rational(2) * D;
    const int top = p.degree();
    if (top < 0) {
        out.hypothesis.push_back(make_check("0 < p_top", 0, 0));
        return out;
    }
    const Rational lead = p.leading();
    out.hypothesis.push_back(make_check("0 < p_" + std::to_string(top), 0, lead));
    for (int l = 1; l <= top; ++l)
        out.hypothesis.push_back(make_check("|p_" + std::to_string(top - l) + "| < D^" + std::to_string(l) + "*p_" +
                                                std::to_string(top),
                                            p.coeff(top - l).abs(), D.pow(unsigned(l)) * lead));
    out.certified = std::all_of(out.hypothesis.begin(), out.hypothesis.end(),
                                [](const InequalityCheck& c) { return c.holds; });
    return out;
}

Rational cauchy_root_bound(const UniPoly& p)
{
    if (p.degree() < 1)
        return Rational(1);
    Rational m;
    for (int i = 0; i < p.degree(); ++i)
        m = std::max(m, (p.coeff(i) / p.leading()).abs());
    return Rational(1) + m;
}

PositivityCertificate certify_positive(const UniPoly& p, const Rational& D, const Rational& target)
{
    // Integer windows longer than this are not swept by evaluation.
    constexpr long max_window = 50'000'000;

    PositivityCertificate cert;
    if (p.degree() < 0 || p.leading().sign() <= 0) {
        cert.diagnostic = "leading coefficient is not positive";
        return cert;
    }
    const FujiwaraResult fw = fujiwara_positivity(p, D);
    const Rational cauchy = cauchy_root_bound(p);
    if (fw.certified && fw.threshold <= cauchy) {
        cert.method = "fujiwara";
        cert.real_bound = fw.threshold;
    } else {
        cert.method = "cauchy";
        cert.real_bound = cauchy;
    }

    if (target > cert.real_bound) {
        cert.certified = true;
        cert.certified_from = cert.real_bound;
        return cert;
    }

    // Cover [target, real_bound] by exact evaluation at every integer.
    const mpz_class lo = [&] {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), target.num().get_mpz_t(), target.den().get_mpz_t());
        return q;
    }();
    const mpz_class hi = [&] {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), cert.real_bound.num().get_mpz_t(), cert.real_bound.den().get_mpz_t());
        return q;
    }();
    if (hi - lo > max_window) {
        std::ostringstream os;
        os << "integer window [" << lo << ", " << hi << "] too large to sweep";
        cert.diagnostic = os.str();
        return cert;
    }
    // Clearing denominators keeps the sign and lets the sweep run on integers.
    mpz_class common = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> scaled;
    for (const auto& c : p.coeffs())
        scaled.push_back(c.num() * (common / c.den()));
    mpz_class acc;
    for (mpz_class d = lo; d <= hi; ++d) {
        acc = 0;
        for (auto it = scaled.rbegin(); it != scaled.rend(); ++it)
            acc = acc * d + *it;
        if (sgn(acc) <= 0) {
            std::ostringstream os;
            os << "p(" << d << ") <= 0";
            cert.diagnostic = os.str();
            return cert;
        }
    }
    cert.integer_window = std::make_pair(Rational(lo), Rational(hi));
    cert.certified = true;
    cert.certified_from = Rational(lo);
    return cert;
}

mpz_class ggl_theorem_bound(int n)
{
    mpz_class n5;
    mpz_ui_pow_ui(n5.get_mpz_t(), unsigned(n), 5);
    return 16 * n5 * (5 * n + 4);
}

mpz_class ggl_computed_bound(int n)
{
    mpz_class n5;
    mpz_ui_pow_ui(n5.get_mpz_t(), unsigned(n), 5);
    return 16 * n5 * (5 * n + 3) + n + 2;
}

mpz_class kobayashi_bound(int n)
{
    if (n < 1)
        throw std::invalid_argument("kobayashi_bound needs n >= 1");
    return ggl_theorem_bound(2 * n - 1);
}

Rational standard_delta(int n) { return Rational(1) / (Rational(16) * int_pow(n, 5)); }

BoundReport ggl_degree_bound(int n, const Rational& epsilon, int truncation_multiplier)
{
    if (n < 2)
        throw std::invalid_argument("ggl_degree_bound needs n >= 2");
    BoundReport r;
    r.n = n;
    r.epsilon = epsilon;
    r.delta = standard_delta(n);
    const DegreePolynomial p =
        tautological_integral({n, epsilon, IntegrandForm::PostChangeOfVariables, truncation_multiplier});
    r.poly = p.at_delta(r.delta);
    r.fujiwara_D = int_pow(4L * n, 5);
    r.ggl_computed_bound = ggl_computed_bound(n);
    r.theorem_bound_ggl = ggl_theorem_bound(n);
    r.theorem_bound_kobayashi = kobayashi_bound(n);
    r.fujiwara_hypothesis_holds = fujiwara_positivity(r.poly, r.fujiwara_D).certified;

    const PositivityCertificate cert = certify_positive(r.poly, r.fujiwara_D, Rational(r.ggl_computed_bound));
    r.certified = cert.certified;
    r.certificate_method = cert.method;
    r.certified_positive_from = cert.certified_from;
    r.value_at_theorem_bound = r.poly.eval(Rational(r.theorem_bound_ggl));
    r.estimates_log = check_estimates(p, epsilon, r.delta);
    return r;
}

} // namespace resbound
