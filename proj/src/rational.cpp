#include "resbound/rational.hpp"

#include <cctype>

namespace resbound {

namespace {

bool is_decimal_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long num, long den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, 1) / mpq_class(den, 1);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_part = text.substr(0, slash);
    if (!is_decimal_integer(num_part))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num_part));

    const auto den_part = text.substr(slash + 1);
    if (!is_decimal_integer(den_part) || den_part.front() == '-' || den_part.front() == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    const mpz_class den = parse_integer(den_part);
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    mpq_class q(parse_integer(num_part), den);
    return Rational(std::move(q));
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(unsigned e) const
{
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const
{
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class factorial(unsigned long n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace resbound
