#include "resbound/coeff_poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace resbound {

namespace {

constexpr unsigned max_degree = std::numeric_limits<std::uint8_t>::max();

CoeffKey key_product(CoeffKey a, CoeffKey b)
{
    const unsigned dd = unsigned(a.deg_d) + b.deg_d;
    const unsigned de = unsigned(a.deg_delta) + b.deg_delta;
    if (dd > max_degree || de > max_degree)
        throw std::overflow_error("CoeffPoly degree overflow");
    return {static_cast<std::uint8_t>(dd), static_cast<std::uint8_t>(de)};
}

// Merges two key-sorted term lists; sign is applied to b.
std::vector<CoeffPoly::Term> merge(const std::vector<CoeffPoly::Term>& a,
                                   const std::vector<CoeffPoly::Term>& b, bool negate_b)
{
    std::vector<CoeffPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].key < b[j].key)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].key < a[i].key) {
            out.push_back({b[j].key, negate_b ? -b[j].value : b[j].value});
            ++j;
        } else {
            Rational v = negate_b ? a[i].value - b[j].value : a[i].value + b[j].value;
            if (!v.is_zero())
                out.push_back({a[i].key, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

CoeffPoly::CoeffPoly(const Rational& c)
{
    if (!c.is_zero())
        terms_.push_back({CoeffKey{}, c});
}

CoeffPoly CoeffPoly::monomial(const Rational& c, unsigned deg_d, unsigned deg_delta)
{
    if (deg_d > max_degree || deg_delta > max_degree)
        throw std::overflow_error("CoeffPoly degree overflow");
    CoeffPoly p;
    if (!c.is_zero())
        p.terms_.push_back({CoeffKey{static_cast<std::uint8_t>(deg_d), static_cast<std::uint8_t>(deg_delta)}, c});
    return p;
}

Rational CoeffPoly::coeff(unsigned deg_d, unsigned deg_delta) const
{
    for (const auto& t : terms_)
        if (t.key.deg_d == deg_d && t.key.deg_delta == deg_delta)
            return t.value;
    return Rational{};
}

int CoeffPoly::degree_d() const
{
    int deg = -1;
    for (const auto& t : terms_)
        deg = std::max(deg, int(t.key.deg_d));
    return deg;
}

int CoeffPoly::degree_delta() const
{
    int deg = -1;
    for (const auto& t : terms_)
        deg = std::max(deg, int(t.key.deg_delta));
    return deg;
}

CoeffPoly CoeffPoly::eval_delta(const Rational& delta) const
{
    CoeffPoly out;
    for (const auto& t : terms_)
        out += monomial(t.value * delta.pow(t.key.deg_delta), t.key.deg_d, 0);
    return out;
}

CoeffPoly CoeffPoly::eval_d(const Rational& d) const
{
    CoeffPoly out;
    for (const auto& t : terms_)
        out += monomial(t.value * d.pow(t.key.deg_d), 0, t.key.deg_delta);
    return out;
}

Rational CoeffPoly::eval(const Rational& d, const Rational& delta) const
{
    Rational out;
    for (const auto& t : terms_)
        out += t.value * d.pow(t.key.deg_d) * delta.pow(t.key.deg_delta);
    return out;
}

std::string CoeffPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Highest d-power first reads naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& t = *it;
        Rational c = t.value;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            c = c.abs();
        }
        first = false;
        const bool bare = t.key.deg_d == 0 && t.key.deg_delta == 0;
        if (bare || c != Rational(1)) {
            os << c;
            if (!bare)
                os << "*";
        }
        bool need_star = false;
        if (t.key.deg_d > 0) {
            os << "d";
            if (t.key.deg_d > 1)
                os << "^" << int(t.key.deg_d);
            need_star = true;
        }
        if (t.key.deg_delta > 0) {
            if (need_star)
                os << "*";
            os << "delta";
            if (t.key.deg_delta > 1)
                os << "^" << int(t.key.deg_delta);
        }
    }
    return os.str();
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o)
{
    if (o.terms_.empty())
        return *this;
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o)
{
    if (o.terms_.empty())
        return *this;
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

CoeffPoly& CoeffPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.value *= c;
    return *this;
}

CoeffPoly operator-(const CoeffPoly& a)
{
    CoeffPoly out = a;
    for (auto& t : out.terms_)
        t.value = -t.value;
    return out;
}

void CoeffPoly::normalize()
{
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.key < y.key; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().key == t.key)
            out.back().value += t.value;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.value.is_zero(); });
    terms_ = std::move(out);
}

void CoeffPoly::add_product(const CoeffPoly& a, const CoeffPoly& b)
{
    if (a.terms_.empty() || b.terms_.empty())
        return;
    if (a.terms_.size() == 1 && b.terms_.size() == 1 && terms_.empty()) {
        terms_.push_back({key_product(a.terms_[0].key, b.terms_[0].key), a.terms_[0].value * b.terms_[0].value});
        return;
    }
    CoeffPoly prod;
    prod.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            prod.terms_.push_back({key_product(x.key, y.key), x.value * y.value});
    prod.normalize();
    *this += prod;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b)
{
    CoeffPoly out;
    out.add_product(a, b);
    return out;
}

bool operator==(const CoeffPoly& a, const CoeffPoly& b)
{
    if (a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].value != b.terms_[i].value)
            return false;
    return true;
}

} // namespace resbound
