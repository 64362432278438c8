#include "resbound/uni_poly.hpp"

#include <sstream>

namespace resbound {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const
{
    if (i < 0 || i >= int(coeffs_.size()))
        return Rational{};
    return coeffs_[i];
}

Rational UniPoly::eval(const Rational& x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero())
            continue;
        if (!first)
            os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << "-";
        first = false;
        os << c.abs();
        if (i > 0)
            os << "*" << var;
        if (i > 1)
            os << "^" << i;
    }
    return os.str();
}

} // namespace resbound
