#include "resbound/report_io.hpp"

#include <sstream>

namespace resbound::io {

namespace {

std::string bool_cell(const std::optional<bool>& b)
{
    if (!b)
        return "null";
    return *b ? "true" : "false";
}

Json integer_json(const mpz_class& z)
{
    if (z.fits_slong_p())
        return Json(z.get_si());
    return Json(z.get_str());
}

} // namespace

BoundsRow formula_row(int n)
{
    return {n, ggl_theorem_bound(n), ggl_computed_bound(n), kobayashi_bound(n), std::nullopt};
}

Json polynomial_json(const DegreePolynomial& p)
{
    Json arr = Json::array();
    for (int i = 1; i < int(p.coeffs.size()); ++i) {
        arr.push_back({{"d_power", i},
                       {"delta0", p.coeffs[i].coeff(0, 0).to_string()},
                       {"delta1", p.coeffs[i].coeff(0, 1).to_string()}});
    }
    return arr;
}

Json polynomial_json(const UniPoly& p)
{
    Json arr = Json::array();
    for (int i = 1; i <= p.degree(); ++i)
        arr.push_back({{"d_power", i}, {"delta0", p.coeff(i).to_string()}, {"delta1", Rational(0).to_string()}});
    return arr;
}

Json meta_json(int n, const Rational& epsilon, const std::string& delta, int truncation)
{
    return {{"n", n}, {"epsilon", epsilon.to_string()}, {"delta", delta}, {"truncation", truncation}};
}

Json checks_json(const std::vector<InequalityCheck>& log)
{
    Json arr = Json::array();
    for (const auto& c : log)
        arr.push_back({{"name", c.name}, {"lhs", c.lhs.to_string()}, {"rhs", c.rhs.to_string()}, {"holds", c.holds}});
    return arr;
}

Json report_json(const BoundReport& r)
{
    Json j;
    j["n"] = r.n;
    j["epsilon"] = r.epsilon.to_string();
    j["delta"] = r.delta.to_string();
    j["polynomial"] = polynomial_json(r.poly);
    j["fujiwara_D"] = r.fujiwara_D.to_string();
    j["fujiwara_hypothesis_holds"] = r.fujiwara_hypothesis_holds;
    j["certified"] = r.certified;
    j["certificate_method"] = r.certificate_method;
    j["certified_positive_from"] = r.certified_positive_from.to_string();
    j["ggl_computed_bound"] = integer_json(r.ggl_computed_bound);
    j["theorem_bound_ggl"] = integer_json(r.theorem_bound_ggl);
    j["theorem_bound_kobayashi"] = integer_json(r.theorem_bound_kobayashi);
    j["value_at_theorem_bound"] = r.value_at_theorem_bound.to_string();
    j["estimates_log"] = checks_json(r.estimates_log);
    return j;
}

Json bounds_json(const std::vector<BoundsRow>& rows)
{
    Json arr = Json::array();
    for (const auto& row : rows) {
        Json j;
        j["n"] = row.n;
        j["ggl_theorem_bound"] = integer_json(row.ggl_theorem_bound);
        j["ggl_computed_bound"] = integer_json(row.ggl_computed_bound);
        j["kobayashi_bound"] = integer_json(row.kobayashi_bound);
        j["certified"] = row.certified ? Json(*row.certified) : Json(nullptr);
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string bounds_csv(const std::vector<BoundsRow>& rows)
{
    std::ostringstream os;
    os << "n,ggl_theorem_bound,ggl_computed_bound,kobayashi_bound,certified\n";
    for (const auto& r : rows)
        os << r.n << ',' << r.ggl_theorem_bound << ',' << r.ggl_computed_bound << ',' << r.kobayashi_bound << ','
           << bool_cell(r.certified) << '\n';
    return os.str();
}

std::string bounds_text(const std::vector<BoundsRow>& rows)
{
    std::ostringstream os;
    os << "  n  ggl_theorem_bound  ggl_computed_bound  kobayashi_bound  certified\n";
    for (const auto& r : rows) {
        os.width(3);
        os << r.n << "  ";
        os.width(17);
        os << r.ggl_theorem_bound.get_str() << "  ";
        os.width(18);
        os << r.ggl_computed_bound.get_str() << "  ";
        os.width(15);
        os << r.kobayashi_bound.get_str() << "  " << bool_cell(r.certified) << '\n';
    }
    return os.str();
}

std::string polynomial_csv(const DegreePolynomial& p)
{
    std::ostringstream os;
    os << "d_power,delta0,delta1\n";
    for (int i = 1; i < int(p.coeffs.size()); ++i)
        os << i << ',' << p.coeffs[i].coeff(0, 0).to_string() << ',' << p.coeffs[i].coeff(0, 1).to_string() << '\n';
    return os.str();
}

std::string polynomial_csv(const UniPoly& p)
{
    std::ostringstream os;
    os << "d_power,delta0,delta1\n";
    for (int i = 1; i <= p.degree(); ++i)
        os << i << ',' << p.coeff(i).to_string() << ",0/1\n";
    return os.str();
}

DegreePolynomial parse_polynomial_json(const Json& j, int n)
{
    if (!j.is_array())
        throw std::invalid_argument("polynomial must be a JSON array");
    DegreePolynomial p;
    p.n = n;
    p.coeffs.assign(n + 2, CoeffPoly{});
    for (const auto& entry : j) {
        const int power = entry.at("d_power").get<int>();
        if (power < 1 || power > n + 1)
            throw std::invalid_argument("d_power out of range");
        p.coeffs[power] = CoeffPoly(Rational::parse(entry.at("delta0").get<std::string>())) +
                          CoeffPoly::monomial(Rational::parse(entry.at("delta1").get<std::string>()), 0, 1);
    }
    return p;
}

} // namespace resbound::io
