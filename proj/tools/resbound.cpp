// resbound: exact computation of the tautological integral p(d) and degree bounds.
#include "resbound/oracle.hpp"
#include "resbound/pipeline.hpp"
#include "resbound/report_io.hpp"

#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <optional>
#include <sstream>

using namespace resbound;
using io::Json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = 2;
    int n_min = 2;
    int n_max = 10;
    int certify_cap = 4;
    std::string epsilon = "1/2";
    std::string delta;
    std::string format = "json";
    std::string d;
    std::string form = "post";
    std::uint64_t seed = 42;
    int trials = 100;
    int truncation = 1;
    int oracle_n_max = 3;
};

Rational parse_epsilon(const std::string& text)
{
    Rational eps;
    try {
        eps = Rational::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed rational for --epsilon: '" + text + "'");
    }
    if (eps <= Rational(0) || eps >= Rational(1))
        throw UsageError("--epsilon must lie strictly between 0 and 1");
    return eps;
}

/// nullopt means symbolic delta.
std::optional<Rational> parse_delta(const std::string& text, int n)
{
    if (text == "symbolic")
        return std::nullopt;
    if (text == "paper")
        return standard_delta(n);
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed rational for --delta: '" + text + "'");
    }
}

void check_n(int n)
{
    if (n < 1)
        throw UsageError("--n must be at least 1");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_integral(const Options& o, std::ostream& out)
{
    check_n(o.n);
    IntegrandConfig cfg;
    cfg.n = o.n;
    cfg.epsilon = parse_epsilon(o.epsilon);
    cfg.truncation_multiplier = o.truncation;
    cfg.form = o.form == "pre" ? IntegrandForm::PreChangeOfVariables : IntegrandForm::PostChangeOfVariables;
    const std::string delta_text = o.delta.empty() ? "symbolic" : o.delta;
    const auto delta = parse_delta(delta_text, o.n);

    const DegreePolynomial p = tautological_integral(cfg);
    const Rational c0 = p.leading().coeff(0, 0);
    const std::string delta_label = delta ? delta->to_string() : "symbolic";

    if (o.format == "csv") {
        out << (delta ? io::polynomial_csv(p.at_delta(*delta)) : io::polynomial_csv(p));
        return exit_ok;
    }
    if (o.format == "text") {
        out << "n = " << o.n << ", epsilon = " << cfg.epsilon << ", delta = "
            << (delta ? delta->to_short_string() : delta_label) << "\n";
        if (delta)
            out << "p(d) = " << p.at_delta(*delta).to_string() << "\n";
        else
            out << "p(d) = " << p.as_coeff_poly().to_string() << "\n";
        out << "C0 = " << c0 << "\n";
        return exit_ok;
    }
    Json j;
    j["meta"] = io::meta_json(o.n, cfg.epsilon, delta_label, o.truncation);
    j["polynomial"] = delta ? io::polynomial_json(p.at_delta(*delta)) : io::polynomial_json(p);
    Json report;
    report["d_degree"] = o.n + 1;
    report["constant_term_zero"] = true;
    report["delta_linear"] = true;
    report["C0"] = c0.to_string();
    report["form"] = o.form;
    j["report"] = std::move(report);
    out << dump(j);
    return exit_ok;
}

int cmd_bounds(const Options& o, std::ostream& out)
{
    if (o.n_min < 1 || o.n_max < o.n_min)
        throw UsageError("invalid n range");
    const Rational eps = parse_epsilon(o.epsilon);

    std::vector<std::future<io::BoundsRow>> jobs;
    for (int n = o.n_min; n <= o.n_max; ++n) {
        const bool run = n >= 2 && n <= o.certify_cap;
        jobs.push_back(std::async(run ? std::launch::async : std::launch::deferred, [n, run, eps, &o] {
            io::BoundsRow row = io::formula_row(n);
            if (run)
                row.certified = ggl_degree_bound(n, eps, o.truncation).certified;
            return row;
        }));
    }
    std::vector<io::BoundsRow> rows;
    for (auto& job : jobs)
        rows.push_back(job.get());

    if (o.format == "csv") {
        out << io::bounds_csv(rows);
    } else if (o.format == "text") {
        out << io::bounds_text(rows);
    } else {
        Json j;
        j["meta"] = {{"n_min", o.n_min}, {"n_max", o.n_max}, {"epsilon", eps.to_string()},
                     {"certify_cap", o.certify_cap}, {"truncation", o.truncation}};
        j["rows"] = io::bounds_json(rows);
        out << dump(j);
    }
    bool all_certified = true;
    for (const auto& r : rows)
        all_certified = all_certified && r.certified.value_or(true);
    return all_certified ? exit_ok : exit_negative;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    check_n(o.n);
    if (o.d.empty())
        throw UsageError("verify requires --d");
    Rational d;
    try {
        d = Rational::parse(o.d);
    } catch (const std::invalid_argument&) {
        throw UsageError("malformed integer for --d: '" + o.d + "'");
    }
    if (!d.is_integer() || d.sign() <= 0)
        throw UsageError("--d must be a positive integer");
    IntegrandConfig cfg;
    cfg.n = o.n;
    cfg.epsilon = parse_epsilon(o.epsilon);
    cfg.truncation_multiplier = o.truncation;
    const auto delta = parse_delta(o.delta.empty() ? "paper" : o.delta, o.n);
    if (!delta)
        throw UsageError("verify needs a numeric --delta (or 'paper')");

    const UniPoly p = tautological_integral(cfg).at_delta(*delta);
    const Rational value = p.eval(d);
    const char* sign = value.sign() > 0 ? "positive" : (value.sign() < 0 ? "negative" : "zero");

    if (o.format == "json") {
        Json j;
        j["meta"] = io::meta_json(o.n, cfg.epsilon, delta->to_string(), o.truncation);
        j["polynomial"] = io::polynomial_json(p);
        j["report"] = {{"d", d.to_string()}, {"value", value.to_string()}, {"sign", sign},
                       {"positive", value.sign() > 0}};
        out << dump(j);
    } else if (o.format == "csv") {
        out << "n,epsilon,delta,d,value,sign\n"
            << o.n << ',' << cfg.epsilon.to_string() << ',' << delta->to_string() << ',' << d << ','
            << value.to_string() << ',' << sign << '\n';
    } else {
        out << "n = " << o.n << ", epsilon = " << cfg.epsilon << ", delta = " << *delta << "\n"
            << "p(" << d << ") = " << value << " (" << sign << ")\n";
    }
    return value.sign() > 0 ? exit_ok : exit_negative;
}

std::string lambdas_string(const std::vector<Rational>& ls)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < ls.size(); ++i)
        os << (i ? ", " : "") << ls[i];
    os << "]";
    return os.str();
}

int cmd_oracle(const Options& o, std::ostream& out)
{
    if (o.trials < 1)
        throw UsageError("--trials must be at least 1");
    if (o.oracle_n_max < 2)
        throw UsageError("--pipeline-n-max must be at least 2");
    const Rational eps = parse_epsilon(o.epsilon);

    const auto trials = run_projective_oracle(o.trials, o.seed);
    std::vector<PolynomialComparison> comparisons;
    for (int n = 2; n <= o.oracle_n_max; ++n) {
        comparisons.push_back(truncation_doubling_check(n, eps));
        comparisons.push_back(change_of_variables_check(n, eps));
    }

    const ProjectiveOracleTrial* bad_trial = nullptr;
    int passed = 0;
    for (const auto& t : trials) {
        passed += t.agrees;
        if (!t.agrees && !bad_trial)
            bad_trial = &t;
    }
    const PolynomialComparison* bad_cmp = nullptr;
    for (const auto& c : comparisons)
        if (!c.agrees && !bad_cmp)
            bad_cmp = &c;
    const bool ok = !bad_trial && !bad_cmp;

    if (o.format == "json") {
        Json j;
        j["meta"] = {{"seed", o.seed}, {"trials", o.trials}, {"epsilon", eps.to_string()},
                     {"pipeline_n_max", o.oracle_n_max}};
        Json arr = Json::array();
        for (const auto& t : trials) {
            Json lam = Json::array();
            for (const auto& l : t.lambdas)
                lam.push_back(l.to_string());
            Json coeffs = Json::array();
            for (const auto& c : t.p.coeffs())
                coeffs.push_back(c.to_string());
            arr.push_back({{"index", t.index}, {"p", coeffs}, {"lambdas", lam},
                           {"fixed_point", t.fixed_point.to_string()}, {"residue", t.residue.to_string()},
                           {"agrees", t.agrees}});
        }
        j["projective"] = std::move(arr);
        Json cmps = Json::array();
        for (const auto& c : comparisons)
            cmps.push_back({{"name", c.name}, {"n", c.n}, {"agrees", c.agrees}});
        j["pipeline"] = std::move(cmps);
        j["ok"] = ok;
        out << dump(j);
    } else {
        for (const auto& t : trials)
            out << "trial " << t.index << ": n=" << t.lambdas.size() << " deg=" << t.p.degree()
                << " fixed_point=" << t.fixed_point << " residue=" << t.residue << (t.agrees ? " ok" : " MISMATCH")
                << "\n";
        out << "projective residue: " << passed << "/" << trials.size() << "\n";
        for (const auto& c : comparisons)
            out << c.name << " n=" << c.n << ": " << (c.agrees ? "ok" : "MISMATCH") << "\n";
    }
    if (bad_trial)
        std::cerr << "counterexample: P(u) = " << bad_trial->p.to_string("u")
                  << ", lambda = " << lambdas_string(bad_trial->lambdas) << ", fixed point sum "
                  << bad_trial->fixed_point << " != residue at infinity " << bad_trial->residue << "\n";
    if (bad_cmp)
        std::cerr << "counterexample: " << bad_cmp->name << " at n=" << bad_cmp->n << ": "
                  << bad_cmp->first.as_coeff_poly().to_string() << " != "
                  << bad_cmp->second.as_coeff_poly().to_string() << "\n";
    return ok ? exit_ok : exit_negative;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact tautological integrals and degree bounds for hypersurface hyperbolicity"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> formats{"json", "csv", "text"};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--epsilon", o.epsilon, "Rational in (0,1)")->capture_default_str();
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember(formats))
            ->capture_default_str();
        sub->add_option("--truncation-multiplier", o.truncation, "Multiplier of the w-truncation budget")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    auto* integral = app.add_subcommand("integral", "Compute p(d) for one dimension");
    integral->add_option("--n", o.n, "Dimension")->capture_default_str();
    integral->add_option("--delta", o.delta, "Rational, 'paper' for 1/(16n^5), or 'symbolic' (default)");
    integral->add_option("--form", o.form, "Integrand form")
        ->check(CLI::IsMember({"post", "pre"}))
        ->capture_default_str();
    add_common(integral);

    auto* bounds = app.add_subcommand("bounds", "Degree bound table");
    bounds->add_option("--n-min", o.n_min, "First dimension")->capture_default_str();
    bounds->add_option("--n-max", o.n_max, "Last dimension")->capture_default_str();
    bounds->add_option("--certify-cap", o.certify_cap, "Run the pipeline for n up to this value")
        ->capture_default_str();
    add_common(bounds);

    auto* verify = app.add_subcommand("verify", "Sign of p(d) at one degree");
    verify->add_option("--n", o.n, "Dimension")->capture_default_str();
    verify->add_option("--d", o.d, "Degree (positive integer)")->required();
    verify->add_option("--delta", o.delta, "Rational, or 'paper' for 1/(16n^5) (default)");
    add_common(verify);

    auto* oracle = app.add_subcommand("oracle", "Run the exact cross-checks");
    oracle->add_option("--trials", o.trials, "Projective residue instances")->capture_default_str();
    oracle->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
    oracle->add_option("--pipeline-n-max", o.oracle_n_max, "Largest n for the pipeline cross-checks")
        ->capture_default_str();
    add_common(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*integral)
            return cmd_integral(o, std::cout);
        if (*bounds)
            return cmd_bounds(o, std::cout);
        if (*verify)
            return cmd_verify(o, std::cout);
        return cmd_oracle(o, std::cout);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
}
