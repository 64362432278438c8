#include "resbound/laurent_series.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <span>
#include <sstream>
#include <thread>
#include <vector>

namespace resbound {

namespace {

constexpr int inf = LaurentSeries::exact_precision;

int sat_add(int a, int b)
{
    if (a == inf || b == inf)
        return inf;
    return a + b;
}

std::atomic<unsigned> g_workers{0};

unsigned default_workers()
{
    if (const char* env = std::getenv("RESBOUND_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
}

// Below this many term pairs the kernel stays single-threaded.
constexpr std::size_t parallel_threshold = 4096;

using Entry = const std::pair<const Monomial, CoeffPoly>*;

struct ProductScan {
    LaurentSeries::TermMap terms;
    bool dropped_over_budget = false;
};

void accumulate_block(std::span<const Entry> lhs, std::span<const Entry> rhs, const OrderSpec& spec,
                      int limit_w, ProductScan& out)
{
    for (Entry a : lhs) {
        for (Entry b : rhs) {
            const int w = int(a->first.exp_w) + b->first.exp_w;
            if (w > limit_w) {
                if (w > spec.max_w)
                    out.dropped_over_budget = true;
                continue;
            }
            const int h = int(a->first.exp_h) + b->first.exp_h;
            if (h > spec.max_h)
                continue;
            const int z = int(a->first.exp_z) + b->first.exp_z;
            if (z < spec.min_z || w < spec.min_w)
                throw ConfigurationError("series exponent below configured range (z^" + std::to_string(z) +
                                         " w^" + std::to_string(w) + ")");
            out.terms[make_monomial(z, w, h)].add_product(a->second, b->second);
        }
    }
}

} // namespace

Monomial make_monomial(int z, int w, int h)
{
    auto fits = [](int v) { return v >= INT16_MIN && v <= INT16_MAX; };
    if (!fits(z) || !fits(w) || !fits(h) || h < 0)
        throw ConfigurationError("monomial exponent overflow");
    return {static_cast<std::int16_t>(z), static_cast<std::int16_t>(w), static_cast<std::int16_t>(h)};
}

OrderSpec OrderSpec::for_dimension(int n, int multiplier)
{
    if (n < 1 || multiplier < 1)
        throw ConfigurationError("order spec needs n >= 1 and multiplier >= 1");
    OrderSpec s;
    s.max_w = (n * n + n + 2) * multiplier;
    s.max_h = n;
    // The l = 0 column contributes (-w)^{-n} and its Segre factor up to h^n/w^n.
    s.min_w = -(2 * n + 2);
    s.min_z = -(s.max_w + n * n + 2);
    return s;
}

OrderSpec OrderSpec::h_only(int max_h)
{
    OrderSpec s;
    s.max_w = 0;
    s.max_h = max_h;
    s.min_z = 0;
    s.min_w = 0;
    return s;
}

OrderSpec OrderSpec::intersect(const OrderSpec& a, const OrderSpec& b)
{
    return {std::min(a.max_w, b.max_w), std::min(a.max_h, b.max_h), std::max(a.min_z, b.min_z),
            std::max(a.min_w, b.min_w)};
}

unsigned worker_count()
{
    unsigned w = g_workers.load();
    if (w == 0) {
        w = default_workers();
        g_workers.store(w);
    }
    return w;
}

void set_worker_count(unsigned workers) { g_workers.store(std::max(1u, workers)); }

LaurentSeries LaurentSeries::constant(const CoeffPoly& c, OrderSpec spec)
{
    return monomial(Monomial{}, c, spec);
}

LaurentSeries LaurentSeries::monomial(Monomial m, const CoeffPoly& c, OrderSpec spec)
{
    LaurentSeries s(spec);
    if (!c.is_zero())
        s.insert_in_budget(m, c);
    return s;
}

LaurentSeries LaurentSeries::linear(const CoeffPoly& a, const CoeffPoly& b, const CoeffPoly& c, OrderSpec spec)
{
    LaurentSeries s(spec);
    if (!a.is_zero())
        s.insert_in_budget({1, 0, 0}, a);
    if (!b.is_zero())
        s.insert_in_budget({0, 1, 0}, b);
    if (!c.is_zero() && spec.max_h >= 1)
        s.insert_in_budget({0, 0, 1}, c);
    return s;
}

LaurentSeries LaurentSeries::linear_inverse(const Rational& a, const Rational& b, OrderSpec spec)
{
    LaurentSeries s(spec);
    if (a.is_zero()) {
        if (b.is_zero())
            throw std::domain_error("linear_inverse of the zero form");
        s.insert_in_budget({0, -1, 0}, CoeffPoly(b.inverse()));
        return s;
    }
    const Rational inv_a = a.inverse();
    const Rational ratio = -b * inv_a;
    Rational c = inv_a;
    for (int k = 0; k <= spec.max_w; ++k) {
        if (!c.is_zero())
            s.terms_.emplace(make_monomial(-1 - k, k, 0), CoeffPoly(c));
        c *= ratio;
    }
    if (!ratio.is_zero())
        s.precision_ = spec.max_w;
    return s;
}

bool LaurentSeries::insert_in_budget(Monomial m, CoeffPoly c)
{
    if (m.exp_h > spec_.max_h)
        return true;
    if (m.exp_w > spec_.max_w) {
        precision_ = std::min(precision_, spec_.max_w);
        return false;
    }
    if (m.exp_z < spec_.min_z || m.exp_w < spec_.min_w)
        throw ConfigurationError("series exponent below configured range");
    auto& slot = terms_[m];
    slot += c;
    if (slot.is_zero())
        terms_.erase(m);
    return true;
}

void LaurentSeries::drop_beyond_precision()
{
    if (precision_ != inf && precision_ > spec_.max_w)
        precision_ = spec_.max_w;
    const int limit = std::min(precision_, spec_.max_w);
    std::erase_if(terms_, [&](const auto& kv) {
        return kv.first.exp_w > limit || kv.first.exp_h > spec_.max_h;
    });
}

int LaurentSeries::valuation_w() const
{
    if (terms_.empty())
        return precision_ == inf ? inf : precision_ + 1;
    int v = INT_MAX;
    for (const auto& [m, c] : terms_)
        v = std::min(v, int(m.exp_w));
    return v;
}

std::optional<int> LaurentSeries::homogeneous_degree() const
{
    std::optional<int> deg;
    for (const auto& [m, c] : terms_) {
        if (!deg)
            deg = m.total_degree();
        else if (*deg != m.total_degree())
            return std::nullopt;
    }
    return deg;
}

bool LaurentSeries::is_homogeneous_of(int degree) const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& kv) { return kv.first.total_degree() == degree; });
}

CoeffPoly LaurentSeries::coeff(Monomial m) const
{
    if (m.exp_w > spec_.max_w || m.exp_w > precision_)
        throw InsufficientOrder("coefficient of z^" + std::to_string(m.exp_z) + " w^" + std::to_string(m.exp_w) +
                                " h^" + std::to_string(m.exp_h) + " lies beyond series precision w^" +
                                std::to_string(std::min(precision_, spec_.max_w)));
    auto it = terms_.find(m);
    return it == terms_.end() ? CoeffPoly{} : it->second;
}

std::string LaurentSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << '\n';
        first = false;
        os << "z^" << m.exp_z << " w^" << m.exp_w << " h^" << m.exp_h << " : " << c.to_string();
    }
    return os.str();
}

LaurentSeries LaurentSeries::truncated(const OrderSpec& spec) const
{
    LaurentSeries out(OrderSpec::intersect(spec_, spec));
    out.precision_ = precision_;
    for (const auto& [m, c] : terms_)
        out.insert_in_budget(m, c);
    out.drop_beyond_precision();
    return out;
}

LaurentSeries LaurentSeries::operator-() const
{
    LaurentSeries out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o)
{
    spec_ = OrderSpec::intersect(spec_, o.spec_);
    precision_ = std::min(precision_, o.precision_);
    for (const auto& [m, c] : o.terms_)
        terms_[m] += c;
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
    // Dropping over-budget terms of the sum caps the precision.
    for (const auto& [m, c] : terms_)
        if (m.exp_w > spec_.max_w)
            precision_ = std::min(precision_, spec_.max_w);
    drop_beyond_precision();
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries& LaurentSeries::operator*=(const CoeffPoly& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v = v * c;
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b)
{
    LaurentSeries out(OrderSpec::intersect(a.spec_, b.spec_));
    const int val_a = a.valuation_w();
    const int val_b = b.valuation_w();
    int prec = std::min(sat_add(a.precision_, val_b), sat_add(b.precision_, val_a));
    if (prec != inf)
        prec = std::min(prec, out.spec_.max_w);
    const int limit_w = std::min(prec, out.spec_.max_w);

    std::vector<Entry> lhs, rhs;
    lhs.reserve(a.terms_.size());
    rhs.reserve(b.terms_.size());
    for (const auto& kv : a.terms_)
        lhs.push_back(&kv);
    for (const auto& kv : b.terms_)
        rhs.push_back(&kv);

    const unsigned workers = worker_count();
    const std::size_t pairs = lhs.size() * rhs.size();
    std::vector<ProductScan> partial;
    if (workers <= 1 || pairs < parallel_threshold || lhs.size() < 2) {
        partial.resize(1);
        accumulate_block(lhs, rhs, out.spec_, limit_w, partial[0]);
    } else {
        const std::size_t blocks = std::min<std::size_t>(workers, lhs.size());
        partial.resize(blocks);
        std::vector<std::exception_ptr> errors(blocks);
        {
            std::vector<std::jthread> pool;
            pool.reserve(blocks);
            for (std::size_t t = 0; t < blocks; ++t) {
                const std::size_t lo = lhs.size() * t / blocks;
                const std::size_t hi = lhs.size() * (t + 1) / blocks;
                pool.emplace_back([&, t, lo, hi] {
                    try {
                        accumulate_block(std::span(lhs).subspan(lo, hi - lo), rhs, out.spec_, limit_w, partial[t]);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    // Blocks are merged in a fixed order; exact arithmetic makes the result
    // independent of the block split.
    bool dropped = false;
    out.terms_ = std::move(partial[0].terms);
    dropped = partial[0].dropped_over_budget;
    for (std::size_t t = 1; t < partial.size(); ++t) {
        dropped = dropped || partial[t].dropped_over_budget;
        for (auto& [m, c] : partial[t].terms)
            out.terms_[m] += c;
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    if (dropped)
        prec = std::min(prec, out.spec_.max_w);
    out.precision_ = prec;
    return out;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b)
{
    return a.spec_ == b.spec_ && a.precision_ == b.precision_ && a.terms_ == b.terms_;
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) { return a + b; }

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) { return a * b; }

LaurentSeries pow(const LaurentSeries& a, unsigned e)
{
    LaurentSeries result = LaurentSeries::constant(1, a.order_spec());
    LaurentSeries base = a;
    while (e > 0) {
        if (e & 1u)
            result = result * base;
        e >>= 1u;
        if (e > 0)
            base = base * base;
    }
    return result;
}

LaurentSeries geom_inverse(unsigned l, const OrderSpec& spec)
{
    return LaurentSeries::linear_inverse(Rational(long(l)), Rational(-long(l) - 1), spec);
}

CoeffPoly coeff(const LaurentSeries& a, Monomial m) { return a.coeff(m); }

LaurentSeries inverse_in_h(const LaurentSeries& a)
{
    const int max_h = a.order_spec().max_h;
    std::vector<CoeffPoly> coeffs(max_h + 1);
    for (const auto& [m, c] : a.terms()) {
        if (m.exp_z != 0 || m.exp_w != 0)
            throw std::invalid_argument("inverse_in_h: series involves z or w");
        coeffs[m.exp_h] = c;
    }
    const CoeffPoly& c0 = coeffs[0];
    if (c0.size() != 1 || c0.degree_d() != 0 || c0.degree_delta() != 0)
        throw std::invalid_argument("inverse_in_h: constant term must be a nonzero rational");
    const Rational inv0 = c0.terms().front().value.inverse();

    std::vector<CoeffPoly> inv(max_h + 1);
    inv[0] = CoeffPoly(inv0);
    for (int k = 1; k <= max_h; ++k) {
        CoeffPoly acc;
        for (int j = 1; j <= k; ++j)
            acc.add_product(coeffs[j], inv[k - j]);
        inv[k] = acc * (-inv0);
    }
    LaurentSeries out(a.order_spec());
    for (int k = 0; k <= max_h; ++k)
        if (!inv[k].is_zero())
            out += LaurentSeries::monomial({0, 0, static_cast<std::int16_t>(k)}, inv[k], a.order_spec());
    return out;
}

} // namespace resbound
