#include "umbratrig/umbral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace umbratrig {

namespace {

double binomial_real(int n, int r)
{
    r = std::min(r, n - r);
    double c = 1.0;
    for (int i = 1; i <= r; ++i)
        c = c * static_cast<double>(n - r + i) / static_cast<double>(i);
    return c;
}

// prod_{k=0}^{r-1} (shift + offset + k) / (offset + k)
double rising_ratio(int r, double shift, double offset)
{
    double p = 1.0;
    for (int k = 0; k < r; ++k)
        p *= (shift + offset + k) / (offset + k);
    return p;
}

void require_indexing(const UmbralSequence& s, const SumFamily& family)
{
    const Indexing want = family.block_indexed() ? Indexing::Block3 : Indexing::Plain;
    if (s.indexing != want)
        throw SupportMismatchError("sequence indexing does not match the composition rule");
}

complex ipow(complex z, long n)
{
    complex r = 1.0;
    for (long i = 0; i < n; ++i)
        r *= z;
    return r;
}

// (1 (+)_l y)^n, summed with the term ratio ((n - r) / (r + 1))^2 y.
double laguerre_binomial_at_one(int n, double y)
{
    double term = 1.0;
    double sum = 1.0;
    for (int r = 0; r < n; ++r) {
        const double q = static_cast<double>(n - r) / static_cast<double>(r + 1);
        term *= q * q * y;
        sum += term;
    }
    return sum;
}

} // namespace

SumFamily SumFamily::alpha_order(double alpha)
{
    SumFamily f{SumTag::Alpha, alpha};
    f.validate();
    return f;
}

SumFamily SumFamily::ab(double alpha, double beta)
{
    SumFamily f{SumTag::AB, alpha, beta};
    f.validate();
    return f;
}

SumFamily SumFamily::airy(double alpha)
{
    SumFamily f{SumTag::Airy, alpha};
    f.validate();
    return f;
}

void SumFamily::validate() const
{
    switch (tag) {
    case SumTag::Alpha:
        if (!(alpha > -1.0) || !std::isfinite(alpha))
            throw DomainError("alpha must be > -1");
        break;
    case SumTag::AB:
        if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) || !std::isfinite(beta))
            throw DomainError("alpha and beta must be > -1");
        break;
    case SumTag::Airy:
        if (!(alpha > 0.0) || !std::isfinite(alpha))
            throw DomainError("alpha must be > 0");
        break;
    default:
        break;
    }
}

UnityRoots::UnityRoots(int order) : m(order)
{
    if (m < 2)
        throw DomainError("root-of-unity order must be >= 2");
    values.reserve(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p)
        values.push_back(std::polar(1.0, 2.0 * std::numbers::pi * p / m));
}

double weight(const SumFamily& family, int n, int r)
{
    family.validate();
    if (r < 0 || r > n)
        throw DomainError("weight requires 0 <= r <= n");
    // Every kernel is symmetric in r <-> n - r; evaluating at the smaller index
    // makes that symmetry exact in floating point.
    r = std::min(r, n - r);
    const double a = family.alpha;
    const double b = family.beta;
    switch (family.tag) {
    case SumTag::Ordinary:
    case SumTag::Laguerre:
    case SumTag::PHF03:
        if (n <= kExactMaxOrder)
            return static_cast<double>(weight_exact(family, n, r));
        if (family.tag == SumTag::Ordinary)
            return binomial_real(n, r);
        if (family.tag == SumTag::Laguerre) {
            const double c = binomial_real(n, r);
            return c * c;
        }
        return binomial_real(3 * n, 3 * r);
    case SumTag::Alpha:
        return binomial_real(n, r) * rising_ratio(r, n - r, a + 1.0) / gamma(a + 1.0);
    case SumTag::AB:
        return binomial_real(n, r) * rising_ratio(r, n - r, a + 1.0) * rising_ratio(r, n - r, b + 1.0) /
               (gamma(a + 1.0) * gamma(b + 1.0));
    case SumTag::Airy:
        return binomial_real(n, r) * rising_ratio(r, n - r, a + 2.0 / 3.0) * rising_ratio(r, n - r, 1.0 / 3.0);
    }
    throw DomainError("unknown composition rule");
}

UmbralSequence embed(complex x, int order)
{
    if (order < 0)
        throw DomainError("order must be >= 0");
    UmbralSequence s;
    s.entries.resize(static_cast<std::size_t>(order) + 1);
    complex p = 1.0;
    for (auto& e : s.entries) {
        e = p;
        p *= x;
    }
    return s;
}

UmbralSequence embed_blocks(complex x, int blocks)
{
    UmbralSequence s = embed(x * x * x, blocks);
    s.indexing = Indexing::Block3;
    return s;
}

UmbralSequence embed_for(const SumFamily& family, complex x, int order)
{
    return family.block_indexed() ? embed_blocks(x, order) : embed(x, order);
}

UmbralSequence umbral_sum(const UmbralSequence& a, const UmbralSequence& b, const SumFamily& family)
{
    family.validate();
    require_indexing(a, family);
    require_indexing(b, family);
    const int order = std::min(a.order(), b.order());
    UmbralSequence out;
    out.indexing = a.indexing;
    if (order < 0)
        return out;
    out.entries.resize(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        // Pair r with n - r so that a (+) b and b (+) a agree bit for bit.
        complex s = 0.0;
        int r = 0;
        for (; 2 * r < n; ++r) {
            const auto lo = static_cast<std::size_t>(r);
            const auto hi = static_cast<std::size_t>(n - r);
            s += weight(family, n, r) * (a[hi] * b[lo] + a[lo] * b[hi]);
        }
        if (2 * r == n) {
            const auto mid = static_cast<std::size_t>(r);
            s += weight(family, n, r) * (a[mid] * b[mid]);
        }
        out.entries[static_cast<std::size_t>(n)] = s;
    }
    return out;
}

UmbralSequence scale(int k, complex x, const SumFamily& family, int order)
{
    if (k < 1)
        throw DomainError("scale factor must be >= 1");
    if (family.tag != SumTag::Laguerre && family.tag != SumTag::PHF03)
        throw DomainError("scale is defined for the Laguerre and PHF03 rules only");
    const UmbralSequence e = embed_for(family, x, order);
    UmbralSequence acc = e;
    for (int i = 2; i <= k; ++i)
        acc = umbral_sum(e, acc, family);
    return acc;
}

complex eval_on_sequence(const SeriesFamily& family, const UmbralSequence& seq, const EvalConfig& cfg)
{
    cfg.validate();
    const Support sup = support_of(family);
    const int stride = seq.indexing == Indexing::Block3 ? 3 : 1;
    if (stride == 3 && (sup.first % 3 != 0 || sup.step % 3 != 0))
        throw SupportMismatchError(to_string(family) + " is not supported on multiples of 3");
    const long last_power = static_cast<long>(seq.order()) * stride;
    const std::vector<double> c = coefficients(family, static_cast<int>(std::max(last_power, 0L)));

    complex sum = 0.0;
    int streak = 0;
    int count = 0;
    for (long n = sup.first; n <= last_power && count < cfg.max_terms; n += sup.step, ++count) {
        const complex term = c[static_cast<std::size_t>(n)] * seq[static_cast<std::size_t>(n / stride)];
        sum += term;
        streak = std::abs(term) <= cfg.rel_tol * std::abs(sum) ? streak + 1 : 0;
        if (streak >= cfg.stop_streak)
            return sum;
    }
    throw ConvergenceError(to_string(family) + " on an umbral sequence of order " + std::to_string(seq.order()) +
                           " did not converge");
}

double napier_term(double x, int n)
{
    if (n < 1)
        throw DomainError("napier_term requires n >= 1");
    const double nn = static_cast<double>(n);
    return laguerre_binomial_at_one(n, x / (nn * nn));
}

double j0_term(double x, int n)
{
    if (n < 1)
        throw DomainError("j0_term requires n >= 1");
    const double q = x / (2.0 * n);
    return laguerre_binomial_at_one(n, -q * q);
}

complex phf_roots_average(complex x, complex y, int n)
{
    if (n < 0)
        throw DomainError("block index must be >= 0");
    static const UnityRoots roots(3);
    complex s = 0.0;
    for (const complex& w : roots.values)
        s += ipow(x + w * y, 3L * n);
    return s / 3.0;
}

// ---------------------------------------------------------------------------

int128 binomial_exact(int n, int r)
{
    if (r < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    int128 c = 1;
    for (int i = 1; i <= r; ++i)
        c = c * (n - r + i) / i;
    return c;
}

int128 weight_exact(const SumFamily& family, int n, int r)
{
    if (n > kExactMaxOrder)
        throw DomainError("exact weights are limited to n <= 15");
    if (r < 0 || r > n)
        throw DomainError("weight requires 0 <= r <= n");
    switch (family.tag) {
    case SumTag::Ordinary: return binomial_exact(n, r);
    case SumTag::Laguerre: {
        const int128 c = binomial_exact(n, r);
        return c * c;
    }
    case SumTag::PHF03: return binomial_exact(3 * n, 3 * r);
    default: throw DomainError("exact weights exist only for Ordinary, Laguerre and PHF03");
    }
}

std::vector<GaussianInt> embed_exact(GaussianInt x, int order, Indexing indexing)
{
    if (order < 0 || order > kExactMaxOrder)
        throw DomainError("exact order must be in [0, 15]");
    const GaussianInt step = indexing == Indexing::Block3 ? x * x * x : x;
    std::vector<GaussianInt> s(static_cast<std::size_t>(order) + 1);
    GaussianInt p{1, 0};
    for (auto& e : s) {
        e = p;
        p = p * step;
    }
    return s;
}

std::vector<GaussianInt> umbral_sum_exact(std::span<const GaussianInt> a, std::span<const GaussianInt> b,
                                          const SumFamily& family)
{
    const std::size_t len = std::min(a.size(), b.size());
    std::vector<GaussianInt> out(len);
    for (std::size_t n = 0; n < len; ++n) {
        GaussianInt s;
        for (std::size_t r = 0; r <= n; ++r)
            s = s + weight_exact(family, static_cast<int>(n), static_cast<int>(r)) * (a[n - r] * b[r]);
        out[n] = s;
    }
    return out;
}

std::vector<GaussianInt> scale_exact(int k, GaussianInt x, const SumFamily& family, int order)
{
    if (k < 1)
        throw DomainError("scale factor must be >= 1");
    if (family.tag != SumTag::Laguerre && family.tag != SumTag::PHF03)
        throw DomainError("scale is defined for the Laguerre and PHF03 rules only");
    const auto e = embed_exact(x, order, family.block_indexed() ? Indexing::Block3 : Indexing::Plain);
    auto acc = e;
    for (int i = 2; i <= k; ++i)
        acc = umbral_sum_exact(e, acc, family);
    return acc;
}

// ---------------------------------------------------------------------------

BivariatePolynomial::BivariatePolynomial(int degree) : degree_(degree)
{
    if (degree < 0)
        throw DomainError("degree must be >= 0");
    c_.assign(static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(degree + 1), 0.0);
}

complex BivariatePolynomial::operator()(complex x, complex y) const
{
    complex acc = 0.0;
    for (int i = degree_; i >= 0; --i) {
        complex row = 0.0;
        for (int j = degree_; j >= 0; --j)
            row = row * y + at(i, j);
        acc = acc * x + row;
    }
    return acc;
}

BivariatePolynomial BivariatePolynomial::derive_x(const DerivOp& op) const
{
    BivariatePolynomial out(degree_);
    const int s = op.shift();
    for (int i = 0; i + s <= degree_; ++i)
        for (int j = 0; j <= degree_; ++j)
            out.at(i, j) = op.multiplier(i + s) * at(i + s, j);
    return out;
}

BivariatePolynomial BivariatePolynomial::derive_y(const DerivOp& op) const
{
    BivariatePolynomial out(degree_);
    const int s = op.shift();
    for (int i = 0; i <= degree_; ++i)
        for (int j = 0; j + s <= degree_; ++j)
            out.at(i, j) = op.multiplier(j + s) * at(i, j + s);
    return out;
}

BivariatePolynomial hybrid_polynomial(const SumFamily& family, int n)
{
    if (family.block_indexed())
        throw SupportMismatchError("hybrid_polynomial needs a plain-indexed composition rule");
    BivariatePolynomial p(n);
    for (int r = 0; r <= n; ++r)
        p.at(n - r, r) = weight(family, n, r);
    return p;
}

BivariatePolynomial umbral_expansion(std::span<const double> coeffs, const SumFamily& family)
{
    if (family.block_indexed())
        throw SupportMismatchError("umbral_expansion needs a plain-indexed composition rule");
    if (coeffs.empty())
        throw DomainError("empty coefficient sequence");
    const int degree = static_cast<int>(coeffs.size()) - 1;
    BivariatePolynomial p(degree);
    for (int n = 0; n <= degree; ++n) {
        if (coeffs[static_cast<std::size_t>(n)] == 0.0)
            continue;
        for (int r = 0; r <= n; ++r)
            p.at(n - r, r) += coeffs[static_cast<std::size_t>(n)] * weight(family, n, r);
    }
    return p;
}

} // namespace umbratrig
