#include "umbratrig/series.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

namespace umbratrig {

namespace {

// Lanczos approximation, g = 7, 9 coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr double kGammaOverflow = 171.6;

double lanczos_sum(double xm1)
{
    double a = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        a += kLanczos[i] / (xm1 + static_cast<double>(i));
    return a;
}

// The Lanczos error grows roughly linearly in x and passes 1e-13 near
// x = 170; from x = 10 on the Stirling series in extended precision is used.
constexpr double kStirlingFrom = 10.0;

long double stirling_log_gamma(double x)
{
    // B_2k / (2k (2k - 1)) for k = 1..8.
    static constexpr long double c[] = {
        1.0L / 12, -1.0L / 360, 1.0L / 1260, -1.0L / 1680, 1.0L / 1188, -691.0L / 360360, 1.0L / 156, -3617.0L / 122400,
    };
    const long double z = x;
    const long double inv2 = 1.0L / (z * z);
    long double series = 0.0L;
    for (int k = 7; k >= 0; --k)
        series = series * inv2 + c[k];
    return (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2.0L * std::numbers::pi_v<long double>) + series / z;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

void require(bool ok, const char* what)
{
    if (!ok)
        throw DomainError(what);
}

// c_{n + step} / c_n for a family with support {first, first + step, ...}.
struct CoefficientRule {
    Support support;
    double first_value = 1.0;
    std::function<double(double)> ratio;
};

CoefficientRule rule_for(const SeriesFamily& f)
{
    f.validate();
    const double a = f.alpha;
    const double b = f.beta;
    switch (f.tag) {
    case FamilyTag::LExp:
        return {{0, 1}, 1.0, [](double n) { return 1.0 / ((n + 1) * (n + 1)); }};
    case FamilyTag::LExpAlpha:
        return {{0, 1}, 1.0 / gamma(a + 1), [a](double n) { return 1.0 / ((n + 1) * (n + 1 + a)); }};
    case FamilyTag::Humbert:
        return {{0, 1}, 1.0 / (gamma(a + 1) * gamma(b + 1)),
                [a, b](double n) { return 1.0 / ((n + 1) * (n + 1 + a) * (n + 1 + b)); }};
    case FamilyTag::LCos:
    case FamilyTag::LSin: {
        auto r = [](double n) {
            const double p = (n + 1) * (n + 2);
            return -1.0 / (p * p);
        };
        return {{f.tag == FamilyTag::LCos ? 0 : 1, 2}, 1.0, r};
    }
    case FamilyTag::LCosh:
    case FamilyTag::LSinh: {
        auto r = [](double n) {
            const double p = (n + 1) * (n + 2);
            return 1.0 / (p * p);
        };
        return {{f.tag == FamilyTag::LCosh ? 0 : 1, 2}, 1.0, r};
    }
    case FamilyTag::LCosAlpha:
    case FamilyTag::LSinAlpha: {
        auto r = [a](double n) { return -1.0 / ((n + 1) * (n + 2) * (n + a + 1) * (n + a + 2)); };
        if (f.tag == FamilyTag::LCosAlpha)
            return {{0, 2}, 1.0 / gamma(a + 1), r};
        return {{1, 2}, 1.0 / gamma(a + 2), r};
    }
    case FamilyTag::LCosAB:
    case FamilyTag::LSinAB: {
        auto r = [a, b](double n) {
            return -1.0 / ((n + 1) * (n + 2) * (n + a + 1) * (n + a + 2) * (n + b + 1) * (n + b + 2));
        };
        if (f.tag == FamilyTag::LCosAB)
            return {{0, 2}, 1.0 / (gamma(a + 1) * gamma(b + 1)), r};
        return {{1, 2}, 1.0 / (gamma(a + 2) * gamma(b + 2)), r};
    }
    case FamilyTag::PHF: {
        const int m = f.m;
        auto r = [m](double n) {
            double p = 1.0;
            for (int j = 1; j <= m; ++j)
                p *= n + j;
            return 1.0 / p;
        };
        return {{f.k, m}, 1.0 / gamma(f.k + 1.0), r};
    }
    case FamilyTag::PHFCh:
    case FamilyTag::PHFSh: {
        auto r = [](double n) { return 1.0 / ((n + 1) * (n + 2) * (n + 3) * (n + 4) * (n + 5) * (n + 6)); };
        return {{f.tag == FamilyTag::PHFCh ? 0 : 3, 6}, f.tag == FamilyTag::PHFCh ? 1.0 : 1.0 / 6.0, r};
    }
    case FamilyTag::GAlpha:
        // c_{3r} = B(r + 2/3, a) / (B(2/3, a) (3r)!)
        return {{0, 3}, 1.0, [a](double n) {
                    const double r = n / 3.0 + 2.0 / 3.0;
                    return r / ((r + a) * (n + 1) * (n + 2) * (n + 3));
                }};
    }
    throw DomainError("unknown series family");
}

// Sums t_n for n on the support, t_{n+step} = t_n * ratio(n) * z^step.
EvalResult sum_terms(const CoefficientRule& rule, long n0, complex t0, complex zstep,
                     const std::function<double(long)>& extra_ratio, const EvalConfig& cfg)
{
    cfg.validate();
    EvalResult res;
    complex term = t0;
    complex sum = 0.0;
    int streak = 0;
    long n = n0;
    for (int count = 0; count < cfg.max_terms; ++count) {
        sum += term;
        ++res.terms;
        if (std::abs(term) <= cfg.rel_tol * std::abs(sum))
            ++streak;
        else
            streak = 0;
        if (streak >= cfg.stop_streak) {
            res.converged = true;
            break;
        }
        term *= rule.ratio(static_cast<double>(n)) * extra_ratio(n) * zstep;
        n += rule.support.step;
    }
    res.value = sum;
    return res;
}

complex ipow(complex z, long n)
{
    complex r = 1.0;
    for (long i = 0; i < n; ++i)
        r *= z;
    return r;
}

} // namespace

SeriesFamily SeriesFamily::lexp_alpha(double alpha)
{
    SeriesFamily f{FamilyTag::LExpAlpha, alpha};
    f.validate();
    return f;
}

SeriesFamily SeriesFamily::humbert(double alpha, double beta)
{
    SeriesFamily f{FamilyTag::Humbert, alpha, beta};
    f.validate();
    return f;
}

SeriesFamily SeriesFamily::lcos_alpha(double alpha)
{
    SeriesFamily f{FamilyTag::LCosAlpha, alpha};
    f.validate();
    return f;
}

SeriesFamily SeriesFamily::lsin_alpha(double alpha)
{
    SeriesFamily f{FamilyTag::LSinAlpha, alpha};
    f.validate();
    return f;
}

SeriesFamily SeriesFamily::lcos_ab(double alpha, double beta)
{
    SeriesFamily f{FamilyTag::LCosAB, alpha, beta};
    f.validate();
    return f;
}

SeriesFamily SeriesFamily::lsin_ab(double alpha, double beta)
{
    SeriesFamily f{FamilyTag::LSinAB, alpha, beta};
    f.validate();
    return f;
}

SeriesFamily SeriesFamily::phf(int k, int m)
{
    SeriesFamily f{FamilyTag::PHF, 0.0, 0.0, k, m};
    f.validate();
    return f;
}

SeriesFamily SeriesFamily::g_alpha(double alpha)
{
    SeriesFamily f{FamilyTag::GAlpha, alpha};
    f.validate();
    return f;
}

void SeriesFamily::validate() const
{
    switch (tag) {
    case FamilyTag::LExpAlpha:
    case FamilyTag::LCosAlpha:
    case FamilyTag::LSinAlpha:
        require(std::isfinite(alpha) && alpha > -1.0, "alpha must be > -1");
        break;
    case FamilyTag::Humbert:
    case FamilyTag::LCosAB:
    case FamilyTag::LSinAB:
        require(std::isfinite(alpha) && alpha > -1.0, "alpha must be > -1");
        require(std::isfinite(beta) && beta > -1.0, "beta must be > -1");
        break;
    case FamilyTag::PHF:
        require(m >= 2, "PHF order m must be >= 2");
        require(k >= 0 && k < m, "PHF index k must satisfy 0 <= k < m");
        break;
    case FamilyTag::GAlpha:
        require(std::isfinite(alpha) && alpha > 0.0, "alpha must be > 0");
        break;
    default:
        break;
    }
}

std::string to_string(const SeriesFamily& f)
{
    std::ostringstream os;
    switch (f.tag) {
    case FamilyTag::LExp: return "lexp";
    case FamilyTag::LExpAlpha: os << "lexp_alpha(" << f.alpha << ")"; break;
    case FamilyTag::Humbert: os << "humbert(" << f.alpha << "," << f.beta << ")"; break;
    case FamilyTag::LCos: return "lcos";
    case FamilyTag::LSin: return "lsin";
    case FamilyTag::LCosh: return "lcosh";
    case FamilyTag::LSinh: return "lsinh";
    case FamilyTag::LCosAlpha: os << "lcos_alpha(" << f.alpha << ")"; break;
    case FamilyTag::LSinAlpha: os << "lsin_alpha(" << f.alpha << ")"; break;
    case FamilyTag::LCosAB: os << "lcos_ab(" << f.alpha << "," << f.beta << ")"; break;
    case FamilyTag::LSinAB: os << "lsin_ab(" << f.alpha << "," << f.beta << ")"; break;
    case FamilyTag::PHF: os << "phf[" << f.k << "," << f.m << "]"; break;
    case FamilyTag::PHFCh: return "phf_ch";
    case FamilyTag::PHFSh: return "phf_sh";
    case FamilyTag::GAlpha: os << "g_alpha(" << f.alpha << ")"; break;
    }
    return os.str();
}

Support support_of(const SeriesFamily& family) { return rule_for(family).support; }

void EvalConfig::validate() const
{
    require(rel_tol > 0.0, "rel_tol must be > 0");
    require(max_terms >= 1, "max_terms must be >= 1");
    require(stop_streak >= 1, "stop_streak must be >= 1");
}

double gamma(double x)
{
    if (std::isnan(x))
        throw DomainError("gamma of NaN");
    if (is_nonpositive_integer(x))
        throw PoleError("gamma has a pole at non-positive integer " + std::to_string(x));
    if (x > kGammaOverflow)
        throw OverflowError("gamma overflows for x > 171.6");
    if (x == std::floor(x) && x <= 171.0) {
        double f = 1.0;
        for (int i = 2; i < static_cast<int>(x); ++i)
            f *= i;
        return f;
    }
    if (x < 0.5)
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
    if (x >= kStirlingFrom)
        return static_cast<double>(std::exp(stirling_log_gamma(x)));
    const double xm1 = x - 1.0;
    const double t = xm1 + kLanczosG + 0.5;
    const double half = std::pow(t, 0.5 * (xm1 + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * half * std::exp(-t) * half * lanczos_sum(xm1);
}

double log_gamma(double x)
{
    if (!(x > 0.0))
        throw DomainError("log_gamma requires x > 0");
    if (x < 0.5)
        return log_gamma(x + 1.0) - std::log(x);
    if (x >= kStirlingFrom)
        return static_cast<double>(stirling_log_gamma(x));
    const double xm1 = x - 1.0;
    const double t = xm1 + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (xm1 + 0.5) * std::log(t) - t +
           std::log(lanczos_sum(xm1));
}

double beta(double x, double y)
{
    if (!(x > 0.0) || !(y > 0.0))
        throw DomainError("beta requires x > 0 and y > 0");
    if (x + y < 170.0)
        return gamma(x) * gamma(y) / gamma(x + y);
    return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

double coeff(const SeriesFamily& family, int n)
{
    if (n < 0)
        throw DomainError("coefficient index must be >= 0");
    const CoefficientRule rule = rule_for(family);
    if (!rule.support.contains(n))
        return 0.0;
    double c = rule.first_value;
    for (int j = rule.support.first; j < n; j += rule.support.step)
        c *= rule.ratio(j);
    return c;
}

std::vector<double> coefficients(const SeriesFamily& family, int order)
{
    if (order < 0)
        throw DomainError("order must be >= 0");
    const CoefficientRule rule = rule_for(family);
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    double v = rule.first_value;
    for (int j = rule.support.first; j <= order; j += rule.support.step) {
        c[static_cast<std::size_t>(j)] = v;
        v *= rule.ratio(j);
    }
    return c;
}

EvalResult evaluate(const SeriesFamily& family, complex z, const EvalConfig& cfg)
{
    const CoefficientRule rule = rule_for(family);
    const complex t0 = rule.first_value * ipow(z, rule.support.first);
    return sum_terms(rule, rule.support.first, t0, ipow(z, rule.support.step),
                     [](long) { return 1.0; }, cfg);
}

complex eval(const SeriesFamily& family, complex z, const EvalConfig& cfg)
{
    const EvalResult r = evaluate(family, z, cfg);
    if (!r.converged) {
        std::ostringstream os;
        os << to_string(family) << " did not converge at z = " << z << " within " << cfg.max_terms << " terms";
        throw ConvergenceError(os.str());
    }
    return r.value;
}

double eval_real(const SeriesFamily& family, double x, const EvalConfig& cfg)
{
    return eval(family, complex(x, 0.0), cfg).real();
}

complex eval_derivative(const SeriesFamily& family, complex z, const EvalConfig& cfg)
{
    const CoefficientRule rule = rule_for(family);
    // Term-wise: n c_n z^(n-1); the constant term drops out.
    long n0 = rule.support.first;
    if (n0 == 0)
        n0 = rule.support.step;
    const complex t0 = static_cast<double>(n0) * coeff(family, static_cast<int>(n0)) * ipow(z, n0 - 1);
    const long step = rule.support.step;
    const EvalResult r = sum_terms(
        rule, n0, t0, ipow(z, step),
        [step](long n) { return static_cast<double>(n + step) / static_cast<double>(n); }, cfg);
    if (!r.converged)
        throw ConvergenceError("derivative of " + to_string(family) + " did not converge");
    return r.value;
}

int DerivOp::shift() const noexcept
{
    switch (tag) {
    case DerivTag::D3:
    case DerivTag::Theta:
        return 3;
    default:
        return 1;
    }
}

double DerivOp::multiplier(long n) const noexcept
{
    if (n < shift())
        return 0.0;
    const double x = static_cast<double>(n);
    switch (tag) {
    case DerivTag::D: return x;
    case DerivTag::D3: return x * (x - 1) * (x - 2);
    case DerivTag::LD: return x * x;
    case DerivTag::LDAlpha: return x * (x + alpha);
    case DerivTag::LDAB: return x * (x + alpha) * (x + beta);
    case DerivTag::Theta: return x * (x - 2) * (x + 3 * alpha - 1);
    }
    return 0.0;
}

complex eval_polynomial(std::span<const double> coeffs, complex z)
{
    complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

complex eval_polynomial(std::span<const complex> coeffs, complex z)
{
    complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

} // namespace umbratrig
