#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "umbratrig/error.hpp"
#include "umbratrig/series.hpp"

using namespace umbratrig;

TEST_CASE("gamma at classical points")
{
    CHECK(umbratrig::gamma(1.0) == 1.0);
    CHECK(umbratrig::gamma(5.0) == 24.0);
    CHECK(umbratrig::gamma(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("gamma agrees with std::tgamma")
{
    for (int i = 0; i < 2000; ++i) {
        const double x = oracle::uniform(1e-3, 170.0);
        CHECK(oracle::rel_err(umbratrig::gamma(x), std::tgamma(x)) < 1e-13);
    }
    for (int i = 0; i < 500; ++i) {
        double x = oracle::uniform(-30.0, 0.0);
        if (std::fabs(x - std::round(x)) < 1e-3)
            continue;
        CHECK(oracle::rel_err(umbratrig::gamma(x), std::tgamma(x)) < 1e-12);
    }
}

TEST_CASE("gamma poles and overflow")
{
    CHECK_THROWS_AS(umbratrig::gamma(0.0), PoleError);
    CHECK_THROWS_AS(umbratrig::gamma(-1.0), PoleError);
    CHECK_THROWS_AS(umbratrig::gamma(-7.0), PoleError);
    CHECK_THROWS_AS(umbratrig::gamma(171.7), OverflowError);
    CHECK(std::isfinite(umbratrig::gamma(171.5)));
}

TEST_CASE("log_gamma and beta")
{
    for (double x : {0.01, 0.5, 3.0, 50.0, 400.0, 1e4})
        CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    CHECK(beta(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(beta(2.0 / 3.0, 1.0) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(beta(5.0 / 3.0, 1.0) == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(beta(300.0, 200.5) == doctest::Approx(std::exp(std::lgamma(300.0) + std::lgamma(200.5) -
                                                         std::lgamma(500.5)))
                                    .epsilon(1e-10));
    CHECK_THROWS_AS(beta(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(beta(1.0, -2.0), DomainError);
}

TEST_CASE("coefficient examples")
{
    CHECK(coeff(SeriesFamily::lexp(), 3) == doctest::Approx(1.0 / 36).epsilon(1e-15));
    CHECK(coeff(SeriesFamily::lcos(), 4) == doctest::Approx(1.0 / 576).epsilon(1e-15));
    CHECK(coeff(SeriesFamily::lcos(), 3) == 0.0);
    CHECK(coeff(SeriesFamily::g_alpha(1.0), 3) == doctest::Approx(1.0 / 15).epsilon(1e-14));
}

TEST_CASE("coefficients match the defining formulas for every family")
{
    for (double alpha : {0.3, 1.0, 2.5}) {
        for (const SeriesFamily& f : oracle::all_families(alpha, alpha + 0.45)) {
            const auto c = coefficients(f, 60);
            REQUIRE(c.size() == 61);
            for (int n = 0; n <= 60; ++n) {
                INFO(to_string(f), " n=", n);
                const double want = static_cast<double>(oracle::direct_coeff(f, n));
                if (want == 0.0)
                    CHECK(c[static_cast<std::size_t>(n)] == 0.0);
                else
                    CHECK(oracle::rel_err(c[static_cast<std::size_t>(n)], want) < 1e-13);
                CHECK(coeff(f, n) == c[static_cast<std::size_t>(n)]);
            }
        }
    }
}

TEST_CASE("support matches the nonzero coefficients")
{
    for (const SeriesFamily& f : oracle::all_families()) {
        const Support s = support_of(f);
        const auto c = coefficients(f, 40);
        for (int n = 0; n <= 40; ++n) {
            INFO(to_string(f), " n=", n);
            CHECK((c[static_cast<std::size_t>(n)] != 0.0) == s.contains(n));
        }
    }
    CHECK(support_of(SeriesFamily::phf_ch()).step == 6);
    CHECK(support_of(SeriesFamily::phf_sh()).first == 3);
}

TEST_CASE("coefficient ratios tend to zero along the support")
{
    for (const SeriesFamily& f : oracle::all_families()) {
        const Support s = support_of(f);
        const auto c = coefficients(f, 150);
        double prev_ratio = INFINITY;
        for (int n = s.first + 20 * s.step; n + s.step <= 150; n += 10 * s.step) {
            // Three-factorial families underflow double range near n = 100.
            if (c[static_cast<std::size_t>(n + s.step)] == 0.0)
                break;
            const double ratio = std::fabs(c[static_cast<std::size_t>(n + s.step)] / c[static_cast<std::size_t>(n)]);
            INFO(to_string(f), " n=", n);
            CHECK(ratio < prev_ratio);
            prev_ratio = ratio;
        }
        CHECK(prev_ratio < 1e-2);
    }
}

TEST_CASE("family parameter validation")
{
    CHECK_THROWS_AS(SeriesFamily::phf(0, 1), DomainError);
    CHECK_THROWS_AS(SeriesFamily::phf(3, 3), DomainError);
    CHECK_THROWS_AS(SeriesFamily::phf(-1, 3), DomainError);
    CHECK_THROWS_AS(SeriesFamily::lexp_alpha(-1.0), DomainError);
    CHECK_THROWS_AS(SeriesFamily::humbert(0.0, -1.5), DomainError);
    CHECK_THROWS_AS(SeriesFamily::g_alpha(0.0), DomainError);
    CHECK_THROWS_AS(coeff(SeriesFamily::lexp(), -1), DomainError);
    CHECK_NOTHROW(SeriesFamily::lexp_alpha(-0.5));
}

TEST_CASE("eval examples")
{
    CHECK(eval_real(SeriesFamily::lexp(), 0.0) == 1.0);
    CHECK(oracle::rel_err(eval_real(SeriesFamily::lexp(), 1.0), oracle::kLe1) < 1e-15);
    CHECK(oracle::rel_err(eval_real(SeriesFamily::lcos(), 1.0), oracle::kLc1) < 1e-15);
    CHECK(oracle::rel_err(eval_real(SeriesFamily::lsin(), 1.0), oracle::kLs1) < 1e-15);
    CHECK(eval_real(SeriesFamily::lexp_alpha(0.0), 1.7) == doctest::Approx(eval_real(SeriesFamily::lexp(), 1.7)).epsilon(1e-15));
}

TEST_CASE("LExp and LExpAlpha are Bessel functions")
{
    for (int i = 0; i < 200; ++i) {
        const double x = oracle::uniform(0.0, 10.0);
        const double alpha = oracle::uniform(0.0, 3.0);
        const double s = 2.0 * std::sqrt(x);
        CHECK(oracle::rel_err(eval_real(SeriesFamily::lexp(), x), std::cyl_bessel_i(0.0, s)) < 1e-13);
        CHECK(eval_real(SeriesFamily::lexp(), -x) == doctest::Approx(std::cyl_bessel_j(0.0, s)).epsilon(1e-12));
        if (x > 1e-3)
            CHECK(oracle::rel_err(eval_real(SeriesFamily::lexp_alpha(alpha), x),
                                  std::pow(x, -alpha / 2) * std::cyl_bessel_i(alpha, s)) < 1e-12);
    }
}

TEST_CASE("eval agrees with long-double partial sums at complex arguments")
{
    for (const SeriesFamily& f : oracle::all_families()) {
        for (int i = 0; i < 20; ++i) {
            const complex z(oracle::uniform(-6.0, 6.0), oracle::uniform(-6.0, 6.0));
            const auto want = oracle::series(f, {z.real(), z.imag()}, 160);
            const complex got = eval(f, z);
            const double scale = std::max(1.0, static_cast<double>(oracle::abs_series(f, std::abs(z), 160)));
            INFO(to_string(f), " z=", z.real(), "+", z.imag(), "i");
            CHECK(std::abs(got - complex(static_cast<double>(want.real()), static_cast<double>(want.imag()))) <
                  1e-14 * scale);
        }
    }
}

TEST_CASE("PHF reductions")
{
    for (int i = 0; i < 100; ++i) {
        const double x = oracle::uniform(-5.0, 5.0);
        CHECK(eval_real(SeriesFamily::phf(0, 2), x) == doctest::Approx(std::cosh(x)).epsilon(1e-12));
        CHECK(eval_real(SeriesFamily::phf(1, 2), x) == doctest::Approx(std::sinh(x)).epsilon(1e-12));
        for (int m = 2; m <= 6; ++m) {
            double sum = 0.0;
            for (int k = 0; k < m; ++k)
                sum += eval_real(SeriesFamily::phf(k, m), x);
            CHECK(sum == doctest::Approx(std::exp(x)).epsilon(1e-13));
        }
        const double e03p = eval_real(SeriesFamily::phf(0, 3), x);
        const double e03m = eval_real(SeriesFamily::phf(0, 3), -x);
        CHECK(eval_real(SeriesFamily::phf_ch(), x) == doctest::Approx((e03p + e03m) / 2).epsilon(1e-13));
        CHECK(eval_real(SeriesFamily::phf_sh(), x) == doctest::Approx((e03p - e03m) / 2).epsilon(1e-13));
    }
}

TEST_CASE("stopping rule and convergence failure")
{
    EvalConfig cfg;
    cfg.max_terms = 5;
    const EvalResult r = evaluate(SeriesFamily::lexp(), 8.0, cfg);
    CHECK_FALSE(r.converged);
    CHECK(r.terms == 5);
    CHECK_THROWS_AS(eval(SeriesFamily::lexp(), 8.0, cfg), ConvergenceError);

    // Modular families must not stop inside a run of zero coefficients.
    const EvalResult g = evaluate(SeriesFamily::phf(4, 5), 2.0);
    CHECK(g.converged);
    CHECK(g.value.real() == doctest::Approx(static_cast<double>(oracle::series_real(SeriesFamily::phf(4, 5), 2.0L)))
                                .epsilon(1e-15));

    cfg = {};
    cfg.rel_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = {};
    cfg.stop_streak = 0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = {};
    cfg.max_terms = 0;
    CHECK_THROWS_AS(eval(SeriesFamily::lexp(), 1.0, cfg), DomainError);
}

TEST_CASE("eval is bit-deterministic")
{
    for (const SeriesFamily& f : oracle::all_families()) {
        const complex z(1.3, -0.7);
        const complex a = eval(f, z);
        const complex b = eval(f, z);
        CHECK(a.real() == b.real());
        CHECK(a.imag() == b.imag());
    }
}

TEST_CASE("eval_derivative matches the differentiated series")
{
    for (int i = 0; i < 100; ++i) {
        const double x = oracle::uniform(0.05, 8.0);
        const double s = 2.0 * std::sqrt(x);
        // d/dx I0(2 sqrt x) = I1(2 sqrt x) / sqrt x
        CHECK(eval_derivative(SeriesFamily::lexp(), x).real() ==
              doctest::Approx(std::cyl_bessel_i(1.0, s) / std::sqrt(x)).epsilon(1e-12));
        CHECK(eval_derivative(SeriesFamily::phf(1, 2), x).real() == doctest::Approx(std::cosh(x)).epsilon(1e-13));
    }
    for (const SeriesFamily& f : oracle::all_families()) {
        const double x = 1.3, h = 1e-5;
        const double fd = (eval_real(f, x + h) - eval_real(f, x - h)) / (2 * h);
        INFO(to_string(f));
        CHECK(eval_derivative(f, x).real() == doctest::Approx(fd).epsilon(1e-8));
    }
}

TEST_CASE("apply_derivative examples")
{
    const std::vector<double> x3{0, 0, 0, 1};
    CHECK(apply_derivative(x3, DerivOp::ld()) == std::vector<double>{0, 0, 9});
    CHECK(apply_derivative(std::vector<double>{0, 0, 1}, DerivOp::d3()).empty());
    const auto t = apply_derivative(x3, DerivOp::theta(1.0));
    REQUIRE(t.size() == 1);
    CHECK(t[0] == 15.0);
    CHECK(apply_derivative(std::vector<double>{0, 0, 0, 0, 1}, DerivOp::d3()) == std::vector<double>{0, 24});
}

TEST_CASE("multipliers vanish below the shift")
{
    const DerivOp ops[] = {DerivOp::d(), DerivOp::d3(), DerivOp::ld(), DerivOp::ld_alpha(0.4),
                           DerivOp::ld_ab(-0.5, 2.0), DerivOp::theta(0.7)};
    for (const DerivOp& op : ops)
        for (long n = 0; n < op.shift(); ++n)
            CHECK(op.multiplier(n) == 0.0);
}

namespace {

// x^n -> coefficients after D, multiplication by x^p and D again, composed by hand.
std::vector<double> d(const std::vector<double>& c)
{
    std::vector<double> out;
    for (std::size_t n = 1; n < c.size(); ++n)
        out.push_back(static_cast<double>(n) * c[n]);
    return out;
}

std::vector<double> times_x(const std::vector<double>& c)
{
    std::vector<double> out{0.0};
    out.insert(out.end(), c.begin(), c.end());
    return out;
}

std::vector<double> random_poly(int degree)
{
    std::vector<double> c;
    for (int i = 0; i <= degree; ++i)
        c.push_back(oracle::uniform(-2.0, 2.0));
    return c;
}

} // namespace

TEST_CASE("LD equals D x D on random polynomials")
{
    for (int i = 0; i < 50; ++i) {
        const auto c = random_poly(oracle::uniform_int(1, 12));
        auto want = d(times_x(d(c)));
        auto got = apply_derivative(c, DerivOp::ld());
        REQUIRE(got.size() == want.size());
        for (std::size_t j = 0; j < got.size(); ++j)
            CHECK(got[j] == doctest::Approx(want[j]).epsilon(1e-14));
    }
}

TEST_CASE("Theta multiplier matches the operator expansion")
{
    // d eta^{-3a} d eta^{3a} d on eta^n, computed with real exponents.
    for (int i = 0; i < 50; ++i) {
        const double a = oracle::uniform(0.1, 3.0);
        const long n = oracle::uniform_int(0, 40);
        // d eta^n = n eta^{n-1}; times eta^{3a}: n eta^{n-1+3a}; d: n (n-1+3a) eta^{n-2+3a};
        // times eta^{-3a}: n (n-1+3a) eta^{n-2}; d: n (n-1+3a)(n-2) eta^{n-3}.
        const double want = static_cast<double>(n) * (n - 1 + 3 * a) * (n - 2.0);
        const double got = DerivOp::theta(a).multiplier(n);
        CHECK(got == doctest::Approx(n < 3 ? 0.0 : want).epsilon(1e-14));
    }
}

namespace {

void check_eigen(const SeriesFamily& f, const DerivOp& op, int order, double sign = 1.0,
                 const SeriesFamily* target = nullptr)
{
    const auto c = coefficients(f, order);
    const auto out = apply_derivative(c, op);
    const auto want = coefficients(target ? *target : f, order);
    REQUIRE(out.size() == c.size() - static_cast<std::size_t>(op.shift()));
    for (std::size_t j = 0; j < out.size(); ++j) {
        INFO(to_string(f), " j=", j);
        const double w = sign * want[j];
        if (w == 0.0)
            CHECK(out[j] == 0.0);
        else
            CHECK(oracle::rel_err(out[j], w) <= 1e-14);
    }
}

} // namespace

TEST_CASE("eigen equations at coefficient level")
{
    for (int order = 1; order <= 60; order += 7) {
        check_eigen(SeriesFamily::lexp(), DerivOp::ld(), order);
        for (double a : {0.5, 1.0, 2.0}) {
            check_eigen(SeriesFamily::lexp_alpha(a), DerivOp::ld_alpha(a), order);
            check_eigen(SeriesFamily::humbert(a, 3.0 - a), DerivOp::ld_ab(a, 3.0 - a), order);
            check_eigen(SeriesFamily::g_alpha(a), DerivOp::theta(a), order + 3);
        }
        for (int k = 0; k < 3; ++k)
            check_eigen(SeriesFamily::phf(k, 3), DerivOp::d3(), order + 3);
    }
}

TEST_CASE("derivative pairs and the harmonic relation")
{
    const SeriesFamily lc = SeriesFamily::lcos(), ls = SeriesFamily::lsin();
    check_eigen(lc, DerivOp::ld(), 60, -1.0, &ls);
    check_eigen(ls, DerivOp::ld(), 60, 1.0, &lc);
    for (double a : {0.5, 1.0, 2.0}) {
        const SeriesFamily c = SeriesFamily::lcos_ab(a, 1.5), s = SeriesFamily::lsin_ab(a, 1.5);
        check_eigen(c, DerivOp::ld_ab(a, 1.5), 60, -1.0, &s);
        check_eigen(s, DerivOp::ld_ab(a, 1.5), 60, 1.0, &c);
    }
    const auto twice = apply_derivative(apply_derivative(coefficients(lc, 60), DerivOp::ld()), DerivOp::ld());
    const auto c = coefficients(lc, 60);
    for (std::size_t j = 0; j < twice.size(); ++j)
        CHECK(twice[j] == doctest::Approx(-c[j]).epsilon(1e-14));
}

TEST_CASE("alpha = 0 reduces the alpha-order functions to lc and ls")
{
    for (int i = 0; i < 30; ++i) {
        const double x = oracle::uniform(-4.0, 4.0);
        CHECK(eval_real(SeriesFamily::lcos_alpha(0.0), x) == doctest::Approx(eval_real(SeriesFamily::lcos(), x)).epsilon(1e-14));
        CHECK(eval_real(SeriesFamily::lsin_alpha(0.0), x) == doctest::Approx(eval_real(SeriesFamily::lsin(), x)).epsilon(1e-14));
    }
}

TEST_CASE("Gauss multiplication identity behind G_alpha")
{
    for (int n = 0; n <= 20; ++n) {
        const double lhs = umbratrig::gamma(n + 2.0 / 3.0) / static_cast<double>(oracle::factorial(3 * n));
        const double rhs = umbratrig::gamma(1.0 / 3.0) * umbratrig::gamma(2.0 / 3.0) /
                           (std::pow(3.0, 3 * n) * static_cast<double>(oracle::factorial(n)) * umbratrig::gamma(n + 1.0 / 3.0));
        CHECK(oracle::rel_err(lhs, rhs) <= 1e-12);
    }
}

TEST_CASE("G_alpha tends to e_[0,3] as alpha -> 0")
{
    const auto g = coefficients(SeriesFamily::g_alpha(1e-3), 30);
    const auto e = coefficients(SeriesFamily::phf(0, 3), 30);
    for (int n = 0; n <= 30; n += 3)
        CHECK(oracle::rel_err(g[static_cast<std::size_t>(n)], e[static_cast<std::size_t>(n)]) < 1e-2);
}

TEST_CASE("eval_polynomial is Horner evaluation")
{
    const std::vector<double> c{1.0, -2.0, 0.5, 3.0};
    const complex z(0.3, 1.1);
    const complex want = 1.0 - 2.0 * z + 0.5 * z * z + 3.0 * z * z * z;
    CHECK(std::abs(eval_polynomial(std::span<const double>(c), z) - want) < 1e-14);
}
