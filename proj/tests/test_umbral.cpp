#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "umbratrig/error.hpp"
#include "umbratrig/umbral.hpp"

using namespace umbratrig;

namespace {

std::vector<SumFamily> all_sum_families()
{
    return {SumFamily::ordinary(), SumFamily::laguerre(), SumFamily::alpha_order(0.8),
            SumFamily::ab(0.5, 2.0),  SumFamily::phf03(),    SumFamily::airy(1.3)};
}

UmbralSequence random_sequence(const SumFamily& f, int order, bool positive = false)
{
    UmbralSequence s;
    s.indexing = f.block_indexed() ? Indexing::Block3 : Indexing::Plain;
    for (int i = 0; i <= order; ++i)
        s.entries.emplace_back(positive ? oracle::uniform(0.5, 1.5) : oracle::uniform(-2, 2),
                               positive ? 0.0 : oracle::uniform(-2, 2));
    return s;
}

long double tg(long double x) { return std::tgamma(x); }

// Kernels straight from their Gamma-function definitions.
long double kernel_oracle(const SumFamily& f, int n, int r)
{
    const long double a = f.alpha, b = f.beta;
    const long double c = oracle::binom(n, r);
    switch (f.tag) {
    case SumTag::Ordinary: return c;
    case SumTag::Laguerre: return c * c;
    case SumTag::Alpha: return c * tg(n + a + 1) / (tg(n - r + a + 1) * tg(r + a + 1));
    case SumTag::AB:
        return c * tg(n + a + 1) * tg(n + b + 1) /
               (tg(n - r + a + 1) * tg(r + a + 1) * tg(n - r + b + 1) * tg(r + b + 1));
    case SumTag::PHF03: return oracle::binom(3 * n, 3 * r);
    case SumTag::Airy: {
        const long double third = 1.0L / 3.0L, two3 = 2.0L / 3.0L;
        return c * tg(a + two3) * tg(third) * tg(n + a + two3) * tg(n + third) /
               (tg(r + third) * tg(n - r + third) * tg(n - r + a + two3) * tg(r + a + two3));
    }
    }
    return 0.0L;
}

} // namespace

TEST_CASE("weight examples")
{
    CHECK(weight(SumFamily::laguerre(), 4, 2) == 36.0);
    CHECK(weight(SumFamily::phf03(), 2, 1) == 20.0);
    for (int n = 0; n < 10; ++n)
        CHECK(weight(SumFamily::airy(0.6), n, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(weight(SumFamily::laguerre(), 3, 4), DomainError);
    CHECK_THROWS_AS(SumFamily::alpha_order(-1.0), DomainError);
    CHECK_THROWS_AS(SumFamily::airy(0.0), DomainError);
}

TEST_CASE("weights match the Gamma-function kernels")
{
    for (const SumFamily& f : all_sum_families())
        for (int n = 0; n <= 20; ++n)
            for (int r = 0; r <= n; ++r) {
                INFO("tag=", static_cast<int>(f.tag), " n=", n, " r=", r);
                CHECK(oracle::rel_err(weight(f, n, r), static_cast<double>(kernel_oracle(f, n, r))) < 1e-12);
            }
}

TEST_CASE("weights are symmetric")
{
    for (int i = 0; i < 300; ++i) {
        const double a = oracle::uniform(-0.9, 3.0), b = oracle::uniform(-0.9, 3.0);
        const SumFamily fams[] = {SumFamily::ordinary(), SumFamily::laguerre(), SumFamily::alpha_order(a),
                                  SumFamily::ab(a, b), SumFamily::phf03(), SumFamily::airy(a + 1.0)};
        const int n = oracle::uniform_int(0, 40);
        const int r = oracle::uniform_int(0, n);
        for (const SumFamily& f : fams)
            CHECK(weight(f, n, r) == weight(f, n, n - r));
    }
}

TEST_CASE("alpha kernels keep their printed normalization at r = 0")
{
    for (double a : {0.5, 1.0, 2.0, 3.5}) {
        CHECK(weight(SumFamily::alpha_order(a), 7, 0) == doctest::Approx(1.0 / std::tgamma(a + 1)).epsilon(1e-14));
        CHECK(weight(SumFamily::ab(a, 1.5), 7, 0) ==
              doctest::Approx(1.0 / (std::tgamma(a + 1) * std::tgamma(2.5))).epsilon(1e-14));
    }
    // So x (+)_alpha 0 is x^n / Gamma(alpha + 1) rather than x^n.
    const auto s = umbral_sum(embed(2.0, 5), embed(0.0, 5), SumFamily::alpha_order(2.0));
    CHECK(s[5].real() == doctest::Approx(32.0 / 2.0).epsilon(1e-14));
}

TEST_CASE("embed examples")
{
    const auto a = embed(2.0, 3);
    CHECK(a.entries == std::vector<complex>{1, 2, 4, 8});
    CHECK(embed(0.0, 2).entries == std::vector<complex>{1, 0, 0});
    const auto i = embed(complex(0, 1), 2);
    CHECK(i[1] == complex(0, 1));
    CHECK(i[2] == complex(-1, 0));
    const auto b = embed_blocks(2.0, 2);
    CHECK(b.indexing == Indexing::Block3);
    CHECK(b.entries == std::vector<complex>{1, 8, 64});
    CHECK(embed_for(SumFamily::phf03(), 2.0, 2).indexing == Indexing::Block3);
    CHECK_THROWS_AS(embed(1.0, -1), DomainError);
}

TEST_CASE("umbral_sum examples")
{
    const auto lag = SumFamily::laguerre();
    CHECK(umbral_sum(embed(1.0, 4), embed(1.0, 4), lag)[2] == complex(6, 0));
    CHECK(umbral_sum(embed(1.0, 4), embed(-1.0, 4), lag)[3] == complex(0, 0));
    CHECK(umbral_sum(embed(complex(0, 1), 4), embed(complex(0, -1), 4), lag)[2] == complex(2, 0));
    CHECK(umbral_sum(embed(2.0, 3), embed(3.0, 3), SumFamily::ordinary())[2] == complex(25, 0));
    CHECK(umbral_sum(embed_blocks(1.0, 3), embed_blocks(1.0, 3), SumFamily::phf03())[2] == complex(22, 0));
}

TEST_CASE("umbral_sum order is the smaller input order")
{
    CHECK(umbral_sum(embed(1.0, 4), embed(1.0, 9), SumFamily::laguerre()).order() == 4);
}

TEST_CASE("indexing mismatches are rejected")
{
    CHECK_THROWS_AS(umbral_sum(embed(1.0, 3), embed(1.0, 3), SumFamily::phf03()), SupportMismatchError);
    CHECK_THROWS_AS(umbral_sum(embed_blocks(1.0, 3), embed_blocks(1.0, 3), SumFamily::laguerre()),
                    SupportMismatchError);
    CHECK_THROWS_AS(eval_on_sequence(SeriesFamily::lcos(), embed_blocks(0.5, 30)), SupportMismatchError);
}

TEST_CASE("umbral_sum is commutative, bit for bit")
{
    for (const SumFamily& f : all_sum_families())
        for (int i = 0; i < 20; ++i) {
            const int order = oracle::uniform_int(0, 30);
            const auto a = random_sequence(f, order), b = random_sequence(f, order);
            const auto ab = umbral_sum(a, b, f), ba = umbral_sum(b, a, f);
            for (int n = 0; n <= order; ++n) {
                CHECK(ab[static_cast<std::size_t>(n)].real() == ba[static_cast<std::size_t>(n)].real());
                CHECK(ab[static_cast<std::size_t>(n)].imag() == ba[static_cast<std::size_t>(n)].imag());
            }
        }
}

TEST_CASE("umbral_sum is associative")
{
    const SumFamily fams[] = {SumFamily::ordinary(), SumFamily::laguerre(), SumFamily::alpha_order(0.8),
                              SumFamily::ab(0.5, 2.0), SumFamily::phf03()};
    for (const SumFamily& f : fams)
        for (int i = 0; i < 10; ++i) {
            const int order = oracle::uniform_int(0, 25);
            const auto a = random_sequence(f, order, true), b = random_sequence(f, order, true),
                       c = random_sequence(f, order, true);
            const auto left = umbral_sum(umbral_sum(a, b, f), c, f);
            const auto right = umbral_sum(a, umbral_sum(b, c, f), f);
            for (int n = 0; n <= order; ++n) {
                INFO("tag=", static_cast<int>(f.tag), " n=", n);
                CHECK(std::abs(left[static_cast<std::size_t>(n)] - right[static_cast<std::size_t>(n)]) <=
                      1e-12 * std::abs(left[static_cast<std::size_t>(n)]));
            }
        }
}

TEST_CASE("ordinary sum is the Newton binomial")
{
    for (int i = 0; i < 50; ++i) {
        const int x = oracle::uniform_int(-9, 9), y = oracle::uniform_int(-9, 9);
        const auto s = umbral_sum(embed(double(x), 12), embed(double(y), 12), SumFamily::ordinary());
        for (int n = 0; n <= 12; ++n)
            CHECK(s[static_cast<std::size_t>(n)] == complex(std::pow(double(x + y), n), 0));
    }
}

TEST_CASE("PHF03 sum agrees with the roots-of-unity average")
{
    for (int i = 0; i < 200; ++i) {
        const complex x(oracle::uniform(-2, 2), oracle::uniform(-2, 2));
        const complex y(oracle::uniform(-2, 2), oracle::uniform(-2, 2));
        if (std::abs(x) > 2 || std::abs(y) > 2)
            continue;
        const auto s = umbral_sum(embed_blocks(x, 8), embed_blocks(y, 8), SumFamily::phf03());
        for (int n = 0; n <= 8; ++n) {
            const complex avg = phf_roots_average(x, y, n);
            const double scale = std::max(1.0, std::pow(std::abs(x) + std::abs(y), 3 * n));
            CHECK(std::abs(s[static_cast<std::size_t>(n)] - avg) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("phf_roots_average examples")
{
    CHECK(std::abs(phf_roots_average(1.0, 1.0, 1) - complex(2, 0)) < 1e-14);
    CHECK(std::abs(phf_roots_average(1.0, 1.0, 2) - complex(22, 0)) < 1e-13);
    CHECK(std::abs(phf_roots_average(1.7, 0.0, 3) - complex(std::pow(1.7, 9), 0)) < 1e-12);
}

TEST_CASE("exact integer identities up to n = 15")
{
    const GaussianInt one{1, 0}, minus_one{-1, 0}, i{0, 1}, minus_i{0, -1};
    const auto lag = SumFamily::laguerre();
    const auto ones = embed_exact(one, 15);
    const auto s11 = umbral_sum_exact(ones, ones, lag);
    const auto s1m = umbral_sum_exact(ones, embed_exact(minus_one, 15), lag);
    const auto sim = umbral_sum_exact(embed_exact(i, 15), embed_exact(minus_i, 15), lag);
    const auto b1 = embed_exact(one, 15, Indexing::Block3);
    const auto phf = umbral_sum_exact(b1, b1, SumFamily::phf03());
    const auto dup = scale_exact(2, one, lag, 15);
    for (int n = 0; n <= 15; ++n) {
        const int128 central = binomial_exact(2 * n, n);
        CHECK(s11[static_cast<std::size_t>(n)] == GaussianInt{central, 0});
        CHECK(dup[static_cast<std::size_t>(n)] == GaussianInt{central, 0});
        // (1 (+) -1)^n = sum (-1)^r C(n,r)^2: 0 for odd n, (-1)^{n/2} C(n, n/2) for even n.
        const int128 alt = n % 2 ? 0 : ((n / 2) % 2 ? -1 : 1) * binomial_exact(n, n / 2);
        CHECK(s1m[static_cast<std::size_t>(n)] == GaussianInt{alt, 0});
        // (i (+) -i)^n = i^n sum (-1)^r C(n,r)^2 = i^n (1 (+) -1)^n.
        GaussianInt ipow{1, 0};
        for (int k = 0; k < n; ++k)
            ipow = ipow * i;
        CHECK(sim[static_cast<std::size_t>(n)] == alt * ipow);
        const int128 p = (int128(1) << (3 * n)) + 2 * (n % 2 ? -1 : 1);
        CHECK(phf[static_cast<std::size_t>(n)] == GaussianInt{p / 3, 0});
        CHECK(p % 3 == 0);
    }
    CHECK_THROWS_AS(embed_exact(one, 16), DomainError);
}

TEST_CASE("exact and floating paths agree")
{
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y) {
            const auto f = umbral_sum(embed(double(x), 15), embed(double(y), 15), SumFamily::laguerre());
            const auto e = umbral_sum_exact(embed_exact({x, 0}, 15), embed_exact({y, 0}, 15), SumFamily::laguerre());
            for (int n = 0; n <= 15; ++n)
                CHECK(f[static_cast<std::size_t>(n)].real() == static_cast<double>(e[static_cast<std::size_t>(n)].re));
        }
}

TEST_CASE("scale examples")
{
    const auto lag = SumFamily::laguerre();
    CHECK(scale(2, 1.0, lag, 5)[3] == complex(20, 0));
    const auto one = scale(1, 0.7, lag, 6);
    for (int n = 0; n <= 6; ++n)
        CHECK(one[static_cast<std::size_t>(n)] == std::pow(complex(0.7, 0), n));
    CHECK(scale(3, 1.0, lag, 4)[1] == complex(3, 0));
    CHECK_THROWS_AS(scale(2, 1.0, SumFamily::alpha_order(1.0), 4), DomainError);
    CHECK_THROWS_AS(scale(0, 1.0, lag, 4), DomainError);
}

TEST_CASE("scale(k, 1) counts the coefficients of le^k")
{
    // le(x)^k = sum_n (k (x) 1)_n x^n / (n!)^2; build the product by convolution.
    for (int k = 1; k <= 5; ++k) {
        const int order = 12;
        std::vector<long double> base(order + 1), prod(order + 1, 0.0L);
        for (int n = 0; n <= order; ++n)
            base[static_cast<std::size_t>(n)] = 1.0L / (oracle::factorial(n) * oracle::factorial(n));
        prod[0] = 1.0L;
        for (int j = 0; j < k; ++j) {
            std::vector<long double> next(order + 1, 0.0L);
            for (int a = 0; a <= order; ++a)
                for (int b = 0; a + b <= order; ++b)
                    next[static_cast<std::size_t>(a + b)] += prod[static_cast<std::size_t>(a)] * base[static_cast<std::size_t>(b)];
            prod = next;
        }
        const auto s = scale(k, 1.0, SumFamily::laguerre(), order);
        for (int n = 0; n <= order; ++n) {
            const long double want = prod[static_cast<std::size_t>(n)] * oracle::factorial(n) * oracle::factorial(n);
            CHECK(s[static_cast<std::size_t>(n)].real() == doctest::Approx(static_cast<double>(want)).epsilon(1e-13));
        }
    }
}

TEST_CASE("scale folding order does not matter")
{
    for (const SumFamily& f : {SumFamily::laguerre(), SumFamily::phf03()}) {
        const complex x(0.8, -0.4);
        const auto e = embed_for(f, x, 10);
        const auto left = umbral_sum(umbral_sum(e, e, f), e, f);
        const auto s = scale(3, x, f, 10);
        for (int n = 0; n <= 10; ++n)
            CHECK(std::abs(s[static_cast<std::size_t>(n)] - left[static_cast<std::size_t>(n)]) <=
                  1e-13 * std::abs(left[static_cast<std::size_t>(n)]));
    }
}

TEST_CASE("eval_on_sequence examples and semigroup laws")
{
    for (int i = 0; i < 30; ++i) {
        const double x = oracle::uniform(-2, 2), y = oracle::uniform(-2, 2);
        CHECK(eval_on_sequence(SeriesFamily::lexp(), embed(x, 80)).real() ==
              doctest::Approx(eval_real(SeriesFamily::lexp(), x)).epsilon(1e-14));
        const auto s = umbral_sum(embed(x, 80), embed(y, 80), SumFamily::laguerre());
        CHECK(eval_on_sequence(SeriesFamily::lexp(), s).real() ==
              doctest::Approx(eval_real(SeriesFamily::lexp(), x) * eval_real(SeriesFamily::lexp(), y)).epsilon(1e-12));
        for (double a : {0.5, 1.0, 2.0}) {
            const auto sa = umbral_sum(embed(x, 80), embed(y, 80), SumFamily::alpha_order(a));
            const double want = eval_real(SeriesFamily::lexp_alpha(a), x) * eval_real(SeriesFamily::lexp_alpha(a), y);
            CHECK(eval_on_sequence(SeriesFamily::lexp_alpha(a), sa).real() == doctest::Approx(want).epsilon(1e-12));
        }
        const auto sp = umbral_sum(embed_blocks(x, 40), embed_blocks(y, 40), SumFamily::phf03());
        CHECK(eval_on_sequence(SeriesFamily::phf(0, 3), sp).real() ==
              doctest::Approx(eval_real(SeriesFamily::phf(0, 3), x) * eval_real(SeriesFamily::phf(0, 3), y))
                  .epsilon(1e-12));
    }
    // Duplication: lc(2 (x) 1) = lc(1)^2 - ls(1)^2.
    const double lc1 = eval_real(SeriesFamily::lcos(), 1.0), ls1 = eval_real(SeriesFamily::lsin(), 1.0);
    CHECK(eval_on_sequence(SeriesFamily::lcos(), scale(2, 1.0, SumFamily::laguerre(), 80)).real() ==
          doctest::Approx(lc1 * lc1 - ls1 * ls1).epsilon(1e-13));
}

TEST_CASE("eval_on_sequence needs enough entries")
{
    CHECK_THROWS_AS(eval_on_sequence(SeriesFamily::lexp(), embed(3.0, 5)), ConvergenceError);
    EvalConfig cfg;
    cfg.max_terms = 4;
    CHECK_THROWS_AS(eval_on_sequence(SeriesFamily::lexp(), embed(3.0, 80), cfg), ConvergenceError);
}

TEST_CASE("napier_term examples and convergence")
{
    CHECK(napier_term(1.0, 1) == 2.0);
    CHECK(napier_term(0.0, 17) == 1.0);
    CHECK(napier_term(1.0, 100) == doctest::Approx(oracle::kLe1).epsilon(2e-2));
    // Brute force: sum_r C(n,r)^2 (x/n^2)^r in long double.
    for (int n : {3, 10, 57}) {
        long double s = 0.0L;
        for (int r = 0; r <= n; ++r)
            s += oracle::binom(n, r) * oracle::binom(n, r) * std::pow(1.0L / (n * (long double)n), r);
        CHECK(napier_term(1.0, n) == doctest::Approx(static_cast<double>(s)).epsilon(1e-14));
    }
    double prev = INFINITY;
    for (int n : {10, 100, 1000}) {
        const double err = std::fabs(napier_term(1.0, n) - oracle::kLe1);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 3e-3);
    CHECK_THROWS_AS(napier_term(1.0, 0), DomainError);
}

TEST_CASE("j0_term converges to J0")
{
    CHECK(j0_term(0.0, 5) == 1.0);
    const double j01 = static_cast<double>(oracle::j0(1.0L));
    CHECK(j01 == doctest::Approx(oracle::kJ0At1).epsilon(1e-15));
    CHECK(j01 == doctest::Approx(std::cyl_bessel_j(0.0, 1.0)).epsilon(1e-14));
    CHECK(std::fabs(j0_term(1.0, 400) - j01) < 5e-3);
    double prev = INFINITY;
    for (int n : {10, 100, 400, 800}) {
        const double err = std::fabs(j0_term(1.0, n) - j01);
        CHECK(err < prev);
        prev = err;
    }
    // Successive doublings close in on the limit at x = 2.
    const double j02 = static_cast<double>(oracle::j0(2.0L));
    double gap = INFINITY;
    for (int n = 8; n <= 1024; n *= 2) {
        const double d = std::fabs(j0_term(2.0, n) - j0_term(2.0, 2 * n));
        CHECK(d < gap);
        gap = d;
        CHECK(std::fabs(j0_term(2.0, 2 * n) - j02) < std::fabs(j0_term(2.0, n) - j02));
    }
}

TEST_CASE("unity roots")
{
    for (int m = 2; m <= 7; ++m) {
        const UnityRoots w(m);
        REQUIRE(w.values.size() == static_cast<std::size_t>(m));
        for (const complex& v : w.values)
            CHECK(std::abs(std::pow(v, m) - 1.0) < 1e-13);
        for (int k = 0; k <= 2 * m; ++k) {
            complex s = 0;
            for (const complex& v : w.values)
                s += std::pow(v, k);
            CHECK(std::abs(s - complex(k % m == 0 ? m : 0, 0)) < 1e-12);
        }
    }
    CHECK_THROWS_AS(UnityRoots(1), DomainError);
}

TEST_CASE("hybrid polynomials solve the two-variable Laguerre equation")
{
    for (int i = 0; i < 20; ++i) {
        const int n = oracle::uniform_int(0, 10);
        const double x = oracle::uniform(0, 2), y = oracle::uniform(0, 2);
        const auto p = hybrid_polynomial(SumFamily::laguerre(), n);
        CHECK(std::abs(p(x, y) - umbral_sum(embed(x, n), embed(y, n), SumFamily::laguerre())[static_cast<std::size_t>(n)]) <=
              1e-13 * std::max(1.0, std::abs(p(x, y))));
        const complex lx = p.derive_x(DerivOp::ld())(x, y);
        const complex ly = p.derive_y(DerivOp::ld())(x, y);
        CHECK(std::abs(lx - ly) <= 1e-10 * std::max(1.0, std::abs(lx)));
        CHECK(p(x, 0.0).real() == doctest::Approx(std::pow(x, n)).epsilon(1e-14));
    }
}
