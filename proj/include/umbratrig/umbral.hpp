#pragma once

// Umbral sequences and the weighted-binomial composition rules
// (x (+) y)^n = sum_r w(n, r) x^(n-r) y^r.

#include <span>
#include <vector>

#include "umbratrig/series.hpp"

namespace umbratrig {

enum class SumTag { Ordinary, Laguerre, Alpha, AB, PHF03, Airy };

/// Weight kernel of a composition rule.
///
/// PHF03 and Airy are defined on powers x^(3n) only; their kernels take block
/// indices and operate on block-indexed sequences.
struct SumFamily {
    SumTag tag = SumTag::Ordinary;
    double alpha = 0.0;
    double beta = 0.0;

    static SumFamily ordinary() { return {SumTag::Ordinary}; }
    static SumFamily laguerre() { return {SumTag::Laguerre}; }
    static SumFamily alpha_order(double alpha);
    static SumFamily ab(double alpha, double beta);
    static SumFamily phf03() { return {SumTag::PHF03}; }
    static SumFamily airy(double alpha);

    void validate() const;
    bool block_indexed() const noexcept { return tag == SumTag::PHF03 || tag == SumTag::Airy; }
};

enum class Indexing {
    Plain,  ///< entry n stands for the power n
    Block3, ///< entry j stands for the power 3j
};

/// a_0..a_N standing for the umbral powers (expr)^n.
struct UmbralSequence {
    std::vector<complex> entries;
    Indexing indexing = Indexing::Plain;

    int order() const noexcept { return static_cast<int>(entries.size()) - 1; }
    const complex& operator[](std::size_t i) const { return entries[i]; }
};

/// exp(2 i pi p / m), p = 0..m-1.
struct UnityRoots {
    int m;
    std::vector<complex> values;

    explicit UnityRoots(int m);
};

double weight(const SumFamily& family, int n, int r);

UmbralSequence embed(complex x, int order);
/// Block-indexed embedding: a_j = x^(3j).
UmbralSequence embed_blocks(complex x, int blocks);
/// embed or embed_blocks, whichever indexing the family expects.
UmbralSequence embed_for(const SumFamily& family, complex x, int order);

UmbralSequence umbral_sum(const UmbralSequence& a, const UmbralSequence& b, const SumFamily& family);

/// k-fold umbral sum x (+) (x (+) ( ... (+) x)). Defined for Laguerre and PHF03.
UmbralSequence scale(int k, complex x, const SumFamily& family, int order);

/// sum_n coeff(family, n) a_n with the stopping rule of eval.
complex eval_on_sequence(const SeriesFamily& family, const UmbralSequence& seq, const EvalConfig& cfg = {});

/// (1 (+)_l x/n^2)^n, tends to eval(LExp, x).
double napier_term(double x, int n);
/// (1 (+)_l -(x/2n)^2)^n, tends to J0(x).
double j0_term(double x, int n);

/// (1/3) sum_p (x + w_p y)^(3n) over the cubic roots of unity.
complex phf_roots_average(complex x, complex y, int n);

// ---------------------------------------------------------------------------
// Exact integer path (Ordinary, Laguerre, PHF03; n <= 15).

__extension__ typedef __int128 int128;

inline constexpr int kExactMaxOrder = 15;

struct GaussianInt {
    int128 re = 0;
    int128 im = 0;

    friend GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussianInt operator*(GaussianInt a, GaussianInt b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianInt operator*(int128 s, GaussianInt a) { return {s * a.re, s * a.im}; }
    friend bool operator==(GaussianInt a, GaussianInt b) { return a.re == b.re && a.im == b.im; }
};

int128 binomial_exact(int n, int r);
int128 weight_exact(const SumFamily& family, int n, int r);

std::vector<GaussianInt> embed_exact(GaussianInt x, int order, Indexing indexing = Indexing::Plain);
std::vector<GaussianInt> umbral_sum_exact(std::span<const GaussianInt> a, std::span<const GaussianInt> b,
                                          const SumFamily& family);
std::vector<GaussianInt> scale_exact(int k, GaussianInt x, const SumFamily& family, int order);

// ---------------------------------------------------------------------------
// Bivariate forms of umbral sums, for applying derivative operators slot-wise.

/// Polynomial sum_{i,j} c_ij x^i y^j with 0 <= i, j <= degree.
class BivariatePolynomial {
public:
    explicit BivariatePolynomial(int degree);

    int degree() const noexcept { return degree_; }
    complex& at(int i, int j) { return c_[index(i, j)]; }
    const complex& at(int i, int j) const { return c_[index(i, j)]; }

    complex operator()(complex x, complex y) const;
    BivariatePolynomial derive_x(const DerivOp& op) const;
    BivariatePolynomial derive_y(const DerivOp& op) const;

private:
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(degree_ + 1) + static_cast<std::size_t>(j);
    }

    int degree_;
    std::vector<complex> c_;
};

/// (x (+) y)^n as a polynomial in x and y. Plain-indexed families only.
BivariatePolynomial hybrid_polynomial(const SumFamily& family, int n);

/// sum_n coeffs[n] (x (+) y)^n as a polynomial in x and y. Plain-indexed families only.
BivariatePolynomial umbral_expansion(std::span<const double> coeffs, const SumFamily& family);

} // namespace umbratrig
