#pragma once

// Power-series families, truncated summation and diagonal derivative operators.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "umbratrig/error.hpp"

namespace umbratrig {

using complex = std::complex<double>;

enum class FamilyTag {
    LExp,
    LExpAlpha,
    Humbert,
    LCos,
    LSin,
    LCosh,
    LSinh,
    LCosAlpha,
    LSinAlpha,
    LCosAB,
    LSinAB,
    PHF,
    PHFCh,
    PHFSh,
    GAlpha,
};

/// Entire function given by its power-series coefficient rule.
///
/// Parameters that a tag does not use are ignored. Construct through the
/// static helpers; they validate the parameter domain.
struct SeriesFamily {
    FamilyTag tag = FamilyTag::LExp;
    double alpha = 0.0;
    double beta = 0.0;
    int k = 0;
    int m = 0;

    static SeriesFamily lexp() { return {FamilyTag::LExp}; }
    static SeriesFamily lexp_alpha(double alpha);
    static SeriesFamily humbert(double alpha, double beta);
    static SeriesFamily lcos() { return {FamilyTag::LCos}; }
    static SeriesFamily lsin() { return {FamilyTag::LSin}; }
    static SeriesFamily lcosh() { return {FamilyTag::LCosh}; }
    static SeriesFamily lsinh() { return {FamilyTag::LSinh}; }
    static SeriesFamily lcos_alpha(double alpha);
    static SeriesFamily lsin_alpha(double alpha);
    static SeriesFamily lcos_ab(double alpha, double beta);
    static SeriesFamily lsin_ab(double alpha, double beta);
    static SeriesFamily phf(int k, int m);
    static SeriesFamily phf_ch() { return {FamilyTag::PHFCh}; }
    static SeriesFamily phf_sh() { return {FamilyTag::PHFSh}; }
    static SeriesFamily g_alpha(double alpha);

    /// Throws DomainError when the parameters are outside the family's domain.
    void validate() const;
};

std::string to_string(const SeriesFamily& family);

/// Indices carrying (possibly) nonzero coefficients: first, first+step, ...
struct Support {
    int first = 0;
    int step = 1;

    bool contains(long n) const noexcept { return n >= first && (n - first) % step == 0; }
};

Support support_of(const SeriesFamily& family);

struct EvalConfig {
    double rel_tol = 1e-15;
    int max_terms = 200;
    int stop_streak = 3;

    void validate() const;
};

struct EvalResult {
    complex value;
    int terms = 0;
    bool converged = false;
};

double gamma(double x);
/// log Γ(x) for x > 0.
double log_gamma(double x);
double beta(double x, double y);

double coeff(const SeriesFamily& family, int n);
/// Coefficients c_0..c_order.
std::vector<double> coefficients(const SeriesFamily& family, int order);

// Summation stops once stop_streak consecutive support terms satisfy
// |term| <= rel_tol * |partial sum|. `evaluate` reports non-convergence
// through the flag; `eval` throws ConvergenceError instead.
EvalResult evaluate(const SeriesFamily& family, complex z, const EvalConfig& cfg = {});
complex eval(const SeriesFamily& family, complex z, const EvalConfig& cfg = {});
double eval_real(const SeriesFamily& family, double x, const EvalConfig& cfg = {});

/// Ordinary derivative d/dz by term-wise differentiation.
complex eval_derivative(const SeriesFamily& family, complex z, const EvalConfig& cfg = {});

enum class DerivTag { D, D3, LD, LDAlpha, LDAB, Theta };

/// Operator acting diagonally on monomials: x^n -> multiplier(n) x^(n - shift).
struct DerivOp {
    DerivTag tag = DerivTag::D;
    double alpha = 0.0;
    double beta = 0.0;

    static DerivOp d() { return {DerivTag::D}; }
    static DerivOp d3() { return {DerivTag::D3}; }
    static DerivOp ld() { return {DerivTag::LD}; }
    static DerivOp ld_alpha(double alpha) { return {DerivTag::LDAlpha, alpha}; }
    static DerivOp ld_ab(double alpha, double beta) { return {DerivTag::LDAB, alpha, beta}; }
    static DerivOp theta(double alpha) { return {DerivTag::Theta, alpha}; }

    int shift() const noexcept;
    double multiplier(long n) const noexcept;
};

template <class T>
std::vector<T> apply_derivative(std::span<const T> coeffs, const DerivOp& op)
{
    const std::size_t s = static_cast<std::size_t>(op.shift());
    if (coeffs.size() <= s)
        return {};
    std::vector<T> out(coeffs.size() - s);
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = op.multiplier(static_cast<long>(j + s)) * coeffs[j + s];
    return out;
}

template <class T>
std::vector<T> apply_derivative(const std::vector<T>& coeffs, const DerivOp& op)
{
    return apply_derivative(std::span<const T>(coeffs), op);
}

/// Full polynomial sum of a finite coefficient vector (Horner).
complex eval_polynomial(std::span<const double> coeffs, complex z);
complex eval_polynomial(std::span<const complex> coeffs, complex z);

} // namespace umbratrig
