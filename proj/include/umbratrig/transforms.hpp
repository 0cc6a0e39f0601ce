#pragma once

// Borel-type transforms and spectral / umbral solvers for Laguerre-type
// diffusion equations.

#include <cmath>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "umbratrig/quadrature.hpp"
#include "umbratrig/series.hpp"

namespace umbratrig {

struct SpectralAtom {
    double location;
    double weight;
};

/// Continuous density on (0, inf) plus finitely many point masses.
///
/// decay_rate is the contract on the continuous part: |density(t)| decays at
/// least like exp(-decay_rate t). Gauss-Laguerre integration rescales by it.
/// A finite support_max declares the density compactly supported on
/// (0, support_max], which the Simpson rule requires.
struct SpectralDensity {
    std::function<double(double)> continuous;
    double decay_rate = 1.0;
    double support_max = INFINITY;
    std::vector<SpectralAtom> atoms;

    void validate() const;
};

/// int_0^inf e^{-t} f(x t) dt.
double borel_transform(const SeriesFamily& family, double x,
                       const QuadratureSpec& quad = QuadratureSpec::gauss_laguerre());

/// (1 / B(2/3, alpha)) int_0^1 t^{-1/3} (1 - t)^{alpha - 1} e_[0,3](eta t^{1/3}) dt.
double g_alpha_integral(double eta, double alpha);
double g_alpha_integral(double eta, double alpha, const QuadratureSpec& quad);

/// e^{tau LD} e^x = e^{x / (1 - tau)} / (1 - tau), tau < 1.
double laguerre_heat_closed(double x, double tau);

/// int f~(t) e^{t tau} f(x t) dt + atoms, with f = LExp or Humbert(alpha, beta).
double heat_spectral(const SpectralDensity& density, const SeriesFamily& eigenfamily, double x, double tau,
                     const QuadratureSpec& quad = QuadratureSpec::gauss_laguerre());

/// f(x (+)_l tau) = sum_n c_n (x (+)_l tau)^n, truncated at order n_max.
double ll_heat_umbral(std::span<const double> init_coeffs, double x, double tau, int n_max,
                      const EvalConfig& cfg = {});

/// int f~(l) e^{l^3 t} G_alpha(l x) dl + atoms.
double airy_heat_spectral(const SpectralDensity& density, double alpha, double x, double t,
                          const QuadratureSpec& quad = QuadratureSpec::gauss_laguerre());

/// Block coefficients F_r(t) of the Airy solution, F(x, t) = sum_r F_r(t) x^(3r), r <= blocks.
std::vector<double> airy_heat_coefficients(const SpectralDensity& density, double alpha, double t, int blocks,
                                           const QuadratureSpec& quad = QuadratureSpec::gauss_laguerre());

/// e^{tau op} applied to a polynomial initial condition; exact since op lowers degree.
double heat_power_series(std::span<const double> init_coeffs, const DerivOp& op, double x, double tau);

// ---------------------------------------------------------------------------

enum class TimeDerivative {
    Ordinary, ///< d/dtau F = op F
    Laguerre, ///< LD_tau F = op F
};

struct ExpClosedForm {};

using InitialCondition = std::variant<SpectralDensity, std::vector<double>, ExpClosedForm>;

struct DiffusionProblem {
    DerivOp op = DerivOp::ld();
    TimeDerivative time = TimeDerivative::Ordinary;
    InitialCondition initial = ExpClosedForm{};
    double tau = 0.0;

    void validate() const;
};

/// F(x, tau) for the problem, dispatching to the matching solver.
double solve(const DiffusionProblem& problem, double x,
             const QuadratureSpec& quad = QuadratureSpec::gauss_laguerre());

} // namespace umbratrig
