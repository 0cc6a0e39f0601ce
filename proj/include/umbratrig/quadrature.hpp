#pragma once

// Gauss-Laguerre, Gauss-Jacobi and composite Simpson rules.

#include <memory>
#include <vector>

namespace umbratrig {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    /// weights[i] * exp(nodes[i]); filled for Gauss-Laguerre only, where the
    /// plain weights underflow long before the scaled ones do.
    std::vector<double> scaled_weights;

    std::size_t size() const noexcept { return nodes.size(); }
};

enum class QuadKind { GaussLaguerre, GaussJacobi, Simpson };

struct QuadratureSpec {
    QuadKind kind = QuadKind::GaussLaguerre;
    /// Node count, or the number of Simpson panels.
    int nodes = 96;
    /// Jacobi weight (1 - t)^exp_at_1 t^exp_at_0 on [0, 1].
    double exp_at_1 = 0.0;
    double exp_at_0 = 0.0;

    static QuadratureSpec gauss_laguerre(int nodes = 96) { return {QuadKind::GaussLaguerre, nodes}; }
    static QuadratureSpec gauss_jacobi(int nodes, double exp_at_1, double exp_at_0)
    {
        return {QuadKind::GaussJacobi, nodes, exp_at_1, exp_at_0};
    }
    static QuadratureSpec simpson(int panels) { return {QuadKind::Simpson, panels}; }

    void validate() const;
};

/// int_0^inf e^{-t} f(t) dt ~ sum w_i f(t_i). Cached; the returned table is immutable.
std::shared_ptr<const QuadratureRule> gauss_laguerre(int nodes);

/// int_0^1 (1 - t)^a t^b f(t) dt ~ sum w_i f(t_i). Cached.
std::shared_ptr<const QuadratureRule> gauss_jacobi(int nodes, double a, double b);

/// Composite Simpson on [lo, hi] with `panels` panels (2 * panels intervals).
QuadratureRule simpson_rule(int panels, double lo, double hi);

} // namespace umbratrig
