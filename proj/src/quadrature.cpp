#include "umbratrig/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "umbratrig/error.hpp"
#include "umbratrig/series.hpp"

namespace umbratrig {

namespace {

// Implicit QL on a symmetric tridiagonal matrix. diag is overwritten with the
// eigenvalues; off[i] couples rows i and i+1 (off.back() is ignored). Only the
// first row of the eigenvector matrix is accumulated, which is all the
// Golub-Welsch weights need.
void tridiagonal_ql(std::vector<double>& diag, std::vector<double> off, std::vector<double>& first_row)
{
    const int n = static_cast<int>(diag.size());
    off.resize(static_cast<std::size_t>(n), 0.0);
    off[static_cast<std::size_t>(n - 1)] = 0.0;
    first_row.assign(static_cast<std::size_t>(n), 0.0);
    first_row[0] = 1.0;
    auto d = [&](int i) -> double& { return diag[static_cast<std::size_t>(i)]; };
    auto e = [&](int i) -> double& { return off[static_cast<std::size_t>(i)]; };
    auto z = [&](int i) -> double& { return first_row[static_cast<std::size_t>(i)]; };

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::fabs(d(m)) + std::fabs(d(m + 1));
                if (std::fabs(e(m)) + dd == dd)
                    break;
            }
            if (m != l) {
                if (iter++ == 100)
                    throw QuadratureError("tridiagonal eigenvalue iteration did not converge");
                double g = (d(l + 1) - d(l)) / (2.0 * e(l));
                double r = std::hypot(g, 1.0);
                g = d(m) - d(l) + e(l) / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e(i);
                    const double b = c * e(i);
                    r = std::hypot(f, g);
                    e(i + 1) = r;
                    if (r == 0.0) {
                        d(i + 1) -= p;
                        e(m) = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d(i + 1) - p;
                    r = (d(i) - g) * s + 2.0 * c * b;
                    p = s * r;
                    d(i + 1) = g + p;
                    g = c * r - b;
                    f = z(i + 1);
                    z(i + 1) = s * z(i) + c * f;
                    z(i) = c * z(i) - s * f;
                }
                if (r == 0.0 && i >= l)
                    continue;
                d(l) -= p;
                e(l) = g;
                e(m) = 0.0;
            }
        } while (m != l);
    }
}

QuadratureRule golub_welsch(std::vector<double> diag, std::vector<double> off, double mu0)
{
    std::vector<double> first;
    tridiagonal_ql(diag, std::move(off), first);
    std::vector<std::size_t> order(diag.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });
    QuadratureRule rule;
    for (std::size_t i : order) {
        rule.nodes.push_back(diag[i]);
        rule.weights.push_back(mu0 * first[i] * first[i]);
    }
    return rule;
}

// L_n(x) and L_{n+1}(x) by the three-term recurrence.
std::pair<double, double> laguerre_pair(int n, double x)
{
    double prev = 1.0;
    double cur = 1.0 - x;
    if (n == 0)
        return {prev, cur};
    for (int k = 1; k < n + 1; ++k) {
        const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return {prev, cur};
}

QuadratureRule build_gauss_laguerre(int n)
{
    std::vector<double> diag(static_cast<std::size_t>(n));
    std::vector<double> off(static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) {
        diag[static_cast<std::size_t>(k)] = 2.0 * k + 1.0;
        if (k + 1 < n)
            off[static_cast<std::size_t>(k)] = k + 1.0;
    }
    QuadratureRule rule = golub_welsch(diag, off, 1.0);

    // Newton polish on L_n, then weights from w_i = x_i / ((n+1) L_{n+1}(x_i))^2,
    // which keeps full relative accuracy in the tiny tail weights.
    rule.scaled_weights.resize(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
        double x = rule.nodes[i];
        for (int it = 0; it < 3; ++it) {
            const auto [lnm1, ln] = laguerre_pair(n - 1, x);
            const double dln = n * (ln - lnm1) / x;
            const double dx = ln / dln;
            x -= dx;
            if (std::fabs(dx) <= 1e-16 * x)
                break;
        }
        rule.nodes[i] = x;
        const double lnp1 = laguerre_pair(n, x).second;
        const double log_w = std::log(x) - 2.0 * std::log((n + 1.0) * std::fabs(lnp1));
        rule.weights[i] = std::exp(log_w);
        rule.scaled_weights[i] = std::exp(log_w + x);
    }
    return rule;
}

QuadratureRule build_gauss_jacobi(int n, double a, double b)
{
    // Jacobi matrix on [-1, 1] for (1 - x)^a (1 + x)^b, mapped to t = (1 + x) / 2.
    std::vector<double> diag(static_cast<std::size_t>(n));
    std::vector<double> off(static_cast<std::size_t>(n), 0.0);
    const double ab = a + b;
    diag[0] = (b - a) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + ab;
        diag[static_cast<std::size_t>(k)] = (b * b - a * a) / (s * (s + 2.0));
        double sq;
        if (k == 1)
            sq = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        else
            sq = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
        off[static_cast<std::size_t>(k - 1)] = std::sqrt(sq);
    }
    QuadratureRule rule = golub_welsch(diag, off, beta(a + 1.0, b + 1.0));
    for (double& t : rule.nodes)
        t = 0.5 * (1.0 + t);
    return rule;
}

} // namespace

void QuadratureSpec::validate() const
{
    if (kind == QuadKind::Simpson) {
        if (nodes < 1)
            throw DomainError("Simpson needs at least one panel");
        return;
    }
    if (nodes < 2)
        throw DomainError("Gauss rules need at least 2 nodes");
    if (kind == QuadKind::GaussJacobi && (!(exp_at_1 > -1.0) || !(exp_at_0 > -1.0)))
        throw DomainError("Jacobi exponents must be > -1");
}

std::shared_ptr<const QuadratureRule> gauss_laguerre(int nodes)
{
    QuadratureSpec::gauss_laguerre(nodes).validate();
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const QuadratureRule>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[nodes];
    if (!slot) {
        auto rule = std::make_shared<const QuadratureRule>(build_gauss_laguerre(nodes));
        for (std::size_t i = 0; i < rule->size(); ++i)
            if (!std::isfinite(rule->nodes[i]) || !std::isfinite(rule->weights[i]))
                throw QuadratureError("Gauss-Laguerre node generation produced non-finite values");
        slot = std::move(rule);
    }
    return slot;
}

std::shared_ptr<const QuadratureRule> gauss_jacobi(int nodes, double a, double b)
{
    QuadratureSpec::gauss_jacobi(nodes, a, b).validate();
    static std::mutex mu;
    static std::map<std::tuple<int, double, double>, std::shared_ptr<const QuadratureRule>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{nodes, a, b}];
    if (!slot) {
        auto rule = std::make_shared<const QuadratureRule>(build_gauss_jacobi(nodes, a, b));
        for (std::size_t i = 0; i < rule->size(); ++i)
            if (!std::isfinite(rule->nodes[i]) || !std::isfinite(rule->weights[i]) || rule->nodes[i] <= 0.0 ||
                rule->nodes[i] >= 1.0)
                throw QuadratureError("Gauss-Jacobi node generation failed");
        slot = std::move(rule);
    }
    return slot;
}

QuadratureRule simpson_rule(int panels, double lo, double hi)
{
    QuadratureSpec::simpson(panels).validate();
    if (!(hi > lo))
        throw DomainError("Simpson interval must satisfy lo < hi");
    const int intervals = 2 * panels;
    const double h = (hi - lo) / intervals;
    QuadratureRule rule;
    for (int i = 0; i <= intervals; ++i) {
        rule.nodes.push_back(i == intervals ? hi : lo + h * i);
        const double c = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        rule.weights.push_back(c * h / 3.0);
    }
    return rule;
}

} // namespace umbratrig
