#include "umbratrig/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "umbratrig/umbral.hpp"

namespace umbratrig {

namespace {

// Integrand evaluations reach |z| in the thousands at the far Gauss-Laguerre
// nodes; the terms there peak late, so allow many more of them.
EvalConfig wide_config()
{
    EvalConfig cfg;
    cfg.max_terms = 4000;
    return cfg;
}

// Weighted sample of the continuous part: sum_i factor_i * eigen(t_i).
struct Sample {
    double t;
    double factor;
};

// Nodes and factors for int density(t) exp(growth(t)) eigen(x t) dt.
// `growth` must be the exponent added on top of the density (tau t or l^3 t);
// `linear_rate` is its asymptotic linear coefficient used to rescale the
// Gauss-Laguerre variable.
std::vector<Sample> sample_continuous(const SpectralDensity& density, const std::function<double(double)>& growth,
                                      double linear_rate, const QuadratureSpec& quad)
{
    std::vector<Sample> out;
    if (!density.continuous)
        return out;
    quad.validate();
    if (quad.kind == QuadKind::GaussLaguerre) {
        const double rate = density.decay_rate - linear_rate;
        if (!(rate > 0.0))
            throw DivergenceError("spectral density does not decay faster than the evolution grows");
        const auto rule = gauss_laguerre(quad.nodes);
        for (std::size_t i = 0; i < rule->size(); ++i) {
            // The rule absorbs exp(-rate t); the remaining factor is
            // density(t) exp(decay_rate t + growth(t) - linear_rate t).
            const double t = rule->nodes[i] / rate;
            const double d = density.continuous(t);
            if (d == 0.0 || rule->weights[i] == 0.0)
                continue;
            const double expo = std::log(std::fabs(d)) + density.decay_rate * t + growth(t) - linear_rate * t;
            const double factor = std::copysign(std::exp(expo + std::log(rule->weights[i]) - std::log(rate)), d);
            if (factor != 0.0)
                out.push_back({t, factor});
        }
        return out;
    }
    if (quad.kind == QuadKind::Simpson) {
        if (!std::isfinite(density.support_max))
            throw DomainError("Simpson integration needs a compactly supported density");
        const QuadratureRule rule = simpson_rule(quad.nodes, 0.0, density.support_max);
        for (std::size_t i = 0; i < rule.size(); ++i) {
            const double t = rule.nodes[i];
            const double factor = rule.weights[i] * density.continuous(t) * std::exp(growth(t));
            if (factor != 0.0)
                out.push_back({t, factor});
        }
        return out;
    }
    throw DomainError("spectral solvers take Gauss-Laguerre or Simpson rules");
}

// Sums the samples, rejecting non-finite values and tails that do not decay.
double accumulate(const std::vector<Sample>& samples, const std::function<double(double)>& eigen)
{
    double total = 0.0;
    std::vector<double> mags;
    mags.reserve(samples.size());
    for (const Sample& s : samples) {
        double v;
        try {
            v = s.factor * eigen(s.t);
        } catch (const ConvergenceError&) {
            throw DivergenceError("integrand cannot be evaluated at spectral parameter " + std::to_string(s.t));
        }
        if (!std::isfinite(v))
            throw DivergenceError("integrand is not finite at spectral parameter " + std::to_string(s.t));
        total += v;
        mags.push_back(std::fabs(v));
    }
    if (mags.size() >= 3) {
        const std::size_t n = mags.size();
        const bool rising = mags[n - 1] >= mags[n - 2] && mags[n - 2] >= mags[n - 3];
        if (rising && mags[n - 1] > 1e-12 * std::fabs(total))
            throw DivergenceError("spectral integrand tail does not decay");
    }
    return total;
}

void check_eigenfamily(const SeriesFamily& f)
{
    if (f.tag != FamilyTag::LExp && f.tag != FamilyTag::Humbert)
        throw DomainError("heat_spectral eigenfamily must be LExp or Humbert");
    f.validate();
}

} // namespace

void SpectralDensity::validate() const
{
    if (!(decay_rate > 0.0) || !std::isfinite(decay_rate))
        throw DomainError("decay_rate must be a positive finite number");
    if (!(support_max > 0.0))
        throw DomainError("support_max must be > 0");
    for (const SpectralAtom& a : atoms)
        if (!(a.location > 0.0) || !std::isfinite(a.location) || !std::isfinite(a.weight))
            throw DomainError("spectral atoms need a finite location > 0 and a finite weight");
}

double borel_transform(const SeriesFamily& family, double x, const QuadratureSpec& quad)
{
    family.validate();
    quad.validate();
    if (quad.kind != QuadKind::GaussLaguerre)
        throw DomainError("borel_transform needs a Gauss-Laguerre rule");
    const auto rule = gauss_laguerre(quad.nodes);
    const EvalConfig cfg = wide_config();
    double s = 0.0;
    for (std::size_t i = 0; i < rule->size(); ++i) {
        if (rule->weights[i] == 0.0)
            continue;
        s += rule->weights[i] * eval_real(family, x * rule->nodes[i], cfg);
    }
    return s;
}

double g_alpha_integral(double eta, double alpha)
{
    return g_alpha_integral(eta, alpha, QuadratureSpec::gauss_jacobi(64, alpha - 1.0, -1.0 / 3.0));
}

double g_alpha_integral(double eta, double alpha, const QuadratureSpec& quad)
{
    if (!(alpha > 0.0))
        throw DomainError("g_alpha_integral requires alpha > 0");
    quad.validate();
    if (quad.kind != QuadKind::GaussJacobi || std::fabs(quad.exp_at_1 - (alpha - 1.0)) > 1e-12 ||
        std::fabs(quad.exp_at_0 + 1.0 / 3.0) > 1e-12)
        throw DomainError("g_alpha_integral needs Gauss-Jacobi exponents (alpha - 1, -1/3)");
    const auto rule = gauss_jacobi(quad.nodes, quad.exp_at_1, quad.exp_at_0);
    const SeriesFamily e03 = SeriesFamily::phf(0, 3);
    double s = 0.0;
    for (std::size_t i = 0; i < rule->size(); ++i)
        s += rule->weights[i] * eval_real(e03, eta * std::cbrt(rule->nodes[i]));
    return s / beta(2.0 / 3.0, alpha);
}

double laguerre_heat_closed(double x, double tau)
{
    if (!(tau < 1.0))
        throw DomainError("closed-form Laguerre heat solution requires tau < 1");
    const double d = 1.0 - tau;
    return std::exp(x / d) / d;
}

double heat_spectral(const SpectralDensity& density, const SeriesFamily& eigenfamily, double x, double tau,
                     const QuadratureSpec& quad)
{
    density.validate();
    check_eigenfamily(eigenfamily);
    const EvalConfig cfg = wide_config();
    auto eigen = [&](double t) { return eval_real(eigenfamily, x * t, cfg); };

    const auto samples = sample_continuous(
        density, [tau](double t) { return tau * t; }, tau, quad);
    double total = accumulate(samples, eigen);
    for (const SpectralAtom& a : density.atoms)
        total += a.weight * std::exp(a.location * tau) * eigen(a.location);
    if (!std::isfinite(total))
        throw DivergenceError("heat_spectral result is not finite");
    return total;
}

double ll_heat_umbral(std::span<const double> init_coeffs, double x, double tau, int n_max, const EvalConfig& cfg)
{
    cfg.validate();
    if (n_max < 0)
        throw DomainError("order must be >= 0");
    if (init_coeffs.empty())
        throw DomainError("empty initial coefficient sequence");
    const int top = std::min(n_max, static_cast<int>(init_coeffs.size()) - 1);
    const UmbralSequence s = umbral_sum(embed(x, top), embed(tau, top), SumFamily::laguerre());
    double sum = 0.0;
    std::vector<double> terms;
    for (int n = 0; n <= top; ++n) {
        const double term = init_coeffs[static_cast<std::size_t>(n)] * s[static_cast<std::size_t>(n)].real();
        sum += term;
        if (init_coeffs[static_cast<std::size_t>(n)] != 0.0)
            terms.push_back(term);
    }
    // A polynomial initial condition of degree <= n_max is summed exactly;
    // otherwise the truncated tail must already be negligible.
    if (static_cast<int>(init_coeffs.size()) - 1 > n_max) {
        const std::size_t need = static_cast<std::size_t>(cfg.stop_streak);
        bool ok = terms.size() >= need;
        for (std::size_t i = 0; ok && i < need; ++i)
            ok = std::fabs(terms[terms.size() - 1 - i]) <= cfg.rel_tol * std::fabs(sum);
        if (!ok)
            throw ConvergenceError("ll_heat_umbral: expansion not converged at order " + std::to_string(n_max));
    }
    return sum;
}

double airy_heat_spectral(const SpectralDensity& density, double alpha, double x, double t,
                          const QuadratureSpec& quad)
{
    density.validate();
    const SeriesFamily g = SeriesFamily::g_alpha(alpha);
    if (t > 0.0 && density.continuous && !std::isfinite(density.support_max))
        throw DivergenceError("airy_heat_spectral with t > 0 needs a compactly supported or atomic density");
    const EvalConfig cfg = wide_config();
    auto eigen = [&](double l) { return eval_real(g, l * x, cfg); };

    const auto samples = sample_continuous(
        density, [t](double l) { return l * l * l * t; }, 0.0, quad);
    double total = accumulate(samples, eigen);
    for (const SpectralAtom& a : density.atoms) {
        const double l = a.location;
        total += a.weight * std::exp(l * l * l * t) * eigen(l);
    }
    if (!std::isfinite(total))
        throw DivergenceError("airy_heat_spectral result is not finite");
    return total;
}

std::vector<double> airy_heat_coefficients(const SpectralDensity& density, double alpha, double t, int blocks,
                                           const QuadratureSpec& quad)
{
    density.validate();
    if (blocks < 0)
        throw DomainError("blocks must be >= 0");
    if (t > 0.0 && density.continuous && !std::isfinite(density.support_max))
        throw DivergenceError("airy_heat_coefficients with t > 0 needs a compactly supported or atomic density");
    const std::vector<double> g = coefficients(SeriesFamily::g_alpha(alpha), 3 * blocks);

    std::vector<Sample> samples = sample_continuous(
        density, [t](double l) { return l * l * l * t; }, 0.0, quad);
    for (const SpectralAtom& a : density.atoms) {
        const double l = a.location;
        samples.push_back({l, a.weight * std::exp(l * l * l * t)});
    }

    std::vector<double> out(static_cast<std::size_t>(blocks) + 1, 0.0);
    for (const Sample& s : samples) {
        const double l3 = s.t * s.t * s.t;
        double term = s.factor * g[0];
        for (int r = 0; r <= blocks; ++r) {
            out[static_cast<std::size_t>(r)] += term;
            if (r == blocks)
                break;
            const double gr = g[static_cast<std::size_t>(3 * r)];
            const double gn = g[static_cast<std::size_t>(3 * r + 3)];
            if (gr == 0.0 || gn == 0.0 || term == 0.0)
                break;
            term *= (gn / gr) * l3;
        }
    }
    for (double v : out)
        if (!std::isfinite(v))
            throw DivergenceError("airy_heat_coefficients produced non-finite values");
    return out;
}

double heat_power_series(std::span<const double> init_coeffs, const DerivOp& op, double x, double tau)
{
    std::vector<double> acc(init_coeffs.begin(), init_coeffs.end());
    std::vector<double> cur = acc;
    double scale = 1.0;
    for (int k = 1;; ++k) {
        cur = apply_derivative(cur, op);
        if (cur.empty() || std::all_of(cur.begin(), cur.end(), [](double v) { return v == 0.0; }))
            break;
        scale *= tau / k;
        for (std::size_t j = 0; j < cur.size(); ++j)
            acc[j] += scale * cur[j];
    }
    return eval_polynomial(std::span<const double>(acc), complex(x, 0.0)).real();
}

void DiffusionProblem::validate() const
{
    if (!(tau >= 0.0))
        throw DomainError("diffusion time must be >= 0");
    if (std::holds_alternative<ExpClosedForm>(initial) && (op.tag != DerivTag::LD || time != TimeDerivative::Ordinary))
        throw DomainError("the closed exponential solution exists only for d/dtau F = LD F");
    if (const auto* d = std::get_if<SpectralDensity>(&initial))
        d->validate();
}

double solve(const DiffusionProblem& p, double x, const QuadratureSpec& quad)
{
    p.validate();
    if (std::holds_alternative<ExpClosedForm>(p.initial))
        return laguerre_heat_closed(x, p.tau);

    if (const auto* coeffs = std::get_if<std::vector<double>>(&p.initial)) {
        if (p.time == TimeDerivative::Laguerre) {
            if (p.op.tag != DerivTag::LD)
                throw DomainError("the umbral solver handles LD_tau F = LD_x F only");
            return ll_heat_umbral(*coeffs, x, p.tau, static_cast<int>(coeffs->size()) - 1);
        }
        return heat_power_series(*coeffs, p.op, x, p.tau);
    }

    const auto& density = std::get<SpectralDensity>(p.initial);
    if (p.time != TimeDerivative::Ordinary)
        throw DomainError("spectral solvers handle d/dtau F = op F only");
    switch (p.op.tag) {
    case DerivTag::LD: return heat_spectral(density, SeriesFamily::lexp(), x, p.tau, quad);
    case DerivTag::LDAB:
        return heat_spectral(density, SeriesFamily::humbert(p.op.alpha, p.op.beta), x, p.tau, quad);
    case DerivTag::Theta: return airy_heat_spectral(density, p.op.alpha, x, p.tau, quad);
    default: throw DomainError("no spectral solver for this operator");
    }
}

} // namespace umbratrig
