#include "umbratrig/gtrig.hpp"

#include <algorithm>
#include <cmath>

namespace umbratrig {

namespace {

double real_of(const SeriesFamily& f, double x) { return eval_real(f, x); }

struct ComposedPair {
    UmbralSequence seq;
    SumFamily rule;
};

ComposedPair compose(const SumFamily& rule, const IdentityArgs& a)
{
    return {umbral_sum(embed_for(rule, a.x, a.order), embed_for(rule, a.y, a.order), rule), rule};
}

double addition_residual(const SeriesFamily& cos_f, const SeriesFamily& sin_f, const SumFamily& rule,
                         const IdentityArgs& a, const EvalConfig& cfg, bool sine)
{
    const UmbralSequence s = compose(rule, a).seq;
    const double cx = eval_real(cos_f, a.x, cfg), cy = eval_real(cos_f, a.y, cfg);
    const double sx = eval_real(sin_f, a.x, cfg), sy = eval_real(sin_f, a.y, cfg);
    if (sine)
        return std::abs(eval_on_sequence(sin_f, s, cfg) - (cx * sy + sx * cy));
    return std::abs(eval_on_sequence(cos_f, s, cfg) - (cx * cy - sx * sy));
}

// ch/sh of the [0,3] pseudo-hyperbolic pair: the signs differ from the trig case.
double phf_addition_residual(const IdentityArgs& a, const EvalConfig& cfg, bool sh)
{
    const UmbralSequence s = compose(SumFamily::phf03(), a).seq;
    const auto ch_f = SeriesFamily::phf_ch();
    const auto sh_f = SeriesFamily::phf_sh();
    const double cx = eval_real(ch_f, a.x, cfg), cy = eval_real(ch_f, a.y, cfg);
    const double sx = eval_real(sh_f, a.x, cfg), sy = eval_real(sh_f, a.y, cfg);
    if (sh)
        return std::abs(eval_on_sequence(sh_f, s, cfg) - (cx * sy + sx * cy));
    return std::abs(eval_on_sequence(ch_f, s, cfg) - (cx * cy + sx * sy));
}

double semigroup_residual(const SeriesFamily& f, const SumFamily& rule, const IdentityArgs& a,
                          const EvalConfig& cfg)
{
    const UmbralSequence s = compose(rule, a).seq;
    return std::abs(eval_on_sequence(f, s, cfg) - eval(f, a.x, cfg) * eval(f, a.y, cfg));
}

double duplication_residual(const IdentityArgs& a, const EvalConfig& cfg)
{
    const UmbralSequence twice = scale(2, a.x, SumFamily::laguerre(), a.order);
    const double c = eval_real(SeriesFamily::lcos(), a.x, cfg);
    const double s = eval_real(SeriesFamily::lsin(), a.x, cfg);
    double r = std::abs(eval_on_sequence(SeriesFamily::lcos(), twice, cfg) - (c * c - s * s));
    r = std::max(r, std::abs(eval_on_sequence(SeriesFamily::lsin(), twice, cfg) - 2.0 * c * s));

    const UmbralSequence twice3 = scale(2, a.x, SumFamily::phf03(), a.order);
    const double ch = eval_real(SeriesFamily::phf_ch(), a.x, cfg);
    const double sh = eval_real(SeriesFamily::phf_sh(), a.x, cfg);
    r = std::max(r, std::abs(eval_on_sequence(SeriesFamily::phf_ch(), twice3, cfg) - (ch * ch + sh * sh)));
    r = std::max(r, std::abs(eval_on_sequence(SeriesFamily::phf_sh(), twice3, cfg) - 2.0 * ch * sh));
    return r;
}

double de_moivre_residual(int n, const IdentityArgs& a, const EvalConfig& cfg)
{
    const complex unit(eval_real(SeriesFamily::lcos(), a.x, cfg), eval_real(SeriesFamily::lsin(), a.x, cfg));
    complex lhs = 1.0;
    for (int i = 0; i < n; ++i)
        lhs *= unit;
    const UmbralSequence nx = scale(n, a.x, SumFamily::laguerre(), a.order);
    const complex rhs(eval_on_sequence(SeriesFamily::lcos(), nx, cfg).real(),
                      eval_on_sequence(SeriesFamily::lsin(), nx, cfg).real());
    return std::abs(lhs - rhs);
}

double euler_decomposition_residual(int m, double x, const EvalConfig& cfg)
{
    const UnityRoots roots(m);
    std::vector<double> parts(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
        parts[static_cast<std::size_t>(k)] = eval_real(SeriesFamily::phf(k, m), x, cfg);
    double worst = 0.0;
    for (const complex& w : roots.values) {
        complex sum = 0.0;
        complex wk = 1.0;
        for (double part : parts) {
            sum += wk * part;
            wk *= w;
        }
        worst = std::max(worst, std::abs(std::exp(w * x) - sum));
    }
    return worst;
}

} // namespace

double lc(double x) { return real_of(SeriesFamily::lcos(), x); }
double ls(double x) { return real_of(SeriesFamily::lsin(), x); }
double lch(double x) { return real_of(SeriesFamily::lcosh(), x); }
double lsh(double x) { return real_of(SeriesFamily::lsinh(), x); }
double lc_alpha(double x, double alpha) { return real_of(SeriesFamily::lcos_alpha(alpha), x); }
double ls_alpha(double x, double alpha) { return real_of(SeriesFamily::lsin_alpha(alpha), x); }
double lc_ab(double x, double alpha, double beta) { return real_of(SeriesFamily::lcos_ab(alpha, beta), x); }
double ls_ab(double x, double alpha, double beta) { return real_of(SeriesFamily::lsin_ab(alpha, beta), x); }
double phf_e(double x, int k, int m) { return real_of(SeriesFamily::phf(k, m), x); }
double phf_ch(double x) { return real_of(SeriesFamily::phf_ch(), x); }
double phf_sh(double x) { return real_of(SeriesFamily::phf_sh(), x); }
double g_alpha(double x, double alpha) { return real_of(SeriesFamily::g_alpha(alpha), x); }

void IdentityKind::validate() const
{
    if (tag == IdentityTag::DeMoivre && param < 1)
        throw DomainError("DeMoivre requires n >= 1");
    if (tag == IdentityTag::EulerDecompPHF && param < 2)
        throw DomainError("EulerDecompPHF requires m >= 2");
}

std::string to_string(const IdentityKind& kind)
{
    switch (kind.tag) {
    case IdentityTag::Euler: return "Euler";
    case IdentityTag::AdditionCos: return "AdditionCos";
    case IdentityTag::AdditionSin: return "AdditionSin";
    case IdentityTag::AdditionCosAlpha: return "AdditionCosAlpha";
    case IdentityTag::AdditionSinAlpha: return "AdditionSinAlpha";
    case IdentityTag::AdditionCosAB: return "AdditionCosAB";
    case IdentityTag::AdditionSinAB: return "AdditionSinAB";
    case IdentityTag::AdditionChPHF: return "AdditionChPHF";
    case IdentityTag::AdditionShPHF: return "AdditionShPHF";
    case IdentityTag::SemigroupL: return "SemigroupL";
    case IdentityTag::SemigroupAlpha: return "SemigroupAlpha";
    case IdentityTag::SemigroupPHF: return "SemigroupPHF";
    case IdentityTag::Duplication: return "Duplication";
    case IdentityTag::DeMoivre: return "DeMoivre(" + std::to_string(kind.param) + ")";
    case IdentityTag::EulerDecompPHF: return "EulerDecompPHF(" + std::to_string(kind.param) + ")";
    case IdentityTag::PythagorasDefect: return "PythagorasDefect";
    }
    return "unknown";
}

double identity_residual(const IdentityKind& kind, const IdentityArgs& a, const EvalConfig& cfg)
{
    kind.validate();
    switch (kind.tag) {
    case IdentityTag::Euler: {
        const complex lhs = eval(SeriesFamily::lexp(), complex(0.0, a.x), cfg);
        const complex rhs(eval_real(SeriesFamily::lcos(), a.x, cfg), eval_real(SeriesFamily::lsin(), a.x, cfg));
        return std::abs(lhs - rhs);
    }
    case IdentityTag::AdditionCos:
    case IdentityTag::AdditionSin:
        return addition_residual(SeriesFamily::lcos(), SeriesFamily::lsin(), SumFamily::laguerre(), a, cfg,
                                 kind.tag == IdentityTag::AdditionSin);
    case IdentityTag::AdditionCosAlpha:
    case IdentityTag::AdditionSinAlpha:
        return addition_residual(SeriesFamily::lcos_alpha(a.alpha), SeriesFamily::lsin_alpha(a.alpha),
                                 SumFamily::alpha_order(a.alpha), a, cfg,
                                 kind.tag == IdentityTag::AdditionSinAlpha);
    case IdentityTag::AdditionCosAB:
    case IdentityTag::AdditionSinAB:
        return addition_residual(SeriesFamily::lcos_ab(a.alpha, a.beta), SeriesFamily::lsin_ab(a.alpha, a.beta),
                                 SumFamily::ab(a.alpha, a.beta), a, cfg, kind.tag == IdentityTag::AdditionSinAB);
    case IdentityTag::AdditionChPHF:
    case IdentityTag::AdditionShPHF:
        return phf_addition_residual(a, cfg, kind.tag == IdentityTag::AdditionShPHF);
    case IdentityTag::SemigroupL:
        return semigroup_residual(SeriesFamily::lexp(), SumFamily::laguerre(), a, cfg);
    case IdentityTag::SemigroupAlpha:
        return semigroup_residual(SeriesFamily::lexp_alpha(a.alpha), SumFamily::alpha_order(a.alpha), a, cfg);
    case IdentityTag::SemigroupPHF:
        return semigroup_residual(SeriesFamily::phf(0, 3), SumFamily::phf03(), a, cfg);
    case IdentityTag::Duplication:
        return duplication_residual(a, cfg);
    case IdentityTag::DeMoivre:
        return de_moivre_residual(kind.param, a, cfg);
    case IdentityTag::EulerDecompPHF:
        return euler_decomposition_residual(kind.param, a.x, cfg);
    case IdentityTag::PythagorasDefect: {
        const double c = eval_real(SeriesFamily::lcos(), a.x, cfg);
        const double s = eval_real(SeriesFamily::lsin(), a.x, cfg);
        return c * c + s * s - 1.0;
    }
    }
    throw DomainError("unknown identity kind");
}

std::vector<IdentityKind> identity_catalog()
{
    std::vector<IdentityKind> kinds = {
        {IdentityTag::Euler},          {IdentityTag::AdditionCos},      {IdentityTag::AdditionSin},
        {IdentityTag::AdditionCosAlpha}, {IdentityTag::AdditionSinAlpha}, {IdentityTag::AdditionCosAB},
        {IdentityTag::AdditionSinAB},  {IdentityTag::AdditionChPHF},    {IdentityTag::AdditionShPHF},
        {IdentityTag::SemigroupL},     {IdentityTag::SemigroupAlpha},   {IdentityTag::SemigroupPHF},
        {IdentityTag::Duplication},
    };
    for (int n = 1; n <= 5; ++n)
        kinds.push_back({IdentityTag::DeMoivre, n});
    for (int m = 2; m <= 5; ++m)
        kinds.push_back({IdentityTag::EulerDecompPHF, m});
    return kinds;
}

namespace {

bool uses_y(IdentityTag t)
{
    switch (t) {
    case IdentityTag::Euler:
    case IdentityTag::Duplication:
    case IdentityTag::DeMoivre:
    case IdentityTag::EulerDecompPHF:
    case IdentityTag::PythagorasDefect:
        return false;
    default:
        return true;
    }
}

bool uses_alpha(IdentityTag t)
{
    return t == IdentityTag::AdditionCosAlpha || t == IdentityTag::AdditionSinAlpha ||
           t == IdentityTag::SemigroupAlpha || t == IdentityTag::AdditionCosAB || t == IdentityTag::AdditionSinAB;
}

bool uses_beta(IdentityTag t) { return t == IdentityTag::AdditionCosAB || t == IdentityTag::AdditionSinAB; }

} // namespace

std::vector<IdentityReport> verify_identities(const VerifyGrid& grid, double tol, const EvalConfig& cfg)
{
    if (grid.points.empty())
        throw DomainError("verification grid is empty");
    const std::vector<double> unit{1.0};
    std::vector<IdentityReport> reports;
    for (const IdentityKind& kind : identity_catalog()) {
        IdentityReport rep{kind};
        const auto& ys = uses_y(kind.tag) ? grid.points : std::vector<double>{0.0};
        const auto& alphas = uses_alpha(kind.tag) ? grid.params : unit;
        const auto& betas = uses_beta(kind.tag) ? grid.params : unit;
        for (double x : grid.points)
            for (double y : ys)
                for (double al : alphas)
                    for (double be : betas) {
                        IdentityArgs args;
                        args.x = x;
                        args.y = y;
                        args.alpha = al;
                        args.beta = be;
                        rep.max_residual = std::max(rep.max_residual, identity_residual(kind, args, cfg));
                        ++rep.evaluations;
                    }
        rep.passed = rep.max_residual < tol;
        reports.push_back(rep);
    }

    // Stored as the smallest |defect| seen; the check is that it stays away from 0.
    IdentityReport defect{{IdentityTag::PythagorasDefect}};
    defect.max_residual = INFINITY;
    for (double x : {0.5, 1.0, 2.0}) {
        IdentityArgs args;
        args.x = x;
        defect.max_residual = std::min(defect.max_residual, std::abs(identity_residual(defect.kind, args, cfg)));
        ++defect.evaluations;
    }
    defect.passed = defect.max_residual > 0.01;
    reports.push_back(defect);
    return reports;
}

std::vector<LissajousPoint> lissajous_points(double x_max, int steps)
{
    if (!(x_max > 0.0))
        throw DomainError("x_max must be > 0");
    if (steps < 2)
        throw DomainError("steps must be >= 2");
    std::vector<LissajousPoint> pts;
    pts.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double x = i == steps - 1 ? x_max : x_max * i / (steps - 1);
        pts.push_back({x, lc(x), ls(x)});
    }
    return pts;
}

SectorArea sector_area_of(const std::function<double(double)>& f, const std::function<double(double)>& df,
                          const std::function<double(double)>& g, const std::function<double(double)>& dg,
                          double x, int panels)
{
    if (!(x >= 0.0))
        throw DomainError("sector area requires x >= 0");
    if (panels < 1)
        throw DomainError("at least one Simpson panel is required");
    auto integrand = [&](double t) { return f(t) * dg(t) - g(t) * df(t); };
    const int intervals = 2 * panels;
    const double h = x / intervals;
    double s = integrand(0.0) + integrand(x);
    for (int i = 1; i < intervals; ++i)
        s += (i % 2 == 1 ? 4.0 : 2.0) * integrand(h * i);
    const double integral = s * h / 3.0;
    return {0.5 * integral, integral};
}

SectorArea sector_area(double x, int panels)
{
    const auto cos_f = SeriesFamily::lcos();
    const auto sin_f = SeriesFamily::lsin();
    return sector_area_of([&](double t) { return eval_real(cos_f, t); },
                          [&](double t) { return eval_derivative(cos_f, t).real(); },
                          [&](double t) { return eval_real(sin_f, t); },
                          [&](double t) { return eval_derivative(sin_f, t).real(); }, x, panels);
}

} // namespace umbratrig
