#include "umbratrig/umbratrig.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <string_view>

#include "umbratrig/error.hpp"
#include "umbratrig/gtrig.hpp"
#include "umbratrig/transforms.hpp"
#include "umbratrig/umbral.hpp"

using namespace umbratrig;

struct ut_family {
    SeriesFamily value;
};

struct ut_sum_family {
    SumFamily value;
};

struct ut_sequence {
    UmbralSequence value;
};

struct ut_report {
    std::vector<IdentityReport> value;
};

struct ut_density {
    SpectralDensity value;
};

namespace {

thread_local std::string last_error;

struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

ut_status status_of(ErrorCode code)
{
    switch (code) {
    case ErrorCode::Domain: return UT_ERR_DOMAIN;
    case ErrorCode::Pole: return UT_ERR_POLE;
    case ErrorCode::Overflow: return UT_ERR_OVERFLOW;
    case ErrorCode::Convergence: return UT_ERR_CONVERGENCE;
    case ErrorCode::SupportMismatch: return UT_ERR_SUPPORT_MISMATCH;
    case ErrorCode::Quadrature: return UT_ERR_QUADRATURE;
    case ErrorCode::Divergence: return UT_ERR_DIVERGENCE;
    }
    return UT_ERR_INTERNAL;
}

template <class F>
ut_status guarded(F&& body) noexcept
{
    try {
        body();
        last_error.clear();
        return UT_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const InvalidArgument& e) {
        last_error = e.what();
        return UT_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return UT_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return UT_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return UT_ERR_INTERNAL;
    }
}

template <class... P>
void require(const P*... ptrs)
{
    if (((ptrs == nullptr) || ...))
        throw InvalidArgument("null pointer argument");
}

EvalConfig config_of(const ut_eval_config* cfg)
{
    EvalConfig c;
    if (cfg) {
        c.rel_tol = cfg->rel_tol;
        c.max_terms = cfg->max_terms;
        c.stop_streak = cfg->stop_streak;
    }
    c.validate();
    return c;
}

QuadratureSpec quad_of(const ut_quadrature* q, QuadratureSpec fallback)
{
    if (!q)
        return fallback;
    switch (q->kind) {
    case UT_QUAD_GAUSS_LAGUERRE: return QuadratureSpec::gauss_laguerre(q->nodes);
    case UT_QUAD_GAUSS_JACOBI: return QuadratureSpec::gauss_jacobi(q->nodes, q->exp_at_1, q->exp_at_0);
    case UT_QUAD_SIMPSON: return QuadratureSpec::simpson(q->nodes);
    }
    throw InvalidArgument("unknown quadrature kind");
}

SeriesFamily family_named(std::string_view name, double alpha, double beta, int k, int m)
{
    if (name == "lexp") return SeriesFamily::lexp();
    if (name == "lexp_alpha") return SeriesFamily::lexp_alpha(alpha);
    if (name == "humbert") return SeriesFamily::humbert(alpha, beta);
    if (name == "lcos") return SeriesFamily::lcos();
    if (name == "lsin") return SeriesFamily::lsin();
    if (name == "lcosh") return SeriesFamily::lcosh();
    if (name == "lsinh") return SeriesFamily::lsinh();
    if (name == "lcos_alpha") return SeriesFamily::lcos_alpha(alpha);
    if (name == "lsin_alpha") return SeriesFamily::lsin_alpha(alpha);
    if (name == "lcos_ab") return SeriesFamily::lcos_ab(alpha, beta);
    if (name == "lsin_ab") return SeriesFamily::lsin_ab(alpha, beta);
    if (name == "phf") return SeriesFamily::phf(k, m);
    if (name == "phf_ch") return SeriesFamily::phf_ch();
    if (name == "phf_sh") return SeriesFamily::phf_sh();
    if (name == "g_alpha") return SeriesFamily::g_alpha(alpha);
    throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

SumFamily sum_family_named(std::string_view name, double alpha, double beta)
{
    if (name == "ordinary") return SumFamily::ordinary();
    if (name == "laguerre") return SumFamily::laguerre();
    if (name == "alpha") return SumFamily::alpha_order(alpha);
    if (name == "ab") return SumFamily::ab(alpha, beta);
    if (name == "phf03") return SumFamily::phf03();
    if (name == "airy") return SumFamily::airy(alpha);
    throw InvalidArgument("unknown sum family '" + std::string(name) + "'");
}

DerivOp op_named(std::string_view name, double alpha, double beta)
{
    if (name == "d") return DerivOp::d();
    if (name == "d3") return DerivOp::d3();
    if (name == "ld") return DerivOp::ld();
    if (name == "ld_alpha") return DerivOp::ld_alpha(alpha);
    if (name == "ld_ab") return DerivOp::ld_ab(alpha, beta);
    if (name == "theta") return DerivOp::theta(alpha);
    throw InvalidArgument("unknown operator '" + std::string(name) + "'");
}

IdentityKind kind_named(std::string_view name, int param)
{
    static const std::pair<std::string_view, IdentityTag> table[] = {
        {"euler", IdentityTag::Euler},
        {"addition_cos", IdentityTag::AdditionCos},
        {"addition_sin", IdentityTag::AdditionSin},
        {"addition_cos_alpha", IdentityTag::AdditionCosAlpha},
        {"addition_sin_alpha", IdentityTag::AdditionSinAlpha},
        {"addition_cos_ab", IdentityTag::AdditionCosAB},
        {"addition_sin_ab", IdentityTag::AdditionSinAB},
        {"addition_ch_phf", IdentityTag::AdditionChPHF},
        {"addition_sh_phf", IdentityTag::AdditionShPHF},
        {"semigroup_l", IdentityTag::SemigroupL},
        {"semigroup_alpha", IdentityTag::SemigroupAlpha},
        {"semigroup_phf", IdentityTag::SemigroupPHF},
        {"duplication", IdentityTag::Duplication},
        {"de_moivre", IdentityTag::DeMoivre},
        {"euler_decomp_phf", IdentityTag::EulerDecompPHF},
        {"pythagoras_defect", IdentityTag::PythagorasDefect},
    };
    for (const auto& [n, tag] : table)
        if (n == name)
            return {tag, param};
    throw InvalidArgument("unknown identity '" + std::string(name) + "'");
}

void copy_string(const std::string& s, char* buf, size_t cap)
{
    if (cap == 0)
        return;
    const size_t n = std::min(s.size(), cap - 1);
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
}

template <class Handle, class Value>
void make_handle(Handle** out, Value&& v)
{
    *out = new Handle{std::forward<Value>(v)};
}

} // namespace

extern "C" {

const char* ut_last_error(void) { return last_error.c_str(); }

const char* ut_status_name(ut_status status)
{
    switch (status) {
    case UT_OK: return "ok";
    case UT_ERR_DOMAIN: return "domain error";
    case UT_ERR_POLE: return "pole";
    case UT_ERR_OVERFLOW: return "overflow";
    case UT_ERR_CONVERGENCE: return "convergence failure";
    case UT_ERR_SUPPORT_MISMATCH: return "support mismatch";
    case UT_ERR_QUADRATURE: return "quadrature failure";
    case UT_ERR_DIVERGENCE: return "divergence";
    case UT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case UT_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

ut_eval_config ut_eval_config_default(void)
{
    const EvalConfig c;
    return {c.rel_tol, c.max_terms, c.stop_streak};
}

ut_status ut_gamma(double x, double* out)
{
    return guarded([&] {
        require(out);
        *out = umbratrig::gamma(x);
    });
}

ut_status ut_beta(double x, double y, double* out)
{
    return guarded([&] {
        require(out);
        *out = umbratrig::beta(x, y);
    });
}

ut_status ut_family_create(const char* name, double alpha, double beta, int k, int m, ut_family** out)
{
    return guarded([&] {
        require(name, out);
        *out = nullptr;
        make_handle(out, family_named(name, alpha, beta, k, m));
    });
}

void ut_family_destroy(ut_family* family) { delete family; }

ut_status ut_family_describe(const ut_family* family, char* buf, size_t cap)
{
    return guarded([&] {
        require(family, buf);
        copy_string(to_string(family->value), buf, cap);
    });
}

ut_status ut_coeff(const ut_family* family, int n, double* out)
{
    return guarded([&] {
        require(family, out);
        *out = coeff(family->value, n);
    });
}

ut_status ut_eval(const ut_family* family, double re, double im, const ut_eval_config* cfg, double* out_re,
                  double* out_im, int* terms)
{
    return guarded([&] {
        require(family, out_re, out_im);
        const EvalResult r = evaluate(family->value, complex(re, im), config_of(cfg));
        if (!r.converged)
            throw ConvergenceError("series did not converge within " + std::to_string(r.terms) + " terms");
        *out_re = r.value.real();
        *out_im = r.value.imag();
        if (terms)
            *terms = r.terms;
    });
}

ut_status ut_eval_derivative(const ut_family* family, double re, double im, const ut_eval_config* cfg,
                             double* out_re, double* out_im)
{
    return guarded([&] {
        require(family, out_re, out_im);
        const complex v = eval_derivative(family->value, complex(re, im), config_of(cfg));
        *out_re = v.real();
        *out_im = v.imag();
    });
}

ut_status ut_apply_derivative(const char* op, double alpha, double beta, const double* coeffs, size_t n,
                              double* out, size_t* out_n)
{
    return guarded([&] {
        require(op, out_n);
        if (n > 0)
            require(coeffs, out);
        const auto r = apply_derivative(std::span<const double>(coeffs, n), op_named(op, alpha, beta));
        std::copy(r.begin(), r.end(), out);
        *out_n = r.size();
    });
}

ut_status ut_sum_family_create(const char* name, double alpha, double beta, ut_sum_family** out)
{
    return guarded([&] {
        require(name, out);
        *out = nullptr;
        SumFamily f = sum_family_named(name, alpha, beta);
        f.validate();
        make_handle(out, f);
    });
}

void ut_sum_family_destroy(ut_sum_family* family) { delete family; }

ut_status ut_sequence_embed(const ut_sum_family* family, double re, double im, int order, ut_sequence** out)
{
    return guarded([&] {
        require(family, out);
        *out = nullptr;
        make_handle(out, embed_for(family->value, complex(re, im), order));
    });
}

ut_status ut_sequence_sum(const ut_sequence* a, const ut_sequence* b, const ut_sum_family* family,
                          ut_sequence** out)
{
    return guarded([&] {
        require(a, b, family, out);
        *out = nullptr;
        make_handle(out, umbral_sum(a->value, b->value, family->value));
    });
}

ut_status ut_sequence_scale(int k, double re, double im, const ut_sum_family* family, int order, ut_sequence** out)
{
    return guarded([&] {
        require(family, out);
        *out = nullptr;
        make_handle(out, scale(k, complex(re, im), family->value, order));
    });
}

void ut_sequence_destroy(ut_sequence* seq) { delete seq; }

size_t ut_sequence_size(const ut_sequence* seq) { return seq ? seq->value.entries.size() : 0; }

ut_status ut_sequence_get(const ut_sequence* seq, size_t n, double* re, double* im)
{
    return guarded([&] {
        require(seq, re, im);
        if (n >= seq->value.entries.size())
            throw InvalidArgument("sequence index out of range");
        *re = seq->value[n].real();
        *im = seq->value[n].imag();
    });
}

ut_status ut_eval_on_sequence(const ut_family* family, const ut_sequence* seq, const ut_eval_config* cfg,
                              double* out_re, double* out_im)
{
    return guarded([&] {
        require(family, seq, out_re, out_im);
        const complex v = eval_on_sequence(family->value, seq->value, config_of(cfg));
        *out_re = v.real();
        *out_im = v.imag();
    });
}

ut_status ut_napier_term(double x, int n, double* out)
{
    return guarded([&] {
        require(out);
        *out = napier_term(x, n);
    });
}

ut_status ut_j0_term(double x, int n, double* out)
{
    return guarded([&] {
        require(out);
        *out = j0_term(x, n);
    });
}

ut_status ut_phf_roots_average(double x_re, double x_im, double y_re, double y_im, int n, double* out_re,
                               double* out_im)
{
    return guarded([&] {
        require(out_re, out_im);
        const complex v = phf_roots_average(complex(x_re, x_im), complex(y_re, y_im), n);
        *out_re = v.real();
        *out_im = v.imag();
    });
}

ut_status ut_identity_residual(const char* kind, int param, double x, double y, double alpha, double beta,
                               const ut_eval_config* cfg, double* out)
{
    return guarded([&] {
        require(kind, out);
        IdentityArgs args;
        args.x = x;
        args.y = y;
        args.alpha = alpha;
        args.beta = beta;
        *out = identity_residual(kind_named(kind, param), args, config_of(cfg));
    });
}

ut_status ut_verify(const double* points, size_t n_points, const double* params, size_t n_params, double tol,
                    const ut_eval_config* cfg, ut_report** out)
{
    return guarded([&] {
        require(out);
        *out = nullptr;
        if (n_points == 0)
            throw InvalidArgument("verify needs at least one grid point");
        require(points);
        VerifyGrid grid;
        grid.points.assign(points, points + n_points);
        if (n_params > 0) {
            require(params);
            grid.params.assign(params, params + n_params);
        }
        make_handle(out, verify_identities(grid, tol, config_of(cfg)));
    });
}

void ut_report_destroy(ut_report* report) { delete report; }

size_t ut_report_size(const ut_report* report) { return report ? report->value.size() : 0; }

ut_status ut_report_entry(const ut_report* report, size_t i, char* name, size_t name_cap, double* max_residual,
                          int* evaluations, int* passed)
{
    return guarded([&] {
        require(report);
        if (i >= report->value.size())
            throw InvalidArgument("report index out of range");
        const IdentityReport& r = report->value[i];
        if (name)
            copy_string(to_string(r.kind), name, name_cap);
        if (max_residual)
            *max_residual = r.max_residual;
        if (evaluations)
            *evaluations = r.evaluations;
        if (passed)
            *passed = r.passed ? 1 : 0;
    });
}

ut_status ut_lissajous(double x_max, int steps, double* xs, double* lcs, double* lss)
{
    return guarded([&] {
        require(xs, lcs, lss);
        const auto pts = lissajous_points(x_max, steps);
        for (size_t i = 0; i < pts.size(); ++i) {
            xs[i] = pts[i].x;
            lcs[i] = pts[i].lc;
            lss[i] = pts[i].ls;
        }
    });
}

ut_status ut_sector_area(double x, int panels, double* area, double* double_area)
{
    return guarded([&] {
        require(area, double_area);
        const SectorArea a = sector_area(x, panels);
        *area = a.area;
        *double_area = a.double_area;
    });
}

ut_status ut_sector_area_circular(double x, int panels, double* area, double* double_area)
{
    return guarded([&] {
        require(area, double_area);
        auto c = [](double t) { return std::cos(t); };
        auto s = [](double t) { return std::sin(t); };
        auto dc = [](double t) { return -std::sin(t); };
        const SectorArea a = sector_area_of(c, dc, s, c, x, panels);
        *area = a.area;
        *double_area = a.double_area;
    });
}

ut_status ut_density_create(ut_density_fn fn, void* user, double decay_rate, double support_max, ut_density** out)
{
    return guarded([&] {
        require(out);
        *out = nullptr;
        SpectralDensity d;
        if (fn)
            d.continuous = [fn, user](double t) { return fn(t, user); };
        d.decay_rate = decay_rate;
        d.support_max = support_max;
        d.validate();
        make_handle(out, std::move(d));
    });
}

ut_status ut_density_add_atom(ut_density* density, double location, double weight)
{
    return guarded([&] {
        require(density);
        SpectralDensity next = density->value;
        next.atoms.push_back({location, weight});
        next.validate();
        density->value = std::move(next);
    });
}

void ut_density_destroy(ut_density* density) { delete density; }

ut_status ut_borel_transform(const ut_family* family, double x, const ut_quadrature* quad, double* out)
{
    return guarded([&] {
        require(family, out);
        *out = borel_transform(family->value, x, quad_of(quad, QuadratureSpec::gauss_laguerre()));
    });
}

ut_status ut_g_alpha_integral(double eta, double alpha, const ut_quadrature* quad, double* out)
{
    return guarded([&] {
        require(out);
        *out = quad ? g_alpha_integral(eta, alpha, quad_of(quad, {})) : g_alpha_integral(eta, alpha);
    });
}

ut_status ut_laguerre_heat_closed(double x, double tau, double* out)
{
    return guarded([&] {
        require(out);
        *out = laguerre_heat_closed(x, tau);
    });
}

ut_status ut_heat_spectral(const ut_density* density, const ut_family* eigenfamily, double x, double tau,
                           const ut_quadrature* quad, double* out)
{
    return guarded([&] {
        require(density, eigenfamily, out);
        *out = heat_spectral(density->value, eigenfamily->value, x, tau,
                             quad_of(quad, QuadratureSpec::gauss_laguerre()));
    });
}

ut_status ut_ll_heat_umbral(const double* coeffs, size_t n, double x, double tau, int n_max,
                            const ut_eval_config* cfg, double* out)
{
    return guarded([&] {
        require(coeffs, out);
        *out = ll_heat_umbral(std::span<const double>(coeffs, n), x, tau, n_max, config_of(cfg));
    });
}

ut_status ut_airy_heat_spectral(const ut_density* density, double alpha, double x, double t,
                                const ut_quadrature* quad, double* out)
{
    return guarded([&] {
        require(density, out);
        *out = airy_heat_spectral(density->value, alpha, x, t, quad_of(quad, QuadratureSpec::gauss_laguerre()));
    });
}

ut_status ut_airy_heat_coefficients(const ut_density* density, double alpha, double t, int blocks,
                                    const ut_quadrature* quad, double* out)
{
    return guarded([&] {
        require(density, out);
        const auto c = airy_heat_coefficients(density->value, alpha, t, blocks,
                                              quad_of(quad, QuadratureSpec::gauss_laguerre()));
        std::copy(c.begin(), c.end(), out);
    });
}

ut_status ut_heat_power_series(const double* coeffs, size_t n, const char* op, double alpha, double beta, double x,
                               double tau, double* out)
{
    return guarded([&] {
        require(coeffs, op, out);
        *out = heat_power_series(std::span<const double>(coeffs, n), op_named(op, alpha, beta), x, tau);
    });
}

} // extern "C"
