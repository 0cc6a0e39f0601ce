#pragma once

#include <functional>
#include <string>
#include <vector>

#include "umbratrig/umbral.hpp"

namespace umbratrig {

double lc(double x);
double ls(double x);
double lch(double x);
double lsh(double x);
double lc_alpha(double x, double alpha);
double ls_alpha(double x, double alpha);
double lc_ab(double x, double alpha, double beta);
double ls_ab(double x, double alpha, double beta);
double phf_e(double x, int k, int m);
double phf_ch(double x);
double phf_sh(double x);
double g_alpha(double x, double alpha);

enum class IdentityTag {
    Euler,
    AdditionCos,
    AdditionSin,
    AdditionCosAlpha,
    AdditionSinAlpha,
    AdditionCosAB,
    AdditionSinAB,
    AdditionChPHF,
    AdditionShPHF,
    SemigroupL,
    SemigroupAlpha,
    SemigroupPHF,
    Duplication,
    DeMoivre,
    EulerDecompPHF,
    PythagorasDefect,
};

struct IdentityKind {
    IdentityTag tag = IdentityTag::Euler;
    /// De Moivre power n, or the PHF order m for EulerDecompPHF.
    int param = 0;

    void validate() const;
};

std::string to_string(const IdentityKind& kind);

struct IdentityArgs {
    double x = 0.0;
    double y = 0.0;
    double alpha = 1.0;
    double beta = 1.0;
    /// Order of the umbral sequences used for the composed side.
    int order = 64;
};

/// |LHS - RHS| of the identity; PythagorasDefect returns lc(x)^2 + ls(x)^2 - 1 signed.
double identity_residual(const IdentityKind& kind, const IdentityArgs& args, const EvalConfig& cfg = {});

/// Every identity kind covered by the verification sweep (De Moivre n = 1..5,
/// Euler decomposition m = 2..5), PythagorasDefect excluded.
std::vector<IdentityKind> identity_catalog();

struct IdentityReport {
    IdentityKind kind;
    double max_residual = 0.0;
    int evaluations = 0;
    bool passed = false;
};

struct VerifyGrid {
    std::vector<double> points;
    std::vector<double> params{0.5, 1.0, 2.0};
};

/// Sweeps every catalog identity over points x points (and params for the
/// parameterised families), then checks the Pythagorean defect is nonzero at
/// x in {0.5, 1, 2}. Reports are ordered as the catalog, defect last.
std::vector<IdentityReport> verify_identities(const VerifyGrid& grid, double tol, const EvalConfig& cfg = {});

struct LissajousPoint {
    double x;
    double lc;
    double ls;
};

std::vector<LissajousPoint> lissajous_points(double x_max, int steps);

struct SectorArea {
    double area;
    double double_area;
};

/// 1/2 int_0^x (f g' - g f') dt by composite Simpson with `panels` panels.
SectorArea sector_area_of(const std::function<double(double)>& f, const std::function<double(double)>& df,
                          const std::function<double(double)>& g, const std::function<double(double)>& dg,
                          double x, int panels);

/// Area swept in the (lc, ls) plane between parameter 0 and x.
SectorArea sector_area(double x, int panels);

} // namespace umbratrig
