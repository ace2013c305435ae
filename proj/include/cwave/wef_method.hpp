#pragma once

#include <optional>

#include "cwave/elliptic.hpp"
#include "cwave/reduction.hpp"

namespace cwave {

/// Weierstrass-form solution w = tau / p(xi) + zeta of
/// gamma w'' - (A/2) w + C w^3 = 0, valid for the restricted cubic 2 B^2 = 9 A C.
struct WEFSolution {
    double tau = 0.0;
    double zeta = 0.0;
    WeierstrassInvariants inv;
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double gamma = 0.0;
    /// 2 B^2 - 9 A C; zero when the restriction holds.
    double restriction_residual = 0.0;
    /// Offset applied when mapping back to u: u = w + shift, shift = -B / (3 C).
    double shift = 0.0;
};

/// Ansatz bookkeeping for phi = gamma_coeff * Q^(2s) + mu_offset with
/// Q = 1 / p. The coefficient names are local to the ansatz and unrelated to the
/// PDE coefficients.
struct DegreeRelation {
    int k = 1;
    int r = 2;
    int s = 0;
    double gamma_coeff = 0.0;
    double mu_offset = 0.0;
};

enum class WEFForm { PForm, JEFForm, TanhLimitAsPrinted };

/// s = (2k - r) / (2r) when it is a non-negative integer. Necessary, not
/// sufficient, for an ansatz of the RWEF type.
std::optional<int> degree_relation(int k, int r);

/// 2 B^2 - 9 A C.
double check_restriction(double A, double B, double C);

/// True when |2 B^2 - 9 A C| <= 1e-9 max(B^2, |A C|, 1).
bool restriction_satisfied(double A, double B, double C);

/// zeta = +-sqrt(A / (6 C)), tau = A zeta / (6 gamma), g3 = A^3 / (432 gamma^3),
/// g2 = 2 sqrt(A g3 / (3 gamma)). Throws ZeroAmplitude (A == 0), ComplexZeta
/// (A / C < 0), InvalidArgument (gamma == 0 or C == 0).
WEFSolution solve_wef(double A, double C, double gamma, int zeta_branch);

/// Same, additionally recording B: restriction residual and the u-shift.
WEFSolution solve_wef(const CubicODE& cubic, double gamma, int zeta_branch);

/// Residuals of the coefficient equations of p^3, p^2, p^1, p^0.
struct WEFResiduals {
    double p3 = 0.0;
    double p2 = 0.0;
    double p1 = 0.0;
    double p0 = 0.0;
};
WEFResiduals wef_residuals(const WEFSolution& sol);

/// Profile of the restricted ODE (no shift) in the chosen form.
double eval_wef_w(const WEFSolution& sol, WEFForm form, double xi);

/// u in the chosen form; TanhLimitAsPrinted uses the literal +B/(3C) offset.
double eval_wef_u(const WEFSolution& sol, WEFForm form, double xi);

struct WaveValues {
    double u;
    double v;
};

/// (u, v) at (x, t), with v = 2 (c - sigma u) / epsilon.
WaveValues eval_wef_profile(const WEFSolution& sol, WEFForm form, const PhysicalSystem& phys,
                            double x, double t);

/// tau sn^2(xi) / (1 - (1 + m^2) sn^2(xi) / 3) + zeta with unscaled argument;
/// agrees with the JEF form only when e1 - e3 = 1.
double eval_jef_as_printed(const WEFSolution& sol, double xi);

}  // namespace cwave
