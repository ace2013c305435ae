#pragma once

namespace cwave {

/// Coefficients of the coupled system
///   u_t + alpha v^2 v_x + beta u^2 u_x + eta u u_x + gamma u_xxx = 0
///   v_t + sigma (u v)_x + epsilon v v_x = 0
/// together with the traveling-wave speed c (xi = x - c t).
struct PhysicalSystem {
    double alpha = 0.0;
    double beta = 0.0;
    double eta = 0.0;
    double gamma = 0.0;
    double sigma = 0.0;
    double epsilon = 0.0;
    double c = 0.0;
};

/// gamma u'' + A u + B u^2 + C u^3 = 0 and its depressed form
/// gamma w'' + c1 w + c2 w^3 + c3 = 0, where u = w + delta.
struct CubicODE {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double delta = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

/// Builds the depressed coefficients from (A, B, C). Throws DegenerateCubic
/// when |C| < 1e-12 * max(|A|, |B|, 1).
CubicODE make_cubic(double A, double B, double C);

/// Reduces the PDE pair to the cubic traveling-wave ODE (integration
/// constants fixed to zero). Throws EpsilonZero or DegenerateCubic.
CubicODE reduce(const PhysicalSystem& phys);

/// v = 2 (c - sigma u) / epsilon.
double v_from_u(const PhysicalSystem& phys, double u);

/// Residual of -c + sigma u + (epsilon/2) v, zero for v = v_from_u(u).
double v_relation_residual(const PhysicalSystem& phys, double u, double v);

/// Maps the shifted variable back: u = w + delta.
inline double u_from_w(const CubicODE& cubic, double w) { return w + cubic.delta; }

}  // namespace cwave
