#include "cwave/wef_method.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cwave/errors.hpp"

namespace cwave {

std::optional<int> degree_relation(int k, int r) {
    if (k < 1 || r < 1) {
        throw Error(ErrorCode::InvalidArgument, "k and r must be positive");
    }
    const int numerator = 2 * k - r;
    const int denominator = 2 * r;
    if (numerator < 0 || numerator % denominator != 0) {
        return std::nullopt;
    }
    return numerator / denominator;
}

double check_restriction(double A, double B, double C) {
    return 2.0 * B * B - 9.0 * A * C;
}

bool restriction_satisfied(double A, double B, double C) {
    const double scale = std::max({B * B, std::abs(A * C), 1.0});
    return std::abs(check_restriction(A, B, C)) <= 1e-9 * scale;
}

WEFSolution solve_wef(double A, double C, double gamma, int zeta_branch) {
    if (zeta_branch != 1 && zeta_branch != -1) {
        throw Error(ErrorCode::InvalidArgument, "zeta_branch must be +1 or -1");
    }
    if (gamma == 0.0) {
        throw Error(ErrorCode::Inadmissible, "gamma must be nonzero");
    }
    if (C == 0.0) {
        throw Error(ErrorCode::Inadmissible, "C must be nonzero");
    }
    if (A == 0.0) {
        throw Error(ErrorCode::ZeroAmplitude, "A = 0 gives tau = 0 and vanishing invariants");
    }
    const double ratio = A / (6.0 * C);
    if (!(ratio > 0.0)) {
        std::ostringstream os;
        os << "A / (6 C) = " << ratio << " is negative: A and C must have the same sign";
        throw Error(ErrorCode::ComplexZeta, os.str());
    }

    WEFSolution sol;
    sol.A = A;
    sol.C = C;
    sol.gamma = gamma;
    sol.zeta = zeta_branch * std::sqrt(ratio);
    sol.tau = A * sol.zeta / (6.0 * gamma);
    const double g3 = A * A * A / (432.0 * gamma * gamma * gamma);
    const double g2 = 2.0 * std::sqrt(A * g3 / (3.0 * gamma));
    sol.inv = weierstrass_roots(g2, g3);
    sol.restriction_residual = check_restriction(A, 0.0, C);
    return sol;
}

WEFSolution solve_wef(const CubicODE& cubic, double gamma, int zeta_branch) {
    WEFSolution sol = solve_wef(cubic.A, cubic.C, gamma, zeta_branch);
    sol.B = cubic.B;
    sol.restriction_residual = check_restriction(cubic.A, cubic.B, cubic.C);
    sol.shift = -cubic.B / (3.0 * cubic.C);
    return sol;
}

WEFResiduals wef_residuals(const WEFSolution& sol) {
    const double t = sol.tau, z = sol.zeta, A = sol.A, C = sol.C, g = sol.gamma;
    WEFResiduals r;
    r.p3 = 2.0 * g * t - 0.5 * A * z + C * z * z * z;
    r.p2 = -0.5 * A * t + 3.0 * C * t * z * z;
    r.p1 = -1.5 * g * t * sol.inv.g2 + 3.0 * C * t * t * z;
    r.p0 = -2.0 * g * t * sol.inv.g3 + C * t * t * t;
    return r;
}

double eval_wef_w(const WEFSolution& sol, WEFForm form, double xi) {
    switch (form) {
        case WEFForm::PForm: {
            if (!(sol.inv.discriminant() > 0.0)) {
                throw Error(ErrorCode::FormUnavailable, "invariants have non-positive discriminant");
            }
            try {
                return sol.tau / weierstrass_p(xi, sol.inv) + sol.zeta;
            } catch (const Error& e) {
                // tau / p is removable at the lattice points of p.
                if (e.code() == ErrorCode::PoleAtZero) {
                    return sol.zeta;
                }
                throw;
            }
        }
        case WEFForm::JEFForm:
            if (!(sol.inv.discriminant() > 0.0)) {
                throw Error(ErrorCode::FormUnavailable, "invariants have non-positive discriminant");
            }
            return sol.tau * reciprocal_weierstrass_p(xi, sol.inv) + sol.zeta;
        case WEFForm::TanhLimitAsPrinted: {
            const double th = std::tanh(xi);
            const double den = 1.0 - 2.0 / 3.0 * th * th;
            if (den == 0.0) {
                throw Error(ErrorCode::PoleAtPoint, "tanh-limit denominator vanishes", xi);
            }
            return sol.tau * th * th / den + sol.zeta;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown form");
}

double eval_wef_u(const WEFSolution& sol, WEFForm form, double xi) {
    const double w = eval_wef_w(sol, form, xi);
    if (form == WEFForm::TanhLimitAsPrinted) {
        return w + (sol.C != 0.0 ? sol.B / (3.0 * sol.C) : 0.0);
    }
    return w + sol.shift;
}

WaveValues eval_wef_profile(const WEFSolution& sol, WEFForm form, const PhysicalSystem& phys,
                            double x, double t) {
    const double u = eval_wef_u(sol, form, x - phys.c * t);
    return {u, v_from_u(phys, u)};
}

double eval_jef_as_printed(const WEFSolution& sol, double xi) {
    const double m2 = modulus_from_roots(sol.inv).m2();
    const double sn = jacobi_sn_cn_dn(xi, m2).sn;
    const double sn2 = sn * sn;
    return sol.tau * sn2 / (1.0 - (1.0 + m2) * sn2 / 3.0) + sol.zeta;
}

}  // namespace cwave
