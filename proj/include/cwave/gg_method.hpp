#pragma once

#include <optional>
#include <string>

#include "cwave/reduction.hpp"

namespace cwave {

enum class GGCase { Case1 = 1, Case2 = 2, Case3 = 3 };

/// Balance-number-one (G'/G)-expansion solution w = a0 + a1 (G'/G) of the
/// depressed cubic ODE, with G solving G'' + lambda G' + mu G = 0 on the
/// hyperbolic branch (Delta = lambda^2 - 4 mu > 0).
struct GGSolution {
    GGCase gg_case = GGCase::Case1;
    int branch = 1;
    double a0 = 0.0;
    double a1 = 0.0;
    double lambda = 0.0;
    double mu = 0.0;
    double Delta = 0.0;
    double C1 = 0.0;
    double C2 = 1.0;
    /// Value of the zeroth-order coefficient equation; equals c3 for every
    /// admissible solution. Nonzero means the profile does not solve the ODE.
    double constraint_residual = 0.0;
    /// Non-empty when the constraint is violated.
    std::string warning;
};

/// G'(xi)/G(xi) for the hyperbolic general solution of G'' + lambda G' + mu G = 0.
/// Throws NegativeDiscriminant for lambda^2 - 4 mu <= 0 and PoleAtXi when
/// C1 sinh + C2 cosh vanishes at xi.
double g_over_g(double lambda, double mu, double C1, double C2, double xi);

GGSolution solve_ansatz(const CubicODE& cubic, double gamma, GGCase gg_case, int branch,
                        double C1, double C2);

/// gamma a1 lambda mu + c1 a0 + c2 a0^3 + c3.
double constraint_residual(const GGSolution& sol, const CubicODE& cubic, double gamma);

/// Residuals of the coefficient equations of (G'/G)^1, (G'/G)^2 and (G'/G)^3.
struct AnsatzResiduals {
    double order0 = 0.0;
    double order1 = 0.0;
    double order2 = 0.0;
    double order3 = 0.0;
};
AnsatzResiduals ansatz_residuals(const GGSolution& sol, const CubicODE& cubic, double gamma);

/// Closed-form u(x, t) for the solution's case, shifted back to u = w + delta.
/// Throws PoleAtPoint (location = xi) at the singular-wave pole.
double eval_case_solution(const GGSolution& sol, const CubicODE& cubic, double gamma,
                          double c, double x, double t);

/// Same profile through the ansatz route a0 + a1 g_over_g(xi) + delta.
double eval_ansatz_solution(const GGSolution& sol, const CubicODE& cubic, double xi);

/// The case formulas in their original closed form, including the +B/(3C)
/// shift. Kept for adjudication by residual; the original Case 2 is not a
/// solution of the ODE.
double eval_case_as_printed(const GGSolution& sol, const CubicODE& cubic, double gamma,
                            double c, double x, double t);

/// Location xi* of the profile's pole, when the denominator C1 tanh + C2 has
/// a real zero.
std::optional<double> pole_location(const GGSolution& sol, double gamma, const CubicODE& cubic);

}  // namespace cwave
