#include "cwave/gg_method.hpp"

#include <cmath>
#include <sstream>

#include "cwave/errors.hpp"

namespace cwave {

namespace {

bool is_pole(double denominator, double C1, double C2) {
    return std::abs(denominator) < 1e-12 * (std::abs(C1) + std::abs(C2));
}

// Half the wavenumber of the hyperbolic functions: sqrt(2 c1 / gamma) / 2.
double half_wavenumber(const CubicODE& cubic, double gamma) {
    return 0.5 * std::sqrt(2.0 * cubic.c1 / gamma);
}

double amplitude(const GGSolution& sol, const CubicODE& cubic) {
    return sol.branch * std::sqrt(-cubic.c1 / cubic.c2);
}

[[noreturn]] void throw_pole(double xi) {
    std::ostringstream os;
    os << "singular profile has a pole at xi* = " << xi;
    throw Error(ErrorCode::PoleAtPoint, os.str(), xi);
}

}  // namespace

double g_over_g(double lambda, double mu, double C1, double C2, double xi) {
    const double Delta = lambda * lambda - 4.0 * mu;
    if (!(Delta > 0.0)) {
        std::ostringstream os;
        os << "lambda^2 - 4 mu = " << Delta << " is not positive; only the hyperbolic branch is supported";
        throw Error(ErrorCode::NegativeDiscriminant, os.str());
    }
    const double root = std::sqrt(Delta);
    const double arg = 0.5 * root * xi;
    const double ch = std::cosh(arg);
    const double sh = std::sinh(arg);
    const double den = C1 * sh + C2 * ch;
    // Compare against the cosh-scaled denominator so large |xi| does not hide a zero.
    if (is_pole(den / ch, C1, C2)) {
        std::ostringstream os;
        os << "C1 sinh + C2 cosh vanishes at xi = " << xi;
        throw Error(ErrorCode::PoleAtXi, os.str(), xi);
    }
    // Ratio written with tanh to stay finite for large |xi|.
    const double th = std::tanh(arg);
    return -0.5 * lambda + 0.5 * root * (C1 + C2 * th) / (C1 * th + C2);
}

GGSolution solve_ansatz(const CubicODE& cubic, double gamma, GGCase gg_case, int branch,
                        double C1, double C2) {
    if (branch != 1 && branch != -1) {
        throw Error(ErrorCode::InvalidArgument, "branch must be +1 or -1");
    }
    if (gamma == 0.0) {
        throw Error(ErrorCode::Inadmissible, "gamma must be nonzero");
    }
    const double a1_sq = -2.0 * gamma / cubic.c2;
    const double delta_val = 2.0 * cubic.c1 / gamma;
    if (!(a1_sq > 0.0)) {
        std::ostringstream os;
        os << "-2 gamma / c2 > 0 violated (value " << a1_sq << "): gamma and c2 must have opposite signs";
        throw Error(ErrorCode::Inadmissible, os.str());
    }
    if (!(delta_val > 0.0)) {
        std::ostringstream os;
        os << "2 c1 / gamma > 0 violated (value " << delta_val << "): gamma and c1 must have the same sign";
        throw Error(ErrorCode::Inadmissible, os.str());
    }
    if (C1 == C2 || C1 == -C2) {
        throw Error(ErrorCode::Inadmissible, "C1 != +-C2 violated: the profile degenerates to a constant");
    }

    GGSolution sol;
    sol.gg_case = gg_case;
    sol.branch = branch;
    sol.C1 = C1;
    sol.C2 = C2;
    sol.a1 = branch * std::sqrt(a1_sq);
    switch (gg_case) {
        case GGCase::Case1:
            sol.mu = 0.0;
            sol.lambda = std::sqrt(delta_val);
            break;
        case GGCase::Case2:
            sol.mu = 0.0;
            sol.lambda = -std::sqrt(delta_val);
            break;
        case GGCase::Case3:
            sol.lambda = 0.0;
            sol.mu = -cubic.c1 / (2.0 * gamma);
            break;
    }
    sol.a0 = 0.5 * sol.lambda * sol.a1;
    sol.Delta = sol.lambda * sol.lambda - 4.0 * sol.mu;
    sol.constraint_residual = constraint_residual(sol, cubic, gamma);

    const double scale = std::abs(cubic.c1) + std::abs(cubic.c2) + std::abs(gamma) + 1.0;
    if (std::abs(sol.constraint_residual) > 1e-12 * scale) {
        std::ostringstream os;
        os << "zeroth-order constraint not satisfied: residual " << sol.constraint_residual
           << " (equals c3); the profile is not an exact solution";
        sol.warning = os.str();
    }
    return sol;
}

double constraint_residual(const GGSolution& sol, const CubicODE& cubic, double gamma) {
    return gamma * sol.a1 * sol.lambda * sol.mu + cubic.c1 * sol.a0 +
           cubic.c2 * sol.a0 * sol.a0 * sol.a0 + cubic.c3;
}

AnsatzResiduals ansatz_residuals(const GGSolution& sol, const CubicODE& cubic, double gamma) {
    const double a0 = sol.a0, a1 = sol.a1, l = sol.lambda, m = sol.mu;
    AnsatzResiduals r;
    r.order0 = constraint_residual(sol, cubic, gamma);
    r.order1 = gamma * a1 * l * l + 2.0 * gamma * a1 * m + cubic.c1 * a1 +
               3.0 * cubic.c2 * a0 * a0 * a1;
    r.order2 = 3.0 * a1 * l * gamma + 3.0 * a0 * a1 * a1 * cubic.c2;
    r.order3 = 2.0 * gamma * a1 + cubic.c2 * a1 * a1 * a1;
    return r;
}

double eval_case_solution(const GGSolution& sol, const CubicODE& cubic, double gamma,
                          double c, double x, double t) {
    const double xi = x - c * t;
    const double th = std::tanh(half_wavenumber(cubic, gamma) * xi);
    const double C1 = sol.C1, C2 = sol.C2;
    const double den = C1 * th + C2;
    if (is_pole(den, C1, C2)) {
        throw_pole(xi);
    }
    double bracket = 0.0;
    switch (sol.gg_case) {
        case GGCase::Case1:
            bracket = 1.0 + (C1 - C2) * (1.0 - th) / den;
            break;
        case GGCase::Case2:
        case GGCase::Case3:
            // lambda cancels against a0 = lambda a1 / 2, so Case 2 collapses
            // onto the same profile as Cases 1 and 3.
            bracket = (C1 + C2 * th) / den;
            break;
    }
    return amplitude(sol, cubic) * bracket + cubic.delta;
}

double eval_ansatz_solution(const GGSolution& sol, const CubicODE& cubic, double xi) {
    double ratio = 0.0;
    try {
        ratio = g_over_g(sol.lambda, sol.mu, sol.C1, sol.C2, xi);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::PoleAtXi) {
            throw_pole(xi);
        }
        throw;
    }
    return sol.a0 + sol.a1 * ratio + cubic.delta;
}

double eval_case_as_printed(const GGSolution& sol, const CubicODE& cubic, double gamma,
                            double c, double x, double t) {
    const double xi = x - c * t;
    const double th = std::tanh(half_wavenumber(cubic, gamma) * xi);
    const double C1 = sol.C1, C2 = sol.C2;
    double num = 0.0, den = 0.0, lead = 0.0;
    switch (sol.gg_case) {
        case GGCase::Case1:
            lead = 1.0;
            num = (C1 - C2) * (1.0 - th);
            den = C1 * th + C2;
            break;
        case GGCase::Case2:
            lead = 1.0;
            num = (C1 + C2) * (1.0 - th);
            den = C2 - C1 * th;
            break;
        case GGCase::Case3:
            num = C1 + C2 * th;
            den = C1 * th + C2;
            break;
    }
    if (is_pole(den, C1, C2)) {
        throw_pole(xi);
    }
    return amplitude(sol, cubic) * (lead + num / den) + cubic.B / (3.0 * cubic.C);
}

std::optional<double> pole_location(const GGSolution& sol, double gamma, const CubicODE& cubic) {
    if (sol.C1 == 0.0) {
        return std::nullopt;
    }
    const double target = -sol.C2 / sol.C1;
    if (!(std::abs(target) < 1.0)) {
        return std::nullopt;
    }
    return std::atanh(target) / half_wavenumber(cubic, gamma);
}

}  // namespace cwave
