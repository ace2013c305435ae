#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cwave/errors.hpp"
#include "cwave/gg_method.hpp"
#include "cwave/verify.hpp"

namespace {

using cwave::CubicODE;
using cwave::GGCase;
using cwave::GGSolution;

const double kSqrt2 = std::sqrt(2.0);

CubicODE kink_cubic() { return cwave::make_cubic(1.0, 0.0, -1.0); }

cwave::ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const cwave::Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected cwave::Error";
    return cwave::ErrorCode::InvalidArgument;
}

TEST(GOverG, Examples) {
    EXPECT_EQ(cwave::g_over_g(0.0, -1.0, 0.0, 1.0, 0.0), 0.0);
    EXPECT_EQ(cwave::g_over_g(2.0, 0.0, 0.0, 1.0, 0.0), -1.0);
    EXPECT_EQ(code_of([] { cwave::g_over_g(0.0, -1.0, 1.0, 0.0, 0.0); }), cwave::ErrorCode::PoleAtXi);
    EXPECT_EQ(code_of([] { cwave::g_over_g(0.0, 1.0, 0.0, 1.0, 0.3); }),
              cwave::ErrorCode::NegativeDiscriminant);
}

TEST(GOverG, SolvesRiccati) {
    // (G'/G)' = -(G'/G)^2 - lambda (G'/G) - mu, checked by central differences.
    const double lambda = 0.7, mu = -0.4, C1 = 0.3, C2 = 1.1;
    for (double xi : {-2.0, -0.5, 0.4, 1.7}) {
        const double h = 1e-4;
        const double d = (cwave::g_over_g(lambda, mu, C1, C2, xi + h) -
                          cwave::g_over_g(lambda, mu, C1, C2, xi - h)) / (2.0 * h);
        const double r = cwave::g_over_g(lambda, mu, C1, C2, xi);
        EXPECT_NEAR(d, -r * r - lambda * r - mu, 1e-7);
    }
}

TEST(SolveAnsatz, Case1) {
    const auto sol = cwave::solve_ansatz(kink_cubic(), 1.0, GGCase::Case1, 1, 0.0, 1.0);
    EXPECT_NEAR(sol.a1, kSqrt2, 1e-15);
    EXPECT_NEAR(sol.lambda, kSqrt2, 1e-15);
    EXPECT_EQ(sol.mu, 0.0);
    EXPECT_NEAR(sol.a0, 1.0, 1e-15);
    EXPECT_NEAR(sol.Delta, 2.0, 1e-15);
    EXPECT_TRUE(sol.warning.empty());
    const auto r = cwave::ansatz_residuals(sol, kink_cubic(), 1.0);
    EXPECT_NEAR(r.order0, 0.0, 1e-12);
    EXPECT_NEAR(r.order1, 0.0, 1e-12);
    EXPECT_NEAR(r.order2, 0.0, 1e-12);
    EXPECT_NEAR(r.order3, 0.0, 1e-12);
}

TEST(SolveAnsatz, Case3) {
    const auto sol = cwave::solve_ansatz(kink_cubic(), 1.0, GGCase::Case3, 1, 0.0, 1.0);
    EXPECT_NEAR(sol.a1, kSqrt2, 1e-15);
    EXPECT_EQ(sol.lambda, 0.0);
    EXPECT_NEAR(sol.mu, -0.5, 1e-15);
    EXPECT_EQ(sol.a0, 0.0);
}

TEST(SolveAnsatz, Inadmissible) {
    const auto q = cwave::make_cubic(1.0, 0.0, 1.0);  // c1 = 1, c2 = 1
    for (auto c : {GGCase::Case1, GGCase::Case2, GGCase::Case3}) {
        try {
            cwave::solve_ansatz(q, 1.0, c, 1, 0.0, 1.0);
            FAIL();
        } catch (const cwave::Error& e) {
            EXPECT_EQ(e.code(), cwave::ErrorCode::Inadmissible);
            EXPECT_NE(std::string(e.what()).find("-2 gamma / c2 > 0"), std::string::npos);
        }
    }
    // gamma and c1 of opposite sign
    try {
        cwave::solve_ansatz(cwave::make_cubic(-1.0, 0.0, -1.0), 1.0, GGCase::Case1, 1, 0.0, 1.0);
        FAIL();
    } catch (const cwave::Error& e) {
        EXPECT_NE(std::string(e.what()).find("2 c1 / gamma > 0"), std::string::npos);
    }
    EXPECT_EQ(code_of([] { cwave::solve_ansatz(kink_cubic(), 1.0, GGCase::Case1, 1, 1.0, 1.0); }),
              cwave::ErrorCode::Inadmissible);
    EXPECT_EQ(code_of([] { cwave::solve_ansatz(kink_cubic(), 1.0, GGCase::Case1, 1, 2.0, -2.0); }),
              cwave::ErrorCode::Inadmissible);
}

TEST(ConstraintResidual, Examples) {
    // c3 = 0 gives zero in all cases
    for (auto c : {GGCase::Case1, GGCase::Case2, GGCase::Case3}) {
        const auto sol = cwave::solve_ansatz(kink_cubic(), 1.0, c, -1, 0.0, 1.0);
        EXPECT_NEAR(cwave::constraint_residual(sol, kink_cubic(), 1.0), 0.0, 1e-12);
    }
    // c3 != 0 is reported, not enforced
    const auto q = cwave::make_cubic(1.0, 0.3, -1.0);
    ASSERT_GT(q.c3, 0.0);
    const auto sol = cwave::solve_ansatz(q, 1.0, GGCase::Case1, 1, 0.0, 1.0);
    EXPECT_NEAR(sol.constraint_residual, q.c3, 1e-12);
    EXPECT_FALSE(sol.warning.empty());
    const auto sol3 = cwave::solve_ansatz(q, 1.0, GGCase::Case3, 1, 0.0, 1.0);
    EXPECT_EQ(sol3.constraint_residual, q.c3);
}

TEST(SolveAnsatzProperty, RandomAdmissibleCoefficients) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> mag(0.05, 5.0);
    std::bernoulli_distribution coin;
    for (int i = 0; i < 1000; ++i) {
        const double gamma = (coin(rng) ? 1.0 : -1.0) * mag(rng);
        const double sgn = gamma > 0 ? 1.0 : -1.0;
        CubicODE q;
        q.c1 = sgn * mag(rng);
        q.c2 = -sgn * mag(rng);
        q.c3 = 0.0;
        for (auto c : {GGCase::Case1, GGCase::Case2, GGCase::Case3}) {
            const auto sol = cwave::solve_ansatz(q, gamma, c, coin(rng) ? 1 : -1, 0.0, 1.0);
            const auto r = cwave::ansatz_residuals(sol, q, gamma);
            const double scale = std::abs(gamma * sol.a1) * (1.0 + sol.lambda * sol.lambda + std::abs(sol.mu)) +
                                 std::abs(q.c1 * sol.a1) + std::abs(q.c2 * sol.a1 * sol.a1 * sol.a1) + 1.0;
            EXPECT_LE(std::abs(r.order0), 1e-12 * scale);
            EXPECT_LE(std::abs(r.order1), 1e-12 * scale);
            EXPECT_LE(std::abs(r.order2), 1e-12 * scale);
            EXPECT_LE(std::abs(r.order3), 1e-12 * scale);
            EXPECT_NEAR(sol.a1 * sol.a1, -2.0 * gamma / q.c2, 1e-12 * std::abs(2.0 * gamma / q.c2));
            EXPECT_NEAR(sol.Delta, 2.0 * q.c1 / gamma, 1e-12 * std::abs(2.0 * q.c1 / gamma));
        }
    }
}

TEST(EvalCaseSolution, KinkIsTanh) {
    const auto q = kink_cubic();
    const auto sol = cwave::solve_ansatz(q, 1.0, GGCase::Case1, 1, 0.0, 1.0);
    EXPECT_EQ(cwave::eval_case_solution(sol, q, 1.0, -1.0, 0.0, 0.0), 0.0);
    for (double x : {-3.0, -0.4, 0.9, 4.0}) {
        for (double t : {0.0, 1.5}) {
            EXPECT_NEAR(cwave::eval_case_solution(sol, q, 1.0, -1.0, x, t), std::tanh((x + t) / kSqrt2), 1e-14);
        }
    }
}

TEST(EvalCaseSolution, SingularIsCothWithPole) {
    const auto q = kink_cubic();
    const auto sol = cwave::solve_ansatz(q, 1.0, GGCase::Case1, 1, 1.0, 0.0);
    EXPECT_NEAR(cwave::eval_case_solution(sol, q, 1.0, -1.0, 0.7, 0.2), 1.0 / std::tanh(0.9 / kSqrt2), 1e-13);
    try {
        cwave::eval_case_solution(sol, q, 1.0, -1.0, -0.5, 0.5);
        FAIL();
    } catch (const cwave::Error& e) {
        EXPECT_EQ(e.code(), cwave::ErrorCode::PoleAtPoint);
        ASSERT_TRUE(e.location().has_value());
        EXPECT_EQ(*e.location(), 0.0);
    }
    const auto pole = cwave::pole_location(sol, 1.0, q);
    ASSERT_TRUE(pole.has_value());
    EXPECT_EQ(*pole, 0.0);
    EXPECT_FALSE(cwave::pole_location(cwave::solve_ansatz(q, 1.0, GGCase::Case1, 1, 0.0, 1.0), 1.0, q));
}

TEST(EvalCaseSolution, PoleLocationOffCenter) {
    const auto q = kink_cubic();
    const auto sol = cwave::solve_ansatz(q, 1.0, GGCase::Case3, 1, 2.0, 1.0);
    const auto pole = cwave::pole_location(sol, 1.0, q);
    ASSERT_TRUE(pole.has_value());
    EXPECT_NEAR(*pole, std::atanh(-0.5) * kSqrt2, 1e-14);
    EXPECT_THROW(cwave::eval_case_solution(sol, q, 1.0, 0.0, *pole, 0.0), cwave::Error);
}

TEST(EvalCaseSolution, AllCasesAgreeWithAnsatzRoute) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> cc(-2.0, 2.0), xs(-6.0, 6.0);
    const auto q = cwave::make_cubic(-2.0, 3.0, -1.0);  // 2B^2 = 9AC, c1 = 1, c2 = -1
    ASSERT_NEAR(q.c3, 0.0, 1e-15);
    for (int i = 0; i < 200; ++i) {
        const double C1 = cc(rng), C2 = cc(rng);
        if (std::abs(std::abs(C1) - std::abs(C2)) < 1e-3) continue;
        for (auto c : {GGCase::Case1, GGCase::Case2, GGCase::Case3}) {
            const auto sol = cwave::solve_ansatz(q, 1.5, c, i % 2 ? 1 : -1, C1, C2);
            const double xi = xs(rng);
            if (auto p = cwave::pole_location(sol, 1.5, q); p && std::abs(*p - xi) < 0.05) continue;
            const double closed = cwave::eval_case_solution(sol, q, 1.5, 0.0, xi, 0.0);
            const double ansatz = cwave::eval_ansatz_solution(sol, q, xi);
            EXPECT_NEAR(closed, ansatz, 1e-10 * std::max(1.0, std::abs(closed)));
        }
    }
}

TEST(EvalCaseSolution, Case3MatchesCase1Kink) {
    const auto q = kink_cubic();
    const auto s1 = cwave::solve_ansatz(q, 1.0, GGCase::Case1, 1, 0.0, 1.0);
    const auto s3 = cwave::solve_ansatz(q, 1.0, GGCase::Case3, 1, 0.0, 1.0);
    for (double x = -10.0; x <= 10.0; x += 0.37) {
        EXPECT_NEAR(cwave::eval_case_solution(s1, q, 1.0, -1.0, x, 0.8),
                    cwave::eval_case_solution(s3, q, 1.0, -1.0, x, 0.8), 1e-10);
    }
}

TEST(EvalCaseSolution, Case1AndCase2Coincide) {
    const auto q = kink_cubic();
    for (auto [C1, C2] : {std::pair{1.0, 2.0}, std::pair{0.0, 1.0}, std::pair{3.0, -1.0}}) {
        const auto s1 = cwave::solve_ansatz(q, 1.0, GGCase::Case1, 1, C1, C2);
        const auto s2 = cwave::solve_ansatz(q, 1.0, GGCase::Case2, 1, C1, C2);
        for (double xi : {-4.0, -1.3, 0.6, 2.2}) {
            EXPECT_NEAR(cwave::eval_case_solution(s1, q, 1.0, 0.0, xi, 0.0),
                        cwave::eval_case_solution(s2, q, 1.0, 0.0, xi, 0.0), 1e-12);
        }
    }
}

TEST(EvalCaseSolution, DependsOnlyOnTravelingCoordinate) {
    const auto q = kink_cubic();
    const auto sol = cwave::solve_ansatz(q, 1.0, GGCase::Case1, 1, 0.0, 1.0);
    const double c = -1.0;
    for (double x : {-2.0, 0.5, 3.0}) {
        for (double d : {0.25, 1.0, -0.75}) {
            EXPECT_EQ(cwave::eval_case_solution(sol, q, 1.0, c, x + c * d, 1.0 + d),
                      cwave::eval_case_solution(sol, q, 1.0, c, x, 1.0));
        }
    }
}

TEST(EvalCaseSolution, ResidualOfShiftedCubic) {
    cwave::GridSpec grid;
    grid.nx = 2001;
    // c3 = 0 with B != 0: the shifted profile solves the original cubic ODE.
    const auto q = cwave::make_cubic(-2.0, 3.0, -1.0);
    const auto sol = cwave::solve_ansatz(q, 1.0, GGCase::Case1, 1, 0.0, 1.0);
    const auto profile = [&](double xi) { return cwave::eval_case_solution(sol, q, 1.0, 0.0, xi, 0.0); };
    const auto ok = cwave::ode_residual(profile, q, 1.0, cwave::EquationId::ODE15, grid);
    EXPECT_LT(ok.max_abs_residual, 1e-8);

    // The literal +B/(3C) offset is off by 2B/(3C) and fails.
    const auto literal = [&](double xi) { return cwave::eval_case_as_printed(sol, q, 1.0, 0.0, xi, 0.0); };
    const auto bad = cwave::ode_residual(literal, q, 1.0, cwave::EquationId::ODE15, grid);
    EXPECT_GT(bad.max_abs_residual, 1e-2);
}

TEST(EvalCaseSolution, LiteralCase2IsNotASolution) {
    const auto q = kink_cubic();
    const auto sol = cwave::solve_ansatz(q, 1.0, GGCase::Case2, 1, 0.0, 1.0);
    cwave::GridSpec grid;
    const auto literal = [&](double xi) { return cwave::eval_case_as_printed(sol, q, 1.0, 0.0, xi, 0.0); };
    EXPECT_GT(cwave::ode_residual(literal, q, 1.0, cwave::EquationId::ODE17, grid).max_abs_residual, 1.0);
    const auto fixed = [&](double xi) { return cwave::eval_case_solution(sol, q, 1.0, 0.0, xi, 0.0); };
    EXPECT_LT(cwave::ode_residual(fixed, q, 1.0, cwave::EquationId::ODE17, grid).max_abs_residual, 1e-8);
    // Literal Cases 1 and 3 coincide with the library forms when B = 0.
    for (auto c : {GGCase::Case1, GGCase::Case3}) {
        const auto s = cwave::solve_ansatz(q, 1.0, c, 1, 0.5, 1.0);
        EXPECT_NEAR(cwave::eval_case_as_printed(s, q, 1.0, 0.0, 0.7, 0.0),
                    cwave::eval_case_solution(s, q, 1.0, 0.0, 0.7, 0.0), 1e-14);
    }
}

TEST(EvalCaseSolution, NonzeroC3LeavesResidual) {
    const auto q = cwave::make_cubic(1.0, 0.3, -1.0);
    const auto sol = cwave::solve_ansatz(q, 1.0, GGCase::Case1, 1, 0.0, 1.0);
    const auto w = [&](double xi) { return cwave::eval_case_solution(sol, q, 1.0, 0.0, xi, 0.0) - q.delta; };
    cwave::GridSpec grid;
    const auto r = cwave::ode_residual(w, q, 1.0, cwave::EquationId::ODE17, grid);
    EXPECT_NEAR(r.max_abs_residual, q.c3, 1e-6);
}

}  // namespace
