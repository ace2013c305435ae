#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cwave/errors.hpp"
#include "cwave/verify.hpp"
#include "cwave/wef_method.hpp"

namespace {

using cwave::WEFForm;

const double kSqrt5 = std::sqrt(5.0);

cwave::ResidualReport ode43(const cwave::WEFSolution& sol, WEFForm form, cwave::GridSpec grid = {}) {
    cwave::CubicODE q;
    q.A = sol.A;
    q.C = sol.C;
    return cwave::ode_residual([&](double xi) { return cwave::eval_wef_w(sol, form, xi); }, q, sol.gamma,
                               cwave::EquationId::ODE43, grid);
}

TEST(DegreeRelation, Examples) {
    EXPECT_EQ(cwave::degree_relation(1, 2), 0);
    EXPECT_EQ(cwave::degree_relation(2, 4), 0);
    EXPECT_FALSE(cwave::degree_relation(2, 1).has_value());
    EXPECT_EQ(cwave::degree_relation(5, 2), 2);  // 2k - r = 8 = 2 r s
    EXPECT_FALSE(cwave::degree_relation(1, 3).has_value());
    EXPECT_THROW(cwave::degree_relation(0, 2), cwave::Error);
    for (int k = 1; k < 12; ++k) {
        for (int r = 1; r < 12; ++r) {
            if (auto s = cwave::degree_relation(k, r)) {
                cwave::DegreeRelation rel{k, r, *s, 0.0, 0.0};
                EXPECT_EQ(2 * rel.k - rel.r, 2 * rel.r * rel.s);
            }
        }
    }
}

TEST(Restriction, Examples) {
    EXPECT_NEAR(cwave::check_restriction(6.0, std::sqrt(108.0), 4.0), 0.0, 1e-12);
    EXPECT_TRUE(cwave::restriction_satisfied(6.0, std::sqrt(108.0), 4.0));
    EXPECT_EQ(cwave::check_restriction(1.0, 0.0, 1.0), -9.0);
    EXPECT_FALSE(cwave::restriction_satisfied(1.0, 0.0, 1.0));
    EXPECT_EQ(cwave::check_restriction(0.0, 0.0, 3.7), 0.0);
}

TEST(SolveWef, WorkedInstance) {
    const auto sol = cwave::solve_wef(6.0, 4.0, 1.0, 1);
    EXPECT_NEAR(sol.zeta, 0.5, 1e-15);
    EXPECT_NEAR(sol.tau, 0.5, 1e-15);
    EXPECT_NEAR(sol.inv.g3, 0.5, 1e-15);
    EXPECT_NEAR(sol.inv.g2, 2.0, 1e-15);
    EXPECT_NEAR(sol.inv.discriminant(), 1.25, 1e-13);
    EXPECT_NEAR(sol.inv.e1, (1.0 + kSqrt5) / 4.0, 1e-14);
    EXPECT_NEAR(sol.inv.e2, (1.0 - kSqrt5) / 4.0, 1e-14);
    EXPECT_NEAR(sol.inv.e3, -0.5, 1e-14);
    // p^3 coefficient by hand: 2*1*(1/2) - 3*(1/2) + 4*(1/8) = 0
    const auto r = cwave::wef_residuals(sol);
    EXPECT_NEAR(r.p3, 0.0, 1e-15);
    EXPECT_NEAR(r.p2, 0.0, 1e-15);
    EXPECT_NEAR(r.p1, 0.0, 1e-15);
    EXPECT_NEAR(r.p0, 0.0, 1e-15);

    const auto neg = cwave::solve_wef(6.0, 4.0, 1.0, -1);
    EXPECT_NEAR(neg.zeta, -0.5, 1e-15);
    EXPECT_NEAR(neg.tau, -0.5, 1e-15);
    EXPECT_EQ(neg.inv.g2, sol.inv.g2);
    EXPECT_EQ(neg.inv.g3, sol.inv.g3);
    const auto rn = cwave::wef_residuals(neg);
    EXPECT_NEAR(rn.p3, 0.0, 1e-15);
    EXPECT_NEAR(rn.p0, 0.0, 1e-15);
}

TEST(SolveWef, Errors) {
    auto code = [](auto&& f) {
        try {
            f();
        } catch (const cwave::Error& e) {
            return e.code();
        }
        return cwave::ErrorCode::InvalidArgument;
    };
    EXPECT_EQ(code([] { cwave::solve_wef(6.0, -4.0, 1.0, 1); }), cwave::ErrorCode::ComplexZeta);
    EXPECT_EQ(code([] { cwave::solve_wef(0.0, 4.0, 1.0, 1); }), cwave::ErrorCode::ZeroAmplitude);
    EXPECT_EQ(code([] { cwave::solve_wef(6.0, 4.0, 0.0, 1); }), cwave::ErrorCode::Inadmissible);
}

TEST(SolveWefProperty, ClosureDiscriminantAndModulus) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> mag(0.1, 5.0);
    std::bernoulli_distribution coin;
    const double m2_pos = (3.0 - kSqrt5) / (3.0 + kSqrt5);
    const double m2_neg = 2.0 * kSqrt5 / (3.0 + kSqrt5);
    for (int i = 0; i < 1000; ++i) {
        const double A = (coin(rng) ? 1.0 : -1.0) * mag(rng);
        const double C = (A > 0 ? 1.0 : -1.0) * mag(rng);
        const double gamma = (coin(rng) ? 1.0 : -1.0) * mag(rng);
        const auto sol = cwave::solve_wef(A, C, gamma, coin(rng) ? 1 : -1);
        const auto r = cwave::wef_residuals(sol);
        const double t = std::abs(sol.tau), z = std::abs(sol.zeta);
        const double scale = std::max({1.0, std::abs(gamma) * t * (1.0 + sol.inv.g2 + std::abs(sol.inv.g3)),
                                       std::abs(A) * (t + z), std::abs(C) * (z * z * z + t * t * t + t * t * z + t * z * z)});
        EXPECT_LE(std::abs(r.p3), 1e-12 * scale);
        EXPECT_LE(std::abs(r.p2), 1e-12 * scale);
        EXPECT_LE(std::abs(r.p1), 1e-12 * scale);
        EXPECT_LE(std::abs(r.p0), 1e-12 * scale);
        const double g2 = sol.inv.g2, g3 = sol.inv.g3;
        EXPECT_NEAR(g2 * g2 * g2 / (27.0 * g3 * g3), 32.0 / 27.0, 1e-12 * 32.0 / 27.0);
        EXPECT_GT(sol.inv.discriminant(), 0.0);
        EXPECT_NEAR(sol.tau, A * sol.zeta / (6.0 * gamma), 1e-12 * std::max(1.0, t));
        EXPECT_NEAR(sol.zeta * sol.zeta, A / (6.0 * C), 1e-12 * std::max(1.0, z * z));
        EXPECT_NEAR(sol.tau * sol.tau, 2.0 * gamma * g3 / C, 1e-12 * std::max(1.0, t * t));
        const double m2 = cwave::modulus_from_roots(sol.inv).m2();
        EXPECT_NEAR(m2, g3 > 0 ? m2_pos : m2_neg, 1e-10);
    }
}

TEST(EvalWef, PFormSolvesRestrictedOde) {
    const auto sol = cwave::solve_wef(cwave::make_cubic(6.0, std::sqrt(108.0), 4.0), 1.0, 1);
    EXPECT_NEAR(sol.shift, -std::sqrt(108.0) / 12.0, 1e-15);
    EXPECT_LT(ode43(sol, WEFForm::PForm, cwave::GridSpec{0.4, 0.6, 21}).max_abs_residual, 1e-8);
    EXPECT_LT(ode43(sol, WEFForm::PForm, cwave::GridSpec{-10.0, 10.0, 2001}).max_abs_residual, 1e-8);
    const auto neg = cwave::solve_wef(6.0, 4.0, 1.0, -1);
    EXPECT_LT(ode43(neg, WEFForm::PForm, cwave::GridSpec{-10.0, 10.0, 2001}).max_abs_residual, 1e-8);
    // the branches are genuinely different profiles
    EXPECT_GT(std::abs(cwave::eval_wef_w(sol, WEFForm::PForm, 1.0) - cwave::eval_wef_w(neg, WEFForm::PForm, 1.0)), 0.1);
}

TEST(EvalWef, NegativeInvariantBranch) {
    const auto q = cwave::make_cubic(-2.0, 3.0, -1.0);
    ASSERT_TRUE(cwave::restriction_satisfied(q.A, q.B, q.C));
    const auto sol = cwave::solve_wef(q, 1.0, 1);
    EXPECT_LT(sol.inv.g3, 0.0);
    EXPECT_LT(ode43(sol, WEFForm::PForm, cwave::GridSpec{-10.0, 10.0, 2001}).max_abs_residual, 1e-8);
    // u = w + shift solves the unshifted cubic ODE
    const auto u = [&](double xi) { return cwave::eval_wef_u(sol, WEFForm::PForm, xi); };
    EXPECT_LT(cwave::ode_residual(u, q, 1.0, cwave::EquationId::ODE15, cwave::GridSpec{-10.0, 10.0, 2001})
                  .max_abs_residual, 1e-8);
}

TEST(EvalWef, JefFormMatchesPForm) {
    const auto sol = cwave::solve_wef(6.0, 4.0, 1.0, 1);
    for (double xi : {0.3, 0.9, 2.0, -1.4, 0.0}) {
        EXPECT_NEAR(cwave::eval_wef_w(sol, WEFForm::JEFForm, xi), cwave::eval_wef_w(sol, WEFForm::PForm, xi), 1e-10);
    }
    // PForm is removable at the lattice point of p
    EXPECT_EQ(cwave::eval_wef_w(sol, WEFForm::PForm, 0.0), sol.zeta);
}

TEST(EvalWef, LiteralJefFormOnlyUnderNormalization) {
    // A / gamma = 24 / (3 + sqrt 5) puts e1 - e3 = 1.
    const auto sol = cwave::solve_wef(24.0 / (3.0 + kSqrt5), 1.0, 1.0, 1);
    ASSERT_NEAR(sol.inv.e1 - sol.inv.e3, 1.0, 1e-14);
    for (double xi : {0.3, 0.9, 2.0}) {
        EXPECT_NEAR(cwave::eval_jef_as_printed(sol, xi), cwave::eval_wef_w(sol, WEFForm::JEFForm, xi), 1e-10);
    }
    const auto other = cwave::solve_wef(6.0, 4.0, 1.0, 1);
    EXPECT_GT(std::abs(cwave::eval_jef_as_printed(other, 0.9) - cwave::eval_wef_w(other, WEFForm::JEFForm, 0.9)), 1e-3);
}

TEST(EvalWef, TanhLimitAsPrintedIsNotExact) {
    const auto sol = cwave::solve_wef(cwave::make_cubic(6.0, std::sqrt(108.0), 4.0), 1.0, 1);
    EXPECT_GT(ode43(sol, WEFForm::TanhLimitAsPrinted).max_abs_residual, 1e-3);
    // u carries the literal +B/(3C) offset
    EXPECT_NEAR(cwave::eval_wef_u(sol, WEFForm::TanhLimitAsPrinted, 0.0), sol.zeta + std::sqrt(108.0) / 12.0, 1e-15);
}

TEST(EvalWef, ProfileCarriesVRelation) {
    const cwave::PhysicalSystem phys{0.0, 12.0, 0.0, 1.0, 0.5, 2.0, -6.0};
    const auto q = cwave::reduce(phys);  // A = 6, B = 0, C = 4
    const auto sol = cwave::solve_wef(q, phys.gamma, 1);
    const auto uv = cwave::eval_wef_profile(sol, WEFForm::PForm, phys, 1.3, 0.2);
    EXPECT_NEAR(uv.u, cwave::eval_wef_u(sol, WEFForm::PForm, 1.3 - phys.c * 0.2), 1e-15);
    EXPECT_NEAR(cwave::v_relation_residual(phys, uv.u, uv.v), 0.0, 1e-14);
}

}  // namespace
