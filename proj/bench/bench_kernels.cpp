#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "cwave/gg_method.hpp"
#include "cwave/kernels.hpp"
#include "cwave/verify.hpp"

namespace {

using cwave::kernels::Exec;

const cwave::PhysicalSystem kKink{0.0, -3.0, 0.0, 1.0, 1.0, 2.0, -1.0};

void BM_MolRhs(benchmark::State& state, Exec exec) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> u(n), v(n), uv(n), du(n), dv(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = std::tanh(60.0 * i / n - 30.0);
        v[i] = -1.0 - u[i];
    }
    for (auto _ : state) {
        cwave::kernels::mol_rhs(kKink, 60.0 / n, {u, v, uv, du, dv}, exec);
        benchmark::DoNotOptimize(du.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}

void BM_OdeResidual(benchmark::State& state, Exec exec) {
    const auto q = cwave::reduce(kKink);
    const auto sol = cwave::solve_ansatz(q, kKink.gamma, cwave::GGCase::Case1, 1, 0.0, 1.0);
    const auto profile = [&](double xi) { return cwave::eval_case_solution(sol, q, kKink.gamma, 0.0, xi, 0.0); };
    cwave::CheckOptions opt;
    opt.exec = exec;
    const cwave::GridSpec grid{-10.0, 10.0, static_cast<int>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(cwave::ode_residual(profile, q, kKink.gamma, cwave::EquationId::ODE15, grid, opt));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Evolve(benchmark::State& state, Exec exec) {
    const auto u0 = [](double xi) { return std::tanh(xi / std::sqrt(2.0)); };
    const auto v0 = [&](double xi) { return cwave::v_from_u(kKink, u0(xi)); };
    const cwave::GridSpec grid{-30.0, 30.0, static_cast<int>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(cwave::evolve_and_compare(u0, v0, kKink, 0.25, grid, exec));
    }
}

BENCHMARK_CAPTURE(BM_MolRhs, serial, Exec::Serial)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK_CAPTURE(BM_MolRhs, omp, Exec::Parallel)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK_CAPTURE(BM_OdeResidual, serial, Exec::Serial)->Arg(2001)->Arg(200001);
BENCHMARK_CAPTURE(BM_OdeResidual, omp, Exec::Parallel)->Arg(2001)->Arg(200001);
BENCHMARK_CAPTURE(BM_Evolve, serial, Exec::Serial)->Arg(1200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Evolve, omp, Exec::Parallel)->Arg(1200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
