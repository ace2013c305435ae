#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "cwave/reduction.hpp"

// Data-parallel inner loops. Each kernel has a serial reference version and an
// OpenMP version; both must produce bit-identical results.
namespace cwave::kernels {

enum class Exec { Serial, Parallel };

/// Point callback for grid sweeps. Must be thread-safe and must not throw.
using PointFn = std::function<double(std::size_t)>;

/// Right-hand side of the semi-discrete coupled system on a uniform grid,
///   du/dt = -(alpha v^2 v_x + beta u^2 u_x + eta u u_x + gamma u_xxx)
///   dv/dt = -(sigma (u v)_x + epsilon v v_x)
/// with fourth-order central differences. Only points [3, n-3) are written.
struct MolWorkspace {
    std::span<const double> u;
    std::span<const double> v;
    std::span<double> uv;  // scratch, size n
    std::span<double> du;
    std::span<double> dv;
};

namespace serial {
void evaluate_points(std::size_t n, const PointFn& fn, std::span<double> out);
void mol_rhs(const PhysicalSystem& phys, double h, const MolWorkspace& ws);
}  // namespace serial

namespace omp {
void evaluate_points(std::size_t n, const PointFn& fn, std::span<double> out);
void mol_rhs(const PhysicalSystem& phys, double h, const MolWorkspace& ws);
/// Number of threads the OpenMP runtime will use (1 when built without OpenMP).
int max_threads();
}  // namespace omp

inline void evaluate_points(std::size_t n, const PointFn& fn, std::span<double> out, Exec exec) {
    exec == Exec::Parallel ? omp::evaluate_points(n, fn, out) : serial::evaluate_points(n, fn, out);
}

inline void mol_rhs(const PhysicalSystem& phys, double h, const MolWorkspace& ws, Exec exec) {
    exec == Exec::Parallel ? omp::mol_rhs(phys, h, ws) : serial::mol_rhs(phys, h, ws);
}

}  // namespace cwave::kernels
