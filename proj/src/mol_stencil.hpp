#pragma once

#include <cstddef>

#include "cwave/kernels.hpp"

namespace cwave::kernels::detail {

inline double d1(const double* f, std::size_t i, double inv12h) {
    return (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) * inv12h;
}

inline double d3(const double* f, std::size_t i, double inv8h3) {
    return (f[i - 3] - 8.0 * f[i - 2] + 13.0 * f[i - 1] - 13.0 * f[i + 1] + 8.0 * f[i + 2] -
            f[i + 3]) * inv8h3;
}

inline void mol_point(const PhysicalSystem& p, const MolWorkspace& ws, std::size_t i,
                      double inv12h, double inv8h3) {
    const double* u = ws.u.data();
    const double* v = ws.v.data();
    const double ux = d1(u, i, inv12h);
    const double vx = d1(v, i, inv12h);
    const double uxxx = d3(u, i, inv8h3);
    const double uvx = d1(ws.uv.data(), i, inv12h);
    const double ui = u[i], vi = v[i];
    ws.du[i] = -(p.alpha * vi * vi * vx + (p.beta * ui * ui + p.eta * ui) * ux + p.gamma * uxxx);
    ws.dv[i] = -(p.sigma * uvx + p.epsilon * vi * vx);
}

}  // namespace cwave::kernels::detail
