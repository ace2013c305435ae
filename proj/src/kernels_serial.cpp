#include "cwave/kernels.hpp"
#include "mol_stencil.hpp"

namespace cwave::kernels::serial {

void evaluate_points(std::size_t n, const PointFn& fn, std::span<double> out) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = fn(i);
    }
}

void mol_rhs(const PhysicalSystem& phys, double h, const MolWorkspace& ws) {
    const std::size_t n = ws.u.size();
    if (n < 7) {
        return;
    }
    for (std::size_t i = 0; i < n; ++i) {
        ws.uv[i] = ws.u[i] * ws.v[i];
    }
    const double inv12h = 1.0 / (12.0 * h);
    const double inv8h3 = 1.0 / (8.0 * h * h * h);
    for (std::size_t i = 3; i + 3 < n; ++i) {
        detail::mol_point(phys, ws, i, inv12h, inv8h3);
    }
}

}  // namespace cwave::kernels::serial
