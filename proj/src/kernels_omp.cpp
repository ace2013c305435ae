#include "cwave/kernels.hpp"
#include "mol_stencil.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cwave::kernels::omp {

void evaluate_points(std::size_t n, const PointFn& fn, std::span<double> out) {
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    }
}

void mol_rhs(const PhysicalSystem& phys, double h, const MolWorkspace& ws) {
    const auto n = static_cast<std::ptrdiff_t>(ws.u.size());
    if (n < 7) {
        return;
    }
    const double inv12h = 1.0 / (12.0 * h);
    const double inv8h3 = 1.0 / (8.0 * h * h * h);
#pragma omp parallel
    {
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            ws.uv[i] = ws.u[i] * ws.v[i];
        }
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 3; i < n - 3; ++i) {
            detail::mol_point(phys, ws, static_cast<std::size_t>(i), inv12h, inv8h3);
        }
    }
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace cwave::kernels::omp
