#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwave/kernels.hpp"
#include "cwave/reduction.hpp"

namespace cwave {

/// Uniform evaluation grid. For ODE checks only the x range is used, read as xi.
struct GridSpec {
    double xmin = -10.0;
    double xmax = 10.0;
    int nx = 2001;
    double tmin = 0.0;
    double tmax = 0.0;
    int nt = 1;
    double pole_exclusion_radius = 0.0;

    double dx() const { return (xmax - xmin) / (nx - 1); }
    double dt() const { return nt > 1 ? (tmax - tmin) / (nt - 1) : 0.0; }
    double x(int i) const { return xmin + i * dx(); }
    double t(int j) const { return nt > 1 ? tmin + j * dt() : tmin; }
};

/// Throws InvalidArgument unless xmax > xmin, nx >= 16, nt >= 1, radius >= 0.
void validate(const GridSpec& grid);

enum class EquationId { ODE15, ODE17, ODE43, PDE6, PDE7 };
std::string_view to_string(EquationId id);

inline constexpr double kDefaultResidualTolerance = 1e-6;
inline constexpr double kDefaultPoleExclusionRadius = 0.5;

struct ResidualReport {
    EquationId equation_id = EquationId::ODE15;
    double max_abs_residual = 0.0;
    double argmax_x = 0.0;
    double argmax_t = 0.0;
    int points_evaluated = 0;
    int points_excluded = 0;
    double tolerance = kDefaultResidualTolerance;
    bool pass = false;
};

using Profile1D = std::function<double(double)>;
using Profile2D = std::function<double(double, double)>;

struct CheckOptions {
    double tolerance = kDefaultResidualTolerance;
    /// One Richardson level over steps h and h/2. Off gives the raw
    /// fourth-order stencil, used for convergence studies.
    bool richardson = true;
    /// Pole locations in xi; grid points within the exclusion radius are skipped.
    std::vector<double> poles;
    kernels::Exec exec = kernels::Exec::Parallel;
};

/// Residual of one of the traveling-wave ODEs for a profile xi -> value:
///   ODE15: gamma u'' + A u + B u^2 + C u^3
///   ODE17: gamma w'' + c1 w + c2 w^3 + c3
///   ODE43: gamma w'' - (A/2) w + C w^3
/// Derivatives by fourth-order central differences with step grid.dx().
/// Throws AllPointsExcluded; InvalidArgument for a PDE id.
ResidualReport ode_residual(const Profile1D& profile, const CubicODE& cubic, double gamma,
                            EquationId which, const GridSpec& grid, const CheckOptions& options = {});

/// Residuals of both PDEs on the (x, t) grid. The x step is grid.dx(); the t step
/// is min(grid.dx(), grid.dt()). Poles are given in xi = x - c t.
/// Throws GridTooCoarse (nt < 5), AllPointsExcluded.
std::pair<ResidualReport, ResidualReport> pde_residual(const Profile2D& u, const Profile2D& v,
                                                       const PhysicalSystem& phys,
                                                       const GridSpec& grid,
                                                       const CheckOptions& options = {});

struct AsymptoticReport {
    double xi_far = 0.0;
    double u_minus = 0.0, u_plus = 0.0;
    double du_minus = 0.0, du_plus = 0.0;
    double d2u_minus = 0.0, d2u_plus = 0.0;
    double cubic_minus = 0.0, cubic_plus = 0.0;  // A u + B u^2 + C u^3
    double tolerance = kDefaultResidualTolerance;
    bool pass = false;
    std::string failure;
};

/// Far-field check: u', u'' vanish at +-xi_far and the limits are roots of
/// A u + B u^2 + C u^3. Report only.
AsymptoticReport asymptotic_check(const Profile1D& profile, const CubicODE& cubic, double xi_far,
                                  double tolerance = kDefaultResidualTolerance);

struct TranslationReport {
    int samples = 0;
    int skipped = 0;
    double max_deviation = 0.0;
    double tolerance = 1e-12;
    bool pass = false;
};

/// |u(x + c d, t + d) - u(x, t)| <= tol max(1, |u|) over random samples with
/// x in [-10, 10], t in [0, 5], d in [-1, 1]. Samples where the profile throws
/// are redrawn.
TranslationReport translation_check(const Profile2D& profile, double c, int samples,
                                    std::uint64_t seed = 20190101, double tolerance = 1e-12);

struct EvolutionReport {
    double linf_u = 0.0;
    double l2_u = 0.0;
    double linf_v = 0.0;
    double l2_v = 0.0;
    double linf = 0.0;  // max of the two fields
    double dt = 0.0;
    long steps = 0;
    double h = 0.0;
};

/// Integrates the coupled PDEs from (u0, v0) to time T with fourth-order central
/// differences in space and classical RK4 in time, pinning three boundary points
/// per side to the translated initial data u0(x - c t), and compares against the
/// translated profile at T. Throws UnstableStep, BoundaryContamination.
EvolutionReport evolve_and_compare(const Profile1D& u0, const Profile1D& v0,
                                   const PhysicalSystem& phys, double T, const GridSpec& grid,
                                   kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace cwave
