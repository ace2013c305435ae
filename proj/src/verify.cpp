#include "cwave/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "cwave/errors.hpp"

namespace cwave {

namespace {

using Shifted = std::function<double(double)>;

double d1(const Shifted& g, double h) {
    return (g(-2.0 * h) - 8.0 * g(-h) + 8.0 * g(h) - g(2.0 * h)) / (12.0 * h);
}

double d2(const Shifted& g, double h) {
    return (-g(2.0 * h) + 16.0 * g(h) - 30.0 * g(0.0) + 16.0 * g(-h) - g(-2.0 * h)) / (12.0 * h * h);
}

double d3(const Shifted& g, double h) {
    return (g(-3.0 * h) - 8.0 * g(-2.0 * h) + 13.0 * g(-h) - 13.0 * g(h) + 8.0 * g(2.0 * h) -
            g(3.0 * h)) / (8.0 * h * h * h);
}

template <class Stencil>
double derivative(Stencil stencil, const Shifted& g, double h, bool richardson) {
    if (!richardson) {
        return stencil(g, h);
    }
    return (16.0 * stencil(g, 0.5 * h) - stencil(g, h)) / 15.0;
}

bool near_pole(double xi, const std::vector<double>& poles, double radius) {
    return std::any_of(poles.begin(), poles.end(),
                       [&](double p) { return std::abs(xi - p) < radius; });
}

// Residual callbacks must not throw inside the parallel sweep.
template <class F>
double guarded(F&& f) noexcept {
    try {
        const double r = f();
        return std::isnan(r) ? std::numeric_limits<double>::infinity() : std::abs(r);
    } catch (...) {
        return std::numeric_limits<double>::infinity();
    }
}

constexpr double kExcluded = -1.0;

// Deterministic max over a fixed enumeration of the sweep results.
ResidualReport reduce_max(std::span<const double> values, EquationId id, double tolerance,
                          const std::function<std::pair<double, double>(std::size_t)>& location) {
    ResidualReport report;
    report.equation_id = id;
    report.tolerance = tolerance;
    std::size_t argmax = 0;
    bool any = false;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == kExcluded) {
            ++report.points_excluded;
            continue;
        }
        ++report.points_evaluated;
        if (!any || values[i] > report.max_abs_residual) {
            report.max_abs_residual = values[i];
            argmax = i;
            any = true;
        }
    }
    if (!any) {
        throw Error(ErrorCode::AllPointsExcluded, std::string(to_string(id)) + ": every grid point excluded");
    }
    std::tie(report.argmax_x, report.argmax_t) = location(argmax);
    report.pass = report.max_abs_residual <= tolerance;
    return report;
}

}  // namespace

void validate(const GridSpec& grid) {
    std::ostringstream os;
    if (!(grid.xmax > grid.xmin)) {
        os << "grid requires xmax > xmin";
    } else if (grid.nx < 16) {
        os << "grid requires nx >= 16 (got " << grid.nx << ")";
    } else if (grid.nt < 1) {
        os << "grid requires nt >= 1";
    } else if (grid.nt > 1 && !(grid.tmax > grid.tmin)) {
        os << "grid requires tmax > tmin when nt > 1";
    } else if (!(grid.pole_exclusion_radius >= 0.0)) {
        os << "pole_exclusion_radius must be non-negative";
    } else {
        return;
    }
    throw Error(ErrorCode::InvalidArgument, os.str());
}

std::string_view to_string(EquationId id) {
    switch (id) {
        case EquationId::ODE15: return "ODE15";
        case EquationId::ODE17: return "ODE17";
        case EquationId::ODE43: return "ODE43";
        case EquationId::PDE6: return "PDE6";
        case EquationId::PDE7: return "PDE7";
    }
    return "unknown";
}

ResidualReport ode_residual(const Profile1D& profile, const CubicODE& cubic, double gamma,
                            EquationId which, const GridSpec& grid, const CheckOptions& options) {
    validate(grid);
    if (which == EquationId::PDE6 || which == EquationId::PDE7) {
        throw Error(ErrorCode::InvalidArgument, "ode_residual needs an ODE equation id");
    }
    const double h = grid.dx();
    const auto n = static_cast<std::size_t>(grid.nx);

    auto point = [&](std::size_t i) -> double {
        const double xi = grid.x(static_cast<int>(i));
        if (near_pole(xi, options.poles, grid.pole_exclusion_radius)) {
            return kExcluded;
        }
        return guarded([&] {
            const Shifted g = [&](double s) { return profile(xi + s); };
            const double w = profile(xi);
            const double wpp = derivative(d2, g, h, options.richardson);
            switch (which) {
                case EquationId::ODE15:
                    return gamma * wpp + ((cubic.C * w + cubic.B) * w + cubic.A) * w;
                case EquationId::ODE17:
                    return gamma * wpp + (cubic.c2 * w * w + cubic.c1) * w + cubic.c3;
                default:
                    return gamma * wpp + (cubic.C * w * w - 0.5 * cubic.A) * w;
            }
        });
    };

    std::vector<double> values(n);
    kernels::evaluate_points(n, point, values, options.exec);
    return reduce_max(values, which, options.tolerance, [&](std::size_t i) {
        return std::pair{grid.x(static_cast<int>(i)), 0.0};
    });
}

std::pair<ResidualReport, ResidualReport> pde_residual(const Profile2D& u, const Profile2D& v,
                                                       const PhysicalSystem& phys,
                                                       const GridSpec& grid,
                                                       const CheckOptions& options) {
    validate(grid);
    if (grid.nt < 5) {
        std::ostringstream os;
        os << "time derivatives need nt >= 5 (got " << grid.nt << ")";
        throw Error(ErrorCode::GridTooCoarse, os.str());
    }
    const double hx = grid.dx();
    const double ht = std::min(hx, grid.dt());
    const bool rich = options.richardson;
    const auto nx = static_cast<std::size_t>(grid.nx);
    const std::size_t n = nx * static_cast<std::size_t>(grid.nt);

    // Index layout: [0, n) for the first equation, [n, 2n) for the second,
    // each t-major.
    auto point = [&](std::size_t k) -> double {
        const bool second = k >= n;
        const std::size_t idx = second ? k - n : k;
        const double x = grid.x(static_cast<int>(idx % nx));
        const double t = grid.t(static_cast<int>(idx / nx));
        if (near_pole(x - phys.c * t, options.poles, grid.pole_exclusion_radius)) {
            return kExcluded;
        }
        return guarded([&] {
            const Shifted vx_shift = [&](double s) { return v(x + s, t); };
            const double vv = v(x, t);
            const double vx = derivative(d1, vx_shift, hx, rich);
            if (!second) {
                const Shifted ux_shift = [&](double s) { return u(x + s, t); };
                const Shifted ut_shift = [&](double s) { return u(x, t + s); };
                const double uu = u(x, t);
                const double ux = derivative(d1, ux_shift, hx, rich);
                const double uxxx = derivative(d3, ux_shift, hx, rich);
                const double ut = derivative(d1, ut_shift, ht, rich);
                return ut + phys.alpha * vv * vv * vx + phys.beta * uu * uu * ux +
                       phys.eta * uu * ux + phys.gamma * uxxx;
            }
            const Shifted uv_shift = [&](double s) { return u(x + s, t) * v(x + s, t); };
            const Shifted vt_shift = [&](double s) { return v(x, t + s); };
            const double vt = derivative(d1, vt_shift, ht, rich);
            const double uvx = derivative(d1, uv_shift, hx, rich);
            return vt + phys.sigma * uvx + phys.epsilon * vv * vx;
        });
    };

    std::vector<double> values(2 * n);
    kernels::evaluate_points(2 * n, point, values, options.exec);
    auto location = [&](std::size_t idx) {
        return std::pair{grid.x(static_cast<int>(idx % nx)), grid.t(static_cast<int>(idx / nx))};
    };
    const std::span<const double> all(values);
    return {reduce_max(all.first(n), EquationId::PDE6, options.tolerance, location),
            reduce_max(all.last(n), EquationId::PDE7, options.tolerance, location)};
}

AsymptoticReport asymptotic_check(const Profile1D& profile, const CubicODE& cubic, double xi_far,
                                  double tolerance) {
    if (!(xi_far >= 10.0)) {
        throw Error(ErrorCode::InvalidArgument, "asymptotic check requires xi_far >= 10");
    }
    constexpr double h = 0.05;
    AsymptoticReport r;
    r.xi_far = xi_far;
    r.tolerance = tolerance;
    auto probe = [&](double xi, double& u, double& du, double& d2u, double& cub) {
        const Shifted g = [&](double s) { return profile(xi + s); };
        u = profile(xi);
        du = derivative(d1, g, h, true);
        d2u = derivative(d2, g, h, true);
        cub = ((cubic.C * u + cubic.B) * u + cubic.A) * u;
    };
    try {
        probe(-xi_far, r.u_minus, r.du_minus, r.d2u_minus, r.cubic_minus);
        probe(xi_far, r.u_plus, r.du_plus, r.d2u_plus, r.cubic_plus);
    } catch (const std::exception& e) {
        r.failure = std::string("profile evaluation failed: ") + e.what();
        return r;
    }
    std::ostringstream os;
    auto check = [&](const char* what, double minus, double plus) {
        const double worst = std::max(std::abs(minus), std::abs(plus));
        if (!(worst < tolerance) && os.tellp() == 0) {
            os << what << " does not vanish at the far field (|value| = " << worst << ")";
        }
    };
    check("u'", r.du_minus, r.du_plus);
    check("u''", r.d2u_minus, r.d2u_plus);
    check("A u + B u^2 + C u^3", r.cubic_minus, r.cubic_plus);
    r.failure = os.str();
    r.pass = r.failure.empty();
    return r;
}

TranslationReport translation_check(const Profile2D& profile, double c, int samples,
                                    std::uint64_t seed, double tolerance) {
    if (samples < 10) {
        throw Error(ErrorCode::InvalidArgument, "translation check needs at least 10 samples");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> xs(-10.0, 10.0), ts(0.0, 5.0), ds(-1.0, 1.0);
    TranslationReport r;
    r.tolerance = tolerance;
    bool ok = true;
    const int max_attempts = 20 * samples;
    for (int attempt = 0; r.samples < samples && attempt < max_attempts; ++attempt) {
        const double x = xs(rng), t = ts(rng), d = ds(rng);
        double a = 0.0, b = 0.0;
        try {
            a = profile(x, t);
            b = profile(x + c * d, t + d);
        } catch (const Error&) {
            ++r.skipped;
            continue;
        }
        ++r.samples;
        const double dev = std::abs(b - a);
        r.max_deviation = std::max(r.max_deviation, dev);
        if (!(dev <= tolerance * std::max(1.0, std::abs(a)))) {
            ok = false;
        }
    }
    r.pass = ok && r.samples == samples;
    return r;
}

namespace {

// Largest |symbol| of the fourth-order first and third derivative stencils,
// in units of 1/h and 1/h^3, and the RK4 stability radius on the imaginary axis.
constexpr double kFirstDerivativeSymbol = 1.3722;
constexpr double kThirdDerivativeSymbol = 4.5667;
constexpr double kRk4ImaginaryLimit = 2.8284;
constexpr double kCourantSafety = 0.8;
constexpr std::size_t kPinned = 3;

}  // namespace

EvolutionReport evolve_and_compare(const Profile1D& u0, const Profile1D& v0,
                                   const PhysicalSystem& phys, double T, const GridSpec& grid,
                                   kernels::Exec exec) {
    validate(grid);
    if (!(T >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "T must be non-negative");
    }
    const auto n = static_cast<std::size_t>(grid.nx);
    const double h = grid.dx();
    std::vector<double> x(n), u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = grid.x(static_cast<int>(i));
        u[i] = u0(x[i]);
        v[i] = v0(x[i]);
    }

    // The steepest part of the initial data must stay clear of the pinned boundaries.
    double steepest = 0.0;
    std::size_t front = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double g = std::abs(u[i + 1] - u[i]) + std::abs(v[i + 1] - v[i]);
        if (g > steepest) {
            steepest = g;
            front = i;
        }
    }
    if (steepest > 0.0) {
        const double width = grid.xmax - grid.xmin;
        const double margin = 0.2 * width;
        const double start = 0.5 * (x[front] + x[front + 1]);
        const double end = start + phys.c * T;
        for (double pos : {start, end}) {
            if (pos - grid.xmin < margin || grid.xmax - pos < margin) {
                std::ostringstream os;
                os << "wave front at x = " << pos << " is within 20% of the domain width of a boundary";
                throw Error(ErrorCode::BoundaryContamination, os.str(), pos);
            }
        }
    }

    double speed = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        speed = std::max(speed, std::abs(phys.beta * u[i] * u[i] + phys.eta * u[i]) +
                                    std::abs(phys.alpha * v[i] * v[i]) +
                                    std::abs(phys.sigma) * (std::abs(u[i]) + std::abs(v[i])) +
                                    std::abs(phys.epsilon * v[i]));
    }
    const double spectral = std::abs(phys.gamma) * kThirdDerivativeSymbol / (h * h * h) +
                            speed * kFirstDerivativeSymbol / h;
    double dt_max = spectral > 0.0 ? kCourantSafety * kRk4ImaginaryLimit / spectral : T;
    if (phys.gamma != 0.0) {
        dt_max = std::min(dt_max, 0.1 * h * h / std::abs(phys.gamma));
    }
    EvolutionReport report;
    report.h = h;
    report.steps = T > 0.0 ? static_cast<long>(std::ceil(T / dt_max)) : 0;
    report.dt = report.steps > 0 ? T / static_cast<double>(report.steps) : 0.0;
    const double dt = report.dt;

    std::vector<double> uv(n, 0.0), su(n), sv(n);
    std::vector<double> k1u(n, 0.0), k1v(n, 0.0), k2u(n, 0.0), k2v(n, 0.0);
    std::vector<double> k3u(n, 0.0), k3v(n, 0.0), k4u(n, 0.0), k4v(n, 0.0);

    auto pin = [&](std::vector<double>& a, std::vector<double>& b, double t) {
        for (std::size_t i = 0; i < kPinned; ++i) {
            for (std::size_t j : {i, n - 1 - i}) {
                const double xi = x[j] - phys.c * t;
                a[j] = u0(xi);
                b[j] = v0(xi);
            }
        }
    };
    auto rhs = [&](const std::vector<double>& a, const std::vector<double>& b,
                   std::vector<double>& ka, std::vector<double>& kb) {
        kernels::mol_rhs(phys, h, {a, b, uv, ka, kb}, exec);
    };
    auto stage = [&](const std::vector<double>& ka, const std::vector<double>& kb, double scale,
                     double t) {
        for (std::size_t i = 0; i < n; ++i) {
            su[i] = u[i] + scale * ka[i];
            sv[i] = v[i] + scale * kb[i];
        }
        pin(su, sv, t);
    };

    double t = 0.0;
    for (long step = 0; step < report.steps; ++step) {
        rhs(u, v, k1u, k1v);
        stage(k1u, k1v, 0.5 * dt, t + 0.5 * dt);
        rhs(su, sv, k2u, k2v);
        stage(k2u, k2v, 0.5 * dt, t + 0.5 * dt);
        rhs(su, sv, k3u, k3v);
        stage(k3u, k3v, dt, t + dt);
        rhs(su, sv, k4u, k4v);
        for (std::size_t i = 0; i < n; ++i) {
            u[i] += dt / 6.0 * (k1u[i] + 2.0 * k2u[i] + 2.0 * k3u[i] + k4u[i]);
            v[i] += dt / 6.0 * (k1v[i] + 2.0 * k2v[i] + 2.0 * k3v[i] + k4v[i]);
        }
        t = static_cast<double>(step + 1) * dt;
        pin(u, v, t);
        if ((step & 63) == 63 || step + 1 == report.steps) {
            const bool finite = std::all_of(u.begin(), u.end(), [](double a) { return std::isfinite(a); }) &&
                                std::all_of(v.begin(), v.end(), [](double a) { return std::isfinite(a); });
            if (!finite) {
                std::ostringstream os;
                os << "non-finite state at t = " << t;
                throw Error(ErrorCode::UnstableStep, os.str(), t);
            }
        }
    }

    double sum_u = 0.0, sum_v = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i] - phys.c * T;
        const double eu = std::abs(u[i] - u0(xi));
        const double ev = std::abs(v[i] - v0(xi));
        report.linf_u = std::max(report.linf_u, eu);
        report.linf_v = std::max(report.linf_v, ev);
        sum_u += eu * eu;
        sum_v += ev * ev;
    }
    report.l2_u = std::sqrt(h * sum_u);
    report.l2_v = std::sqrt(h * sum_v);
    report.linf = std::max(report.linf_u, report.linf_v);
    return report;
}

}  // namespace cwave
