#include "cwave/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cwave/errors.hpp"

namespace cwave {

namespace {

void require_epsilon(const PhysicalSystem& phys) {
    if (phys.epsilon == 0.0) {
        throw Error(ErrorCode::EpsilonZero, "epsilon must be nonzero");
    }
}

}  // namespace

CubicODE make_cubic(double A, double B, double C) {
    const double scale = std::max({std::abs(A), std::abs(B), 1.0});
    if (!(std::abs(C) >= 1e-12 * scale)) {
        std::ostringstream os;
        os << "cubic coefficient C = " << C << " is below 1e-12 * " << scale;
        throw Error(ErrorCode::DegenerateCubic, os.str());
    }
    CubicODE out;
    out.A = A;
    out.B = B;
    out.C = C;
    out.delta = -B / (3.0 * C);
    out.c1 = (3.0 * A * C - B * B) / (3.0 * C);
    out.c2 = C;
    out.c3 = (2.0 * B * B * B - 9.0 * A * B * C) / (27.0 * C * C);
    return out;
}

CubicODE reduce(const PhysicalSystem& phys) {
    require_epsilon(phys);
    if (phys.gamma == 0.0) {
        throw Error(ErrorCode::Inadmissible, "gamma must be nonzero");
    }
    const double e3 = phys.epsilon * phys.epsilon * phys.epsilon;
    const double k = 8.0 * phys.alpha * phys.sigma / e3;
    const double A = -(phys.c + k * phys.c * phys.c);
    const double B = phys.eta / 2.0 + k * phys.sigma * phys.c;
    const double C = phys.beta / 3.0 - k * phys.sigma * phys.sigma / 3.0;
    return make_cubic(A, B, C);
}

double v_from_u(const PhysicalSystem& phys, double u) {
    require_epsilon(phys);
    return 2.0 * (phys.c - phys.sigma * u) / phys.epsilon;
}

double v_relation_residual(const PhysicalSystem& phys, double u, double v) {
    return -phys.c + phys.sigma * u + 0.5 * phys.epsilon * v;
}

}  // namespace cwave
