#include "cwave/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cwave/errors.hpp"

namespace cwave {

namespace {

constexpr int kMaxAgmIterations = 32;
constexpr double kAgmTolerance = 1e-15;

void require_positive_discriminant(const WeierstrassInvariants& inv) {
    if (!(inv.discriminant() > 0.0)) {
        std::ostringstream os;
        os << "g2^3 - 27 g3^2 = " << inv.discriminant() << " is not positive";
        throw Error(ErrorCode::NonPositiveDiscriminant, os.str());
    }
}

struct ScaledArgument {
    double arg;
    double m2;
    double span;  // e1 - e3
};

ScaledArgument scale_argument(double xi, const WeierstrassInvariants& inv) {
    require_positive_discriminant(inv);
    const double span = inv.e1 - inv.e3;
    return {std::sqrt(span) * xi, modulus_from_roots(inv).m2(), span};
}

}  // namespace

EllipticModulus::EllipticModulus(double m2) : m2_(m2) {
    if (!(m2 >= 0.0 && m2 <= 1.0)) {
        std::ostringstream os;
        os << "m^2 = " << m2 << " outside [0, 1]";
        throw Error(ErrorCode::ModulusOutOfRange, os.str());
    }
}

JacobiSnCnDn jacobi_sn_cn_dn(double xi, double m2) {
    const EllipticModulus modulus(m2);
    const double m = modulus.m2();
    if (m == 0.0) {
        return {std::sin(xi), std::cos(xi), 1.0};
    }
    if (m == 1.0) {
        const double sech = 1.0 / std::cosh(xi);
        return {std::tanh(xi), sech, sech};
    }

    std::array<double, kMaxAgmIterations + 1> a{};
    std::array<double, kMaxAgmIterations + 1> c{};
    a[0] = 1.0;
    c[0] = std::sqrt(m);
    double b = std::sqrt(1.0 - m);
    int n = 0;
    while (n < kMaxAgmIterations && std::abs(c[n]) > kAgmTolerance * a[n]) {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = std::sqrt(a[n] * b);
        ++n;
    }
    if (n == 0) {
        // m below the iteration floor: circular functions to working precision.
        const double s = std::sin(xi);
        return {s, std::cos(xi), std::sqrt(1.0 - m * s * s)};
    }

    double phi = std::ldexp(a[n] * xi, n);
    for (int k = n; k >= 1; --k) {
        phi = 0.5 * (phi + std::asin(c[k] / a[k] * std::sin(phi)));
    }
    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    // 1 - m sn^2 rewritten without cancellation near cn = 0.
    const double dn = std::sqrt(cn * cn + (1.0 - m) * sn * sn);
    return {sn, cn, dn};
}

double weierstrass_cubic(double g2, double g3, double z) {
    return (4.0 * z * z - g2) * z - g3;
}

WeierstrassInvariants weierstrass_roots(double g2, double g3) {
    WeierstrassInvariants inv;
    inv.g2 = g2;
    inv.g3 = g3;
    require_positive_discriminant(inv);

    // z^3 + p z + q = 0 with p = -g2/4 < 0, q = -g3/4.
    const double p = -0.25 * g2;
    const double q = -0.25 * g3;
    const double radius = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(1.5 * q / p * std::sqrt(-3.0 / p), -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;

    std::array<double, 3> roots{};
    for (int k = 0; k < 3; ++k) {
        double z = radius * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0);
        const double slope = 12.0 * z * z - g2;
        if (slope != 0.0) {
            z -= weierstrass_cubic(g2, g3, z) / slope;
        }
        roots[k] = z;
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    inv.e1 = roots[0];
    inv.e2 = roots[1];
    inv.e3 = roots[2];
    return inv;
}

EllipticModulus modulus_from_roots(const WeierstrassInvariants& inv) {
    const double span = inv.e1 - inv.e3;
    if (!(span > 0.0)) {
        throw Error(ErrorCode::CoincidentExtremeRoots, "e1 and e3 coincide");
    }
    return EllipticModulus(std::clamp((inv.e2 - inv.e3) / span, 0.0, 1.0));
}

double weierstrass_p(double xi, const WeierstrassInvariants& inv) {
    const auto s = scale_argument(xi, inv);
    const double sn = jacobi_sn_cn_dn(s.arg, s.m2).sn;
    if (xi == 0.0 || sn == 0.0) {
        std::ostringstream os;
        os << "p has a double pole at xi = " << xi;
        throw Error(ErrorCode::PoleAtZero, os.str(), xi);
    }
    return inv.e3 + s.span / (sn * sn);
}

double weierstrass_p_prime(double xi, const WeierstrassInvariants& inv) {
    const auto s = scale_argument(xi, inv);
    const auto j = jacobi_sn_cn_dn(s.arg, s.m2);
    if (xi == 0.0 || j.sn == 0.0) {
        std::ostringstream os;
        os << "p' has a triple pole at xi = " << xi;
        throw Error(ErrorCode::PoleAtZero, os.str(), xi);
    }
    return -2.0 * s.span * std::sqrt(s.span) * j.cn * j.dn / (j.sn * j.sn * j.sn);
}

double reciprocal_weierstrass_p(double xi, const WeierstrassInvariants& inv) {
    const auto s = scale_argument(xi, inv);
    const double sn = jacobi_sn_cn_dn(s.arg, s.m2).sn;
    const double sn2 = sn * sn;
    return sn2 / (s.span + inv.e3 * sn2);
}

}  // namespace cwave
