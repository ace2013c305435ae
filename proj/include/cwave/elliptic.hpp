#pragma once

namespace cwave {

/// Squared modulus m^2 of the Jacobi elliptic functions, validated to [0, 1].
class EllipticModulus {
public:
    explicit EllipticModulus(double m2);
    double m2() const noexcept { return m2_; }

private:
    double m2_;
};

struct JacobiSnCnDn {
    double sn;
    double cn;
    double dn;
};

/// sn, cn, dn of real argument xi and parameter m2 = m^2 in [0, 1], by the
/// arithmetic-geometric mean (descending Landen) scheme. Throws ModulusOutOfRange.
JacobiSnCnDn jacobi_sn_cn_dn(double xi, double m2);

/// Invariants of the Weierstrass function and the real roots of
/// 4 z^3 - g2 z - g3, sorted e1 >= e2 >= e3.
struct WeierstrassInvariants {
    double g2 = 0.0;
    double g3 = 0.0;
    double e1 = 0.0;
    double e2 = 0.0;
    double e3 = 0.0;

    double discriminant() const noexcept { return g2 * g2 * g2 - 27.0 * g3 * g3; }
};

/// Trigonometric solution of the depressed cubic with one Newton polish per
/// root. Throws NonPositiveDiscriminant unless g2^3 - 27 g3^2 > 0.
WeierstrassInvariants weierstrass_roots(double g2, double g3);

/// 4 z^3 - g2 z - g3.
double weierstrass_cubic(double g2, double g3, double z);

/// m^2 = (e2 - e3) / (e1 - e3). Throws CoincidentExtremeRoots when e1 == e3.
EllipticModulus modulus_from_roots(const WeierstrassInvariants& inv);

/// p(xi) = e3 + (e1 - e3) / sn^2(sqrt(e1 - e3) xi, m2). Throws PoleAtZero on
/// the real lattice points and NonPositiveDiscriminant for degenerate invariants.
double weierstrass_p(double xi, const WeierstrassInvariants& inv);

/// p'(xi) = -2 (e1 - e3)^{3/2} cn dn / sn^3, same argument scaling.
double weierstrass_p_prime(double xi, const WeierstrassInvariants& inv);

/// 1 / p(xi) written as sn^2 / ((e1 - e3) + e3 sn^2). Regular everywhere on
/// the real line, zero on the lattice points.
double reciprocal_weierstrass_p(double xi, const WeierstrassInvariants& inv);

}  // namespace cwave
