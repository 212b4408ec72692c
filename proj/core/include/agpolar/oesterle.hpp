#pragma once

namespace agpolar {

/// Solution of the genus lower-bound system for a curve over F_q with L
/// affine rational points:
///
///   sqrt(q)^ell < L <= sqrt(q)^(ell+1)
///   u = (sqrt(q)^(ell+1) - L) / (L sqrt(q) - sqrt(q)^ell), u in [0, 1)
///   cos((ell+1) theta / 2) + u cos((ell-1) theta / 2) = 0,
///       theta in [pi/(ell+1), pi/ell]
///   genus >= ((L-1) sqrt(q) cos theta + q - L) / (q + 1 - 2 sqrt(q) cos theta)
///
/// When L <= sqrt(q) no ell >= 1 exists; such lengths are reachable by
/// genus-0 codes, reported as ell = 0, u = 0, theta = pi, genus_bound = 0.
struct OesterleResult {
    int ell = 0;
    double u = 0.0;
    double theta = 0.0;
    double genus_bound = 0.0;
};

OesterleResult oesterle(double q, double L);

/// Inverse map at a fixed curve angle theta in (0, pi/2]: ell is the integer
/// with theta in [pi/(ell+1), pi/ell), u = -cos((ell+1)theta/2) /
/// cos((ell-1)theta/2), and
///
///   L(m) = (sqrt(q)^(ell+1) - u sqrt(q)^ell) / (u sqrt(q) + 1),  q = 2^m.
///
/// The family anchors are theta = pi/2 (rational, L = q), pi/3 (hermitian,
/// L = q^1.5) and pi/4 (suzuki, L = q^2).
double length_for_theta(double m, double theta);

} // namespace agpolar
