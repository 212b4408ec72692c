#pragma once

#include <utility>
#include <vector>

#include "agpolar/curves.hpp"
#include "agpolar/oesterle.hpp"

namespace agpolar {

/// One point of a binary-exponent parameter sweep. q = 2^m, n = m L, genus
/// is the Oesterle bound and e2 = log2((L-g)!) / (L log2 n). Parameters are
/// real: sweeps relax integrality, only kernel construction enforces it.
struct StudyRow {
    double m = 0.0;
    double q = 0.0;
    double L = 0.0;
    double genus = 0.0;
    double n = 0.0;
    double e2 = 0.0;
    bool is_argmax = false;
};

/// Curve angle anchoring a family in the (ell, u, theta) system:
/// pi/2 rational, pi/3 hermitian, pi/4 suzuki.
double family_anchor_theta(CurveFamily family);

/// Fixed binary block size n: one row per divisor m >= 2 of n with
/// L = n/m >= 2, sorted by m; the E2-argmax row is flagged. When
/// `m2_literal_q2` is set the m = 2 row uses q = 2 instead of q = 2^m = 4
/// (the two readings of that table row).
std::vector<StudyRow> table_fixed_n(long long n, bool m2_literal_q2 = false);

/// Fixed curve angle, sweeping the field extension degree.
std::vector<StudyRow> sweep_fixed_theta(double theta, const std::vector<double>& m_grid);

/// Fixed field extension degree, sweeping the outer length.
std::vector<StudyRow> sweep_fixed_m(double m, const std::vector<double>& L_grid);

/// Real m with m * length_for_theta(m, theta) = n (strictly increasing in
/// m, solved by bisection).
double family_m_for_n(double theta, double n);

/// E2 along the family's curve at binary block size n.
double family_e2_at_n(double theta, double n);

/// The family's E2 curve sampled at `samples` log-spaced n in [n_lo, n_hi].
std::vector<StudyRow> family_curve(double theta, double n_lo, double n_hi, int samples);

struct CrossoverResult {
    double theta_a = 0.0;
    double theta_b = 0.0;
    double n_star = 0.0;
    double n_lo = 0.0;
    double n_hi = 0.0;
};

/// Block size where the E2 curves of two families cross: bisection on the
/// sign of E2_a(n) - E2_b(n), which must differ at the bracket endpoints.
CrossoverResult crossover(double theta_a, double theta_b, double n_lo, double n_hi);

/// Error-correction figure (k+d)/n >= ((m-1)/m) R2 + (L-g+1)/(mL) at fixed
/// binary rate R2, along the family parameterization.
double ecc_bound_at_n(double theta, double r2, double n);
std::vector<std::pair<double, double>> ecc_bound(double theta, double r2, double n_lo,
                                                 double n_hi, int samples);

} // namespace agpolar
