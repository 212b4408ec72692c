#include "agpolar/oesterle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace agpolar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoundarySlack = 1e-9; // relative slack at sqrt(q)^k == L

double ipow(double base, int e) {
    double r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

double theta_equation(int ell, double u, double theta) {
    return std::cos(0.5 * (ell + 1) * theta) + u * std::cos(0.5 * (ell - 1) * theta);
}

// Root of the theta equation on [pi/(ell+1), pi/ell]. The left endpoint
// gives u * cos(...) >= 0 and the right endpoint (u-1) sin(pi/(2 ell)) < 0.
double solve_theta(int ell, double u) {
    const double lo = kPi / (ell + 1);
    if (u == 0.0) return lo; // closed form
    const double hi = kPi / ell;
    double flo = theta_equation(ell, u, lo);
    double fhi = theta_equation(ell, u, hi);
    if (!(flo >= 0.0) || !(fhi < 0.0)) {
        throw std::logic_error("oesterle: theta bracket has no sign change");
    }
    double a = lo, b = hi;
    for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
        const double mid = 0.5 * (a + b);
        if (theta_equation(ell, u, mid) >= 0.0) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

} // namespace

OesterleResult oesterle(double q, double L) {
    if (!(q > 1)) throw std::invalid_argument("oesterle: q must exceed 1");
    if (!(L > 1)) throw std::invalid_argument("oesterle: L must exceed 1");
    const double sq = std::sqrt(q);

    OesterleResult res;
    if (L <= sq * (1 + kBoundarySlack)) {
        // Reachable by genus-0 codes; the (ell, u, theta) system needs
        // ell >= 1.
        res.ell = 0;
        res.u = 0.0;
        res.theta = kPi;
        res.genus_bound = 0.0;
        return res;
    }

    int ell = 1;
    while (ipow(sq, ell + 1) < L * (1 - kBoundarySlack)) {
        ++ell;
        if (ell > 4096) throw std::logic_error("oesterle: ell search diverged");
    }
    double u = (ipow(sq, ell + 1) - L) / (L * sq - ipow(sq, ell));
    if (u < 0.0) u = 0.0; // sqrt(q)^(ell+1) == L up to roundoff
    if (!(u < 1.0)) throw std::logic_error("oesterle: u escaped [0, 1)");

    const double theta = solve_theta(ell, u);

    res.ell = ell;
    res.u = u;
    res.theta = theta;
    if (ell == 1) {
        // cos theta = -u makes the numerator (L-1) sqrt(q) cos theta + q - L
        // vanish identically; return the exact zero instead of roundoff.
        res.genus_bound = 0.0;
    } else {
        const double c = sq * std::cos(theta);
        const double bound = ((L - 1) * c + q - L) / (q + 1 - 2 * c);
        res.genus_bound = bound > 0.0 ? bound : 0.0;
    }
    return res;
}

double length_for_theta(double m, double theta) {
    if (!(m > 0)) throw std::invalid_argument("length_for_theta: m must be positive");
    if (!(theta > 0) || theta > kPi / 2 + 1e-15) {
        throw std::invalid_argument("length_for_theta: theta must lie in (0, pi/2]");
    }
    const double ratio = kPi / theta;
    const double nearest = std::round(ratio);
    // theta in [pi/(ell+1), pi/ell): the anchor theta = pi/k belongs to
    // ell = k - 1.
    const int ell = std::abs(ratio - nearest) < 1e-9 ? static_cast<int>(nearest) - 1
                                                     : static_cast<int>(std::floor(ratio));
    const double cos_num = std::cos(0.5 * (ell + 1) * theta);
    const double cos_den = std::cos(0.5 * (ell - 1) * theta);
    double u = -cos_num / cos_den;
    if (std::abs(u) < 1e-12) u = 0.0;
    if (u < 0.0 || u >= 1.0) {
        throw std::domain_error("length_for_theta: theta inconsistent with the ell convention");
    }
    const double sq = std::pow(2.0, 0.5 * m);
    return (ipow(sq, ell + 1) - u * ipow(sq, ell)) / (u * sq + 1.0);
}

} // namespace agpolar
