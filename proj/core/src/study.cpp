#include "agpolar/study.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "agpolar/metrics.hpp"

namespace agpolar {

namespace {

constexpr double kPi = std::numbers::pi;

StudyRow make_row(double m, double q, double L, double genus) {
    StudyRow row;
    row.m = m;
    row.q = q;
    row.L = L;
    row.genus = genus;
    row.n = m * L;
    // The genus bound can exceed L under the literal q=2 reading of the
    // m=2 row; no exponent exists there.
    row.e2 = L - genus > 0 ? exponent_binary_bound(L, genus, m)
                           : std::numeric_limits<double>::quiet_NaN();
    return row;
}

} // namespace

double family_anchor_theta(CurveFamily family) {
    switch (family) {
        case CurveFamily::rational: return kPi / 2;
        case CurveFamily::hermitian: return kPi / 3;
        case CurveFamily::suzuki: return kPi / 4;
    }
    throw std::invalid_argument("family_anchor_theta: unknown family");
}

std::vector<StudyRow> table_fixed_n(long long n, bool m2_literal_q2) {
    if (n < 4) throw std::invalid_argument("table_fixed_n: n must be at least 4");
    std::vector<StudyRow> rows;
    for (long long m = 2; m * 2 <= n; ++m) {
        if (n % m != 0) continue;
        const long long L = n / m;
        const double q = (m == 2 && m2_literal_q2) ? 2.0 : std::pow(2.0, static_cast<double>(m));
        const OesterleResult oe = oesterle(q, static_cast<double>(L));
        rows.push_back(make_row(static_cast<double>(m), q, static_cast<double>(L), oe.genus_bound));
    }
    if (!rows.empty()) {
        auto best = std::max_element(rows.begin(), rows.end(),
                                     [](const StudyRow& a, const StudyRow& b) { return a.e2 < b.e2; });
        best->is_argmax = true;
    }
    return rows;
}

std::vector<StudyRow> sweep_fixed_theta(double theta, const std::vector<double>& m_grid) {
    std::vector<StudyRow> rows;
    rows.reserve(m_grid.size());
    for (double m : m_grid) {
        const double L = length_for_theta(m, theta);
        const double q = std::pow(2.0, m);
        const OesterleResult oe = oesterle(q, L);
        rows.push_back(make_row(m, q, L, oe.genus_bound));
    }
    return rows;
}

std::vector<StudyRow> sweep_fixed_m(double m, const std::vector<double>& L_grid) {
    if (!(m > 0)) throw std::invalid_argument("sweep_fixed_m: m must be positive");
    std::vector<StudyRow> rows;
    rows.reserve(L_grid.size());
    const double q = std::pow(2.0, m);
    for (double L : L_grid) {
        const OesterleResult oe = oesterle(q, L);
        rows.push_back(make_row(m, q, L, oe.genus_bound));
    }
    return rows;
}

double family_m_for_n(double theta, double n) {
    if (!(n > 1)) throw std::invalid_argument("family_m_for_n: n must exceed 1");
    auto n_of_m = [theta](double m) { return m * length_for_theta(m, theta); };
    double lo = 0.25, hi = 1.0;
    while (n_of_m(lo) > n) lo *= 0.5;
    while (n_of_m(hi) < n) {
        hi *= 2.0;
        if (hi > 4096.0) throw std::logic_error("family_m_for_n: bracket expansion failed");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (n_of_m(mid) < n ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double family_e2_at_n(double theta, double n) {
    const double m = family_m_for_n(theta, n);
    const double L = length_for_theta(m, theta);
    const OesterleResult oe = oesterle(std::pow(2.0, m), L);
    return exponent_binary_bound(L, oe.genus_bound, m);
}

std::vector<StudyRow> family_curve(double theta, double n_lo, double n_hi, int samples) {
    if (!(n_lo >= 8)) throw std::invalid_argument("family_curve: n_lo must be at least 8");
    if (!(n_hi > n_lo)) throw std::invalid_argument("family_curve: need n_hi > n_lo");
    if (samples < 2) throw std::invalid_argument("family_curve: need at least 2 samples");
    std::vector<StudyRow> rows;
    rows.reserve(static_cast<std::size_t>(samples));
    const double step = std::log(n_hi / n_lo) / (samples - 1);
    for (int s = 0; s < samples; ++s) {
        const double n = n_lo * std::exp(step * s);
        const double m = family_m_for_n(theta, n);
        const double L = length_for_theta(m, theta);
        const OesterleResult oe = oesterle(std::pow(2.0, m), L);
        rows.push_back(make_row(m, std::pow(2.0, m), L, oe.genus_bound));
    }
    return rows;
}

CrossoverResult crossover(double theta_a, double theta_b, double n_lo, double n_hi) {
    auto diff = [theta_a, theta_b](double n) {
        return family_e2_at_n(theta_a, n) - family_e2_at_n(theta_b, n);
    };
    const double d_lo = diff(n_lo);
    const double d_hi = diff(n_hi);
    if (d_lo == 0.0 && d_hi == 0.0) {
        throw std::invalid_argument("crossover: curves coincide on the bracket");
    }
    if (!(d_lo * d_hi < 0.0)) {
        throw std::invalid_argument("crossover: no sign change on the bracket");
    }
    double lo = n_lo, hi = n_hi;
    double f_lo = d_lo;
    while (hi - lo > 1e-4 * lo) {
        const double mid = std::sqrt(lo * hi); // bisect in log space
        const double f_mid = diff(mid);
        if (f_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    CrossoverResult res;
    res.theta_a = theta_a;
    res.theta_b = theta_b;
    res.n_star = std::sqrt(lo * hi);
    res.n_lo = n_lo;
    res.n_hi = n_hi;
    return res;
}

double ecc_bound_at_n(double theta, double r2, double n) {
    if (!(r2 > 0.0) || !(r2 < 1.0)) throw std::invalid_argument("ecc_bound: R2 must lie in (0, 1)");
    const double m = family_m_for_n(theta, n);
    const double L = length_for_theta(m, theta);
    const OesterleResult oe = oesterle(std::pow(2.0, m), L);
    return (m - 1) / m * r2 + (L - oe.genus_bound + 1) / (m * L);
}

std::vector<std::pair<double, double>> ecc_bound(double theta, double r2, double n_lo, double n_hi,
                                                 int samples) {
    if (!(n_hi > n_lo) || samples < 2) throw std::invalid_argument("ecc_bound: bad sample grid");
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(samples));
    const double step = std::log(n_hi / n_lo) / (samples - 1);
    for (int s = 0; s < samples; ++s) {
        const double n = n_lo * std::exp(step * s);
        out.emplace_back(n, ecc_bound_at_n(theta, r2, n));
    }
    return out;
}

} // namespace agpolar
