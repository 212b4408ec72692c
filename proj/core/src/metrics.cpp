#include "agpolar/metrics.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace agpolar {

Profile paper_profile(long long L, long long g) {
    if (L < 1) throw std::invalid_argument("paper_profile: L must be positive");
    if (g < 0 || g >= L) throw std::invalid_argument("paper_profile: need 0 <= g < L");
    Profile p;
    p.values.reserve(static_cast<std::size_t>(L));
    for (long long i = 1; i <= L; ++i) {
        p.values.push_back(i <= L - g ? L - g + 1 - i : 1);
    }
    p.kinds.assign(static_cast<std::size_t>(L), BoundKind::lower_bound);
    return p;
}

Profile goppa_profile(const KernelMatrix& K) {
    if (static_cast<int>(K.pole_orders.size()) != K.size) {
        throw std::invalid_argument("goppa_profile: kernel has no pole orders");
    }
    Profile p;
    p.values.reserve(static_cast<std::size_t>(K.size));
    for (long long pole : K.pole_orders) {
        p.values.push_back(std::max(1ll, K.size - pole));
    }
    p.kinds.assign(static_cast<std::size_t>(K.size), BoundKind::lower_bound);
    return p;
}

namespace {

// Minimum Hamming weight over the coset lead + span(rows gen_first..L-1),
// enumerated with a binary Gray code over the GF(2)-generators
// {alpha^b * row_j}. Cost is q^(L - gen_first) vector updates.
long long coset_min_weight(const KernelMatrix& K, int lead, int gen_first) {
    const int L = K.size;
    const int m = K.field.degree();
    std::vector<std::vector<std::uint32_t>> gens;
    for (int j = gen_first; j < L; ++j) {
        for (int b = 0; b < m; ++b) {
            const std::uint32_t alpha_b = b == 0 ? 1u : K.field.pow(2u, static_cast<std::uint64_t>(b));
            std::vector<std::uint32_t> grow(static_cast<std::size_t>(L));
            for (int c = 0; c < L; ++c) grow[c] = K.field.mul(alpha_b, K.at(j, c));
            gens.push_back(std::move(grow));
        }
    }
    std::vector<std::uint32_t> cur(K.row(lead), K.row(lead) + L);
    auto weight = [L](const std::vector<std::uint32_t>& v) {
        long long w = 0;
        for (int c = 0; c < L; ++c) w += v[c] != 0;
        return w;
    };
    long long best = weight(cur);
    const std::uint64_t total = std::uint64_t{1} << gens.size();
    for (std::uint64_t s = 1; s < total && best > 1; ++s) {
        const int flip = std::countr_zero(s);
        const std::vector<std::uint32_t>& g = gens[static_cast<std::size_t>(flip)];
        for (int c = 0; c < L; ++c) cur[c] ^= g[c]; // add = xor in GF(2^m)
        const long long w = weight(cur);
        if (w < best) best = w;
    }
    return best;
}

} // namespace

Profile exact_profile(const KernelMatrix& K, long long budget) {
    if (budget < 1) throw std::invalid_argument("exact_profile: budget must be positive");
    const int L = K.size;
    const int m = K.field.degree();
    const bool has_poles = static_cast<int>(K.pole_orders.size()) == L;
    const double log2_budget = std::log2(static_cast<double>(budget));

    Profile p;
    p.values.resize(static_cast<std::size_t>(L));
    p.kinds.resize(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) {
        const double span_bits = static_cast<double>(L - 1 - i) * m; // log2 of span size
        if (span_bits <= log2_budget + 1e-9) {
            p.values[i] = coset_min_weight(K, i, i + 1);
            p.kinds[i] = BoundKind::exact;
        } else if (has_poles) {
            p.values[i] = std::max(1ll, static_cast<long long>(L) - K.pole_orders[i]);
            p.kinds[i] = BoundKind::lower_bound;
        } else {
            p.values[i] = 1;
            p.kinds[i] = BoundKind::lower_bound;
        }
    }
    return p;
}

Profile concat_profile(const Profile& p, int m) {
    if (m < 1) throw std::invalid_argument("concat_profile: m must be positive");
    Profile out;
    out.values.reserve(p.values.size() * static_cast<std::size_t>(m));
    for (long long v : p.values) {
        for (int k = 0; k < m; ++k) out.values.push_back(v);
    }
    out.kinds.assign(out.values.size(), BoundKind::lower_bound);
    return out;
}

ExponentReport exponent(const Profile& p, ProfileSource source) {
    const int L = p.size();
    if (L == 0) throw std::invalid_argument("exponent: empty profile");
    long double sum = 0.0L;
    for (long long d : p.values) {
        if (d < 1) throw std::invalid_argument("exponent: profile entries must be >= 1");
        sum += std::log2(static_cast<long double>(d));
    }
    ExponentReport rep;
    rep.base = static_cast<double>(L);
    rep.value = static_cast<double>(sum / (static_cast<long double>(L) * std::log2(static_cast<long double>(L))));
    rep.source = source;
    return rep;
}

double log2_factorial(double x) {
    if (!(x > 0)) {
        if (x == 0.0) return 0.0;
        throw std::invalid_argument("log2_factorial: x must be non-negative");
    }
    const double r = std::round(x);
    if (std::abs(x - r) < 1e-9 && r <= 1e7) {
        const long long n = static_cast<long long>(r);
        long double sum = 0.0L;
        for (long long i = 2; i <= n; ++i) sum += std::log2(static_cast<long double>(i));
        return static_cast<double>(sum);
    }
    return std::lgamma(x + 1.0) / std::numbers::ln2;
}

double stirling_log2_factorial(double x) {
    if (!(x > 0)) throw std::invalid_argument("stirling_log2_factorial: x must be positive");
    return x * std::log2(x) - x / std::numbers::ln2 + 0.5 * std::log2(2.0 * std::numbers::pi * x);
}

double exponent_ag(double L, double g, double q) {
    if (!(q > 1)) throw std::invalid_argument("exponent_ag: q must exceed 1");
    if (!(L > 1)) throw std::invalid_argument("exponent_ag: L must exceed 1");
    if (!(L - g > 0)) throw std::invalid_argument("exponent_ag: need L - g > 0");
    return log2_factorial(L - g) / (L * std::log2(L));
}

double exponent_binary_bound(double L, double g, double m) {
    if (!(L - g > 0)) throw std::invalid_argument("exponent_binary_bound: need L - g > 0");
    if (!(m > 0) || !(m * L > 1)) {
        throw std::invalid_argument("exponent_binary_bound: need m > 0 and m*L > 1");
    }
    return log2_factorial(L - g) / (L * std::log2(m * L));
}

double asymptotic_a(double q, double theta) {
    if (!(q > 1)) throw std::invalid_argument("asymptotic_a: q must exceed 1");
    if (!(theta > 0) || !(theta < std::numbers::pi)) {
        throw std::invalid_argument("asymptotic_a: theta must lie in (0, pi)");
    }
    const double c = std::sqrt(q) * std::cos(theta);
    const double denom = q + 1 - 2 * c;
    if (!(denom > 0)) throw std::domain_error("asymptotic_a: non-positive denominator");
    return (q + 2 - 3 * c) / denom;
}

} // namespace agpolar
