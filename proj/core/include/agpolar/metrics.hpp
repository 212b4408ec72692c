#pragma once

#include <vector>

#include "agpolar/kernel.hpp"

namespace agpolar {

enum class BoundKind { exact, lower_bound };

/// Partial-distance profile (D_1, ..., D_L). D_i is the Hamming distance
/// from row i to the span of rows i+1..L; an `exact` entry is the true coset
/// minimum, a `lower_bound` entry only bounds it from below. Entries are
/// clamped at 1 (an invertible matrix never has a zero partial distance).
struct Profile {
    std::vector<long long> values;
    std::vector<BoundKind> kinds;

    int size() const { return static_cast<int>(values.size()); }
};

enum class ProfileSource { exact, goppa, paper, closed_form };

struct ExponentReport {
    double value = 0.0;
    double base = 0.0; // the L used in the logs
    ProfileSource source = ProfileSource::closed_form;
};

/// Generic nested AG-code profile for genus g and length L:
/// D_i = L-g+1-i for i <= L-g, then 1. All entries are lower bounds.
Profile paper_profile(long long L, long long g);

/// Per-row Goppa designed distances D_i = max(1, L - pole_orders[i]).
/// Requires the kernel to carry pole orders.
Profile goppa_profile(const KernelMatrix& K);

/// Exact partial distances by coset enumeration wherever the span size
/// q^(L-i) fits the budget; other rows fall back to the Goppa bound when
/// pole orders are present and to the trivial bound 1 otherwise. The last
/// row (weight of g_L) is always exact.
Profile exact_profile(const KernelMatrix& K, long long budget);

/// Profile of the m-fold binary concatenation: each D_i repeated m times,
/// all entries demoted to lower bounds.
Profile concat_profile(const Profile& p, int m);

/// E(G) = (1/L) sum_i log_L D_i.
ExponentReport exponent(const Profile& p, ProfileSource source = ProfileSource::exact);

/// Closed form for the nested AG profile: log2((L-g)!) / (L log2 L).
/// The base-q logs cancel; q is only validated. g may be fractional, in
/// which case (L-g)! is read as Gamma(L-g+1).
double exponent_ag(double L, double g, double q);

/// Binary concatenated lower bound: log2((L-g)!) / (L log2(m L)).
double exponent_binary_bound(double L, double g, double m);

/// log2(x!) = log2(Gamma(x+1)): exact summation for integer x <= 10^7,
/// log-gamma otherwise.
double log2_factorial(double x);

/// Stirling approximation x log2 x - x/ln 2 + 0.5 log2(2 pi x).
double stirling_log2_factorial(double x);

/// The large-L constant (q + 2 - 3 sqrt(q) cos t) / (q + 1 - 2 sqrt(q) cos t)
/// governing (L-g)/L along a fixed-curve parameterization.
double asymptotic_a(double q, double theta);

} // namespace agpolar
