#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "agpolar/kernel.hpp"

namespace agpolar {

/// Discrete memoryless channel with uniform input distribution: q input
/// symbols, `output_size` output symbols, transition probabilities row per
/// input. Rows must sum to 1 within 1e-12.
struct Dmc {
    int input_size = 0;
    int output_size = 0;
    std::vector<double> probs; // input_size x output_size, row-major

    double prob(int x, int y) const {
        return probs[static_cast<std::size_t>(x) * output_size + y];
    }
    void validate() const;

    /// q-ary erasure channel: output j (j < q) received iff x == j, output q
    /// is the erasure flag.
    static Dmc erasure(int q, double eps);
};

/// Symmetric capacity I(W), logs base q. 0 log 0 = 0.
double capacity(const Dmc& w);

/// Bhattacharyya parameter Z(W) with the 1/(q(q-1)) normalization.
double bhattacharyya(const Dmc& w);

/// Exact one-step subchannel for input u_i: output (y_0..y_{L-1},
/// u_0..u_{i-1}), summing over the later inputs. With `normalized` the
/// conditional distribution sums to 1 (prefactor 1/q^(L-1)); otherwise the
/// literal 1/q^L prefactor is kept. Guarded by
/// output_size^L * q^L <= 10^8.
Dmc subchannel(const Dmc& w, const KernelMatrix& G, int i, bool normalized = true);

/// Erasure-pattern census of a kernel: counts[i][k] is the number of
/// erasure subsets of size k that leave input u_i undetermined given the
/// unerased code symbols and u_0..u_{i-1}. Each subchannel of a q-ary
/// erasure channel under a linear kernel is again an erasure channel, with
///
///   p_i(eps) = sum_k counts[i][k] eps^k (1-eps)^(L-k).
///
/// Enumerates all 2^L patterns; requires L <= 24.
struct ErasureCensus {
    int size = 0;
    std::vector<double> counts; // size x (size+1), row-major
    double count(int i, int k) const {
        return counts[static_cast<std::size_t>(i) * (size + 1) + k];
    }
};

ErasureCensus erasure_census(const KernelMatrix& K);

/// Evaluate the census polynomials at one erasure probability.
std::vector<double> erasure_probs(const ErasureCensus& census, double eps);

/// One polarization step on a q-ary erasure channel: the L subchannel
/// erasure probabilities, in input order.
std::vector<double> erasure_step(const KernelMatrix& K, double eps);

enum class PolarizeMode { full_tree, sampled_paths };

struct PolarizationRun {
    KernelMatrix kernel;
    int levels = 0;
    PolarizeMode mode = PolarizeMode::full_tree;
    std::uint64_t seed = 0;
    std::vector<double> leaves;
};

/// Multi-level erasure polarization. full_tree returns all L^n leaf
/// probabilities in canonical index order (first branching most
/// significant) and requires L^n <= 10^7. sampled_paths draws `paths`
/// uniform branch sequences from a splitmix64 stream; path p uses the
/// substream seeded with seed + (p+1) * 0x9e3779b97f4a7c15.
PolarizationRun polarize_tree(const KernelMatrix& K, double eps, int levels, PolarizeMode mode,
                              int paths = 0, std::uint64_t seed = 0);

/// For each beta: the fraction of full-tree leaves with erasure probability
/// below 2^(-N^beta), N = L^levels. Requires a full_tree run.
std::vector<std::pair<double, double>> rate_diagnostic(const PolarizationRun& run,
                                                       const std::vector<double>& betas);

} // namespace agpolar
