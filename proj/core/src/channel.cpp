#include "agpolar/channel.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace agpolar {

void Dmc::validate() const {
    if (input_size < 1 || output_size < 1) {
        throw std::invalid_argument("Dmc: alphabet sizes must be positive");
    }
    if (probs.size() != static_cast<std::size_t>(input_size) * output_size) {
        throw std::invalid_argument("Dmc: probability matrix has wrong shape");
    }
    for (int x = 0; x < input_size; ++x) {
        double sum = 0.0;
        for (int y = 0; y < output_size; ++y) {
            const double p = prob(x, y);
            if (p < 0.0) throw std::invalid_argument("Dmc: negative probability");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-12) {
            throw std::invalid_argument("Dmc: row " + std::to_string(x) + " does not sum to 1");
        }
    }
}

Dmc Dmc::erasure(int q, double eps) {
    if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("Dmc: eps must lie in [0, 1]");
    Dmc w;
    w.input_size = q;
    w.output_size = q + 1;
    w.probs.assign(static_cast<std::size_t>(q) * (q + 1), 0.0);
    for (int x = 0; x < q; ++x) {
        w.probs[static_cast<std::size_t>(x) * (q + 1) + x] = 1.0 - eps;
        w.probs[static_cast<std::size_t>(x) * (q + 1) + q] = eps;
    }
    return w;
}

double capacity(const Dmc& w) {
    w.validate();
    const double q = w.input_size;
    double sum = 0.0;
    for (int y = 0; y < w.output_size; ++y) {
        double marginal = 0.0;
        for (int x = 0; x < w.input_size; ++x) marginal += w.prob(x, y);
        marginal /= q;
        if (marginal == 0.0) continue;
        for (int x = 0; x < w.input_size; ++x) {
            const double p = w.prob(x, y);
            if (p == 0.0) continue;
            sum += p * std::log(p / marginal);
        }
    }
    return sum / (q * std::log(q));
}

double bhattacharyya(const Dmc& w) {
    w.validate();
    const double q = w.input_size;
    double sum = 0.0;
    for (int x = 0; x < w.input_size; ++x) {
        for (int xp = 0; xp < w.input_size; ++xp) {
            if (xp == x) continue;
            for (int y = 0; y < w.output_size; ++y) {
                sum += std::sqrt(w.prob(x, y) * w.prob(xp, y));
            }
        }
    }
    return sum / (q * (q - 1));
}

Dmc subchannel(const Dmc& w, const KernelMatrix& G, int i, bool normalized) {
    w.validate();
    const int L = G.size;
    const std::uint64_t q = G.field.size();
    if (w.input_size != static_cast<int>(q)) {
        throw std::invalid_argument("subchannel: channel alphabet must match the kernel field");
    }
    if (i < 0 || i >= L) throw std::invalid_argument("subchannel: index out of range");
    const double cost = std::pow(w.output_size, L) * std::pow(static_cast<double>(q), L);
    if (cost > 1e8) throw std::invalid_argument("subchannel: enumeration guard exceeded");

    std::uint64_t out_count = 1, q_pow_i = 1, u_count = 1;
    for (int j = 0; j < L; ++j) out_count *= w.output_size;
    for (int j = 0; j < i; ++j) q_pow_i *= q;
    for (int j = 0; j < L; ++j) u_count *= q;

    Dmc sub;
    sub.input_size = static_cast<int>(q);
    sub.output_size = static_cast<int>(out_count * q_pow_i);
    sub.probs.assign(q * out_count * q_pow_i, 0.0);

    std::vector<int> u(L), y(L), code(L);
    for (std::uint64_t uidx = 0; uidx < u_count; ++uidx) {
        std::uint64_t t = uidx;
        for (int j = 0; j < L; ++j) {
            u[j] = static_cast<int>(t % q);
            t /= q;
        }
        for (int c = 0; c < L; ++c) {
            std::uint32_t s = 0;
            for (int r = 0; r < L; ++r) {
                s = G.field.add(s, G.field.mul(static_cast<std::uint32_t>(u[r]), G.at(r, c)));
            }
            code[c] = static_cast<int>(s);
        }
        std::uint64_t prefix = 0;
        for (int j = i - 1; j >= 0; --j) prefix = prefix * q + u[j];
        const std::size_t base =
            (static_cast<std::size_t>(u[i]) * out_count * q_pow_i) + prefix * out_count;
        for (std::uint64_t yidx = 0; yidx < out_count; ++yidx) {
            std::uint64_t ty = yidx;
            double p = 1.0;
            for (int j = 0; j < L; ++j) {
                y[j] = static_cast<int>(ty % w.output_size);
                ty /= w.output_size;
                p *= w.prob(code[j], y[j]);
                if (p == 0.0) break;
            }
            if (p != 0.0) sub.probs[base + yidx] += p;
        }
    }

    const double scale =
        normalized ? std::pow(static_cast<double>(q), -(L - 1)) : std::pow(static_cast<double>(q), -L);
    for (double& p : sub.probs) p *= scale;
    return sub;
}

namespace {

// Reduction state for one erasure pattern: an echelon basis of functionals
// on the input vector, stored as normalized rows with tracked pivots.
class FunctionalBasis {
public:
    FunctionalBasis(const Field& field, const std::uint32_t* mul_table, int L)
        : field_(field), mul_table_(mul_table), m_(field.degree()), L_(L), count_(0) {}

    void reset() { count_ = 0; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return mul_table_ ? mul_table_[(a << m_) | b] : field_.mul(a, b);
    }

    // Reduce v against the basis; if independent, absorb it and return
    // true. v is clobbered.
    bool insert(std::uint32_t* v) {
        for (int r = 0; r < count_; ++r) {
            const std::uint32_t f = v[pivots_[r]];
            if (f == 0) continue;
            const std::uint32_t* row = rows_[r].data();
            for (int c = 0; c < L_; ++c) v[c] ^= mul(f, row[c]);
        }
        int pivot = -1;
        for (int c = 0; c < L_; ++c) {
            if (v[c] != 0) {
                pivot = c;
                break;
            }
        }
        if (pivot < 0) return false;
        const std::uint32_t inv = field_.inv(v[pivot]);
        auto& row = rows_[count_];
        row.resize(L_);
        for (int c = 0; c < L_; ++c) row[c] = mul(inv, v[c]);
        pivots_[count_] = pivot;
        ++count_;
        return true;
    }

private:
    const Field& field_;
    const std::uint32_t* mul_table_;
    int m_;
    int L_;
    int count_;
    std::array<std::vector<std::uint32_t>, 48> rows_;
    std::array<int, 48> pivots_;
};

} // namespace

ErasureCensus erasure_census(const KernelMatrix& K) {
    const int L = K.size;
    if (L > 24) throw std::invalid_argument("erasure_census: L > 24 pattern enumeration refused");
    const Field& field = K.field;
    const int m = field.degree();

    // Dense multiplication table for small fields; the pattern loop below is
    // the hottest path in the module.
    std::vector<std::uint32_t> table;
    const std::uint32_t* table_ptr = nullptr;
    if (m <= 8) {
        const std::uint32_t q = static_cast<std::uint32_t>(field.size());
        table.resize(static_cast<std::size_t>(q) << m);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) table[(a << m) | b] = field.mul(a, b);
        }
        table_ptr = table.data();
    }

    // columns[j] = functional revealed by code position j.
    std::vector<std::vector<std::uint32_t>> columns(static_cast<std::size_t>(L));
    for (int j = 0; j < L; ++j) {
        columns[j].resize(L);
        for (int r = 0; r < L; ++r) columns[j][r] = K.at(r, j);
    }

    ErasureCensus census;
    census.size = L;
    census.counts.assign(static_cast<std::size_t>(L) * (L + 1), 0.0);

    FunctionalBasis basis(field, table_ptr, L);
    std::vector<std::uint32_t> scratch(static_cast<std::size_t>(L));
    const std::uint64_t patterns = std::uint64_t{1} << L;
    for (std::uint64_t erased = 0; erased < patterns; ++erased) {
        basis.reset();
        for (int j = 0; j < L; ++j) {
            if ((erased >> j) & 1) continue;
            std::copy(columns[j].begin(), columns[j].end(), scratch.begin());
            basis.insert(scratch.data());
        }
        const int k = std::popcount(erased);
        for (int i = 0; i < L; ++i) {
            // Unit functional e_i: u_i is determined iff it reduces to zero.
            std::fill(scratch.begin(), scratch.end(), 0u);
            scratch[i] = 1;
            if (basis.insert(scratch.data())) {
                census.counts[static_cast<std::size_t>(i) * (L + 1) + k] += 1.0;
            }
        }
    }
    return census;
}

std::vector<double> erasure_probs(const ErasureCensus& census, double eps) {
    const int L = census.size;
    std::vector<double> powe(static_cast<std::size_t>(L) + 1), pow1(static_cast<std::size_t>(L) + 1);
    powe[0] = pow1[0] = 1.0;
    for (int k = 1; k <= L; ++k) {
        powe[k] = powe[k - 1] * eps;
        pow1[k] = pow1[k - 1] * (1.0 - eps);
    }
    std::vector<double> p(static_cast<std::size_t>(L), 0.0);
    for (int i = 0; i < L; ++i) {
        double sum = 0.0;
        for (int k = 0; k <= L; ++k) {
            const double c = census.count(i, k);
            if (c != 0.0) sum += c * powe[k] * pow1[L - k];
        }
        p[i] = sum;
    }
    return p;
}

std::vector<double> erasure_step(const KernelMatrix& K, double eps) {
    if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("erasure_step: eps must lie in [0, 1]");
    return erasure_probs(erasure_census(K), eps);
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int bounded_draw(std::uint64_t& state, int bound) {
    return static_cast<int>((static_cast<unsigned __int128>(splitmix64(state)) *
                             static_cast<unsigned __int128>(bound)) >>
                            64);
}

} // namespace

PolarizationRun polarize_tree(const KernelMatrix& K, double eps, int levels, PolarizeMode mode,
                              int paths, std::uint64_t seed) {
    if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("polarize_tree: eps must lie in [0, 1]");
    if (levels < 0) throw std::invalid_argument("polarize_tree: levels must be non-negative");
    const int L = K.size;

    PolarizationRun run;
    run.kernel = K;
    run.levels = levels;
    run.mode = mode;
    run.seed = seed;

    const ErasureCensus census = erasure_census(K);
    if (mode == PolarizeMode::full_tree) {
        double leaf_count = 1.0;
        for (int n = 0; n < levels; ++n) leaf_count *= L;
        if (leaf_count > 1e7) {
            throw std::invalid_argument("polarize_tree: full tree exceeds the 10^7 leaf guard");
        }
        std::vector<double> cur{eps};
        for (int n = 0; n < levels; ++n) {
            std::vector<double> next;
            next.reserve(cur.size() * static_cast<std::size_t>(L));
            for (double p : cur) {
                const std::vector<double> step = erasure_probs(census, p);
                next.insert(next.end(), step.begin(), step.end());
            }
            cur = std::move(next);
        }
        run.leaves = std::move(cur);
    } else {
        if (paths < 1) throw std::invalid_argument("polarize_tree: sampled mode needs paths >= 1");
        run.leaves.reserve(static_cast<std::size_t>(paths));
        for (int pth = 0; pth < paths; ++pth) {
            std::uint64_t state =
                seed + (static_cast<std::uint64_t>(pth) + 1) * 0x9e3779b97f4a7c15ull;
            double p = eps;
            for (int n = 0; n < levels; ++n) {
                const int branch = bounded_draw(state, L);
                p = erasure_probs(census, p)[static_cast<std::size_t>(branch)];
            }
            run.leaves.push_back(p);
        }
    }
    return run;
}

std::vector<std::pair<double, double>> rate_diagnostic(const PolarizationRun& run,
                                                       const std::vector<double>& betas) {
    if (run.mode != PolarizeMode::full_tree) {
        throw std::invalid_argument("rate_diagnostic: requires a full_tree run");
    }
    const double N = std::pow(static_cast<double>(run.kernel.size), run.levels);
    std::vector<std::pair<double, double>> out;
    out.reserve(betas.size());
    for (double beta : betas) {
        const double threshold = std::exp2(-std::pow(N, beta));
        std::size_t below = 0;
        for (double p : run.leaves) below += p < threshold;
        out.emplace_back(beta, static_cast<double>(below) / static_cast<double>(run.leaves.size()));
    }
    return out;
}

} // namespace agpolar
