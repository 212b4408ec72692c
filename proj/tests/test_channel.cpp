#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "agpolar/channel.hpp"

using namespace agpolar;

namespace {

KernelMatrix arikan() {
    KernelMatrix K(Field(1), 2);
    K.entries = {1, 0, 1, 1};
    return K;
}

KernelMatrix identity_kernel(int m, int n) {
    KernelMatrix K(Field(m), n);
    for (int i = 0; i < n; ++i) K.at(i, i) = 1;
    return K;
}

// Independent 4-pattern oracle for 2x2 binary kernels: solve for u_i by
// direct case analysis of which GF(2) systems pin it down.
std::vector<double> oracle_erasure_2x2(const KernelMatrix& K, double eps) {
    std::vector<double> p(2, 0.0);
    for (int pattern = 0; pattern < 4; ++pattern) {
        const bool e0 = pattern & 1, e1 = pattern & 2;
        const double weight = (e0 ? eps : 1 - eps) * (e1 ? eps : 1 - eps);
        // functionals available from unerased positions
        std::vector<std::pair<int, int>> funcs; // coefficient pairs (on u0, u1)
        if (!e0) funcs.push_back({K.at(0, 0), K.at(1, 0)});
        if (!e1) funcs.push_back({K.at(0, 1), K.at(1, 1)});
        // u0 known iff (1,0) lies in the span of funcs
        bool u0 = false, u1 = false;
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                if (a + b == 0 || (a == 1 && funcs.size() < 1) || (b == 1 && funcs.size() < 2))
                    continue;
                int c0 = 0, c1 = 0;
                if (a) { c0 ^= funcs[0].first; c1 ^= funcs[0].second; }
                if (b) { c0 ^= funcs[1].first; c1 ^= funcs[1].second; }
                if (c0 == 1 && c1 == 0) u0 = true;
            }
        }
        // u1 known given u0: (0,1) in span of funcs plus (1,0)
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                for (int c = 0; c < 2; ++c) {
                    if ((a == 1 && funcs.size() < 1) || (b == 1 && funcs.size() < 2)) continue;
                    int c0 = 0, c1 = 0;
                    if (a) { c0 ^= funcs[0].first; c1 ^= funcs[0].second; }
                    if (b) { c0 ^= funcs[1].first; c1 ^= funcs[1].second; }
                    if (c) c0 ^= 1;
                    if (c0 == 0 && c1 == 1) u1 = true;
                }
            }
        }
        if (!u0) p[0] += weight;
        if (!u1) p[1] += weight;
    }
    return p;
}

Dmc bsc(double p) {
    Dmc w;
    w.input_size = 2;
    w.output_size = 2;
    w.probs = {1 - p, p, p, 1 - p};
    return w;
}

std::uint64_t rng_state = 0x2545f4914f6cdd1dull;
double rng_unit() {
    rng_state = rng_state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(rng_state >> 11) / 9007199254740992.0;
}

Dmc random_dmc(int q, int outputs) {
    Dmc w;
    w.input_size = q;
    w.output_size = outputs;
    w.probs.resize(static_cast<std::size_t>(q) * outputs);
    for (int x = 0; x < q; ++x) {
        double sum = 0.0;
        for (int y = 0; y < outputs; ++y) {
            const double v = 0.05 + rng_unit();
            w.probs[static_cast<std::size_t>(x) * outputs + y] = v;
            sum += v;
        }
        for (int y = 0; y < outputs; ++y) w.probs[static_cast<std::size_t>(x) * outputs + y] /= sum;
    }
    return w;
}

} // namespace

TEST_CASE("capacity and bhattacharyya basics") {
    CHECK(capacity(Dmc::erasure(2, 0.5)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(capacity(Dmc::erasure(4, 0.25)) == doctest::Approx(0.75).epsilon(1e-12));

    CHECK(bhattacharyya(bsc(0.11)) ==
          doctest::Approx(2 * std::sqrt(0.11 * 0.89)).epsilon(1e-12));
    CHECK(bhattacharyya(bsc(0.11)) == doctest::Approx(0.625780).epsilon(1e-6));

    for (int q : {2, 4, 8}) {
        CHECK(bhattacharyya(Dmc::erasure(q, 0.37)) == doctest::Approx(0.37).epsilon(1e-12));
    }

    Dmc bad;
    bad.input_size = 2;
    bad.output_size = 1;
    bad.probs = {0.5, 0.7};
    CHECK_THROWS(capacity(bad));
}

TEST_CASE("one-step subchannels of the erasure channel under Arikan's kernel") {
    const Dmc w = Dmc::erasure(2, 0.5);
    const Dmc s0 = subchannel(w, arikan(), 0);
    const Dmc s1 = subchannel(w, arikan(), 1);
    const double i0 = capacity(s0), i1 = capacity(s1);
    CHECK(std::min(i0, i1) == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(std::max(i0, i1) == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(i0 + i1 == doctest::Approx(2 * capacity(w)).epsilon(1e-9));
}

TEST_CASE("subchannel rows are normalized distributions") {
    const Dmc w = bsc(0.2);
    const Dmc s = subchannel(w, arikan(), 0);
    s.validate();
    // without normalization the rows integrate to 1/q
    const Dmc raw = subchannel(w, arikan(), 0, false);
    double row = 0.0;
    for (int y = 0; y < raw.output_size; ++y) row += raw.prob(0, y);
    CHECK(row == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("identity kernel leaves subchannels unchanged") {
    const Dmc w = Dmc::erasure(2, 0.3);
    for (int i = 0; i < 2; ++i) {
        CHECK(capacity(subchannel(w, identity_kernel(1, 2), i)) ==
              doctest::Approx(capacity(w)).epsilon(1e-12));
    }
}

TEST_CASE("chain rule over random channels and kernels") {
    SUBCASE("binary") {
        for (int trial = 0; trial < 5; ++trial) {
            const Dmc w = random_dmc(2, 3);
            double sum = 0.0;
            for (int i = 0; i < 2; ++i) sum += capacity(subchannel(w, arikan(), i));
            CHECK(sum == doctest::Approx(2 * capacity(w)).epsilon(1e-9));
        }
    }
    SUBCASE("quaternary") {
        KernelMatrix G(Field(2), 2);
        G.entries = {1, 0, 2, 1}; // alpha in the lower corner
        const Dmc w = random_dmc(4, 2);
        double sum = 0.0;
        for (int i = 0; i < 2; ++i) sum += capacity(subchannel(w, G, i));
        CHECK(sum == doctest::Approx(2 * capacity(w)).epsilon(1e-9));
    }
}

TEST_CASE("subchannel guard") {
    const Dmc w = Dmc::erasure(2, 0.5);
    const KernelMatrix big = identity_kernel(1, 16);
    CHECK_THROWS(subchannel(w, big, 0)); // 3^16 * 2^16 patterns
}

TEST_CASE("erasure step") {
    SUBCASE("arikan closed form and oracle") {
        for (double eps : {0.1, 0.35, 0.8}) {
            const auto p = erasure_step(arikan(), eps);
            CHECK(p[0] == doctest::Approx(2 * eps - eps * eps).epsilon(1e-12));
            CHECK(p[1] == doctest::Approx(eps * eps).epsilon(1e-12));
            const auto oracle = oracle_erasure_2x2(arikan(), eps);
            CHECK(p[0] == doctest::Approx(oracle[0]).epsilon(1e-12));
            CHECK(p[1] == doctest::Approx(oracle[1]).epsilon(1e-12));
        }
    }
    SUBCASE("nothing erased, nothing lost") {
        const KernelMatrix K = build_kernel(curve_spec(CurveFamily::hermitian, 2), Field(2));
        for (double p : erasure_step(K, 0.0)) CHECK(p == 0.0);
    }
    SUBCASE("identity kernel does not polarize") {
        for (double p : erasure_step(identity_kernel(2, 4), 0.42)) {
            CHECK(p == doctest::Approx(0.42).epsilon(1e-12));
        }
    }
    SUBCASE("conservation on curve kernels") {
        for (double eps : {0.1, 0.5, 0.9}) {
            for (int m : {1, 2, 3}) {
                const KernelMatrix K =
                    build_kernel(curve_spec(CurveFamily::rational, 0, m), Field(m));
                const auto p = erasure_step(K, eps);
                double sum = 0.0;
                for (double v : p) sum += v;
                CHECK(sum == doctest::Approx(K.size * eps).epsilon(1e-9));
            }
            const KernelMatrix H = build_kernel(curve_spec(CurveFamily::hermitian, 2), Field(2));
            const auto p = erasure_step(H, eps);
            double sum = 0.0;
            for (double v : p) sum += v;
            CHECK(sum == doctest::Approx(8 * eps).epsilon(1e-9));
        }
    }
}

TEST_CASE("erasure probabilities are degree-L polynomials in eps") {
    const KernelMatrix K = build_kernel(curve_spec(CurveFamily::rational, 0, 2), Field(2));
    const int L = K.size;
    const std::vector<double> nodes{0.05, 0.25, 0.45, 0.65, 0.85};
    const double probe = 0.6;
    const ErasureCensus census = erasure_census(K);
    for (int i = 0; i < L; ++i) {
        // Lagrange interpolation from L+1 nodes must reproduce the probe value
        std::vector<double> xs = nodes;
        double value = 0.0;
        for (std::size_t a = 0; a < xs.size(); ++a) {
            double term = erasure_probs(census, xs[a])[i];
            for (std::size_t b = 0; b < xs.size(); ++b) {
                if (a != b) term *= (probe - xs[b]) / (xs[a] - xs[b]);
            }
            value += term;
        }
        CHECK(value == doctest::Approx(erasure_probs(census, probe)[i]).epsilon(1e-9));
    }
}

TEST_CASE("full polarization tree") {
    SUBCASE("two levels of Arikan") {
        const PolarizationRun run = polarize_tree(arikan(), 0.5, 2, PolarizeMode::full_tree);
        std::vector<double> leaves = run.leaves;
        std::sort(leaves.begin(), leaves.end());
        const std::vector<double> expect{0.0625, 0.4375, 0.5625, 0.9375};
        REQUIRE(leaves.size() == 4);
        for (int i = 0; i < 4; ++i) CHECK(leaves[i] == doctest::Approx(expect[i]).epsilon(1e-12));
    }
    SUBCASE("zero levels") {
        const PolarizationRun run = polarize_tree(arikan(), 0.37, 0, PolarizeMode::full_tree);
        REQUIRE(run.leaves.size() == 1);
        CHECK(run.leaves[0] == 0.37);
    }
    SUBCASE("mean is conserved") {
        const PolarizationRun run = polarize_tree(arikan(), 0.3, 10, PolarizeMode::full_tree);
        double mean = 0.0;
        for (double p : run.leaves) mean += p;
        mean /= static_cast<double>(run.leaves.size());
        CHECK(mean == doctest::Approx(0.3).epsilon(1e-9));
    }
    SUBCASE("guard") {
        CHECK_THROWS(polarize_tree(identity_kernel(1, 16), 0.5, 10, PolarizeMode::full_tree));
    }
}

TEST_CASE("full-tree leaves ignore the seed") {
    const PolarizationRun a = polarize_tree(arikan(), 0.4, 6, PolarizeMode::full_tree, 0, 1);
    const PolarizationRun b = polarize_tree(arikan(), 0.4, 6, PolarizeMode::full_tree, 0, 99);
    CHECK(a.leaves == b.leaves);
}

TEST_CASE("sampled paths are deterministic per seed") {
    const KernelMatrix K = arikan();
    const PolarizationRun a = polarize_tree(K, 0.5, 12, PolarizeMode::sampled_paths, 64, 7);
    const PolarizationRun b = polarize_tree(K, 0.5, 12, PolarizeMode::sampled_paths, 64, 7);
    const PolarizationRun c = polarize_tree(K, 0.5, 12, PolarizeMode::sampled_paths, 64, 8);
    REQUIRE(a.leaves.size() == 64);
    CHECK(a.leaves == b.leaves);
    CHECK(a.leaves != c.leaves);
    CHECK_THROWS(polarize_tree(K, 0.5, 2, PolarizeMode::sampled_paths, 0, 7));
}

TEST_CASE("rate diagnostic") {
    const PolarizationRun run = polarize_tree(arikan(), 0.5, 12, PolarizeMode::full_tree);
    SUBCASE("beta = 0 counts leaves below one half") {
        const auto diag = rate_diagnostic(run, {0.0});
        std::size_t below = 0;
        for (double p : run.leaves) below += p < 0.5;
        CHECK(diag[0].second ==
              doctest::Approx(static_cast<double>(below) / run.leaves.size()).epsilon(1e-15));
    }
    SUBCASE("fractions do not increase with beta") {
        std::vector<double> grid;
        for (int k = 0; k <= 10; ++k) grid.push_back(0.1 * k);
        const auto diag = rate_diagnostic(run, grid);
        for (std::size_t k = 1; k < diag.size(); ++k) CHECK(diag[k].second <= diag[k - 1].second + 1e-15);
    }
    SUBCASE("sampled runs are rejected") {
        const PolarizationRun s = polarize_tree(arikan(), 0.5, 4, PolarizeMode::sampled_paths, 8, 1);
        CHECK_THROWS(rate_diagnostic(s, {0.5}));
    }
}
