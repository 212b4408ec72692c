#include "agpolar/curves.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace agpolar {

namespace {

bool is_power_of_two(long long v) {
    return v > 0 && std::has_single_bit(static_cast<std::uint64_t>(v));
}

int log2_exact(long long v) {
    return std::countr_zero(static_cast<std::uint64_t>(v));
}

} // namespace

const char* family_name(CurveFamily family) {
    switch (family) {
        case CurveFamily::rational: return "rational";
        case CurveFamily::hermitian: return "hermitian";
        case CurveFamily::suzuki: return "suzuki";
    }
    return "?";
}

int CurveSpec::field_degree() const {
    return log2_exact(q);
}

Field CurveSpec::field() const {
    return Field(field_degree());
}

CurveSpec curve_spec(CurveFamily family, long long q0, int m_for_rational) {
    CurveSpec spec;
    spec.family = family;
    switch (family) {
        case CurveFamily::rational:
            if (m_for_rational < 1 || m_for_rational > Field::max_degree) {
                throw std::invalid_argument("curve_spec: rational family needs 1 <= m <= 24");
            }
            spec.q0 = 0;
            spec.q = 1ll << m_for_rational;
            spec.L = spec.q;
            spec.g = 0;
            spec.generators = {1};
            break;
        case CurveFamily::hermitian:
            if (q0 < 2 || !is_power_of_two(q0)) {
                throw std::invalid_argument("curve_spec: q0 must be a power of two >= 2");
            }
            spec.q0 = q0;
            spec.q = q0 * q0;
            spec.L = q0 * q0 * q0;
            spec.g = q0 * (q0 - 1) / 2;
            spec.generators = {q0, q0 + 1};
            break;
        case CurveFamily::suzuki:
            if (q0 < 2 || !is_power_of_two(q0)) {
                throw std::invalid_argument("curve_spec: q0 must be a power of two >= 2");
            }
            spec.q0 = q0;
            spec.q = 2 * q0 * q0;
            spec.L = spec.q * spec.q;
            spec.g = q0 * (spec.q - 1);
            spec.generators = {spec.q, spec.q + q0, spec.q + 2 * q0, spec.q + 2 * q0 + 1};
            break;
    }
    return spec;
}

std::vector<CurvePoint> enumerate_points(const CurveSpec& spec, const Field& field) {
    if (field.size() != static_cast<std::uint64_t>(spec.q)) {
        throw std::invalid_argument("enumerate_points: field size does not match spec.q");
    }
    const std::uint32_t q = static_cast<std::uint32_t>(spec.q);
    std::vector<CurvePoint> points;
    points.reserve(static_cast<std::size_t>(spec.L));

    switch (spec.family) {
        case CurveFamily::rational:
            for (std::uint32_t x = 0; x < q; ++x) points.push_back({x, 0});
            break;
        case CurveFamily::hermitian: {
            // Keep (x, y) with y^q0 + y = x^(q0+1); the scan order is already
            // lexicographic.
            const std::uint64_t q0 = static_cast<std::uint64_t>(spec.q0);
            for (std::uint32_t x = 0; x < q; ++x) {
                const std::uint32_t rhs = field.pow(x, q0 + 1);
                for (std::uint32_t y = 0; y < q; ++y) {
                    if (field.add(field.pow(y, q0), y) == rhs) points.push_back({x, y});
                }
            }
            break;
        }
        case CurveFamily::suzuki: {
            // y^q - y and x^q0 (x^q - x) both vanish identically on GF(q)^2,
            // so every pair is a point. Assert the identity anyway.
            const std::uint64_t q0 = static_cast<std::uint64_t>(spec.q0);
            for (std::uint32_t x = 0; x < q; ++x) {
                for (std::uint32_t y = 0; y < q; ++y) {
                    const std::uint32_t lhs = field.add(field.pow(y, q), y);
                    const std::uint32_t rhs =
                        field.mul(field.pow(x, q0), field.add(field.pow(x, q), x));
                    if (lhs != rhs) {
                        throw std::logic_error("enumerate_points: suzuki identity violated");
                    }
                    points.push_back({x, y});
                }
            }
            break;
        }
    }

    if (points.size() != static_cast<std::size_t>(spec.L)) {
        throw std::logic_error("enumerate_points: point count " + std::to_string(points.size()) +
                               " does not equal L = " + std::to_string(spec.L));
    }
    return points;
}

namespace {

void check_generators(const std::vector<long long>& generators) {
    if (generators.empty()) {
        throw std::invalid_argument("semigroup: empty generator set");
    }
    long long d = 0;
    for (long long g : generators) {
        if (g <= 0) throw std::invalid_argument("semigroup: generators must be positive");
        d = std::gcd(d, g);
    }
    if (d != 1) throw std::invalid_argument("semigroup: generators must have gcd 1");
}

// Sieve membership flags for 0..bound.
std::vector<char> sieve_semigroup(const std::vector<long long>& generators, long long bound) {
    std::vector<char> in(static_cast<std::size_t>(bound) + 1, 0);
    in[0] = 1;
    for (long long n = 1; n <= bound; ++n) {
        for (long long g : generators) {
            if (g <= n && in[static_cast<std::size_t>(n - g)]) {
                in[static_cast<std::size_t>(n)] = 1;
                break;
            }
        }
    }
    return in;
}

} // namespace

std::vector<long long> semigroup_nongaps(const std::vector<long long>& generators, int count) {
    check_generators(generators);
    if (count < 1) throw std::invalid_argument("semigroup_nongaps: count must be positive");
    const long long gmin = *std::min_element(generators.begin(), generators.end());
    const long long gmax = *std::max_element(generators.begin(), generators.end());
    // Everything at and beyond gmin*gmax is a nongap, so this bound suffices
    // for any count once extended by the overshoot.
    long long bound = gmin * gmax + count;
    std::vector<char> in = sieve_semigroup(generators, bound);
    std::vector<long long> nongaps;
    nongaps.reserve(count);
    for (long long n = 0; n <= bound && static_cast<int>(nongaps.size()) < count; ++n) {
        if (in[static_cast<std::size_t>(n)]) nongaps.push_back(n);
    }
    if (static_cast<int>(nongaps.size()) < count) {
        throw std::logic_error("semigroup_nongaps: sieve bound too small"); // unreachable
    }
    return nongaps;
}

long long semigroup_gap_count(const std::vector<long long>& generators) {
    check_generators(generators);
    const long long gmin = *std::min_element(generators.begin(), generators.end());
    const long long gmax = *std::max_element(generators.begin(), generators.end());
    const long long bound = gmin * gmax;
    std::vector<char> in = sieve_semigroup(generators, bound);
    // Past a run of gmin consecutive nongaps every integer is a nongap.
    long long gaps = 0;
    long long run = 0;
    for (long long n = 1; n <= bound; ++n) {
        if (in[static_cast<std::size_t>(n)]) {
            if (++run >= gmin) return gaps;
        } else {
            run = 0;
            ++gaps;
        }
    }
    return gaps;
}

namespace {

Monomial hermitian_monomial(const CurveSpec& spec, long long pole) {
    // pole = i*q0 + j*(q0+1) with 0 <= j <= q0-1 forces j = pole mod q0.
    const long long q0 = spec.q0;
    const long long j = pole % q0;
    const long long i = (pole - j * (q0 + 1)) / q0;
    if (i < 0 || i * q0 + j * (q0 + 1) != pole) {
        throw std::logic_error("function_basis: no hermitian representative for pole order " +
                               std::to_string(pole));
    }
    return Monomial{{i, j}, pole};
}

Monomial suzuki_monomial(const CurveSpec& spec, long long pole) {
    // Pole orders of x, y, z, w. Scan (d, c, b) in lexicographic order and
    // solve for a; the first hit is the smallest (d, c, b, a).
    const long long px = spec.q;
    const long long py = spec.q + spec.q0;
    const long long pz = spec.q + 2 * spec.q0;
    const long long pw = spec.q + 2 * spec.q0 + 1;
    for (long long d = 0; d * pw <= pole; ++d) {
        for (long long c = 0; d * pw + c * pz <= pole; ++c) {
            for (long long b = 0; d * pw + c * pz + b * py <= pole; ++b) {
                const long long rest = pole - d * pw - c * pz - b * py;
                if (rest % px == 0) {
                    return Monomial{{rest / px, b, c, d}, pole};
                }
            }
        }
    }
    throw std::logic_error("function_basis: no suzuki representative for pole order " +
                           std::to_string(pole));
}

} // namespace

std::vector<Monomial> function_basis(const CurveSpec& spec, int count) {
    if (count < 1) throw std::invalid_argument("function_basis: count must be positive");
    const std::vector<long long> nongaps = semigroup_nongaps(spec.generators, count);
    std::vector<Monomial> basis;
    basis.reserve(nongaps.size());
    for (long long pole : nongaps) {
        switch (spec.family) {
            case CurveFamily::rational:
                basis.push_back(Monomial{{pole}, pole});
                break;
            case CurveFamily::hermitian:
                basis.push_back(hermitian_monomial(spec, pole));
                break;
            case CurveFamily::suzuki:
                basis.push_back(suzuki_monomial(spec, pole));
                break;
        }
    }
    return basis;
}

std::uint32_t evaluate(const Monomial& mono, const CurvePoint& p, const CurveSpec& spec,
                       const Field& field) {
    switch (spec.family) {
        case CurveFamily::rational:
            return field.pow(p.x, static_cast<std::uint64_t>(mono.exponents.at(0)));
        case CurveFamily::hermitian: {
            const std::uint32_t xi = field.pow(p.x, static_cast<std::uint64_t>(mono.exponents.at(0)));
            const std::uint32_t yj = field.pow(p.y, static_cast<std::uint64_t>(mono.exponents.at(1)));
            return field.mul(xi, yj);
        }
        case CurveFamily::suzuki: {
            // z = x^(2q0+1) - y^(2q0), w = x y^(2q0) - z^(2q0); minus is plus
            // in characteristic 2.
            const std::uint64_t q0 = static_cast<std::uint64_t>(spec.q0);
            const std::uint32_t z =
                field.add(field.pow(p.x, 2 * q0 + 1), field.pow(p.y, 2 * q0));
            const std::uint32_t w =
                field.add(field.mul(p.x, field.pow(p.y, 2 * q0)), field.pow(z, 2 * q0));
            std::uint32_t v = field.pow(p.x, static_cast<std::uint64_t>(mono.exponents.at(0)));
            v = field.mul(v, field.pow(p.y, static_cast<std::uint64_t>(mono.exponents.at(1))));
            v = field.mul(v, field.pow(z, static_cast<std::uint64_t>(mono.exponents.at(2))));
            v = field.mul(v, field.pow(w, static_cast<std::uint64_t>(mono.exponents.at(3))));
            return v;
        }
    }
    throw std::logic_error("evaluate: unknown family");
}

} // namespace agpolar
