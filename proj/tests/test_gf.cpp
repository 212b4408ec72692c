#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "agpolar/gf.hpp"

using namespace agpolar;

namespace {

// Independent polynomial arithmetic over GF(2) on coefficient vectors, used
// as the oracle for the bitwise implementation.
std::vector<int> to_coeffs(std::uint64_t p) {
    std::vector<int> c;
    while (p) {
        c.push_back(static_cast<int>(p & 1));
        p >>= 1;
    }
    return c;
}

std::uint64_t from_coeffs(const std::vector<int>& c) {
    std::uint64_t p = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] & 1) p |= std::uint64_t{1} << i;
    }
    return p;
}

std::uint64_t oracle_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    const auto ca = to_coeffs(a), cb = to_coeffs(b), cm = to_coeffs(mod);
    std::vector<int> prod(ca.size() + cb.size(), 0);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        for (std::size_t j = 0; j < cb.size(); ++j) prod[i + j] ^= ca[i] & cb[j];
    }
    // long division by the modulus
    for (int d = static_cast<int>(prod.size()) - 1; d >= static_cast<int>(cm.size()) - 1; --d) {
        if (!prod[d]) continue;
        const int shift = d - (static_cast<int>(cm.size()) - 1);
        for (std::size_t k = 0; k < cm.size(); ++k) prod[shift + k] ^= cm[k];
    }
    return from_coeffs(prod);
}

bool oracle_irreducible(std::uint32_t poly) {
    int deg = 0;
    while ((std::uint64_t{1} << (deg + 1)) <= poly) ++deg;
    if (deg < 1) return false;
    for (std::uint32_t f = 2; f < poly; ++f) {
        int fdeg = 0;
        while ((std::uint64_t{1} << (fdeg + 1)) <= f) ++fdeg;
        if (fdeg == 0 || fdeg >= deg) continue;
        // divide poly by f via the coefficient oracle: remainder of poly*1
        if (oracle_mulmod(poly, 1, f) == 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("default moduli for small degrees") {
    CHECK(Field::default_modulus(1) == 3);  // x + 1
    CHECK(Field::default_modulus(2) == 7);  // x^2 + x + 1
    CHECK(Field::default_modulus(4) == 19); // x^4 + x + 1
}

TEST_CASE("default moduli are the smallest irreducible with nonzero constant term") {
    for (int m = 1; m <= 12; ++m) {
        const std::uint32_t mod = Field::default_modulus(m);
        CHECK(oracle_irreducible(mod));
        for (std::uint32_t p = std::uint32_t{1} << m; p < mod; ++p) {
            const bool smaller_candidate = (p & 1) != 0 && oracle_irreducible(p);
            CHECK_FALSE(smaller_candidate);
        }
    }
}

TEST_CASE("every supported degree constructs") {
    for (int m = 1; m <= 24; ++m) {
        const Field f(m); // construction re-verifies irreducibility
        CHECK(f.size() == (std::uint64_t{1} << m));
        const std::uint32_t top = f.modulus() >> m;
        const std::uint32_t constant = f.modulus() & 1;
        CHECK(top == 1); // degree exactly m
        CHECK(constant == 1);
    }
}

TEST_CASE("constructor rejects bad arguments") {
    CHECK_THROWS(Field(0));
    CHECK_THROWS(Field(25));
    CHECK_THROWS(Field(4, 17)); // x^4 + 1 = (x+1)^4
    CHECK_THROWS(Field(4, 7));  // degree mismatch
}

TEST_CASE("multiplication matches the polynomial oracle") {
    Field f4(2);
    CHECK(f4.mul(2, 2) == 3); // alpha * alpha = alpha + 1
    Field f8(3, 11);
    CHECK(f8.mul(2, 2) == 4); // alpha^2, no reduction

    for (int m : {2, 3, 4, 5}) {
        Field f(m);
        for (std::uint32_t a = 0; a < f.size(); ++a) {
            for (std::uint32_t b = a; b < f.size(); ++b) {
                CHECK(f.mul(a, b) == oracle_mulmod(a, b, f.modulus()));
            }
        }
    }
}

TEST_CASE("characteristic two: a + a = 0") {
    Field f(5);
    for (std::uint32_t a = 0; a < f.size(); ++a) CHECK(f.add(a, a) == 0);
}

TEST_CASE("field axioms, exhaustive for small degrees") {
    for (int m : {1, 2, 3, 4}) {
        Field f(m);
        const std::uint32_t q = static_cast<std::uint32_t>(f.size());
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (std::uint32_t c = 0; c < q; ++c) {
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("inverses and the multiplicative group order, exhaustive to m = 8") {
    for (int m : {1, 2, 3, 5, 8}) {
        Field f(m);
        for (std::uint32_t a = 1; a < f.size(); ++a) {
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.pow(a, f.size() - 1) == 1);
        }
    }
    CHECK_THROWS(Field(3).inv(0));
    CHECK(Field(6).pow(0, 0) == 1);
}

TEST_CASE("element wrapper rejects mixed contexts") {
    Field f4(2), f8(3), f16a(4, 19), f16b(4, 25);
    Element a{1, &f4}, b{2, &f8};
    CHECK_THROWS(a + b);
    CHECK_THROWS(a * b);
    Element c{3, &f16a}, d{3, &f16b}; // same degree, different modulus
    CHECK_THROWS(c + d);
    Element e{2, &f4}, g{2, &f4};
    CHECK((e * g) == Element{3, &f4});
}

TEST_CASE("descend and ascend") {
    Field f4(2);
    CHECK(f4.descend(0) == std::vector<std::uint8_t>{0, 0});
    CHECK(f4.descend(3) == std::vector<std::uint8_t>{1, 1});
    CHECK_THROWS(f4.ascend(std::vector<std::uint8_t>{1, 0, 1}));

    for (int m : {1, 2, 3, 4, 6, 8}) {
        Field f(m);
        for (std::uint32_t e = 0; e < f.size(); ++e) CHECK(f.ascend(f.descend(e)) == e);
    }
}

TEST_CASE("descend is GF(2)-linear, exhaustive to m = 4") {
    for (int m : {1, 2, 3, 4}) {
        Field f(m);
        for (std::uint32_t a = 0; a < f.size(); ++a) {
            for (std::uint32_t b = 0; b < f.size(); ++b) {
                const auto da = f.descend(a), db = f.descend(b), ds = f.descend(f.add(a, b));
                for (int k = 0; k < m; ++k) CHECK(ds[k] == (da[k] ^ db[k]));
            }
        }
    }
}

TEST_CASE("subfield degree") {
    Field f4(2);
    CHECK(subfield_degree({0, 1}, f4) == 1);
    CHECK(subfield_degree({2}, f4) == 2); // alpha generates GF(4)

    Field f16(4);
    const std::uint32_t a5 = f16.pow(2, 5);
    CHECK(subfield_degree({a5}, f16) == 2); // alpha^5 has order 3

    CHECK_THROWS(subfield_degree({}, f4));

    Field f12(12);
    for (std::uint32_t e : {0u, 1u, 2u, 57u, 4000u}) {
        CHECK(12 % subfield_degree({e}, f12) == 0);
    }
}
