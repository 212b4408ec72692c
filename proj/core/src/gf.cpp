#include "agpolar/gf.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace agpolar {

namespace {

int poly_degree(std::uint64_t p) {
    return p == 0 ? -1 : 63 - std::countl_zero(p);
}

// Remainder of a modulo b over GF(2)[x].
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    const int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        a ^= b << (da - db);
    }
    return a;
}

} // namespace

bool Field::is_irreducible(std::uint32_t poly) {
    const int d = poly_degree(poly);
    if (d < 1) return false;
    if (d == 1) return true;
    // Trial division by every polynomial of degree 1..d/2. A reducible
    // polynomial of degree d has a factor in that range.
    for (int e = 1; 2 * e <= d; ++e) {
        for (std::uint32_t f = std::uint32_t{1} << e; f < (std::uint32_t{2} << e); ++f) {
            if (poly_mod(poly, f) == 0) return false;
        }
    }
    return true;
}

std::uint32_t Field::default_modulus(int m) {
    if (m < 1 || m > max_degree) {
        throw std::invalid_argument("Field: degree must be in [1, 24], got " + std::to_string(m));
    }
    // Constant term must be set: for m >= 2 that is implied by
    // irreducibility, and for m = 1 it picks x + 1 over x so that alpha is
    // never the zero class.
    for (std::uint32_t p = (std::uint32_t{1} << m) | 1; p < (std::uint32_t{2} << m); p += 2) {
        if (is_irreducible(p)) return p;
    }
    throw std::logic_error("Field: no irreducible polynomial found"); // unreachable
}

Field::Field(int m) : Field(m, default_modulus(m)) {}

Field::Field(int m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
    if (m < 1 || m > max_degree) {
        throw std::invalid_argument("Field: degree must be in [1, 24], got " + std::to_string(m));
    }
    if (poly_degree(modulus) != m) {
        throw std::invalid_argument("Field: modulus degree does not match m");
    }
    if (!is_irreducible(modulus)) {
        throw std::invalid_argument("Field: modulus is reducible");
    }
}

void Field::check_element(std::uint32_t a) const {
    if (a >= size()) {
        throw std::invalid_argument("Field: element value out of range");
    }
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    check_element(a);
    check_element(b);
    return a ^ b;
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    check_element(a);
    check_element(b);
    // Carry-less shift-and-add product, then reduction by the modulus.
    std::uint64_t acc = 0;
    std::uint64_t x = a;
    for (std::uint32_t y = b; y != 0; y >>= 1, x <<= 1) {
        if (y & 1) acc ^= x;
    }
    return static_cast<std::uint32_t>(poly_mod(acc, modulus_));
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    check_element(a);
    std::uint32_t result = 1;
    std::uint32_t base = a;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    check_element(a);
    if (a == 0) throw std::domain_error("Field: inverse of zero");
    return pow(a, size() - 2);
}

std::vector<std::uint8_t> Field::descend(std::uint32_t e) const {
    check_element(e);
    std::vector<std::uint8_t> bits(m_);
    for (int k = 0; k < m_; ++k) bits[k] = (e >> k) & 1;
    return bits;
}

std::uint32_t Field::ascend(const std::vector<std::uint8_t>& bits) const {
    if (static_cast<int>(bits.size()) != m_) {
        throw std::invalid_argument("Field: ascend expects exactly m bits");
    }
    std::uint32_t e = 0;
    for (int k = 0; k < m_; ++k) {
        if (bits[k] & 1) e |= std::uint32_t{1} << k;
    }
    return e;
}

namespace {

const Field& common_field(Element a, Element b) {
    if (a.field == nullptr || b.field == nullptr) {
        throw std::invalid_argument("Element: missing field context");
    }
    if (!(*a.field == *b.field)) {
        throw std::invalid_argument("Element: mixing field contexts");
    }
    return *a.field;
}

} // namespace

Element operator+(Element a, Element b) {
    const Field& f = common_field(a, b);
    return Element{f.add(a.value, b.value), a.field};
}

Element operator*(Element a, Element b) {
    const Field& f = common_field(a, b);
    return Element{f.mul(a.value, b.value), a.field};
}

bool operator==(Element a, Element b) {
    common_field(a, b);
    return a.value == b.value;
}

int subfield_degree(const std::vector<std::uint32_t>& elems, const Field& field) {
    if (elems.empty()) {
        throw std::invalid_argument("subfield_degree: empty element list");
    }
    const int m = field.degree();
    for (int k = 1; k <= m; ++k) {
        if (m % k != 0) continue;
        bool fixed = true;
        for (std::uint32_t e : elems) {
            // Frobenius applied k times: e -> e^(2^k).
            std::uint32_t t = e;
            for (int s = 0; s < k; ++s) t = field.mul(t, t);
            if (t != e) {
                fixed = false;
                break;
            }
        }
        if (fixed) return k;
    }
    return m; // k = m always fixes everything; not reached
}

} // namespace agpolar
