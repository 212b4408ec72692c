#pragma once

#include <cstdint>
#include <vector>

namespace agpolar {

/// Arithmetic context for a binary extension field GF(2^m), 1 <= m <= 24.
///
/// Elements are unsigned integers below 2^m; bit k of the value is the
/// coefficient of alpha^k in the polynomial basis, where alpha is a root of
/// the modulus. The modulus is encoded the same way with its leading bit set,
/// so GF(2) has modulus 3 (x + 1) and GF(4) has modulus 7 (x^2 + x + 1).
///
/// A Field is immutable after construction and all operations are pure, so a
/// single instance may be shared freely across threads.
class Field {
public:
    static constexpr int max_degree = 24;

    /// Context with the default modulus: the lexicographically smallest
    /// (i.e. numerically smallest when integer-encoded) irreducible
    /// polynomial of degree m over GF(2).
    explicit Field(int m);

    /// Context with a caller-supplied modulus. The modulus must have degree
    /// exactly m and be irreducible over GF(2).
    Field(int m, std::uint32_t modulus);

    int degree() const { return m_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint64_t size() const { return std::uint64_t{1} << m_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    /// Coordinates of e in the polynomial basis {1, alpha, ..., alpha^(m-1)};
    /// bit k of e lands at index k. GF(2)-linear.
    std::vector<std::uint8_t> descend(std::uint32_t e) const;
    /// Inverse of descend. The bit vector must have length m.
    std::uint32_t ascend(const std::vector<std::uint8_t>& bits) const;

    static std::uint32_t default_modulus(int m);
    static bool is_irreducible(std::uint32_t poly);

    bool operator==(const Field&) const = default;

private:
    void check_element(std::uint32_t a) const;

    int m_;
    std::uint32_t modulus_;
};

/// A field element bound to its context. Scalar convenience layer on top of
/// Field; bulk code (matrices, enumeration) works on raw values instead.
struct Element {
    std::uint32_t value = 0;
    const Field* field = nullptr;
};

Element operator+(Element a, Element b);
Element operator*(Element a, Element b);
bool operator==(Element a, Element b);

/// Degree over GF(2) of the subfield generated by the listed elements: the
/// smallest divisor k of m such that e^(2^k) == e for every element.
int subfield_degree(const std::vector<std::uint32_t>& elems, const Field& field);

} // namespace agpolar
