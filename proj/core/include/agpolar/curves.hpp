#pragma once

#include <cstdint>
#include <vector>

#include "agpolar/gf.hpp"

namespace agpolar {

enum class CurveFamily { rational, hermitian, suzuki };

const char* family_name(CurveFamily family);

/// One of the three curve families with its derived constants:
///
///   rational   projective line over GF(2^m): L = q, g = 0
///   hermitian  y^q0 + y = x^(q0+1) over GF(q0^2): L = q0^3, g = q0(q0-1)/2
///   suzuki     y^q - y = x^q0 (x^q - x) over GF(2 q0^2): L = q^2, g = q0(q-1)
///
/// `generators` generate the Weierstrass semigroup of pole orders at the
/// point at infinity.
struct CurveSpec {
    CurveFamily family;
    long long q0 = 0; // unused for rational
    long long q = 0;
    long long L = 0;
    long long g = 0;
    std::vector<long long> generators;

    /// Extension degree m with q = 2^m.
    int field_degree() const;
    /// Field over GF(2^m) with the default modulus.
    Field field() const;
};

/// Build a CurveSpec. q0 must be a power of two >= 2 for hermitian and
/// suzuki; m_for_rational >= 1 selects GF(2^m) for the rational family
/// (q0 is ignored there).
CurveSpec curve_spec(CurveFamily family, long long q0, int m_for_rational = 0);

/// Affine point. y is unused for the rational family.
struct CurvePoint {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
};

/// All affine rational points, ordered lexicographically by (x, y) as
/// integers. Exactly spec.L points; every point satisfies the defining
/// equation.
std::vector<CurvePoint> enumerate_points(const CurveSpec& spec, const Field& field);

/// First `count` elements (starting at 0) of the numerical semigroup
/// generated by `generators`, ascending. The generators must be coprime
/// overall (gcd 1).
std::vector<long long> semigroup_nongaps(const std::vector<long long>& generators, int count);

/// Number of positive integers missing from the semigroup. Finite since the
/// generators are coprime; equals the curve genus for the three families.
long long semigroup_gap_count(const std::vector<long long>& generators);

/// Monomial in the coordinate functions, one per nongap:
///   rational   x^k                exponents (k)
///   hermitian  x^i y^j            exponents (i, j), j <= q0-1
///   suzuki     x^a y^b z^c w^d    exponents (a, b, c, d)
/// where z = x^(2 q0 + 1) - y^(2 q0) and w = x y^(2 q0) - z^(2 q0).
struct Monomial {
    std::vector<long long> exponents;
    long long pole_order = 0;
};

/// One monomial per nongap for the `count` smallest nongaps, ascending pole
/// order. Representatives: rational k is unique; hermitian the unique (i, j)
/// with j <= q0-1; suzuki the lexicographically smallest (d, c, b, a).
std::vector<Monomial> function_basis(const CurveSpec& spec, int count);

/// Value of the monomial's function at an affine point.
std::uint32_t evaluate(const Monomial& mono, const CurvePoint& p, const CurveSpec& spec,
                       const Field& field);

} // namespace agpolar
