#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "agpolar/curves.hpp"
#include "agpolar/gf.hpp"

namespace agpolar {

/// Square invertible matrix over GF(2^m) used as a polarization kernel.
///
/// When built from a curve, rows are sorted by strictly decreasing pole
/// order, so rows i+1..L span the evaluations of the functions with the
/// L-i smallest selected pole orders; pole_orders records the per-row
/// orders in that (descending) order. Kernels loaded from files or produced
/// by binary descent may have no pole orders.
struct KernelMatrix {
    Field field;
    int size = 0;
    std::vector<std::uint32_t> entries; // row-major, size*size
    std::vector<long long> pole_orders; // descending, or empty
    long long genus = 0;

    KernelMatrix() : field(1) {}
    KernelMatrix(Field f, int L) : field(f), size(L), entries(static_cast<std::size_t>(L) * L, 0) {}

    std::uint32_t at(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * size + c];
    }
    std::uint32_t& at(int r, int c) {
        return entries[static_cast<std::size_t>(r) * size + c];
    }
    const std::uint32_t* row(int r) const {
        return entries.data() + static_cast<std::size_t>(r) * size;
    }
};

/// Rank of an r x c row-major matrix over the field.
int mat_rank(const Field& field, std::vector<std::uint32_t> mat, int rows, int cols);

/// Product of two n x n row-major matrices over the field.
std::vector<std::uint32_t> mat_mul(const Field& field, const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b, int n);

/// Evaluation kernel of a curve: iterate nongaps in ascending order, evaluate
/// each basis monomial at all L points, keep rows that increase the rank,
/// stop at L rows, then reverse so the largest pole order comes first. The
/// result is invertible by construction.
KernelMatrix build_kernel(const CurveSpec& spec, const Field& field);

/// Binary image of K under the (m, m, 1) inner code: each source row g_i
/// expands to the m rows descend(alpha^k * g_i), k = 0..m-1, blocks in K's
/// row order. The output is an mL x mL invertible matrix over GF(2).
KernelMatrix descend_binary(const KernelMatrix& K);

/// G = lower * upper * perm with `lower` lower triangular (nonzero
/// diagonal), `upper` upper triangular invertible, and `perm` a column
/// permutation: column c of the permutation matrix P has its 1 in row
/// perm[c], i.e. (A P)[r][c] = A[r][perm[c]].
struct LupDecomposition {
    KernelMatrix lower;
    std::vector<std::uint32_t> upper; // size x size, row-major
    std::vector<int> perm;
};

LupDecomposition lup_lower(const KernelMatrix& G);

/// True iff no column permutation of G is upper triangular (the polarization
/// condition over prime fields). With r(c) the last nonzero row of column c
/// (1-based), a permutation to upper triangular exists iff
/// #{c : r(c) <= j} >= j for every j.
bool polarizes_prime(const KernelMatrix& G);

/// Polarization test over non-prime GF(2^m), m >= 2: reduce G to lower
/// triangular form via lup_lower and check that the entries of the lower
/// factor generate the full field.
bool polarizes_nonprime(const KernelMatrix& G);

/// Text kernel format:
///   line 1:      m=<int> L=<int> poly=<int>
///   lines 2..L+1: L space-separated integer entries, row-major
///   optional:    poles=<int,int,...>  (descending)
std::string format_kernel(const KernelMatrix& K);
void write_kernel_file(const KernelMatrix& K, const std::string& path);
KernelMatrix parse_kernel(std::istream& in);
KernelMatrix read_kernel_file(const std::string& path);

} // namespace agpolar
