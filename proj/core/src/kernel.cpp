#include "agpolar/kernel.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace agpolar {

int mat_rank(const Field& field, std::vector<std::uint32_t> mat, int rows, int cols) {
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (mat[static_cast<std::size_t>(r) * cols + c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        for (int k = 0; k < cols; ++k) {
            std::swap(mat[static_cast<std::size_t>(pivot) * cols + k],
                      mat[static_cast<std::size_t>(rank) * cols + k]);
        }
        const std::uint32_t inv = field.inv(mat[static_cast<std::size_t>(rank) * cols + c]);
        for (int r = rank + 1; r < rows; ++r) {
            const std::uint32_t v = mat[static_cast<std::size_t>(r) * cols + c];
            if (v == 0) continue;
            const std::uint32_t f = field.mul(v, inv);
            for (int k = c; k < cols; ++k) {
                std::uint32_t& cell = mat[static_cast<std::size_t>(r) * cols + k];
                cell = field.add(cell, field.mul(f, mat[static_cast<std::size_t>(rank) * cols + k]));
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<std::uint32_t> mat_mul(const Field& field, const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b, int n) {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const std::uint32_t aik = a[static_cast<std::size_t>(i) * n + k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) {
                const std::uint32_t bkj = b[static_cast<std::size_t>(k) * n + j];
                if (bkj == 0) continue;
                std::uint32_t& cell = out[static_cast<std::size_t>(i) * n + j];
                cell = field.add(cell, field.mul(aik, bkj));
            }
        }
    }
    return out;
}

namespace {

// Incremental row-echelon basis over a field, used for rank-repair during
// kernel construction.
class EchelonBasis {
public:
    EchelonBasis(const Field& field, int width) : field_(field), width_(width) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    // Returns true (and absorbs the reduced row) if `row` is independent of
    // the current basis.
    bool try_insert(std::vector<std::uint32_t> row) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const std::uint32_t v = row[static_cast<std::size_t>(pivots_[i])];
            if (v == 0) continue;
            for (int k = 0; k < width_; ++k) {
                row[k] = field_.add(row[k], field_.mul(v, rows_[i][k]));
            }
        }
        int pivot = -1;
        for (int k = 0; k < width_; ++k) {
            if (row[k] != 0) {
                pivot = k;
                break;
            }
        }
        if (pivot < 0) return false;
        const std::uint32_t inv = field_.inv(row[static_cast<std::size_t>(pivot)]);
        for (int k = 0; k < width_; ++k) row[k] = field_.mul(row[k], inv);
        rows_.push_back(std::move(row));
        pivots_.push_back(pivot);
        return true;
    }

private:
    const Field& field_;
    int width_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<int> pivots_;
};

} // namespace

KernelMatrix build_kernel(const CurveSpec& spec, const Field& field) {
    if (field.size() != static_cast<std::uint64_t>(spec.q)) {
        throw std::invalid_argument("build_kernel: field size does not match spec.q");
    }
    const int L = static_cast<int>(spec.L);
    const std::vector<CurvePoint> points = enumerate_points(spec, field);

    std::vector<std::vector<std::uint32_t>> kept_rows;
    std::vector<long long> kept_poles;
    EchelonBasis basis(field, L);

    // The evaluation map of the full function field is onto GF(q)^L, so L
    // independent rows appear well before this cap.
    const int max_candidates = 4 * (L + static_cast<int>(spec.g)) + 16;
    int supply = L + static_cast<int>(spec.g) + 1;
    std::vector<Monomial> monos = function_basis(spec, supply);
    for (int idx = 0; basis.rank() < L; ++idx) {
        if (idx >= max_candidates) {
            throw std::logic_error("build_kernel: nongap supply exhausted before full rank");
        }
        if (idx >= supply) {
            supply *= 2;
            monos = function_basis(spec, supply);
        }
        std::vector<std::uint32_t> row(static_cast<std::size_t>(L));
        for (int j = 0; j < L; ++j) row[j] = evaluate(monos[idx], points[j], spec, field);
        if (basis.try_insert(row)) {
            kept_rows.push_back(std::move(row));
            kept_poles.push_back(monos[idx].pole_order);
        }
    }

    KernelMatrix K(field, L);
    K.genus = spec.g;
    K.pole_orders.assign(kept_poles.rbegin(), kept_poles.rend());
    for (int i = 0; i < L; ++i) {
        const std::vector<std::uint32_t>& src = kept_rows[static_cast<std::size_t>(L - 1 - i)];
        std::copy(src.begin(), src.end(), K.entries.begin() + static_cast<std::size_t>(i) * L);
    }
    return K;
}

KernelMatrix descend_binary(const KernelMatrix& K) {
    const int m = K.field.degree();
    const int L = K.size;
    const int n = m * L;
    KernelMatrix out(Field(1), n);
    out.genus = K.genus;
    for (int i = 0; i < L; ++i) {
        for (int k = 0; k < m; ++k) {
            // alpha^k; k stays 0 over GF(2) where alpha itself is not an element.
            const std::uint32_t alpha_k =
                k == 0 ? 1u : K.field.pow(2u, static_cast<std::uint64_t>(k));
            for (int j = 0; j < L; ++j) {
                const std::uint32_t e = K.field.mul(alpha_k, K.at(i, j));
                for (int t = 0; t < m; ++t) {
                    out.at(i * m + k, j * m + t) = (e >> t) & 1;
                }
            }
        }
    }
    return out;
}

LupDecomposition lup_lower(const KernelMatrix& G) {
    const Field& field = G.field;
    const int n = G.size;
    if (mat_rank(field, G.entries, n, n) != n) {
        throw std::invalid_argument("lup_lower: matrix is singular");
    }

    // Pass 1: discover the pivot column for each row by running the column
    // elimination on a scratch copy.
    std::vector<std::uint32_t> a = G.entries;
    std::vector<int> pivot_of_row(n);
    std::vector<int> colpos(n); // current position -> original column
    for (int c = 0; c < n; ++c) colpos[c] = c;
    auto col_swap = [&](std::vector<std::uint32_t>& mat, int c1, int c2) {
        for (int r = 0; r < n; ++r) {
            std::swap(mat[static_cast<std::size_t>(r) * n + c1],
                      mat[static_cast<std::size_t>(r) * n + c2]);
        }
    };
    for (int i = 0; i < n; ++i) {
        int p = -1;
        for (int c = i; c < n; ++c) {
            if (a[static_cast<std::size_t>(i) * n + c] != 0) {
                p = c;
                break;
            }
        }
        if (p < 0) throw std::logic_error("lup_lower: pivot search failed");
        col_swap(a, i, p);
        std::swap(colpos[i], colpos[p]);
        pivot_of_row[i] = colpos[i];
        const std::uint32_t inv = field.inv(a[static_cast<std::size_t>(i) * n + i]);
        for (int c = i + 1; c < n; ++c) {
            const std::uint32_t v = a[static_cast<std::size_t>(i) * n + c];
            if (v == 0) continue;
            const std::uint32_t f = field.mul(v, inv);
            for (int r = 0; r < n; ++r) {
                std::uint32_t& cell = a[static_cast<std::size_t>(r) * n + c];
                cell = field.add(cell, field.mul(f, a[static_cast<std::size_t>(r) * n + i]));
            }
        }
    }

    // perm: column c of P holds its 1 in row perm[c], so (A P)[r][c] =
    // A[r][perm[c]]. We want G = Lower * Upper * P, i.e. G with columns
    // un-permuted equals Lower * Upper; position i of the eliminated matrix
    // came from original column pivot_of_row[i].
    //
    // Pass 2: eliminate B := G * P^(-1) (pivots on the diagonal) without
    // swaps while accumulating the inverse column operations.
    std::vector<int> perm(n);
    // (G P^-1)[r][i] = G[r][pivot_of_row[i]] and P^-1 = P^T, so P has its 1
    // for column pivot_of_row[i] in row i: perm[pivot_of_row[i]] = i.
    std::vector<std::uint32_t> b(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) perm[pivot_of_row[i]] = i;
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i < n; ++i) {
            b[static_cast<std::size_t>(r) * n + i] =
                G.entries[static_cast<std::size_t>(r) * n + pivot_of_row[i]];
        }
    }

    // uinv accumulates the applied operations: B * uinv stays current.
    std::vector<std::uint32_t> uinv(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) uinv[static_cast<std::size_t>(i) * n + i] = 1;
    for (int i = 0; i < n; ++i) {
        const std::uint32_t d = b[static_cast<std::size_t>(i) * n + i];
        if (d == 0) throw std::logic_error("lup_lower: zero diagonal after permutation");
        const std::uint32_t inv = field.inv(d);
        for (int c = i + 1; c < n; ++c) {
            const std::uint32_t v = b[static_cast<std::size_t>(i) * n + c];
            if (v == 0) continue;
            const std::uint32_t f = field.mul(v, inv);
            for (int r = 0; r < n; ++r) {
                std::uint32_t& cell = b[static_cast<std::size_t>(r) * n + c];
                cell = field.add(cell, field.mul(f, b[static_cast<std::size_t>(r) * n + i]));
                std::uint32_t& ucell = uinv[static_cast<std::size_t>(r) * n + c];
                ucell = field.add(ucell, field.mul(f, uinv[static_cast<std::size_t>(r) * n + i]));
            }
        }
    }

    // Invert the accumulated upper-triangular uinv by back substitution;
    // the inverse is again upper triangular and B_original = Lower * Upper.
    std::vector<std::uint32_t> upper(static_cast<std::size_t>(n) * n, 0);
    for (int c = n - 1; c >= 0; --c) {
        std::vector<std::uint32_t> col(static_cast<std::size_t>(n), 0);
        col[c] = 1;
        for (int r = c; r >= 0; --r) {
            std::uint32_t s = col[r];
            for (int k = r + 1; k <= c; ++k) {
                s = field.add(s, field.mul(uinv[static_cast<std::size_t>(r) * n + k], col[k]));
            }
            col[r] = field.mul(s, field.inv(uinv[static_cast<std::size_t>(r) * n + r]));
        }
        for (int r = 0; r <= c; ++r) upper[static_cast<std::size_t>(r) * n + c] = col[r];
    }

    LupDecomposition out{KernelMatrix(field, n), std::move(upper), std::move(perm)};
    out.lower.entries = std::move(b);
    return out;
}

bool polarizes_prime(const KernelMatrix& G) {
    const int n = G.size;
    if (mat_rank(G.field, G.entries, n, n) != n) {
        throw std::invalid_argument("polarizes_prime: matrix is singular");
    }
    // last_row[c]: 1-based index of the last nonzero row of column c.
    std::vector<int> last_row(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < n; ++c) {
        for (int r = n - 1; r >= 0; --r) {
            if (G.at(r, c) != 0) {
                last_row[c] = r + 1;
                break;
            }
        }
    }
    // A column permutation making G upper triangular exists iff for every j,
    // at least j columns end at row j or earlier.
    std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
    for (int c = 0; c < n; ++c) ++count[last_row[c]];
    int cum = 0;
    for (int j = 1; j <= n; ++j) {
        cum += count[j];
        if (cum < j) return true; // no upper-triangular permutation
    }
    return false;
}

bool polarizes_nonprime(const KernelMatrix& G) {
    if (G.field.degree() < 2) {
        throw std::invalid_argument("polarizes_nonprime: use polarizes_prime over GF(2)");
    }
    const LupDecomposition lup = lup_lower(G);
    return subfield_degree(lup.lower.entries, G.field) == G.field.degree();
}

std::string format_kernel(const KernelMatrix& K) {
    std::ostringstream out;
    out << "m=" << K.field.degree() << " L=" << K.size << " poly=" << K.field.modulus() << "\n";
    for (int r = 0; r < K.size; ++r) {
        for (int c = 0; c < K.size; ++c) {
            if (c) out << ' ';
            out << K.at(r, c);
        }
        out << "\n";
    }
    if (!K.pole_orders.empty()) {
        out << "poles=";
        for (std::size_t i = 0; i < K.pole_orders.size(); ++i) {
            if (i) out << ',';
            out << K.pole_orders[i];
        }
        out << "\n";
    }
    return out.str();
}

void write_kernel_file(const KernelMatrix& K, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << format_kernel(K);
}

KernelMatrix parse_kernel(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("kernel file: empty input");
    int m = -1, L = -1;
    long long poly = -1;
    {
        std::istringstream head(line);
        std::string tok;
        while (head >> tok) {
            if (tok.rfind("m=", 0) == 0) m = std::stoi(tok.substr(2));
            else if (tok.rfind("L=", 0) == 0) L = std::stoi(tok.substr(2));
            else if (tok.rfind("poly=", 0) == 0) poly = std::stoll(tok.substr(5));
            else throw std::runtime_error("kernel file: unexpected header token '" + tok + "'");
        }
    }
    if (m < 1 || L < 1 || poly < 0) {
        throw std::runtime_error("kernel file: header must contain m=, L=, poly=");
    }
    Field field(m, static_cast<std::uint32_t>(poly));
    KernelMatrix K(field, L);
    for (int r = 0; r < L; ++r) {
        if (!std::getline(in, line)) throw std::runtime_error("kernel file: missing row " + std::to_string(r + 1));
        std::istringstream row(line);
        long long v;
        for (int c = 0; c < L; ++c) {
            if (!(row >> v)) throw std::runtime_error("kernel file: short row " + std::to_string(r + 1));
            if (v < 0 || static_cast<std::uint64_t>(v) >= field.size()) {
                throw std::runtime_error("kernel file: entry out of range for GF(2^" + std::to_string(m) + ")");
            }
            K.at(r, c) = static_cast<std::uint32_t>(v);
        }
        if (row >> v) throw std::runtime_error("kernel file: excess entries in row " + std::to_string(r + 1));
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("poles=", 0) != 0) throw std::runtime_error("kernel file: unexpected trailing line");
        std::istringstream poles(line.substr(6));
        std::string tok;
        while (std::getline(poles, tok, ',')) K.pole_orders.push_back(std::stoll(tok));
        if (static_cast<int>(K.pole_orders.size()) != L) {
            throw std::runtime_error("kernel file: poles count does not match L");
        }
    }
    if (mat_rank(field, K.entries, L, L) != L) {
        throw std::runtime_error("kernel file: matrix is singular");
    }
    return K;
}

KernelMatrix read_kernel_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    return parse_kernel(f);
}

} // namespace agpolar
