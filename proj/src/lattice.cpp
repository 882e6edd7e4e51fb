#include "muldep/lattice.hpp"

#include <algorithm>

namespace muldep {

namespace {

void swap_cols(IntMat& M, long i, long j) {
    if (i == j) return;
    for (long r = 0; r < M.rows; r++) std::swap(M.at(r, i), M.at(r, j));
}

void negate_col(IntMat& M, long j) {
    for (long r = 0; r < M.rows; r++) M.at(r, j) = -M.at(r, j);
}

// col_i -= t * col_j
void axpy_col(IntMat& M, long i, const mpz_class& t, long j) {
    if (t == 0) return;
    for (long r = 0; r < M.rows; r++) M.at(r, i) -= t * M.at(r, j);
}

} // namespace

void hermite_columns(IntMat& M, IntMat& U) {
    U = IntMat(M.cols, M.cols);
    for (long i = 0; i < M.cols; i++) U.at(i, i) = 1;

    long pivot_col = 0;
    for (long r = 0; r < M.rows && pivot_col < M.cols; r++) {
        // Euclidean elimination across columns pivot_col..end on row r.
        while (true) {
            long j = -1;
            for (long c = pivot_col; c < M.cols; c++) {
                if (M.at(r, c) != 0 &&
                    (j < 0 || abs(M.at(r, c)) < abs(M.at(r, j))))
                    j = c;
            }
            if (j < 0) break;
            swap_cols(M, pivot_col, j);
            swap_cols(U, pivot_col, j);
            if (M.at(r, pivot_col) < 0) {
                negate_col(M, pivot_col);
                negate_col(U, pivot_col);
            }
            bool cleared = true;
            for (long c = pivot_col + 1; c < M.cols; c++) {
                if (M.at(r, c) == 0) continue;
                mpz_class t;
                mpz_fdiv_q(t.get_mpz_t(), M.at(r, c).get_mpz_t(),
                           M.at(r, pivot_col).get_mpz_t());
                axpy_col(M, c, t, pivot_col);
                axpy_col(U, c, t, pivot_col);
                if (M.at(r, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (M.at(r, pivot_col) == 0) continue;
        // Reduce earlier columns against the new pivot.
        for (long c = 0; c < pivot_col; c++) {
            mpz_class t;
            mpz_fdiv_q(t.get_mpz_t(), M.at(r, c).get_mpz_t(),
                       M.at(r, pivot_col).get_mpz_t());
            axpy_col(M, c, t, pivot_col);
            axpy_col(U, c, t, pivot_col);
        }
        pivot_col++;
    }
    // Move zero columns of M to the back (they carry the kernel in U).
    // hermite_columns keeps pivot columns in front already; callers rely on
    // zero columns being exactly those with index >= rank.
    (void)0;
}

namespace {

// Hermite-reduce a list of kernel vectors (as columns) for a canonical basis.
std::vector<IntVec> canonicalize_basis(const std::vector<IntVec>& vecs, long dim) {
    if (vecs.empty()) return {};
    IntMat K(dim, static_cast<long>(vecs.size()));
    for (long c = 0; c < K.cols; c++)
        for (long r = 0; r < dim; r++) K.at(r, c) = vecs[static_cast<size_t>(c)][r];
    IntMat U;
    hermite_columns(K, U);
    std::vector<IntVec> out;
    for (long c = 0; c < K.cols; c++) {
        IntVec v(dim);
        bool nonzero = false;
        for (long r = 0; r < dim; r++) {
            v[r] = K.at(r, c);
            if (v[r] != 0) nonzero = true;
        }
        if (nonzero) out.push_back(std::move(v));
    }
    return out;
}

} // namespace

std::vector<IntVec> integer_kernel(const IntMat& M) {
    IntMat H = M, U;
    hermite_columns(H, U);
    std::vector<IntVec> kernel;
    for (long c = 0; c < H.cols; c++) {
        bool zero = true;
        for (long r = 0; r < H.rows; r++)
            if (H.at(r, c) != 0) { zero = false; break; }
        if (!zero) continue;
        IntVec v(M.cols);
        for (long r = 0; r < M.cols; r++) v[r] = U.at(r, c);
        kernel.push_back(std::move(v));
    }
    return canonicalize_basis(kernel, M.cols);
}

std::optional<IntVec> solve_integer(const IntMat& M, const IntVec& v) {
    IntMat H = M, U;
    hermite_columns(H, U);
    IntVec rem = v;
    IntVec y(M.cols, 0);
    long c = 0;
    for (long r = 0; r < M.rows; r++) {
        if (c < H.cols && H.at(r, c) != 0) {
            mpz_class q, rr;
            mpz_fdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), rem[r].get_mpz_t(),
                        H.at(r, c).get_mpz_t());
            if (rr != 0) return std::nullopt;
            for (long rr2 = r; rr2 < M.rows; rr2++) rem[rr2] -= q * H.at(rr2, c);
            y[c] = q;
            c++;
        }
        if (rem[r] != 0) return std::nullopt;
    }
    IntVec x(M.cols, 0);
    for (long i = 0; i < M.cols; i++)
        for (long j = 0; j < M.cols; j++) x[i] += U.at(i, j) * y[j];
    return x;
}

IntVec reduce_mod_lattice(IntVec v, const std::vector<IntVec>& basis) {
    // Basis columns are in Hermite form: each has a pivot row (first nonzero,
    // positive). Reduce v's pivot coordinates in order.
    for (const auto& b : basis) {
        long pivot = -1;
        for (size_t r = 0; r < b.size(); r++)
            if (b[r] != 0) { pivot = static_cast<long>(r); break; }
        if (pivot < 0) continue;
        mpz_class t;
        mpz_fdiv_q(t.get_mpz_t(), v[pivot].get_mpz_t(), b[pivot].get_mpz_t());
        if (t == 0) continue;
        for (size_t r = 0; r < b.size(); r++) v[r] -= t * b[r];
    }
    return v;
}

namespace {

struct QMat {
    long rows = 0, cols = 0;
    std::vector<mpq_class> a;
    QMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    mpq_class& at(long r, long c) { return a[static_cast<size_t>(r) * cols + c]; }
    const mpq_class& at(long r, long c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Reduced row echelon form; returns pivot column per row-rank entry.
std::vector<long> rref(QMat& M) {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < M.cols && row < M.rows; col++) {
        long pr = -1;
        for (long r = row; r < M.rows; r++)
            if (M.at(r, col) != 0) { pr = r; break; }
        if (pr < 0) continue;
        for (long c = 0; c < M.cols; c++) std::swap(M.at(row, c), M.at(pr, c));
        mpq_class inv = M.at(row, col);
        for (long c = 0; c < M.cols; c++) M.at(row, c) /= inv;
        for (long r = 0; r < M.rows; r++) {
            if (r == row || M.at(r, col) == 0) continue;
            mpq_class f = M.at(r, col);
            for (long c = 0; c < M.cols; c++) M.at(r, c) -= f * M.at(row, c);
        }
        pivots.push_back(col);
        row++;
    }
    return pivots;
}

} // namespace

std::vector<QVec> rational_kernel(const IntMat& M) {
    QMat Q(M.rows, M.cols);
    for (long r = 0; r < M.rows; r++)
        for (long c = 0; c < M.cols; c++) Q.at(r, c) = M.at(r, c);
    std::vector<long> pivots = rref(Q);
    std::vector<bool> is_pivot(M.cols, false);
    for (long p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<QVec> out;
    for (long free = 0; free < M.cols; free++) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        QVec v(M.cols, mpq_class(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); i++)
            v[pivots[i]] = -Q.at(static_cast<long>(i), free);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<QVec> left_nullspace(const IntMat& M) {
    IntMat T(M.cols, M.rows);
    for (long r = 0; r < M.rows; r++)
        for (long c = 0; c < M.cols; c++) T.at(c, r) = M.at(r, c);
    return rational_kernel(T);
}

std::optional<QVec> solve_rational(const IntMat& M, const QVec& v) {
    QMat Q(M.rows, M.cols + 1);
    for (long r = 0; r < M.rows; r++) {
        for (long c = 0; c < M.cols; c++) Q.at(r, c) = M.at(r, c);
        Q.at(r, M.cols) = v[r];
    }
    std::vector<long> pivots = rref(Q);
    for (long p : pivots)
        if (p == M.cols) return std::nullopt;  // inconsistent row 0...0 | 1
    QVec x(M.cols, mpq_class(0));
    for (size_t i = 0; i < pivots.size(); i++)
        x[pivots[i]] = Q.at(static_cast<long>(i), M.cols);
    return x;
}

mpz_class content(const IntVec& v) {
    mpz_class g = 0;
    for (const auto& e : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    return g;
}

IntVec primitive(IntVec v) {
    mpz_class g = content(v);
    if (g > 1)
        for (auto& e : v) e /= g;
    return v;
}

bool is_zero(const IntVec& v) {
    for (const auto& e : v)
        if (e != 0) return false;
    return true;
}

} // namespace muldep
