#include "serrewt/linalg.hpp"

#include <algorithm>

namespace swt {

std::vector<std::int64_t> FpRowSpace::reduce(std::vector<std::int64_t> row) const {
    for (auto &v : row) v = ((v % p_) + p_) % p_;
    for (size_t r = 0; r < rows_.size(); ++r) {
        std::int64_t c = row[size_t(pivots_[r])];
        if (c == 0) continue;
        for (int j = 0; j < dim_; ++j)
            row[size_t(j)] = ((row[size_t(j)] - c * rows_[r][size_t(j)]) % p_ + p_) % p_;
    }
    return row;
}

void FpRowSpace::add_row(std::vector<std::int64_t> row) {
    row = reduce(std::move(row));
    int piv = -1;
    for (int j = 0; j < dim_; ++j)
        if (row[size_t(j)] != 0) { piv = j; break; }
    if (piv < 0) return;
    // normalize pivot to 1
    std::int64_t inv = 1;
    for (std::int64_t v = 1; v < p_; ++v)
        if ((row[size_t(piv)] * v) % p_ == 1) { inv = v; break; }
    for (auto &v : row) v = (v * inv) % p_;
    // back-substitute into existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
        std::int64_t c = rows_[r][size_t(piv)];
        if (c == 0) continue;
        for (int j = 0; j < dim_; ++j)
            rows_[r][size_t(j)] = ((rows_[r][size_t(j)] - c * row[size_t(j)]) % p_ + p_) % p_;
    }
    // insert keeping pivot order
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + long(pos), std::move(row));
    pivots_.insert(pivots_.begin() + long(pos), piv);
}

bool FpRowSpace::contains(std::vector<std::int64_t> row) const {
    row = reduce(std::move(row));
    return std::all_of(row.begin(), row.end(), [](std::int64_t v) { return v == 0; });
}

std::vector<std::vector<FqElem>> fq_kernel(const std::vector<std::vector<FqElem>> &mat_in,
                                           const FqConfigPtr &cfg, int ncols) {
    std::vector<std::vector<FqElem>> mat = mat_in;
    const int nrows = int(mat.size());
    std::vector<int> pivot_of_col(size_t(ncols), -1);
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int pr = -1;
        for (int r = row; r < nrows; ++r)
            if (!mat[size_t(r)][size_t(col)].is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(mat[size_t(pr)], mat[size_t(row)]);
        FqElem inv = mat[size_t(row)][size_t(col)].inverse();
        for (int c = 0; c < ncols; ++c) mat[size_t(row)][size_t(c)] = mat[size_t(row)][size_t(c)] * inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == row) continue;
            FqElem f = mat[size_t(r)][size_t(col)];
            if (f.is_zero()) continue;
            for (int c = 0; c < ncols; ++c)
                mat[size_t(r)][size_t(c)] = mat[size_t(r)][size_t(c)] - f * mat[size_t(row)][size_t(c)];
        }
        pivot_of_col[size_t(col)] = row;
        ++row;
    }
    std::vector<std::vector<FqElem>> kernel;
    for (int col = 0; col < ncols; ++col) {
        if (pivot_of_col[size_t(col)] >= 0) continue;
        std::vector<FqElem> v(size_t(ncols), FqElem::zero(cfg));
        v[size_t(col)] = FqElem::one(cfg);
        for (int c = 0; c < ncols; ++c) {
            int pr = pivot_of_col[size_t(c)];
            if (pr >= 0) v[size_t(c)] = -mat[size_t(pr)][size_t(col)];
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::vector<FqElem> fq_solve(std::vector<std::vector<FqElem>> A, std::vector<FqElem> b,
                             const FqConfigPtr &cfg) {
    const int n = int(A.size());
    for (int i = 0; i < n; ++i) A[size_t(i)].push_back(b[size_t(i)]);
    int row = 0;
    std::vector<int> pivc(size_t(n), -1);
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (!A[size_t(r)][size_t(col)].is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(A[size_t(pr)], A[size_t(row)]);
        FqElem inv = A[size_t(row)][size_t(col)].inverse();
        for (int c = 0; c <= n; ++c) A[size_t(row)][size_t(c)] = A[size_t(row)][size_t(c)] * inv;
        for (int r = 0; r < n; ++r) {
            if (r == row) continue;
            FqElem f = A[size_t(r)][size_t(col)];
            if (f.is_zero()) continue;
            for (int c = 0; c <= n; ++c)
                A[size_t(r)][size_t(c)] = A[size_t(r)][size_t(c)] - f * A[size_t(row)][size_t(c)];
        }
        pivc[size_t(row)] = col;
        ++row;
    }
    std::vector<FqElem> x(size_t(n), FqElem::zero(cfg));
    for (int r = 0; r < row; ++r) x[size_t(pivc[size_t(r)])] = A[size_t(r)][size_t(n)];
    // verify
    for (int r = row; r < n; ++r)
        if (!A[size_t(r)][size_t(n)].is_zero()) throw SwtError("fq_solve: inconsistent system");
    return x;
}

} // namespace swt
