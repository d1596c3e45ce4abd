#ifndef SERREWT_LINALG_HPP_
#define SERREWT_LINALG_HPP_

#include <vector>

#include "serrewt/fq.hpp"

namespace swt {

/* Row space over F_p in reduced row echelon form. */
class FpRowSpace {
public:
    FpRowSpace(std::int64_t p, int dim) : p_(p), dim_(dim) {}

    void add_row(std::vector<std::int64_t> row);
    int rank() const { return int(rows_.size()); }
    int dim() const { return dim_; }
    bool contains(std::vector<std::int64_t> row) const;
    const std::vector<std::vector<std::int64_t>> &rows() const { return rows_; }
    bool operator==(const FpRowSpace &o) const { return p_ == o.p_ && rows_ == o.rows_; }

private:
    std::vector<std::int64_t> reduce(std::vector<std::int64_t> row) const;
    std::int64_t p_;
    int dim_;
    std::vector<std::vector<std::int64_t>> rows_; // RREF, sorted by pivot
    std::vector<int> pivots_;
};

/// Kernel basis of an m x n matrix over F_q.
std::vector<std::vector<FqElem>> fq_kernel(const std::vector<std::vector<FqElem>> &mat,
                                           const FqConfigPtr &cfg, int ncols);

/// Solves A x = b over F_q (A square, invertible); throws on failure.
std::vector<FqElem> fq_solve(std::vector<std::vector<FqElem>> A, std::vector<FqElem> b,
                             const FqConfigPtr &cfg);

} // namespace swt

#endif
