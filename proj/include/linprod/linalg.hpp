#pragma once

#include <map>
#include <vector>

#include "linprod/field.hpp"

namespace linprod {

// Sparse vector: (index, coeff) pairs sorted by index, coeffs nonzero.
using SparseVec = std::vector<std::pair<int, Coeff>>;

SparseVec sparse_axpy(const SparseVec& a, const Coeff& c, const SparseVec& b);

inline SparseVec sparse_scale(const SparseVec& a, const Coeff& c) {
    SparseVec r;
    if (c.is_zero()) return r;
    r.reserve(a.size());
    for (const auto& [i, x] : a) r.push_back({i, x * c});
    return r;
}

// Row-echelon span built incrementally; used for rank counting, membership
// of a vector in a span, and minimal-generator selection.  Pivots are kept
// monic and back-reduction is skipped (not needed for ranks).
class IncrementalSpan {
public:
    // Returns true when v was independent of the current span.
    bool add(SparseVec v);
    // Reduce v against the span without inserting it.
    SparseVec reduce(SparseVec v) const;
    bool contains(SparseVec v) const { return reduce(std::move(v)).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::map<int, SparseVec> rows_;  // pivot index -> monic row
};

// Nullspace of a column collection: columns are fed with an identity tail
// appended below `split`; when the head reduces to zero the tail exposes a
// kernel combination of the inserted columns.
class KernelAccumulator {
public:
    explicit KernelAccumulator(int split) : split_(split) {}
    // Feed one column (head coordinates < split_).  Tail bookkeeping is
    // internal; kernel vectors are collected as they appear.
    void add_column(const SparseVec& head, const FieldSpec& field);
    // Kernel vectors, each of length = number of columns added, sparse.
    const std::vector<SparseVec>& kernel() const { return kernel_; }
    int ncols() const { return ncols_; }

private:
    int split_;
    int ncols_ = 0;
    std::map<int, SparseVec> rows_;  // pivot (< split_) -> row with tail coords >= split_
    std::vector<SparseVec> kernel_;
};

int sparse_rank(const std::vector<SparseVec>& columns);

// Dense reduced row echelon form over the coefficient field (in place).
// Returns the rank; zero rows are removed.
int dense_rref(std::vector<std::vector<Coeff>>& m);

}  // namespace linprod
