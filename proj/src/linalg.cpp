#include "linprod/linalg.hpp"

namespace linprod {

SparseVec sparse_axpy(const SparseVec& a, const Coeff& c, const SparseVec& b) {
    if (c.is_zero()) return a;
    SparseVec r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            r.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            r.push_back({b[j].first, c * b[j].second});
            ++j;
        } else {
            Coeff s = a[i].second + c * b[j].second;
            if (!s.is_zero()) r.push_back({a[i].first, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back({b[j].first, c * b[j].second});
    return r;
}

bool IncrementalSpan::add(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Coeff inv = v.front().second.inverse();
    for (auto& [i, x] : v) x = x * inv;
    int pivot = v.front().first;
    rows_.emplace(pivot, std::move(v));
    return true;
}

SparseVec IncrementalSpan::reduce(SparseVec v) const {
    // Rows form an echelon family (distinct leading indices), so a vector
    // lies in the span iff repeated cancellation of its leading coordinate
    // reaches zero.
    while (!v.empty()) {
        auto it = rows_.find(v.front().first);
        if (it == rows_.end()) return v;
        v = sparse_axpy(v, -v.front().second, it->second);
    }
    return v;
}

void KernelAccumulator::add_column(const SparseVec& head, const FieldSpec& field) {
    SparseVec v = head;
    v.push_back({split_ + ncols_, Coeff::one(field)});
    ++ncols_;
    while (true) {
        if (v.front().first >= split_) {
            SparseVec k;
            for (const auto& [i, x] : v) k.push_back({i - split_, x});
            kernel_.push_back(std::move(k));
            return;
        }
        auto it = rows_.find(v.front().first);
        if (it == rows_.end()) {
            Coeff inv = v.front().second.inverse();
            for (auto& [i, x] : v) x = x * inv;
            rows_.emplace(v.front().first, std::move(v));
            return;
        }
        v = sparse_axpy(v, -v.front().second, it->second);
    }
}

int sparse_rank(const std::vector<SparseVec>& columns) {
    IncrementalSpan span;
    int r = 0;
    for (const auto& c : columns)
        if (span.add(c)) ++r;
    return r;
}

int dense_rref(std::vector<std::vector<Coeff>>& m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        Coeff inv = m[rank][c].inverse();
        for (int j = c; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            Coeff f = m[r][c];
            for (int j = c; j < cols; ++j) m[r][j] = m[r][j] - f * m[rank][j];
        }
        ++rank;
    }
    m.resize(rank);
    return rank;
}

}  // namespace linprod
