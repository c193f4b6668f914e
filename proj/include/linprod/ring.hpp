#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linprod/order.hpp"

namespace linprod {

// Degree vector in Z^r.  Coordinate 0 is the base-ring degree; coordinates
// 1..w are the Rees T-degrees when a presentation grading is in play.
using MultiDegree = std::vector<int>;

inline MultiDegree operator+(const MultiDegree& a, const MultiDegree& b) {
    MultiDegree r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline MultiDegree operator-(const MultiDegree& a, const MultiDegree& b) {
    MultiDegree r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline int total(const MultiDegree& d) {
    int s = 0;
    for (int x : d) s += x;
    return s;
}

inline std::string degree_str(const MultiDegree& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

struct MatrixLayout {
    int rows = 0, cols = 0;  // variable (i,j) lives at index i*cols + j
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Immutable polynomial ring: named variables over an exact field, an
// optional matrix-variable layout, and a Z^r grading (default: total degree).
class Ring : public std::enable_shared_from_this<Ring> {
public:
    static RingPtr make(std::vector<std::string> vars, FieldSpec field = {},
                        std::optional<MatrixLayout> layout = {},
                        std::optional<std::vector<MultiDegree>> grading = {});
    // K[x11..xnn] with row-major names built from `base`.
    static RingPtr matrix(int rows, int cols, FieldSpec field = {},
                          const std::string& base = "x");

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::string& var_name(int i) const { return vars_[i]; }
    const std::vector<std::string>& var_names() const { return vars_; }
    // -1 if absent.
    int var_index(const std::string& name) const;
    const FieldSpec& field() const { return field_; }
    const std::optional<MatrixLayout>& layout() const { return layout_; }
    int matrix_var(int i, int j) const { return i * layout_->cols + j; }

    int grading_width() const { return static_cast<int>(grading_.front().size()); }
    const MultiDegree& var_degree(int i) const { return grading_[i]; }
    MultiDegree monomial_degree(const Monomial& m) const;

    const MonomialOrder& default_order() const { return order_; }

    Coeff czero() const { return Coeff::zero(field_); }
    Coeff cone() const { return Coeff::one(field_); }

    bool same_as(const Ring& o) const;

private:
    Ring(std::vector<std::string> vars, FieldSpec field, std::optional<MatrixLayout> layout,
         std::vector<MultiDegree> grading);

    std::vector<std::string> vars_;
    FieldSpec field_;
    std::optional<MatrixLayout> layout_;
    std::vector<MultiDegree> grading_;
    std::map<std::string, int> index_;
    MonomialOrder order_ = MonomialOrder::degrevlex();
};

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same_as(*b)) throw RingMismatchError("operands live in different rings");
}

}  // namespace linprod
