#include "linprod/ring.hpp"

#include <set>

namespace linprod {

Ring::Ring(std::vector<std::string> vars, FieldSpec field, std::optional<MatrixLayout> layout,
           std::vector<MultiDegree> grading)
    : vars_(std::move(vars)), field_(field), layout_(layout), grading_(std::move(grading)) {
    std::set<std::string> seen;
    for (int i = 0; i < nvars(); ++i) {
        if (!seen.insert(vars_[i]).second) throw Error("duplicate variable name: " + vars_[i]);
        index_[vars_[i]] = i;
    }
    if (layout_ && layout_->rows * layout_->cols != nvars())
        throw Error("matrix layout does not cover the variable list");
    if (static_cast<int>(grading_.size()) != nvars())
        throw Error("grading must assign a degree to every variable");
    const std::size_t w = grading_.empty() ? 1 : grading_.front().size();
    for (const auto& d : grading_) {
        if (d.size() != w) throw Error("inconsistent grading width");
        if (total(d) < 0) throw Error("variable with negative total weight");
    }
}

RingPtr Ring::make(std::vector<std::string> vars, FieldSpec field,
                   std::optional<MatrixLayout> layout,
                   std::optional<std::vector<MultiDegree>> grading) {
    std::vector<MultiDegree> g;
    if (grading) {
        g = std::move(*grading);
    } else {
        g.assign(vars.size(), MultiDegree{1});
    }
    return RingPtr(new Ring(std::move(vars), field, layout, std::move(g)));
}

RingPtr Ring::matrix(int rows, int cols, FieldSpec field, const std::string& base) {
    std::vector<std::string> vars;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            vars.push_back(base + std::to_string(i) + std::to_string(j));
    return make(std::move(vars), field, MatrixLayout{rows, cols});
}

int Ring::var_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

MultiDegree Ring::monomial_degree(const Monomial& m) const {
    MultiDegree d(grading_width(), 0);
    for (int i = 0; i < nvars(); ++i)
        if (m.exp(i))
            for (int j = 0; j < grading_width(); ++j) d[j] += m.exp(i) * grading_[i][j];
    return d;
}

bool Ring::same_as(const Ring& o) const {
    return vars_ == o.vars_ && field_ == o.field_ && grading_ == o.grading_;
}

}  // namespace linprod
