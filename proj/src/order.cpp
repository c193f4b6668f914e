#include "linprod/order.hpp"

#include <sstream>

namespace linprod {

MonomialOrder MonomialOrder::lex(std::vector<int> perm) {
    MonomialOrder o(Kind::Lex);
    o.perm_ = std::move(perm);
    return o;
}

MonomialOrder MonomialOrder::degrevlex(std::vector<int> perm) {
    MonomialOrder o(Kind::DegRevLex);
    o.perm_ = std::move(perm);
    return o;
}

MonomialOrder MonomialOrder::block(std::vector<std::vector<int>> blocks) {
    MonomialOrder o(Kind::Block);
    o.blocks_ = std::move(blocks);
    return o;
}

MonomialOrder MonomialOrder::elimination(int first_block, int nvars) {
    std::vector<int> a, b;
    for (int i = 0; i < first_block; ++i) a.push_back(i);
    for (int i = first_block; i < nvars; ++i) b.push_back(i);
    return block({a, b});
}

MonomialOrder MonomialOrder::weight(std::vector<long> w, MonomialOrder tiebreak) {
    MonomialOrder o(Kind::Weight);
    o.weights_ = std::move(w);
    o.inner_ = std::make_shared<const MonomialOrder>(std::move(tiebreak));
    return o;
}

MonomialOrder MonomialOrder::lifted(std::vector<std::vector<int>> images,
                                    MonomialOrder image_order, MonomialOrder tiebreak) {
    MonomialOrder o(Kind::Lifted);
    o.images_ = std::move(images);
    o.image_order_ = std::make_shared<const MonomialOrder>(std::move(image_order));
    o.inner_ = std::make_shared<const MonomialOrder>(std::move(tiebreak));
    return o;
}

int MonomialOrder::cmp_lex(const Monomial& a, const Monomial& b) const {
    int n = a.nvars();
    for (int k = 0; k < n; ++k) {
        int i = perm_.empty() ? k : perm_[k];
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
    }
    return 0;
}

int MonomialOrder::cmp_degrevlex(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    int n = a.nvars();
    // Scan from least significant: the monomial with the smaller exponent
    // in the last position where they differ is the larger one.
    for (int k = n - 1; k >= 0; --k) {
        int i = perm_.empty() ? k : perm_[k];
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::Lex:
            return cmp_lex(a, b);
        case Kind::DegLex: {
            int da = a.degree(), db = b.degree();
            if (da != db) return da > db ? 1 : -1;
            return cmp_lex(a, b);
        }
        case Kind::DegRevLex:
            return cmp_degrevlex(a, b);
        case Kind::Block: {
            for (const auto& blk : blocks_) {
                int da = 0, db = 0;
                for (int i : blk) {
                    da += a.exp(i);
                    db += b.exp(i);
                }
                if (da != db) return da > db ? 1 : -1;
                for (auto it = blk.rbegin(); it != blk.rend(); ++it) {
                    if (a.exp(*it) != b.exp(*it)) return a.exp(*it) < b.exp(*it) ? 1 : -1;
                }
            }
            return 0;
        }
        case Kind::Weight: {
            long wa = 0, wb = 0;
            for (int i = 0; i < a.nvars(); ++i) {
                wa += weights_[i] * a.exp(i);
                wb += weights_[i] * b.exp(i);
            }
            if (wa != wb) return wa > wb ? 1 : -1;
            return inner_->compare(a, b);
        }
        case Kind::Lifted: {
            int n = static_cast<int>(images_.front().size());
            std::vector<int> ia(n, 0), ib(n, 0);
            for (int v = 0; v < a.nvars(); ++v) {
                for (int j = 0; j < n; ++j) {
                    ia[j] += a.exp(v) * images_[v][j];
                    ib[j] += b.exp(v) * images_[v][j];
                }
            }
            int c = image_order_->compare(Monomial(std::move(ia)), Monomial(std::move(ib)));
            if (c != 0) return c;
            return inner_->compare(a, b);
        }
    }
    return 0;
}

std::string MonomialOrder::key() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Lex: os << "lex"; break;
        case Kind::DegLex: os << "deglex"; break;
        case Kind::DegRevLex: os << "degrevlex"; break;
        case Kind::Block: os << "block"; break;
        case Kind::Weight: os << "weight"; break;
        case Kind::Lifted: os << "lifted"; break;
    }
    for (int i : perm_) os << ':' << i;
    for (const auto& blk : blocks_) {
        os << "|";
        for (int i : blk) os << i << ',';
    }
    for (long w : weights_) os << 'w' << w;
    for (const auto& im : images_) {
        os << "/";
        for (int x : im) os << x << ',';
    }
    if (image_order_) os << "[" << image_order_->key() << "]";
    if (inner_) os << "(" << inner_->key() << ")";
    return os.str();
}

}  // namespace linprod
