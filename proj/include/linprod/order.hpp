#pragma once

#include <memory>
#include <string>
#include <vector>

#include "linprod/monomial.hpp"

namespace linprod {

// Total multiplicative orders on monomials.  Lifted orders compare the
// images of exponent vectors under an integer matrix first and break ties
// with an inner order; they back the Sagbi machinery.
class MonomialOrder {
public:
    enum class Kind { Lex, DegLex, DegRevLex, Block, Weight, Lifted };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder deglex() { return MonomialOrder(Kind::DegLex); }
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex); }
    // Variable significance permutation: perm[0] is the most significant
    // variable index.
    static MonomialOrder lex(std::vector<int> perm);
    static MonomialOrder degrevlex(std::vector<int> perm);
    // Consecutive variable blocks compared in sequence, degrevlex inside
    // each block.  The first block dominates, so it is eliminated by
    // taking basis elements supported outside it.
    static MonomialOrder block(std::vector<std::vector<int>> blocks);
    // Eliminate the first k variables of an n-variable ring.
    static MonomialOrder elimination(int first_block, int nvars);
    static MonomialOrder weight(std::vector<long> w, MonomialOrder tiebreak);
    // Compare A*u against A*v under `image_order`, ties by `tiebreak`.
    // `images[i]` is the exponent vector the i-th source variable maps to.
    static MonomialOrder lifted(std::vector<std::vector<int>> images,
                                MonomialOrder image_order, MonomialOrder tiebreak);

    Kind kind() const { return kind_; }
    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    // Stable identity string, used as a cache key for Groebner bases.
    std::string key() const;

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<int> perm_;                   // Lex/DegRevLex with custom significance
    std::vector<std::vector<int>> blocks_;    // Block
    std::vector<long> weights_;               // Weight
    std::vector<std::vector<int>> images_;    // Lifted
    std::shared_ptr<const MonomialOrder> inner_;    // Weight/Lifted tiebreak
    std::shared_ptr<const MonomialOrder> image_order_;  // Lifted

    int cmp_lex(const Monomial& a, const Monomial& b) const;
    int cmp_degrevlex(const Monomial& a, const Monomial& b) const;
};

}  // namespace linprod
