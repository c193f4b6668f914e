#pragma once

#include <functional>
#include <utility>

#include "linprod/ring.hpp"

namespace linprod {

struct Term {
    Monomial mono;
    Coeff coeff;
};

// Sparse polynomial with exact coefficients.  Terms are kept sorted
// descending under the ring's default order, so equal polynomials compare
// equal term-by-term and printing is canonical.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, Coeff c);
    static Polynomial monomial(RingPtr ring, Monomial m, Coeff c);
    static Polynomial variable(RingPtr ring, int i);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    // Leading term under the ring default order.
    const Term& leading() const;
    // Leading term under an arbitrary order (linear scan).
    const Term& leading(const MonomialOrder& ord) const;

    int degree() const;  // total degree, -1 for zero
    // Common multidegree of all terms; throws HomogeneityError otherwise.
    MultiDegree multidegree() const;
    bool is_homogeneous() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial mul_term(const Monomial& m, const Coeff& c) const;
    Polynomial mul_scalar(const Coeff& c) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial monic() const;  // divide by leading coefficient

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void sort_and_combine();
};

Polynomial poly_pow(const Polynomial& f, int k);

}  // namespace linprod
