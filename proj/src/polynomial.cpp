#include "linprod/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace linprod {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    sort_and_combine();
}

void Polynomial::sort_and_combine() {
    const MonomialOrder& ord = ring_->default_order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(RingPtr ring, Coeff c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), std::move(c)});
    return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Coeff c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
    std::vector<int> e(ring->nvars(), 0);
    e[i] = 1;
    return monomial(ring, Monomial(std::move(e)), Coeff::one(ring->field()));
}

const Term& Polynomial::leading() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
}

const Term& Polynomial::leading(const MonomialOrder& ord) const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (ord.greater(t.mono, best->mono)) best = &t;
    return *best;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

MultiDegree Polynomial::multidegree() const {
    if (terms_.empty()) return MultiDegree(ring_->grading_width(), 0);
    MultiDegree d = ring_->monomial_degree(terms_[0].mono);
    for (const auto& t : terms_) {
        MultiDegree e = ring_->monomial_degree(t.mono);
        if (e != d)
            throw HomogeneityError("inhomogeneous polynomial: terms of degree " + degree_str(d) +
                                   " and " + degree_str(e));
    }
    return d;
}

bool Polynomial::is_homogeneous() const {
    try {
        multidegree();
        return true;
    } catch (const HomogeneityError&) {
        return false;
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    const MonomialOrder& ord = ring_->default_order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Coeff s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::mul_term(const Monomial& m, const Coeff& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;  // multiplication by a monomial preserves the term order
}

Polynomial Polynomial::mul_scalar(const Coeff& c) const {
    return mul_term(Monomial(ring_->nvars()), c);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    Polynomial r(ring_);
    if (is_zero() || o.is_zero()) return r;
    const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
    const Polynomial& big = terms_.size() <= o.terms_.size() ? o : *this;
    for (const auto& t : small.terms_) r += big.mul_term(t.mono, t.coeff);
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return mul_scalar(leading().coeff.inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        mpq_class v = t.coeff.value();
        bool neg = v < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        mpq_class a = neg ? mpq_class(-v) : v;
        bool unit = (a == 1);
        bool printed = false;
        if (!unit || t.mono.is_one()) {
            os << a.get_str();
            printed = true;
        }
        for (int i = 0; i < ring_->nvars(); ++i) {
            if (t.mono.exp(i) == 0) continue;
            if (printed) os << "*";
            os << ring_->var_name(i);
            if (t.mono.exp(i) > 1) os << "^" << t.mono.exp(i);
            printed = true;
        }
    }
    return os.str();
}

Polynomial poly_pow(const Polynomial& f, int k) {
    if (k < 0) throw Error("negative power");
    Polynomial r = Polynomial::constant(f.ring(), Coeff::one(f.ring()->field()));
    for (int i = 0; i < k; ++i) r *= f;
    return r;
}

}  // namespace linprod
