#include "linprod/field.hpp"

namespace linprod {

void Coeff::normalize() {
    v_.canonicalize();
    if (f_.p == 0) return;
    mpz_class p(static_cast<unsigned long>(f_.p));
    mpz_class num = v_.get_num() % p;
    if (v_.get_den() != 1) {
        mpz_class den = v_.get_den() % p;
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw Error("division by zero in prime field");
        num = (num * inv) % p;
    }
    if (num < 0) num += p;
    v_ = mpq_class(num);
}

void Coeff::check_field(const Coeff& o) const {
    if (!(f_ == o.f_)) throw RingMismatchError("coefficients from different fields");
}

Coeff Coeff::from_string(const std::string& s, FieldSpec f) {
    auto slash = s.find('/');
    mpq_class v;
    if (slash == std::string::npos) {
        v = mpq_class(mpz_class(s));
    } else {
        mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw Error("zero denominator in coefficient: " + s);
        v = mpq_class(num, den);
    }
    return Coeff(v, f);
}

Coeff Coeff::operator-() const { return Coeff(-v_, f_); }

Coeff Coeff::operator+(const Coeff& o) const {
    check_field(o);
    return Coeff(v_ + o.v_, f_);
}

Coeff Coeff::operator-(const Coeff& o) const {
    check_field(o);
    return Coeff(v_ - o.v_, f_);
}

Coeff Coeff::operator*(const Coeff& o) const {
    check_field(o);
    return Coeff(v_ * o.v_, f_);
}

Coeff Coeff::operator/(const Coeff& o) const {
    check_field(o);
    return *this * o.inverse();
}

Coeff Coeff::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    if (f_.p == 0) return Coeff(1 / v_, f_);
    mpz_class p(static_cast<unsigned long>(f_.p)), inv;
    mpz_class num = v_.get_num();
    if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t()) == 0)
        throw Error("non-invertible residue");
    return Coeff(mpq_class(inv), f_);
}

std::string Coeff::str() const { return v_.get_str(); }

}  // namespace linprod
