#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace linprod {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct RingMismatchError : Error {
    using Error::Error;
};

struct HomogeneityError : Error {
    using Error::Error;
};

// Thrown when a computation exceeds its step budget.  Callers that can
// fall back to another method catch this.
struct BudgetError : Error {
    BudgetError(const std::string& msg, long steps_used)
        : Error(msg), steps(steps_used) {}
    long steps;
};

// Coefficient field: exact rationals (p == 0) or a prime field F_p.
struct FieldSpec {
    unsigned long p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const { return p == 0 ? "q" : "p:" + std::to_string(p); }
};

// A field element.  Rationals are kept reduced; prime-field elements are
// residues in [0, p) stored in the numerator.
class Coeff {
public:
    Coeff() = default;
    Coeff(long n, FieldSpec f) : v_(n), f_(f) { normalize(); }
    Coeff(mpq_class v, FieldSpec f) : v_(std::move(v)), f_(f) { normalize(); }

    static Coeff zero(FieldSpec f) { return Coeff(0, f); }
    static Coeff one(FieldSpec f) { return Coeff(1, f); }
    // Accepts "n" or "n/d".
    static Coeff from_string(const std::string& s, FieldSpec f);

    const FieldSpec& field() const { return f_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    const mpq_class& value() const { return v_; }

    Coeff operator-() const;
    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator/(const Coeff& o) const;
    Coeff inverse() const;

    Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
    Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
    Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

    bool operator==(const Coeff& o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    // Canonical text: reduced fraction, e.g. "-3/4".
    std::string str() const;

private:
    mpq_class v_ = 0;
    FieldSpec f_;

    void normalize();
    void check_field(const Coeff& o) const;
};

}  // namespace linprod
