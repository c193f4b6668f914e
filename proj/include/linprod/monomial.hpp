#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "linprod/field.hpp"

namespace linprod {

// Exponent vector; length equals the number of ring variables.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
        for (int x : e_)
            if (x < 0) throw Error("negative exponent in monomial");
    }
    static Monomial unit_of(int nvars, int var, int exp = 1) {
        std::vector<int> e(nvars, 0);
        e[var] = exp;
        return Monomial(std::move(e));
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    int exp(int i) const { return e_[i]; }
    const std::vector<int>& exps() const { return e_; }
    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_one() const {
        for (int x : e_)
            if (x) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        check_compatible(o);
        Monomial r(*this);
        for (int i = 0; i < nvars(); ++i) {
            r.e_[i] += o.e_[i];
            if (r.e_[i] < 0 || r.e_[i] > (1 << 28)) throw Error("exponent overflow");
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        check_compatible(o);
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // this / o; requires o.divides(*this).
    Monomial operator/(const Monomial& o) const {
        check_compatible(o);
        Monomial r(*this);
        for (int i = 0; i < nvars(); ++i) {
            r.e_[i] -= o.e_[i];
            if (r.e_[i] < 0) throw Error("monomial division not exact");
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    // Arbitrary but deterministic container order (not a monomial order).
    bool operator<(const Monomial& o) const { return e_ < o.e_; }

private:
    std::vector<int> e_;

    void check_compatible(const Monomial& o) const {
        if (e_.size() != o.e_.size())
            throw RingMismatchError("monomials from rings with different variable counts");
    }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::min(a.exp(i), b.exp(i));
    return Monomial(std::move(e));
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exp(i) > 0 && b.exp(i) > 0) return false;
    return true;
}

}  // namespace linprod
