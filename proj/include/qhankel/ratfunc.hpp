#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "qhankel/bipoly.hpp"
#include "qhankel/gcd.hpp"

namespace qhankel {

/// Reduced fraction of two BiPoly values.
///
/// Invariants: nonzero denominator, gcd(num, den) a unit, and the
/// denominator's minimal-monomial coefficient positive. A zero numerator
/// forces denominator 1.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(BiPoly p) : num_(std::move(p)), den_(1) {}
    RatFunc(long long value) : num_(value), den_(1) {}
    RatFunc(Int value) : num_(std::move(value)), den_(1) {}
    RatFunc(BiPoly numerator, BiPoly denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
        reduce();
    }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    const BiPoly& as_poly() const {
        if (!is_polynomial()) throw Error("rational function is not a polynomial: " + to_string());
        return num_;
    }

    RatFunc operator-() const {
        RatFunc r(*this);
        r.num_ = -r.num_;
        return r;
    }

    RatFunc inverse() const {
        if (num_.is_zero()) throw DivisionByZeroError("inverse of the zero rational function");
        RatFunc r;
        r.num_ = den_;
        r.den_ = num_;
        if (r.den_.trailing_coeff() < 0) {
            r.num_ = -r.num_;
            r.den_ = -r.den_;
        }
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
        // Cross-cancel before multiplying to keep intermediates small.
        const BiPoly g1 = gcd(a.num_, b.den_);
        const BiPoly g2 = gcd(b.num_, a.den_);
        RatFunc r;
        r.num_ = divide_exact(a.num_, g1) * divide_exact(b.num_, g2);
        r.den_ = divide_exact(a.den_, g2) * divide_exact(b.den_, g1);
        r.reduce();
        return r;
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        RatFunc result{BiPoly(1)};
        RatFunc base(*this);
        for (auto k = static_cast<unsigned long long>(e); k > 0; k >>= 1) {
            if (k & 1u) result *= base;
            if (k > 1) base *= base;
        }
        return result;
    }

    /// Equality of reduced canonical forms.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// `(num)/(den)` with the denominator elided when it is 1.
    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
        return os << f.to_string();
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = BiPoly(1);
            return;
        }
        if (!den_.is_one()) {
            const BiPoly g = gcd(num_, den_);
            if (!g.is_one()) {
                num_ = divide_exact(num_, g);
                den_ = divide_exact(den_, g);
            }
            if (den_.trailing_coeff() < 0) {
                num_ = -num_;
                den_ = -den_;
            }
        }
    }

    BiPoly num_;
    BiPoly den_;
};

inline bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

}  // namespace qhankel
