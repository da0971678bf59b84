#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qhankel/error.hpp"

namespace qhankel {

/// Coefficient type: arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;

/// Exponent pair of a single monomial q^{q_exp} * x^{x_exp}.
struct Monomial {
    std::uint32_t q_exp = 0;
    std::uint32_t x_exp = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical term order: x-exponent descending, then q-exponent ascending.
// This is the serialization order (`x^3 + 2*q*x^2 + q^3*x`).
inline bool canonical_less(const Monomial& a, const Monomial& b) {
    if (a.x_exp != b.x_exp) return a.x_exp > b.x_exp;
    return a.q_exp < b.q_exp;
}

// Plain lex order on (x_exp, q_exp); a monomial well-order, used where the
// order must be compatible with multiplication (exact division, sign rule).
inline bool lex_less(const Monomial& a, const Monomial& b) {
    if (a.x_exp != b.x_exp) return a.x_exp < b.x_exp;
    return a.q_exp < b.q_exp;
}

struct Term {
    Monomial mono;
    Int coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

namespace detail {

// Packs a monomial so that unsigned comparison is plain lex and packed keys
// add like exponent vectors (both exponents stay < 2^32 throughout).
inline std::uint64_t pack(const Monomial& m) {
    return (std::uint64_t(m.x_exp) << 32) | std::uint64_t(m.q_exp);
}

inline Monomial unpack(std::uint64_t key) {
    return Monomial{std::uint32_t(key & 0xffffffffULL), std::uint32_t(key >> 32)};
}

}  // namespace detail

/// Sparse exact polynomial in q and x over arbitrary-precision integers.
///
/// Invariants: no stored coefficient is zero, at most one term per exponent
/// pair, terms kept in canonical order. The zero polynomial has no terms.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(long long value) {
        if (value != 0) terms_.push_back(Term{Monomial{}, Int(value)});
    }
    BiPoly(Int value) {
        if (value != 0) terms_.push_back(Term{Monomial{}, std::move(value)});
    }

    static BiPoly monomial(Int coeff, std::uint32_t q_exp, std::uint32_t x_exp) {
        BiPoly p;
        if (coeff != 0) p.terms_.push_back(Term{Monomial{q_exp, x_exp}, std::move(coeff)});
        return p;
    }
    static BiPoly q(std::uint32_t exp = 1) { return monomial(1, exp, 0); }
    static BiPoly x(std::uint32_t exp = 1) { return monomial(1, 0, exp); }

    /// Builds a polynomial from arbitrary (possibly unsorted, repeated) terms.
    static BiPoly from_terms(std::vector<Term> terms) {
        BiPoly p;
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].mono == Monomial{} && terms_[0].coeff == 1;
    }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{});
    }

    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    std::uint32_t degree_x() const { return terms_.empty() ? 0 : terms_.front().mono.x_exp; }
    std::uint32_t degree_q() const {
        std::uint32_t d = 0;
        for (const Term& t : terms_) d = std::max(d, t.mono.q_exp);
        return d;
    }
    std::uint32_t min_x_exp() const { return terms_.empty() ? 0 : terms_.back().mono.x_exp; }
    std::uint32_t min_q_exp() const {
        std::uint32_t m = terms_.empty() ? 0 : terms_.front().mono.q_exp;
        for (const Term& t : terms_) m = std::min(m, t.mono.q_exp);
        return m;
    }

    Int coeff_at(std::uint32_t q_exp, std::uint32_t x_exp) const {
        for (const Term& t : terms_)
            if (t.mono.q_exp == q_exp && t.mono.x_exp == x_exp) return t.coeff;
        return 0;
    }

    /// Coefficient of the minimal monomial under plain (x_exp, q_exp) lex.
    /// Reference coefficient for the sign convention of gcds and denominators.
    const Int& trailing_coeff() const {
        assert(!terms_.empty());
        const Term* best = &terms_.front();
        for (const Term& t : terms_)
            if (lex_less(t.mono, best->mono)) best = &t;
        return best->coeff;
    }

    BiPoly operator-() const {
        BiPoly r(*this);
        for (Term& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            if (ia->mono == ib->mono) {
                Int c = ia->coeff + ib->coeff;
                if (c != 0) r.terms_.push_back(Term{ia->mono, std::move(c)});
                ++ia;
                ++ib;
            } else if (canonical_less(ia->mono, ib->mono)) {
                r.terms_.push_back(*ia++);
            } else {
                r.terms_.push_back(*ib++);
            }
        }
        r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
        r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
        return r;
    }

    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

    /// Multiplies by the monomial coeff * q^{q_exp} * x^{x_exp}.
    BiPoly mul_monomial(const Int& coeff, std::uint32_t q_exp, std::uint32_t x_exp) const {
        if (coeff == 0) return {};
        BiPoly r;
        r.terms_.reserve(terms_.size());
        // Shifting every exponent by the same offset preserves canonical order.
        for (const Term& t : terms_) {
            Int c = t.coeff * coeff;
            r.terms_.push_back(Term{Monomial{t.mono.q_exp + q_exp, t.mono.x_exp + x_exp}, std::move(c)});
        }
        return r;
    }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.terms_.empty() || b.terms_.empty()) return {};
        if (b.terms_.size() == 1)
            return a.mul_monomial(b.terms_[0].coeff, b.terms_[0].mono.q_exp, b.terms_[0].mono.x_exp);
        if (a.terms_.size() == 1)
            return b.mul_monomial(a.terms_[0].coeff, a.terms_[0].mono.q_exp, a.terms_[0].mono.x_exp);
        std::unordered_map<std::uint64_t, Int> acc;
        acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1u << 20));
        for (const Term& ta : a.terms_) {
            const std::uint64_t ka = detail::pack(ta.mono);
            for (const Term& tb : b.terms_) {
                acc[ka + detail::pack(tb.mono)] += ta.coeff * tb.coeff;
            }
        }
        std::vector<Term> terms;
        terms.reserve(acc.size());
        for (auto& [key, coeff] : acc) {
            if (coeff != 0) terms.push_back(Term{detail::unpack(key), std::move(coeff)});
        }
        std::sort(terms.begin(), terms.end(),
                  [](const Term& s, const Term& t) { return canonical_less(s.mono, t.mono); });
        BiPoly r;
        r.terms_ = std::move(terms);
        return r;
    }

    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    BiPoly pow(std::uint32_t e) const {
        BiPoly result(1);
        BiPoly base(*this);
        for (; e > 0; e >>= 1) {
            if (e & 1u) result *= base;
            if (e > 1) base *= base;
        }
        return result;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    /// Canonical text form: `c*q^a*x^b` factors with unit parts elided,
    /// terms joined by ` + ` / ` - `; the zero polynomial renders `0`.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const Term& t : terms_) {
            const bool neg = t.coeff < 0;
            Int mag = neg ? Int(-t.coeff) : t.coeff;
            if (first) {
                if (neg) out << '-';
                first = false;
            } else {
                out << (neg ? " - " : " + ");
            }
            bool printed = false;
            if (mag != 1 || t.mono == Monomial{}) {
                out << mag.str();
                printed = true;
            }
            if (t.mono.q_exp > 0) {
                if (printed) out << '*';
                out << 'q';
                if (t.mono.q_exp > 1) out << '^' << t.mono.q_exp;
                printed = true;
            }
            if (t.mono.x_exp > 0) {
                if (printed) out << '*';
                out << 'x';
                if (t.mono.x_exp > 1) out << '^' << t.mono.x_exp;
            }
        }
        return out.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }

private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& s, const Term& t) { return canonical_less(s.mono, t.mono); });
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (Term& t : terms_) {
            if (!merged.empty() && merged.back().mono == t.mono) {
                merged.back().coeff += t.coeff;
                if (merged.back().coeff == 0) merged.pop_back();
            } else if (t.coeff != 0) {
                merged.push_back(std::move(t));
            }
        }
        terms_ = std::move(merged);
    }

    std::vector<Term> terms_;
};

inline bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

/// Exact quotient a / b in the polynomial ring.
///
/// Single-divisor division under plain lex: while the remainder is nonzero its
/// lex-leading term must be divisible by b's lex-leading term; otherwise the
/// division is inexact. Throws NotDivisibleError / DivisionByZeroError.
inline BiPoly divide_exact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    if (a.is_zero()) return {};
    if (b.is_one()) return a;

    // Lex-leading term of b.
    std::uint64_t lead_key = 0;
    const Int* lead_coeff = nullptr;
    for (const Term& t : b.terms()) {
        const std::uint64_t k = detail::pack(t.mono);
        if (lead_coeff == nullptr || k > lead_key) {
            lead_key = k;
            lead_coeff = &t.coeff;
        }
    }

    std::map<std::uint64_t, Int> rem;
    for (const Term& t : a.terms()) rem.emplace(detail::pack(t.mono), t.coeff);

    const Monomial lead_mono = detail::unpack(lead_key);
    std::vector<Term> quotient;
    while (!rem.empty()) {
        const auto it = std::prev(rem.end());
        const Monomial rm = detail::unpack(it->first);
        if (rm.x_exp < lead_mono.x_exp || rm.q_exp < lead_mono.q_exp || it->second % *lead_coeff != 0) {
            throw NotDivisibleError("inexact polynomial division: " + a.to_string() + " by " +
                                    b.to_string());
        }
        const Monomial qm{rm.q_exp - lead_mono.q_exp, rm.x_exp - lead_mono.x_exp};
        Int qc = it->second / *lead_coeff;
        for (const Term& t : b.terms()) {
            const std::uint64_t key =
                detail::pack(Monomial{t.mono.q_exp + qm.q_exp, t.mono.x_exp + qm.x_exp});
            auto [pos, inserted] = rem.try_emplace(key, 0);
            pos->second -= qc * t.coeff;
            if (pos->second == 0) rem.erase(pos);
        }
        quotient.push_back(Term{qm, std::move(qc)});
    }
    return BiPoly::from_terms(std::move(quotient));
}

}  // namespace qhankel
