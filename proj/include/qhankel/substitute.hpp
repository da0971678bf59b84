#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qhankel/bipoly.hpp"
#include "qhankel/ratfunc.hpp"

namespace qhankel {

/// q -> q^factor as lossless exponent scaling (stays in the ring).
inline BiPoly scale_q_exponents(const BiPoly& p, std::uint32_t factor) {
    if (factor == 0) throw Error("q-power directive must be >= 1");
    if (factor == 1) return p;
    std::vector<Term> terms;
    terms.reserve(p.term_count());
    // Scaling q-exponents by a positive factor preserves canonical order.
    for (const Term& t : p.terms())
        terms.push_back(Term{Monomial{t.mono.q_exp * factor, t.mono.x_exp}, t.coeff});
    return BiPoly::from_terms(std::move(terms));
}

/// q -> 1 specialization (collapses each x-slice to its coefficient sum).
inline BiPoly eval_q_one(const BiPoly& p) {
    std::vector<Term> terms;
    for (const Term& t : p.terms()) {
        if (!terms.empty() && terms.back().mono.x_exp == t.mono.x_exp)
            terms.back().coeff += t.coeff;
        else
            terms.push_back(Term{Monomial{0, t.mono.x_exp}, t.coeff});
    }
    return BiPoly::from_terms(std::move(terms));
}

namespace detail {

// Distinct x-exponents of p in descending order, paired with the x-free
// coefficient slice of each (terms within a slice already sorted by q).
inline std::vector<std::pair<std::uint32_t, BiPoly>> x_slices(const BiPoly& p) {
    std::vector<std::pair<std::uint32_t, BiPoly>> slices;
    std::vector<Term> current;
    for (const Term& t : p.terms()) {
        if (!current.empty() && current.back().mono.x_exp != t.mono.x_exp) {
            const std::uint32_t e = current.back().mono.x_exp;
            for (Term& s : current) s.mono.x_exp = 0;
            slices.emplace_back(e, BiPoly::from_terms(std::move(current)));
            current.clear();
        }
        current.push_back(t);
    }
    if (!current.empty()) {
        const std::uint32_t e = current.back().mono.x_exp;
        for (Term& s : current) s.mono.x_exp = 0;
        slices.emplace_back(e, BiPoly::from_terms(std::move(current)));
    }
    return slices;
}

// Horner evaluation of an x-free polynomial at q = image.
inline RatFunc eval_q_slice(const BiPoly& slice, const RatFunc& image) {
    RatFunc acc;
    std::uint32_t prev_exp = 0;
    bool first = true;
    for (auto it = slice.terms().rbegin(); it != slice.terms().rend(); ++it) {
        if (first) {
            prev_exp = it->mono.q_exp;
            first = false;
        } else {
            acc *= image.pow(prev_exp - it->mono.q_exp);
            prev_exp = it->mono.q_exp;
        }
        acc += RatFunc(Int(it->coeff));
    }
    if (!first) acc *= image.pow(prev_exp);
    return acc;
}

}  // namespace detail

/// Exact image of p under q -> q_image, x -> x_image (two-level Horner).
inline RatFunc substitute(const BiPoly& p, const RatFunc& q_image, const RatFunc& x_image) {
    RatFunc acc;
    std::uint32_t prev_exp = 0;
    bool first = true;
    for (const auto& [x_exp, slice] : detail::x_slices(p)) {
        if (first) {
            prev_exp = x_exp;
            first = false;
        } else {
            acc *= x_image.pow(prev_exp - x_exp);
            prev_exp = x_exp;
        }
        acc += detail::eval_q_slice(slice, q_image);
    }
    if (!first) acc *= x_image.pow(prev_exp);
    return acc;
}

/// Substitution into a rational function; throws SubstitutionSingularError
/// when the substituted denominator vanishes identically.
inline RatFunc substitute(const RatFunc& f, const RatFunc& q_image, const RatFunc& x_image) {
    const RatFunc den = substitute(f.den(), q_image, x_image);
    if (den.is_zero())
        throw SubstitutionSingularError("substitution makes the denominator vanish: " +
                                        f.to_string());
    return substitute(f.num(), q_image, x_image) / den;
}

/// x -> x_image with q untouched; stays in the polynomial ring.
inline BiPoly substitute_x(const BiPoly& p, const BiPoly& x_image) {
    BiPoly acc;
    std::uint32_t prev_exp = 0;
    bool first = true;
    for (const auto& [x_exp, slice] : detail::x_slices(p)) {
        if (first) {
            prev_exp = x_exp;
            first = false;
        } else {
            acc *= x_image.pow(prev_exp - x_exp);
            prev_exp = x_exp;
        }
        acc += slice;
    }
    if (!first) acc *= x_image.pow(prev_exp);
    return acc;
}

/// x -> x_image as a rational function (e.g. x -> x/q); q untouched.
inline RatFunc substitute_x(const BiPoly& p, const RatFunc& x_image) {
    RatFunc acc;
    std::uint32_t prev_exp = 0;
    bool first = true;
    for (const auto& [x_exp, slice] : detail::x_slices(p)) {
        if (first) {
            prev_exp = x_exp;
            first = false;
        } else {
            acc *= x_image.pow(prev_exp - x_exp);
            prev_exp = x_exp;
        }
        acc += RatFunc(slice);
    }
    if (!first) acc *= x_image.pow(prev_exp);
    return acc;
}

}  // namespace qhankel
