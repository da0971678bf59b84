#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qhankel/bipoly.hpp"

namespace qhankel {

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// gcd of all integer coefficients (nonnegative; 0 for the zero polynomial).
inline Int int_content(const BiPoly& p) {
    Int g = 0;
    for (const Term& t : p.terms()) {
        g = int_gcd(g, t.coeff);
        if (g == 1) break;
    }
    return g;
}

/// Flips the sign so the minimal-monomial coefficient is positive.
inline BiPoly normalize_sign(BiPoly p) {
    if (!p.is_zero() && p.trailing_coeff() < 0) return -p;
    return p;
}

namespace detail {

// Univariate layer: polynomials in q alone, dense by q-exponent, no trailing
// zeros (zero polynomial = empty vector).
using QPoly = std::vector<Int>;

inline void qstrip(QPoly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline QPoly to_qpoly(const BiPoly& p) {
    QPoly v;
    for (const Term& t : p.terms()) {
        assert(t.mono.x_exp == 0);
        if (t.mono.q_exp >= v.size()) v.resize(t.mono.q_exp + 1, 0);
        v[t.mono.q_exp] = t.coeff;
    }
    return v;
}

inline BiPoly from_qpoly(const QPoly& v) {
    std::vector<Term> terms;
    for (std::uint32_t e = 0; e < v.size(); ++e)
        if (v[e] != 0) terms.push_back(Term{Monomial{e, 0}, v[e]});
    return BiPoly::from_terms(std::move(terms));
}

inline Int qcontent(const QPoly& v) {
    Int g = 0;
    for (const Int& c : v) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

inline QPoly qprimitive(QPoly v) {
    const Int g = qcontent(v);
    if (g > 1)
        for (Int& c : v) c /= g;
    return v;
}

// Pseudo-remainder of u by v in q (result proportional to the true remainder,
// which is all the primitive PRS needs).
inline QPoly qprem(QPoly u, const QPoly& v) {
    assert(!v.empty());
    const Int& lv = v.back();
    while (u.size() >= v.size()) {
        const Int lu = u.back();
        const std::size_t shift = u.size() - v.size();
        for (Int& c : u) c *= lv;
        for (std::size_t i = 0; i < v.size(); ++i) u[shift + i] -= lu * v[i];
        qstrip(u);
        if (u.empty()) break;
    }
    return u;
}

// Full gcd in Z[q] (integer content included), sign not normalized.
inline QPoly qgcd(QPoly u, QPoly v) {
    qstrip(u);
    qstrip(v);
    if (u.empty()) return v;
    if (v.empty()) return u;
    const Int content = int_gcd(qcontent(u), qcontent(v));
    u = qprimitive(std::move(u));
    v = qprimitive(std::move(v));
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        QPoly r = qprem(std::move(u), v);
        u = std::move(v);
        v = qprimitive(std::move(r));
    }
    u = qprimitive(std::move(u));
    if (content > 1)
        for (Int& c : u) c *= content;
    return u;
}

// Bivariate layer: polynomials in x with coefficients in Z[q], dense by
// x-exponent, no trailing zero coefficients.
using XPoly = std::vector<BiPoly>;

inline void xstrip(XPoly& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

inline XPoly to_xpoly(const BiPoly& p) {
    XPoly v;
    for (const Term& t : p.terms()) {
        if (t.mono.x_exp >= v.size()) v.resize(t.mono.x_exp + 1);
        v[t.mono.x_exp] += BiPoly::monomial(t.coeff, t.mono.q_exp, 0);
    }
    return v;
}

inline BiPoly from_xpoly(const XPoly& v) {
    BiPoly r;
    for (std::uint32_t e = 0; e < v.size(); ++e)
        if (!v[e].is_zero()) r += v[e].mul_monomial(1, 0, e);
    return r;
}

// Content with respect to x: gcd in Z[q] of all x-coefficient slices.
inline BiPoly xcontent(const XPoly& v) {
    QPoly g;
    for (const BiPoly& slice : v) {
        if (slice.is_zero()) continue;
        g = qgcd(std::move(g), to_qpoly(slice));
        if (g.size() == 1 && (g[0] == 1 || g[0] == -1)) return BiPoly(1);
    }
    return from_qpoly(g);
}

inline XPoly xprimitive(XPoly v, const BiPoly& content) {
    if (content.is_one()) return v;
    for (BiPoly& slice : v)
        if (!slice.is_zero()) slice = divide_exact(slice, content);
    return v;
}

inline XPoly xprem(XPoly u, const XPoly& v) {
    assert(!v.empty());
    const BiPoly& lv = v.back();
    while (u.size() >= v.size()) {
        const BiPoly lu = u.back();
        const std::size_t shift = u.size() - v.size();
        for (BiPoly& c : u) c *= lv;
        for (std::size_t i = 0; i < v.size(); ++i) u[shift + i] -= lu * v[i];
        xstrip(u);
        if (u.empty()) break;
    }
    return u;
}

}  // namespace detail

/// Greatest common divisor in Z[q, x], integer content included, normalized
/// so the minimal-monomial coefficient is positive; gcd(0, b) returns the
/// sign-normalized b. Primitive-part pseudo-remainder sequence in x over Z[q].
inline BiPoly gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);

    // Monomial divisor: gcd is a monomial, read off exponent minima.
    if (a.is_monomial() || b.is_monomial()) {
        const BiPoly& mono = a.is_monomial() ? a : b;
        const BiPoly& other = a.is_monomial() ? b : a;
        const Term& m = mono.terms()[0];
        Int c = int_gcd(m.coeff, int_content(other));
        return BiPoly::monomial(std::move(c), std::min(m.mono.q_exp, other.min_q_exp()),
                                std::min(m.mono.x_exp, other.min_x_exp()));
    }

    const bool a_x_free = a.degree_x() == 0;
    const bool b_x_free = b.degree_x() == 0;
    if (a_x_free && b_x_free)
        return normalize_sign(detail::from_qpoly(detail::qgcd(detail::to_qpoly(a), detail::to_qpoly(b))));
    if (a_x_free || b_x_free) {
        // An x-free divisor must divide the x-content of the other operand.
        const BiPoly& flat = a_x_free ? a : b;
        const BiPoly& full = a_x_free ? b : a;
        const BiPoly cont = detail::xcontent(detail::to_xpoly(full));
        return normalize_sign(
            detail::from_qpoly(detail::qgcd(detail::to_qpoly(flat), detail::to_qpoly(cont))));
    }

    detail::XPoly u = detail::to_xpoly(a);
    detail::XPoly v = detail::to_xpoly(b);
    const BiPoly cu = detail::xcontent(u);
    const BiPoly cv = detail::xcontent(v);
    u = detail::xprimitive(std::move(u), cu);
    v = detail::xprimitive(std::move(v), cv);
    const BiPoly content =
        detail::from_qpoly(detail::qgcd(detail::to_qpoly(cu), detail::to_qpoly(cv)));

    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        detail::XPoly r = detail::xprem(std::move(u), v);
        const BiPoly rc = detail::xcontent(r);
        u = std::move(v);
        v = detail::xprimitive(std::move(r), rc);
    }
    return normalize_sign(content * detail::from_xpoly(u));
}

/// Least common multiple, sign-normalized.
inline BiPoly lcm(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return normalize_sign(divide_exact(a * b, gcd(a, b)));
}

}  // namespace qhankel
