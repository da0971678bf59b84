#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qhankel/bipoly.hpp"
#include "qhankel/qkernel.hpp"
#include "qhankel/ratfunc.hpp"
#include "qhankel/substitute.hpp"

namespace qhankel {

/// q-derivative by the monomial rule x^n -> [n] x^{n-1}.
inline BiPoly q_derivative(const BiPoly& p) {
    std::vector<Term> terms;
    for (const Term& t : p.terms()) {
        if (t.mono.x_exp == 0) continue;
        const BiPoly bracket = q_int(t.mono.x_exp);
        for (const Term& b : bracket.terms()) {
            terms.push_back(
                Term{Monomial{t.mono.q_exp + b.mono.q_exp, t.mono.x_exp - 1}, t.coeff * b.coeff});
        }
    }
    return BiPoly::from_terms(std::move(terms));
}

/// Dilation: x^n -> q^n x^n.
inline BiPoly dilate_forward(const BiPoly& p) {
    std::vector<Term> terms;
    terms.reserve(p.term_count());
    // Within each x-slice the q-shift is constant, so order is preserved.
    for (const Term& t : p.terms())
        terms.push_back(Term{Monomial{t.mono.q_exp + t.mono.x_exp, t.mono.x_exp}, t.coeff});
    BiPoly r = BiPoly::from_terms(std::move(terms));
    return r;
}

enum class Dilation { forward, inverse };

/// f(x) -> f(qx) (forward, stays polynomial) or f(x) -> f(x/q) (inverse).
inline RatFunc dilate(const BiPoly& p, Dilation direction) {
    if (direction == Dilation::forward) return RatFunc(dilate_forward(p));
    const std::uint32_t d = p.degree_x();
    std::vector<Term> terms;
    terms.reserve(p.term_count());
    for (const Term& t : p.terms())
        terms.push_back(Term{Monomial{t.mono.q_exp + (d - t.mono.x_exp), t.mono.x_exp}, t.coeff});
    return RatFunc(BiPoly::from_terms(std::move(terms)), BiPoly::q(d));
}

/// Composable linear operator on polynomials: q-derivative D, dilation
/// eps / eps^{-1}, multiplication by x^c or by a fixed polynomial, plus sums
/// and compositions. Application is linear by construction.
class LinearOp {
public:
    static LinearOp identity() { return LinearOp(Kind::identity); }
    static LinearOp derivative() { return LinearOp(Kind::derivative); }
    static LinearOp dilation() { return LinearOp(Kind::dilation); }
    static LinearOp dilation_inverse() { return LinearOp(Kind::dilation_inverse); }
    static LinearOp mul_x_power(std::uint32_t c) {
        LinearOp op(Kind::mul_x);
        op.x_power_ = c;
        return op;
    }
    static LinearOp scale(BiPoly factor) {
        LinearOp op(Kind::scale);
        op.factor_ = std::move(factor);
        return op;
    }

    friend LinearOp operator+(LinearOp a, LinearOp b) {
        LinearOp op(Kind::sum);
        op.children_.push_back(std::move(a));
        op.children_.push_back(std::move(b));
        return op;
    }

    /// compose(f, g) applies g first, then f.
    friend LinearOp compose(LinearOp outer, LinearOp inner) {
        LinearOp op(Kind::composition);
        op.children_.push_back(std::move(outer));
        op.children_.push_back(std::move(inner));
        return op;
    }

    bool polynomial_safe() const {
        if (kind_ == Kind::dilation_inverse) return false;
        for (const LinearOp& child : children_)
            if (!child.polynomial_safe()) return false;
        return true;
    }

    BiPoly apply(const BiPoly& p) const {
        switch (kind_) {
            case Kind::identity:
                return p;
            case Kind::derivative:
                return q_derivative(p);
            case Kind::dilation:
                return dilate_forward(p);
            case Kind::dilation_inverse:
                throw Error("dilation inverse leaves the polynomial ring; apply to a RatFunc");
            case Kind::mul_x:
                return p.mul_monomial(1, 0, x_power_);
            case Kind::scale:
                return factor_ * p;
            case Kind::sum:
                return children_[0].apply(p) + children_[1].apply(p);
            case Kind::composition:
                return children_[0].apply(children_[1].apply(p));
        }
        return {};
    }

    RatFunc apply(const RatFunc& f) const {
        switch (kind_) {
            case Kind::identity:
                return f;
            case Kind::derivative: {
                // Quotient definition (f(x) - f(qx)) / ((1-q)x); exact in the field.
                const RatFunc shifted = substitute(f, RatFunc(BiPoly::q()), RatFunc(BiPoly::q() * BiPoly::x()));
                return (f - shifted) / RatFunc((BiPoly(1) - BiPoly::q()) * BiPoly::x());
            }
            case Kind::dilation:
                return substitute(f, RatFunc(BiPoly::q()), RatFunc(BiPoly::q() * BiPoly::x()));
            case Kind::dilation_inverse:
                return substitute(f, RatFunc(BiPoly::q()), RatFunc(BiPoly::x(), BiPoly::q()));
            case Kind::mul_x:
                return f * RatFunc(BiPoly::x(x_power_));
            case Kind::scale:
                return f * RatFunc(factor_);
            case Kind::sum:
                return children_[0].apply(f) + children_[1].apply(f);
            case Kind::composition:
                return children_[0].apply(children_[1].apply(f));
        }
        return {};
    }

    /// op^n applied to start.
    BiPoly iterate(BiPoly start, std::uint32_t n) const {
        for (std::uint32_t i = 0; i < n; ++i) start = apply(start);
        return start;
    }

private:
    enum class Kind { identity, derivative, dilation, dilation_inverse, mul_x, scale, sum, composition };

    explicit LinearOp(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::uint32_t x_power_ = 0;
    BiPoly factor_;
    std::vector<LinearOp> children_;
};

/// Checks eps x D eps^{-1} = x D and D x = 1 + q x D on x^0 .. x^{n_max}.
inline bool commutation_check(std::uint32_t n_max) {
    const LinearOp x_d = compose(LinearOp::mul_x_power(1), LinearOp::derivative());
    const LinearOp conjugated =
        compose(LinearOp::dilation(), compose(x_d, LinearOp::dilation_inverse()));
    const LinearOp d_after_x = compose(LinearOp::derivative(), LinearOp::mul_x_power(1));
    const LinearOp one_plus_qxd =
        LinearOp::identity() + compose(LinearOp::scale(BiPoly::q()), x_d);
    for (std::uint32_t n = 0; n <= n_max; ++n) {
        const RatFunc basis{BiPoly::x(n)};
        if (conjugated.apply(basis) != x_d.apply(basis)) return false;
        if (d_after_x.apply(basis) != one_plus_qxd.apply(basis)) return false;
    }
    return true;
}

}  // namespace qhankel
