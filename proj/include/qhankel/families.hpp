#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qhankel/hankel.hpp"
#include "qhankel/operators.hpp"
#include "qhankel/qkernel.hpp"
#include "qhankel/ratfunc.hpp"
#include "qhankel/substitute.hpp"

namespace qhankel {

/// The polynomial families of interest. `phi` / `Phi` are the two
/// q-exponential families (plain and q^{C(k,2)}-weighted Stirling sums),
/// `psi` / `Psi` their base-q^c generalizations.
enum class FamilyKind {
    phi,
    Phi,
    rogers_szego,
    q_hermite,
    psi,
    Psi,
    falling_factorial,
    pochhammer,
    classical_bell,
};

constexpr bool family_takes_c(FamilyKind kind) {
    return kind == FamilyKind::psi || kind == FamilyKind::Psi;
}

inline std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::phi: return "phi";
        case FamilyKind::Phi: return "Phi";
        case FamilyKind::rogers_szego: return "rs";
        case FamilyKind::q_hermite: return "hermite";
        case FamilyKind::psi: return "psi";
        case FamilyKind::Psi: return "Psi";
        case FamilyKind::falling_factorial: return "ffact";
        case FamilyKind::pochhammer: return "poch";
        case FamilyKind::classical_bell: return "bell";
    }
    return "?";
}

inline std::optional<FamilyKind> family_from_name(const std::string& name) {
    for (FamilyKind kind :
         {FamilyKind::phi, FamilyKind::Phi, FamilyKind::rogers_szego, FamilyKind::q_hermite,
          FamilyKind::psi, FamilyKind::Psi, FamilyKind::falling_factorial, FamilyKind::pochhammer,
          FamilyKind::classical_bell}) {
        if (family_name(kind) == name) return kind;
    }
    return std::nullopt;
}

struct FamilyId {
    FamilyKind kind = FamilyKind::phi;
    std::uint32_t c = 1;

    FamilyId() = default;
    FamilyId(FamilyKind k, std::uint32_t c_value = 1) : kind(k), c(c_value) {
        if (c == 0) throw Error("family parameter c must be >= 1");
        if (!family_takes_c(kind)) c = 1;
    }

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

struct PolySequence {
    FamilyId family;
    std::vector<BiPoly> values;  // indexed 0..n_max
};

enum class Route { closed_form, recurrence_or_operator };

/// Step operator of the operator-defined families, applied iteratively to 1:
/// phi: x(1 + D), Phi: x eps + x D, psi: x^c + x D, Psi: x^c eps + x D.
inline LinearOp family_step_operator(FamilyKind kind, std::uint32_t c = 1) {
    const LinearOp x_d = compose(LinearOp::mul_x_power(1), LinearOp::derivative());
    switch (kind) {
        case FamilyKind::phi:
            return compose(LinearOp::mul_x_power(1), LinearOp::identity() + LinearOp::derivative());
        case FamilyKind::Phi:
            return compose(LinearOp::mul_x_power(1), LinearOp::dilation()) + x_d;
        case FamilyKind::psi:
            return LinearOp::mul_x_power(c) + x_d;
        case FamilyKind::Psi:
            return compose(LinearOp::mul_x_power(c), LinearOp::dilation()) + x_d;
        default:
            throw Error("no step operator for family " + family_name(kind));
    }
}

namespace detail {

inline BiPoly phi_closed(std::uint32_t n) {
    BiPoly p;
    for (std::uint32_t k = 0; k <= n; ++k) p += stirling2_q(n, k).mul_monomial(1, 0, k);
    return p;
}

inline BiPoly phi_weighted_closed(std::uint32_t n) {
    BiPoly p;
    for (std::uint32_t k = 0; k <= n; ++k) {
        const auto weight = static_cast<std::uint32_t>(binomial(k, 2));
        p += stirling2_q(n, k).mul_monomial(1, weight, k);
    }
    return p;
}

inline BiPoly rogers_szego_closed(std::uint32_t n) {
    BiPoly p;
    for (std::uint32_t k = 0; k <= n; ++k) p += q_binomial(n, k).mul_monomial(1, 0, k);
    return p;
}

// Characteristic polynomial of the truncated tridiagonal Jacobi matrix with
// zero diagonal, unit superdiagonal and subdiagonal [1], [2], ...; expansion
// along the last row reproduces H_n = x H_{n-1} - [n-1] H_{n-2}.
inline BiPoly q_hermite_closed(std::uint32_t n) {
    PolyMatrix m(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        m.at(i, i) = BiPoly::x();
        if (i + 1 < n) {
            m.at(i, i + 1) = BiPoly(-1);
            m.at(i + 1, i) = -q_int(i + 1);
        }
    }
    return det(m);
}

inline BiPoly psi_closed(std::uint32_t n, std::uint32_t c) {
    BiPoly p;
    const BiPoly c_bracket = q_int(c);
    for (std::uint32_t k = 0; k <= n; ++k)
        p += (stirling2_q(n, k, c) * c_bracket.pow(n - k)).mul_monomial(1, 0, c * k);
    return p;
}

// Weight in base q^c: the operator definition forces (q^c)^{C(k,2)}.
inline BiPoly psi_weighted_closed(std::uint32_t n, std::uint32_t c) {
    BiPoly p;
    const BiPoly c_bracket = q_int(c);
    for (std::uint32_t k = 0; k <= n; ++k) {
        const auto weight = c * static_cast<std::uint32_t>(binomial(k, 2));
        p += (stirling2_q(n, k, c) * c_bracket.pow(n - k)).mul_monomial(1, weight, c * k);
    }
    return p;
}

inline BiPoly falling_factorial_closed(std::uint32_t n) {
    BiPoly p(1);
    for (std::uint32_t j = 0; j < n; ++j) p *= BiPoly::x() - q_int(j);
    return p;
}

inline BiPoly falling_factorial_sum(std::uint32_t n) {
    BiPoly p;
    for (std::uint32_t k = 0; k <= n; ++k) p += stirling1_q(n, k).mul_monomial(1, 0, k);
    return p;
}

// (x; q)_n as an alternating q-binomial sum (the other route to the product).
inline BiPoly pochhammer_sum(std::uint32_t n) {
    BiPoly p;
    for (std::uint32_t k = 0; k <= n; ++k) {
        const auto weight = static_cast<std::uint32_t>(binomial(k, 2));
        BiPoly term = q_binomial(n, k).mul_monomial(1, weight, k);
        p += (k % 2 == 0) ? term : -term;
    }
    return p;
}

}  // namespace detail

/// Generates values[0..n_max] of the family along the requested route.
/// The two routes produce identical canonical forms; that equivalence is a
/// tested invariant, not an assumption.
inline PolySequence generate(FamilyId id, std::uint32_t n_max, Route route) {
    PolySequence seq;
    seq.family = id;
    seq.values.reserve(n_max + 1);

    const auto fill_closed = [&](auto&& member) {
        for (std::uint32_t n = 0; n <= n_max; ++n) seq.values.push_back(member(n));
    };
    const auto fill_operator = [&](const LinearOp& step) {
        BiPoly value(1);
        seq.values.push_back(value);
        for (std::uint32_t n = 1; n <= n_max; ++n) {
            value = step.apply(value);
            seq.values.push_back(value);
        }
    };

    switch (id.kind) {
        case FamilyKind::phi:
            if (route == Route::closed_form)
                fill_closed(detail::phi_closed);
            else
                fill_operator(family_step_operator(FamilyKind::phi));
            break;
        case FamilyKind::Phi:
            if (route == Route::closed_form)
                fill_closed(detail::phi_weighted_closed);
            else
                fill_operator(family_step_operator(FamilyKind::Phi));
            break;
        case FamilyKind::rogers_szego:
            if (route == Route::closed_form) {
                fill_closed(detail::rogers_szego_closed);
            } else {
                // r_n = (x+1) r_{n-1} + (q^{n-1} - 1) x r_{n-2}
                for (std::uint32_t n = 0; n <= n_max; ++n) {
                    if (n == 0) {
                        seq.values.push_back(BiPoly(1));
                    } else if (n == 1) {
                        seq.values.push_back(BiPoly::x() + BiPoly(1));
                    } else {
                        seq.values.push_back(
                            (BiPoly::x() + BiPoly(1)) * seq.values[n - 1] +
                            (BiPoly::q(n - 1) - BiPoly(1)) * BiPoly::x() * seq.values[n - 2]);
                    }
                }
            }
            break;
        case FamilyKind::q_hermite:
            if (route == Route::closed_form) {
                fill_closed(detail::q_hermite_closed);
            } else {
                // H_n = x H_{n-1} - [n-1] H_{n-2}
                for (std::uint32_t n = 0; n <= n_max; ++n) {
                    if (n == 0) {
                        seq.values.push_back(BiPoly(1));
                    } else if (n == 1) {
                        seq.values.push_back(BiPoly::x());
                    } else {
                        seq.values.push_back(BiPoly::x() * seq.values[n - 1] -
                                             q_int(n - 1) * seq.values[n - 2]);
                    }
                }
            }
            break;
        case FamilyKind::psi:
            if (route == Route::closed_form)
                fill_closed([&](std::uint32_t n) { return detail::psi_closed(n, id.c); });
            else
                fill_operator(family_step_operator(FamilyKind::psi, id.c));
            break;
        case FamilyKind::Psi:
            if (route == Route::closed_form)
                fill_closed([&](std::uint32_t n) { return detail::psi_weighted_closed(n, id.c); });
            else
                fill_operator(family_step_operator(FamilyKind::Psi, id.c));
            break;
        case FamilyKind::falling_factorial:
            if (route == Route::closed_form)
                fill_closed(detail::falling_factorial_closed);
            else
                fill_closed(detail::falling_factorial_sum);
            break;
        case FamilyKind::pochhammer:
            if (route == Route::closed_form)
                fill_closed([](std::uint32_t n) { return q_pochhammer(BiPoly::x(), n); });
            else
                fill_closed(detail::pochhammer_sum);
            break;
        case FamilyKind::classical_bell: {
            // Defined as the q -> 1 specialization of phi (single source of truth).
            PolySequence base = generate(FamilyId(FamilyKind::phi), n_max, route);
            for (BiPoly& value : base.values) seq.values.push_back(eval_q_one(value));
            break;
        }
    }
    return seq;
}

struct RepresentationCheck {
    BiPoly lhs;
    RatFunc rhs;
    bool equal = false;
};

/// Alternating-binomial representation with the (1-q)^{-n} prefactor:
/// phi_n = (1-q)^{-n} sum_i C(n,i) (-1)^i r_i((q-1)x), and the analogous
/// Pochhammer / base-q^c forms for Phi, psi, Psi. The cancellation of the
/// prefactor is the claim: a residual denominator is a failed check.
inline RepresentationCheck representation_check(FamilyId id, std::uint32_t n) {
    RepresentationCheck result;
    result.lhs = generate(id, n, Route::closed_form).values[n];

    BiPoly sum;
    const PolySequence rs = (id.kind == FamilyKind::phi || id.kind == FamilyKind::psi)
                                ? generate(FamilyId(FamilyKind::rogers_szego), n, Route::closed_form)
                                : PolySequence{};
    for (std::uint32_t i = 0; i <= n; ++i) {
        BiPoly term;
        const BiPoly q_minus_one = BiPoly::q() - BiPoly(1);
        const BiPoly one_minus_q = BiPoly(1) - BiPoly::q();
        switch (id.kind) {
            case FamilyKind::phi:
                term = substitute_x(rs.values[i], q_minus_one * BiPoly::x());
                break;
            case FamilyKind::Phi:
                term = q_pochhammer(one_minus_q * BiPoly::x(), i);
                break;
            case FamilyKind::psi:
                term = substitute_x(scale_q_exponents(rs.values[i], id.c),
                                    q_minus_one * BiPoly::x(id.c));
                break;
            case FamilyKind::Psi:
                term = q_pochhammer(one_minus_q * BiPoly::x(id.c), i, id.c);
                break;
            default:
                throw Error("representation_check applies to phi, Phi, psi, Psi only");
        }
        term = BiPoly(binomial(n, i)) * term;
        sum += (i % 2 == 0) ? term : -term;
    }
    result.rhs = RatFunc(sum, (BiPoly(1) - BiPoly::q()).pow(n));
    result.equal = result.rhs.is_polynomial() && result.rhs.num() == result.lhs;
    return result;
}

struct RecurrenceCheck {
    RatFunc lhs;
    RatFunc rhs;
    bool equal = false;
};

/// Binomial recurrences advancing member n+1 from members 0..n:
/// phi_{n+1} = x sum_k C(n,k) q^k phi_k(x/q); Phi_{n+1} = x sum_k C(n,k) q^k Phi_k(x);
/// psi_{n+1} = x^c sum_k C(n,k) q^{kc} [c]^{n-k} psi_k(x/q); Psi analogous with
/// no dilation. The x/q substitutions live in the fraction field.
inline RecurrenceCheck recurrence_check(FamilyId id, std::uint32_t n) {
    RecurrenceCheck result;
    const PolySequence seq = generate(id, n + 1, Route::closed_form);
    result.lhs = RatFunc(seq.values[n + 1]);

    const RatFunc x_over_q(BiPoly::x(), BiPoly::q());
    const BiPoly c_bracket = q_int(id.c);
    RatFunc sum;
    for (std::uint32_t k = 0; k <= n; ++k) {
        RatFunc term;
        switch (id.kind) {
            case FamilyKind::phi:
                term = substitute_x(seq.values[k], x_over_q) * RatFunc(BiPoly::q(k));
                break;
            case FamilyKind::Phi:
                term = RatFunc(seq.values[k].mul_monomial(1, k, 0));
                break;
            case FamilyKind::psi:
                term = substitute_x(seq.values[k], x_over_q) *
                       RatFunc(c_bracket.pow(n - k).mul_monomial(1, k * id.c, 0));
                break;
            case FamilyKind::Psi:
                term = RatFunc(seq.values[k] * c_bracket.pow(n - k).mul_monomial(1, k * id.c, 0));
                break;
            default:
                throw Error("recurrence_check applies to phi, Phi, psi, Psi only");
        }
        term *= RatFunc(Int(binomial(n, k)));
        sum += term;
    }
    result.rhs = RatFunc(BiPoly::x(id.c)) * sum;
    result.equal = result.lhs == result.rhs;
    return result;
}

}  // namespace qhankel
