#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qhankel/gcd.hpp"
#include "qhankel/hankel.hpp"
#include "qhankel/motzkin.hpp"
#include "qhankel/ratfunc.hpp"

namespace qhankel {

/// Moment sequence of exact rational functions; moments[0] must be 1
/// (normalized moment functional).
struct MomentSequence {
    std::vector<RatFunc> moments;
};

/// Determinant of a square rational-function matrix: clears denominators
/// column-wise to polynomials, runs the fraction-free engine, restores the
/// cleared factor.
inline RatFunc det_rational(const std::vector<std::vector<RatFunc>>& m,
                            DetAlgorithm algorithm = DetAlgorithm::bareiss) {
    const auto n = static_cast<std::uint32_t>(m.size());
    if (n == 0) return RatFunc(BiPoly(1));
    PolyMatrix cleared(n);
    BiPoly restored_denominator(1);
    for (std::uint32_t j = 0; j < n; ++j) {
        BiPoly column_den(1);
        for (std::uint32_t i = 0; i < n; ++i) column_den = lcm(column_den, m[i][j].den());
        for (std::uint32_t i = 0; i < n; ++i)
            cleared.at(i, j) = m[i][j].num() * divide_exact(column_den, m[i][j].den());
        restored_denominator *= column_den;
    }
    return RatFunc(det(cleared, algorithm), restored_denominator);
}

/// Hankel determinant det(m_{i+j+shift}) of a rational-function sequence.
inline RatFunc hankel_det_rational(const std::vector<RatFunc>& values, std::uint32_t n,
                                   std::uint32_t shift = 0,
                                   DetAlgorithm algorithm = DetAlgorithm::bareiss) {
    if (n == 0) return RatFunc(BiPoly(1));
    const std::size_t needed = 2 * (static_cast<std::size_t>(n) - 1) + shift + 1;
    if (values.size() < needed)
        throw InsufficientSequenceError("rational Hankel determinant needs " +
                                        std::to_string(needed) + " values, got " +
                                        std::to_string(values.size()));
    std::vector<std::vector<RatFunc>> m(n, std::vector<RatFunc>(n));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) m[i][j] = values[i + j + shift];
    return det_rational(m, algorithm);
}

namespace detail {

// k x k minor on rows 0..k-1 and columns 0..k-2, k of the moment array:
// the x^{k-1}-coefficient minor of the monic orthogonal polynomial, so
// E_k / D_k is the sum of the first k diagonal coefficients s(0..k-1).
inline RatFunc coefficient_minor(const std::vector<RatFunc>& moments, std::uint32_t k,
                                 DetAlgorithm algorithm) {
    if (k == 0) return RatFunc();
    std::vector<std::vector<RatFunc>> m(k, std::vector<RatFunc>(k));
    for (std::uint32_t i = 0; i < k; ++i) {
        for (std::uint32_t j = 0; j + 1 < k; ++j) m[i][j] = moments[i + j];
        m[i][k - 1] = moments[i + k];
    }
    return det_rational(m, algorithm);
}

}  // namespace detail

/// Recovers the Jacobi coefficients s(0..depth-1), t(0..depth-2) from a
/// normalized moment sequence via exact minor ratios: with D_k the leading
/// principal Hankel minors and E_k the coefficient minors above,
///   t(k) = D_{k+2} D_k / D_{k+1}^2
///   s(k) = E_{k+1}/D_{k+1} - E_k/D_k     (E_0/D_0 taken as 0).
/// The convention is pinned by the round-trip against the table recurrence.
inline JacobiCoefficients extract(const MomentSequence& moments, std::uint32_t depth) {
    if (depth == 0) throw Error("extract requires depth >= 1");
    if (moments.moments.size() < 2 * static_cast<std::size_t>(depth))
        throw InsufficientMomentsError("extract to depth " + std::to_string(depth) + " needs " +
                                       std::to_string(2 * depth) + " moments, got " +
                                       std::to_string(moments.moments.size()));
    if (!moments.moments[0].is_one())
        throw Error("moment sequence must be normalized: moments[0] = 1");

    std::vector<RatFunc> principal(depth + 1);  // D_0 .. D_depth
    for (std::uint32_t k = 0; k <= depth; ++k) {
        principal[k] = hankel_det_rational(moments.moments, k, 0);
        if (k >= 1 && principal[k].is_zero())
            throw DegenerateMomentsError("Hankel minor D_" + std::to_string(k) +
                                         " vanishes; extraction undefined");
    }

    JacobiCoefficients coeffs;
    RatFunc previous_ratio;  // E_0/D_0 == 0
    for (std::uint32_t k = 0; k < depth; ++k) {
        const RatFunc ratio =
            detail::coefficient_minor(moments.moments, k + 1, DetAlgorithm::bareiss) /
            principal[k + 1];
        coeffs.s.push_back(ratio - previous_ratio);
        previous_ratio = ratio;
        if (k + 2 <= depth)
            coeffs.t.push_back(principal[k + 2] * principal[k] /
                               (principal[k + 1] * principal[k + 1]));
    }
    return coeffs;
}

/// extract(build_table(coeffs).column0, depth) reproduces s(0..depth-1) and
/// t(0..depth-2) exactly.
inline bool roundtrip_check(const JacobiCoefficients& coeffs, std::uint32_t depth) {
    const MotzkinTable table = build_table(coeffs, 2 * depth);
    const JacobiCoefficients recovered = extract(MomentSequence{table.column0()}, depth);
    for (std::uint32_t k = 0; k < depth; ++k)
        if (recovered.s[k] != coeffs.s[k]) return false;
    for (std::uint32_t k = 0; k + 1 < depth; ++k)
        if (recovered.t[k] != coeffs.t[k]) return false;
    return true;
}

}  // namespace qhankel
