#pragma once

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "qhankel/bipoly.hpp"
#include "qhankel/qkernel.hpp"

namespace qhankel {

/// Square matrix of exact polynomials.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::uint32_t n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}

    static PolyMatrix identity(std::uint32_t n) {
        PolyMatrix m(n);
        for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = BiPoly(1);
        return m;
    }

    std::uint32_t size() const { return n_; }

    BiPoly& at(std::uint32_t i, std::uint32_t j) {
        assert(i < n_ && j < n_);
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }
    const BiPoly& at(std::uint32_t i, std::uint32_t j) const {
        assert(i < n_ && j < n_);
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

    void swap_rows(std::uint32_t i, std::uint32_t j) {
        for (std::uint32_t col = 0; col < n_; ++col) std::swap(at(i, col), at(j, col));
    }

private:
    std::uint32_t n_ = 0;
    std::vector<BiPoly> entries_;
};

/// Hankel matrix: entry(i, j) = seq[i + j + shift].
inline PolyMatrix hankel_matrix(const std::vector<BiPoly>& seq, std::uint32_t n,
                                std::uint32_t shift = 0) {
    const std::size_t needed = n == 0 ? 0 : 2 * (static_cast<std::size_t>(n) - 1) + shift + 1;
    if (seq.size() < needed)
        throw InsufficientSequenceError("hankel_matrix needs " + std::to_string(needed) +
                                        " sequence values, got " + std::to_string(seq.size()));
    PolyMatrix m(n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) m.at(i, j) = seq[i + j + shift];
    return m;
}

enum class DetAlgorithm { bareiss, cofactor };

namespace detail {

// Fraction-free single-step Bareiss elimination. Every division is exact in
// the ring; intermediate entries are minors of the input matrix. Zero pivots
// are handled by swapping with the first lower row that has a nonzero entry
// in the pivot column (sign tracked); if none exists the determinant is 0.
inline BiPoly det_bareiss(PolyMatrix m) {
    const std::uint32_t n = m.size();
    if (n == 0) return BiPoly(1);
    bool negate = false;
    BiPoly previous_pivot(1);
    for (std::uint32_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::uint32_t r = k + 1;
            while (r < n && m.at(r, k).is_zero()) ++r;
            if (r == n) return {};
            m.swap_rows(k, r);
            negate = !negate;
        }
        for (std::uint32_t i = k + 1; i < n; ++i) {
            for (std::uint32_t j = k + 1; j < n; ++j) {
                m.at(i, j) = divide_exact(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j),
                                          previous_pivot);
            }
        }
        previous_pivot = m.at(k, k);
    }
    return negate ? -m.at(n - 1, n - 1) : m.at(n - 1, n - 1);
}

inline BiPoly det_cofactor(const PolyMatrix& m) {
    const std::uint32_t n = m.size();
    if (n == 0) return BiPoly(1);
    if (n == 1) return m.at(0, 0);
    BiPoly result;
    for (std::uint32_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1);
        for (std::uint32_t i = 1; i < n; ++i) {
            std::uint32_t col = 0;
            for (std::uint32_t jj = 0; jj < n; ++jj) {
                if (jj == j) continue;
                minor.at(i - 1, col++) = m.at(i, jj);
            }
        }
        const BiPoly contribution = m.at(0, j) * det_cofactor(minor);
        result += (j % 2 == 0) ? contribution : -contribution;
    }
    return result;
}

}  // namespace detail

/// Exact determinant; the 0x0 determinant is 1 (empty-product convention).
inline BiPoly det(const PolyMatrix& m, DetAlgorithm algorithm = DetAlgorithm::bareiss) {
    return algorithm == DetAlgorithm::bareiss ? detail::det_bareiss(m) : detail::det_cofactor(m);
}

/// Binomial transform b_n = sum_k C(n, k) a_k.
inline std::vector<BiPoly> binomial_transform(const std::vector<BiPoly>& seq) {
    std::vector<BiPoly> out(seq.size());
    for (std::size_t n = 0; n < seq.size(); ++n) {
        BiPoly b;
        for (std::size_t k = 0; k <= n; ++k)
            b += BiPoly(binomial(static_cast<long long>(n), static_cast<long long>(k))) * seq[k];
        out[n] = std::move(b);
    }
    return out;
}

/// det(x^{i+j} a_{i+j}) = x^{n(n-1)} det(a_{i+j}), checked exactly.
inline bool scaling_check(const std::vector<BiPoly>& seq, std::uint32_t n) {
    PolyMatrix scaled = hankel_matrix(seq, n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            scaled.at(i, j) = scaled.at(i, j).mul_monomial(1, 0, i + j);
    const BiPoly lhs = det(scaled);
    const BiPoly rhs = BiPoly::x(n * (n - 1)) * det(hankel_matrix(seq, n, 0));
    return lhs == rhs;
}

}  // namespace qhankel
