#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qhankel/families.hpp"
#include "qhankel/ratfunc.hpp"

namespace qhankel {

/// Diagonal and sub-diagonal weight sequences of the tridiagonal (Motzkin
/// path) recurrence; the output of J-fraction extraction and the input of
/// table generation.
struct JacobiCoefficients {
    std::vector<RatFunc> s;
    std::vector<RatFunc> t;
};

/// Triangular array a(n, k) generated from the coefficients:
///   a(0, k) = [k = 0]
///   a(n, 0) = s(0) a(n-1, 0) + t(0) a(n-1, 1)
///   a(n, k) = a(n-1, k-1) + s(k) a(n-1, k) + t(k) a(n-1, k+1)
/// The moment sequence is the column a(n, 0).
class MotzkinTable {
public:
    MotzkinTable(std::vector<std::vector<RatFunc>> rows) : rows_(std::move(rows)) {}

    std::uint32_t depth() const { return static_cast<std::uint32_t>(rows_.size()) - 1; }

    const RatFunc& entry(std::uint32_t n, std::uint32_t k) const {
        if (n >= rows_.size() || k >= rows_[n].size())
            throw Error("MotzkinTable entry out of range");
        return rows_[n][k];
    }

    std::vector<RatFunc> column0() const {
        std::vector<RatFunc> column;
        column.reserve(rows_.size());
        for (const auto& row : rows_) column.push_back(row[0]);
        return column;
    }

    bool is_polynomial() const {
        for (const auto& row : rows_)
            for (const RatFunc& e : row)
                if (!e.is_polynomial()) return false;
        return true;
    }

    std::vector<BiPoly> column0_poly() const {
        std::vector<BiPoly> column;
        column.reserve(rows_.size());
        for (const auto& row : rows_) column.push_back(row[0].as_poly());
        return column;
    }

    /// Rows rendered `n: a(n,0) | a(n,1) | ... | a(n,n)`.
    std::string dump() const {
        std::ostringstream out;
        for (std::size_t n = 0; n < rows_.size(); ++n) {
            out << n << ':';
            for (std::size_t k = 0; k < rows_[n].size(); ++k)
                out << (k == 0 ? " " : " | ") << rows_[n][k].to_string();
            out << '\n';
        }
        return out.str();
    }

private:
    std::vector<std::vector<RatFunc>> rows_;
};

/// Builds the full triangle to depth n_max (requires s(0..n_max-1) and, for
/// n_max >= 2, t(0..n_max-2)).
inline MotzkinTable build_table(const JacobiCoefficients& coeffs, std::uint32_t n_max) {
    if (n_max >= 1 && coeffs.s.size() < n_max)
        throw Error("build_table: s sequence shorter than requested depth");
    if (n_max >= 2 && coeffs.t.size() + 1 < n_max)
        throw Error("build_table: t sequence shorter than requested depth");
    std::vector<std::vector<RatFunc>> rows;
    rows.reserve(n_max + 1);
    rows.push_back({RatFunc(BiPoly(1))});
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        const auto& prev = rows[n - 1];
        std::vector<RatFunc> row(n + 1);
        for (std::uint32_t k = 0; k <= n; ++k) {
            RatFunc value;
            if (k >= 1) value += prev[k - 1];
            if (k <= n - 1) value += coeffs.s[k] * prev[k];
            if (k + 1 <= n - 1) value += coeffs.t[k] * prev[k + 1];
            row[k] = std::move(value);
        }
        rows.push_back(std::move(row));
    }
    return MotzkinTable(std::move(rows));
}

/// Hankel determinant of the table's moment column as the closed product
/// prod_{i=1}^{n-1} prod_{k=0}^{i-1} t(k); the empty product (n = 1) is 1.
inline RatFunc product_formula(const JacobiCoefficients& coeffs, std::uint32_t n) {
    if (n == 0) return RatFunc(BiPoly(1));
    if (n >= 2 && coeffs.t.size() + 2 < n + 1)
        throw Error("product_formula: t sequence shorter than n-1 entries");
    RatFunc product{BiPoly(1)};
    for (std::uint32_t i = 1; i < n; ++i)
        for (std::uint32_t k = 0; k < i; ++k) product *= coeffs.t[k];
    return product;
}

/// The three closed-form instances: coefficients whose moment column a(n, 0)
/// is r_n(x), (x; q)_n and H_n(x) respectively.
inline JacobiCoefficients jacobi_instance(FamilyKind kind, std::uint32_t depth) {
    JacobiCoefficients coeffs;
    coeffs.s.reserve(depth);
    coeffs.t.reserve(depth);
    const RatFunc x{BiPoly::x()};
    const RatFunc one{BiPoly(1)};
    for (std::uint32_t k = 0; k < depth; ++k) {
        switch (kind) {
            case FamilyKind::rogers_szego:
                // s(k) = q^k (x+1), t(k) = q^k x (q^{k+1} - 1)
                coeffs.s.push_back(RatFunc(BiPoly::q(k)) * (x + one));
                coeffs.t.push_back(RatFunc(BiPoly::q(k)) * x * (RatFunc(BiPoly::q(k + 1)) - one));
                break;
            case FamilyKind::pochhammer: {
                // s(n) = q^n + q^{n-1} x (1 - q^n (1+q)); the q^{n-1} factor is
                // rational at n = 0 but the combination reduces to a polynomial.
                const RatFunc q_pow{BiPoly::q(k)};
                const RatFunc q_pow_prev =
                    k == 0 ? RatFunc(BiPoly(1), BiPoly::q()) : RatFunc(BiPoly::q(k - 1));
                coeffs.s.push_back(
                    q_pow + q_pow_prev * x * (one - q_pow * RatFunc(BiPoly(1) + BiPoly::q())));
                // t(n) = q^{2n} (1 - q^{n+1}) x (1 - q^n x)
                coeffs.t.push_back(RatFunc(BiPoly::q(2 * k)) *
                                   (one - RatFunc(BiPoly::q(k + 1))) * x *
                                   (one - RatFunc(BiPoly::q(k)) * x));
                break;
            }
            case FamilyKind::q_hermite:
                // s(n) = q^n x, t(n) = -q^n [n+1]
                coeffs.s.push_back(RatFunc(BiPoly::q(k)) * x);
                coeffs.t.push_back(RatFunc(-(BiPoly::q(k) * q_int(k + 1))));
                break;
            default:
                throw Error("jacobi_instance supports rs, poch and hermite");
        }
    }
    return coeffs;
}

/// Entrywise comparison of the generated triangle with the closed form
/// a(n, k) = [n k] F_{n-k}: F = r for rs, (q^k x; q)_{n-k} for poch, H for
/// hermite.
inline bool closed_form_check(FamilyKind kind, std::uint32_t n_max) {
    const MotzkinTable table = build_table(jacobi_instance(kind, n_max), n_max);
    const PolySequence family =
        kind == FamilyKind::pochhammer
            ? PolySequence{}
            : generate(FamilyId(kind), n_max, Route::closed_form);
    for (std::uint32_t n = 0; n <= n_max; ++n) {
        for (std::uint32_t k = 0; k <= n; ++k) {
            BiPoly expected;
            if (kind == FamilyKind::pochhammer)
                expected = q_binomial(n, k) * q_pochhammer(BiPoly::x().mul_monomial(1, k, 0), n - k);
            else
                expected = q_binomial(n, k) * family.values[n - k];
            if (table.entry(n, k) != RatFunc(expected)) return false;
        }
    }
    return true;
}

}  // namespace qhankel
