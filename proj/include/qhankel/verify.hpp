#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qhankel/families.hpp"
#include "qhankel/hankel.hpp"
#include "qhankel/qkernel.hpp"

namespace qhankel {

/// Catalog of the closed-form Hankel determinant identities, one tag per
/// numbered claim: the two theorems (plain / weighted q-exponential families,
/// each with a shifted variant), the Rogers-Szego and Pochhammer lemmas, the
/// generalized base-q^c families with their shift relations, the q-factorial
/// and first-kind-Stirling specials, the q-Hermite determinant, and the
/// classical q -> 1 corollary.
enum class IdentityId {
    T1a,
    T1b,
    T2a,
    T2b,
    L3,
    L4a,
    L4b,
    PSI,
    PSIshift,
    QFACT,
    S1,
    PSI2,
    PSI2shift,
    HERM,
    RADOUX,
};

inline const std::array<IdentityId, 15>& identity_catalog() {
    static const std::array<IdentityId, 15> catalog = {
        IdentityId::T1a,   IdentityId::T1b,      IdentityId::T2a,  IdentityId::T2b,
        IdentityId::L3,    IdentityId::L4a,      IdentityId::L4b,  IdentityId::PSI,
        IdentityId::PSIshift, IdentityId::QFACT, IdentityId::S1,   IdentityId::PSI2,
        IdentityId::PSI2shift, IdentityId::HERM, IdentityId::RADOUX,
    };
    return catalog;
}

inline std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::T1a: return "T1a";
        case IdentityId::T1b: return "T1b";
        case IdentityId::T2a: return "T2a";
        case IdentityId::T2b: return "T2b";
        case IdentityId::L3: return "L3";
        case IdentityId::L4a: return "L4a";
        case IdentityId::L4b: return "L4b";
        case IdentityId::PSI: return "PSI";
        case IdentityId::PSIshift: return "PSIshift";
        case IdentityId::QFACT: return "QFACT";
        case IdentityId::S1: return "S1";
        case IdentityId::PSI2: return "PSI2";
        case IdentityId::PSI2shift: return "PSI2shift";
        case IdentityId::HERM: return "HERM";
        case IdentityId::RADOUX: return "RADOUX";
    }
    return "?";
}

inline std::optional<IdentityId> identity_from_name(const std::string& name) {
    for (IdentityId id : identity_catalog())
        if (identity_name(id) == name) return id;
    return std::nullopt;
}

/// Whether the identity is parameterized by c (the base-q^c families).
constexpr bool identity_takes_c(IdentityId id) {
    return id == IdentityId::PSI || id == IdentityId::PSIshift || id == IdentityId::PSI2 ||
           id == IdentityId::PSI2shift;
}

struct IdentityCase {
    IdentityId id = IdentityId::T1a;
    std::uint32_t n = 0;
    std::uint32_t c = 1;
    BiPoly lhs;
    BiPoly rhs;
    bool equal = false;
    std::int64_t millis = 0;
};

struct VerificationReport {
    std::string suite;
    std::vector<IdentityCase> cases;
    std::uint32_t passed = 0;
    std::uint32_t failed = 0;
};

namespace detail {

inline std::uint32_t choose2(std::uint32_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
inline std::uint32_t choose3(std::uint32_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

inline std::vector<BiPoly> family_values(FamilyKind kind, std::uint32_t c, std::uint32_t max_index) {
    return generate(FamilyId(kind, c), max_index, Route::closed_form).values;
}

}  // namespace detail

/// Evaluates one catalog entry at dimension n (and parameter c where it
/// applies): lhs is the Hankel determinant built from the family values, rhs
/// the cited closed form. A mismatch is a failed verdict, never an error.
inline IdentityCase check_identity(IdentityId id, std::uint32_t n, std::uint32_t c = 1,
                                   DetAlgorithm algorithm = DetAlgorithm::bareiss) {
    if (n == 0) throw Error("check_identity requires n >= 1");
    if (c == 0) throw Error("check_identity requires c >= 1");
    if (!identity_takes_c(id)) c = 1;

    const auto start = std::chrono::steady_clock::now();
    IdentityCase result;
    result.id = id;
    result.n = n;
    result.c = c;

    using detail::choose2;
    using detail::choose3;
    const std::uint32_t unshifted_len = 2 * (n - 1);
    const auto hankel_det = [&](const std::vector<BiPoly>& seq, std::uint32_t shift) {
        return det(hankel_matrix(seq, n, shift), algorithm);
    };
    const auto factorial_product = [&](std::uint32_t count, std::uint32_t base) {
        BiPoly p(1);
        for (std::uint32_t j = 0; j < count; ++j) p *= q_factorial_base(j, base);
        return p;
    };

    switch (id) {
        case IdentityId::T1a: {
            const auto seq = detail::family_values(FamilyKind::phi, 1, unshifted_len);
            result.lhs = hankel_det(seq, 0);
            result.rhs = factorial_product(n, 1).mul_monomial(1, choose3(n), choose2(n));
            break;
        }
        case IdentityId::T1b: {
            const auto seq = detail::family_values(FamilyKind::phi, 1, unshifted_len + 1);
            result.lhs = hankel_det(seq, 1);
            result.rhs = factorial_product(n, 1).mul_monomial(1, choose3(n + 1), choose2(n + 1));
            break;
        }
        case IdentityId::T2a:
        case IdentityId::T2b: {
            const std::uint32_t shift = id == IdentityId::T2b ? 1 : 0;
            const auto seq = detail::family_values(FamilyKind::Phi, 1, unshifted_len + shift);
            result.lhs = hankel_det(seq, shift);
            const BiPoly arg = (BiPoly(1) - BiPoly::q()) * BiPoly::x();
            BiPoly product(1);
            for (std::uint32_t j = 0; j < n; ++j) product *= q_factorial(j) * q_pochhammer(arg, j);
            result.rhs = product.mul_monomial(1, 2 * choose3(n + shift), choose2(n + shift));
            break;
        }
        case IdentityId::L3: {
            const auto seq = detail::family_values(FamilyKind::rogers_szego, 1, unshifted_len);
            result.lhs = hankel_det(seq, 0);
            result.rhs = (BiPoly::q() - BiPoly(1)).pow(choose2(n)) *
                         factorial_product(n, 1).mul_monomial(1, choose3(n), choose2(n));
            break;
        }
        case IdentityId::L4a:
        case IdentityId::L4b: {
            const std::uint32_t shift = id == IdentityId::L4b ? 1 : 0;
            const auto seq = detail::family_values(FamilyKind::pochhammer, 1, unshifted_len + shift);
            result.lhs = hankel_det(seq, shift);
            BiPoly product(1);
            for (std::uint32_t j = 0; j < n; ++j)
                product *= q_factorial(j) * q_pochhammer(BiPoly::x(), j + shift);
            result.rhs = (BiPoly(1) - BiPoly::q()).pow(choose2(n)) *
                         product.mul_monomial(1, 2 * choose3(n) + shift * choose2(n), choose2(n));
            break;
        }
        case IdentityId::PSI: {
            const auto seq = detail::family_values(FamilyKind::psi, c, unshifted_len);
            result.lhs = hankel_det(seq, 0);
            result.rhs = q_int(c).pow(choose2(n)) *
                         factorial_product(n, c).mul_monomial(1, c * choose3(n), c * choose2(n));
            break;
        }
        case IdentityId::PSIshift: {
            // det(psi_{i+j+1}) = x^{nc} q^{c C(n,2)} det(psi_{i+j}), ratio-free.
            const auto seq = detail::family_values(FamilyKind::psi, c, unshifted_len + 1);
            result.lhs = hankel_det(seq, 1);
            result.rhs = hankel_det(seq, 0).mul_monomial(1, c * choose2(n), n * c);
            break;
        }
        case IdentityId::QFACT: {
            std::vector<BiPoly> seq;
            for (std::uint32_t m = 0; m <= unshifted_len; ++m) seq.push_back(q_factorial(m));
            result.lhs = hankel_det(seq, 0);
            BiPoly product(1);
            for (std::uint32_t j = 0; j < n; ++j) {
                const BiPoly f = q_factorial(j);
                product *= f * f;
            }
            result.rhs = product.mul_monomial(1, n * (n - 1) * (2 * n - 1) / 6, 0);
            break;
        }
        case IdentityId::S1: {
            const auto seq = detail::family_values(FamilyKind::falling_factorial, 1, unshifted_len);
            result.lhs = hankel_det(seq, 0);
            BiPoly product(1);
            for (std::uint32_t j = 0; j < n; ++j) product *= q_factorial(j) * seq[j];
            result.rhs = product.mul_monomial(choose2(n) % 2 == 0 ? 1 : -1, 2 * choose3(n), 0);
            break;
        }
        case IdentityId::PSI2: {
            const auto seq = detail::family_values(FamilyKind::Psi, c, unshifted_len);
            result.lhs = hankel_det(seq, 0);
            const BiPoly arg = (BiPoly(1) - BiPoly::q()) * BiPoly::x(c);
            BiPoly product(1);
            for (std::uint32_t j = 0; j < n; ++j)
                product *= q_factorial_base(j, c) * q_pochhammer(arg, j, c);
            result.rhs =
                q_int(c).pow(choose2(n)) * product.mul_monomial(1, 2 * c * choose3(n), c * choose2(n));
            break;
        }
        case IdentityId::PSI2shift: {
            // det(Psi_{i+j+1}) = x^{nc} q^{2c C(n,2)} det(Psi_{i+j}), ratio-free.
            const auto seq = detail::family_values(FamilyKind::Psi, c, unshifted_len + 1);
            result.lhs = hankel_det(seq, 1);
            result.rhs = hankel_det(seq, 0).mul_monomial(1, 2 * c * choose2(n), n * c);
            break;
        }
        case IdentityId::HERM: {
            const auto seq = detail::family_values(FamilyKind::q_hermite, 1, unshifted_len);
            result.lhs = hankel_det(seq, 0);
            result.rhs =
                factorial_product(n, 1).mul_monomial(choose2(n) % 2 == 0 ? 1 : -1, choose3(n), 0);
            break;
        }
        case IdentityId::RADOUX: {
            const auto seq = detail::family_values(FamilyKind::classical_bell, 1, unshifted_len);
            result.lhs = hankel_det(seq, 0);
            Int product = 1;
            Int factorial = 1;
            for (std::uint32_t j = 1; j < n; ++j) {
                factorial *= j;
                product *= factorial;
            }
            result.rhs = BiPoly::monomial(product, 0, choose2(n));
            break;
        }
    }

    result.equal = result.lhs == result.rhs;
    result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return result;
}

/// Runs one case per (id, n, applicable c) in deterministic order: catalog
/// order, then n, then c.
inline VerificationReport run_suite(const std::vector<IdentityId>& ids, std::uint32_t n_max,
                                    const std::vector<std::uint32_t>& c_values,
                                    DetAlgorithm algorithm = DetAlgorithm::bareiss,
                                    std::string suite_name = "suite") {
    if (n_max == 0) throw Error("run_suite requires n_max >= 1");
    VerificationReport report;
    report.suite = std::move(suite_name);
    for (IdentityId catalog_id : identity_catalog()) {
        bool requested = false;
        for (IdentityId id : ids) requested = requested || id == catalog_id;
        if (!requested) continue;
        for (std::uint32_t n = 1; n <= n_max; ++n) {
            if (identity_takes_c(catalog_id)) {
                for (std::uint32_t c : c_values)
                    report.cases.push_back(check_identity(catalog_id, n, c, algorithm));
            } else {
                report.cases.push_back(check_identity(catalog_id, n, 1, algorithm));
            }
        }
    }
    for (const IdentityCase& entry : report.cases) (entry.equal ? report.passed : report.failed)++;
    return report;
}

inline VerificationReport run_all(std::uint32_t n_max, const std::vector<std::uint32_t>& c_values,
                                  DetAlgorithm algorithm = DetAlgorithm::bareiss) {
    const auto& catalog = identity_catalog();
    return run_suite(std::vector<IdentityId>(catalog.begin(), catalog.end()), n_max, c_values,
                     algorithm, "all");
}

/// One line per case (`PASS`/`FAIL` prefix); failed cases additionally print
/// both canonical forms in full; final summary line.
inline std::string report_text(const VerificationReport& report) {
    std::ostringstream out;
    for (const IdentityCase& entry : report.cases) {
        out << (entry.equal ? "PASS" : "FAIL") << ' ' << identity_name(entry.id) << " n=" << entry.n
            << " c=" << entry.c << '\n';
        if (!entry.equal) {
            out << "  lhs: " << entry.lhs.to_string() << '\n';
            out << "  rhs: " << entry.rhs.to_string() << '\n';
        }
    }
    out << "summary: passed=" << report.passed << " failed=" << report.failed << '\n';
    return out.str();
}

inline std::string report_json(const VerificationReport& report) {
    nlohmann::json doc;
    doc["suite"] = report.suite;
    doc["cases"] = nlohmann::json::array();
    for (const IdentityCase& entry : report.cases) {
        doc["cases"].push_back({
            {"id", identity_name(entry.id)},
            {"n", entry.n},
            {"c", entry.c},
            {"lhs", entry.lhs.to_string()},
            {"rhs", entry.rhs.to_string()},
            {"equal", entry.equal},
            {"millis", entry.millis},
        });
    }
    doc["summary"] = {{"passed", report.passed}, {"failed", report.failed}};
    return doc.dump(2) + "\n";
}

}  // namespace qhankel
