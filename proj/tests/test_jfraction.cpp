#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "qhankel/families.hpp"
#include "qhankel/jfraction.hpp"

using namespace qhankel;

namespace {

const BiPoly kQ = BiPoly::q();
const BiPoly kX = BiPoly::x();

MomentSequence family_moments(FamilyKind kind, std::uint32_t max_index) {
    MomentSequence moments;
    for (const BiPoly& value : generate(FamilyId(kind), max_index, Route::closed_form).values)
        moments.moments.emplace_back(value);
    return moments;
}

BiPoly random_nonzero_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> term_count(1, 3);
    std::uniform_int_distribution<int> exponent(0, 2);
    std::uniform_int_distribution<int> coefficient(-4, 4);
    BiPoly p;
    while (p.is_zero()) {
        std::vector<Term> terms;
        const int count = term_count(rng);
        for (int i = 0; i < count; ++i)
            terms.push_back(Term{Monomial{std::uint32_t(exponent(rng)), std::uint32_t(exponent(rng))},
                                 Int(coefficient(rng))});
        p = BiPoly::from_terms(std::move(terms));
    }
    return p;
}

JacobiCoefficients random_coefficients(std::mt19937_64& rng, std::uint32_t depth) {
    JacobiCoefficients coeffs;
    std::uniform_int_distribution<int> coefficient(-4, 4);
    for (std::uint32_t k = 0; k < depth; ++k) {
        coeffs.s.emplace_back(BiPoly(coefficient(rng)) + BiPoly(coefficient(rng)) * kX);
        coeffs.t.emplace_back(random_nonzero_poly(rng));  // nonzero keeps the minors nonzero
    }
    return coeffs;
}

}  // namespace

TEST_CASE("extraction recovers the closed-form coefficients at depth 2") {
    const auto rs = extract(family_moments(FamilyKind::rogers_szego, 4), 2);
    CHECK(rs.s[0] == RatFunc(kX + BiPoly(1)));
    CHECK(rs.t[0] == RatFunc(kX * (kQ - BiPoly(1))));

    const auto poch = extract(family_moments(FamilyKind::pochhammer, 4), 2);
    CHECK(poch.s[0] == RatFunc(BiPoly(1) - kX));
    CHECK(poch.t[0] == RatFunc((BiPoly(1) - kQ) * kX * (BiPoly(1) - kX)));

    const auto hermite = extract(family_moments(FamilyKind::q_hermite, 4), 2);
    CHECK(hermite.s[0] == RatFunc(kX));
    CHECK(hermite.t[0] == RatFunc(-1));
}

TEST_CASE("extraction matches the closed forms to depth 5") {
    for (FamilyKind kind : {FamilyKind::rogers_szego, FamilyKind::pochhammer, FamilyKind::q_hermite}) {
        const JacobiCoefficients recovered = extract(family_moments(kind, 10), 5);
        const JacobiCoefficients expected = jacobi_instance(kind, 5);
        for (std::uint32_t k = 0; k < 5; ++k) CHECK(recovered.s[k] == expected.s[k]);
        for (std::uint32_t k = 0; k < 4; ++k) CHECK(recovered.t[k] == expected.t[k]);
    }
}

TEST_CASE("round trips") {
    // Constant s = 0, t = 1: Catalan-like moments with zero odd entries.
    JacobiCoefficients catalan;
    catalan.s.assign(8, RatFunc());
    catalan.t.assign(8, RatFunc(1));
    const auto column = build_table(catalan, 8).column0();
    CHECK(column[4] == RatFunc(2));
    CHECK(column[6] == RatFunc(5));
    CHECK(roundtrip_check(catalan, 4));

    CHECK(roundtrip_check(jacobi_instance(FamilyKind::rogers_szego, 8), 4));
    CHECK(roundtrip_check(jacobi_instance(FamilyKind::pochhammer, 8), 4));
    CHECK(roundtrip_check(jacobi_instance(FamilyKind::q_hermite, 8), 4));

    std::mt19937_64 rng(20250810);
    for (int trial = 0; trial < 8; ++trial)
        CHECK(roundtrip_check(random_coefficients(rng, 8), 4));
}

TEST_CASE("degenerate and insufficient moments") {
    JacobiCoefficients degenerate = jacobi_instance(FamilyKind::rogers_szego, 8);
    degenerate.t[0] = RatFunc();
    const auto column = build_table(degenerate, 8).column0();
    CHECK_THROWS_AS(extract(MomentSequence{column}, 4), DegenerateMomentsError);

    CHECK_THROWS_AS(extract(family_moments(FamilyKind::q_hermite, 4), 3), InsufficientMomentsError);
    CHECK_THROWS_AS(extract(MomentSequence{{RatFunc(2), RatFunc(kX)}}, 1), Error);
    CHECK_THROWS_AS(extract(family_moments(FamilyKind::q_hermite, 4), 0), Error);
}

TEST_CASE("in-range coefficients are observable in the moments") {
    // Perturbing any s(0..d-1) or t(0..d-2) changes some moment below 2d.
    std::mt19937_64 rng(606);
    const std::uint32_t depth = 3;
    const JacobiCoefficients base = random_coefficients(rng, 2 * depth);
    const auto base_column = build_table(base, 2 * depth).column0();
    for (std::uint32_t k = 0; k < depth; ++k) {
        JacobiCoefficients perturbed = base;
        perturbed.s[k] += RatFunc(1);
        CHECK(build_table(perturbed, 2 * depth).column0() != base_column);
    }
    for (std::uint32_t k = 0; k + 1 < depth; ++k) {
        JacobiCoefficients perturbed = base;
        perturbed.t[k] += RatFunc(1);
        CHECK(build_table(perturbed, 2 * depth).column0() != base_column);
    }
}

TEST_CASE("rational determinants clear denominators column-wise") {
    // Entries with q-power denominators: values known by direct expansion.
    std::vector<std::vector<RatFunc>> m(2, std::vector<RatFunc>(2));
    m[0][0] = RatFunc(BiPoly(1), kQ);
    m[0][1] = RatFunc(kX);
    m[1][0] = RatFunc(kX);
    m[1][1] = RatFunc(kQ);
    CHECK(det_rational(m) == RatFunc(BiPoly(1) - kX.pow(2)));

    // Geometric moments (1, 1/q, 1/q^2) are rank one.
    CHECK(hankel_det_rational({RatFunc(1), RatFunc(BiPoly(1), kQ), RatFunc(BiPoly(1), kQ.pow(2))},
                              2, 0) == RatFunc());
    CHECK(hankel_det_rational({RatFunc(1), RatFunc(BiPoly(1), kQ), RatFunc(1)}, 2, 0) ==
          RatFunc(kQ.pow(2) - BiPoly(1), kQ.pow(2)));
    CHECK(hankel_det_rational({RatFunc(1)}, 0, 0) == RatFunc(1));
    CHECK_THROWS_AS(hankel_det_rational({RatFunc(1)}, 2, 0), InsufficientSequenceError);
}
