#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qhankel/hankel.hpp"
#include "qhankel/jfraction.hpp"
#include "qhankel/motzkin.hpp"

using namespace qhankel;

namespace {

const BiPoly kQ = BiPoly::q();
const BiPoly kX = BiPoly::x();

JacobiCoefficients constant_coefficients(const RatFunc& s, const RatFunc& t, std::uint32_t depth) {
    JacobiCoefficients coeffs;
    coeffs.s.assign(depth, s);
    coeffs.t.assign(depth, t);
    return coeffs;
}

}  // namespace

TEST_CASE("table recurrence basics") {
    // s = t = 0: the triangle is a pure shift, a(n, k) = [n = k].
    const MotzkinTable shift = build_table(constant_coefficients(RatFunc(), RatFunc(), 6), 6);
    for (std::uint32_t n = 0; n <= 6; ++n)
        for (std::uint32_t k = 0; k <= n; ++k)
            CHECK(shift.entry(n, k) == (n == k ? RatFunc(1) : RatFunc()));

    const MotzkinTable rs = build_table(jacobi_instance(FamilyKind::rogers_szego, 4), 4);
    CHECK(rs.entry(2, 0) == RatFunc(BiPoly(1) + (BiPoly(1) + kQ) * kX + kX.pow(2)));
    CHECK(rs.entry(1, 1) == RatFunc(1));

    const MotzkinTable hermite = build_table(jacobi_instance(FamilyKind::q_hermite, 4), 4);
    CHECK(hermite.entry(2, 0) == RatFunc(kX.pow(2) - BiPoly(1)));
}

TEST_CASE("diagonal entries are forced to one") {
    const MotzkinTable table = build_table(jacobi_instance(FamilyKind::pochhammer, 8), 8);
    for (std::uint32_t n = 0; n <= 8; ++n) CHECK(table.entry(n, n) == RatFunc(1));
    CHECK(table.entry(0, 0) == RatFunc(1));
}

TEST_CASE("table requires enough coefficients") {
    CHECK_THROWS_AS(build_table(jacobi_instance(FamilyKind::q_hermite, 2), 5), Error);
    CHECK_THROWS_AS(product_formula(constant_coefficients(RatFunc(), RatFunc(1), 1), 4), Error);
}

TEST_CASE("product formula") {
    const auto rs = jacobi_instance(FamilyKind::rogers_szego, 4);
    CHECK(product_formula(rs, 1) == RatFunc(1));
    CHECK(product_formula(rs, 2) == RatFunc((kQ - BiPoly(1)) * kX));
    // t(0)^2 t(1) = q x^3 (q-1)^3 (1+q)
    CHECK(product_formula(rs, 3) ==
          RatFunc(kQ * kX.pow(3) * (kQ - BiPoly(1)).pow(3) * (BiPoly(1) + kQ)));
}

TEST_CASE("vanishing t degenerates the product but not the table") {
    JacobiCoefficients coeffs = jacobi_instance(FamilyKind::rogers_szego, 5);
    coeffs.t[0] = RatFunc();
    const MotzkinTable table = build_table(coeffs, 5);
    CHECK(table.depth() == 5);
    CHECK(product_formula(coeffs, 3) == RatFunc());
}

TEST_CASE("closed-form tables for the three instances") {
    CHECK(closed_form_check(FamilyKind::rogers_szego, 10));
    CHECK(closed_form_check(FamilyKind::pochhammer, 10));
    CHECK(closed_form_check(FamilyKind::q_hermite, 10));
    CHECK_THROWS_AS(jacobi_instance(FamilyKind::phi, 3), Error);

    // Spot values: a(2,1) = [2 1] r_1 and a(2,1) = [2 1](qx; q)_1.
    const MotzkinTable rs = build_table(jacobi_instance(FamilyKind::rogers_szego, 2), 2);
    CHECK(rs.entry(2, 1) == RatFunc((BiPoly(1) + kQ) * (BiPoly(1) + kX)));
    const MotzkinTable poch = build_table(jacobi_instance(FamilyKind::pochhammer, 2), 2);
    CHECK(poch.entry(2, 1) == RatFunc((BiPoly(1) + kQ) * (BiPoly(1) - kQ * kX)));
}

TEST_CASE("moment columns reproduce the families") {
    const auto rs = generate(FamilyId(FamilyKind::rogers_szego), 10, Route::closed_form).values;
    const auto poch = generate(FamilyId(FamilyKind::pochhammer), 10, Route::closed_form).values;
    const auto hermite = generate(FamilyId(FamilyKind::q_hermite), 10, Route::closed_form).values;
    CHECK(build_table(jacobi_instance(FamilyKind::rogers_szego, 10), 10).column0_poly() == rs);
    CHECK(build_table(jacobi_instance(FamilyKind::pochhammer, 10), 10).column0_poly() == poch);
    CHECK(build_table(jacobi_instance(FamilyKind::q_hermite, 10), 10).column0_poly() == hermite);
}

TEST_CASE("Hankel determinants of the moment column factor into t-products") {
    for (FamilyKind kind : {FamilyKind::rogers_szego, FamilyKind::pochhammer, FamilyKind::q_hermite}) {
        const JacobiCoefficients coeffs = jacobi_instance(kind, 12);
        const auto column = build_table(coeffs, 12).column0_poly();
        for (std::uint32_t n = 1; n <= 7; ++n)
            CHECK(RatFunc(det(hankel_matrix(column, n, 0))) == product_formula(coeffs, n));
    }
}

TEST_CASE("polynomial downgrade") {
    const MotzkinTable poly_table = build_table(jacobi_instance(FamilyKind::q_hermite, 3), 3);
    CHECK(poly_table.is_polynomial());
    CHECK(poly_table.column0_poly().size() == 4);

    const MotzkinTable rational_table =
        build_table(constant_coefficients(RatFunc(BiPoly(1), kQ), RatFunc(1), 2), 2);
    CHECK_FALSE(rational_table.is_polynomial());
    CHECK_THROWS_AS(rational_table.column0_poly(), Error);
    CHECK(rational_table.column0()[2] == RatFunc(BiPoly(1) + kQ.pow(2), kQ.pow(2)));
}

TEST_CASE("table dump format") {
    const MotzkinTable table = build_table(jacobi_instance(FamilyKind::q_hermite, 2), 2);
    CHECK(table.dump() == "0: 1\n1: x | 1\n2: x^2 - 1 | x + q*x | 1\n");
}
