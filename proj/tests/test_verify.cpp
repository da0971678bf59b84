#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "qhankel/jfraction.hpp"
#include "qhankel/substitute.hpp"
#include "qhankel/verify.hpp"

using namespace qhankel;

namespace {

const BiPoly kQ = BiPoly::q();
const BiPoly kX = BiPoly::x();

}  // namespace

TEST_CASE("catalog cases at n = 2") {
    const auto t1a = check_identity(IdentityId::T1a, 2);
    CHECK(t1a.lhs == kX);
    CHECK(t1a.equal);

    const auto t1b = check_identity(IdentityId::T1b, 2);
    CHECK(t1b.lhs == kQ * kX.pow(3));
    CHECK(t1b.equal);

    const auto t2b = check_identity(IdentityId::T2b, 2);
    CHECK(t2b.lhs == kQ.pow(2) * kX.pow(3) * (BiPoly(1) - (BiPoly(1) - kQ) * kX));
    CHECK(t2b.equal);

    const auto l4a = check_identity(IdentityId::L4a, 2);
    CHECK(l4a.lhs == (BiPoly(1) - kQ) * kX * (BiPoly(1) - kX));
    CHECK(l4a.equal);

    CHECK(check_identity(IdentityId::QFACT, 2).lhs == kQ);
    CHECK(check_identity(IdentityId::S1, 2).lhs == -kX);
    CHECK(check_identity(IdentityId::HERM, 2).lhs == BiPoly(-1));

    for (std::uint32_t c : {1u, 2u, 5u}) {
        const auto psi = check_identity(IdentityId::PSI, 2, c);
        CHECK(psi.lhs == q_int(c) * kX.pow(c));
        CHECK(psi.equal);
    }
}

TEST_CASE("every identity degenerates gracefully at n = 1") {
    for (IdentityId id : identity_catalog()) {
        const auto result = check_identity(id, 1, 2);
        CHECK(result.equal);
    }
    CHECK_THROWS_AS(check_identity(IdentityId::T1a, 0), Error);
    CHECK_THROWS_AS(check_identity(IdentityId::PSI, 2, 0), Error);
}

TEST_CASE("suite runs in catalog order with per-case c expansion") {
    const auto all_small = run_all(1, {1});
    CHECK(all_small.passed == all_small.cases.size());
    CHECK(all_small.failed == 0);
    CHECK(all_small.cases.size() == identity_catalog().size());

    const auto t1a_only = run_suite({IdentityId::T1a}, 4, {1});
    CHECK(t1a_only.cases.size() == 4);
    CHECK(t1a_only.passed == 4);
    for (std::uint32_t i = 0; i < 4; ++i) CHECK(t1a_only.cases[i].n == i + 1);

    const auto psi_suite = run_suite({IdentityId::PSI}, 3, {1, 2});
    CHECK(psi_suite.cases.size() == 6);
    CHECK(psi_suite.passed == 6);
    // c = 1 cases coincide with the plain-family values.
    for (const IdentityCase& entry : psi_suite.cases) {
        if (entry.c != 1) continue;
        const auto reference = check_identity(IdentityId::T1a, entry.n);
        CHECK(entry.lhs == reference.lhs);
        CHECK(entry.rhs == reference.rhs);
    }
    // Requested ids not in catalog order still run in catalog order.
    const auto reordered = run_suite({IdentityId::HERM, IdentityId::T1a}, 1, {1});
    CHECK(reordered.cases[0].id == IdentityId::T1a);
    CHECK(reordered.cases[1].id == IdentityId::HERM);
}

TEST_CASE("shift relation factors: direct versus derived route") {
    // Shifted determinants against the binomial-transform route: the shifted
    // sequence is x * BIN(u) with u_k = q^k f_k(x / q or x), so the shifted
    // determinant factors through the unshifted one.
    const auto phi = generate(FamilyId(FamilyKind::phi), 12, Route::closed_form).values;
    const auto weighted = generate(FamilyId(FamilyKind::Phi), 12, Route::closed_form).values;
    const RatFunc x_over_q(kX, kQ);
    for (std::uint32_t n = 1; n <= 5; ++n) {
        const BiPoly unshifted = det(hankel_matrix(phi, n, 0));
        const BiPoly shifted = det(hankel_matrix(phi, n, 1));
        // Direct factor x^n q^{C(n,2)}.
        CHECK(shifted == unshifted.mul_monomial(1, n * (n - 1) / 2, n));
        // Route factor x^n q^{n(n-1)} applied to the x -> x/q image.
        CHECK(RatFunc(shifted) ==
              RatFunc(BiPoly::monomial(1, n * (n - 1), n)) * substitute_x(unshifted, x_over_q));

        const BiPoly unshifted_w = det(hankel_matrix(weighted, n, 0));
        const BiPoly shifted_w = det(hankel_matrix(weighted, n, 1));
        CHECK(shifted_w == unshifted_w.mul_monomial(1, n * (n - 1), n));
    }

    // The recurrence layer of the route: the shifted sequence really is
    // x * BIN(q^k Phi_k), and the q-scaling layer matches the x-scaling law.
    std::vector<BiPoly> scaled;
    for (std::uint32_t k = 0; k < weighted.size(); ++k)
        scaled.push_back(weighted[k].mul_monomial(1, k, 0));
    const auto transformed = binomial_transform(scaled);
    for (std::uint32_t n = 0; n + 1 < weighted.size(); ++n)
        CHECK(weighted[n + 1] == kX * transformed[n]);
    for (std::uint32_t n = 1; n <= 5; ++n)
        CHECK(det(hankel_matrix(scaled, n, 0)) ==
              det(hankel_matrix(weighted, n, 0)).mul_monomial(1, n * (n - 1), 0));
}

TEST_CASE("generalized families hold at the full suite bounds") {
    const std::vector<IdentityId> generalized = {IdentityId::PSI, IdentityId::PSIshift,
                                                 IdentityId::PSI2, IdentityId::PSI2shift};
    const auto wide = run_suite(generalized, 7, {1, 2});
    CHECK(wide.failed == 0);
    CHECK(wide.cases.size() == 4 * 7 * 2);
    const auto deep = run_suite(generalized, 5, {3});
    CHECK(deep.failed == 0);
}

TEST_CASE("classical specialization is the q to 1 limit of the plain identity") {
    for (std::uint32_t n = 1; n <= 6; ++n) {
        const auto classical = check_identity(IdentityId::RADOUX, n);
        const auto plain = check_identity(IdentityId::T1a, n);
        CHECK(classical.equal);
        CHECK(classical.lhs == eval_q_one(plain.lhs));
        CHECK(classical.rhs == eval_q_one(plain.rhs));
    }
}

TEST_CASE("report rendering") {
    VerificationReport report;
    report.suite = "demo";
    IdentityCase pass;
    pass.id = IdentityId::T1a;
    pass.n = 2;
    pass.c = 1;
    pass.lhs = kX;
    pass.rhs = kX;
    pass.equal = true;
    pass.millis = 3;
    IdentityCase fail = pass;
    fail.id = IdentityId::HERM;
    fail.rhs = kQ;
    fail.equal = false;
    report.cases = {pass, fail};
    report.passed = 1;
    report.failed = 1;

    CHECK(report_text(report) ==
          "PASS T1a n=2 c=1\n"
          "FAIL HERM n=2 c=1\n"
          "  lhs: x\n"
          "  rhs: q\n"
          "summary: passed=1 failed=1\n");

    const auto doc = nlohmann::json::parse(report_json(report));
    CHECK(doc["suite"] == "demo");
    REQUIRE(doc["cases"].is_array());
    REQUIRE(doc["cases"].size() == 2);
    CHECK(doc["cases"][0]["id"] == "T1a");
    CHECK(doc["cases"][0]["n"] == 2);
    CHECK(doc["cases"][0]["c"] == 1);
    CHECK(doc["cases"][0]["lhs"] == "x");
    CHECK(doc["cases"][0]["rhs"] == "x");
    CHECK(doc["cases"][0]["equal"] == true);
    CHECK(doc["cases"][0]["millis"].is_number_integer());
    CHECK(doc["cases"][1]["equal"] == false);
    CHECK(doc["summary"]["passed"] == 1);
    CHECK(doc["summary"]["failed"] == 1);
}

TEST_CASE("identity names round-trip") {
    for (IdentityId id : identity_catalog()) {
        const auto parsed = identity_from_name(identity_name(id));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == id);
    }
    CHECK_FALSE(identity_from_name("T9z").has_value());
    CHECK(identity_takes_c(IdentityId::PSI2shift));
    CHECK_FALSE(identity_takes_c(IdentityId::L3));
}

TEST_CASE("report counts stay consistent with the cases") {
    const auto report = run_suite({IdentityId::L3, IdentityId::QFACT}, 3, {1});
    CHECK(report.cases.size() == 6);
    std::uint32_t passed = 0;
    for (const IdentityCase& entry : report.cases) passed += entry.equal ? 1 : 0;
    CHECK(report.passed == passed);
    CHECK(report.failed == report.cases.size() - passed);
}
