#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qhankel/qkernel.hpp"
#include "qhankel/substitute.hpp"

using namespace qhankel;

namespace {

const BiPoly kQ = BiPoly::q();
const BiPoly kX = BiPoly::x();

// Classical Stirling numbers of the second kind (integer recurrence oracle).
long long classical_stirling2(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    return classical_stirling2(n - 1, k - 1) + k * classical_stirling2(n - 1, k);
}

BiPoly q_binomial_by_division(int n, int k) {
    if (k < 0 || n < 0 || k > n) return {};
    return divide_exact(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

}  // namespace

TEST_CASE("q-integers") {
    CHECK(q_int(0) == BiPoly(0));
    CHECK(q_int(1) == BiPoly(1));
    CHECK(q_int(3) == BiPoly(1) + kQ + kQ.pow(2));
    CHECK(q_int_base(2, 3) == BiPoly(1) + kQ.pow(3));
}

TEST_CASE("q-factorials") {
    CHECK(q_factorial(0) == BiPoly(1));
    CHECK(q_factorial(2) == BiPoly(1) + kQ);
    CHECK(q_factorial(3) == BiPoly(1) + BiPoly(2) * kQ + BiPoly(2) * kQ.pow(2) + kQ.pow(3));
}

TEST_CASE("q-binomials") {
    for (int n = 0; n <= 5; ++n) CHECK(q_binomial(n, 0) == BiPoly(1));
    CHECK(q_binomial(2, 1) == BiPoly(1) + kQ);
    CHECK(q_binomial(4, 2) == BiPoly(1) + kQ + BiPoly(2) * kQ.pow(2) + kQ.pow(3) + kQ.pow(4));
    CHECK(q_binomial(3, 5) == BiPoly(0));
    CHECK(q_binomial(-1, 0) == BiPoly(0));
    CHECK(q_binomial(3, -2) == BiPoly(0));
}

TEST_CASE("Pascal recurrence matches factorial division") {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) CHECK(q_binomial(n, k) == q_binomial_by_division(n, k));
}

TEST_CASE("q-Pochhammer") {
    CHECK(q_pochhammer(kX, 0) == BiPoly(1));
    CHECK(q_pochhammer(kX, 2) == BiPoly(1) - (BiPoly(1) + kQ) * kX + kQ * kX.pow(2));
    CHECK(q_pochhammer(kX, 2, 2) == BiPoly(1) - (BiPoly(1) + kQ.pow(2)) * kX + kQ.pow(2) * kX.pow(2));
}

TEST_CASE("q-Stirling numbers of the second kind") {
    for (unsigned n = 0; n <= 6; ++n) CHECK(stirling2_q(n, n) == BiPoly(1));
    CHECK(stirling2_q(3, 2) == BiPoly(2) + kQ);
    CHECK(stirling2_q(4, 2) == BiPoly(3) + BiPoly(3) * kQ + kQ.pow(2));
    CHECK(stirling2_q(3, 2, 2) == BiPoly(2) + kQ.pow(2));
    CHECK(stirling2_q(3, -1) == BiPoly(0));
    CHECK(stirling2_q(3, 4) == BiPoly(0));
    CHECK(stirling2_q(0, 0) == BiPoly(1));
}

TEST_CASE("second kind specializes to classical Stirling numbers at q = 1") {
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(eval_q_one(stirling2_q(n, k)) == BiPoly(classical_stirling2(n, k)));
}

TEST_CASE("base scaling of the second kind is exponent scaling") {
    for (unsigned n = 0; n <= 8; ++n)
        for (long long k = 0; k <= n; ++k)
            for (unsigned c : {2u, 3u})
                CHECK(stirling2_q(n, k, c) == scale_q_exponents(stirling2_q(n, k, 1), c));
}

TEST_CASE("q-Stirling numbers of the first kind") {
    for (unsigned n = 0; n <= 6; ++n) CHECK(stirling1_q(n, n) == BiPoly(1));
    CHECK(stirling1_q(2, 1) == BiPoly(-1));
    CHECK(stirling1_q(3, 1) == BiPoly(1) + kQ);
    CHECK(stirling1_q(3, 7) == BiPoly(0));
}

TEST_CASE("first kind generates the falling factorial products") {
    for (unsigned n = 0; n <= 8; ++n) {
        BiPoly sum;
        for (unsigned k = 0; k <= n; ++k) sum += stirling1_q(n, k).mul_monomial(1, 0, k);
        BiPoly product(1);
        for (unsigned j = 0; j < n; ++j) product *= kX - q_int(j);
        CHECK(sum == product);
    }
}

TEST_CASE("ordinary binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(1, 3) == 0);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(-2, 1) == 0);
    CHECK(binomial(3, -1) == 0);
}

TEST_CASE("bridge identity between the two binomial kinds") {
    // (q-1)^{n-k} S[n,k] = sum_i (-1)^{n-i} C(n,i) [i k]
    const auto small = identity9_check(2, 1);
    CHECK(small.lhs == kQ - BiPoly(1));
    CHECK(small.rhs == kQ - BiPoly(1));
    CHECK(small.equal);
    for (unsigned n = 0; n <= 6; ++n) CHECK(identity9_check(n, n).lhs == BiPoly(1));
    const auto three_one = identity9_check(3, 1);
    CHECK(three_one.lhs == (kQ - BiPoly(1)).pow(2));
    CHECK(three_one.equal);
    for (unsigned n = 0; n <= 10; ++n)
        for (long long k = 0; k <= n; ++k) CHECK(identity9_check(n, k).equal);
    CHECK_THROWS_AS(identity9_check(2, 3), Error);
}
