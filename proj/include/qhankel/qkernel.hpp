#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "qhankel/bipoly.hpp"
#include "qhankel/substitute.hpp"

namespace qhankel {

namespace detail {

// Thread-safe memo table. Values are deterministic, so racing writers all
// store identical polynomials; the computation runs outside the lock.
template <typename Key>
class PolyMemo {
public:
    template <typename Fn>
    BiPoly get(const Key& key, Fn&& compute) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        BiPoly value = compute();
        std::lock_guard<std::mutex> lock(mutex_);
        return map_.emplace(key, std::move(value)).first->second;
    }

private:
    std::map<Key, BiPoly> map_;
    std::mutex mutex_;
};

}  // namespace detail

/// Ordinary binomial coefficient; 0 outside 0 <= k <= n.
inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

/// [n] = 1 + q + ... + q^{n-1}; [0] = 0.
inline BiPoly q_int(std::uint32_t n) {
    std::vector<Term> terms;
    terms.reserve(n);
    for (std::uint32_t e = 0; e < n; ++e) terms.push_back(Term{Monomial{e, 0}, 1});
    return BiPoly::from_terms(std::move(terms));
}

/// [n] in base q^c.
inline BiPoly q_int_base(std::uint32_t n, std::uint32_t c) {
    return scale_q_exponents(q_int(n), c);
}

/// [n]! = [1][2]...[n]; empty product 1.
inline BiPoly q_factorial(std::uint32_t n) {
    static detail::PolyMemo<std::uint32_t> memo;
    return memo.get(n, [n] {
        BiPoly p(1);
        for (std::uint32_t j = 1; j <= n; ++j) p *= q_int(j);
        return p;
    });
}

/// [n]! in base q^c.
inline BiPoly q_factorial_base(std::uint32_t n, std::uint32_t c) {
    return scale_q_exponents(q_factorial(n), c);
}

/// Gaussian binomial [n k]; 0 outside 0 <= k <= n.
/// Pascal recurrence [n k] = [n-1 k-1] + q^k [n-1 k], memoized.
inline BiPoly q_binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return {};
    if (k == 0 || k == n) return BiPoly(1);
    static detail::PolyMemo<std::pair<long long, long long>> memo;
    return memo.get({n, k}, [n, k] {
        return q_binomial(n - 1, k - 1) +
               q_binomial(n - 1, k).mul_monomial(1, static_cast<std::uint32_t>(k), 0);
    });
}

/// [n k] in base q^c.
inline BiPoly q_binomial_base(long long n, long long k, std::uint32_t c) {
    return scale_q_exponents(q_binomial(n, k), c);
}

/// (a; q^c)_n = prod_{j=0}^{n-1} (1 - q^{c j} a); empty product 1.
inline BiPoly q_pochhammer(const BiPoly& a, std::uint32_t n, std::uint32_t base = 1) {
    if (base == 0) throw Error("q_pochhammer base must be >= 1");
    BiPoly p(1);
    for (std::uint32_t j = 0; j < n; ++j) p *= BiPoly(1) - a.mul_monomial(1, base * j, 0);
    return p;
}

/// q-Stirling number of the second kind S[n, k] in base q^c:
/// S[n, k] = S[n-1, k-1] + [k] S[n-1, k], S[0, k] = [k = 0]; 0 out of range.
inline BiPoly stirling2_q(std::uint32_t n, long long k, std::uint32_t c = 1) {
    if (k < 0 || k > static_cast<long long>(n)) return {};
    if (n == 0) return BiPoly(1);  // k == 0 here
    static detail::PolyMemo<std::tuple<std::uint32_t, long long, std::uint32_t>> memo;
    return memo.get({n, k, c}, [n, k, c] {
        return stirling2_q(n - 1, k - 1, c) +
               q_int_base(static_cast<std::uint32_t>(k), c) * stirling2_q(n - 1, k, c);
    });
}

/// q-Stirling number of the first kind:
/// s[n+1, k] = s[n, k-1] - [n] s[n, k], s[0, k] = [k = 0]; 0 out of range.
inline BiPoly stirling1_q(std::uint32_t n, long long k) {
    if (k < 0 || k > static_cast<long long>(n)) return {};
    if (n == 0) return BiPoly(1);
    static detail::PolyMemo<std::pair<std::uint32_t, long long>> memo;
    return memo.get({n, k}, [n, k] {
        return stirling1_q(n - 1, k - 1) - q_int(n - 1) * stirling1_q(n - 1, k);
    });
}

struct Identity9Case {
    BiPoly lhs;
    BiPoly rhs;
    bool equal = false;
};

/// (q-1)^{n-k} S[n, k] against the alternating sum over ordinary-outer /
/// q-inner binomial products.
inline Identity9Case identity9_check(std::uint32_t n, long long k) {
    if (k < 0 || k > static_cast<long long>(n)) throw Error("identity9_check requires 0 <= k <= n");
    Identity9Case result;
    result.lhs = (BiPoly::q() - BiPoly(1)).pow(n - static_cast<std::uint32_t>(k)) * stirling2_q(n, k);
    for (long long i = 0; i <= static_cast<long long>(n); ++i) {
        BiPoly term = BiPoly(binomial(n, i)) * q_binomial(i, k);
        result.rhs += ((n - i) % 2 == 0) ? term : -term;
    }
    result.equal = result.lhs == result.rhs;
    return result;
}

}  // namespace qhankel
