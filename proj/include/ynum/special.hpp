/**
 * @file special.hpp
 * @brief Exact auxiliary sequences: binomials, Bernoulli, signed Stirling
 *        numbers of the first kind, Daehee, harmonic, Fibonacci, golden-ratio
 *        powers, Bernstein basis values and reciprocal-binomial sums.
 *
 * Sign conventions are fixed: B_1 = -1/2 (the t/(e^t - 1) generating
 * function) and S1 is the SIGNED first kind, i.e. the coefficients of
 * (log(1+z))^k / k!. Sequences are memoized; the caches are write-once and
 * safe under concurrent callers.
 */
#pragma once

#include "ynum/poly.hpp"
#include "ynum/rational.hpp"
#include "ynum/surd5.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace ynum {

/// Write-once cache from integer indices to exact values.
/// A value, once stored, is never replaced; lookups return copies.
template <class Key, class Value = Rational>
class MemoTable {
public:
    std::optional<Value> get(const Key& k) const {
        std::lock_guard<std::mutex> lock(m_);
        auto it = vals_.find(k);
        if (it == vals_.end())
            return std::nullopt;
        return it->second;
    }

    /// First writer wins; concurrent fills compute identical values.
    Value put(const Key& k, Value v) {
        std::lock_guard<std::mutex> lock(m_);
        auto [it, inserted] = vals_.emplace(k, std::move(v));
        (void)inserted;
        return it->second;
    }

private:
    mutable std::mutex m_;
    std::map<Key, Value> vals_;
};

/// C(n, k); 0 outside 0 <= k <= n.
Rational binomial(long long n, long long k);

/// n! as an exact value.
Rational factorial(long long n);

/// Bernoulli numbers, B_1 = -1/2 convention.
Rational bernoulli(long long n);

/// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^(n-k).
Rational bernoulli(long long n, const Rational& x);

/// Signed Stirling numbers of the first kind; S1(n+1,k) = S1(n,k-1) - n*S1(n,k).
Rational stirling1(long long n, long long k);

/// D_n = (-1)^n n! / (n+1).
Rational daehee(long long n);

/// sum_{n=0}^{m} B_n * S1(m,n), evaluated term by term (not via the closed form).
Rational daehee_via_bernoulli_stirling(long long m);

/// H_n = sum_{j=1}^{n} 1/j, H_0 = 0.
Rational harmonic(long long n);

/// sum_{j=1}^{n} (-1)^j / j by direct summation.
Rational alternating_harmonic(long long n);

/// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}; returned as an exact integer value.
Rational fibonacci(long long n);

/// phi^m by repeated multiplication in Q(sqrt 5); m >= 1.
Surd5 golden_power(long long m);

/// sum_{j=0}^{n} 1 / C(n,j).
Rational binom_reciprocal_sum(long long n);

/// Bernstein basis value C(n,j) * lam^j * (1-lam)^(n-j) in the carrier of lam.
/// j outside 0..n is an error, not zero.
template <class S>
S bernstein_basis(long long j, long long n, const S& lam) {
    if (n < 0 || j < 0 || j > n)
        throw std::domain_error("bernstein_basis: requires 0 <= j <= n");
    const S one_minus = lift_rational<S>(Rational(1)) - lam;
    return lift_rational<S>(binomial(n, j)) * lam.pow(j) * one_minus.pow(n - j);
}

}  // namespace ynum
