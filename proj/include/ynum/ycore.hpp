/**
 * @file ycore.hpp
 * @brief The combinatorial family y(n, lambda) in all its representations.
 *
 *   y(n, lambda) = sum_{j=0}^{n} (-1)^n / ((j+1) lambda^(j+1) (lambda-1)^(n+1-j))
 *
 * y_direct evaluates that defining sum and is the ground truth every other
 * representation is verified against: the closed forms at lambda = 2, -1,
 * 1/2 and the golden ratio, the Bernstein/Daehee representation (with two
 * as-printed variants retained for errata characterization), and the
 * symbolic form over Q(lambda). lambda in {0, 1} is rejected everywhere:
 * both lambda^(j+1) and (lambda-1)^(n+1-j) appear in denominators.
 *
 * Carriers are closed: rational lambda -> Rational, Q(sqrt 5) lambda ->
 * Surd5, symbolic lambda -> RatFunc.
 */
#pragma once

#include "ynum/special.hpp"

#include <string>
#include <variant>
#include <vector>

namespace ynum {

/// Tag for the indeterminate lambda.
struct SymbolicLambda {
    bool operator==(const SymbolicLambda&) const = default;
};

using LambdaValue = std::variant<Rational, Surd5, SymbolicLambda>;
using YValue = std::variant<Rational, Surd5, RatFunc>;

/// Bernstein/Daehee representation variants. `corrected` is the form that
/// matches the defining sum; the two as_printed forms reproduce the original
/// statements verbatim so their discrepancies can be characterized.
enum class BdVariant { corrected, as_printed_a9, as_printed_91c1 };

namespace detail {

template <class S>
void require_admissible_lambda(const S& lam) {
    if (lam == lift_rational<S>(Rational(0)))
        throw std::domain_error(
            "λ=0 outside domain: λ^(j+1) vanishes");
    if (lam == lift_rational<S>(Rational(1)))
        throw std::domain_error(
            "λ=1 outside domain: (λ-1)^(n+1-j) vanishes");
}

void require_nonneg_n(long long n);

}  // namespace detail

/// The defining sum, evaluated exactly in the carrier of lam.
template <class S>
S y_direct_in(long long n, const S& lam) {
    detail::require_nonneg_n(n);
    detail::require_admissible_lambda(lam);
    const S one = lift_rational<S>(Rational(1));
    const S lm1 = lam - one;
    // powers lam^1..lam^(n+1) and (lam-1)^1..(lam-1)^(n+1)
    std::vector<S> lam_pow{lam}, lm1_pow{lm1};
    for (long long p = 1; p <= n; ++p) {
        lam_pow.push_back(lam_pow.back() * lam);
        lm1_pow.push_back(lm1_pow.back() * lm1);
    }
    S acc = lift_rational<S>(Rational(0));
    for (long long j = 0; j <= n; ++j) {
        const S denom = lift_rational<S>(Rational(j + 1)) * lam_pow[j] * lm1_pow[n - j];
        acc = acc + denom.inverse();
    }
    return n % 2 == 0 ? acc : -acc;
}

/// Bernstein/Daehee representation in the carrier of lam.
template <class S>
S y_bernstein_daehee_in(long long n, const S& lam, BdVariant variant) {
    detail::require_nonneg_n(n);
    detail::require_admissible_lambda(lam);
    S acc = lift_rational<S>(Rational(0));
    for (long long j = 0; j <= n; ++j) {
        const S basis_inv = bernstein_basis<S>(j, n + 1, lam).inverse();
        Rational coeff;
        switch (variant) {
        case BdVariant::corrected:
            coeff = binomial(n + 1, j) * daehee(j) / factorial(j);
            break;
        case BdVariant::as_printed_a9:
            coeff = binomial(n + 1, j) / factorial(j + 1);
            if (j % 2 == 0)
                coeff = -coeff;  // (-1)^(j+1)
            break;
        case BdVariant::as_printed_91c1:
            coeff = binomial(n + 1, j) * daehee_via_bernoulli_stirling(j) / factorial(j);
            break;
        }
        acc = acc + lift_rational<S>(coeff) * basis_inv;
    }
    // prefactor -1/lam; as_printed_a9 carries its sign inside the terms and
    // keeps the printed +1/lam prefactor
    return variant == BdVariant::as_printed_a9 ? acc / lam : -(acc / lam);
}

/// Defining-sum evaluation; carrier of the result matches the carrier of lam.
YValue y_direct(long long n, const LambdaValue& lam);

/// y(n, lambda) as a canonical rational function of symbolic lambda.
RatFunc y_symbolic(long long n);

/// y(n, 2) = sum_j (-1)^n / ((j+1) 2^(j+1)).
Rational y_two(long long n);

/// y(n, -1) = 1/(2(n+1)) * sum_j 1/C(n,j).
Rational y_neg_one(long long n);

/// y(n, 1/2) = 2^(n+2) (H_[n/2] - H_n + (-1)^(n+1)/(n+1)).
Rational y_half(long long n);

/// y(n, phi) via the Fibonacci form, exactly in Q(sqrt 5).
Surd5 y_phi(long long n);

/// Bernstein/Daehee representation; carrier matches lam.
YValue y_bernstein_daehee(long long n, const LambdaValue& lam, BdVariant variant);

/// Canonical text for a lambda argument ("p/q", "a+b√5", or "λ").
std::string lambda_to_string(const LambdaValue& lam);

/// Canonical text for a y value in whichever carrier it lives.
std::string y_value_to_string(const YValue& v);

/// Float approximation; RatFuncs have no numeric value, so nullopt there.
std::optional<double> y_value_to_double(const YValue& v);

}  // namespace ynum
