#include "ynum/ycore.hpp"

namespace ynum {

namespace detail {

void require_nonneg_n(long long n) {
    if (n < 0)
        throw std::domain_error("y(n,λ): negative n");
}

}  // namespace detail

YValue y_direct(long long n, const LambdaValue& lam) {
    return std::visit(
        [&](const auto& l) -> YValue {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, SymbolicLambda>)
                return y_symbolic(n);
            else
                return y_direct_in(n, l);
        },
        lam);
}

RatFunc y_symbolic(long long n) {
    return y_direct_in<RatFunc>(n, RatFunc::lambda());
}

Rational y_two(long long n) {
    detail::require_nonneg_n(n);
    Rational acc(0);
    Rational p2(2);  // 2^(j+1)
    for (long long j = 0; j <= n; ++j) {
        acc += (Rational(j + 1) * p2).inverse();
        p2 *= Rational(2);
    }
    return n % 2 == 0 ? acc : -acc;
}

Rational y_neg_one(long long n) {
    detail::require_nonneg_n(n);
    return Rational(1, 2 * (n + 1)) * binom_reciprocal_sum(n);
}

Rational y_half(long long n) {
    detail::require_nonneg_n(n);
    const Rational tail = Rational(n % 2 == 0 ? -1 : 1, n + 1);  // (-1)^(n+1)/(n+1)
    return Rational(2).pow(n + 2) * (harmonic(n / 2) - harmonic(n) + tail);
}

Surd5 y_phi(long long n) {
    detail::require_nonneg_n(n);
    const Surd5 phi = golden_ratio();
    const Surd5 psi = golden_ratio_conjugate();
    Surd5 acc(0);
    for (long long j = 0; j <= n; ++j) {
        const Surd5 left = phi * Surd5(fibonacci(j + 1)) + Surd5(fibonacci(j));
        const Surd5 right = psi * Surd5(fibonacci(n - j + 1)) + Surd5(fibonacci(n - j));
        const Surd5 term = (Surd5(Rational(j + 1)) * left * right).inverse();
        acc = j % 2 == 0 ? acc - term : acc + term;  // (-1)^(j+1)
    }
    return acc;
}

YValue y_bernstein_daehee(long long n, const LambdaValue& lam, BdVariant variant) {
    return std::visit(
        [&](const auto& l) -> YValue {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, SymbolicLambda>)
                return y_bernstein_daehee_in<RatFunc>(n, RatFunc::lambda(), variant);
            else
                return y_bernstein_daehee_in(n, l, variant);
        },
        lam);
}

std::string lambda_to_string(const LambdaValue& lam) {
    return std::visit(
        [](const auto& l) -> std::string {
            using T = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<T, SymbolicLambda>)
                return "λ";
            else
                return l.to_string();
        },
        lam);
}

std::string y_value_to_string(const YValue& v) {
    return std::visit([](const auto& x) { return x.to_string(); }, v);
}

std::optional<double> y_value_to_double(const YValue& v) {
    return std::visit(
        [](const auto& x) -> std::optional<double> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, RatFunc>)
                return std::nullopt;
            else
                return x.to_double();
        },
        v);
}

}  // namespace ynum
