#include "ynum/special.hpp"

#include <utility>
#include <vector>

namespace ynum {

namespace {

void require_nonneg(long long n, const char* what) {
    if (n < 0)
        throw std::domain_error(std::string(what) + ": negative index");
}

// Exact sum of 1/j over [lo, hi] by halving; keeps intermediate
// denominators near lcm size instead of a full product.
Rational harmonic_range(long long lo, long long hi) {
    if (lo > hi)
        return Rational(0);
    if (hi - lo < 8) {
        Rational s(0);
        for (long long j = lo; j <= hi; ++j)
            s += Rational(1, j);
        return s;
    }
    const long long mid = lo + (hi - lo) / 2;
    return harmonic_range(lo, mid) + harmonic_range(mid + 1, hi);
}

constexpr long long kHarmonicMemoLimit = 1024;

}  // namespace

Rational binomial(long long n, long long k) {
    require_nonneg(n, "binomial");
    if (k < 0 || k > n)
        return Rational(0);
    k = std::min(k, n - k);
    static MemoTable<std::pair<long long, long long>> table;
    if (auto v = table.get({n, k}))
        return *v;
    // c stays integral at each step: c = C(n-k+i, i)
    BigInt c = 1;
    for (long long i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return table.put({n, k}, Rational(std::move(c)));
}

Rational factorial(long long n) {
    require_nonneg(n, "factorial");
    static MemoTable<long long> table;
    if (auto v = table.get(n))
        return *v;
    BigInt f = 1;
    for (long long i = 2; i <= n; ++i)
        f *= i;
    return table.put(n, Rational(std::move(f)));
}

Rational bernoulli(long long n) {
    require_nonneg(n, "bernoulli");
    static MemoTable<long long> table;
    if (auto v = table.get(n))
        return *v;
    // closure sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1, so
    // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k
    Rational result(1);
    for (long long m = 0; m <= n; ++m) {
        if (auto v = table.get(m)) {
            result = *v;
            continue;
        }
        if (m == 0) {
            result = table.put(0, Rational(1));
            continue;
        }
        Rational acc(0);
        for (long long k = 0; k < m; ++k)
            acc += binomial(m + 1, k) * *table.get(k);
        result = table.put(m, -acc / Rational(m + 1));
    }
    return result;
}

Rational bernoulli(long long n, const Rational& x) {
    require_nonneg(n, "bernoulli");
    Rational acc(0);
    Rational xp(1);  // x^(n-k), built from the k = n end downward
    for (long long k = n; k >= 0; --k) {
        acc += binomial(n, k) * bernoulli(k) * xp;
        if (k > 0)
            xp *= x;
    }
    return acc;
}

Rational stirling1(long long n, long long k) {
    require_nonneg(n, "stirling1");
    if (k < 0 || k > n)
        return Rational(0);
    static MemoTable<std::pair<long long, long long>> table;
    if (auto v = table.get({n, k}))
        return *v;
    // build the triangle locally, publish afterwards
    std::vector<std::vector<Rational>> tri(n + 1);
    tri[0] = {Rational(1)};
    for (long long m = 1; m <= n; ++m) {
        tri[m].assign(m + 1, Rational(0));
        for (long long j = 0; j <= m; ++j) {
            const Rational above = j <= m - 1 ? tri[m - 1][j] : Rational(0);
            const Rational left = j >= 1 ? tri[m - 1][j - 1] : Rational(0);
            tri[m][j] = left - Rational(m - 1) * above;
        }
    }
    for (long long m = 0; m <= n; ++m)
        for (long long j = 0; j <= m; ++j)
            table.put({m, j}, tri[m][j]);
    return tri[n][k];
}

Rational daehee(long long n) {
    require_nonneg(n, "daehee");
    const Rational d = factorial(n) / Rational(n + 1);
    return n % 2 == 0 ? d : -d;
}

Rational daehee_via_bernoulli_stirling(long long m) {
    require_nonneg(m, "daehee_via_bernoulli_stirling");
    Rational acc(0);
    for (long long n = 0; n <= m; ++n)
        acc += bernoulli(n) * stirling1(m, n);
    return acc;
}

Rational harmonic(long long n) {
    require_nonneg(n, "harmonic");
    if (n == 0)
        return Rational(0);
    if (n > kHarmonicMemoLimit)
        return harmonic_range(1, n);
    static MemoTable<long long> table;
    if (auto v = table.get(n))
        return *v;
    Rational h(0);
    for (long long m = 1; m <= n; ++m) {
        if (auto v = table.get(m)) {
            h = *v;
            continue;
        }
        h += Rational(1, m);
        h = table.put(m, h);
    }
    return h;
}

Rational alternating_harmonic(long long n) {
    require_nonneg(n, "alternating_harmonic");
    Rational s(0);
    for (long long j = 1; j <= n; ++j)
        s += Rational(j % 2 == 0 ? 1 : -1, j);
    return s;
}

Rational fibonacci(long long n) {
    require_nonneg(n, "fibonacci");
    static MemoTable<long long, BigInt> table;
    if (auto v = table.get(n))
        return Rational(*v);
    BigInt a = 0, b = 1;  // F_0, F_1
    table.put(0, a);
    table.put(1, b);
    for (long long m = 2; m <= n; ++m) {
        BigInt c = a + b;
        a = std::move(b);
        b = table.put(m, std::move(c));
    }
    return Rational(n == 0 ? a : b);
}

Surd5 golden_power(long long m) {
    if (m < 1)
        throw std::domain_error("golden_power: requires m >= 1");
    static std::mutex mu;
    static std::vector<Surd5> powers{Surd5(1), golden_ratio()};  // phi^0, phi^1
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long long>(powers.size()) <= m)
        powers.push_back(powers.back() * golden_ratio());
    return powers[static_cast<size_t>(m)];
}

Rational binom_reciprocal_sum(long long n) {
    require_nonneg(n, "binom_reciprocal_sum");
    Rational s(0);
    for (long long j = 0; j <= n; ++j)
        s += binomial(n, j).inverse();
    return s;
}

}  // namespace ynum
