#include "ynum/quadrature.hpp"

#include "ynum/special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ynum {

namespace {

// Kronrod-15 abscissae (positive half) and weights; the embedded Gauss-7
// rule uses the odd-indexed nodes. All nodes are strictly inside (-1, 1).
constexpr std::array<double, 8> kKronrodX = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kGaussW = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct RuleEval {
    double k15;
    double g7;
    double resabs;
};

double checked(const std::function<double(double)>& f, double x) {
    const double y = f(x);
    if (std::isnan(y))
        throw std::domain_error("integrate_adaptive: integrand returned NaN");
    return y;
}

RuleEval gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = checked(f, c);
    RuleEval r{kKronrodW[7] * fc, kGaussW[3] * fc, kKronrodW[7] * std::fabs(fc)};
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kKronrodX[i];
        const double f1 = checked(f, c - dx);
        const double f2 = checked(f, c + dx);
        r.k15 += kKronrodW[i] * (f1 + f2);
        r.resabs += kKronrodW[i] * (std::fabs(f1) + std::fabs(f2));
        if (i % 2 == 1)
            r.g7 += kGaussW[(i - 1) / 2] * (f1 + f2);
    }
    r.k15 *= h;
    r.g7 *= h;
    r.resabs *= h;
    return r;
}

struct Accumulator {
    double sum = 0.0;
    double comp = 0.0;  // Kahan carry
    double err = 0.0;
    long evals = 0;
    bool all_accepted = true;

    void add(double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

void refine(const std::function<double(double)>& f, double a, double b, double tol, int depth,
            const QuadratureConfig& cfg, Accumulator& acc) {
    const RuleEval r = gk15(f, a, b);
    acc.evals += 15;
    // |K15 - G7| is a conservative local estimate; the resabs floor keeps it
    // from dropping below what double rounding can resolve
    const double err = std::max(std::fabs(r.k15 - r.g7),
                                50.0 * std::numeric_limits<double>::epsilon() * r.resabs);
    const double mid = a + 0.5 * (b - a);
    const bool accepted = err <= std::max(tol, cfg.rel_tol * std::fabs(r.k15));
    if (accepted || depth >= cfg.max_depth || !(a < mid && mid < b)) {
        acc.add(r.k15);
        acc.err += err;
        acc.all_accepted = acc.all_accepted && accepted;
        return;
    }
    refine(f, a, mid, 0.5 * tol, depth + 1, cfg, acc);
    refine(f, mid, b, 0.5 * tol, depth + 1, cfg, acc);
}

void validate(const QuadratureConfig& cfg) {
    if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0))
        throw std::invalid_argument("QuadratureConfig: tolerances must be positive");
    if (cfg.max_depth < 1)
        throw std::invalid_argument("QuadratureConfig: max_depth must be >= 1");
}

QuadratureResult scaled(QuadratureResult r, double factor) {
    r.value *= factor;
    r.error_estimate *= std::fabs(factor);
    return r;
}

QuadratureResult combine(const QuadratureResult& x, const QuadratureResult& y, double sign) {
    QuadratureResult r;
    r.value = x.value + sign * y.value;
    r.error_estimate = x.error_estimate + y.error_estimate;
    r.evaluations = x.evaluations + y.evaluations;
    r.converged = x.converged && y.converged;
    return r;
}

// sum_{j=0}^{deg} x^j by Horner
double geometric_sum(double x, long long deg) {
    double s = 1.0;
    for (long long j = 0; j < deg; ++j)
        s = s * x + 1.0;
    return s;
}

void require_admissible(const Rational& lam) {
    if (lam.is_zero())
        throw std::domain_error("λ=0 outside domain: λ^(j+1) vanishes");
    if (lam.is_one())
        throw std::domain_error("λ=1 outside domain: (λ-1)^(n+1-j) vanishes");
}

double bernoulli_even_over_index(int k) {
    // B_{2k} / (2k), cached as doubles for the asymptotic tails
    static const std::array<double, 7> values = [] {
        std::array<double, 7> v{};
        for (int i = 1; i <= 7; ++i)
            v[i - 1] = (bernoulli(2 * i) / Rational(2 * i)).to_double();
        return v;
    }();
    return values[k - 1];
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureConfig& cfg) {
    validate(cfg);
    if (!(a <= b))
        throw std::invalid_argument("integrate_adaptive: requires a <= b");
    if (a == b)
        return {0.0, 0.0, 0, true};
    Accumulator acc;
    refine(f, a, b, cfg.abs_tol, 0, cfg, acc);
    QuadratureResult r;
    r.value = acc.sum;
    r.error_estimate = acc.err;
    r.evaluations = acc.evals;
    r.converged = acc.err <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(acc.sum));
    return r;
}

QuadratureResult y_integral_general(long long n, const Rational& lam,
                                    const QuadratureConfig& cfg) {
    require_admissible(lam);
    const double upper = ((lam - Rational(1)) / lam).to_double();
    const auto f = [n](double x) { return geometric_sum(x, n); };
    QuadratureResult base = upper >= 0.0 ? integrate_adaptive(f, 0.0, upper, cfg)
                                         : scaled(integrate_adaptive(f, upper, 0.0, cfg), -1.0);
    Rational prefactor = (lam - Rational(1)).pow(n + 2).inverse();
    if (n % 2 == 1)
        prefactor = -prefactor;
    return scaled(base, prefactor.to_double());
}

QuadratureResult y_half_integral(long long n, PrintedVariant variant,
                                 const QuadratureConfig& cfg) {
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    const auto f = [n, sign](double x) { return (1.0 + sign * std::pow(x, double(n + 1))) / (1.0 + x); };
    const QuadratureResult base = integrate_adaptive(f, 0.0, 1.0, cfg);
    const double p = std::ldexp(1.0, static_cast<int>(n) + 2);  // 2^(n+2)
    return variant == PrintedVariant::corrected ? scaled(base, -p) : scaled(base, 1.0 / p);
}

QuadratureResult harmonic_integral(long long n, HarmonicIntegralForm form,
                                   const QuadratureConfig& cfg) {
    if (n < 0)
        throw std::domain_error("harmonic_integral: negative n");
    if (n == 0)
        return {0.0, 0.0, 0, true};
    switch (form) {
    case HarmonicIntegralForm::geometric: {
        const auto f = [n](double x) { return geometric_sum(x, n - 1); };
        return integrate_adaptive(f, 0.0, 1.0, cfg);
    }
    case HarmonicIntegralForm::log_left: {
        const auto f = [n](double x) { return std::pow(x, double(n - 1)) * std::log1p(-x); };
        return scaled(integrate_adaptive(f, 0.0, 1.0, cfg), -double(n));
    }
    case HarmonicIntegralForm::log_right: {
        const auto f = [n](double x) { return std::pow(1.0 - x, double(n - 1)) * std::log(x); };
        return scaled(integrate_adaptive(f, 0.0, 1.0, cfg), -double(n));
    }
    }
    throw std::logic_error("harmonic_integral: unknown form");
}

QuadratureResult y_half_integral_diff(long long n, const QuadratureConfig& cfg) {
    if (n < 0)
        throw std::domain_error("y_half_integral_diff: negative n");
    const QuadratureResult lhs = harmonic_integral(n / 2, HarmonicIntegralForm::geometric, cfg);
    const QuadratureResult rhs = harmonic_integral(n, HarmonicIntegralForm::geometric, cfg);
    return combine(lhs, rhs, -1.0);
}

QuadratureResult y_half_log_integral(long long n, const QuadratureConfig& cfg) {
    if (n < 0)
        throw std::domain_error("y_half_log_integral: negative n");
    const double p = std::ldexp(1.0, static_cast<int>(n) + 2);
    const auto term = [&cfg](long long m) -> QuadratureResult {
        if (m == 0)
            return {0.0, 0.0, 0, true};
        const auto f = [m](double x) { return std::pow(1.0 - x, double(m - 1)) * std::log(x); };
        return scaled(integrate_adaptive(f, 0.0, 1.0, cfg), double(m));
    };
    QuadratureResult r = combine(term(n), term(n / 2), -1.0);
    r = scaled(r, p);
    r.value += (n % 2 == 0 ? -1.0 : 1.0) * p / double(n + 1);
    return r;
}

double digamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("digamma: requires x > 0");
    double shift = 0.0;
    while (x < 10.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    double s = std::log(x) - 0.5 / x;
    double xp = inv2;
    for (int k = 1; k <= 7; ++k) {
        s -= bernoulli_even_over_index(k) * xp;
        xp *= inv2;
    }
    return s + shift;
}

double euler_gamma() {
    static const double value = [] {
        constexpr long long N = 10000;
        double s = harmonic(N).to_double() - std::log(double(N)) - 0.5 / double(N);
        const double inv2 = 1.0 / (double(N) * double(N));
        double xp = inv2;
        for (int k = 1; k <= 7; ++k) {
            s += bernoulli_even_over_index(k) * xp;
            xp *= inv2;
        }
        return s;
    }();
    return value;
}

double euler_gamma_reference() {
    return 0.577215664901532860606512090082;
}

double y_half_digamma(long long n) {
    if (n < 0)
        throw std::domain_error("y_half_digamma: negative n");
    const double p = std::ldexp(1.0, static_cast<int>(n) + 2);
    const double head = (n % 2 == 0 ? -1.0 : 1.0) / double(n + 1);
    return p * (head + harmonic(n / 2).to_double() - euler_gamma() - digamma(double(n + 1)));
}

QuadratureResult euler_f_half(const QuadratureConfig& cfg) {
    const auto f = [](double x) { return 1.0 / (1.0 + std::sqrt(x)); };
    return integrate_adaptive(f, 0.0, 1.0, cfg);
}

}  // namespace ynum
