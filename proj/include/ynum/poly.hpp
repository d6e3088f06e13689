/**
 * @file poly.hpp
 * @brief Univariate polynomials and rational functions over Q.
 *
 * Poly stores coefficients lowest degree first with no trailing zeros
 * (the zero polynomial is the empty list). RatFunc is a gcd-reduced
 * quotient with monic denominator, so equality of canonical forms is
 * sound and complete in Q(lambda). The indeterminate renders as λ.
 */
#pragma once

#include "ynum/rational.hpp"
#include "ynum/surd5.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ynum {

/// Lifts an exact rational into a scalar carrier (Rational, Surd5, RatFunc, double).
template <class S>
S lift_rational(const Rational& q);

template <>
inline Rational lift_rational<Rational>(const Rational& q) { return q; }
template <>
inline Surd5 lift_rational<Surd5>(const Rational& q) { return Surd5(q); }
template <>
inline double lift_rational<double>(const Rational& q) { return q.to_double(); }

class Poly {
public:
    Poly() = default;
    Poly(long long c) : coeffs_{Rational(c)} { strip(); }
    Poly(Rational c) : coeffs_{std::move(c)} { strip(); }
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

    /// The indeterminate λ.
    static Poly x() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero

    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Rational(0);
    }
    const Rational& leading() const {
        if (is_zero())
            throw std::domain_error("Poly: leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            c[i] += coeffs_[i];
        for (size_t i = 0; i < o.coeffs_.size(); ++i)
            c[i] += o.coeffs_[i];
        return Poly(std::move(c));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero())
            return Poly();
        std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j)
                c[i + j] += coeffs_[i] * o.coeffs_[j];
        return Poly(std::move(c));
    }

    Poly operator*(const Rational& s) const {
        if (s.is_zero())
            return Poly();
        Poly r = *this;
        for (auto& c : r.coeffs_)
            c *= s;
        return r;
    }

    /// Long division; divisor must be nonzero. Returns {quotient, remainder}.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero())
            throw std::domain_error("Poly: division by zero polynomial");
        Poly q, r = *this;
        std::vector<Rational> qc(r.degree() >= d.degree() ? r.degree() - d.degree() + 1 : 0,
                                 Rational(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const int k = r.degree() - d.degree();
            const Rational c = r.leading() / d.leading();
            qc[k] = c;
            // r -= c * x^k * d
            std::vector<Rational> sub(k + d.coeffs_.size(), Rational(0));
            for (size_t i = 0; i < d.coeffs_.size(); ++i)
                sub[k + i] = c * d.coeffs_[i];
            r = r - Poly(std::move(sub));
        }
        return {Poly(std::move(qc)), r};
    }

    Poly monic() const {
        if (is_zero())
            return Poly();
        return *this * leading().inverse();
    }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    template <class S>
    S eval(const S& x) const {
        if (is_zero())
            return lift_rational<S>(Rational(0));
        S acc = lift_rational<S>(coeffs_.back());
        for (int i = degree() - 1; i >= 0; --i)
            acc = acc * x + lift_rational<S>(coeffs_[i]);
        return acc;
    }

    /// Renders in descending powers, e.g. "λ^2-λ" or "3/2λ+1".
    std::string to_string() const {
        if (is_zero())
            return "0";
        std::string s;
        for (int p = degree(); p >= 0; --p) {
            const Rational& c = coeffs_[p];
            if (c.is_zero())
                continue;
            const bool lead = s.empty();
            if (c.is_negative())
                s += "-";
            else if (!lead)
                s += "+";
            const Rational a = c.is_negative() ? -c : c;
            if (!a.is_one() || p == 0)
                s += a.to_string();
            if (p >= 1)
                s += "λ";
            if (p >= 2)
                s += "^" + std::to_string(p);
        }
        return s;
    }

private:
    std::vector<Rational> coeffs_;

    void strip() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }
};

/// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
inline Poly poly_gcd(Poly a, Poly b) {
    if (!a.is_zero())
        a = a.monic();
    if (!b.is_zero())
        b = b.monic();
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = r.is_zero() ? Poly() : r.monic();
    }
    return a;
}

namespace detail {
inline Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = a.divmod(b);
    if (!r.is_zero())
        throw std::logic_error("Poly: expected exact division");
    return q;
}
}  // namespace detail

class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long long c) : num_(c), den_(1) {}
    RatFunc(Rational c) : num_(std::move(c)), den_(1) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(1) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    /// The indeterminate λ as a rational function.
    static RatFunc lambda() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Poly(1) && den_ == Poly(1); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero())
            throw std::domain_error("RatFunc: division by zero");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero())
            throw std::domain_error("RatFunc: inverse of zero");
        return RatFunc(den_, num_);
    }

    RatFunc pow(long long e) const {
        if (e < 0)
            return inverse().pow(-e);
        RatFunc base = *this, acc = RatFunc(1);
        while (e > 0) {
            if (e & 1)
                acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Canonical forms are unique, so componentwise equality decides equality in Q(λ).
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    template <class S>
    S eval(const S& x) const {
        const S d = den_.eval(x);
        if (d == lift_rational<S>(Rational(0)))
            throw std::domain_error("RatFunc: evaluation at a pole");
        return num_.eval(x) / d;
    }

    std::string to_string() const {
        if (den_ == Poly(1))
            return num_.to_string();
        const std::string n = num_.to_string();
        const bool wrap_num = num_.degree() >= 1;
        return (wrap_num ? "(" + n + ")" : n) + "/(" + den_.to_string() + ")";
    }

private:
    Poly num_;
    Poly den_;

    void canonicalize() {
        if (den_.is_zero())
            throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        const Poly g = poly_gcd(num_, den_);
        if (g.degree() >= 1) {
            num_ = detail::exact_div(num_, g);
            den_ = detail::exact_div(den_, g);
        }
        const Rational lc = den_.leading();
        if (!lc.is_one()) {
            const Rational inv = lc.inverse();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
};

template <>
inline RatFunc lift_rational<RatFunc>(const Rational& q) { return RatFunc(q); }

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace ynum
