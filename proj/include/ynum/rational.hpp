/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rational arithmetic.
 *
 * Invariants: gcd(|num|, den) = 1, den > 0, zero is 0/1. Every operation
 * returns a value in canonical form. Backed by boost::multiprecision::cpp_int
 * so denominators like lcm(1..n) never overflow.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ynum {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { canonicalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (is_zero())
            throw std::domain_error("Rational: inverse of zero");
        return Rational(den_, num_);
    }

    /// x^e with exact arithmetic; negative e inverts (error on zero base).
    Rational pow(long long e) const {
        if (e < 0)
            return inverse().pow(-e);
        Rational base = *this, acc = Rational(1);
        while (e > 0) {
            if (e & 1)
                acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        // denominators positive, so cross-multiplication preserves order
        const BigInt l = num_ * o.den_, r = o.num_ * den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Canonical text form: "p/q", or "p" when q = 1.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1)
            s += "/" + den_.str();
        return s;
    }

    /// Round-to-nearest double, accurate for arbitrarily large num/den.
    double to_double() const {
        if (num_.is_zero())
            return 0.0;
        using boost::multiprecision::msb;
        BigInt n = boost::multiprecision::abs(num_);
        const long nb = static_cast<long>(msb(n));
        const long db = static_cast<long>(msb(den_));
        const long shift = 96 - (nb - db);   // keep ~96 quotient bits
        const BigInt q = shift >= 0 ? BigInt(n << shift) / den_ : n / BigInt(den_ << -shift);
        const double r = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
        return num_ < 0 ? -r : r;
    }

    /// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
    static Rational from_string(const std::string& text);

private:
    BigInt num_;
    BigInt den_;

    void canonicalize() {
        if (den_.is_zero())
            throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

inline Rational Rational::from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
    }
}

}  // namespace ynum
