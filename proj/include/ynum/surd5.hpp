/**
 * @file surd5.hpp
 * @brief Exact arithmetic in the quadratic field Q(sqrt 5).
 *
 * An element is a + b*sqrt(5) with rational a, b. The field norm is
 * a^2 - 5 b^2; it vanishes only for the zero element (sqrt 5 is irrational),
 * so division is defined everywhere except by zero. The golden ratio
 * (1 + sqrt 5)/2 lives here.
 */
#pragma once

#include "ynum/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ynum {

class Surd5 {
public:
    Surd5() : a_(0), b_(0) {}
    Surd5(long long n) : a_(n), b_(0) {}
    Surd5(Rational a) : a_(std::move(a)), b_(0) {}
    Surd5(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }

    Surd5 operator-() const { return Surd5(-a_, -b_); }

    Surd5 operator+(const Surd5& o) const { return Surd5(a_ + o.a_, b_ + o.b_); }
    Surd5 operator-(const Surd5& o) const { return Surd5(a_ - o.a_, b_ - o.b_); }
    Surd5 operator*(const Surd5& o) const {
        return Surd5(a_ * o.a_ + Rational(5) * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }
    Surd5 operator/(const Surd5& o) const { return *this * o.inverse(); }

    Surd5& operator+=(const Surd5& o) { return *this = *this + o; }
    Surd5& operator-=(const Surd5& o) { return *this = *this - o; }
    Surd5& operator*=(const Surd5& o) { return *this = *this * o; }
    Surd5& operator/=(const Surd5& o) { return *this = *this / o; }

    Surd5 conjugate() const { return Surd5(a_, -b_); }
    Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }

    /// (a - b sqrt5) / (a^2 - 5 b^2); the norm is zero only for the zero element.
    Surd5 inverse() const {
        if (is_zero())
            throw std::domain_error("Surd5: division by zero element");
        const Rational n = norm();
        return Surd5(a_ / n, -b_ / n);
    }

    Surd5 pow(long long e) const {
        if (e < 0)
            return inverse().pow(-e);
        Surd5 base = *this, acc = Surd5(1);
        while (e > 0) {
            if (e & 1)
                acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const Surd5& o) const { return a_ == o.a_ && b_ == o.b_; }

    /// Canonical text form "a+b√5" (both components rendered, e.g. "1+0√5").
    std::string to_string() const {
        std::string s = a_.to_string();
        if (b_.is_negative())
            s += "-" + (-b_).to_string();
        else
            s += "+" + b_.to_string();
        return s + "√5";
    }

    double to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(5.0); }

private:
    Rational a_;
    Rational b_;
};

/// (1 + sqrt 5)/2
inline Surd5 golden_ratio() { return Surd5(Rational(1, 2), Rational(1, 2)); }

/// (1 - sqrt 5)/2, the algebraic conjugate of the golden ratio.
inline Surd5 golden_ratio_conjugate() { return Surd5(Rational(1, 2), Rational(-1, 2)); }

inline std::ostream& operator<<(std::ostream& os, const Surd5& s) { return os << s.to_string(); }

}  // namespace ynum
