/**
 * @file series.hpp
 * @brief Formal power series over Q truncated at a fixed order.
 *
 * Arithmetic is exact modulo z^(N+1). Both operands of a binary operation
 * must share the truncation order; composition f(g) requires g(0) = 0.
 */
#pragma once

#include "ynum/rational.hpp"

#include <stdexcept>
#include <vector>

namespace ynum {

class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(check_order(order) + 1, Rational(0)) {}

    TruncatedSeries(std::vector<Rational> coeffs, int order)
        : coeffs_(std::move(coeffs)) {
        coeffs_.resize(check_order(order) + 1, Rational(0));
    }

    static TruncatedSeries constant(const Rational& c, int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    /// log(1+z) = z - z^2/2 + z^3/3 - ... truncated at the given order.
    static TruncatedSeries log1p(int order) {
        TruncatedSeries s(order);
        for (int n = 1; n <= order; ++n)
            s.coeffs_[n] = Rational(n % 2 == 1 ? 1 : -1, n);
        return s;
    }

    /// (log(1+z))^k / k!
    static TruncatedSeries log1p_powers(int k, int order) {
        if (k < 0)
            throw std::invalid_argument("TruncatedSeries: negative power");
        TruncatedSeries acc = constant(Rational(1), order);
        const TruncatedSeries l = log1p(order);
        Rational kfact(1);
        for (int i = 1; i <= k; ++i) {
            acc = acc * l;
            kfact *= Rational(i);
        }
        return acc * kfact.inverse();
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int n) const {
        return (n >= 0 && n <= order()) ? coeffs_[n] : Rational(0);
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        require_same_order(o);
        TruncatedSeries r = *this;
        for (size_t i = 0; i < coeffs_.size(); ++i)
            r.coeffs_[i] += o.coeffs_[i];
        return r;
    }
    TruncatedSeries operator-(const TruncatedSeries& o) const { return *this + (-o); }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        require_same_order(o);
        TruncatedSeries r(order());
        for (int i = 0; i <= order(); ++i) {
            if (coeffs_[i].is_zero())
                continue;
            for (int j = 0; i + j <= order(); ++j)
                r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
        return r;
    }

    TruncatedSeries operator*(const Rational& s) const {
        TruncatedSeries r = *this;
        for (auto& c : r.coeffs_)
            c *= s;
        return r;
    }

    /// Coefficient recurrence for f/g; requires g(0) != 0.
    TruncatedSeries operator/(const TruncatedSeries& o) const {
        require_same_order(o);
        if (o.coeffs_[0].is_zero())
            throw std::domain_error("TruncatedSeries: division requires g(0) != 0");
        TruncatedSeries r(order());
        const Rational inv0 = o.coeffs_[0].inverse();
        for (int n = 0; n <= order(); ++n) {
            Rational acc = coeffs_[n];
            for (int k = 1; k <= n; ++k)
                acc -= o.coeffs_[k] * r.coeffs_[n - k];
            r.coeffs_[n] = acc * inv0;
        }
        return r;
    }

    /// f(g(z)); requires g(0) = 0 so the composition is well defined mod z^(N+1).
    TruncatedSeries compose(const TruncatedSeries& g) const {
        require_same_order(g);
        if (!g.coeffs_[0].is_zero())
            throw std::domain_error("TruncatedSeries: composition requires g(0) = 0");
        TruncatedSeries r = constant(coeffs_[0], order());
        TruncatedSeries gp = constant(Rational(1), order());
        for (int i = 1; i <= order(); ++i) {
            gp = gp * g;
            r = r + gp * coeffs_[i];
        }
        return r;
    }

    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Rational> coeffs_;  // orders 0..N

    static int check_order(int order) {
        if (order < 0)
            throw std::invalid_argument("TruncatedSeries: negative order");
        return order;
    }
    void require_same_order(const TruncatedSeries& o) const {
        if (coeffs_.size() != o.coeffs_.size())
            throw std::invalid_argument("TruncatedSeries: truncation order mismatch");
    }
};

}  // namespace ynum
