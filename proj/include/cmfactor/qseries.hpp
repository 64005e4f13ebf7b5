#pragma once

#include "cmfactor/errors.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace cmf {

/*
 * Truncated Laurent series in q^(1/den):
 *
 *     sum_{k >= 0} c[k] q^((lo + k)/den)   (mod q^(order/den))
 *
 * Exponents are tracked as integer numerators over the fixed denominator.
 * Coefficients at numerators >= order are unknown and never stored; a
 * series that is an exact polynomial uses order == exact_order.
 */
template <class Scalar>
class FracQSeries
{
public:
    static constexpr long exact_order = LONG_MAX / 4;

    FracQSeries() : FracQSeries(1, 0, {}, exact_order) {}

    FracQSeries(long den, long lo, std::vector<Scalar> coeffs, long order)
        : den_(den), lo_(lo), c_(std::move(coeffs)), order_(order)
    {
        if (den_ < 1)
            throw domain_error("series denominator must be >= 1");
        if (order_ < lo_)
            order_ = lo_;
        if (static_cast<long>(c_.size()) > order_ - lo_)
            c_.resize(static_cast<size_t>(order_ - lo_));
        trim();
    }

    /// c * q^(num/den), known modulo q^(order/den).
    static FracQSeries monomial(long den, long num, Scalar c, long order = exact_order)
    {
        return FracQSeries(den, num, {std::move(c)}, order);
    }

    long den() const { return den_; }
    long lo() const { return lo_; }
    long order() const { return order_; }
    bool is_exact() const { return order_ >= exact_order; }
    /// One past the largest numerator with a stored coefficient.
    long top() const { return lo_ + static_cast<long>(c_.size()); }
    std::vector<Scalar> const & coeffs() const { return c_; }

    /// Numerator of the first nonzero coefficient, or order() if none.
    long valuation() const
    {
        for (size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0)
                return lo_ + static_cast<long>(k);
        return order_;
    }

    /// Coefficient of q^(num/den).
    Scalar coeff(long num) const
    {
        if (num >= order_)
            throw domain_error("coefficient of q^(" + std::to_string(num) + "/" + std::to_string(den_) +
                               ") is beyond the truncation order");
        if (num < lo_ || num >= top())
            return Scalar(0);
        return c_[static_cast<size_t>(num - lo_)];
    }

    /// Coefficient of q^e for a rational exponent; zero if e is not a
    /// multiple of 1/den.
    Scalar coeff_at(mpq_class const & e) const
    {
        mpq_class scaled = e * den_;
        if (scaled.get_den() != 1)
            return Scalar(0);
        return coeff(scaled.get_num().get_si());
    }

    /// Same series, now written over a multiple of the denominator.
    FracQSeries rescaled(long new_den) const
    {
        if (new_den % den_ != 0)
            throw domain_error("rescale target must be a multiple of the denominator");
        long f = new_den / den_;
        std::vector<Scalar> c(c_.empty() ? 0 : (c_.size() - 1) * static_cast<size_t>(f) + 1, Scalar(0));
        for (size_t k = 0; k < c_.size(); ++k)
            c[k * static_cast<size_t>(f)] = c_[k];
        return FracQSeries(new_den, lo_ * f, std::move(c), is_exact() ? exact_order : order_ * f);
    }

    /// Substitute q -> q^k for a positive integer k.
    FracQSeries substitute_power(long k) const
    {
        if (k < 1)
            throw domain_error("substitution power must be positive");
        std::vector<Scalar> c(c_.empty() ? 0 : (c_.size() - 1) * static_cast<size_t>(k) + 1, Scalar(0));
        for (size_t i = 0; i < c_.size(); ++i)
            c[i * static_cast<size_t>(k)] = c_[i];
        return FracQSeries(den_, lo_ * k, std::move(c), is_exact() ? exact_order : order_ * k);
    }

    /// Reinterpret the exponent denominator (q^(n/den) -> q^(n/new_den)),
    /// i.e. substitute q -> q^(new_den/den) when both are given.
    FracQSeries with_denominator(long new_den) const
    {
        return FracQSeries(new_den, lo_, c_, order_);
    }

    /// Same series over a divisor of the denominator; every stored exponent
    /// must be a multiple of 1/new_den.
    FracQSeries coarsened(long new_den) const
    {
        if (den_ % new_den != 0)
            throw domain_error("coarsen target must divide the denominator");
        long f = den_ / new_den;
        std::vector<Scalar> c;
        long lo = lo_ >= 0 ? lo_ / f : -((-lo_ + f - 1) / f);
        for (long n = lo_; n < top(); ++n) {
            Scalar const & x = c_[static_cast<size_t>(n - lo_)];
            if (x == 0)
                continue;
            if (n % f != 0)
                throw domain_error("exponent " + std::to_string(n) + "/" + std::to_string(den_) +
                                   " is not a multiple of 1/" + std::to_string(new_den));
            long k = n / f - lo;
            if (static_cast<long>(c.size()) <= k)
                c.resize(static_cast<size_t>(k + 1), Scalar(0));
            c[static_cast<size_t>(k)] = x;
        }
        long order = is_exact() ? exact_order : (order_ >= 0 ? (order_ + f - 1) / f : -((-order_) / f));
        return FracQSeries(new_den, lo, std::move(c), order);
    }

    /// Drop everything at numerators >= order.
    FracQSeries truncated(long order) const
    {
        return FracQSeries(den_, lo_, c_, std::min(order, order_));
    }

    /// Multiply by q^(shift/den).
    FracQSeries shifted(long shift) const
    {
        return FracQSeries(den_, lo_ + shift, c_, is_exact() ? exact_order : order_ + shift);
    }

    /// tau -> tau + 1: the coefficient of q^(n/den) picks up e(n/den).
    /// Only denominators 1 and 2 stay within the coefficient ring.
    FracQSeries translated() const
    {
        if (den_ == 1)
            return *this;
        if (den_ != 2)
            throw domain_error("translation needs roots of unity of order " + std::to_string(den_));
        FracQSeries r = *this;
        for (size_t k = 0; k < r.c_.size(); ++k)
            if (((lo_ + static_cast<long>(k)) & 1L) != 0)
                r.c_[k] = -r.c_[k];
        return r;
    }

    FracQSeries operator-() const
    {
        FracQSeries r = *this;
        for (auto & x : r.c_)
            x = -x;
        return r;
    }

    FracQSeries & operator+=(FracQSeries const & o) { return *this = combine(*this, o, 1); }
    FracQSeries & operator-=(FracQSeries const & o) { return *this = combine(*this, o, -1); }
    FracQSeries & operator*=(FracQSeries const & o) { return *this = multiply(*this, o); }

    FracQSeries & operator*=(Scalar const & s)
    {
        for (auto & x : c_)
            x *= s;
        trim();
        return *this;
    }

    friend FracQSeries operator+(FracQSeries a, FracQSeries const & b) { return a += b; }
    friend FracQSeries operator-(FracQSeries a, FracQSeries const & b) { return a -= b; }
    friend FracQSeries operator*(FracQSeries const & a, FracQSeries const & b) { return multiply(a, b); }
    friend FracQSeries operator*(FracQSeries a, Scalar const & s) { return a *= s; }
    friend FracQSeries operator*(Scalar const & s, FracQSeries a) { return a *= s; }

    /// Add a constant (exponent zero).
    friend FracQSeries operator+(FracQSeries a, Scalar const & s)
    {
        return a + monomial(a.den(), 0, s);
    }

    /// Exact equality of the known parts; orders must agree.
    friend bool operator==(FracQSeries const & a, FracQSeries const & b)
    {
        if (a.den_ != b.den_ || a.order_ != b.order_)
            return false;
        long from = std::min(a.lo_, b.lo_);
        long to = std::max(a.top(), b.top());
        for (long n = from; n < to; ++n)
            if (a.coeff(n) != b.coeff(n))
                return false;
        return true;
    }

    /// Multiplicative inverse. The leading coefficient must be invertible in
    /// Scalar; the relative precision of the input is preserved.
    FracQSeries inverse() const
    {
        long v = valuation();
        if (v >= order_)
            throw domain_error("inverse of a series with no known nonzero coefficient");
        if (is_exact() && top() - v > 1)
            throw domain_error("inverse of an exact non-monomial series needs a truncation order");
        long rel = is_exact() ? 1 : order_ - v; // number of known terms
        std::vector<Scalar> a(static_cast<size_t>(rel), Scalar(0));
        for (long k = 0; k < rel; ++k)
            a[static_cast<size_t>(k)] = coeff(v + k);
        std::vector<Scalar> b(static_cast<size_t>(rel), Scalar(0));
        Scalar lead_inv = Scalar(1) / a[0];
        b[0] = lead_inv;
        for (long k = 1; k < rel; ++k) {
            Scalar s(0);
            for (long i = 1; i <= k; ++i)
                s += a[static_cast<size_t>(i)] * b[static_cast<size_t>(k - i)];
            b[static_cast<size_t>(k)] = -s * lead_inv;
        }
        return FracQSeries(den_, -v, std::move(b), is_exact() ? exact_order : -v + rel);
    }

    /// Non-negative integer power by repeated squaring.
    FracQSeries pow(unsigned long n) const
    {
        FracQSeries result = monomial(den_, 0, Scalar(1));
        FracQSeries base = *this;
        while (n) {
            if (n & 1UL)
                result *= base;
            n >>= 1;
            if (n)
                base *= base;
        }
        return result;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
        // drop leading zeros but keep lo meaningful
        size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0)
            ++lead;
        if (lead == c_.size()) {
            c_.clear();
            return;
        }
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            lo_ += static_cast<long>(lead);
        }
    }

    static void require_same_den(FracQSeries const & a, FracQSeries const & b)
    {
        if (a.den_ != b.den_)
            throw domain_error("series with different denominators; rescale first");
    }

    static FracQSeries combine(FracQSeries const & a, FracQSeries const & b, int sign)
    {
        require_same_den(a, b);
        long order = std::min(a.order_, b.order_);
        long lo = std::min(a.lo_, b.lo_);
        long hi = std::min(std::max(a.top(), b.top()), order);
        std::vector<Scalar> c(static_cast<size_t>(std::max(hi - lo, 0L)), Scalar(0));
        for (long n = lo; n < hi; ++n) {
            Scalar & x = c[static_cast<size_t>(n - lo)];
            if (n >= a.lo_ && n < a.top())
                x += a.c_[static_cast<size_t>(n - a.lo_)];
            if (n >= b.lo_ && n < b.top()) {
                if (sign > 0)
                    x += b.c_[static_cast<size_t>(n - b.lo_)];
                else
                    x -= b.c_[static_cast<size_t>(n - b.lo_)];
            }
        }
        return FracQSeries(a.den_, lo, std::move(c), order);
    }

    static FracQSeries multiply(FracQSeries const & a, FracQSeries const & b)
    {
        require_same_den(a, b);
        long va = a.valuation();
        long vb = b.valuation();
        long order;
        if (a.is_exact() && b.is_exact())
            order = exact_order;
        else if (a.is_exact())
            order = b.order_ + va;
        else if (b.is_exact())
            order = a.order_ + vb;
        else
            order = std::min(a.order_ + vb, b.order_ + va);
        if (a.c_.empty() || b.c_.empty())
            return FracQSeries(a.den_, va + vb, {}, order);
        long lo = a.lo_ + b.lo_;
        long hi = std::min(a.top() + b.top() - 1, order);
        if (hi <= lo)
            return FracQSeries(a.den_, lo, {}, order);
        std::vector<Scalar> c(static_cast<size_t>(hi - lo), Scalar(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            long ni = a.lo_ + static_cast<long>(i);
            long jmax = std::min(static_cast<long>(b.c_.size()), hi - ni - b.lo_);
            for (long j = 0; j < jmax; ++j)
                c[i + static_cast<size_t>(j)] += a.c_[i] * b.c_[static_cast<size_t>(j)];
        }
        return FracQSeries(a.den_, lo, std::move(c), order);
    }

    long den_;
    long lo_;
    std::vector<Scalar> c_;
    long order_;
};

template <class Scalar>
std::ostream & operator<<(std::ostream & os, FracQSeries<Scalar> const & s)
{
    bool first = true;
    for (long n = s.lo(); n < s.top(); ++n) {
        Scalar c = s.coeff(n);
        if (c == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << c;
        if (n != 0) {
            os << "*q^";
            if (s.den() == 1 || n % s.den() == 0)
                os << n / s.den();
            else
                os << '(' << n << '/' << s.den() << ')';
        }
    }
    if (first)
        os << '0';
    if (!s.is_exact())
        os << " + O(q^(" << s.order() << '/' << s.den() << "))";
    return os;
}

using RationalSeries = FracQSeries<mpq_class>;

} // namespace cmf
