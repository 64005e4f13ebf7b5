#pragma once

#include "cmfactor/errors.hpp"

#include <Eigen/Core>
#include <gmpxx.h>

#include <array>
#include <ostream>

namespace cmf {

/// Exact element of Q(zeta_8), zeta = e(1/8), in the basis 1, zeta, zeta^2, zeta^3.
class Cyclo8
{
public:
    Cyclo8() : c_{0, 0, 0, 0} {}
    Cyclo8(int r) : c_{r, 0, 0, 0} {}
    Cyclo8(mpq_class r) : c_{std::move(r), 0, 0, 0} {}
    Cyclo8(mpq_class c0, mpq_class c1, mpq_class c2, mpq_class c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)}
    {
    }

    /// zeta^k
    static Cyclo8 zeta_pow(long k)
    {
        long r = ((k % 8) + 8) % 8;
        Cyclo8 z;
        z.c_[static_cast<size_t>(r % 4)] = r < 4 ? 1 : -1;
        return z;
    }

    /// e(x) for x with 8x integral.
    static Cyclo8 e(mpq_class const & x)
    {
        mpq_class y = x * 8;
        if (y.get_den() != 1)
            throw domain_error("e(x) needs 8x integral, got x = " + x.get_str());
        mpz_class r = y.get_num() % 8;
        return zeta_pow(r.get_si());
    }

    static Cyclo8 sqrt2() { return Cyclo8(0, 1, 0, -1); }

    mpq_class const & operator[](size_t i) const { return c_[i]; }

    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    mpq_class rational() const
    {
        if (!is_rational())
            throw domain_error("cyclotomic element is not rational");
        return c_[0];
    }

    /// zeta -> zeta^k for odd k
    Cyclo8 galois(long k) const
    {
        Cyclo8 r;
        for (long i = 0; i < 4; ++i) {
            if (c_[static_cast<size_t>(i)] == 0)
                continue;
            long e = ((i * k) % 8 + 8) % 8;
            mpq_class v = e < 4 ? c_[static_cast<size_t>(i)] : mpq_class(-c_[static_cast<size_t>(i)]);
            r.c_[static_cast<size_t>(e % 4)] += v;
        }
        return r;
    }

    Cyclo8 conj() const { return galois(7); }

    Cyclo8 inverse() const
    {
        Cyclo8 rest = galois(3) * galois(5) * galois(7);
        Cyclo8 n = *this * rest;
        if (!n.is_rational() || n.c_[0] == 0)
            throw domain_error("inverse of zero in Q(zeta_8)");
        return rest * Cyclo8(mpq_class(1 / n.c_[0]));
    }

    Cyclo8 & operator+=(Cyclo8 const & o)
    {
        for (size_t i = 0; i < 4; ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    Cyclo8 & operator-=(Cyclo8 const & o)
    {
        for (size_t i = 0; i < 4; ++i)
            c_[i] -= o.c_[i];
        return *this;
    }
    Cyclo8 & operator*=(Cyclo8 const & o) { return *this = *this * o; }
    Cyclo8 & operator/=(Cyclo8 const & o) { return *this = *this * o.inverse(); }

    friend Cyclo8 operator+(Cyclo8 a, Cyclo8 const & b) { return a += b; }
    friend Cyclo8 operator-(Cyclo8 a, Cyclo8 const & b) { return a -= b; }
    friend Cyclo8 operator/(Cyclo8 a, Cyclo8 const & b) { return a /= b; }
    friend Cyclo8 operator-(Cyclo8 const & a)
    {
        return Cyclo8(-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]);
    }
    friend Cyclo8 operator*(Cyclo8 const & a, Cyclo8 const & b)
    {
        std::array<mpq_class, 8> t{};
        for (size_t i = 0; i < 4; ++i) {
            if (a.c_[i] == 0)
                continue;
            for (size_t j = 0; j < 4; ++j)
                t[i + j] += a.c_[i] * b.c_[j];
        }
        return Cyclo8(t[0] - t[4], t[1] - t[5], t[2] - t[6], t[3] - t[7]);
    }
    friend bool operator==(Cyclo8 const & a, Cyclo8 const & b) { return a.c_ == b.c_; }
    friend bool operator!=(Cyclo8 const & a, Cyclo8 const & b) { return !(a == b); }

    friend std::ostream & operator<<(std::ostream & os, Cyclo8 const & x)
    {
        static char const * basis[] = {"", "z", "z^2", "z^3"};
        bool first = true;
        for (size_t i = 0; i < 4; ++i) {
            if (x.c_[i] == 0)
                continue;
            if (!first)
                os << " + ";
            first = false;
            os << x.c_[i];
            if (i)
                os << '*' << basis[i];
        }
        if (first)
            os << '0';
        return os;
    }

private:
    std::array<mpq_class, 4> c_;
};

} // namespace cmf

namespace Eigen {

template <>
struct NumTraits<cmf::Cyclo8> : GenericNumTraits<cmf::Cyclo8>
{
    typedef cmf::Cyclo8 Real;
    typedef cmf::Cyclo8 NonInteger;
    typedef cmf::Cyclo8 Literal;
    typedef cmf::Cyclo8 Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 64
    };
};

} // namespace Eigen
