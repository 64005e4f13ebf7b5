#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace cmf {

/// Smallest working precision accepted anywhere in the library.
inline constexpr long min_precision = 64;

/*
 * Multiprecision real backed by an mpfr_t. Every value carries its own
 * precision; binary operations produce a result at the larger of the two
 * operand precisions, so precision is never reduced implicitly.
 */
class BigFloat
{
public:
    explicit BigFloat(long prec = min_precision);
    BigFloat(long value, long prec);
    BigFloat(int value, long prec) : BigFloat(static_cast<long>(value), prec) {}
    BigFloat(double value, long prec);
    BigFloat(mpz_class const & value, long prec);
    BigFloat(mpq_class const & value, long prec);
    BigFloat(BigFloat const & o);
    BigFloat(BigFloat && o) noexcept;
    BigFloat & operator=(BigFloat const & o);
    BigFloat & operator=(BigFloat && o) noexcept;
    ~BigFloat();

    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }

    /// Copy rounded (or widened) to the given precision.
    BigFloat with_precision(long prec) const;

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    BigFloat & operator+=(BigFloat const & o);
    BigFloat & operator-=(BigFloat const & o);
    BigFloat & operator*=(BigFloat const & o);
    BigFloat & operator/=(BigFloat const & o);
    BigFloat operator-() const;

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Base-2 exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
    long exponent2() const;

    /// Nearest integer.
    mpz_class round() const;

    /// Decimal scientific notation with the given number of significant digits.
    std::string to_string(int digits) const;

    static BigFloat pi(long prec);
    static BigFloat ln2(long prec);

private:
    mpfr_t v_;
};

BigFloat operator+(BigFloat a, BigFloat const & b);
BigFloat operator-(BigFloat a, BigFloat const & b);
BigFloat operator*(BigFloat a, BigFloat const & b);
BigFloat operator/(BigFloat a, BigFloat const & b);
BigFloat operator*(BigFloat a, long b);
BigFloat operator*(long b, BigFloat a);

bool operator<(BigFloat const & a, BigFloat const & b);
bool operator>(BigFloat const & a, BigFloat const & b);
bool operator<=(BigFloat const & a, BigFloat const & b);
bool operator>=(BigFloat const & a, BigFloat const & b);
bool operator==(BigFloat const & a, BigFloat const & b);

BigFloat abs(BigFloat const & x);
BigFloat sqrt(BigFloat const & x);
BigFloat exp(BigFloat const & x);
BigFloat log(BigFloat const & x);
BigFloat sin(BigFloat const & x);
BigFloat cos(BigFloat const & x);
BigFloat max(BigFloat const & a, BigFloat const & b);
/// 2^e exactly (subject to the exponent range), at the given precision.
BigFloat pow2(long e, long prec);

std::ostream & operator<<(std::ostream & os, BigFloat const & x);

/// Multiprecision complex number as a pair of BigFloat.
class BigComplex
{
public:
    explicit BigComplex(long prec = min_precision) : re_(prec), im_(prec) {}
    BigComplex(BigFloat re, BigFloat im);
    explicit BigComplex(BigFloat re);

    BigFloat const & real() const { return re_; }
    BigFloat const & imag() const { return im_; }
    long precision() const;
    BigComplex with_precision(long prec) const;

    BigComplex & operator+=(BigComplex const & o);
    BigComplex & operator-=(BigComplex const & o);
    BigComplex & operator*=(BigComplex const & o);
    BigComplex & operator/=(BigComplex const & o);
    BigComplex & operator*=(BigFloat const & o);
    BigComplex operator-() const { return {-re_, -im_}; }

    BigComplex conj() const { return {re_, -im_}; }
    BigFloat norm() const; ///< |z|^2
    BigFloat abs() const;

private:
    BigFloat re_;
    BigFloat im_;
};

BigComplex operator+(BigComplex a, BigComplex const & b);
BigComplex operator-(BigComplex a, BigComplex const & b);
BigComplex operator*(BigComplex a, BigComplex const & b);
BigComplex operator/(BigComplex a, BigComplex const & b);
BigComplex operator*(BigComplex a, BigFloat const & b);
BigComplex operator*(BigFloat const & b, BigComplex a);

BigFloat abs(BigComplex const & z);
/// log|z|
BigFloat log_abs(BigComplex const & z);
/// e(z) = exp(2 pi i z)
BigComplex expi2pi(BigComplex const & z);
/// z^n for n >= 0 by repeated squaring
BigComplex pow(BigComplex z, unsigned long n);
/// Principal square root of a real number, as a complex number; negative
/// inputs give a positive imaginary part.
BigComplex sqrt_signed(long d, long prec);

std::ostream & operator<<(std::ostream & os, BigComplex const & z);

/// Result of rounding a number to the nearest rational integer.
struct IntegerRecognition
{
    mpz_class value;
    double residual; ///< max(|Re z - value|, |Im z|), as a double
};

IntegerRecognition recognize_integer(BigComplex const & z);

} // namespace cmf
