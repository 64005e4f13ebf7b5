#include "cmfactor/bigfloat.hpp"
#include "cmfactor/errors.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

namespace cmf {

namespace {

long checked(long prec)
{
    if (prec < min_precision)
        throw domain_error("precision below " + std::to_string(min_precision) + " bits");
    if (prec > MPFR_PREC_MAX)
        throw domain_error("precision too large");
    return prec;
}

} // namespace

BigFloat::BigFloat(long prec)
{
    mpfr_init2(v_, checked(prec));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, long prec)
{
    mpfr_init2(v_, checked(prec));
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, long prec)
{
    mpfr_init2(v_, checked(prec));
    mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(mpz_class const & value, long prec)
{
    mpfr_init2(v_, checked(prec));
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(mpq_class const & value, long prec)
{
    mpfr_init2(v_, checked(prec));
    mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat const & o)
{
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat && o) noexcept
{
    // leave o as a valid minimal-precision zero
    mpfr_init2(v_, min_precision);
    mpfr_swap(v_, o.v_);
}

BigFloat & BigFloat::operator=(BigFloat const & o)
{
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat & BigFloat::operator=(BigFloat && o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(long prec) const
{
    BigFloat r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {

// Widen the left operand so that the result never loses precision.
void widen(BigFloat & a, BigFloat const & b)
{
    if (b.precision() > a.precision())
        mpfr_prec_round(a.get(), b.precision(), MPFR_RNDN);
}

} // namespace

BigFloat & BigFloat::operator+=(BigFloat const & o)
{
    widen(*this, o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat & BigFloat::operator-=(BigFloat const & o)
{
    widen(*this, o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat & BigFloat::operator*=(BigFloat const & o)
{
    widen(*this, o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat & BigFloat::operator/=(BigFloat const & o)
{
    widen(*this, o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const
{
    BigFloat r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

long BigFloat::exponent2() const
{
    if (mpfr_zero_p(v_))
        return -(1L << 40);
    return mpfr_get_exp(v_);
}

mpz_class BigFloat::round() const
{
    if (!mpfr_number_p(v_))
        throw domain_error("cannot round a non-finite value");
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

std::string BigFloat::to_string(int digits) const
{
    digits = std::max(digits, 1);
    int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
    std::vector<char> buf(static_cast<size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return std::string(buf.data(), static_cast<size_t>(n));
}

BigFloat BigFloat::pi(long prec)
{
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::ln2(long prec)
{
    BigFloat r(prec);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
}

BigFloat operator+(BigFloat a, BigFloat const & b) { return a += b; }
BigFloat operator-(BigFloat a, BigFloat const & b) { return a -= b; }
BigFloat operator*(BigFloat a, BigFloat const & b) { return a *= b; }
BigFloat operator/(BigFloat a, BigFloat const & b) { return a /= b; }

BigFloat operator*(BigFloat a, long b)
{
    mpfr_mul_si(a.get(), a.get(), b, MPFR_RNDN);
    return a;
}

BigFloat operator*(long b, BigFloat a) { return std::move(a) * b; }

bool operator<(BigFloat const & a, BigFloat const & b) { return mpfr_less_p(a.get(), b.get()); }
bool operator>(BigFloat const & a, BigFloat const & b) { return mpfr_greater_p(a.get(), b.get()); }
bool operator<=(BigFloat const & a, BigFloat const & b) { return mpfr_lessequal_p(a.get(), b.get()); }
bool operator>=(BigFloat const & a, BigFloat const & b) { return mpfr_greaterequal_p(a.get(), b.get()); }
bool operator==(BigFloat const & a, BigFloat const & b) { return mpfr_equal_p(a.get(), b.get()); }

#define CMF_UNARY(name, fn)                      \
    BigFloat name(BigFloat const & x)            \
    {                                            \
        BigFloat r(x.precision());               \
        fn(r.get(), x.get(), MPFR_RNDN);         \
        return r;                                \
    }

CMF_UNARY(abs, mpfr_abs)
CMF_UNARY(sqrt, mpfr_sqrt)
CMF_UNARY(exp, mpfr_exp)
CMF_UNARY(log, mpfr_log)
CMF_UNARY(sin, mpfr_sin)
CMF_UNARY(cos, mpfr_cos)

#undef CMF_UNARY

BigFloat max(BigFloat const & a, BigFloat const & b) { return a < b ? b : a; }

BigFloat pow2(long e, long prec)
{
    BigFloat r(1L, prec);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

std::ostream & operator<<(std::ostream & os, BigFloat const & x)
{
    return os << x.to_string(static_cast<int>(x.precision() * 0.30103));
}

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im))
{
    if (im_.precision() < re_.precision())
        im_ = im_.with_precision(re_.precision());
    else if (re_.precision() < im_.precision())
        re_ = re_.with_precision(im_.precision());
}

BigComplex::BigComplex(BigFloat re) : re_(std::move(re)), im_(re_.precision()) {}

long BigComplex::precision() const { return std::max(re_.precision(), im_.precision()); }

BigComplex BigComplex::with_precision(long prec) const
{
    return {re_.with_precision(prec), im_.with_precision(prec)};
}

BigComplex & BigComplex::operator+=(BigComplex const & o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

BigComplex & BigComplex::operator-=(BigComplex const & o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

BigComplex & BigComplex::operator*=(BigComplex const & o)
{
    BigFloat re = re_ * o.re_ - im_ * o.im_;
    BigFloat im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

BigComplex & BigComplex::operator/=(BigComplex const & o)
{
    BigFloat n = o.norm();
    BigFloat re = (re_ * o.re_ + im_ * o.im_) / n;
    BigFloat im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

BigComplex & BigComplex::operator*=(BigFloat const & o)
{
    re_ *= o;
    im_ *= o;
    return *this;
}

BigFloat BigComplex::norm() const { return re_ * re_ + im_ * im_; }

BigFloat BigComplex::abs() const
{
    BigFloat r(precision());
    mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
    return r;
}

BigComplex operator+(BigComplex a, BigComplex const & b) { return a += b; }
BigComplex operator-(BigComplex a, BigComplex const & b) { return a -= b; }
BigComplex operator*(BigComplex a, BigComplex const & b) { return a *= b; }
BigComplex operator/(BigComplex a, BigComplex const & b) { return a /= b; }
BigComplex operator*(BigComplex a, BigFloat const & b) { return a *= b; }
BigComplex operator*(BigFloat const & b, BigComplex a) { return a *= b; }

BigFloat abs(BigComplex const & z) { return z.abs(); }

BigFloat log_abs(BigComplex const & z)
{
    BigFloat r = z.abs();
    if (r.is_zero())
        throw domain_error("log of zero");
    return log(r);
}

BigComplex expi2pi(BigComplex const & z)
{
    long prec = z.precision();
    BigFloat twopi = BigFloat::pi(prec) * 2L;
    BigFloat mod = exp(-(twopi * z.imag()));
    BigFloat arg = twopi * z.real();
    return {mod * cos(arg), mod * sin(arg)};
}

BigComplex pow(BigComplex z, unsigned long n)
{
    BigComplex r(BigFloat(1L, z.precision()));
    while (n) {
        if (n & 1UL)
            r *= z;
        n >>= 1;
        if (n)
            z *= z;
    }
    return r;
}

BigComplex sqrt_signed(long d, long prec)
{
    BigFloat root = sqrt(BigFloat(d < 0 ? -d : d, prec));
    if (d < 0)
        return {BigFloat(prec), root};
    return BigComplex(root);
}

std::ostream & operator<<(std::ostream & os, BigComplex const & z)
{
    return os << '(' << z.real() << ", " << z.imag() << ')';
}

IntegerRecognition recognize_integer(BigComplex const & z)
{
    mpz_class v = z.real().round();
    BigFloat dre = abs(z.real() - BigFloat(v, z.precision()));
    BigFloat dim = abs(z.imag());
    return {v, max(dre, dim).to_double()};
}

} // namespace cmf
