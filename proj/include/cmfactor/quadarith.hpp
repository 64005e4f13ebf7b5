#pragma once

#include "cmfactor/bigfloat.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cmf {

/// Kronecker symbol (a/n).
int kronecker(long a, long n);

/// True for negative fundamental discriminants.
bool is_fundamental_negative(long d);

/// A negative fundamental discriminant.
struct Disc
{
    long d;
    explicit Disc(long value);
};

/// Both discriminants fundamental, negative and coprime; throws
/// hypothesis_error naming the failed condition otherwise.
void check_pair(long d1, long d2);

/// Factorization of |n| by trial division, primes ascending.
std::vector<std::pair<long, long>> factor_integer(long n);

/// v_p(n); n != 0.
long valuation(mpz_class const & n, long p);

/// t = (m + sqrt(D))/2 in O_F.
struct RealQuadElem
{
    long m;
    long D;

    RealQuadElem(long m_, long D_);
    /// N(t) = (m^2 - D)/4
    long norm() const { return (m * m - D) / 4; }
    /// |m| < sqrt(D), i.e. t/sqrt(D) totally positive
    bool totally_positive_ratio() const { return m * m < D; }
};

/**
 * Canonical p-adic square root of D modulo p^k. For odd p the root reduces to
 * the smaller of the two square roots mod p; for p = 2 (D = 1 mod 8) it is the
 * 2-adic root that is 1 mod 4. Throws domain_error on non-residues.
 */
mpz_class padic_sqrt(long D, long p, long k);

enum class SplitF { Split, Inert, Ramified };
enum class SplitEF { Split, Inert };

char const * to_string(SplitF s);
char const * to_string(SplitEF s);

/// A prime of F = Q(sqrt D). Split primes are labeled by a sign: the prime
/// P_sign contains (m + sign*s)/2 exactly when v_p((m + sign*s)/2) > 0, where
/// s is the canonical root from padic_sqrt.
struct PrimeOfF
{
    long p = 0;
    SplitF type = SplitF::Inert;
    int sign = 0;   ///< +1 / -1 for split primes, 0 otherwise
    long norm = 0;  ///< p or p^2

    std::string label() const;

    friend bool operator==(PrimeOfF const & a, PrimeOfF const & b) { return a.p == b.p && a.sign == b.sign; }
    friend bool operator<(PrimeOfF const & a, PrimeOfF const & b)
    {
        return a.p != b.p ? a.p < b.p : a.sign < b.sign;
    }
};

/// Exponent map over primes of F (exponents may be negative for quotients).
using IdealFactF = std::map<PrimeOfF, long>;

std::vector<PrimeOfF> primes_of_F_above(long p, long D);

SplitEF splitting_in_E_over_F(PrimeOfF const & P, long d1, long d2);

/// Prime factorization of t*O_F.
IdealFactF factor_principal_ideal(RealQuadElem const & t);

/// Number of integral ideals of E with relative norm a; 0 if any exponent of
/// a is negative.
long rho(IdealFactF const & a, long d1, long d2);

/// InertEF primes with odd order in t*O_F. Requires |m| < sqrt(D).
std::vector<PrimeOfF> diff_set(RealQuadElem const & t, long d1, long d2);

/// Exact formal sum  sum_p e_p log p.
class PrimeLog
{
public:
    void add(long p, mpq_class const & e);
    PrimeLog & operator+=(PrimeLog const & o);
    friend PrimeLog operator-(PrimeLog const & a);
    friend bool operator==(PrimeLog const & a, PrimeLog const & b) { return a.e_ == b.e_; }

    mpq_class exponent(long p) const;
    std::map<long, mpq_class> const & terms() const { return e_; }
    bool empty() const { return e_.empty(); }
    long largest_prime() const { return e_.empty() ? 1 : e_.rbegin()->first; }

    /// Numeric value at the given precision.
    BigFloat value(long prec) const;
    std::string to_string() const;

private:
    std::map<long, mpq_class> e_; ///< no zero entries
};

} // namespace cmf
