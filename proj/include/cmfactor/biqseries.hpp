#pragma once

#include "cmfactor/qseries.hpp"

#include <gmpxx.h>

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace cmf {

/*
 * Truncated Laurent series in q1, q2 with rational coefficients, times a
 * prefactor 2^(sqrt2_power/2) q1^e1 q2^e2 with rational e1, e2.
 *
 * The coefficient of q1^i q2^j is known when i <= bound1 and j <= bound2.
 * Polynomials carry the bound `unbounded`.
 */
class BiQSeries
{
public:
    static constexpr long unbounded = LONG_MAX / 4;

    using Key = std::pair<long, long>;

    explicit BiQSeries(long bound1 = unbounded, long bound2 = unbounded) : bound1_(bound1), bound2_(bound2) {}

    static BiQSeries monomial(long i, long j, mpq_class const & c);
    /// A one-variable series with integral exponents placed in q1 (var = 1) or q2.
    static BiQSeries from_univariate(RationalSeries const & s, int var);

    long bound1() const { return bound1_; }
    long bound2() const { return bound2_; }
    bool known(long i, long j) const { return i <= bound1_ && j <= bound2_; }

    mpq_class coeff(long i, long j) const;
    void add_term(long i, long j, mpq_class const & c);
    std::map<Key, mpq_class> const & terms() const { return c_; }

    /// Smallest exponent of q1 (q2) over nonzero terms; bound + 1 if none.
    long valuation1() const;
    long valuation2() const;

    mpq_class const & prefactor_e1() const { return e1_; }
    mpq_class const & prefactor_e2() const { return e2_; }
    long sqrt2_power() const { return sqrt2_; }
    void set_prefactor(mpq_class e1, mpq_class e2, long sqrt2_power);

    /// Moves integral parts of the prefactor into the body, leaving
    /// 0 <= e1, e2 < 1 and sqrt2_power in {0, 1}.
    BiQSeries normalized() const;

    /// q1 <-> q2
    BiQSeries swapped() const;
    BiQSeries truncated(long bound1, long bound2) const;

    BiQSeries & operator+=(BiQSeries const & o);
    BiQSeries & operator-=(BiQSeries const & o);
    BiQSeries & operator*=(mpq_class const & s);
    friend BiQSeries operator+(BiQSeries a, BiQSeries const & b) { return a += b; }
    friend BiQSeries operator-(BiQSeries a, BiQSeries const & b) { return a -= b; }
    friend BiQSeries operator*(BiQSeries const & a, BiQSeries const & b);
    friend BiQSeries operator*(BiQSeries a, mpq_class const & s) { return a *= s; }

    std::string to_string(long max_terms = 12) const;

private:
    void require_plain(BiQSeries const & o) const;

    std::map<Key, mpq_class> c_;
    long bound1_;
    long bound2_;
    mpq_class e1_ = 0;
    mpq_class e2_ = 0;
    long sqrt2_ = 0;
};

/// First coefficient (i, j) where the two series differ on their common
/// known box, after normalizing prefactors; a prefactor mismatch reports
/// a description instead.
struct BiDifference
{
    long i = 0;
    long j = 0;
    mpq_class left;
    mpq_class right;
    std::string note;
};

std::optional<BiDifference> first_difference(BiQSeries const & a, BiQSeries const & b);

} // namespace cmf
