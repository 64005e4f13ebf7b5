#pragma once

#include "cmfactor/bigfloat.hpp"
#include "cmfactor/biqseries.hpp"
#include "cmfactor/quadarith.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cmf {

struct VerifyOptions
{
    long prec = 0;        ///< bits; 0 picks the default from the discriminants
    unsigned threads = 0; ///< 0 uses CMFACTOR_THREADS or the hardware count
    bool resultant_oracle = true;
};

struct VerificationReport
{
    std::string kind; ///< "gz" or "yz"
    long d1 = 0;
    long d2 = 0;
    long precision = 0; ///< bits used for the final evaluation

    BigFloat lhs_log;
    PrimeLog rhs;
    BigFloat rhs_log;
    BigFloat residual;

    /// Product of Psi(tau2) - Psi(tau1) over pairs of classes, rounded.
    mpz_class product_integer;
    double recognition_residual = 0;

    /// Factorization of |product_integer|, and whatever was left after trial division.
    std::map<long, long> factorization;
    mpz_class cofactor = 1;

    bool factor_match = false;
    bool primes_bounded = false; ///< every rhs prime <= D/4 (gz) or D/16 (yz)
    bool oracle_checked = false;
    bool oracle_match = false;

    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    std::string status() const { return ok() ? "ok" : "failed"; }
};

/// Starting precision 64 + ceil(1.2 * pairs * pi sqrt|d_max| / ln 2).
long default_precision(long d1, long d2);

/// Worker count: the explicit value, else CMFACTOR_THREADS, else the hardware count.
unsigned resolve_threads(unsigned requested);

VerificationReport gz_verify(long d1, long d2, VerifyOptions const & opt = {});
VerificationReport yz_verify(long d1, long d2, VerifyOptions const & opt = {});

enum class BorcherdsCase { j, weber, eta1, eta2, f2 };

BorcherdsCase parse_borcherds_case(std::string const & name);
char const * to_string(BorcherdsCase c);

struct BorcherdsCheck
{
    bool ok = false;
    std::optional<BiDifference> difference;
    BiQSeries product;  ///< the Borcherds product side
    BiQSeries expected; ///< the closed-form side
};

/// Compares the product expansion with the closed-form expansion through
/// q1^N1 q2^N2.
BorcherdsCheck borcherds_verify(BorcherdsCase c, long N1, long N2);

} // namespace cmf
