#pragma once

#include "cmfactor/biqseries.hpp"
#include "cmfactor/discform.hpp"
#include "cmfactor/qseries.hpp"

#include <gmpxx.h>

#include <string>

namespace cmf {

/// Weyl vector r_l * l_M + r_lp * l'_M with l_M = e11, l'_M = e22. Paired
/// with z it gives the prefactor q1^r_lp q2^-r_l.
struct WeylVector
{
    mpq_class r_l;
    mpq_class r_lp;
};

enum class Chamber { Wplus };

/// Rank-zero Weyl vector of f_M (integral exponents) for the chamber W+.
WeylVector weyl_vector(RationalSeries const & fM, Chamber chamber = Chamber::Wplus);

/// Psi(z, f) = C e((rho, z)) prod (1 - q1^n q2^m)^c(mn, mu0) (1 + q1^n q2^m)^c(mn, mu2)
/// over n >= 0, m + n >= 0, (m, n) != (0, 0), with |C| = 2^(c(0, mu2)/2) and the
/// sign of C given by c_sign. Known at least through q1^N1 q2^N2.
BiQSeries product_expansion_level2(VVForm const & f, WeylVector const & rho, int c_sign, long N1, long N2);

/// Psi for the unimodular lattice with input form c (a scalar series with
/// integral exponents, such as j - 744), C = 1.
BiQSeries product_expansion_j(RationalSeries const & c, long N1, long N2);

enum class BiCase { j, omega2, eta_product, eta2_product, f2_product };

/// Two-variable expansion of j(z1) - j(z2), omega2(z1) - omega2(z2),
/// eta(z1) eta(z2), sqrt2 eta(2 z1) eta(2 z2) or f2(z1) f2(z2)/sqrt2.
BiQSeries bi_expand_difference(BiCase which, long N1, long N2);

/// (1 + sign * q1^n q2^m)^c truncated to the box (B1, B2); exact when the
/// exponent is a nonnegative integer and a negative power of q2 occurs.
BiQSeries binomial_factor(long n, long m, int sign, mpz_class const & c, long B1, long B2);

} // namespace cmf
