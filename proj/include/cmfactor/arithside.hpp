#pragma once

#include "cmfactor/quadarith.hpp"

#include <gmpxx.h>

#include <vector>

namespace cmf {

/// A local Whittaker value divided by the Weil index: value and derivative
/// at s = 0, and when known the closed form as a polynomial in X = 2^-s.
struct WhittakerValue
{
    mpq_class value_at_0;
    PrimeLog derivative_at_0;
    std::vector<mpq_class> s_form; ///< coefficients of X^0, X^1, ...
};

/// Unramified place P of F with ord_P(t sqrt D) = e >= 0.
WhittakerValue whittaker_good(SplitEF split, long e, PrimeOfF const & P);

/// Local factor at a place above 2 for the Schwartz function phi_a
/// (a in {0, 1}); o = ord_2(t), with o = -1 meaning t is not 2-integral.
WhittakerValue whittaker2_Ma(int a, long o);

/// The same closed form evaluated at an integer s.
mpq_class whittaker2_Ma_at(int a, long o, long s);

/// Local factor at 2 for the shifted functions: 1/2 if t - (1 + 2a)/4 is
/// 2-integral, else 0.
mpq_class whittaker2_shifted(int a, mpq_class const & t);

/// The prime of F above 2 dividing t (d1 = d2 = 1 mod 8, m odd).
PrimeOfF p_t_of(RealQuadElem const & t, long d1, long d2);

/// Contribution of a single t to the gz sum.
PrimeLog gz_term(RealQuadElem const & t, long d1, long d2);

PrimeLog gz_rhs(long d1, long d2);

/// Right-hand side of the omega_2 factorization, assembled from the
/// theorem's formula with rho(t P^-1 P_t^-2).
PrimeLog yz_rhs(long d1, long d2);

/// Same quantity assembled from the local factors at 2 (sum over a of
/// products of whittaker2_Ma values) times rho away from 2.
PrimeLog yz_rhs_via_whittaker(long d1, long d2);

/// sum_{A | tO_F} chi(A) log N(A) == -sum_{P inert} (1 + ord_P t)/2 rho(t P^-1) log N(P)
bool chi_log_identity_check(RealQuadElem const & t, long d1, long d2);

/// Both sides of the identity above.
std::pair<PrimeLog, PrimeLog> chi_log_identity_sides(RealQuadElem const & t, long d1, long d2);

/// Values of m with m = D mod 2 and m^2 < D.
std::vector<long> admissible_m(long D);

/// Throws hypothesis_error unless both discriminants are 1 mod 8 and coprime.
void check_yz_pair(long d1, long d2);

} // namespace cmf
