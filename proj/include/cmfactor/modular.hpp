#pragma once

#include "cmfactor/bigfloat.hpp"
#include "cmfactor/qseries.hpp"

#include <gmpxx.h>

#include <vector>

namespace cmf {

/// q^(1/24) prod_{n>=1} (1 - q^n) with integer powers through q^order
/// (den 24, known modulo q^((1 + 24(order+1))/24)).
RationalSeries eta_series(long order);

/// prod_{n>=1} (1 - q^n) modulo q^(order+1), from the pentagonal number theorem.
RationalSeries euler_series(long order);

/// prod_{n>=1} (1 + q^n) modulo q^(order+1).
RationalSeries plus_series(long order);

/// E_2 = 1 - 24 sum sigma_1(n) q^n modulo q^(order+1).
RationalSeries e2_series(long order);
RationalSeries e4_series(long order);
RationalSeries e6_series(long order);

/// Delta = q prod (1 - q^n)^24 modulo q^(order+1).
RationalSeries delta_series(long order);

/// j = E_4^3 / Delta modulo q^(order+1).
RationalSeries j_series(long order);

/// omega_2 = 2^12 q prod (1 + q^n)^24 modulo q^(order+1).
RationalSeries omega2_series(long order);

/// sigma_k(n) for n = 0..n_max (entry 0 is 0).
std::vector<mpz_class> divisor_sums(long n_max, unsigned k);

/// Number of q-expansion terms needed at tau for a tail below 2^-(prec+16).
long truncation_terms(BigComplex const & tau, long prec);

BigComplex eval_eta(BigComplex const & tau, long prec);
BigComplex eval_delta(BigComplex const & tau, long prec);
BigComplex eval_j(BigComplex const & tau, long prec);
BigComplex eval_omega2(BigComplex const & tau, long prec);
BigComplex eval_f2(BigComplex const & tau, long prec);

/// Integer polynomial, coefficients from the constant term up.
using IntPoly = std::vector<mpz_class>;

/// Hilbert class polynomial H_d, built numerically from the reduced forms of
/// discriminant d and rounded. Retries at doubled precision up to three
/// times before throwing precision_error.
IntPoly class_polynomial(long d, long prec = 0);

/// Resultant of two integer polynomials (Sylvester determinant, fraction-free).
mpz_class resultant(IntPoly const & a, IntPoly const & b);

} // namespace cmf
