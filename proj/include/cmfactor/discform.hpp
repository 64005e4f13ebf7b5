#pragma once

#include "cmfactor/cyclotomic.hpp"
#include "cmfactor/qseries.hpp"

#include <Eigen/Core>
#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

namespace cmf {

/// Finite quadratic module L'/L with values of Q and of the bilinear form mod 1.
struct DiscModule
{
    std::vector<std::string> labels;
    std::vector<mpq_class> qval;                 ///< Q(mu) in [0, 1)
    std::vector<std::vector<mpq_class>> bil;     ///< (mu, nu) in [0, 1)
    std::vector<size_t> negation;                ///< index of -mu
    Cyclo8 signature_factor = 1;                 ///< e((n-2)/8)

    size_t size() const { return labels.size(); }
};

/// L = [[Z, Z], [2Z, Z]] with Q = det; cosets 0, e21, e12/2, e21 + e12/2.
DiscModule level2_module();

/// M_2(Z) with Q = det (self-dual, one coset).
DiscModule unimodular_module();

using WeilMatrix = Eigen::Matrix<Cyclo8, Eigen::Dynamic, Eigen::Dynamic>;
using WeilVector = Eigen::Matrix<Cyclo8, Eigen::Dynamic, 1>;

using SL2 = std::array<long, 4>; ///< a, b, c, d

inline constexpr SL2 sl2_T{1, 1, 0, 1};
inline constexpr SL2 sl2_S{0, -1, 1, 0};

SL2 operator*(SL2 const & x, SL2 const & y);

/// Word in T^k and S equal to gamma: a sequence of (k, with_S) steps read
/// left to right as T^k S^with_S, followed by a final sign.
struct SL2Word
{
    std::vector<std::pair<long, bool>> steps;
    bool negative = false;
};

SL2Word decompose(SL2 const & gamma);

WeilMatrix weil_T(DiscModule const & mod);
WeilMatrix weil_S(DiscModule const & mod);
WeilMatrix weil_matrix(DiscModule const & mod, SL2 const & gamma);

WeilMatrix conjugate_transpose(WeilMatrix const & m);
WeilMatrix identity_matrix(size_t n);
bool exactly_equal(WeilMatrix const & a, WeilMatrix const & b);
/// Rank over Q(zeta_8) by exact elimination.
long exact_rank(WeilMatrix m);

/// Vector-valued form sum_mu f_mu phi_mu; all components share one exponent
/// denominator.
struct VVForm
{
    std::vector<RationalSeries> components;
    mpq_class weight = 0;

    /// c(n, mu) for rational n
    mpq_class coeff(mpq_class const & n, size_t mu) const { return components.at(mu).coeff_at(n); }
};

/// The weight 0 form with principal part q^-1 phi_mu0 used for omega_2, with
/// coefficients through q^order. Checks T-invariance of every component.
VVForm build_weber_f(long order);

/// The constant form sum a_i phi_mu_i on the level-2 module.
VVForm constant_form(std::array<long, 4> const & a);

/// f_M = f_mu0 + f_mu2 as a series with integral exponents.
RationalSeries restrict_to_M(VVForm const & f);

/// Throws construction_error if some component has an exponent outside
/// -Q(mu) + Z.
void check_T_invariance(VVForm const & f, DiscModule const & mod);

} // namespace cmf
