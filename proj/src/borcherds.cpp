#include "cmfactor/borcherds.hpp"
#include "cmfactor/errors.hpp"
#include "cmfactor/modular.hpp"

#include <algorithm>
#include <functional>

namespace cmf {

namespace {

// B_2({x}) = {x}^2 - {x} + 1/6
mpq_class bernoulli2(mpq_class const & x)
{
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    mpq_class f = x - fl;
    return f * f - f + mpq_class(1, 6);
}

mpz_class integral(mpq_class const & x, std::string const & what)
{
    if (x.get_den() != 1)
        throw construction_error(what + " = " + x.get_str() + " is not an integer");
    return x.get_num();
}

// Product over the W+ index set of factors supplied by `factors`, with the
// body computed on the box (B1, B2).
using FactorFn = std::function<BiQSeries(long n, long m, long B1, long B2)>;

BiQSeries wplus_product(FactorFn const & factors, long B1, long B2)
{
    BiQSeries body = BiQSeries::monomial(0, 0, 1);
    for (long n = 0; n <= B1; ++n) {
        for (long m = -n; m <= B2; ++m) {
            if (m == 0 && n == 0)
                continue;
            body = body * factors(n, m, B1, B2);
        }
    }
    return body;
}

} // namespace

WeylVector weyl_vector(RationalSeries const & fM, Chamber chamber)
{
    if (chamber != Chamber::Wplus)
        throw domain_error("unsupported Weyl chamber");
    if (fM.den() != 1)
        throw domain_error("weyl_vector needs f_M with integral exponents");
    long lo = std::min(fM.lo(), 0L);
    RationalSeries e2 = e2_series(-lo);
    // rho_l' = constant term of f_M E_2 / 24
    mpq_class ct = 0;
    for (long k = lo; k <= 0; ++k)
        ct += fM.coeff(k) * e2.coeff(-k);
    WeylVector w;
    w.r_lp = ct / 24;
    // rho_l = -1/4 sum over M'/M = {0} of c_M(0) B_2(0)
    w.r_l = -mpq_class(1, 4) * fM.coeff(0) * bernoulli2(0);
    return w;
}

BiQSeries binomial_factor(long n, long m, int sign, mpz_class const & c, long B1, long B2)
{
    if (c == 0)
        return BiQSeries::monomial(0, 0, 1);
    if (n < 0 || (n == 0 && m <= 0))
        throw domain_error("factor (" + std::to_string(n) + ", " + std::to_string(m) + ") is outside W+");
    if (m < 0) {
        // finitely many terms only for a polynomial factor
        if (c < 0 || c > 4096)
            throw construction_error("factor with a negative power of q2 needs a small nonnegative exponent, got " +
                                     c.get_str());
        BiQSeries out;
        mpq_class b = 1;
        long top = c.get_si();
        for (long k = 0; k <= top; ++k) {
            out.add_term(k * n, k * m, (k % 2 && sign < 0) ? mpq_class(-b) : b);
            b = b * (c - k) / (k + 1);
        }
        return out;
    }
    BiQSeries out(n == 0 ? BiQSeries::unbounded : B1, m == 0 ? BiQSeries::unbounded : B2);
    mpq_class b = 1;
    for (long k = 0;; ++k) {
        if ((n > 0 && k * n > B1) || (m > 0 && k * m > B2))
            break;
        if (c > 0 && k > c)
            break;
        out.add_term(k * n, k * m, (k % 2 && sign < 0) ? mpq_class(-b) : b);
        b = b * (c - k) / (k + 1);
    }
    return out;
}

BiQSeries product_expansion_level2(VVForm const & f, WeylVector const & rho, int c_sign, long N1, long N2)
{
    if (f.components.size() != 4)
        throw domain_error("product_expansion_level2 needs a form on the level-2 module");
    if (c_sign != 1 && c_sign != -1)
        throw domain_error("sign of C must be +1 or -1");
    for (auto const & comp : f.components)
        if (comp.valuation() * 1 < -comp.den())
            throw construction_error("principal part below q^-1: the product would be infinite");
    long B1 = N1 + 1, B2 = N2 + 1;
    long need = B1 * B2;
    for (size_t mu : {size_t{0}, size_t{2}}) {
        auto const & comp = f.components[mu];
        if (comp.order() <= need * comp.den())
            throw construction_error("coefficient c(" + std::to_string(need) + ", mu" + std::to_string(mu) +
                                     ") is not available; build the form to a higher order");
    }
    auto factors = [&f](long n, long m, long b1, long b2) {
        long k = m * n;
        mpz_class c0 = integral(f.coeff(k, 0), "c(" + std::to_string(k) + ", mu0)");
        mpz_class c2 = integral(f.coeff(k, 2), "c(" + std::to_string(k) + ", mu2)");
        if (k < -1 && (c0 != 0 || c2 != 0))
            throw construction_error("nonzero coefficient below q^-1");
        return binomial_factor(n, m, -1, c0, b1, b2) * binomial_factor(n, m, 1, c2, b1, b2);
    };
    BiQSeries body = wplus_product(factors, B1, B2);
    mpz_class c_mu2 = integral(f.coeff(0, 2), "c(0, mu2)");
    body *= mpq_class(c_sign);
    body.set_prefactor(rho.r_lp, -rho.r_l, c_mu2.get_si());
    return body;
}

BiQSeries product_expansion_j(RationalSeries const & c, long N1, long N2)
{
    if (c.den() != 1)
        throw domain_error("product_expansion_j needs integral exponents");
    if (c.valuation() < -1)
        throw construction_error("principal part below q^-1: the product would be infinite");
    long B1 = N1 + 1, B2 = N2 + 1;
    if (c.order() <= B1 * B2)
        throw construction_error("coefficient c(" + std::to_string(B1 * B2) + ") is not available");
    WeylVector rho = weyl_vector(c);
    auto factors = [&c](long n, long m, long b1, long b2) {
        long k = m * n;
        mpz_class e = integral(c.coeff(k), "c(" + std::to_string(k) + ")");
        return binomial_factor(n, m, -1, e, b1, b2);
    };
    BiQSeries body = wplus_product(factors, B1, B2);
    body.set_prefactor(rho.r_lp, -rho.r_l, 0);
    return body;
}

BiQSeries bi_expand_difference(BiCase which, long N1, long N2)
{
    if (N1 < 1 || N2 < 1)
        throw domain_error("bi_expand_difference: orders must be >= 1");
    long n = std::max(N1, N2);
    BiQSeries out;
    switch (which) {
    case BiCase::j: {
        RationalSeries s = j_series(n);
        out = BiQSeries::from_univariate(s, 1) - BiQSeries::from_univariate(s, 2);
        break;
    }
    case BiCase::omega2: {
        RationalSeries s = omega2_series(n);
        out = BiQSeries::from_univariate(s, 1) - BiQSeries::from_univariate(s, 2);
        break;
    }
    case BiCase::eta_product: {
        RationalSeries s = euler_series(n);
        out = BiQSeries::from_univariate(s, 1) * BiQSeries::from_univariate(s, 2);
        out.set_prefactor(mpq_class(1, 24), mpq_class(1, 24), 0);
        break;
    }
    case BiCase::eta2_product: {
        RationalSeries s = euler_series(n).substitute_power(2);
        out = BiQSeries::from_univariate(s, 1) * BiQSeries::from_univariate(s, 2);
        out.set_prefactor(mpq_class(1, 12), mpq_class(1, 12), 1);
        break;
    }
    case BiCase::f2_product: {
        RationalSeries s = plus_series(n);
        out = BiQSeries::from_univariate(s, 1) * BiQSeries::from_univariate(s, 2);
        out.set_prefactor(mpq_class(1, 24), mpq_class(1, 24), 1);
        break;
    }
    }
    return out.truncated(N1, N2);
}

} // namespace cmf
