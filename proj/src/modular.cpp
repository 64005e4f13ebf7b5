#include "cmfactor/modular.hpp"
#include "cmfactor/classgroup.hpp"
#include "cmfactor/errors.hpp"

#include <cmath>

namespace cmf {

namespace {

void require_order(long order, long min, char const * what)
{
    if (order < min)
        throw domain_error(std::string(what) + ": order must be >= " + std::to_string(min));
}

RationalSeries eisenstein(long order, unsigned k, long factor)
{
    auto sigma = divisor_sums(order, k);
    std::vector<mpq_class> c(static_cast<size_t>(order + 1));
    c[0] = 1;
    for (long n = 1; n <= order; ++n)
        c[static_cast<size_t>(n)] = mpq_class(sigma[static_cast<size_t>(n)] * factor);
    return RationalSeries(1, 0, std::move(c), order + 1);
}

} // namespace

std::vector<mpz_class> divisor_sums(long n_max, unsigned k)
{
    std::vector<mpz_class> s(static_cast<size_t>(std::max(n_max, 0L) + 1), 0);
    for (long d = 1; d <= n_max; ++d) {
        mpz_class dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), k);
        for (long n = d; n <= n_max; n += d)
            s[static_cast<size_t>(n)] += dk;
    }
    return s;
}

RationalSeries euler_series(long order)
{
    require_order(order, 0, "euler_series");
    std::vector<mpq_class> c(static_cast<size_t>(order + 1), 0);
    c[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 > order)
            break;
        int sign = (k & 1) ? -1 : 1;
        c[static_cast<size_t>(g1)] += sign;
        if (g2 <= order)
            c[static_cast<size_t>(g2)] += sign;
    }
    return RationalSeries(1, 0, std::move(c), order + 1);
}

RationalSeries eta_series(long order)
{
    require_order(order, 1, "eta_series");
    RationalSeries e = euler_series(order);
    std::vector<mpq_class> c(static_cast<size_t>(24 * order + 1), 0);
    for (long n = 0; n <= order; ++n)
        c[static_cast<size_t>(24 * n)] = e.coeff(n);
    return RationalSeries(24, 1, std::move(c), 1 + 24 * (order + 1));
}

RationalSeries plus_series(long order)
{
    require_order(order, 0, "plus_series");
    // partitions into distinct parts
    std::vector<mpq_class> c(static_cast<size_t>(order + 1), 0);
    c[0] = 1;
    for (long part = 1; part <= order; ++part)
        for (long n = order; n >= part; --n)
            c[static_cast<size_t>(n)] += c[static_cast<size_t>(n - part)];
    return RationalSeries(1, 0, std::move(c), order + 1);
}

RationalSeries e2_series(long order)
{
    require_order(order, 0, "e2_series");
    return eisenstein(order, 1, -24);
}

RationalSeries e4_series(long order)
{
    require_order(order, 0, "e4_series");
    return eisenstein(order, 3, 240);
}

RationalSeries e6_series(long order)
{
    require_order(order, 0, "e6_series");
    return eisenstein(order, 5, -504);
}

RationalSeries delta_series(long order)
{
    require_order(order, 1, "delta_series");
    return euler_series(order - 1).pow(24).shifted(1);
}

RationalSeries j_series(long order)
{
    require_order(order, 0, "j_series");
    RationalSeries e4 = e4_series(order + 1);
    return e4 * e4 * e4 * delta_series(order + 2).inverse();
}

RationalSeries omega2_series(long order)
{
    require_order(order, 1, "omega2_series");
    return plus_series(order - 1).pow(24).shifted(1) * mpq_class(4096);
}

long truncation_terms(BigComplex const & tau, long prec)
{
    double y = tau.imag().to_double();
    if (!(y > 0))
        throw domain_error("Im(tau) must be positive");
    double n = (static_cast<double>(prec) + 16) * std::log(2.0) / (2 * M_PI * y);
    if (n > 1e8)
        throw domain_error("Im(tau) too small for q-expansion evaluation");
    return static_cast<long>(n) + 2;
}

namespace {

long working_precision(long prec) { return std::max(prec, min_precision) + 32; }

// prod_{n>=1} (1 - q^n) through the pentagonal exponents <= terms
BigComplex euler_eval(BigComplex const & q, long terms)
{
    long w = q.precision();
    BigComplex sum(BigFloat(1L, w));
    BigComplex qk(BigFloat(1L, w));        // q^k
    BigComplex qg(BigFloat(1L, w));        // q^(k(3k-1)/2)
    BigComplex q3k1 = q;                   // q^(3k+1) for the next step, k = 0
    BigComplex q3 = q * q * q;
    for (long k = 1;; ++k) {
        // g(k) = g(k-1) + 3(k-1) + 1
        qg *= q3k1;
        q3k1 *= q3;
        qk *= q;
        long g1 = k * (3 * k - 1) / 2;
        if (g1 > terms)
            break;
        BigComplex t = qg + qg * qk; // q^g1 + q^(g1+k)
        if (k & 1)
            sum -= t;
        else
            sum += t;
    }
    return sum;
}

BigComplex nome(BigComplex const & tau, long w)
{
    if (tau.imag().sign() <= 0)
        throw domain_error("Im(tau) must be positive");
    return expi2pi(tau.with_precision(w));
}

} // namespace

BigComplex eval_eta(BigComplex const & tau, long prec)
{
    long w = working_precision(prec);
    BigComplex q = nome(tau, w);
    long n = truncation_terms(tau, w);
    BigComplex t24 = tau.with_precision(w) * BigFloat(mpq_class(1, 24), w);
    return (expi2pi(t24) * euler_eval(q, n)).with_precision(prec);
}

BigComplex eval_delta(BigComplex const & tau, long prec)
{
    long w = working_precision(prec);
    BigComplex q = nome(tau, w);
    long n = truncation_terms(tau, w);
    return (q * pow(euler_eval(q, n), 24)).with_precision(prec);
}

BigComplex eval_j(BigComplex const & tau, long prec)
{
    long w = working_precision(prec);
    BigComplex q = nome(tau, w);
    long n = truncation_terms(tau, w);
    auto sigma = divisor_sums(n, 3);
    BigComplex sum(w);
    BigComplex qn(BigFloat(1L, w));
    for (long k = 1; k <= n; ++k) {
        qn *= q;
        sum += qn * BigFloat(sigma[static_cast<size_t>(k)], w);
    }
    BigComplex e4 = BigComplex(BigFloat(1L, w)) + sum * BigFloat(240L, w);
    BigComplex delta = q * pow(euler_eval(q, n), 24);
    return (e4 * e4 * e4 / delta).with_precision(prec);
}

BigComplex eval_omega2(BigComplex const & tau, long prec)
{
    long w = working_precision(prec);
    BigComplex q = nome(tau, w);
    long n = truncation_terms(tau, w);
    BigComplex ratio = euler_eval(q * q, n) / euler_eval(q, n);
    return (q * pow(ratio, 24) * BigFloat(4096L, w)).with_precision(prec);
}

BigComplex eval_f2(BigComplex const & tau, long prec)
{
    long w = working_precision(prec);
    BigComplex q = nome(tau, w);
    long n = truncation_terms(tau, w);
    BigComplex t24 = tau.with_precision(w) * BigFloat(mpq_class(1, 24), w);
    BigComplex ratio = euler_eval(q * q, n) / euler_eval(q, n);
    return (expi2pi(t24) * ratio * sqrt(BigFloat(2L, w))).with_precision(prec);
}

IntPoly class_polynomial(long d, long prec)
{
    auto forms = reduced_forms(d);
    if (prec <= 0) {
        double bits = 0;
        for (auto const & f : forms)
            bits += M_PI * std::sqrt(static_cast<double>(-d)) / (static_cast<double>(f.a) * std::log(2.0));
        prec = 64 + static_cast<long>(std::ceil(1.2 * bits));
    }
    double worst = 0;
    for (int attempt = 0; attempt <= 3; ++attempt, prec *= 2) {
        std::vector<BigComplex> poly{BigComplex(BigFloat(1L, prec))};
        for (auto const & f : forms) {
            BigComplex root = eval_j(heegner_point(f).tau(prec), prec);
            std::vector<BigComplex> next(poly.size() + 1, BigComplex(prec));
            for (size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] += poly[k];
                next[k] -= poly[k] * root;
            }
            poly = std::move(next);
        }
        IntPoly out;
        worst = 0;
        for (auto const & c : poly) {
            auto r = recognize_integer(c);
            worst = std::max(worst, r.residual);
            out.push_back(r.value);
        }
        if (worst < std::ldexp(1.0, -32))
            return out;
    }
    throw precision_error("class polynomial of discriminant " + std::to_string(d) +
                              " not recognized after 3 precision doublings",
                          worst);
}

mpz_class resultant(IntPoly const & a, IntPoly const & b)
{
    long m = static_cast<long>(a.size()) - 1;
    long n = static_cast<long>(b.size()) - 1;
    if (m < 0 || n < 0)
        throw domain_error("resultant of an empty polynomial");
    if (a.back() == 0 || b.back() == 0)
        throw domain_error("resultant needs nonzero leading coefficients");
    long size = m + n;
    if (size == 0)
        return 1;
    std::vector<std::vector<mpz_class>> s(static_cast<size_t>(size), std::vector<mpz_class>(static_cast<size_t>(size), 0));
    for (long r = 0; r < n; ++r)
        for (long k = 0; k <= m; ++k)
            s[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = a[static_cast<size_t>(m - k)];
    for (long r = 0; r < m; ++r)
        for (long k = 0; k <= n; ++k)
            s[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] = b[static_cast<size_t>(n - k)];

    // Bareiss fraction-free elimination
    int sign = 1;
    mpz_class prev = 1;
    for (long k = 0; k < size - 1; ++k) {
        auto K = static_cast<size_t>(k);
        if (s[K][K] == 0) {
            long p = k + 1;
            while (p < size && s[static_cast<size_t>(p)][K] == 0)
                ++p;
            if (p == size)
                return 0;
            std::swap(s[K], s[static_cast<size_t>(p)]);
            sign = -sign;
        }
        for (long i = k + 1; i < size; ++i) {
            auto I = static_cast<size_t>(i);
            for (long j = k + 1; j < size; ++j) {
                auto J = static_cast<size_t>(j);
                s[I][J] = (s[I][J] * s[K][K] - s[I][K] * s[K][J]);
                mpz_divexact(s[I][J].get_mpz_t(), s[I][J].get_mpz_t(), prev.get_mpz_t());
            }
            s[I][K] = 0;
        }
        prev = s[K][K];
    }
    mpz_class det = s.back().back();
    return sign > 0 ? det : mpz_class(-det);
}

} // namespace cmf
