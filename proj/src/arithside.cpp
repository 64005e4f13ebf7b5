#include "cmfactor/arithside.hpp"
#include "cmfactor/errors.hpp"

#include <cmath>
#include <functional>

namespace cmf {

namespace {

long norm_exponent(PrimeOfF const & P) { return P.norm == P.p ? 1 : 2; }

mpq_class half(long x)
{
    mpq_class r(x, 2);
    r.canonicalize();
    return r;
}

long mod8(long d) { return ((d % 8) + 8) % 8; }

mpq_class eval_poly(std::vector<mpq_class> const & c, mpq_class const & x)
{
    mpq_class r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        r = r * x + *it;
    return r;
}

WhittakerValue from_poly(std::vector<mpq_class> c)
{
    WhittakerValue w;
    w.value_at_0 = eval_poly(c, 1);
    // d/ds P(2^-s) at s = 0 is -log 2 * sum k c_k
    mpq_class slope = 0;
    for (size_t k = 1; k < c.size(); ++k)
        slope += static_cast<long>(k) * c[k];
    w.derivative_at_0.add(2, -slope);
    w.s_form = std::move(c);
    return w;
}

std::vector<mpq_class> ma_poly(int a, long o)
{
    if (a != 0 && a != 1)
        throw domain_error("a must be 0 or 1");
    if (o < -1)
        throw domain_error("ord_2(t) must be >= -1");
    mpq_class h(1, 2);
    if (o == -1)
        return {};
    if (a == 1)
        return o == 0 ? std::vector<mpq_class>{h, -h} : std::vector<mpq_class>{h, h};
    if (o == 0)
        return {h};
    // 1/2 - X + (1 - X/2) sum_{n=1}^{o} X^n
    std::vector<mpq_class> c(static_cast<size_t>(o + 2), 0);
    c[0] = h;
    c[1] = -1;
    for (long n = 1; n <= o; ++n) {
        c[static_cast<size_t>(n)] += 1;
        c[static_cast<size_t>(n + 1)] -= h;
    }
    return c;
}

} // namespace

WhittakerValue whittaker_good(SplitEF split, long e, PrimeOfF const & P)
{
    if (e < 0)
        throw domain_error("whittaker_good needs ord >= 0");
    WhittakerValue w;
    if (split == SplitEF::Split) {
        w.value_at_0 = e + 1;
    } else if (e % 2 == 0) {
        w.value_at_0 = 1;
    } else {
        w.value_at_0 = 0;
        w.derivative_at_0.add(P.p, half(1 + e) * norm_exponent(P));
    }
    return w;
}

WhittakerValue whittaker2_Ma(int a, long o) { return from_poly(ma_poly(a, o)); }

mpq_class whittaker2_Ma_at(int a, long o, long s)
{
    mpq_class x = 1;
    if (s >= 0)
        mpz_mul_2exp(x.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(s));
    else
        mpz_mul_2exp(x.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(-s));
    return eval_poly(ma_poly(a, o), x);
}

mpq_class whittaker2_shifted(int a, mpq_class const & t)
{
    if (a != 0 && a != 1)
        throw domain_error("a must be 0 or 1");
    mpq_class u = t - mpq_class(1 + 2 * a, 4);
    return mpz_odd_p(u.get_den_mpz_t()) ? mpq_class(1, 2) : mpq_class(0);
}

void check_yz_pair(long d1, long d2)
{
    check_pair(d1, d2);
    if (mod8(d1) != 1 || mod8(d2) != 1)
        throw hypothesis_error("discriminants must be 1 mod 8, got " + std::to_string(d1) + " and " +
                               std::to_string(d2));
}

PrimeOfF p_t_of(RealQuadElem const & t, long d1, long d2)
{
    if (mod8(d1) != 1 || mod8(d2) != 1)
        throw hypothesis_error("p_t needs d1 = d2 = 1 mod 8");
    if (t.m % 2 == 0)
        throw domain_error("p_t needs m odd");
    std::vector<PrimeOfF> hits;
    for (auto const & [P, e] : factor_principal_ideal(t))
        if (P.p == 2 && e >= 1)
            hits.push_back(P);
    if (hits.size() != 1)
        throw construction_error("expected exactly one prime above 2 dividing t, found " +
                                 std::to_string(hits.size()));
    return hits.front();
}

std::vector<long> admissible_m(long D)
{
    long r = static_cast<long>(std::sqrt(static_cast<double>(D)));
    while (r * r > D)
        --r;
    while ((r + 1) * (r + 1) <= D)
        ++r;
    if (r * r == D)
        throw construction_error("D = " + std::to_string(D) + " is a perfect square");
    std::vector<long> out;
    for (long m = -r; m <= r; ++m)
        if (((m - D) % 2 + 2) % 2 == 0)
            out.push_back(m);
    return out;
}

PrimeLog gz_term(RealQuadElem const & t, long d1, long d2)
{
    PrimeLog out;
    IdealFactF fac = factor_principal_ideal(t);
    std::vector<PrimeOfF> diff;
    for (auto const & [P, e] : fac)
        if (e % 2 != 0 && splitting_in_E_over_F(P, d1, d2) == SplitEF::Inert)
            diff.push_back(P);
    if (diff.size() != 1)
        return out;
    PrimeOfF const & P = diff.front();
    long e = fac[P];
    IdealFactF rest = fac;
    rest[P] -= 1;
    out.add(P.p, half(1 + e) * rho(rest, d1, d2) * norm_exponent(P));
    return out;
}

PrimeLog gz_rhs(long d1, long d2)
{
    check_pair(d1, d2);
    long D = d1 * d2;
    PrimeLog out;
    for (long m : admissible_m(D))
        out += gz_term(RealQuadElem(m, D), d1, d2);
    return out;
}

PrimeLog yz_rhs(long d1, long d2)
{
    check_yz_pair(d1, d2);
    long D = d1 * d2;
    PrimeLog out;
    for (long m : admissible_m(D)) {
        if (((m * m - D) % 16) != 0)
            continue;
        RealQuadElem t(m, D);
        IdealFactF fac = factor_principal_ideal(t);
        std::vector<PrimeOfF> diff;
        for (auto const & [P, e] : fac)
            if (e % 2 != 0 && splitting_in_E_over_F(P, d1, d2) == SplitEF::Inert)
                diff.push_back(P);
        if (diff.size() != 1)
            continue;
        PrimeOfF const & P = diff.front();
        long e = fac[P];
        PrimeOfF pt = p_t_of(t, d1, d2);
        IdealFactF rest = fac;
        rest[P] -= 1;
        rest[pt] -= 2;
        out.add(P.p, half(1 + e) * rho(rest, d1, d2) * norm_exponent(P));
    }
    return out;
}

PrimeLog yz_rhs_via_whittaker(long d1, long d2)
{
    check_yz_pair(d1, d2);
    long D = d1 * d2;
    PrimeLog out;
    for (long m : admissible_m(D)) {
        RealQuadElem t(m, D);
        IdealFactF fac = factor_principal_ideal(t);
        std::vector<PrimeOfF> diff;
        for (auto const & [P, e] : fac)
            if (e % 2 != 0 && splitting_in_E_over_F(P, d1, d2) == SplitEF::Inert)
                diff.push_back(P);
        if (diff.size() != 1)
            continue;
        PrimeOfF const & P = diff.front();
        long e = fac[P];

        // local factor at the two places above 2
        long o_plus = 0, o_minus = 0;
        for (auto const & [Q, k] : fac) {
            if (Q.p != 2)
                continue;
            (Q.sign > 0 ? o_plus : o_minus) = k;
        }
        mpq_class local2 = 0;
        for (int a : {0, 1})
            local2 += 4 * whittaker2_Ma(a, o_plus).value_at_0 * whittaker2_Ma(a, o_minus).value_at_0;
        if (local2 == 0)
            continue;

        // good places away from 2 and P
        mpq_class away = 1;
        for (auto const & [Q, k] : fac) {
            if (Q.p == 2 || Q == P)
                continue;
            away *= whittaker_good(splitting_in_E_over_F(Q, d1, d2), k, Q).value_at_0;
        }
        // P itself, with ord lowered by one
        away *= whittaker_good(SplitEF::Inert, e - 1, P).value_at_0;
        out.add(P.p, half(1 + e) * local2 * away * norm_exponent(P));
    }
    return out;
}

std::pair<PrimeLog, PrimeLog> chi_log_identity_sides(RealQuadElem const & t, long d1, long d2)
{
    if (!t.totally_positive_ratio())
        throw domain_error("chi_log identity needs |m| < sqrt(D)");
    IdealFactF fac = factor_principal_ideal(t);
    std::vector<std::pair<PrimeOfF, long>> primes(fac.begin(), fac.end());
    std::vector<int> chi;
    for (auto const & [P, e] : primes)
        chi.push_back(splitting_in_E_over_F(P, d1, d2) == SplitEF::Split ? 1 : -1);

    PrimeLog lhs;
    std::vector<long> a(primes.size(), 0);
    std::function<void(size_t, int)> walk = [&](size_t i, int sign) {
        if (i == primes.size()) {
            for (size_t k = 0; k < primes.size(); ++k)
                lhs.add(primes[k].first.p, mpq_class(sign * a[k] * norm_exponent(primes[k].first)));
            return;
        }
        int s = sign;
        for (long x = 0; x <= primes[i].second; ++x) {
            a[i] = x;
            walk(i + 1, s);
            s *= chi[i];
        }
        a[i] = 0;
    };
    walk(0, 1);

    PrimeLog rhs;
    for (auto const & [P, e] : fac) {
        if (splitting_in_E_over_F(P, d1, d2) != SplitEF::Inert)
            continue;
        IdealFactF rest = fac;
        rest[P] -= 1;
        rhs.add(P.p, -half(1 + e) * rho(rest, d1, d2) * norm_exponent(P));
    }
    return {lhs, rhs};
}

bool chi_log_identity_check(RealQuadElem const & t, long d1, long d2)
{
    auto [lhs, rhs] = chi_log_identity_sides(t, d1, d2);
    return lhs == rhs;
}

} // namespace cmf
