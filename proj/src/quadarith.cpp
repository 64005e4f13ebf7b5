#include "cmfactor/quadarith.hpp"
#include "cmfactor/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace cmf {

int kronecker(long a, long n)
{
    if (a == 0 && n == 0)
        throw domain_error("kronecker(0, 0) is undefined");
    return mpz_kronecker(mpz_class(a).get_mpz_t(), mpz_class(n).get_mpz_t());
}

namespace {

bool squarefree(long n)
{
    n = std::labs(n);
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0)
            return false;
        if (n % p == 0)
            n /= p;
    }
    return true;
}

long mod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

bool is_fundamental_negative(long d)
{
    if (d >= 0)
        return false;
    if (mod(d, 4) == 1)
        return squarefree(d);
    if (mod(d, 4) != 0)
        return false;
    long e = d / 4;
    return (mod(e, 4) == 2 || mod(e, 4) == 3) && squarefree(e);
}

Disc::Disc(long value) : d(value)
{
    if (!is_fundamental_negative(value))
        throw hypothesis_error(std::to_string(value) + " is not a negative fundamental discriminant");
}

void check_pair(long d1, long d2)
{
    static_cast<void>(Disc(d1));
    static_cast<void>(Disc(d2));
    if (std::gcd(d1, d2) != 1)
        throw hypothesis_error("discriminants " + std::to_string(d1) + " and " + std::to_string(d2) +
                               " are not coprime");
}

std::vector<std::pair<long, long>> factor_integer(long n)
{
    n = std::labs(n);
    if (n == 0)
        throw domain_error("cannot factor 0");
    std::vector<std::pair<long, long>> out;
    for (long p = 2; p * p <= n; ++p) {
        long e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

long valuation(mpz_class const & n, long p)
{
    if (n == 0)
        throw domain_error("valuation of 0");
    mpz_class x = n;
    long v = 0;
    while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) {
        x /= p;
        ++v;
    }
    return v;
}

RealQuadElem::RealQuadElem(long m_, long D_) : m(m_), D(D_)
{
    if (D <= 1)
        throw domain_error("D must be > 1");
    long r = static_cast<long>(std::sqrt(static_cast<double>(D)));
    while (r * r > D)
        --r;
    while ((r + 1) * (r + 1) <= D)
        ++r;
    if (r * r == D)
        throw domain_error("D is a perfect square");
    if (mod(m - D, 2) != 0)
        throw domain_error("m must have the parity of D for t to be integral");
}

namespace {

// Tonelli-Shanks for an odd prime p and a nonzero quadratic residue a.
mpz_class tonelli(mpz_class a, mpz_class const & p)
{
    a %= p;
    if (a < 0)
        a += p;
    mpz_class q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    mpz_class z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1)
        ++z;
    mpz_class c, r, t, e;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        mpz_class tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        mpz_class b = c;
        for (unsigned long k = 0; k + i + 1 < m; ++k)
            b = b * b % p;
        r = r * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return r;
}

} // namespace

mpz_class padic_sqrt(long D, long p, long k)
{
    if (k < 1)
        throw domain_error("padic_sqrt: precision must be >= 1");
    mpz_class mod_pk;
    mpz_ui_pow_ui(mod_pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    if (p == 2) {
        if (mod(D, 8) != 1)
            throw domain_error("padic_sqrt: " + std::to_string(D) + " is not a 2-adic unit square");
        // r^2 = D mod 2^j with r = 1 mod 4, lifted to j = k+1 so that r mod 2^k
        // is the 2-adic root itself
        mpz_class r = 1;
        mpz_class Dz = D;
        for (long j = 3; j <= k; ++j) {
            mpz_class m2, diff = r * r - Dz;
            mpz_ui_pow_ui(m2.get_mpz_t(), 2, static_cast<unsigned long>(j + 1));
            if (!mpz_divisible_p(diff.get_mpz_t(), m2.get_mpz_t())) {
                mpz_class step;
                mpz_ui_pow_ui(step.get_mpz_t(), 2, static_cast<unsigned long>(j - 1));
                r += step;
            }
        }
        r %= mod_pk;
        return r;
    }
    mpz_class pz = p;
    if (mod(D, p) == 0 || kronecker(D, p) != 1)
        throw domain_error("padic_sqrt: " + std::to_string(D) + " is not a square unit mod " + std::to_string(p));
    mpz_class r = tonelli(D, pz);
    if (r > pz - r)
        r = pz - r;
    // Hensel: r <- r - (r^2 - D)/(2r)
    mpz_class pj = pz;
    for (long j = 1; j < k; ++j) {
        pj *= pz;
        mpz_class inv, twor = 2 * r;
        mpz_invert(inv.get_mpz_t(), twor.get_mpz_t(), pj.get_mpz_t());
        r = (r - (r * r - D) * inv) % pj;
        if (r < 0)
            r += pj;
    }
    return r;
}

char const * to_string(SplitF s)
{
    switch (s) {
    case SplitF::Split: return "split";
    case SplitF::Inert: return "inert";
    case SplitF::Ramified: return "ramified";
    }
    return "?";
}

char const * to_string(SplitEF s) { return s == SplitEF::Split ? "split" : "inert"; }

std::string PrimeOfF::label() const
{
    std::string s = "p" + std::to_string(p);
    if (sign > 0)
        s += "+";
    else if (sign < 0)
        s += "-";
    return s;
}

std::vector<PrimeOfF> primes_of_F_above(long p, long D)
{
    switch (kronecker(D, p)) {
    case 1:
        return {PrimeOfF{p, SplitF::Split, 1, p}, PrimeOfF{p, SplitF::Split, -1, p}};
    case 0:
        return {PrimeOfF{p, SplitF::Ramified, 0, p}};
    default:
        return {PrimeOfF{p, SplitF::Inert, 0, p * p}};
    }
}

SplitEF splitting_in_E_over_F(PrimeOfF const & P, long d1, long d2)
{
    long p = P.p;
    int kd = kronecker(d1 * d2, p);
    bool consistent = (kd == 1 && P.type == SplitF::Split) || (kd == 0 && P.type == SplitF::Ramified) ||
                      (kd == -1 && P.type == SplitF::Inert);
    if (!consistent)
        throw domain_error("prime " + P.label() + " is not a prime of Q(sqrt " + std::to_string(d1 * d2) + ")");
    if (d1 % p == 0)
        return kronecker(d2, p) == 1 ? SplitEF::Split : SplitEF::Inert;
    if (d2 % p == 0)
        return kronecker(d1, p) == 1 ? SplitEF::Split : SplitEF::Inert;
    int c1 = kronecker(d1, p);
    int c2 = kronecker(d2, p);
    if (c1 == -1 && c2 == -1)
        return SplitEF::Inert;
    return SplitEF::Split;
}

IdealFactF factor_principal_ideal(RealQuadElem const & t)
{
    long N = t.norm();
    if (N == 0)
        throw domain_error("t has norm zero");
    IdealFactF out;
    for (auto [p, v] : factor_integer(N)) {
        auto primes = primes_of_F_above(p, t.D);
        switch (primes.front().type) {
        case SplitF::Inert:
            if (v % 2 != 0)
                throw construction_error("odd valuation at an inert prime");
            out[primes.front()] = v / 2;
            break;
        case SplitF::Ramified:
            out[primes.front()] = v;
            break;
        case SplitF::Split: {
            long k = v + 2;
            mpz_class s = padic_sqrt(t.D, p, k);
            mpz_class pk;
            mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
            long total = 0;
            for (auto const & P : primes) {
                // (m + sign*s)/2 modulo p^(k-1) (p = 2) or p^k (odd p)
                mpz_class x = t.m + P.sign * s;
                mpz_class half;
                long cap;
                if (p == 2) {
                    x %= pk;
                    if (x < 0)
                        x += pk;
                    half = x / 2;
                    cap = k - 1;
                } else {
                    mpz_class inv2;
                    mpz_class two = 2;
                    mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), pk.get_mpz_t());
                    half = (x * inv2) % pk;
                    if (half < 0)
                        half += pk;
                    cap = k;
                }
                long e = half == 0 ? cap : std::min(valuation(half, p), cap);
                if (e >= cap)
                    throw construction_error("p-adic precision exhausted");
                if (e)
                    out[P] = e;
                total += e;
            }
            if (total != v)
                throw construction_error("split exponents do not add up to v_p(N(t))");
            break;
        }
        }
    }
    return out;
}

long rho(IdealFactF const & a, long d1, long d2)
{
    long r = 1;
    for (auto const & [P, e] : a) {
        if (e < 0)
            return 0;
        if (splitting_in_E_over_F(P, d1, d2) == SplitEF::Split)
            r *= e + 1;
        else if (e % 2 != 0)
            return 0;
    }
    return r;
}

std::vector<PrimeOfF> diff_set(RealQuadElem const & t, long d1, long d2)
{
    if (!t.totally_positive_ratio())
        throw domain_error("diff_set needs |m| < sqrt(D)");
    std::vector<PrimeOfF> out;
    for (auto const & [P, e] : factor_principal_ideal(t))
        if (e % 2 != 0 && splitting_in_E_over_F(P, d1, d2) == SplitEF::Inert)
            out.push_back(P);
    return out;
}

void PrimeLog::add(long p, mpq_class const & e)
{
    if (e == 0)
        return;
    mpq_class & x = e_[p];
    x += e;
    if (x == 0)
        e_.erase(p);
}

PrimeLog & PrimeLog::operator+=(PrimeLog const & o)
{
    for (auto const & [p, e] : o.e_)
        add(p, e);
    return *this;
}

PrimeLog operator-(PrimeLog const & a)
{
    PrimeLog r;
    for (auto const & [p, e] : a.e_)
        r.e_[p] = -e;
    return r;
}

mpq_class PrimeLog::exponent(long p) const
{
    auto it = e_.find(p);
    return it == e_.end() ? mpq_class(0) : it->second;
}

BigFloat PrimeLog::value(long prec) const
{
    BigFloat s(prec);
    for (auto const & [p, e] : e_)
        s += BigFloat(e, prec) * log(BigFloat(p, prec));
    return s;
}

std::string PrimeLog::to_string() const
{
    if (e_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto const & [p, e] : e_) {
        if (!first)
            os << " + ";
        first = false;
        os << e.get_str() << "*log(" << p << ")";
    }
    return os.str();
}

} // namespace cmf
