#include "cmfactor/arithside.hpp"
#include "cmfactor/errors.hpp"
#include "cmfactor/quadarith.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <functional>
#include <random>
#include <set>
#include <tuple>

using namespace cmf;
using namespace oracle;


TEST_SUITE("quadarith")
{
    TEST_CASE("kronecker against Euler's criterion")
    {
        for (long p = 3; p < 200; ++p) {
            if (!is_prime(p))
                continue;
            for (long a = -50; a <= 50; ++a)
                CHECK(kronecker(a, p) == legendre_euler(a, p));
        }
        for (long a = -51; a <= 51; a += 2)
            CHECK(kronecker(a, 2) == kronecker2(a));
        CHECK(kronecker(-163, 3) == -1);
    }

    TEST_CASE("fundamental discriminants")
    {
        for (long d : {-3, -4, -7, -8, -15, -20, -24, -163})
            CHECK(is_fundamental_negative(d));
        for (long d : {-12, -16, -27, -1, -2, 5, -5})
            CHECK_FALSE(is_fundamental_negative(d));
        CHECK_THROWS_AS(Disc(-12), hypothesis_error);
        CHECK_THROWS_AS(check_pair(-7, -7), hypothesis_error);
        CHECK_THROWS_AS(check_pair(-3, -15), hypothesis_error);
        CHECK_NOTHROW(check_pair(-3, -163));
    }

    TEST_CASE("factor_integer and valuation")
    {
        auto f = factor_integer(-360);
        REQUIRE(f.size() == 3);
        CHECK(f[0] == std::pair<long, long>{2, 3});
        CHECK(f[2] == std::pair<long, long>{5, 1});
        CHECK(valuation(mpz_class(48), 2) == 4);
        CHECK(valuation(mpz_class(-81), 3) == 4);
    }

    TEST_CASE("padic_sqrt")
    {
        for (auto [D, p, k] : std::vector<std::tuple<long, long, long>>{
                 {105, 11, 1}, {489, 5, 3}, {161, 2, 6}, {105, 2, 10}, {1141, 3, 4}, {21, 5, 2}}) {
            if (p != 2 && kronecker(D, p) != 1)
                continue;
            mpz_class r = padic_sqrt(D, p, k);
            mpz_class pk;
            mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
            CHECK((r * r - D) % pk == 0);
        }
        // canonical choice: the smaller root mod p
        CHECK(padic_sqrt(9, 5, 1) == 2);
        CHECK(padic_sqrt(105, 2, 5) % 4 == 1);
        CHECK_THROWS_AS(padic_sqrt(2, 5, 1), domain_error);
    }

    TEST_CASE("splitting of primes")
    {
        // D = 105 = (-7)(-15)
        CHECK(primes_of_F_above(11, 105).size() == 1); // (105/11) = -1
        CHECK(primes_of_F_above(2, 105).size() == 2);
        CHECK(primes_of_F_above(3, 105).front().type == SplitF::Ramified);
        // p = 3 ramified in F = Q(sqrt 489), inert in E/F since (-163/3) = -1
        auto P3 = primes_of_F_above(3, 489).front();
        CHECK(splitting_in_E_over_F(P3, -3, -163) == SplitEF::Inert);
        for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
            for (auto const & P : primes_of_F_above(p, 105)) {
                SplitEF s = splitting_in_E_over_F(P, -7, -15);
                if (p % 3 == 0 || p % 5 == 0 || p == 7)
                    continue;
                int a = legendre_euler(-7, p), b = legendre_euler(-15, p);
                CHECK(s == ((a == -1 && b == -1) ? SplitEF::Inert : SplitEF::Split));
            }
        }
    }

    TEST_CASE("principal ideal factorization has the right norm")
    {
        for (long D : {21L, 105L, 161L, 489L, 1141L}) {
            for (long m : admissible_m(D)) {
                RealQuadElem t(m, D);
                IdealFactF fac = factor_principal_ideal(t);
                mpz_class n = 1;
                for (auto const & [P, e] : fac) {
                    CHECK(e > 0);
                    mpz_class pe;
                    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(P.norm), static_cast<unsigned long>(e));
                    n *= pe;
                }
                CHECK(n == std::labs(t.norm()));
            }
        }
        // (21 + sqrt 489)/2: norm -12, P2^2 P3
        IdealFactF f = factor_principal_ideal(RealQuadElem(21, 489));
        long e2 = 0, e3 = 0;
        for (auto const & [P, e] : f)
            (P.p == 2 ? e2 : e3) += e;
        CHECK(e2 == 2);
        CHECK(e3 == 1);
        CHECK_THROWS(RealQuadElem(2, 105));
    }

    TEST_CASE("rho against biquadratic ideal counts")
    {
        std::vector<std::pair<long, long>> pairs{{-3, -7}, {-7, -15}, {-7, -23}, {-3, -163}, {-7, -163}, {-4, -15}};
        for (auto [d1, d2] : pairs) {
            long D = d1 * d2;
            for (long n = 1; n <= 500; ++n) {
                long total = 0;
                for (auto const & a : ideals_of_norm(n, D))
                    total += rho(a, d1, d2);
                CHECK_MESSAGE(total == biquadratic_ideal_count(n, d1, d2), "d1=" << d1 << " d2=" << d2 << " n=" << n);
            }
        }
        IdealFactF neg;
        neg[primes_of_F_above(5, 105).front()] = -1;
        CHECK(rho(neg, -7, -15) == 0);
    }

    TEST_CASE("Diff has odd size for every admissible t")
    {
        std::vector<std::pair<long, long>> pairs{{-3, -7}, {-7, -15}, {-7, -23}, {-3, -163}, {-7, -163}};
        for (auto [d1, d2] : pairs) {
            long D = d1 * d2;
            for (long m : admissible_m(D)) {
                auto diff = diff_set(RealQuadElem(m, D), d1, d2);
                CHECK_MESSAGE(diff.size() % 2 == 1, "D=" << D << " m=" << m);
            }
        }
        // (21 + sqrt 489)/2 has Diff = {P3}
        auto diff = diff_set(RealQuadElem(21, 489), -3, -163);
        REQUIRE(diff.size() == 1);
        CHECK(diff.front().p == 3);
    }

    TEST_CASE("chi-log identity for random t")
    {
        std::vector<std::pair<long, long>> pairs{{-3, -7},  {-7, -15}, {-7, -23},  {-3, -163}, {-7, -163},
                                                 {-4, -15}, {-8, -15}, {-3, -43},  {-11, -19}, {-15, -23},
                                                 {-23, -31}, {-20, -7}, {-24, -35}, {-39, -4}};
        std::mt19937 gen(20240917);
        int checked = 0;
        while (checked < 200) {
            auto [d1, d2] = pairs[gen() % pairs.size()];
            auto ms = admissible_m(d1 * d2);
            long m = ms[gen() % ms.size()];
            RealQuadElem t(m, d1 * d2);
            auto [lhs, rhs] = chi_log_identity_sides(t, d1, d2);
            CHECK_MESSAGE(lhs == rhs, "d1=" << d1 << " d2=" << d2 << " m=" << m << " lhs=" << lhs.to_string()
                                            << " rhs=" << rhs.to_string());
            ++checked;
        }
        CHECK(chi_log_identity_check(RealQuadElem(21, 489), -3, -163));
        auto [lhs, rhs] = chi_log_identity_sides(RealQuadElem(21, 489), -3, -163);
        CHECK(lhs.exponent(3) == -1);
        CHECK(lhs.exponent(2) == 0);
    }

    TEST_CASE("PrimeLog")
    {
        PrimeLog a;
        a.add(2, 3);
        a.add(3, mpq_class(1, 2));
        a.add(2, -3);
        CHECK(a.exponent(2) == 0);
        CHECK(a.largest_prime() == 3);
        PrimeLog b;
        b.add(3, mpq_class(1, 2));
        CHECK(a == b);
        CHECK((-b).exponent(3) == mpq_class(-1, 2));
        CHECK(b.value(128).to_double() == doctest::Approx(0.5 * std::log(3.0)));
    }
}
