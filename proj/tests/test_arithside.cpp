#include "cmfactor/arithside.hpp"
#include "cmfactor/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <map>

using namespace cmf;
using oracle::density;

namespace {

std::map<long, mpq_class> exps(PrimeLog const & p) { return {p.terms().begin(), p.terms().end()}; }

} // namespace

TEST_SUITE("arithside")
{
    TEST_CASE("good places")
    {
        PrimeOfF P{5, SplitF::Split, 1, 5};
        CHECK(whittaker_good(SplitEF::Split, 2, P).value_at_0 == 3);
        CHECK(whittaker_good(SplitEF::Inert, 0, P).value_at_0 == 1);
        CHECK(whittaker_good(SplitEF::Inert, 2, P).value_at_0 == 1);
        auto w = whittaker_good(SplitEF::Inert, 1, P);
        CHECK(w.value_at_0 == 0);
        CHECK(w.derivative_at_0.exponent(5) == 1);
        PrimeOfF Q{11, SplitF::Inert, 0, 121};
        CHECK(whittaker_good(SplitEF::Inert, 3, Q).derivative_at_0.exponent(11) == 4);
        CHECK(whittaker_good(SplitEF::Split, 1, P).derivative_at_0.empty());
    }

    TEST_CASE("local factors at 2: table at s = 0")
    {
        CHECK(whittaker2_Ma(0, -1).value_at_0 == 0);
        CHECK(whittaker2_Ma(1, -1).value_at_0 == 0);
        CHECK(whittaker2_Ma(0, 0).value_at_0 == mpq_class(1, 2));
        CHECK(whittaker2_Ma(1, 0).value_at_0 == 0);
        for (long o = 1; o <= 8; ++o) {
            mpq_class expect(o - 1, 2);
            expect.canonicalize();
            CHECK(whittaker2_Ma(0, o).value_at_0 == expect);
            CHECK(whittaker2_Ma(1, o).value_at_0 == 1);
        }
    }

    TEST_CASE("local factors at 2 agree with point counts")
    {
        for (int a : {0, 1})
            for (long o = 0; o <= 4; ++o)
                for (long u : {1L, 3L, 5L})
                    CHECK_MESSAGE(density(a, o, u, o + 3) == whittaker2_Ma(a, o).value_at_0,
                                  "a=" << a << " o=" << o << " u=" << u);
    }

    TEST_CASE("closed form in 2^-s")
    {
        // a = 0, o = 2: 1/2 - X + (1 - X/2)(X + X^2)
        auto w = whittaker2_Ma(0, 2);
        REQUIRE(w.s_form.size() == 4);
        CHECK(w.s_form[0] == mpq_class(1, 2));
        CHECK(w.s_form[1] == 0);
        CHECK(w.s_form[2] == mpq_class(1, 2));
        CHECK(w.s_form[3] == mpq_class(-1, 2));
        CHECK(whittaker2_Ma_at(0, 2, 1) == mpq_class(1, 2) - mpq_class(1, 2) + mpq_class(3, 4) * mpq_class(3, 4));
        CHECK(whittaker2_Ma_at(1, 0, 1) == mpq_class(1, 4));
        CHECK(whittaker2_Ma_at(1, 3, 2) == mpq_class(5, 8));
        CHECK(whittaker2_Ma_at(0, 0, 5) == mpq_class(1, 2));
        CHECK(whittaker2_Ma_at(0, 3, 0) == whittaker2_Ma(0, 3).value_at_0);
        // derivative of 1/2 (1 - 2^-s) at 0 is log(2)/2
        CHECK(whittaker2_Ma(1, 0).derivative_at_0.exponent(2) == mpq_class(1, 2));
        CHECK_THROWS_AS(whittaker2_Ma(2, 0), domain_error);
    }

    TEST_CASE("shifted functions")
    {
        CHECK(whittaker2_shifted(0, mpq_class(1, 4)) == mpq_class(1, 2));
        CHECK(whittaker2_shifted(1, mpq_class(3, 4)) == mpq_class(1, 2));
        CHECK(whittaker2_shifted(1, mpq_class(-5, 4)) == mpq_class(1, 2));
        CHECK(whittaker2_shifted(0, mpq_class(3, 4)) == 0);
        CHECK(whittaker2_shifted(0, 0) == 0);
        CHECK(whittaker2_shifted(1, 0) == 0);
    }

    TEST_CASE("gz right-hand sides")
    {
        CHECK(exps(gz_rhs(-3, -163)) ==
              std::map<long, mpq_class>{{2, 12}, {3, 2}, {5, 2}, {23, 2}, {29, 2}});
        CHECK(exps(gz_rhs(-4, -163)) ==
              std::map<long, mpq_class>{{2, 6}, {3, 6}, {7, 2}, {11, 2}, {19, 2}, {127, 2}, {163, 1}});
        CHECK(exps(gz_rhs(-7, -43)) == std::map<long, mpq_class>{{3, 12}, {5, 6}, {7, 2}, {19, 2}, {73, 2}});
        CHECK(gz_rhs(-3, -163) == gz_rhs(-163, -3));
        CHECK_THROWS_AS(gz_rhs(-3, -15), hypothesis_error);
    }

    TEST_CASE("yz right-hand sides by two routes")
    {
        std::vector<std::pair<std::pair<long, long>, std::map<long, mpq_class>>> cases{
            {{-7, -15}, {{3, 4}, {5, 2}}},
            {{-7, -23}, {{5, 6}, {7, 2}}},
            {{-7, -31}, {{3, 12}, {13, 2}}},
            {{-15, -23}, {{5, 6}, {7, 8}, {11, 2}}},
            {{-15, -31}, {{3, 12}, {11, 2}, {13, 4}, {29, 2}}},
            {{-23, -31}, {{11, 10}, {17, 6}, {37, 2}, {43, 2}}},
        };
        for (auto const & [pair, expect] : cases) {
            auto [d1, d2] = pair;
            PrimeLog r = yz_rhs(d1, d2);
            CHECK(exps(r) == expect);
            CHECK(r == yz_rhs_via_whittaker(d1, d2));
            CHECK(r.exponent(2) == 0);
            CHECK(16 * r.largest_prime() <= d1 * d2);
        }
        CHECK_THROWS_AS(yz_rhs(-3, -7), hypothesis_error);
        CHECK_THROWS_AS(yz_rhs(-7, -7), hypothesis_error);
    }

    TEST_CASE("the prime above 2 dividing t")
    {
        RealQuadElem t(9, 105); // norm -6
        PrimeOfF p = p_t_of(t, -7, -15);
        CHECK(p.p == 2);
        CHECK(factor_principal_ideal(t)[p] == 1);
        for (long m : admissible_m(105)) {
            if (m % 2 == 0)
                continue;
            PrimeOfF q = p_t_of(RealQuadElem(m, 105), -7, -15);
            long other = 0;
            for (auto const & [P, e] : factor_principal_ideal(RealQuadElem(m, 105)))
                if (P.p == 2 && !(P == q))
                    other += e;
            CHECK(other == 0);
        }
        CHECK_THROWS_AS(p_t_of(t, -3, -7), hypothesis_error);
    }

    TEST_CASE("admissible m")
    {
        auto ms = admissible_m(21);
        CHECK(ms == std::vector<long>{-3, -1, 1, 3});
        CHECK(admissible_m(60).size() == 7);
    }
}
