#include "cmfactor/biqseries.hpp"
#include "cmfactor/borcherds.hpp"
#include "cmfactor/discform.hpp"
#include "cmfactor/errors.hpp"
#include "cmfactor/modular.hpp"
#include "cmfactor/verify.hpp"

#include <doctest.h>

using namespace cmf;

TEST_SUITE("borcherds")
{
    TEST_CASE("two-variable series basics")
    {
        BiQSeries a(5, 5);
        a.add_term(1, 0, 2);
        a.add_term(0, 1, -3);
        BiQSeries b = BiQSeries::monomial(1, 1, 1);
        BiQSeries c = a * b;
        CHECK(c.coeff(2, 1) == 2);
        CHECK(c.coeff(1, 2) == -3);
        CHECK(c.bound1() == 6);
        CHECK_THROWS_AS(c.coeff(7, 0), domain_error);
        BiQSeries s = a.swapped();
        CHECK(s.coeff(0, 1) == 2);

        BiQSeries p = BiQSeries::monomial(0, 0, 1);
        p.set_prefactor(mpq_class(-3, 2), mpq_class(1, 2), 5);
        BiQSeries n = p.normalized();
        CHECK(n.prefactor_e1() == mpq_class(1, 2));
        CHECK(n.prefactor_e2() == mpq_class(1, 2));
        CHECK(n.sqrt2_power() == 1);
        CHECK(n.coeff(-2, 0) == 4);
        CHECK_FALSE(first_difference(p, n).has_value());
    }

    TEST_CASE("first difference is reported")
    {
        BiQSeries a(3, 3), b(3, 3);
        a.add_term(1, 2, 5);
        b.add_term(1, 2, 6);
        auto d = first_difference(a, b);
        REQUIRE(d.has_value());
        CHECK(d->i == 1);
        CHECK(d->j == 2);
        CHECK(d->left == 5);
        CHECK(d->right == 6);
    }

    TEST_CASE("binomial factors")
    {
        // (1 - x)^-1 = 1 + x + x^2 + ...
        BiQSeries g = binomial_factor(1, 0, -1, -1, 4, 4);
        for (long k = 0; k <= 4; ++k)
            CHECK(g.coeff(k, 0) == 1);
        // exact polynomial (1 + q1 q2^-1)^3
        BiQSeries p = binomial_factor(1, -1, 1, 3, 4, 4);
        CHECK(p.coeff(2, -2) == 3);
        CHECK(p.coeff(3, -3) == 1);
        CHECK_THROWS_AS(binomial_factor(1, -1, 1, -2, 4, 4), construction_error);
        CHECK_THROWS_AS(binomial_factor(0, -1, 1, 1, 4, 4), domain_error);
    }

    TEST_CASE("Weyl vectors")
    {
        WeylVector w = weyl_vector(restrict_to_M(build_weber_f(4)));
        CHECK(w.r_l == -1);
        CHECK(w.r_lp == 0);
        // a1 (phi0 + phi1) + a2 (phi0 + phi2) -> (2 a2 + a1)/24 (-l + l')
        for (auto [a1, a2] : std::vector<std::pair<long, long>>{{1, 0}, {0, 1}, {-1, 1}, {3, 2}}) {
            VVForm f = constant_form({a1 + a2, a1, a2, 0});
            WeylVector v = weyl_vector(restrict_to_M(f));
            mpq_class r(2 * a2 + a1, 24);
            r.canonicalize();
            CHECK(v.r_l == -r);
            CHECK(v.r_lp == r);
        }
        // j - 744 on the unimodular lattice
        WeylVector wj = weyl_vector(j_series(4) + mpq_class(-744));
        CHECK(wj.r_l == 0);
        CHECK(wj.r_lp == -1);
    }

    TEST_CASE("weber product leading terms")
    {
        VVForm f = build_weber_f(16);
        BiQSeries p = product_expansion_level2(f, weyl_vector(restrict_to_M(f)), -1, 3, 3).normalized();
        CHECK(p.prefactor_e1() == 0);
        CHECK(p.prefactor_e2() == 0);
        CHECK(p.sqrt2_power() == 0);
        CHECK(p.coeff(1, 0) == 4096);
        CHECK(p.coeff(0, 1) == -4096);
        CHECK(p.coeff(0, 0) == 0);
        CHECK(p.coeff(2, 0) == 4096 * 24);
        CHECK_THROWS_AS(product_expansion_level2(build_weber_f(4), weyl_vector(restrict_to_M(f)), -1, 3, 3),
                        construction_error);
    }

    TEST_CASE("j product is antisymmetric")
    {
        BiQSeries p = product_expansion_j(j_series(40) + mpq_class(-744), 5, 5).truncated(5, 5).normalized();
        CHECK(p.coeff(-1, 0) == 1);
        CHECK(p.coeff(0, -1) == -1);
        CHECK(p.coeff(0, 0) == 0);
        BiQSeries neg = p;
        neg *= mpq_class(-1);
        CHECK_FALSE(first_difference(p.swapped(), neg).has_value());
    }

    TEST_CASE("product identities")
    {
        for (auto c : {BorcherdsCase::j, BorcherdsCase::weber})
            CHECK_MESSAGE(borcherds_verify(c, 6, 6).ok, to_string(c));
        for (auto c : {BorcherdsCase::eta1, BorcherdsCase::eta2, BorcherdsCase::f2})
            CHECK_MESSAGE(borcherds_verify(c, 8, 8).ok, to_string(c));
        CHECK(borcherds_verify(BorcherdsCase::weber, 4, 7).ok);
        CHECK_THROWS_AS(borcherds_verify(BorcherdsCase::j, 1, 4), domain_error);
        CHECK_THROWS_AS(parse_borcherds_case("nope"), domain_error);
    }

    TEST_CASE("a wrong constant is detected")
    {
        VVForm f = constant_form({1, 1, 0, 0});
        BiQSeries p = product_expansion_level2(f, weyl_vector(restrict_to_M(f)), -1, 4, 4).truncated(4, 4);
        auto d = first_difference(p, bi_expand_difference(BiCase::eta_product, 4, 4));
        REQUIRE(d.has_value());
        CHECK(d->left == -d->right);
    }
}
