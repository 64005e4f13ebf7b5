// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "cmfactor/arithside.hpp"
#include "cmfactor/borcherds.hpp"
#include "cmfactor/classgroup.hpp"
#include "cmfactor/discform.hpp"
#include "cmfactor/verify.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace cmf;

namespace {

using clock_type = std::chrono::steady_clock;

struct Outcome
{
    bool pass = true;
    std::ostringstream notes;

    void require(bool ok, std::string const & what)
    {
        if (!ok) {
            pass = false;
            notes << " [" << what << "]";
        }
    }
};

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int failures = 0;

void criterion(int n, std::string const & title, double limit_s, std::function<void(Outcome &)> const & body)
{
    Outcome o;
    auto t0 = clock_type::now();
    try {
        body(o);
    } catch (std::exception const & e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    double dt = seconds_since(t0);
    if (limit_s > 0)
        o.require(dt < limit_s, "runtime " + std::to_string(dt) + " s exceeds " + std::to_string(limit_s) + " s");
    if (!o.pass)
        ++failures;
    std::cout << "CRITERION " << n << " " << (o.pass ? "PASS" : "FAIL") << " - " << title << " (" << dt << " s)"
              << o.notes.str() << std::endl;
}

void check_gz_instance(Outcome & o, long d1, long d2, char const * product, std::map<long, long> const & fac)
{
    VerificationReport r = gz_verify(d1, d2);
    o.require(r.product_integer == mpz_class(product), "product " + r.product_integer.get_str());
    o.require(r.factorization == fac && r.cofactor == 1, "factorization of |product|");
    o.require(r.residual.to_double() < 1e-20, "residual " + r.residual.to_string(4));
    o.require(r.ok(), "status " + r.status());
}

} // namespace

int main()
{
    criterion(1, "gz (-3, -163)", 10, [](Outcome & o) {
        check_gz_instance(o, -3, -163, "-262537412640768000", {{2, 18}, {3, 3}, {5, 3}, {23, 3}, {29, 3}});
    });

    criterion(2, "gz (-4, -163)", 10, [](Outcome & o) {
        check_gz_instance(o, -4, -163, "-262537412640769728",
                          {{2, 6}, {3, 6}, {7, 2}, {11, 2}, {19, 2}, {127, 2}, {163, 1}});
    });

    criterion(3, "gz suite |d| <= 60, h1 h2 <= 16", 300, [](Outcome & o) {
        std::vector<long> discs;
        for (long d = -3; d >= -60; --d)
            if (is_fundamental_negative(d))
                discs.push_back(d);
        int pairs = 0;
        for (size_t i = 0; i < discs.size(); ++i) {
            for (size_t k = i + 1; k < discs.size(); ++k) {
                long d1 = discs[i], d2 = discs[k];
                if (std::gcd(d1, d2) != 1)
                    continue;
                if (reduced_forms(d1).size() * reduced_forms(d2).size() > 16)
                    continue;
                ++pairs;
                VerificationReport r = gz_verify(d1, d2);
                std::string tag = "(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
                o.require(r.residual.to_double() < 1e-20, tag + " residual");
                o.require(r.oracle_checked && r.oracle_match, tag + " resultant");
                o.require(r.primes_bounded, tag + " prime bound");
                o.require(r.factor_match, tag + " factorization");
            }
        }
        o.notes << " pairs=" << pairs;
        o.require(pairs >= 20, "fewer than 20 pairs");
    });

    criterion(4, "yz suite", 120, [](Outcome & o) {
        std::vector<std::pair<long, long>> pairs{{-7, -15}, {-7, -23}, {-7, -31}, {-15, -23}, {-15, -31}, {-23, -31}};
        for (auto [d1, d2] : pairs) {
            VerificationReport r = yz_verify(d1, d2);
            std::string tag = "(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
            o.require(r.residual.to_double() < 1e-20, tag + " residual");
            mpz_class sq = r.product_integer * r.product_integer;
            mpz_class expect = 1;
            for (auto const & [p, e] : r.rhs.terms()) {
                if (e.get_den() != 1) {
                    o.require(false, tag + " non-integral exponent");
                    continue;
                }
                mpz_class pe;
                mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), e.get_num().get_ui());
                expect *= pe;
            }
            o.require(sq == expect, tag + " squared product " + sq.get_str() + " vs " + expect.get_str());
            o.require(16 * r.rhs.largest_prime() <= d1 * d2, tag + " prime bound");
        }
    });

    criterion(5, "printed coefficients of the weber form", 60, [](Outcome & o) {
        VVForm f = build_weber_f(4);
        struct Entry
        {
            mpq_class n;
            size_t mu;
            long value;
        };
        std::vector<Entry> printed{{1, 0, -98028},     {2, 0, -10749952},       {3, 0, -432133182},
                                   {1, 1, -98296},     {2, 1, -10747904},       {3, 1, -432144384},
                                   {0, 2, 24},         {mpq_class(1, 2), 3, 4096}, {mpq_class(3, 2), 3, 1228800},
                                   {mpq_class(5, 2), 3, 74244096}};
        int wrong = 0;
        for (auto const & e : printed) {
            mpq_class c = f.coeff(e.n, e.mu);
            if (c != e.value) {
                ++wrong;
                o.notes << " c(" << e.n << ",mu" << e.mu << ")=" << c << " printed " << e.value;
            }
        }
        o.require(wrong == 0, std::to_string(wrong) + " of 10 printed values not reproduced");
    });

    criterion(6, "Borcherds product identities", 120, [](Outcome & o) {
        auto run = [&](BorcherdsCase c, long n) {
            BorcherdsCheck r = borcherds_verify(c, n, n);
            std::string tag = std::string(to_string(c)) + "@" + std::to_string(n);
            if (r.difference)
                tag += " differs at q1^" + std::to_string(r.difference->i) + " q2^" + std::to_string(r.difference->j) +
                       " " + r.difference->note;
            o.require(r.ok, tag);
        };
        run(BorcherdsCase::weber, 8);
        run(BorcherdsCase::eta1, 10);
        run(BorcherdsCase::eta2, 10);
        run(BorcherdsCase::f2, 10);
        run(BorcherdsCase::j, 8);
    });

    criterion(7, "Weyl vectors", 60, [](Outcome & o) {
        WeylVector w = weyl_vector(restrict_to_M(build_weber_f(4)));
        o.require(w.r_l == -1 && w.r_lp == 0, "weber");
        for (long a1 = -2; a1 <= 2; ++a1) {
            for (long a2 = -2; a2 <= 2; ++a2) {
                VVForm f = constant_form({a1 + a2, a1, a2, 0});
                WeylVector v = weyl_vector(restrict_to_M(f));
                mpq_class r(2 * a2 + a1, 24);
                r.canonicalize();
                o.require(v.r_l == -r && v.r_lp == r,
                          "constant form a1=" + std::to_string(a1) + " a2=" + std::to_string(a2));
            }
        }
    });

    criterion(8, "property suites", 60, [](Outcome & o) {
        DiscModule mod = level2_module();
        WeilMatrix S = weil_S(mod), T = weil_T(mod);
        WeilMatrix S2 = S * S;
        WeilMatrix ST = S * T;
        o.require(exactly_equal(S2 * S2, identity_matrix(4)), "S^4");
        o.require(exactly_equal(ST * ST * ST, S2), "(ST)^3");

        std::vector<std::pair<long, long>> dpairs{{-3, -7}, {-7, -15}, {-7, -23}, {-3, -163}, {-7, -163}};
        for (auto [d1, d2] : dpairs)
            for (long m : admissible_m(d1 * d2))
                o.require(diff_set(RealQuadElem(m, d1 * d2), d1, d2).size() % 2 == 1,
                          "Diff parity D=" + std::to_string(d1 * d2) + " m=" + std::to_string(m));

        for (auto [d1, d2] : dpairs) {
            for (long n = 1; n <= 500; ++n) {
                long total = 0;
                for (auto const & a : oracle::ideals_of_norm(n, d1 * d2))
                    total += rho(a, d1, d2);
                o.require(total == oracle::biquadratic_ideal_count(n, d1, d2),
                          "rho D=" + std::to_string(d1 * d2) + " n=" + std::to_string(n));
            }
        }

        std::vector<std::pair<long, long>> cpairs{{-3, -7},   {-7, -15},  {-7, -23},  {-3, -163},
                                                  {-7, -163}, {-4, -15},  {-8, -15},  {-11, -19},
                                                  {-15, -23}, {-23, -31}, {-24, -35}, {-39, -4}};
        std::mt19937 gen(31337);
        for (int k = 0; k < 200; ++k) {
            auto [d1, d2] = cpairs[gen() % cpairs.size()];
            auto ms = admissible_m(d1 * d2);
            long m = ms[gen() % ms.size()];
            o.require(chi_log_identity_check(RealQuadElem(m, d1 * d2), d1, d2),
                      "chi-log D=" + std::to_string(d1 * d2) + " m=" + std::to_string(m));
        }

        o.require(whittaker2_Ma(0, 0).value_at_0 == mpq_class(1, 2), "W0 o=0");
        o.require(whittaker2_Ma(1, 0).value_at_0 == 0, "W1 o=0");
        for (long ord = 1; ord <= 6; ++ord) {
            mpq_class half(ord - 1, 2);
            half.canonicalize();
            o.require(whittaker2_Ma(0, ord).value_at_0 == half, "W0 o=" + std::to_string(ord));
            o.require(whittaker2_Ma(1, ord).value_at_0 == 1, "W1 o=" + std::to_string(ord));
        }
        for (int a : {0, 1})
            for (long ord = 0; ord <= 3; ++ord)
                o.require(oracle::density(a, ord, 1, ord + 3) == whittaker2_Ma(a, ord).value_at_0,
                          "point count a=" + std::to_string(a) + " o=" + std::to_string(ord));
        o.require(whittaker2_shifted(0, 0) == 0 && whittaker2_shifted(1, 0) == 0, "shifted at t=0");
    });

    std::cout << (failures ? "ACCEPTANCE: " + std::to_string(failures) + " criterion(s) failed" : "ACCEPTANCE: all passed")
              << std::endl;
    return failures ? 1 : 0;
}
