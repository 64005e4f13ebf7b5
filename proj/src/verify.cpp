#include "cmfactor/verify.hpp"
#include "cmfactor/arithside.hpp"
#include "cmfactor/borcherds.hpp"
#include "cmfactor/classgroup.hpp"
#include "cmfactor/discform.hpp"
#include "cmfactor/errors.hpp"
#include "cmfactor/modular.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>

namespace cmf {

namespace {

constexpr int max_retries = 3;
constexpr double recognition_threshold = 0x1p-32;

void parallel_for(size_t n, unsigned threads, std::function<void(size_t)> const & body)
{
    size_t workers = std::min<size_t>(threads, n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (size_t i = next++; i < n; i = next++)
                    body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto & t : pool)
        t.join();
    for (auto & e : errors)
        if (e)
            std::rethrow_exception(e);
}

// Pairwise summation in index order.
BigFloat tree_sum(std::vector<BigFloat> const & v, size_t lo, size_t hi, long prec)
{
    if (hi == lo)
        return BigFloat(0L, prec);
    if (hi - lo == 1)
        return v[lo];
    size_t mid = lo + (hi - lo) / 2;
    return tree_sum(v, lo, mid, prec) + tree_sum(v, mid, hi, prec);
}

using PsiFn = std::function<BigComplex(BigComplex const &, long)>;

struct PairSums
{
    BigFloat log_sum;
    BigComplex product;
};

// sum of log|psi(tau2) - psi(tau1)| and the product of the differences
PairSums evaluate_pairs(std::vector<HeegnerPoint> const & p1, std::vector<HeegnerPoint> const & p2, PsiFn const & psi,
                        long prec, unsigned threads)
{
    size_t n1 = p1.size(), n2 = p2.size();
    std::vector<BigComplex> v(n1 + n2, BigComplex(prec));
    parallel_for(n1 + n2, threads, [&](size_t i) {
        HeegnerPoint const & h = i < n1 ? p1[i] : p2[i - n1];
        v[i] = psi(h.tau(prec), prec);
    });
    std::vector<BigComplex> diffs(n1 * n2, BigComplex(prec));
    std::vector<BigFloat> logs(n1 * n2, BigFloat(prec));
    parallel_for(n1 * n2, threads, [&](size_t idx) {
        size_t i = idx / n2, k = idx % n2;
        diffs[idx] = v[n1 + k] - v[i];
        if (diffs[idx].real().is_zero() && diffs[idx].imag().is_zero())
            throw construction_error("coincident CM values");
        logs[idx] = log_abs(diffs[idx]);
    });
    PairSums out{tree_sum(logs, 0, logs.size(), prec), BigComplex(BigFloat(1L, prec), BigFloat(0L, prec))};
    for (auto const & d : diffs)
        out.product *= d;
    return out;
}

std::vector<long> primes_up_to(long n)
{
    std::vector<char> sieve(static_cast<size_t>(std::max(n, 1L) + 1), 1);
    std::vector<long> out;
    for (long p = 2; p <= n; ++p) {
        if (!sieve[static_cast<size_t>(p)])
            continue;
        out.push_back(p);
        for (long q = p * p; q <= n; q += p)
            sieve[static_cast<size_t>(q)] = 0;
    }
    return out;
}

void factor_by_trial(mpz_class n, long bound, std::map<long, long> & fac, mpz_class & cofactor)
{
    n = abs(n);
    fac.clear();
    if (n == 0) {
        cofactor = 0;
        return;
    }
    for (long p : primes_up_to(bound)) {
        long e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
            ++e;
        }
        if (e)
            fac[p] = e;
    }
    cofactor = n;
}

struct Setup
{
    std::string kind;
    std::vector<HeegnerPoint> p1, p2;
    PsiFn psi;
    mpq_class lhs_scale;
    PrimeLog rhs;
    long prime_divisor; ///< rhs primes must satisfy prime_divisor * p <= D
};

VerificationReport run(long d1, long d2, Setup const & s, VerifyOptions const & opt)
{
    VerificationReport r;
    r.kind = s.kind;
    r.d1 = d1;
    r.d2 = d2;
    r.rhs = s.rhs;
    unsigned threads = resolve_threads(opt.threads);

    long prec = opt.prec > 0 ? std::max(opt.prec, min_precision) : default_precision(d1, d2);
    PairSums sums{BigFloat(prec), BigComplex(prec)};
    IntegerRecognition rec;
    for (int attempt = 0;; ++attempt) {
        sums = evaluate_pairs(s.p1, s.p2, s.psi, prec, threads);
        rec = recognize_integer(sums.product);
        if (rec.residual < recognition_threshold)
            break;
        if (attempt == max_retries)
            throw precision_error("product of CM value differences not recognized as an integer at " +
                                      std::to_string(prec) + " bits (residual " + std::to_string(rec.residual) +
                                      "); rerun with a larger --prec",
                                  rec.residual);
        prec *= 2;
    }
    r.precision = prec;
    r.product_integer = rec.value;
    r.recognition_residual = rec.residual;

    r.lhs_log = BigFloat(s.lhs_scale, prec) * sums.log_sum;
    r.rhs_log = s.rhs.value(prec);
    r.residual = abs(r.lhs_log - r.rhs_log);
    if (!(r.residual < pow2(-prec / 4, prec)))
        r.failures.push_back("residual " + r.residual.to_string(6) + " is not below 2^-" + std::to_string(prec / 4));

    long D = d1 * d2;
    factor_by_trial(r.product_integer, D, r.factorization, r.cofactor);
    // exponent of p in |product| times the log scale must match the rhs
    bool match = r.cofactor == 1;
    std::map<long, mpq_class> scaled;
    for (auto const & [p, e] : r.factorization)
        scaled[p] = s.lhs_scale * e;
    match = match && scaled == s.rhs.terms();
    r.factor_match = match;
    if (!match)
        r.failures.push_back("factorization of the product does not match the arithmetic side");

    r.primes_bounded = s.prime_divisor * s.rhs.largest_prime() <= D;
    if (!r.primes_bounded)
        r.failures.push_back("prime " + std::to_string(s.rhs.largest_prime()) + " exceeds D/" +
                             std::to_string(s.prime_divisor));
    return r;
}

} // namespace

long default_precision(long d1, long d2)
{
    double dmax = static_cast<double>(std::max(std::labs(d1), std::labs(d2)));
    double pairs = static_cast<double>(reduced_forms(d1).size() * reduced_forms(d2).size());
    return 64 + static_cast<long>(std::ceil(1.2 * pairs * M_PI * std::sqrt(dmax) / M_LN2));
}

unsigned resolve_threads(unsigned requested)
{
    if (requested > 0)
        return requested;
    if (char const * env = std::getenv("CMFACTOR_THREADS")) {
        char * end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

VerificationReport gz_verify(long d1, long d2, VerifyOptions const & opt)
{
    check_pair(d1, d2);
    Setup s;
    s.kind = "gz";
    for (auto const & f : reduced_forms(d1))
        s.p1.push_back(heegner_point(f));
    for (auto const & f : reduced_forms(d2))
        s.p2.push_back(heegner_point(f));
    s.psi = [](BigComplex const & tau, long prec) { return eval_j(tau, prec); };
    s.lhs_scale = mpq_class(8, units_w(d1) * units_w(d2));
    s.lhs_scale.canonicalize();
    s.rhs = gz_rhs(d1, d2);
    s.prime_divisor = 4;
    VerificationReport r = run(d1, d2, s, opt);

    if (opt.resultant_oracle) {
        // Res(H_d2, H_d1) = prod (j(tau2) - j(tau1)), from a separate code path
        mpz_class res = resultant(class_polynomial(d2), class_polynomial(d1));
        r.oracle_checked = true;
        r.oracle_match = res == r.product_integer;
        if (!r.oracle_match)
            r.failures.push_back("resultant of class polynomials " + res.get_str() + " differs from the product");
    }
    return r;
}

VerificationReport yz_verify(long d1, long d2, VerifyOptions const & opt)
{
    check_yz_pair(d1, d2);
    Setup s;
    s.kind = "yz";
    for (auto const & f : reduced_forms(d1))
        s.p1.push_back(heegner_point(odd_norm_representative(f).form));
    for (auto const & f : reduced_forms(d2))
        s.p2.push_back(heegner_point(odd_norm_representative(f).form));
    s.psi = [](BigComplex const & tau, long prec) { return eval_omega2(tau, prec); };
    s.lhs_scale = 2;
    s.rhs = yz_rhs(d1, d2);
    s.prime_divisor = 16;
    return run(d1, d2, s, opt);
}

BorcherdsCase parse_borcherds_case(std::string const & name)
{
    for (auto c : {BorcherdsCase::j, BorcherdsCase::weber, BorcherdsCase::eta1, BorcherdsCase::eta2, BorcherdsCase::f2})
        if (name == to_string(c))
            return c;
    throw domain_error("unknown case '" + name + "' (expected j, weber, eta1, eta2 or f2)");
}

char const * to_string(BorcherdsCase c)
{
    switch (c) {
    case BorcherdsCase::j:
        return "j";
    case BorcherdsCase::weber:
        return "weber";
    case BorcherdsCase::eta1:
        return "eta1";
    case BorcherdsCase::eta2:
        return "eta2";
    case BorcherdsCase::f2:
        return "f2";
    }
    return "?";
}

BorcherdsCheck borcherds_verify(BorcherdsCase c, long N1, long N2)
{
    if (N1 < 2 || N2 < 2)
        throw domain_error("borcherds_verify needs orders >= 2");
    long need = (N1 + 1) * (N2 + 1);
    BorcherdsCheck out;
    auto level2 = [&](VVForm const & f, int sign, BiCase which) {
        WeylVector rho = weyl_vector(restrict_to_M(f));
        out.product = product_expansion_level2(f, rho, sign, N1, N2);
        out.expected = bi_expand_difference(which, N1, N2);
    };
    switch (c) {
    case BorcherdsCase::j:
        out.product = product_expansion_j(j_series(need) + mpq_class(-744), N1, N2);
        out.expected = bi_expand_difference(BiCase::j, N1, N2);
        break;
    case BorcherdsCase::weber:
        level2(build_weber_f(need), -1, BiCase::omega2);
        break;
    case BorcherdsCase::eta1:
        level2(constant_form({1, 1, 0, 0}), 1, BiCase::eta_product);
        break;
    case BorcherdsCase::eta2:
        level2(constant_form({1, 0, 1, 0}), 1, BiCase::eta2_product);
        break;
    case BorcherdsCase::f2:
        level2(constant_form({0, -1, 1, 0}), 1, BiCase::f2_product);
        break;
    }
    out.product = out.product.truncated(N1, N2);
    out.difference = first_difference(out.product, out.expected);
    out.ok = !out.difference.has_value();
    return out;
}

} // namespace cmf
