#include "cmfactor/classgroup.hpp"
#include "cmfactor/errors.hpp"
#include "cmfactor/quadarith.hpp"

#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <tuple>

namespace cmf {

std::string to_string(QuadForm const & f)
{
    return "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
}

QuadForm apply_T(QuadForm const & f) { return {f.a, f.b + 2 * f.a, f.a + f.b + f.c}; }
QuadForm apply_T_inv(QuadForm const & f) { return {f.a, f.b - 2 * f.a, f.a - f.b + f.c}; }
QuadForm apply_S(QuadForm const & f) { return {f.c, -f.b, f.a}; }

std::vector<QuadForm> reduced_forms(long d)
{
    Disc disc(d);
    std::vector<QuadForm> out;
    for (long a = 1; 3 * a * a <= -d; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            long num = b * b - d;
            if (num % (4 * a) != 0)
                continue;
            long c = num / (4 * a);
            if (c < a)
                continue;
            if (std::gcd(std::gcd(a, std::labs(b)), c) != 1)
                continue;
            if (a == c && b < 0)
                continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

namespace {

// Form attached to g(tau) for g = [[p, q], [r, s]] in SL2(Z): the point
// tau' = g tau is the point of the returned form.
QuadForm transform(QuadForm const & f, long p, long q, long r, long s)
{
    // tau is a root of a x^2 - b x + c; tau = g^-1 tau' with g^-1 = [[s, -q], [-r, p]]
    // so a (s x - q)^2 - b (s x - q)(-r x + p) + c (-r x + p)^2 vanishes at tau'
    long A = f.a * s * s + f.b * s * r + f.c * r * r;
    long B = -(2 * f.a * s * q + f.b * (s * p + q * r) + 2 * f.c * r * p);
    long C = f.a * q * q + f.b * q * p + f.c * p * p;
    // form convention stores the negated middle coefficient
    return {A, -B, C};
}

// (g, s, t) with s x + t y = g = +-1 for coprime x, y
std::tuple<long, long, long> ext_gcd(long x, long y)
{
    long r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_tuple(s1, s0 - q * s1);
        std::tie(t0, t1) = std::make_tuple(t1, t0 - q * t1);
    }
    return {r0, s0, t0};
}

} // namespace

OddRepresentative odd_norm_representative(QuadForm const & f)
{
    long d = f.discriminant();
    if (((d % 8) + 8) % 8 != 1)
        throw domain_error("odd_norm_representative needs d = 1 mod 8, got " + std::to_string(d));
    if (f.a % 2 != 0)
        return {f, ""};

    std::deque<std::pair<QuadForm, std::string>> queue{{f, ""}};
    std::set<std::tuple<long, long, long>> seen{{f.a, f.b, f.c}};
    while (!queue.empty()) {
        auto [g, word] = queue.front();
        queue.pop_front();
        if (word.size() >= 8)
            continue;
        std::pair<QuadForm, char> next[] = {{apply_S(g), 'S'}, {apply_T(g), 'T'}, {apply_T_inv(g), 't'}};
        for (auto const & [h, letter] : next) {
            if (!seen.insert({h.a, h.b, h.c}).second)
                continue;
            std::string w = word + letter;
            if (h.a % 2 != 0 && h.a > 0)
                return {h, w};
            queue.emplace_back(h, w);
        }
    }

    // odd values a x^2 + b xy + c y^2 with gcd(x, y) = 1, moved to the first slot
    long bound = 4 * std::labs(d);
    for (long x = -bound; x <= bound; ++x) {
        for (long y = 0; y <= bound; ++y) {
            if (std::gcd(std::labs(x), y) != 1)
                continue;
            long v = f.a * x * x + f.b * x * y + f.c * y * y;
            if (v <= 0 || v > bound || v % 2 == 0)
                continue;
            // complete (x, y) to [[x, u], [y, w]] in SL2(Z)
            auto [g, s, t] = ext_gcd(x, y);
            long w = s * g, u = -t * g;
            QuadForm h = transform(f, w, -u, -y, x);
            if (h.a % 2 != 0 && h.a > 0)
                return {h, "M[" + std::to_string(x) + "," + std::to_string(u) + ";" + std::to_string(y) + "," +
                               std::to_string(w) + "]"};
        }
    }
    throw construction_error("no odd-norm representative found for " + to_string(f));
}

BigComplex HeegnerPoint::tau(long prec) const
{
    BigFloat two_a(2 * form.a, prec);
    BigFloat re = BigFloat(form.b, prec) / two_a;
    BigFloat im = sqrt(BigFloat(-d, prec)) / two_a;
    return {re, im};
}

HeegnerPoint heegner_point(QuadForm const & f)
{
    long d = f.discriminant();
    if (d >= 0 || f.a <= 0)
        throw domain_error("form " + to_string(f) + " is not positive definite");
    return {f, d};
}

long units_w(long d)
{
    if (d == -3)
        return 6;
    if (d == -4)
        return 4;
    return 2;
}

} // namespace cmf
