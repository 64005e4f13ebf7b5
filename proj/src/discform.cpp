#include "cmfactor/discform.hpp"
#include "cmfactor/errors.hpp"
#include "cmfactor/modular.hpp"


namespace cmf {

namespace {

using Mat2 = std::array<mpq_class, 4>; // [[x0, x1], [x2, x3]]

mpq_class det(Mat2 const & x) { return x[0] * x[3] - x[1] * x[2]; }

Mat2 add(Mat2 const & x, Mat2 const & y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]}; }

mpq_class frac(mpq_class x)
{
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    x -= fl;
    return x;
}

DiscModule module_from(std::vector<std::string> labels, std::vector<Mat2> const & reps)
{
    DiscModule m;
    m.labels = std::move(labels);
    size_t n = reps.size();
    m.qval.resize(n);
    m.bil.assign(n, std::vector<mpq_class>(n));
    for (size_t i = 0; i < n; ++i) {
        m.qval[i] = frac(det(reps[i]));
        for (size_t j = 0; j < n; ++j)
            m.bil[i][j] = frac(det(add(reps[i], reps[j])) - det(reps[i]) - det(reps[j]));
    }
    // every coset here is 2-torsion
    m.negation.resize(n);
    for (size_t i = 0; i < n; ++i)
        m.negation[i] = i;
    for (size_t i = 0; i < n; ++i) {
        if (m.bil[i][i] != frac(2 * m.qval[i]))
            throw construction_error("discriminant module: (mu, mu) != 2 Q(mu)");
        for (size_t j = 0; j < n; ++j)
            if (m.bil[i][j] != m.bil[j][i])
                throw construction_error("discriminant module: bilinear form not symmetric");
    }
    // signature (2, 2): e((2 - 2)/8) = 1
    m.signature_factor = 1;
    return m;
}

long floor_div(long a, long c)
{
    long q = a / c;
    if ((a % c != 0) && ((a < 0) != (c < 0)))
        --q;
    return q;
}

} // namespace

DiscModule level2_module()
{
    mpq_class h(1, 2);
    Mat2 mu0{0, 0, 0, 0};
    Mat2 mu1{0, 0, 1, 0};
    Mat2 mu2{0, h, 0, 0};
    Mat2 mu3{0, h, 1, 0};
    return module_from({"mu0", "mu1", "mu2", "mu3"}, {mu0, mu1, mu2, mu3});
}

DiscModule unimodular_module() { return module_from({"0"}, {Mat2{0, 0, 0, 0}}); }

SL2 operator*(SL2 const & x, SL2 const & y)
{
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

SL2Word decompose(SL2 const & gamma)
{
    auto [a, b, c, d] = gamma;
    if (a * d - b * c != 1)
        throw domain_error("matrix is not in SL2(Z)");
    SL2Word w;
    while (c != 0) {
        // gamma = T^q S gamma' with gamma' = S^-1 T^-q gamma
        long q = floor_div(a, c);
        long a1 = a - q * c, b1 = b - q * d;
        w.steps.emplace_back(q, true);
        a = c;
        b = d;
        c = -a1;
        d = -b1;
    }
    // gamma = +-T^k
    if (a == 1) {
        w.steps.emplace_back(b, false);
    } else {
        w.steps.emplace_back(-b, false);
        w.negative = true;
    }
    return w;
}

WeilMatrix identity_matrix(size_t n)
{
    WeilMatrix m(static_cast<long>(n), static_cast<long>(n));
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            m(i, j) = Cyclo8(i == j ? 1 : 0);
    return m;
}

namespace {

WeilMatrix weil_T_power(DiscModule const & mod, long k)
{
    WeilMatrix m = identity_matrix(mod.size());
    for (size_t i = 0; i < mod.size(); ++i)
        m(static_cast<long>(i), static_cast<long>(i)) = Cyclo8::e(-mpq_class(k) * mod.qval[i]);
    return m;
}

// |L'/L|^(-1/2) in Q(zeta_8)
Cyclo8 inverse_sqrt_size(size_t n)
{
    for (size_t r = 1; r * r <= n; ++r) {
        if (r * r == n)
            return Cyclo8(mpq_class(1, static_cast<long>(r)));
        if (2 * r * r == n)
            return Cyclo8::sqrt2() * Cyclo8(mpq_class(1, 2 * static_cast<long>(r)));
    }
    throw construction_error("module size " + std::to_string(n) + " has no square root in Q(zeta_8)");
}

} // namespace

WeilMatrix weil_T(DiscModule const & mod) { return weil_T_power(mod, 1); }

WeilMatrix weil_S(DiscModule const & mod)
{
    long n = static_cast<long>(mod.size());
    Cyclo8 scale = mod.signature_factor * inverse_sqrt_size(mod.size());
    WeilMatrix m(n, n);
    for (long nu = 0; nu < n; ++nu)
        for (long mu = 0; mu < n; ++mu)
            m(nu, mu) = scale * Cyclo8::e(mod.bil[static_cast<size_t>(mu)][static_cast<size_t>(nu)]);
    return m;
}

WeilMatrix weil_matrix(DiscModule const & mod, SL2 const & gamma)
{
    SL2Word w = decompose(gamma);
    WeilMatrix S = weil_S(mod);
    WeilMatrix r = identity_matrix(mod.size());
    for (auto const & [k, with_s] : w.steps) {
        if (k != 0)
            r = r * weil_T_power(mod, k);
        if (with_s)
            r = r * S;
    }
    if (w.negative)
        r = r * S * S;
    return r;
}

WeilMatrix conjugate_transpose(WeilMatrix const & m)
{
    WeilMatrix r(m.cols(), m.rows());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            r(j, i) = m(i, j).conj();
    return r;
}

bool exactly_equal(WeilMatrix const & a, WeilMatrix const & b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j))
                return false;
    return true;
}

long exact_rank(WeilMatrix m)
{
    long rank = 0;
    Cyclo8 zero;
    for (long col = 0; col < m.cols() && rank < m.rows(); ++col) {
        long piv = rank;
        while (piv < m.rows() && m(piv, col) == zero)
            ++piv;
        if (piv == m.rows())
            continue;
        m.row(piv).swap(m.row(rank));
        Cyclo8 inv = m(rank, col).inverse();
        for (long i = 0; i < m.rows(); ++i) {
            if (i == rank || m(i, col) == zero)
                continue;
            Cyclo8 f = m(i, col) * inv;
            for (long j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

void check_T_invariance(VVForm const & f, DiscModule const & mod)
{
    if (f.components.size() != mod.size())
        throw construction_error("form has " + std::to_string(f.components.size()) + " components, module has " +
                                 std::to_string(mod.size()));
    for (size_t mu = 0; mu < mod.size(); ++mu) {
        auto const & s = f.components[mu];
        for (long n = s.lo(); n < s.top(); ++n) {
            if (s.coeff(n) == 0)
                continue;
            mpq_class e(n, s.den());
            e.canonicalize();
            if (mpq_class(e + mod.qval[mu]).get_den() != 1)
                throw construction_error("component " + mod.labels[mu] + " has exponent " + e.get_str() +
                                         ", not in -Q(mu) + Z");
        }
    }
}

VVForm build_weber_f(long order)
{
    if (order < 1)
        throw domain_error("build_weber_f: order must be >= 1");
    DiscModule mod = level2_module();

    // g = Delta(tau)/Delta(2 tau) + 12, known mod q^(order+1)
    long k1 = order + 2;
    RationalSeries ratio = delta_series(k1) * delta_series(k1).substitute_power(2).inverse();
    RationalSeries g = (ratio + mpq_class(12)).truncated(order + 1);

    // g|S = 12 + 2^12 Delta(tau)/Delta(tau/2), as a series in q^(1/2)
    long k2 = 2 * order + 1;
    RationalSeries h = delta_series(k2).substitute_power(2) * delta_series(k2).inverse() * mpq_class(4096);
    RationalSeries g_S = (h.with_denominator(2) + mpq_class(12)).truncated(2 * (order + 1));
    RationalSeries g_ST = g_S.translated();

    struct Term
    {
        RationalSeries series;
        SL2 gamma;
    };
    Term terms[] = {{g.rescaled(2), SL2{1, 0, 0, 1}}, {g_S, sl2_S}, {g_ST, sl2_S * sl2_T}};

    VVForm f;
    f.weight = 0;
    f.components.assign(mod.size(), RationalSeries(2, 0, {}, RationalSeries::exact_order));
    for (auto const & t : terms) {
        WeilMatrix inv = conjugate_transpose(weil_matrix(mod, t.gamma));
        for (size_t mu = 0; mu < mod.size(); ++mu) {
            mpq_class c = inv(static_cast<long>(mu), 0).rational();
            if (c != 0)
                f.components[mu] += t.series * c;
        }
    }
    f.components[2] += RationalSeries::monomial(2, 0, 12);
    f.components[1] -= RationalSeries::monomial(2, 0, 12);
    for (auto & c : f.components)
        c = c.truncated(2 * (order + 1));
    check_T_invariance(f, mod);
    return f;
}

VVForm constant_form(std::array<long, 4> const & a)
{
    VVForm f;
    for (long x : a)
        f.components.push_back(RationalSeries::monomial(2, 0, mpq_class(x)));
    return f;
}

RationalSeries restrict_to_M(VVForm const & f)
{
    if (f.components.size() != 4)
        throw domain_error("restrict_to_M needs a form on the level-2 module");
    return (f.components[0] + f.components[2]).coarsened(1);
}

} // namespace cmf
