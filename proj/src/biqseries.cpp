#include "cmfactor/biqseries.hpp"
#include "cmfactor/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cmf {

namespace {

long sat_add(long a, long b)
{
    if (a >= BiQSeries::unbounded || b >= BiQSeries::unbounded)
        return BiQSeries::unbounded;
    return a + b;
}

mpz_class floor_of(mpq_class const & x)
{
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return f;
}

} // namespace

BiQSeries BiQSeries::monomial(long i, long j, mpq_class const & c)
{
    BiQSeries s;
    s.add_term(i, j, c);
    return s;
}

BiQSeries BiQSeries::from_univariate(RationalSeries const & s, int var)
{
    if (s.den() != 1)
        throw domain_error("from_univariate needs integral exponents");
    long bound = s.is_exact() ? unbounded : s.order() - 1;
    BiQSeries r = var == 1 ? BiQSeries(bound, unbounded) : BiQSeries(unbounded, bound);
    for (long n = s.lo(); n < s.top(); ++n) {
        mpq_class c = s.coeff(n);
        if (var == 1)
            r.add_term(n, 0, c);
        else
            r.add_term(0, n, c);
    }
    return r;
}

mpq_class BiQSeries::coeff(long i, long j) const
{
    if (!known(i, j))
        throw domain_error("coefficient of q1^" + std::to_string(i) + " q2^" + std::to_string(j) +
                           " is beyond the truncation");
    auto it = c_.find({i, j});
    return it == c_.end() ? mpq_class(0) : it->second;
}

void BiQSeries::add_term(long i, long j, mpq_class const & c)
{
    if (c == 0 || !known(i, j))
        return;
    auto [it, inserted] = c_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            c_.erase(it);
    }
}

long BiQSeries::valuation1() const
{
    if (c_.empty())
        return sat_add(bound1_, 1);
    long v = unbounded;
    for (auto const & [k, c] : c_)
        v = std::min(v, k.first);
    return v;
}

long BiQSeries::valuation2() const
{
    if (c_.empty())
        return sat_add(bound2_, 1);
    long v = unbounded;
    for (auto const & [k, c] : c_)
        v = std::min(v, k.second);
    return v;
}

void BiQSeries::set_prefactor(mpq_class e1, mpq_class e2, long sqrt2_power)
{
    e1_ = std::move(e1);
    e2_ = std::move(e2);
    sqrt2_ = sqrt2_power;
}

BiQSeries BiQSeries::normalized() const
{
    long f1 = floor_of(e1_).get_si();
    long f2 = floor_of(e2_).get_si();
    long r = ((sqrt2_ % 2) + 2) % 2;
    long s = (sqrt2_ - r) / 2;
    mpq_class scale = 1;
    if (s >= 0)
        mpz_mul_2exp(scale.get_num_mpz_t(), scale.get_num_mpz_t(), static_cast<unsigned long>(s));
    else
        mpz_mul_2exp(scale.get_den_mpz_t(), scale.get_den_mpz_t(), static_cast<unsigned long>(-s));
    BiQSeries out(sat_add(bound1_, f1), sat_add(bound2_, f2));
    for (auto const & [k, c] : c_)
        out.add_term(k.first + f1, k.second + f2, c * scale);
    out.set_prefactor(e1_ - f1, e2_ - f2, r);
    return out;
}

BiQSeries BiQSeries::swapped() const
{
    BiQSeries out(bound2_, bound1_);
    for (auto const & [k, c] : c_)
        out.add_term(k.second, k.first, c);
    out.set_prefactor(e2_, e1_, sqrt2_);
    return out;
}

BiQSeries BiQSeries::truncated(long bound1, long bound2) const
{
    BiQSeries out(std::min(bound1, bound1_), std::min(bound2, bound2_));
    for (auto const & [k, c] : c_)
        out.add_term(k.first, k.second, c);
    out.set_prefactor(e1_, e2_, sqrt2_);
    return out;
}

void BiQSeries::require_plain(BiQSeries const & o) const
{
    if (e1_ != o.e1_ || e2_ != o.e2_ || sqrt2_ != o.sqrt2_)
        throw domain_error("adding two-variable series with different prefactors");
}

BiQSeries & BiQSeries::operator+=(BiQSeries const & o)
{
    require_plain(o);
    bound1_ = std::min(bound1_, o.bound1_);
    bound2_ = std::min(bound2_, o.bound2_);
    std::erase_if(c_, [this](auto const & kv) { return !known(kv.first.first, kv.first.second); });
    for (auto const & [k, c] : o.c_)
        add_term(k.first, k.second, c);
    return *this;
}

BiQSeries & BiQSeries::operator-=(BiQSeries const & o)
{
    require_plain(o);
    bound1_ = std::min(bound1_, o.bound1_);
    bound2_ = std::min(bound2_, o.bound2_);
    std::erase_if(c_, [this](auto const & kv) { return !known(kv.first.first, kv.first.second); });
    for (auto const & [k, c] : o.c_)
        add_term(k.first, k.second, -c);
    return *this;
}

BiQSeries & BiQSeries::operator*=(mpq_class const & s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto & [k, c] : c_)
        c *= s;
    return *this;
}

BiQSeries operator*(BiQSeries const & a, BiQSeries const & b)
{
    long b1 = std::min(sat_add(a.bound1_, b.valuation1()), sat_add(b.bound1_, a.valuation1()));
    long b2 = std::min(sat_add(a.bound2_, b.valuation2()), sat_add(b.bound2_, a.valuation2()));
    BiQSeries out(b1, b2);
    for (auto const & [ka, ca] : a.c_) {
        for (auto const & [kb, cb] : b.c_) {
            long i = ka.first + kb.first;
            long j = ka.second + kb.second;
            if (i <= b1 && j <= b2)
                out.add_term(i, j, ca * cb);
        }
    }
    out.set_prefactor(a.e1_ + b.e1_, a.e2_ + b.e2_, a.sqrt2_ + b.sqrt2_);
    return out;
}

std::string BiQSeries::to_string(long max_terms) const
{
    std::ostringstream os;
    if (sqrt2_ != 0)
        os << "2^(" << sqrt2_ << "/2) ";
    if (e1_ != 0 || e2_ != 0)
        os << "q1^(" << e1_ << ") q2^(" << e2_ << ") ";
    os << "[";
    long n = 0;
    for (auto const & [k, c] : c_) {
        if (n == max_terms) {
            os << " ...";
            break;
        }
        if (n++)
            os << " + ";
        os << c << "*q1^" << k.first << "*q2^" << k.second;
    }
    os << "]";
    return os.str();
}

std::optional<BiDifference> first_difference(BiQSeries const & a_in, BiQSeries const & b_in)
{
    BiQSeries a = a_in.normalized();
    BiQSeries b = b_in.normalized();
    if (a.prefactor_e1() != b.prefactor_e1() || a.prefactor_e2() != b.prefactor_e2() ||
        a.sqrt2_power() != b.sqrt2_power()) {
        BiDifference d;
        d.note = "prefactors differ: (" + a.prefactor_e1().get_str() + ", " + a.prefactor_e2().get_str() + ", " +
                 std::to_string(a.sqrt2_power()) + ") vs (" + b.prefactor_e1().get_str() + ", " +
                 b.prefactor_e2().get_str() + ", " + std::to_string(b.sqrt2_power()) + ")";
        return d;
    }
    long b1 = std::min(a.bound1(), b.bound1());
    long b2 = std::min(a.bound2(), b.bound2());
    std::set<BiQSeries::Key> keys;
    for (auto const & [k, c] : a.terms())
        keys.insert(k);
    for (auto const & [k, c] : b.terms())
        keys.insert(k);
    for (auto const & k : keys) {
        if (k.first > b1 || k.second > b2)
            continue;
        mpq_class x = a.coeff(k.first, k.second);
        mpq_class y = b.coeff(k.first, k.second);
        if (x != y)
            return BiDifference{k.first, k.second, x, y, ""};
    }
    return std::nullopt;
}

} // namespace cmf
