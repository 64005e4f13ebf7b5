#pragma once

#include "cmfactor/bigfloat.hpp"

#include <string>
#include <vector>

namespace cmf {

/// Binary quadratic form a x^2 + b xy + c y^2, attached to the point
/// tau = (b + sqrt(d))/(2a).
struct QuadForm
{
    long a = 1;
    long b = 1;
    long c = 1;

    long discriminant() const { return b * b - 4 * a * c; }
    friend bool operator==(QuadForm const &, QuadForm const &) = default;
};

std::string to_string(QuadForm const & f);

/// tau -> tau + 1 on the attached point.
QuadForm apply_T(QuadForm const & f);
/// tau -> tau - 1
QuadForm apply_T_inv(QuadForm const & f);
/// tau -> -1/tau
QuadForm apply_S(QuadForm const & f);

/// Reduced forms of a negative fundamental discriminant, one per class,
/// ordered by (a, b).
std::vector<QuadForm> reduced_forms(long d);

/// An equivalent form with odd leading coefficient, with the generator word
/// (applied left to right, letters S, T, t = T^-1) that produced it.
struct OddRepresentative
{
    QuadForm form;
    std::string word;
};

/// Requires d = 1 mod 8. Breadth-first search over words of length <= 8,
/// falling back to a scan of properly represented odd values.
OddRepresentative odd_norm_representative(QuadForm const & f);

struct HeegnerPoint
{
    QuadForm form;
    long d;

    /// (b + i sqrt|d|)/(2a)
    BigComplex tau(long prec) const;
};

HeegnerPoint heegner_point(QuadForm const & f);

/// Number of roots of unity in Q(sqrt d).
long units_w(long d);

} // namespace cmf
