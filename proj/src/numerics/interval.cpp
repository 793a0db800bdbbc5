#include "cubicmahler/numerics/interval.hpp"

#include <ostream>
#include <stdexcept>

namespace cubicmahler::numerics {
namespace {

long combined(long a, long b) { return std::max(a, b); }

Interval make(Dyadic lo, Dyadic hi, long prec)
{
    if (prec > 0) {
        lo = lo.rounded(prec, Rounding::Down);
        hi = hi.rounded(prec, Rounding::Up);
    }
    return Interval(std::move(lo), std::move(hi), prec);
}

}  // namespace

Interval::Interval(Dyadic lo, Dyadic hi, long prec) : lo_(std::move(lo)), hi_(std::move(hi)), prec_(prec)
{
    if (hi_ < lo_) throw std::invalid_argument("Interval: lo > hi");
}

Interval Interval::from_rational(const BigRat& q, long prec)
{
    Dyadic lo = Dyadic::from_rational(q, prec, Rounding::Down);
    Dyadic hi = Dyadic::from_rational(q, prec, Rounding::Up);
    const long p = lo == hi ? 0 : prec;
    return Interval(std::move(lo), std::move(hi), p);
}

Dyadic Interval::magnitude() const { return max(abs(lo_), abs(hi_)); }

bool Interval::contains(const BigRat& q) const { return lo_.to_rational() <= q && q <= hi_.to_rational(); }

bool Interval::meets_relative_width(long bits) const
{
    const Dyadic scale = max(Dyadic(1), magnitude());
    return width() <= scale.ldexp(1 - bits);
}

Interval operator+(const Interval& a, const Interval& b)
{
    return make(a.lo_ + b.lo_, a.hi_ + b.hi_, combined(a.prec_, b.prec_));
}

Interval operator-(const Interval& a, const Interval& b)
{
    return make(a.lo_ - b.hi_, a.hi_ - b.lo_, combined(a.prec_, b.prec_));
}

Interval operator*(const Interval& a, const Interval& b)
{
    const long p = combined(a.prec_, b.prec_);
    if (a.is_point() && b.is_point()) {
        const Dyadic v = a.lo_ * b.lo_;
        return make(v, v, p);
    }
    Dyadic c1 = a.lo_ * b.lo_, c2 = a.lo_ * b.hi_, c3 = a.hi_ * b.lo_, c4 = a.hi_ * b.hi_;
    return make(min(min(c1, c2), min(c3, c4)), max(max(c1, c2), max(c3, c4)), p);
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (b.contains_zero()) throw std::domain_error("Interval: division by an interval containing zero");
    long p = combined(a.prec_, b.prec_);
    if (p == 0) p = Interval::kDefaultPrecision;
    auto q = [&](const Dyadic& x, const Dyadic& y, Rounding r) { return Dyadic::quotient(x, y, p, r); };
    Dyadic c[8] = {q(a.lo_, b.lo_, Rounding::Down), q(a.lo_, b.hi_, Rounding::Down),
                   q(a.hi_, b.lo_, Rounding::Down), q(a.hi_, b.hi_, Rounding::Down),
                   q(a.lo_, b.lo_, Rounding::Up),   q(a.lo_, b.hi_, Rounding::Up),
                   q(a.hi_, b.lo_, Rounding::Up),   q(a.hi_, b.hi_, Rounding::Up)};
    Dyadic lo = min(min(c[0], c[1]), min(c[2], c[3]));
    Dyadic hi = max(max(c[4], c[5]), max(c[6], c[7]));
    const long rp = lo == hi ? 0 : p;
    return Interval(std::move(lo), std::move(hi), rp);
}

Interval abs(const Interval& a)
{
    if (a.lo_.sign() >= 0) return a;
    if (a.hi_.sign() <= 0) return -a;
    return Interval(Dyadic(), max(-a.lo_, a.hi_), a.prec_);
}

Interval square(const Interval& a)
{
    const Interval m = abs(a);
    return make(m.lo_ * m.lo_, m.hi_ * m.hi_, a.prec_);
}

Interval sqrt(const Interval& a) { return nth_root(a, 2); }

Interval nth_root(const Interval& a, unsigned n)
{
    if (a.lo_.sign() < 0) throw std::domain_error("Interval: root of a possibly negative interval");
    const long p = a.prec_ == 0 ? Interval::kDefaultPrecision : a.prec_;
    Dyadic lo = Dyadic::nth_root(a.lo_, n, p, Rounding::Down);
    Dyadic hi = Dyadic::nth_root(a.hi_, n, p, Rounding::Up);
    const bool exact = lo == hi;
    return Interval(std::move(lo), std::move(hi), exact ? a.prec_ : p);
}

Interval hull(const Interval& a, const Interval& b)
{
    return Interval(min(a.lo_, b.lo_), max(a.hi_, b.hi_), combined(a.prec_, b.prec_));
}

Interval intersect(const Interval& a, const Interval& b)
{
    return Interval(max(a.lo_, b.lo_), min(a.hi_, b.hi_), combined(a.prec_, b.prec_));
}

std::ostream& operator<<(std::ostream& os, const Interval& x)
{
    return os << '[' << x.lo().to_double() << ", " << x.hi().to_double() << ']';
}

}  // namespace cubicmahler::numerics
