#pragma once

#include <iosfwd>

#include "cubicmahler/numerics/dyadic.hpp"

namespace cubicmahler::numerics {

/// Closed interval with dyadic endpoints.
///
/// Every interval carries the working precision (significant bits) used to
/// round the endpoints of results computed from it; precision 0 marks an
/// exact interval, and +, -, * of exact operands stay exact. Operations
/// round outward, so the exact result of any expression evaluated on
/// enclosures lies in the computed enclosure.
class Interval {
public:
    static constexpr long kDefaultPrecision = 128;

    Interval() = default;
    Interval(long v) : lo_(v), hi_(v) {}  // NOLINT(google-explicit-constructor)
    Interval(int v) : lo_(static_cast<long>(v)), hi_(static_cast<long>(v)) {}  // NOLINT
    explicit Interval(const BigInt& v) : lo_(v), hi_(v) {}
    explicit Interval(const Dyadic& v) : lo_(v), hi_(v) {}
    Interval(Dyadic lo, Dyadic hi, long prec);

    /// Enclosure of q; exact point when q is dyadic and fits in `prec` bits.
    static Interval from_rational(const BigRat& q, long prec);

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }
    long precision() const { return prec_; }
    Interval with_precision(long prec) const { return Interval(lo_, hi_, prec); }

    bool is_point() const { return lo_ == hi_; }
    Dyadic width() const { return hi_ - lo_; }
    Dyadic midpoint() const { return (lo_ + hi_).ldexp(-1); }
    /// max(|lo|, |hi|)
    Dyadic magnitude() const;
    double approx() const { return midpoint().to_double(); }

    bool contains(const Dyadic& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const BigRat& q) const;
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool certainly_positive() const { return lo_.sign() > 0; }
    bool certainly_negative() const { return hi_.sign() < 0; }
    bool certainly_less(const Interval& o) const { return hi_ < o.lo_; }
    bool overlaps(const Interval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }
    /// True when width <= 2^(1 - bits) * max(1, |x|).
    bool meets_relative_width(long bits) const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_, a.prec_); }
    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }
    Interval& operator/=(const Interval& o) { return *this = *this / o; }

    friend Interval abs(const Interval& a);
    friend Interval square(const Interval& a);
    friend Interval sqrt(const Interval& a);
    friend Interval nth_root(const Interval& a, unsigned n);
    friend Interval hull(const Interval& a, const Interval& b);
    /// Intersection; the operands must overlap.
    friend Interval intersect(const Interval& a, const Interval& b);

    friend bool operator==(const Interval& a, const Interval& b)
    {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    Dyadic lo_;
    Dyadic hi_;
    long prec_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace cubicmahler::numerics
