#pragma once

#include <memory>
#include <optional>

#include "cubicmahler/numerics/int_poly.hpp"

namespace cubicmahler::numerics {

namespace detail {
struct Node;
}

/// Real number given by an expression over exact rationals and isolated
/// real roots of integer polynomials, together with a current enclosure.
///
/// Values are immutable; refinement returns a new value whose enclosure is
/// contained in the old one. The expression is kept so that any enclosure
/// can be tightened on demand.
class CertifiedReal {
public:
    CertifiedReal();
    CertifiedReal(long v);  // NOLINT(google-explicit-constructor)
    CertifiedReal(int v) : CertifiedReal(static_cast<long>(v)) {}  // NOLINT
    explicit CertifiedReal(const BigInt& v);
    explicit CertifiedReal(const BigRat& v);

    /// The root of squarefree p isolated by b.
    static CertifiedReal root_of(const IntPoly& p, const RootBracket& b);

    const Interval& enclosure() const;
    const Dyadic& lo() const { return enclosure().lo(); }
    const Dyadic& hi() const { return enclosure().hi(); }
    long precision_bits() const;
    double approx() const { return enclosure().approx(); }

    /// Value as a rational when the expression uses only rational
    /// constants and field operations.
    std::optional<BigRat> exact_value() const;

    /// Same expression tree, node for node.
    bool same_expression(const CertifiedReal& o) const;

    friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
    friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
    friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
    friend CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b);
    friend CertifiedReal operator-(const CertifiedReal& a);
    CertifiedReal& operator+=(const CertifiedReal& o) { return *this = *this + o; }
    CertifiedReal& operator-=(const CertifiedReal& o) { return *this = *this - o; }
    CertifiedReal& operator*=(const CertifiedReal& o) { return *this = *this * o; }
    CertifiedReal& operator/=(const CertifiedReal& o) { return *this = *this / o; }

    friend CertifiedReal abs(const CertifiedReal& a);
    friend CertifiedReal sqrt(const CertifiedReal& a);
    friend CertifiedReal nth_root(const CertifiedReal& a, unsigned n);
    friend CertifiedReal square(const CertifiedReal& a) { return a * a; }

    friend CertifiedReal refine(const CertifiedReal& x, long target_bits);

private:
    explicit CertifiedReal(std::shared_ptr<const detail::Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const detail::Node> node_;
};

/// Enclosure of width <= 2^(1 - target_bits) * max(1, |x|) inside x's enclosure.
CertifiedReal refine(const CertifiedReal& x, long target_bits);

enum class Ordering { Less, Greater, EqualAsExact, Undecided };

/// Strict comparison by refinement until the enclosures separate. Equal
/// values are only recognised when both sides are the same expression or
/// evaluate to the same rational; anything else that stays overlapped up to
/// `escalation_limit` bits is Undecided.
Ordering compare_strict(const CertifiedReal& x, const CertifiedReal& y, long escalation_limit = 4096);

/// Starting precision for comparisons and the default refinement target.
constexpr long kWorkingBits = 128;

}  // namespace cubicmahler::numerics
