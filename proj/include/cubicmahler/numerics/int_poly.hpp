#pragma once

#include <string>
#include <vector>

#include "cubicmahler/numerics/interval.hpp"

namespace cubicmahler::numerics {

/// Dense integer polynomial, coefficients stored from the constant term up.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> low_to_high);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const BigInt& operator[](int k) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    const BigInt& leading() const { return coeffs_.back(); }

    BigInt eval(const BigInt& x) const;
    BigRat eval(const BigRat& x) const;
    /// Exact sign of p(x) at a dyadic point.
    int sign_at(const Dyadic& x) const;
    Interval eval(const Interval& x) const;
    IntPoly derivative() const;
    BigInt max_abs_coefficient() const;

    std::string to_string(const std::string& var = "x") const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator<(const IntPoly& a, const IntPoly& b);

private:
    std::vector<BigInt> coeffs_;
};

/// Bracket [lo, hi] holding exactly one root of a squarefree polynomial.
/// Either lo == hi is the root itself, or the polynomial has opposite
/// nonzero signs at the two endpoints.
struct RootBracket {
    Dyadic lo;
    Dyadic hi;

    bool is_exact() const { return lo == hi; }
    Interval interval() const { return Interval(lo, hi, lo == hi ? 0 : Interval::kDefaultPrecision); }
};

/// Number of distinct real roots of squarefree p in the half-open (a, b],
/// by Sturm sequence in exact rationals.
int count_roots(const IntPoly& p, const BigRat& a, const BigRat& b);

/// Isolating brackets for every real root of squarefree p, ascending.
/// Seeds from floating-point approximations verified by exact sign tests;
/// falls back to Sturm bisection when the seeds cannot be certified.
std::vector<RootBracket> isolate_real_roots(const IntPoly& p);

/// Pure Sturm-bisection isolation (no floating point); the reference path.
std::vector<RootBracket> isolate_real_roots_exact(const IntPoly& p);

/// Shrink a bracket until width <= 2^(-bits) * max(1, |root|).
/// Newton steps are accepted only after an exact sign check; bisection
/// otherwise.
RootBracket refine_bracket(const IntPoly& p, RootBracket b, long bits);

/// Canonical enclosure of the root at scale 2^-bits: [j, j+1] * 2^-bits with
/// j = floor(root * 2^bits), or the exact root when it is dyadic at that
/// scale. The result depends only on the root, not on the input bracket.
Interval canonical_enclosure(const IntPoly& p, const RootBracket& b, long bits);

}  // namespace cubicmahler::numerics
