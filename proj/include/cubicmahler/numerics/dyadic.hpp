#pragma once

#include <compare>
#include <string>

#include "cubicmahler/numerics/bigint.hpp"

namespace cubicmahler::numerics {

enum class Rounding { Down, Up };

/// Exact binary rational mantissa * 2^exponent, kept normalized (odd
/// mantissa, or zero with exponent 0) so equal values compare bitwise equal.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long v) : mantissa_(v) { normalize(); }  // NOLINT(google-explicit-constructor)
    explicit Dyadic(const BigInt& m, long e = 0) : mantissa_(m), exponent_(e) { normalize(); }

    static Dyadic from_double(double v);
    /// Round q to `prec` significant bits in direction `dir`; exact when q is dyadic and fits.
    static Dyadic from_rational(const BigRat& q, long prec, Rounding dir);
    static Dyadic quotient(const Dyadic& a, const Dyadic& b, long prec, Rounding dir);
    /// n-th root of a nonnegative value, `prec` significant bits.
    static Dyadic nth_root(const Dyadic& x, unsigned n, long prec, Rounding dir);

    const BigInt& mantissa() const { return mantissa_; }
    long exponent() const { return exponent_; }
    int sign() const { return sgn(mantissa_); }
    bool is_zero() const { return sgn(mantissa_) == 0; }
    /// floor(log2 |x|); undefined for zero.
    long msb() const { return exponent_ + static_cast<long>(bit_length(mantissa_)) - 1; }

    Dyadic rounded(long prec, Rounding dir) const;
    Dyadic ldexp(long k) const { return Dyadic(mantissa_, exponent_ + k); }
    BigRat to_rational() const;
    double to_double() const;
    BigInt floor() const;
    BigInt ceil() const;
    std::string to_string() const;

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.mantissa_, a.exponent_); }
    friend Dyadic abs(const Dyadic& a) { return Dyadic(::abs(a.mantissa_), a.exponent_); }

    friend int compare(const Dyadic& a, const Dyadic& b);
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b)
    {
        const int c = compare(a, b);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend bool operator==(const Dyadic& a, const Dyadic& b)
    {
        return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
    }

private:
    void normalize();

    BigInt mantissa_ = 0;
    long exponent_ = 0;
};

inline const Dyadic& min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
inline const Dyadic& max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

}  // namespace cubicmahler::numerics
