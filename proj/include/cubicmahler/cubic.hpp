#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>

#include "cubicmahler/numerics/int_poly.hpp"

namespace cubicmahler {

/// Integer cubic c3 x^3 + c2 x^2 + c1 x + c0 with c3 != 0.
class CubicPolynomial {
public:
    CubicPolynomial() : c_{1, 0, 0, 0} {}
    CubicPolynomial(BigInt c3, BigInt c2, BigInt c1, BigInt c0);
    static CubicPolynomial monic(BigInt c2, BigInt c1, BigInt c0) { return {1, std::move(c2), std::move(c1), std::move(c0)}; }
    /// (x - r1)(x - r2)(x - r3)
    static CubicPolynomial from_roots(const BigInt& r1, const BigInt& r2, const BigInt& r3);

    const BigInt& c3() const { return c_[0]; }
    const BigInt& c2() const { return c_[1]; }
    const BigInt& c1() const { return c_[2]; }
    const BigInt& c0() const { return c_[3]; }
    /// Coefficients from c3 down to c0.
    const std::array<BigInt, 4>& coefficients() const { return c_; }
    bool is_monic() const { return c_[0] == 1; }

    BigInt discriminant() const;
    BigInt eval(const BigInt& x) const;
    BigRat eval(const BigRat& x) const;
    /// A rational root, if any.
    std::optional<BigRat> rational_root() const;
    /// Degree 3 with no rational root.
    bool is_irreducible() const { return !rational_root().has_value(); }
    /// Polynomial of -alpha for a root alpha: -f(-x).
    CubicPolynomial negated() const;
    /// Polynomial of alpha - k for a root alpha: f(x + k).
    CubicPolynomial shifted(const BigInt& k) const;

    numerics::IntPoly to_int_poly() const;
    std::string to_string(const std::string& var = "x") const;

    friend bool operator==(const CubicPolynomial&, const CubicPolynomial&) = default;
    friend auto operator<=>(const CubicPolynomial& a, const CubicPolynomial& b)
    {
        for (int i = 0; i < 4; ++i) {
            const int c = cmp(a.c_[i], b.c_[i]);
            if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

private:
    std::array<BigInt, 4> c_;
};

/// Human-readable factorization over Q of a reducible cubic, e.g. "(x - 1)*(x^2 + x + 1)".
std::string describe_factorization(const CubicPolynomial& f);

}  // namespace cubicmahler
