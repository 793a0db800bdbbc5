#pragma once

#include <optional>
#include <vector>

#include "cubicmahler/field.hpp"

namespace cubicmahler::mahler {

using numerics::CertifiedReal;

enum class BasisTag { Integral, Lll };

/// Integer coordinates of an element of O_K in either the stored integral
/// basis or a reduced lattice basis.
struct IntegralElement {
    Vector3<BigInt> coords = Vector3<BigInt>::Zero();
    BasisTag tag = BasisTag::Integral;
};

/// Integral-basis coordinates; `transform` has the reduced basis vectors as
/// rows in integral-basis coordinates.
Vector3<BigInt> to_integral(const IntegralElement& x, const Matrix3<BigInt>& transform);

enum class RootClass { Inside, Outside, OnCircle };

struct MahlerResult {
    CubicPolynomial char_poly;
    bool is_primitive = false;
    CertifiedReal measure;
    /// Real roots in ascending order, then the complex pair.
    std::vector<RootClass> classification;
    /// Minimal polynomial of the measure; the measure is its root bracketed
    /// by `measure`. Empty for non-monic input.
    numerics::IntPoly measure_poly;
    /// A factor of the polynomial has all its roots on the unit circle.
    bool cyclotomic_factor = false;
};

CubicPolynomial char_poly(const Vector3<BigInt>& x, const CubicField& K);

/// alpha is not a rational integer, i.e. generates K.
bool is_primitive(const Vector3<BigInt>& x, const CubicField& K);

/// Mahler measure of an integer cubic of content 1, certified.
MahlerResult mahler_measure(const CubicPolynomial& f);

/// Exact lower bound for the measure of a monic cubic from its
/// coefficients: |c0| and ceil(|c_k| / binom(3, k)).
BigInt coefficient_lower_bound(const CubicPolynomial& f);

/// Multiplication tables in machine integers, for the hot path of the
/// box scan. Falls back to nullopt when values could overflow.
class FastCharPoly {
public:
    explicit FastCharPoly(const CubicField& K);
    /// (c2, c1, c0) of the char poly of x0 w1 + x1 w2 + x2 w3.
    std::optional<std::array<long long, 3>> operator()(long long x0, long long x1, long long x2) const;

private:
    std::array<std::array<long long, 9>, 3> m_{};
    long long max_entry_ = 0;
    bool usable_ = false;
};

}  // namespace cubicmahler::mahler
