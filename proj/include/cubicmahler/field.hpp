#pragma once

#include <array>

#include "cubicmahler/cubic.hpp"
#include "cubicmahler/numerics/eigen_support.hpp"

namespace cubicmahler {

/// A cubic number field Q(theta), theta a root of a monic irreducible
/// integer cubic, with an integral basis of its maximal order.
///
/// The basis is stored in Hermite form over the power basis:
/// w1 = 1, w2 = (u + v theta) / d2, w3 = (x + y theta + z theta^2) / d3.
struct CubicField {
    BigInt discriminant;
    int r1 = 0;
    int r2 = 0;
    bool is_cyclic = false;
    CubicPolynomial defining_poly;
    /// [O_K : Z[theta]]
    BigInt index = 1;
    /// Row i holds w_i in the power basis {1, theta, theta^2}.
    Matrix3<BigRat> basis;
    /// mult[i] is the matrix of multiplication by w_i: column j holds the
    /// coordinates of w_i * w_j.
    std::array<Matrix3<BigInt>, 3> mult;

    bool totally_real() const { return r1 == 3; }
    /// Coordinates of w_i * w_j.
    Vector3<BigInt> product(int i, int j) const { return mult[i].col(j); }
};

/// Field from a defining polynomial and a Z-basis (rows, power-basis
/// coordinates) of an order containing Z[theta]. Fills in the multiplication
/// table, index and discriminant of that order.
CubicField make_field(const CubicPolynomial& f, const Matrix3<BigRat>& basis);

/// The order Z[theta] itself.
Matrix3<BigRat> power_basis();

/// Product of two power-basis vectors modulo the monic cubic f.
Vector3<BigRat> multiply_mod(const CubicPolynomial& f, const Vector3<BigRat>& x, const Vector3<BigRat>& y);

/// Matrix of multiplication by the element with integral-basis coordinates x.
template <typename Scalar>
Matrix3<Scalar> multiplication_matrix(const std::array<Matrix3<Scalar>, 3>& mult, const Vector3<Scalar>& x)
{
    Matrix3<Scalar> m = mult[0] * x(0);
    m += mult[1] * x(1);
    m += mult[2] * x(2);
    return m;
}

Matrix3<BigInt> multiplication_matrix(const CubicField& K, const Vector3<BigInt>& x);

/// Coefficients (c2, c1, c0) of the characteristic polynomial
/// x^3 + c2 x^2 + c1 x + c0 of a 3x3 matrix.
template <typename Scalar>
std::array<Scalar, 3> char_poly_coefficients(const Matrix3<Scalar>& m)
{
    const Scalar trace = m(0, 0) + m(1, 1) + m(2, 2);
    const Scalar minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                          m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    const Scalar det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                       m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                       m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    return {Scalar(-trace), minors, Scalar(-det)};
}

/// Power-basis coordinates of the element with integral-basis coordinates x.
Vector3<BigRat> to_power_basis(const CubicField& K, const Vector3<BigInt>& x);

/// Integral-basis coordinates of a power-basis element, if it lies in O_K.
std::optional<Vector3<BigInt>> to_integral_basis(const CubicField& K, const Vector3<BigRat>& p);

/// Trace of the element with integral-basis coordinates x.
BigInt trace(const CubicField& K, const Vector3<BigInt>& x);

/// det(Tr(w_i w_j)), which equals the discriminant of the order.
BigInt trace_form_determinant(const CubicField& K);

/// True iff b and c are not both zero, i.e. the element is not in Z.
inline bool is_primitive_coordinates(const Vector3<BigInt>& x) { return sgn(x(1)) != 0 || sgn(x(2)) != 0; }

}  // namespace cubicmahler
