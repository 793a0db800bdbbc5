#include "cubicmahler/field.hpp"

#include <stdexcept>

namespace cubicmahler {

Matrix3<BigRat> power_basis() { return Matrix3<BigRat>::Identity(); }

Vector3<BigRat> multiply_mod(const CubicPolynomial& f, const Vector3<BigRat>& x, const Vector3<BigRat>& y)
{
    // full product up to theta^4, then theta^3 = -c2 theta^2 - c1 theta - c0
    std::array<BigRat, 5> p;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) p[i + j] += x(i) * y(j);
    const BigRat c2(f.c2()), c1(f.c1()), c0(f.c0());
    for (int k = 4; k >= 3; --k) {
        const BigRat t = p[k];
        p[k] = 0;
        p[k - 1] -= c2 * t;
        p[k - 2] -= c1 * t;
        p[k - 3] -= c0 * t;
    }
    return Vector3<BigRat>(p[0], p[1], p[2]);
}

CubicField make_field(const CubicPolynomial& f, const Matrix3<BigRat>& basis)
{
    if (!f.is_monic()) throw std::invalid_argument("make_field: defining polynomial must be monic");
    CubicField K;
    K.defining_poly = f;
    K.basis = basis;
    const Matrix3<BigRat> inv_t = basis.transpose().inverse();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const Vector3<BigRat> prod = multiply_mod(f, basis.row(i).transpose(), basis.row(j).transpose());
            const Vector3<BigRat> coords = inv_t * prod;
            for (int k = 0; k < 3; ++k) {
                if (coords(k).get_den() != 1) throw std::invalid_argument("make_field: basis is not closed under products");
                K.mult[i](k, j) = coords(k).get_num();
            }
        }
    }
    const BigRat det = basis.determinant();
    const BigRat index = 1 / abs(det);
    if (index.get_den() != 1) throw std::invalid_argument("make_field: basis does not contain Z[theta]");
    K.index = index.get_num();
    K.discriminant = f.discriminant() / (K.index * K.index);
    if (sgn(K.discriminant) > 0) {
        K.r1 = 3;
        K.r2 = 0;
    } else {
        K.r1 = 1;
        K.r2 = 1;
    }
    K.is_cyclic = is_perfect_square(K.discriminant);
    return K;
}

Matrix3<BigInt> multiplication_matrix(const CubicField& K, const Vector3<BigInt>& x)
{
    return multiplication_matrix<BigInt>(K.mult, x);
}

Vector3<BigRat> to_power_basis(const CubicField& K, const Vector3<BigInt>& x)
{
    return K.basis.transpose() * x.cast<BigRat>();
}

std::optional<Vector3<BigInt>> to_integral_basis(const CubicField& K, const Vector3<BigRat>& p)
{
    const Vector3<BigRat> c = K.basis.transpose().inverse() * p;
    Vector3<BigInt> out;
    for (int k = 0; k < 3; ++k) {
        if (c(k).get_den() != 1) return std::nullopt;
        out(k) = c(k).get_num();
    }
    return out;
}

BigInt trace(const CubicField& K, const Vector3<BigInt>& x) { return multiplication_matrix(K, x).trace(); }

BigInt trace_form_determinant(const CubicField& K)
{
    Matrix3<BigInt> t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t(i, j) = trace(K, K.product(i, j));
    return t.cast<BigRat>().determinant().get_num();
}

}  // namespace cubicmahler
