#pragma once

#include <vector>

#include "cubicmahler/field.hpp"

namespace cubicmahler::embed {

using numerics::CertifiedReal;
using numerics::Interval;

/// Conjugates of a root of a cubic with distinct roots: the real roots in
/// ascending order, and for a complex pair the representative tau with
/// Im tau < 0.
struct ConjugateSet {
    CubicPolynomial poly;
    int r1 = 0;
    int r2 = 0;
    std::vector<CertifiedReal> real_roots;
    CertifiedReal tau_re;
    CertifiedReal tau_im;
    /// |tau|^2, exact in terms of the real root.
    CertifiedReal tau_abs2;
};

/// Certified roots, refined to `bits`. Throws std::invalid_argument when
/// disc(f) = 0.
ConjugateSet cubic_roots(const CubicPolynomial& f, long bits = numerics::kWorkingBits);

/// <phi_1, phi_2, phi_3> (totally real) or <phi_1, Re tau, Im tau>.
using MinkowskiVector = Vector3<CertifiedReal>;

/// Embedding of a power-basis element u0 + u1 theta + u2 theta^2.
MinkowskiVector minkowski_power(const Vector3<BigRat>& u, const ConjugateSet& roots);

/// Embedding of the element with integral-basis coordinates x.
MinkowskiVector minkowski(const Vector3<BigInt>& x, const CubicField& K, const ConjugateSet& roots);

CertifiedReal squared_norm(const MinkowskiVector& v);

/// Sum of |alpha_i|^2 over all three conjugates of a power-basis element.
CertifiedReal conjugate_square_sum(const Vector3<BigRat>& u, const ConjugateSet& roots);

/// Rows phi(w_1), phi(w_2), phi(w_3) of the Minkowski lattice, as intervals
/// of relative width about 2^-bits.
Matrix3<Interval> basis_matrix(const CubicField& K, const ConjugateSet& roots, long bits);

/// M(alpha)^(1/3) <= ||phi(alpha)|| <= sqrt(r1 + r2) M(alpha), certified.
/// alpha != 0.
bool norm_measure_bounds_check(const Vector3<BigInt>& x, const CubicField& K, const ConjugateSet& roots);

}  // namespace cubicmahler::embed
