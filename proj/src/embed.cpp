#include "cubicmahler/embed.hpp"

#include <stdexcept>

#include "cubicmahler/mahler.hpp"

namespace cubicmahler::embed {
namespace {

using numerics::Ordering;

// a + c * x, leaving the expression exact when c is zero
CertifiedReal add_scaled(const CertifiedReal& a, const BigRat& c, const CertifiedReal& x)
{
    if (sgn(c) == 0) return a;
    if (c == 1) return a + x;
    return a + CertifiedReal(c) * x;
}

CertifiedReal eval_real(const Vector3<BigRat>& u, const CertifiedReal& r)
{
    CertifiedReal v(u(0));
    v = add_scaled(v, u(1), r);
    if (sgn(u(2)) != 0) v = add_scaled(v, u(2), square(r));
    return v;
}

}  // namespace

ConjugateSet cubic_roots(const CubicPolynomial& f, long bits)
{
    if (sgn(f.discriminant()) == 0) throw std::invalid_argument("cubic_roots: repeated root in " + f.to_string());
    ConjugateSet s;
    s.poly = f;
    const numerics::IntPoly p = f.to_int_poly();
    for (const auto& b : numerics::isolate_real_roots(p))
        s.real_roots.push_back(refine(CertifiedReal::root_of(p, b), bits));
    if (s.real_roots.size() == 3) {
        s.r1 = 3;
        return s;
    }
    s.r1 = 1;
    s.r2 = 1;
    const CertifiedReal& r = s.real_roots[0];
    const BigRat b2 = make_rational(f.c2(), f.c3()), b1 = make_rational(f.c1(), f.c3());
    s.tau_re = refine((CertifiedReal(BigRat(-b2)) - r) / CertifiedReal(2), bits);
    s.tau_abs2 = refine(CertifiedReal(b1) + r * (CertifiedReal(b2) + r), bits);
    s.tau_im = refine(-sqrt(s.tau_abs2 - square(s.tau_re)), bits);
    return s;
}

MinkowskiVector minkowski_power(const Vector3<BigRat>& u, const ConjugateSet& roots)
{
    MinkowskiVector v;
    if (roots.r1 == 3) {
        for (int i = 0; i < 3; ++i) v(i) = eval_real(u, roots.real_roots[i]);
        return v;
    }
    const CertifiedReal& a = roots.tau_re;
    const CertifiedReal& b = roots.tau_im;
    v(0) = eval_real(u, roots.real_roots[0]);
    // Re(u0 + u1 tau + u2 tau^2) with Re tau^2 = 2a^2 - |tau|^2, Im = b (u1 + 2 u2 a)
    CertifiedReal re(u(0));
    re = add_scaled(re, u(1), a);
    if (sgn(u(2)) != 0) re = add_scaled(re, u(2), CertifiedReal(2) * square(a) - roots.tau_abs2);
    v(1) = re;
    if (sgn(u(1)) == 0 && sgn(u(2)) == 0) {
        v(2) = CertifiedReal(0);
    } else {
        CertifiedReal inner(u(1));
        inner = add_scaled(inner, BigRat(2 * u(2)), a);
        v(2) = b * inner;
    }
    return v;
}

MinkowskiVector minkowski(const Vector3<BigInt>& x, const CubicField& K, const ConjugateSet& roots)
{
    return minkowski_power(to_power_basis(K, x), roots);
}

CertifiedReal squared_norm(const MinkowskiVector& v)
{
    return square(v(0)) + square(v(1)) + square(v(2));
}

CertifiedReal conjugate_square_sum(const Vector3<BigRat>& u, const ConjugateSet& roots)
{
    const MinkowskiVector v = minkowski_power(u, roots);
    if (roots.r1 == 3) return squared_norm(v);
    return square(v(0)) + CertifiedReal(2) * (square(v(1)) + square(v(2)));
}

Matrix3<Interval> basis_matrix(const CubicField& K, const ConjugateSet& roots, long bits)
{
    Matrix3<Interval> m;
    for (int i = 0; i < 3; ++i) {
        const MinkowskiVector v = minkowski_power(K.basis.row(i).transpose(), roots);
        for (int j = 0; j < 3; ++j) m(i, j) = refine(v(j), bits).enclosure();
    }
    return m;
}

bool norm_measure_bounds_check(const Vector3<BigInt>& x, const CubicField& K, const ConjugateSet& roots)
{
    const CertifiedReal n = squared_norm(minkowski(x, K, roots));
    const CertifiedReal m = mahler::mahler_measure(mahler::char_poly(x, K)).measure;
    const CertifiedReal m2 = square(m);
    const Ordering lower = numerics::compare_strict(m2, n * n * n);
    const Ordering upper = numerics::compare_strict(n, CertifiedReal(K.r1 + K.r2) * m2);
    const auto holds = [](Ordering o) { return o == Ordering::Less || o == Ordering::EqualAsExact; };
    return holds(lower) && holds(upper);
}

}  // namespace cubicmahler::embed
