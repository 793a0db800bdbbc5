#include "cubicmahler/cubic.hpp"

#include <stdexcept>

namespace cubicmahler {

CubicPolynomial::CubicPolynomial(BigInt c3, BigInt c2, BigInt c1, BigInt c0)
    : c_{std::move(c3), std::move(c2), std::move(c1), std::move(c0)}
{
    if (sgn(c_[0]) == 0) throw std::invalid_argument("CubicPolynomial: leading coefficient is zero");
}

CubicPolynomial CubicPolynomial::from_roots(const BigInt& r1, const BigInt& r2, const BigInt& r3)
{
    return monic(-(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -(r1 * r2 * r3));
}

BigInt CubicPolynomial::discriminant() const
{
    const BigInt &a = c_[0], &b = c_[1], &c = c_[2], &d = c_[3];
    return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

BigInt CubicPolynomial::eval(const BigInt& x) const { return ((c_[0] * x + c_[1]) * x + c_[2]) * x + c_[3]; }

BigRat CubicPolynomial::eval(const BigRat& x) const
{
    return ((c_[0] * x + c_[1]) * x + c_[2]) * x + c_[3];
}

std::optional<BigRat> CubicPolynomial::rational_root() const
{
    if (sgn(c_[3]) == 0) return BigRat(0);
    if (sgn(discriminant()) == 0) {
        // a repeated root is rational
        const BigInt &a = c_[0], &b = c_[1], &c = c_[2], &d = c_[3];
        const BigInt den = b * b - 3 * a * c;
        BigRat r = sgn(den) == 0 ? BigRat(-b, 3 * a) : BigRat(9 * a * d - b * c, 2 * den);
        r.canonicalize();
        return r;
    }
    // a x is a root of y^3 + b y^2 + a c y + a^2 d, whose rational roots are integers
    const BigInt& a = c_[0];
    const numerics::IntPoly g({a * a * c_[3], a * c_[2], c_[1], BigInt(1)});
    for (const auto& b : numerics::isolate_real_roots(g)) {
        for (BigInt y = b.lo.floor(); y <= b.hi.ceil(); ++y) {
            if (sgn(g.eval(y)) == 0) {
                BigRat r(y, a);
                r.canonicalize();
                return r;
            }
        }
    }
    return std::nullopt;
}

CubicPolynomial CubicPolynomial::negated() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }

CubicPolynomial CubicPolynomial::shifted(const BigInt& k) const
{
    // f(x + k) by Taylor expansion at k
    const BigInt &a = c_[0], &b = c_[1], &c = c_[2];
    return {a, 3 * a * k + b, 3 * a * k * k + 2 * b * k + c, eval(k)};
}

numerics::IntPoly CubicPolynomial::to_int_poly() const { return numerics::IntPoly({c_[3], c_[2], c_[1], c_[0]}); }

std::string CubicPolynomial::to_string(const std::string& var) const { return to_int_poly().to_string(var); }

std::string describe_factorization(const CubicPolynomial& f)
{
    const auto r = f.rational_root();
    if (!r) return f.to_string();
    // f = (q x - p) * (A x^2 + B x + C)
    const BigInt& p = r->get_num();
    const BigInt& q = r->get_den();
    const BigInt A = f.c3() / q;
    const BigInt B = (f.c2() + A * p) / q;
    const BigInt C = (f.c1() + B * p) / q;
    const numerics::IntPoly lin({-p, q});
    const numerics::IntPoly quad({C, B, A});
    return "(" + lin.to_string() + ")*(" + quad.to_string() + ")";
}

}  // namespace cubicmahler
