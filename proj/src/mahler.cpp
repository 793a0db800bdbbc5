#include "cubicmahler/mahler.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cubicmahler::mahler {
namespace {

using numerics::Dyadic;
using numerics::IntPoly;
using numerics::RootBracket;
using numerics::Rounding;

// Decide |root| > 1 for a root of f isolated by b; f has no root of modulus 1.
bool outside_unit_circle(const IntPoly& f, RootBracket& b)
{
    const Dyadic one(1);
    for (;;) {
        if (b.is_exact()) return abs(b.lo) > one;
        if (b.lo > one || b.hi < -one) return true;
        if (-one < b.lo && b.hi < one) return false;
        b = numerics::refine_bracket(f, b, std::max(8L, -(b.hi - b.lo).msb() + 4));
    }
}

// Decide |r| < |c| for a root r bracketed by b and a nonzero integer c with r != +-c.
bool modulus_below(const IntPoly& f, RootBracket& b, const BigInt& c)
{
    const Dyadic m(abs(c));
    for (;;) {
        const Dyadic lo = b.lo, hi = b.hi;
        const Dyadic alo = (lo.sign() >= 0) ? lo : (hi.sign() <= 0 ? -hi : Dyadic());
        const Dyadic ahi = max(abs(lo), abs(hi));
        if (ahi < m) return true;
        if (alo > m) return false;
        if (b.is_exact()) return ahi < m;
        b = numerics::refine_bracket(f, b, std::max(8L, -(b.hi - b.lo).msb() + 4));
    }
}

IntPoly primitive_positive(IntPoly p)
{
    BigInt g = 0;
    for (const auto& c : p.coefficients()) g = gcd(g, c);
    std::vector<BigInt> c = p.coefficients();
    if (sgn(p.leading()) < 0) g = -g;
    for (auto& v : c) v /= g;
    return IntPoly(std::move(c));
}

// Divide p by (y - m), m an integer root.
IntPoly deflate(const IntPoly& p, const BigInt& m)
{
    std::vector<BigInt> q(p.degree());
    BigInt carry = 0;
    for (int i = p.degree(); i >= 1; --i) {
        carry = carry * m + p[i];
        q[i - 1] = carry;
    }
    return IntPoly(std::move(q));
}

// Integer roots of a polynomial with leading coefficient +-1.
std::vector<BigInt> integer_roots(const IntPoly& p)
{
    std::vector<BigInt> out;
    IntPoly q = p;
    bool again = true;
    while (again && q.degree() >= 1) {
        again = false;
        if (q.degree() == 1) {
            if (divides(q[1], q[0])) out.push_back(-q[0] / q[1]);
            break;
        }
        // a cubic here can have a repeated root only if reducible; handle through CubicPolynomial
        if (q.degree() == 3) {
            const CubicPolynomial c(q[3], q[2], q[1], q[0]);
            if (auto r = c.rational_root(); r && r->get_den() == 1) {
                out.push_back(r->get_num());
                q = deflate(q, r->get_num());
                again = true;
            }
        } else if (q.degree() == 2) {
            const BigInt disc = q[1] * q[1] - 4 * q[2] * q[0];
            if (is_perfect_square(disc)) {
                const BigInt s = isqrt(disc);
                for (const BigInt& num : {BigInt(-q[1] - s), BigInt(-q[1] + s)})
                    if (divides(2 * q[2], num)) out.push_back(num / (2 * q[2]));
            }
            break;
        }
    }
    return out;
}

// Make `b` (an isolating bracket of a root y of p) into an isolating bracket
// for the minimal polynomial of y.
void reduce_to_minimal(IntPoly& p, RootBracket& b)
{
    for (const BigInt& m : integer_roots(p)) {
        const Dyadic md(m);
        if (b.lo <= md && md <= b.hi) {
            p = IntPoly({-m, BigInt(1)});
            b = {md, md};
            return;
        }
    }
    for (const BigInt& m : integer_roots(p)) p = deflate(p, m);
    p = primitive_positive(p);
}

MahlerResult measure_monic_irreducible(const CubicPolynomial& f)
{
    MahlerResult r;
    r.char_poly = f;
    r.is_primitive = true;
    const IntPoly p = f.to_int_poly();
    auto brackets = numerics::isolate_real_roots(p);
    const BigInt& c0 = f.c0();
    std::vector<bool> outside;
    for (auto& b : brackets) outside.push_back(outside_unit_circle(p, b));
    bool pair_outside = false;
    if (brackets.size() == 1) {
        // |tau|^2 = |c0| / |r|, so the pair is outside iff |r| < |c0|
        pair_outside = modulus_below(p, brackets[0], c0);
    }
    for (bool o : outside) r.classification.push_back(o ? RootClass::Outside : RootClass::Inside);
    if (brackets.size() == 1) {
        r.classification.push_back(pair_outside ? RootClass::Outside : RootClass::Inside);
        r.classification.push_back(r.classification.back());
    }
    const int n_out = static_cast<int>(std::count(r.classification.begin(), r.classification.end(), RootClass::Outside));

    IntPoly mp;
    RootBracket mb;
    if (n_out == 3) {
        mp = IntPoly({-abs(c0), BigInt(1)});
        mb = {Dyadic(abs(c0)), Dyadic(abs(c0))};
    } else if (n_out == 1) {
        // a single outside real root r, M = |r|
        std::size_t k = 0;
        while (!outside[k]) ++k;
        const RootBracket& b = brackets[k];
        if (b.lo.sign() > 0) {
            mp = p;
            mb = b;
        } else {
            mp = IntPoly({-p[0], p[1], -p[2], p[3]});
            mb = {-b.hi, -b.lo};
        }
    } else {
        // one inside real root rho, M = |c0| / |rho|
        std::size_t k = 0;
        while (outside[k]) ++k;
        const RootBracket& b = brackets[k];
        const int eps = b.lo.sign() > 0 || (b.lo.sign() == 0 && b.hi.sign() > 0) ? 1 : -1;
        const BigInt ac0 = abs(c0);
        mp = IntPoly({eps * c0 * c0, ac0 * f.c2(), eps * f.c1(), BigInt(sgn(c0))});
        const Dyadic alo = eps > 0 ? b.lo : -b.hi;
        const Dyadic ahi = eps > 0 ? b.hi : -b.lo;
        const long prec = std::max<long>(64, 4 - (b.hi - b.lo).msb() + static_cast<long>(bit_length(ac0)));
        Dyadic lo = Dyadic(ac0);
        if (alo.sign() > 0) lo = max(lo, Dyadic::quotient(Dyadic(ac0), ahi, prec, Rounding::Down));
        if (alo.sign() <= 0) {
            // bracket touches zero: fall back to locating the root among those beyond |c0|
            const auto all = numerics::isolate_real_roots(mp);
            for (const auto& c : all)
                if (c.lo > Dyadic(ac0)) mb = c;
        } else {
            const Dyadic hi = Dyadic::quotient(Dyadic(ac0), alo, prec, Rounding::Up);
            mb = {lo, hi};
        }
        if (!mb.is_exact()) {
            const int s1 = mp.sign_at(mb.lo), s2 = mp.sign_at(mb.hi);
            if (s1 == 0) mb = {mb.lo, mb.lo};
            else if (s2 == 0) mb = {mb.hi, mb.hi};
            else if (s1 == s2) throw std::logic_error("mahler_measure: lost the measure root");
        }
    }
    reduce_to_minimal(mp, mb);
    r.measure_poly = mp;
    r.measure = CertifiedReal::root_of(mp, mb);
    return r;
}

MahlerResult measure_generic(const CubicPolynomial& f)
{
    // reducible or non-monic; roots handled factor by factor
    MahlerResult r;
    r.char_poly = f;
    const IntPoly p = f.to_int_poly();
    CertifiedReal m(BigInt(abs(f.c3())));
    if (auto root = f.rational_root()) {
        const BigInt& num = root->get_num();
        const BigInt& den = root->get_den();
        // f = (den x - num) (A x^2 + B x + C)
        const BigInt A = f.c3() / den;
        const BigInt B = (f.c2() + A * num) / den;
        const BigInt C = (f.c1() + B * num) / den;
        // M(f) = M(den x - num) M(A x^2 + B x + C)
        m = CertifiedReal(std::max<BigInt>(abs(den), abs(num)));
        const BigInt disc = B * B - 4 * A * C;
        const IntPoly q({C, B, A});
        std::vector<std::pair<Dyadic, RootClass>> cls;
        cls.emplace_back(Dyadic::from_rational(*root, 64, Rounding::Down),
                         abs(num) > abs(den) ? RootClass::Outside
                                             : (abs(num) == abs(den) ? RootClass::OnCircle : RootClass::Inside));
        if (abs(num) == abs(den)) r.cyclotomic_factor = true;
        CertifiedReal mq(BigInt(abs(A)));
        if (sgn(disc) < 0) {
            // complex pair with |z|^2 = C / A
            const BigRat mod2 = make_rational(C, A);
            RootClass c = mod2 > 1 ? RootClass::Outside : (mod2 == 1 ? RootClass::OnCircle : RootClass::Inside);
            if (mod2 > 1) mq = CertifiedReal(BigInt(abs(C)));
            if (mod2 == 1) r.cyclotomic_factor = true;
            r.classification.push_back(cls[0].second);
            r.classification.push_back(c);
            r.classification.push_back(c);
        } else {
            std::vector<RootBracket> qb;
            if (sgn(disc) == 0) {
                const Dyadic d = Dyadic::from_rational(make_rational(-B, 2 * A), 256, Rounding::Down);
                qb = {{d, d}, {d, d}};
            } else {
                qb = numerics::isolate_real_roots(q);
            }
            std::vector<RootBracket> outside;
            for (auto& b : qb) {
                RootClass c;
                if (sgn(disc) == 0) {
                    const BigRat v = abs(make_rational(B, 2 * A));
                    c = v > 1 ? RootClass::Outside : (v == 1 ? RootClass::OnCircle : RootClass::Inside);
                } else if (b.is_exact()) {
                    const BigRat v = abs(b.lo.to_rational());
                    c = v > 1 ? RootClass::Outside : (v == 1 ? RootClass::OnCircle : RootClass::Inside);
                } else {
                    c = outside_unit_circle(q, b) ? RootClass::Outside : RootClass::Inside;
                }
                if (c == RootClass::OnCircle) r.cyclotomic_factor = true;
                if (c == RootClass::Outside) outside.push_back(b);
                cls.emplace_back(b.lo, c);
            }
            // both roots outside: |A r r'| = |C| exactly
            if (outside.size() == 2) {
                mq = CertifiedReal(BigInt(abs(C)));
            } else if (outside.size() == 1) {
                const RootBracket& b = outside[0];
                mq *= b.is_exact() ? CertifiedReal(abs(b.lo.to_rational())) : abs(CertifiedReal::root_of(q, b));
            }
            std::sort(cls.begin(), cls.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            for (const auto& c : cls) r.classification.push_back(c.second);
        }
        r.measure = m * mq;
        r.is_primitive = false;
        return r;
    }
    // irreducible, non-monic
    r.is_primitive = true;
    auto brackets = numerics::isolate_real_roots(p);
    for (auto& b : brackets) {
        const bool out = outside_unit_circle(p, b);
        r.classification.push_back(out ? RootClass::Outside : RootClass::Inside);
        if (out) m *= abs(CertifiedReal::root_of(p, b));
    }
    if (brackets.size() == 1) {
        // |tau|^2 = |c0| / (|c3| |r|)
        const CertifiedReal mod2 = CertifiedReal(BigInt(abs(f.c0()))) /
                                   (CertifiedReal(BigInt(abs(f.c3()))) * abs(CertifiedReal::root_of(p, brackets[0])));
        const auto o = numerics::compare_strict(mod2, CertifiedReal(1));
        const RootClass c = o == numerics::Ordering::Greater ? RootClass::Outside : RootClass::Inside;
        if (c == RootClass::Outside) m *= mod2;
        r.classification.push_back(c);
        r.classification.push_back(c);
    }
    r.measure = m;
    return r;
}

}  // namespace

Vector3<BigInt> to_integral(const IntegralElement& x, const Matrix3<BigInt>& transform)
{
    if (x.tag == BasisTag::Integral) return x.coords;
    return transform.transpose() * x.coords;
}

CubicPolynomial char_poly(const Vector3<BigInt>& x, const CubicField& K)
{
    const auto c = char_poly_coefficients(multiplication_matrix(K, x));
    return CubicPolynomial::monic(c[0], c[1], c[2]);
}

bool is_primitive(const Vector3<BigInt>& x, const CubicField& K)
{
    (void)K;
    return is_primitive_coordinates(x);
}

MahlerResult mahler_measure(const CubicPolynomial& f)
{
    if (f.is_monic() && f.is_irreducible()) return measure_monic_irreducible(f);
    return measure_generic(f);
}

BigInt coefficient_lower_bound(const CubicPolynomial& f)
{
    BigInt lb = std::max<BigInt>(BigInt(1), abs(f.c0()));
    lb = std::max<BigInt>(lb, ceil_div(abs(f.c2()), 3));
    lb = std::max<BigInt>(lb, ceil_div(abs(f.c1()), 3));
    return lb;
}

FastCharPoly::FastCharPoly(const CubicField& K)
{
    const BigInt limit = BigInt(1) << 20;
    usable_ = true;
    for (int i = 0; i < 3; ++i)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                const BigInt& v = K.mult[i](r, c);
                if (abs(v) > limit) usable_ = false;
                m_[i][3 * r + c] = usable_ ? v.get_si() : 0;
                if (usable_) max_entry_ = std::max(max_entry_, std::abs(m_[i][3 * r + c]));
            }
}

std::optional<std::array<long long, 3>> FastCharPoly::operator()(long long x0, long long x1, long long x2) const
{
    if (!usable_) return std::nullopt;
    const long long span = std::abs(x0) + std::abs(x1) + std::abs(x2);
    if (span > (1LL << 20)) return std::nullopt;
    // entries stay below 2^40, so the determinant fits in 128 bits
    long long m[9];
    for (int k = 0; k < 9; ++k) m[k] = x0 * m_[0][k] + x1 * m_[1][k] + x2 * m_[2][k];
    using i128 = __int128;
    const i128 tr = static_cast<i128>(m[0]) + m[4] + m[8];
    const i128 minors = static_cast<i128>(m[0]) * m[4] - static_cast<i128>(m[1]) * m[3] +
                        static_cast<i128>(m[0]) * m[8] - static_cast<i128>(m[2]) * m[6] +
                        static_cast<i128>(m[4]) * m[8] - static_cast<i128>(m[5]) * m[7];
    const i128 det = m[0] * (static_cast<i128>(m[4]) * m[8] - static_cast<i128>(m[5]) * m[7]) -
                     m[1] * (static_cast<i128>(m[3]) * m[8] - static_cast<i128>(m[5]) * m[6]) +
                     m[2] * (static_cast<i128>(m[3]) * m[7] - static_cast<i128>(m[4]) * m[6]);
    constexpr i128 lim = std::numeric_limits<long long>::max();
    if (tr > lim || -tr > lim || minors > lim || -minors > lim || det > lim || -det > lim) return std::nullopt;
    return std::array<long long, 3>{static_cast<long long>(-tr), static_cast<long long>(minors),
                                    static_cast<long long>(-det)};
}

}  // namespace cubicmahler::mahler
