#include "cubicmahler/numerics/int_poly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace cubicmahler::numerics {
namespace {

using RatPoly = std::vector<BigRat>;

void trim(std::vector<BigInt>& c)
{
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

void trim(RatPoly& c)
{
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

RatPoly to_rational(const IntPoly& p)
{
    RatPoly r;
    for (const auto& c : p.coefficients()) r.emplace_back(c);
    return r;
}

// remainder of a by b, b nonzero
RatPoly remainder(RatPoly a, const RatPoly& b)
{
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const BigRat f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

int sign_of(const RatPoly& p, const BigRat& x)
{
    BigRat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return sgn(acc);
}

std::vector<RatPoly> sturm_sequence(const IntPoly& p)
{
    std::vector<RatPoly> seq{to_rational(p), to_rational(p.derivative())};
    while (!seq.back().empty()) {
        RatPoly r = remainder(seq[seq.size() - 2], seq.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        seq.push_back(std::move(r));
    }
    return seq;
}

int sign_changes(const std::vector<RatPoly>& seq, const BigRat& x)
{
    int changes = 0, last = 0;
    for (const auto& q : seq) {
        const int s = sign_of(q, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// 2^k with k >= |roots| for every root
long root_bound_exponent(const IntPoly& p)
{
    // Cauchy: |x| < 1 + max |c_i / c_d|
    const BigInt lead = abs(p.leading());
    BigInt m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max<BigInt>(m, abs(p[i]));
    const BigInt bound = m / lead + 2;
    return static_cast<long>(bit_length(bound));
}

std::vector<std::complex<long double>> approximate_roots(const IntPoly& p)
{
    const int d = p.degree();
    std::vector<long double> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = p[i].get_d();
    std::vector<std::complex<long double>> roots;
    if (d == 1) {
        roots.emplace_back(-c[0] / c[1]);
    } else if (d == 2) {
        const long double disc = c[1] * c[1] - 4 * c[2] * c[0];
        if (disc >= 0) {
            const long double q = -0.5L * (c[1] + std::copysign(std::sqrt(disc), c[1]));
            roots.emplace_back(q / c[2]);
            roots.emplace_back(q != 0 ? c[0] / q : 0.0L);
        }
    } else if (d == 3) {
        // depressed cubic t^3 + P t + Q with x = t - b/3
        const long double a = c[2] / c[3], b = c[1] / c[3], e = c[0] / c[3];
        const long double P = b - a * a / 3, Q = 2 * a * a * a / 27 - a * b / 3 + e;
        const long double D = Q * Q / 4 + P * P * P / 27;
        if (D > 0) {
            const long double s = std::sqrt(D);
            roots.emplace_back(std::cbrt(-Q / 2 + s) + std::cbrt(-Q / 2 - s) - a / 3);
        } else if (P < 0) {
            const long double m = 2 * std::sqrt(-P / 3);
            const long double arg = std::clamp(3 * Q / (P * m), -1.0L, 1.0L);
            const long double phi = std::acos(arg) / 3;
            const long double pi = std::acos(-1.0L);
            for (int k = 0; k < 3; ++k) roots.emplace_back(m * std::cos(phi - 2 * pi * k / 3) - a / 3);
        } else {
            roots.emplace_back(-a / 3);
        }
    }
    // Newton polish on the real approximations
    for (auto& z : roots) {
        long double x = z.real();
        for (int it = 0; it < 6; ++it) {
            long double f = 0, df = 0;
            for (int i = d; i >= 0; --i) {
                df = df * x + f;
                f = f * x + c[i];
            }
            if (df == 0) break;
            const long double nx = x - f / df;
            if (!std::isfinite(nx)) break;
            x = nx;
        }
        z = x;
    }
    return roots;
}

int expected_real_roots(const IntPoly& p)
{
    if (p.degree() == 1) return 1;
    if (p.degree() == 2) {
        const BigInt disc = p[1] * p[1] - 4 * p[2] * p[0];
        return sgn(disc) > 0 ? 2 : 0;
    }
    const BigInt &a = p[3], &b = p[2], &c = p[1], &d = p[0];
    const BigInt disc = b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
    return sgn(disc) > 0 ? 3 : 1;
}

bool brackets_sign_change(const IntPoly& p, const RootBracket& b)
{
    if (b.is_exact()) return p.sign_at(b.lo) == 0;
    const int s1 = p.sign_at(b.lo), s2 = p.sign_at(b.hi);
    return s1 != 0 && s2 != 0 && s1 != s2;
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> low_to_high) : coeffs_(std::move(low_to_high)) { trim(coeffs_); }

const BigInt& IntPoly::operator[](int k) const
{
    static const BigInt zero = 0;
    return k >= 0 && k <= degree() ? coeffs_[k] : zero;
}

BigInt IntPoly::eval(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRat IntPoly::eval(const BigRat& x) const
{
    BigRat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPoly::sign_at(const Dyadic& x) const
{
    if (coeffs_.empty()) return 0;
    const BigInt& m = x.mantissa();
    const long e = x.exponent();
    if (e >= 0) {
        BigInt v;
        mpz_mul_2exp(v.get_mpz_t(), m.get_mpz_t(), e);
        return sgn(eval(v));
    }
    // p(m / 2^k) * 2^(k d) = sum c_i m^i 2^(k (d - i))
    const unsigned long k = static_cast<unsigned long>(-e);
    BigInt acc = coeffs_.back(), scaled;
    unsigned long shift = 0;
    for (int i = degree() - 1; i >= 0; --i) {
        shift += k;
        mpz_mul_2exp(scaled.get_mpz_t(), coeffs_[i].get_mpz_t(), shift);
        acc = acc * m + scaled;
    }
    return sgn(acc);
}

Interval IntPoly::eval(const Interval& x) const
{
    Interval acc(0L);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Interval(*it);
    return acc;
}

IntPoly IntPoly::derivative() const
{
    std::vector<BigInt> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(coeffs_[i] * i);
    return IntPoly(std::move(d));
}

BigInt IntPoly::max_abs_coefficient() const
{
    BigInt m = 0;
    for (const auto& c : coeffs_) m = std::max<BigInt>(m, abs(c));
    return m;
}

std::string IntPoly::to_string(const std::string& var) const
{
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        const BigInt a = abs(c);
        if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) out += "-";
        if (a != 1 || i == 0) out += a.get_str();
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

bool operator<(const IntPoly& a, const IntPoly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    return false;
}

int count_roots(const IntPoly& p, const BigRat& a, const BigRat& b)
{
    const auto seq = sturm_sequence(p);
    return sign_changes(seq, a) - sign_changes(seq, b);
}

std::vector<RootBracket> isolate_real_roots_exact(const IntPoly& p)
{
    if (p.degree() < 1) return {};
    const auto seq = sturm_sequence(p);
    const long k = root_bound_exponent(p);
    std::vector<RootBracket> out;
    struct Pending {
        Dyadic lo, hi;
        int count;
    };
    const Dyadic lo0 = -Dyadic(1).ldexp(k), hi0 = Dyadic(1).ldexp(k);
    std::vector<Pending> stack{{lo0, hi0, sign_changes(seq, lo0.to_rational()) - sign_changes(seq, hi0.to_rational())}};
    while (!stack.empty()) {
        Pending cur = stack.back();
        stack.pop_back();
        if (cur.count == 0) continue;
        if (cur.count == 1) {
            const int shi = p.sign_at(cur.hi);
            if (shi == 0) {
                out.push_back({cur.hi, cur.hi});
                continue;
            }
            const int slo = p.sign_at(cur.lo);
            if (slo != 0 && slo != shi) {
                out.push_back({cur.lo, cur.hi});
                continue;
            }
        }
        const Dyadic mid = (cur.lo + cur.hi).ldexp(-1);
        const int vm = sign_changes(seq, mid.to_rational());
        const int left = sign_changes(seq, cur.lo.to_rational()) - vm;
        // push right first so the left half is processed first
        stack.push_back({mid, cur.hi, cur.count - left});
        stack.push_back({cur.lo, mid, left});
    }
    std::sort(out.begin(), out.end(), [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });
    return out;
}

std::vector<RootBracket> isolate_real_roots(const IntPoly& p)
{
    if (p.degree() < 1) return {};
    if (p.degree() > 3) return isolate_real_roots_exact(p);
    const int expected = expected_real_roots(p);
    auto approx = approximate_roots(p);
    if (static_cast<int>(approx.size()) != expected) return isolate_real_roots_exact(p);
    std::vector<long double> xs;
    for (const auto& z : approx) xs.push_back(z.real());
    std::sort(xs.begin(), xs.end());
    std::vector<RootBracket> out;
    for (long double x : xs) {
        const Dyadic centre = Dyadic::from_double(static_cast<double>(x));
        if (p.sign_at(centre) == 0) {
            out.push_back({centre, centre});
            continue;
        }
        const double scale = std::max(1.0, std::fabs(static_cast<double>(x)));
        bool found = false;
        for (int bits : {44, 36, 26, 16}) {
            const Dyadic eps = Dyadic::from_double(std::ldexp(scale, -bits));
            RootBracket b{centre - eps, centre + eps};
            if (brackets_sign_change(p, b)) {
                out.push_back(b);
                found = true;
                break;
            }
        }
        if (!found) return isolate_real_roots_exact(p);
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (!(out[i - 1].hi < out[i].lo)) return isolate_real_roots_exact(p);
    return out;
}

RootBracket refine_bracket(const IntPoly& p, RootBracket b, long bits)
{
    if (b.is_exact()) return b;
    const IntPoly dp = p.derivative();
    const int slo = p.sign_at(b.lo);
    auto done = [&](const RootBracket& r) {
        const Dyadic scale = max(Dyadic(1), max(abs(r.lo), abs(r.hi)));
        return r.hi - r.lo <= scale.ldexp(-bits);
    };
    while (!done(b)) {
        // Newton step from the midpoint, accepted only if a sign check confirms it
        const Dyadic mid = (b.lo + b.hi).ldexp(-1);
        const BigRat fm = p.eval(mid.to_rational());
        const BigRat dfm = dp.eval(mid.to_rational());
        if (sgn(dfm) != 0) {
            const BigRat y = mid.to_rational() - fm / dfm;
            const Dyadic width = b.hi - b.lo;
            const long wbits = -width.msb();
            const long prec = std::max<long>(64, 2 * wbits + 16 + (abs(mid).is_zero() ? 0 : std::max(0L, mid.msb())));
            const Dyadic yd = Dyadic::from_rational(y, prec, Rounding::Down);
            // squared-width radius, floored at the target
            const Dyadic scale = max(Dyadic(1), abs(mid));
            Dyadic r = max(Dyadic(1).ldexp(-2 * wbits + 4), scale.ldexp(-bits - 2));
            if (r < width.ldexp(-2)) {
                RootBracket nb{yd - r, yd + r};
                if (b.lo <= nb.lo && nb.hi <= b.hi) {
                    const int s1 = p.sign_at(nb.lo), s2 = p.sign_at(nb.hi);
                    if (s1 == 0) return {nb.lo, nb.lo};
                    if (s2 == 0) return {nb.hi, nb.hi};
                    if (s1 != s2) {
                        b = nb;
                        continue;
                    }
                }
            }
        }
        const int sm = p.sign_at(mid);
        if (sm == 0) return {mid, mid};
        if (sm == slo)
            b.lo = mid;
        else
            b.hi = mid;
    }
    return b;
}

Interval canonical_enclosure(const IntPoly& p, const RootBracket& b, long bits)
{
    if (b.is_exact()) {
        const Dyadic& r = b.lo;
        const Dyadic cell = Dyadic(r.ldexp(bits).floor()).ldexp(-bits);
        if (cell == r) return Interval(r);
        return Interval(cell, cell + Dyadic(1).ldexp(-bits), bits);
    }
    // absolute width below half a cell
    RootBracket r = b;
    const Dyadic target = Dyadic(1).ldexp(-bits - 1);
    while (r.hi - r.lo > target) {
        const long scale_bits = std::max(0L, max(abs(r.lo), abs(r.hi)).msb() + 1);
        r = refine_bracket(p, r, bits + 1 + scale_bits);
        if (r.is_exact()) return canonical_enclosure(p, r, bits);
    }
    const BigInt j = r.lo.ldexp(bits).floor();
    Dyadic cell = Dyadic(j).ldexp(-bits);
    const Dyadic boundary = cell + Dyadic(1).ldexp(-bits);
    if (boundary < r.hi) {
        const int sb = p.sign_at(boundary);
        if (sb == 0) return Interval(boundary);
        if (sb == p.sign_at(r.lo)) cell = boundary;
    }
    if (p.sign_at(cell) == 0) return Interval(cell);
    return Interval(cell, cell + Dyadic(1).ldexp(-bits), bits);
}

}  // namespace cubicmahler::numerics
