#include "cubicmahler/numerics/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace cubicmahler::numerics {
namespace {

BigInt shift_left(const BigInt& m, unsigned long k)
{
    BigInt r;
    mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), k);
    return r;
}

BigInt shift_right(const BigInt& m, unsigned long k, Rounding dir)
{
    BigInt r;
    if (dir == Rounding::Down)
        mpz_fdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), k);
    else
        mpz_cdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), k);
    return r;
}

BigInt div_rounded(const BigInt& n, const BigInt& d, Rounding dir)
{
    // d > 0
    return dir == Rounding::Down ? floor_div(n, d) : ceil_div(n, d);
}

}  // namespace

void Dyadic::normalize()
{
    if (sgn(mantissa_) == 0) {
        exponent_ = 0;
        return;
    }
    const unsigned long tz = mpz_scan1(mantissa_.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
        exponent_ += static_cast<long>(tz);
    }
}

Dyadic Dyadic::from_double(double v)
{
    if (!std::isfinite(v)) throw std::domain_error("Dyadic::from_double: non-finite input");
    int e = 0;
    const double frac = std::frexp(v, &e);
    const double scaled = std::ldexp(frac, 53);
    return Dyadic(BigInt(static_cast<long>(scaled)), e - 53);
}

Dyadic Dyadic::from_rational(const BigRat& q, long prec, Rounding dir)
{
    const BigInt& num = q.get_num();
    const BigInt& den = q.get_den();
    if (sgn(num) == 0) return Dyadic();
    if (mpz_popcount(den.get_mpz_t()) == 1) {
        const long e = -static_cast<long>(bit_length(den) - 1);
        return Dyadic(num, e).rounded(prec, dir);
    }
    const long k = prec - (static_cast<long>(bit_length(num)) - static_cast<long>(bit_length(den))) + 1;
    if (k >= 0) return Dyadic(div_rounded(shift_left(num, k), den, dir), -k);
    return Dyadic(div_rounded(num, shift_left(den, -k), dir), -k);
}

Dyadic Dyadic::quotient(const Dyadic& a, const Dyadic& b, long prec, Rounding dir)
{
    if (b.is_zero()) throw std::domain_error("Dyadic::quotient: division by zero");
    if (a.is_zero()) return Dyadic();
    const long k = std::max<long>(0, prec - static_cast<long>(bit_length(a.mantissa_)) +
                                         static_cast<long>(bit_length(b.mantissa_)) + 1);
    BigInt n = shift_left(a.mantissa_, k);
    BigInt d = b.mantissa_;
    if (sgn(d) < 0) {
        n = -n;
        d = -d;
    }
    return Dyadic(div_rounded(n, d, dir), a.exponent_ - b.exponent_ - k).rounded(prec, dir);
}

Dyadic Dyadic::nth_root(const Dyadic& x, unsigned n, long prec, Rounding dir)
{
    if (x.sign() < 0) throw std::domain_error("Dyadic::nth_root: negative radicand");
    if (x.is_zero() || n == 1) return x.rounded(prec, dir);
    const long ln = static_cast<long>(n);
    // result ~ 2^(msb/n); scale so the integer root carries prec + 1 bits
    long k = prec + 1 - x.msb() / ln;
    long shift = x.exponent_ + ln * k;
    BigInt radicand;
    bool inexact_radicand = false;
    if (shift >= 0) {
        radicand = shift_left(x.mantissa_, shift);
    } else {
        radicand = shift_right(x.mantissa_, -shift, Rounding::Down);
        inexact_radicand = shift_left(radicand, -shift) != x.mantissa_;
    }
    BigInt root;
    const bool exact = mpz_root(root.get_mpz_t(), radicand.get_mpz_t(), n) != 0 && !inexact_radicand;
    if (dir == Rounding::Up && !exact) root += 1;
    return Dyadic(root, -k).rounded(prec, dir);
}

Dyadic Dyadic::rounded(long prec, Rounding dir) const
{
    const long bits = static_cast<long>(bit_length(mantissa_));
    if (prec <= 0 || bits <= prec) return *this;
    const long drop = bits - prec;
    return Dyadic(shift_right(mantissa_, drop, dir), exponent_ + drop);
}

BigRat Dyadic::to_rational() const
{
    if (exponent_ >= 0) return BigRat(shift_left(mantissa_, exponent_));
    BigRat q(mantissa_, shift_left(BigInt(1), -exponent_));
    q.canonicalize();
    return q;
}

double Dyadic::to_double() const
{
    if (is_zero()) return 0.0;
    long e = 0;
    const double d = mpz_get_d_2exp(&e, mantissa_.get_mpz_t());
    return std::ldexp(d, static_cast<int>(e + exponent_));
}

BigInt Dyadic::floor() const
{
    if (exponent_ >= 0) return shift_left(mantissa_, exponent_);
    return shift_right(mantissa_, -exponent_, Rounding::Down);
}

BigInt Dyadic::ceil() const
{
    if (exponent_ >= 0) return shift_left(mantissa_, exponent_);
    return shift_right(mantissa_, -exponent_, Rounding::Up);
}

std::string Dyadic::to_string() const
{
    return mantissa_.get_str() + "*2^" + std::to_string(exponent_);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.exponent_ <= b.exponent_)
        return Dyadic(a.mantissa_ + shift_left(b.mantissa_, b.exponent_ - a.exponent_), a.exponent_);
    return Dyadic(shift_left(a.mantissa_, a.exponent_ - b.exponent_) + b.mantissa_, b.exponent_);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b)
{
    return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

int compare(const Dyadic& a, const Dyadic& b)
{
    const int sa = a.sign();
    const int sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    // same sign: compare magnitudes via msb first
    const long ma = a.msb();
    const long mb = b.msb();
    if (ma != mb) return (ma < mb ? -1 : 1) * sa;
    const long e = std::min(a.exponent_, b.exponent_);
    const BigInt x = shift_left(a.mantissa_, a.exponent_ - e);
    const BigInt y = shift_left(b.mantissa_, b.exponent_ - e);
    const int c = cmp(x, y);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace cubicmahler::numerics
