#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace cubicmahler {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b)
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// n / d in canonical form; d != 0.
inline BigRat make_rational(const BigInt& n, const BigInt& d)
{
    BigRat q(n, d);
    q.canonicalize();
    return q;
}

inline BigInt floor(const BigRat& q) { return floor_div(q.get_num(), q.get_den()); }
inline BigInt ceil(const BigRat& q) { return ceil_div(q.get_num(), q.get_den()); }

/// Nearest integer, halves rounded up.
inline BigInt round_nearest(const BigRat& q) { return floor(q + BigRat(1, 2)); }

inline std::size_t bit_length(const BigInt& a)
{
    return sgn(a) == 0 ? 0 : mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline bool is_perfect_square(const BigInt& a)
{
    return sgn(a) >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline BigInt isqrt(const BigInt& a)
{
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline BigInt pow(const BigInt& base, unsigned long e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b)
{
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt mod(const BigInt& a, const BigInt& m)
{
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool divides(const BigInt& d, const BigInt& n)
{
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }
inline std::string to_string(const BigRat& a) { return a.get_str(); }

}  // namespace cubicmahler
