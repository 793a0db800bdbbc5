#include "cubicmahler/numerics/arith.hpp"

#include <algorithm>
#include <array>

namespace cubicmahler::numerics {
namespace {

constexpr unsigned long kTrialLimit = 1UL << 16;

const std::vector<unsigned long>& small_primes()
{
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> sieve(kTrialLimit + 1, true);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= kTrialLimit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= kTrialLimit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

BigInt powmod(const BigInt& b, const BigInt& e, const BigInt& m)
{
    BigInt r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool miller_rabin_witness(const BigInt& n, const BigInt& d, unsigned s, unsigned long a)
{
    BigInt x = powmod(BigInt(a), d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

BigInt pollard_brent(const BigInt& n, unsigned long seed)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    BigInt y = seed % n, c = (seed * 7 + 3) % n, m = 128;
    BigInt g = 1, r = 1, q = 1, x, ys;
    auto step = [&](const BigInt& v) -> BigInt { return (v * v + c) % n; };
    while (g == 1) {
        x = y;
        for (BigInt i = 0; i < r; ++i) y = step(y);
        BigInt k = 0;
        while (k < r && g == 1) {
            ys = y;
            BigInt lim = std::min<BigInt>(m, r - k);
            for (BigInt i = 0; i < lim; ++i) {
                y = step(y);
                q = q * abs(x - y) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
        if (r > BigInt(1) << 24) return n;
    }
    if (g == n) {
        do {
            ys = step(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g;
}

void factor_into(const BigInt& n, std::vector<BigInt>& out)
{
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    BigInt root;
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k < bit_length(n); ++k) {
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                std::vector<BigInt> sub;
                factor_into(root, sub);
                for (unsigned long i = 0; i < k; ++i) out.insert(out.end(), sub.begin(), sub.end());
                return;
            }
        }
    }
    for (unsigned long seed = 2; seed < 64; ++seed) {
        BigInt d = pollard_brent(n, seed);
        if (d != 1 && d != n) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
    throw FactorizationError(n);
}

}  // namespace

bool is_prime(const BigInt& n)
{
    if (n < 2) return false;
    static constexpr std::array<unsigned long, 13> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned long p : bases) {
        if (n == p) return true;
        if (divides(BigInt(p), n)) return false;
    }
    static const BigInt deterministic_bound("3317044064679887385961981");
    if (n >= deterministic_bound) return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
    BigInt d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    for (unsigned long a : bases)
        if (miller_rabin_witness(n, d, s, a)) return false;
    return true;
}

std::vector<PrimePower> factor(const BigInt& n_in)
{
    if (n_in == 0) throw std::invalid_argument("factor: zero has no factorization");
    BigInt n = abs(n_in);
    std::vector<PrimePower> result;
    for (unsigned long p : small_primes()) {
        if (BigInt(p) * p > n) break;
        if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
        PrimePower pp{BigInt(p), 0};
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++pp.exponent;
        }
        result.push_back(pp);
    }
    if (n > 1) {
        std::vector<BigInt> big;
        if (n <= BigInt(kTrialLimit) * kTrialLimit)
            big.push_back(n);
        else
            factor_into(n, big);
        std::sort(big.begin(), big.end());
        for (const auto& p : big) {
            if (!result.empty() && result.back().prime == p)
                ++result.back().exponent;
            else
                result.push_back({p, 1});
        }
    }
    std::sort(result.begin(), result.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return result;
}

bool squarefree(const BigInt& m)
{
    for (const auto& pp : factor(m))
        if (pp.exponent >= 2) return false;
    return true;
}

BigInt largest_square_divisor(const BigInt& n)
{
    BigInt s = 1;
    for (const auto& pp : factor(n)) s *= pow(pp.prime, pp.exponent / 2);
    return s;
}

std::vector<BigInt> divisors(const BigInt& n)
{
    std::vector<BigInt> divs{1};
    for (const auto& pp : factor(n)) {
        const std::size_t base = divs.size();
        BigInt pk = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pk *= pp.prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace cubicmahler::numerics
