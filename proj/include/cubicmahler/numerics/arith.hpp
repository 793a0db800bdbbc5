#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "cubicmahler/numerics/bigint.hpp"

namespace cubicmahler::numerics {

/// Raised when Pollard rho gives up on a composite cofactor.
class FactorizationError : public std::runtime_error {
public:
    explicit FactorizationError(const BigInt& n)
        : std::runtime_error("factorization failed for " + n.get_str()), value_(n)
    {
    }
    const BigInt& value() const { return value_; }

private:
    BigInt value_;
};

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;
};

/// Deterministic Miller-Rabin on the first thirteen prime bases, which is
/// exact below 3.3e24. Larger inputs fall back to GMP's probable-prime test.
bool is_prime(const BigInt& n);

/// Factorization of |n| into ascending prime powers; n != 0.
/// Trial division to 2^16, then Brent's variant of Pollard rho.
std::vector<PrimePower> factor(const BigInt& n);

/// True iff no prime square divides m; |m| >= 1.
bool squarefree(const BigInt& m);

/// Largest s with s^2 | n.
BigInt largest_square_divisor(const BigInt& n);

/// All positive divisors of |n| in ascending order; n != 0.
std::vector<BigInt> divisors(const BigInt& n);

}  // namespace cubicmahler::numerics
