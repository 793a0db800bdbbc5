#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "cubicmahler/fieldgen.hpp"
#include "cubicmahler/numerics/arith.hpp"

using namespace cubicmahler;

namespace {

bool is_power_basis(const CubicField& K) { return K.basis == Matrix3<BigRat>::Identity(); }

bool stream_contains(const std::vector<CubicPolynomial>& v, const CubicPolynomial& f)
{
    return std::find(v.begin(), v.end(), f) != v.end();
}

}  // namespace

TEST_SUITE("fieldgen")
{
    TEST_CASE("polynomial stream")
    {
        CHECK(stream_contains(fieldgen::enumerate_polynomials(BigInt(23)), CubicPolynomial::monic(0, -1, -1)));
        CHECK(stream_contains(fieldgen::enumerate_polynomials(BigInt(108)), CubicPolynomial::monic(0, 0, -2)));
        CHECK(fieldgen::enumerate_polynomials(BigInt(1)).empty());
    }

    TEST_CASE("field discriminants of monogenic examples")
    {
        const CubicField a = fieldgen::field_discriminant(CubicPolynomial::monic(0, -1, -1));
        CHECK(a.discriminant == -23);
        CHECK(a.index == 1);
        CHECK(is_power_basis(a));
        CHECK(a.r1 == 1);

        const CubicField b = fieldgen::field_discriminant(CubicPolynomial::monic(0, 0, -2));
        CHECK(b.discriminant == -108);
        CHECK(b.index == 1);
        CHECK(is_power_basis(b));

        const CubicField c = fieldgen::field_discriminant(CubicPolynomial::monic(1, -4, 1));
        CHECK(c.discriminant == 169);
        CHECK(c.index == 1);
        CHECK(c.is_cyclic);
        CHECK(c.r1 == 3);
    }

    TEST_CASE("non-monogenic orders are enlarged")
    {
        // x^3 - 10: index 3, D_K = -300
        const CubicField k10 = fieldgen::field_discriminant(CubicPolynomial::monic(0, 0, -10));
        CHECK(k10.discriminant == -300);
        CHECK(k10.index == 3);
        // x^3 - 19: index 3, D_K = -1083
        const CubicField k19 = fieldgen::field_discriminant(CubicPolynomial::monic(0, 0, -19));
        CHECK(k19.discriminant == -1083);
        // x^3 + 8x^2 + 8: index 8
        const CubicField h8 = fieldgen::field_discriminant(CubicPolynomial::monic(8, 0, 8));
        CHECK(h8.discriminant == -283);
    }

    TEST_CASE("reducible input is rejected")
    {
        CHECK_THROWS_AS(fieldgen::field_discriminant(CubicPolynomial::monic(0, 0, 0)), fieldgen::ReducibleError);
        CHECK_THROWS_AS(fieldgen::field_discriminant(CubicPolynomial::monic(0, -1, 0)), fieldgen::ReducibleError);
    }

    TEST_CASE("canonical keys identify isomorphic fields")
    {
        const auto key = [](const CubicPolynomial& f) {
            return fieldgen::canonical_key(fieldgen::field_discriminant(f));
        };
        // x^3 - x^2 - 2 is not a shift of x^3 - x - 1; D = -44 vs -23
        CHECK(key(CubicPolynomial::monic(0, -1, -1)) != key(CubicPolynomial::monic(-1, 0, -2)));
        // theta + 1 for theta^3 = theta + 1 has minimal polynomial x^3 - 3x^2 + 2x - 1
        CHECK(key(CubicPolynomial::monic(0, -1, -1)) == key(CubicPolynomial::monic(-3, 2, -1)));
        // theta^2 generates the same field: x^3 - 2x^2 + x - 1
        CHECK(key(CubicPolynomial::monic(0, -1, -1)) == key(CubicPolynomial::monic(-2, 1, -1)));
        // conjugate generators of the cyclic field of conductor 7
        CHECK(key(CubicPolynomial::monic(1, -2, -1)) == key(CubicPolynomial::monic(-1, -2, 1)));
        CHECK(key(CubicPolynomial::monic(0, 0, -2)) != key(CubicPolynomial::monic(0, 0, -3)));
    }

    TEST_CASE("small ranges of discriminants")
    {
        const auto fields = fieldgen::enumerate_fields(BigInt(-50), BigInt(50));
        std::vector<long> d;
        for (const auto& K : fields) d.push_back(K.discriminant.get_si());
        CHECK(d == std::vector<long>{-23, -31, -44, 49});

        CHECK(fieldgen::enumerate_fields(BigInt(0), BigInt(48)).empty());

        const auto one = fieldgen::enumerate_keyed_fields(BigInt(-23), BigInt(-23));
        REQUIRE(one.size() == 1);
        CHECK(fieldgen::has_root_in(one[0].field, CubicPolynomial::monic(0, -1, -1)));
    }

    TEST_CASE("enumeration is complete against a brute-force coefficient box")
    {
        // Every cubic field with |D| <= 500 has a generator with small
        // coefficients. Collect the discriminants reached from a box much
        // wider than the reduced search range, and the isomorphism classes
        // by discriminant (no |D| <= 500 carries two cubic fields).
        const long bound = 500;
        std::set<long> brute;
        for (long c2 = -3; c2 <= 3; ++c2)
            for (long c1 = -25; c1 <= 25; ++c1)
                for (long c0 = -40; c0 <= 40; ++c0) {
                    const CubicPolynomial f = CubicPolynomial::monic(c2, c1, c0);
                    const BigInt pd = f.discriminant();
                    if (sgn(pd) == 0 || !f.is_irreducible()) continue;
                    // D_K divides disc(f) with a square cofactor, so a quick
                    // lower bound check skips most polynomials
                    const BigInt sq = numerics::largest_square_divisor(pd);
                    if (abs(pd) / (sq * sq) > bound) continue;
                    const BigInt d = fieldgen::field_discriminant(f).discriminant;
                    if (abs(d) <= bound) brute.insert(d.get_si());
                }
        std::set<long> enumerated;
        const auto fields = fieldgen::enumerate_fields(BigInt(-bound), BigInt(bound));
        for (const auto& K : fields) enumerated.insert(K.discriminant.get_si());
        CHECK(fields.size() == enumerated.size());
        CHECK(brute == enumerated);
    }
}
