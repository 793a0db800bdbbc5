#include "doctest.h"

#include <random>

#include "cubicmahler/embed.hpp"
#include "cubicmahler/fieldgen.hpp"

using namespace cubicmahler;
using numerics::CertifiedReal;
using numerics::Ordering;

namespace {

bool close(const CertifiedReal& x, const CertifiedReal& y)
{
    const auto d = refine(x - y, 100).enclosure();
    return d.contains_zero() && d.width() <= numerics::Dyadic(1).ldexp(-90);
}

}  // namespace

TEST_SUITE("embed")
{
    TEST_CASE("three real roots in ascending order")
    {
        const auto s = embed::cubic_roots(CubicPolynomial::monic(0, -3, 1));
        REQUIRE(s.r1 == 3);
        CHECK(s.real_roots[0].approx() == doctest::Approx(-1.8793852415718));
        CHECK(s.real_roots[1].approx() == doctest::Approx(0.3472963553339));
        CHECK(s.real_roots[2].approx() == doctest::Approx(1.5320888862380));
    }

    TEST_CASE("complex pair of x^3 - 2")
    {
        const auto s = embed::cubic_roots(CubicPolynomial::monic(0, 0, -2));
        REQUIRE(s.r1 == 1);
        CHECK(s.real_roots[0].approx() == doctest::Approx(1.2599210498949));
        CHECK(close(s.tau_abs2, square(s.real_roots[0])));
        CHECK(s.tau_im.hi().sign() < 0);
    }

    TEST_CASE("repeated roots are rejected")
    {
        CHECK_THROWS_AS(embed::cubic_roots(CubicPolynomial::monic(0, 0, 0)), std::invalid_argument);
    }

    TEST_CASE("embedding of 1, theta and 0")
    {
        const CubicField K2 = fieldgen::field_discriminant(CubicPolynomial::monic(0, 0, -2));
        const auto r2 = embed::cubic_roots(K2.defining_poly);
        const auto one = embed::minkowski(Vector3<BigInt>(1, 0, 0), K2, r2);
        CHECK(close(one(0), CertifiedReal(1)));
        CHECK(close(one(1), CertifiedReal(1)));
        CHECK(close(one(2), CertifiedReal(0)));
        const auto zero = embed::minkowski(Vector3<BigInt>(0, 0, 0), K2, r2);
        for (int i = 0; i < 3; ++i) CHECK(close(zero(i), CertifiedReal(0)));

        // theta <1, -1/2, -sqrt(3)/2> for x^3 - 5, with Im tau < 0
        const CubicField K5 = fieldgen::field_discriminant(CubicPolynomial::monic(0, 0, -5));
        const auto r5 = embed::cubic_roots(K5.defining_poly);
        const auto th = embed::minkowski(Vector3<BigInt>(0, 1, 0), K5, r5);
        const CertifiedReal& t = r5.real_roots[0];
        CHECK(close(th(0), t));
        CHECK(close(th(1), -t / CertifiedReal(2)));
        CHECK(close(th(2), -t * sqrt(CertifiedReal(3)) / CertifiedReal(2)));
    }

    TEST_CASE("squared length of theta for x^3 - 2")
    {
        const CubicField K = fieldgen::field_discriminant(CubicPolynomial::monic(0, 0, -2));
        const auto r = embed::cubic_roots(K.defining_poly);
        const auto v = embed::minkowski(Vector3<BigInt>(0, 1, 0), K, r);
        // one real and one complex coordinate pair, each of modulus 2^(1/3)
        CHECK(close(embed::squared_norm(v), CertifiedReal(2) * square(r.real_roots[0])));
        CHECK(close(embed::conjugate_square_sum(Vector3<BigRat>(0, 1, 0), r), CertifiedReal(3) * square(r.real_roots[0])));
        CHECK(embed::norm_measure_bounds_check(Vector3<BigInt>(0, 1, 0), K, r));
        CHECK(embed::norm_measure_bounds_check(Vector3<BigInt>(1, 0, 0), K, r));
    }

    TEST_CASE("norm and measure bounds for random elements")
    {
        const auto fields = fieldgen::enumerate_fields(BigInt(-700), BigInt(700));
        REQUIRE(fields.size() >= 50);
        std::mt19937_64 rng(20240611);
        std::uniform_int_distribution<long> coord(-6, 6);
        int checked = 0;
        for (std::size_t i = 0; i < 50; ++i) {
            const auto r = embed::cubic_roots(fields[i].defining_poly);
            for (int k = 0; k < 8; ++k) {
                const Vector3<BigInt> x(coord(rng), coord(rng), coord(rng));
                if (x.isZero()) continue;
                CHECK(embed::norm_measure_bounds_check(x, fields[i], r));
                ++checked;
            }
        }
        CHECK(checked > 350);
    }
}
