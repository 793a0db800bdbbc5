#include "doctest.h"

#include "cubicmahler/fieldgen.hpp"
#include "cubicmahler/mahler.hpp"

using namespace cubicmahler;
using numerics::CertifiedReal;
using numerics::Ordering;

TEST_SUITE("mahler")
{
    TEST_CASE("characteristic polynomial of a + b theta over x^3 - p")
    {
        for (long p : {2L, 3L, 5L, 7L}) {
            const CubicField K = fieldgen::field_discriminant(CubicPolynomial::monic(0, 0, -p));
            for (long a = -3; a <= 3; ++a)
                for (long b = -3; b <= 3; ++b) {
                    const BigInt A(a), B(b);
                    const CubicPolynomial expect =
                        CubicPolynomial::monic(-3 * A, 3 * A * A, -(A * A * A + B * B * B * p));
                    CHECK(mahler::char_poly(Vector3<BigInt>(A, B, BigInt(0)), K) == expect);
                }
        }
    }

    TEST_CASE("characteristic polynomial of integers and generators")
    {
        const CubicField K = fieldgen::field_discriminant(CubicPolynomial::monic(0, -1, -1));
        CHECK(mahler::char_poly(Vector3<BigInt>(4, 0, 0), K) == CubicPolynomial::from_roots(4, 4, 4));
        CHECK(mahler::char_poly(Vector3<BigInt>(0, 1, 0), K) == K.defining_poly);
    }

    TEST_CASE("primitive elements")
    {
        const CubicField K = fieldgen::field_discriminant(CubicPolynomial::monic(0, -1, -1));
        CHECK_FALSE(mahler::is_primitive(Vector3<BigInt>(7, 0, 0), K));
        CHECK(mahler::is_primitive(Vector3<BigInt>(0, 1, 0), K));
        CHECK(mahler::is_primitive(Vector3<BigInt>(1, -1, 2), K));
    }

    TEST_CASE("measures of small cubics")
    {
        const auto two = mahler::mahler_measure(CubicPolynomial::monic(0, 0, -2));
        CHECK(numerics::compare_strict(two.measure, CertifiedReal(2)) == Ordering::EqualAsExact);

        const auto plastic = mahler::mahler_measure(CubicPolynomial::monic(0, -1, -1));
        CHECK(plastic.measure.approx() == doctest::Approx(1.324717957244746));
        CHECK(plastic.measure_poly == CubicPolynomial::monic(0, -1, -1).to_int_poly());

        const auto h1 = mahler::mahler_measure(CubicPolynomial::monic(1, 0, 1));
        CHECK(h1.measure.approx() == doctest::Approx(1.465571231876768));

        const auto cyc = mahler::mahler_measure(CubicPolynomial::monic(1, -2, -1));
        CHECK(cyc.measure.approx() == doctest::Approx(2.246979603717467));
    }

    TEST_CASE("measures of reducible and cyclotomic input")
    {
        // (x - 1)(x^2 + x + 1): every root on the unit circle
        const auto r = mahler::mahler_measure(CubicPolynomial::monic(0, 0, -1));
        CHECK(r.cyclotomic_factor);
        CHECK(numerics::compare_strict(r.measure, CertifiedReal(1)) == Ordering::EqualAsExact);
        // (x - 3)(x^2 + 1)
        const auto s = mahler::mahler_measure(CubicPolynomial::monic(-3, 1, -3));
        CHECK(numerics::compare_strict(s.measure, CertifiedReal(3)) == Ordering::EqualAsExact);
        // non-monic: 2x^3 - 1, measure 2
        const auto t = mahler::mahler_measure(CubicPolynomial(2, 0, 0, -1));
        CHECK(numerics::compare_strict(t.measure, CertifiedReal(2)) == Ordering::EqualAsExact);
    }

    TEST_CASE("coefficient lower bound never exceeds the measure")
    {
        for (long c2 = -4; c2 <= 4; ++c2)
            for (long c1 = -4; c1 <= 4; ++c1)
                for (long c0 = -4; c0 <= 4; ++c0) {
                    if (c0 == 0) continue;
                    const CubicPolynomial f = CubicPolynomial::monic(c2, c1, c0);
                    const auto m = mahler::mahler_measure(f).measure;
                    const auto o = numerics::compare_strict(CertifiedReal(mahler::coefficient_lower_bound(f)), m);
                    CHECK((o == Ordering::Less || o == Ordering::EqualAsExact));
                }
    }
}
