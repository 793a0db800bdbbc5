#include "doctest.h"

#include <sstream>

#include "cubicmahler/families.hpp"

using namespace cubicmahler;
using families::Family;

TEST_SUITE("families")
{
    TEST_CASE("instances")
    {
        const auto s = families::make_instance(Family::Simplest, BigInt(1));
        CHECK(s.poly == CubicPolynomial::monic(1, -4, 1));
        CHECK(s.predicted_poly_disc == 169);
        CHECK(s.field.discriminant == 169);
        CHECK(s.eligible);

        const auto h = families::make_instance(Family::H, BigInt(1));
        CHECK(h.field.discriminant == -31);
        CHECK_FALSE(h.eligible);

        const auto g = families::make_instance(Family::G, BigInt(5));
        CHECK(g.predicted_poly_disc == 25 * 73);
        CHECK(g.squarefree_condition);
        CHECK(g.eligible);
        // 4 * 49 - 27 = 13^2
        CHECK_FALSE(families::make_instance(Family::G, BigInt(7)).eligible);

        const auto k = families::make_instance(Family::Kummer, BigInt(7));
        CHECK(k.k == 2);
        CHECK(k.eligible);
        CHECK(k.field.discriminant == -27 * 49);
    }

    TEST_CASE("parameters outside the family")
    {
        CHECK_THROWS_AS(families::make_instance(Family::Simplest, BigInt(-1)), std::invalid_argument);
        CHECK_THROWS_AS(families::make_instance(Family::G, BigInt(2)), std::invalid_argument);
        CHECK_THROWS_AS(families::make_instance(Family::H, BigInt(0)), std::invalid_argument);
        CHECK_THROWS_AS(families::make_instance(Family::Kummer, BigInt(19)), std::invalid_argument);
        CHECK_THROWS_AS(families::make_instance(Family::Kummer, BigInt(15)), std::invalid_argument);
    }

    TEST_CASE("root intervals")
    {
        CHECK(families::verify_root_intervals(families::make_instance(Family::G, BigInt(7))).holds);
        CHECK(families::verify_root_intervals(families::make_instance(Family::H, BigInt(5))).holds);
        CHECK_FALSE(families::verify_root_intervals(families::make_instance(Family::Simplest, BigInt(0))).applicable);

        // the smallest root lies below -(n + 1 + 1/n)
        const auto s = families::verify_root_intervals(families::make_instance(Family::Simplest, BigInt(10)));
        CHECK_FALSE(s.holds);
        REQUIRE(s.failures.size() == 1);
        CHECK(s.failures[0].rfind("r1", 0) == 0);
    }

    TEST_CASE("bounds on small instances")
    {
        families::Thresholds t;
        t.set(families::Thresholds::kGBound, BigInt(5));
        t.set(families::Thresholds::kKummerUpper, BigInt(2));
        for (const auto& [tag, n] : {std::pair{Family::G, 5L}, {Family::G, 11L}, {Family::Kummer, 5L}, {Family::Kummer, 11L}}) {
            const auto inst = families::make_instance(tag, BigInt(n));
            const auto rep = search::minimal_mahler(inst.field);
            for (const auto& v : families::verify_theorem_bounds(inst, rep, t)) {
                CAPTURE(v.name);
                CHECK(v.asserted);
                CHECK(v.holds);
            }
        }
    }

    TEST_CASE("kummer conjugate identity")
    {
        for (long p : {2L, 3L, 5L, 7L})
            for (long a = -3; a <= 3; ++a)
                for (long b = -3; b <= 3; ++b)
                    CHECK(families::verify_kummer_conjugate_identity(BigInt(a), BigInt(b), BigInt(p)));
    }

    TEST_CASE("squarefree")
    {
        CHECK(families::squarefree(BigInt(1)));
        CHECK(families::squarefree(BigInt(-30)));
        CHECK_FALSE(families::squarefree(BigInt(4 * 9 - 27)));
        CHECK_FALSE(families::squarefree(BigInt(50)));
    }

    TEST_CASE("threshold files")
    {
        std::istringstream in("# comment\n g.theorem_bound = 5  # trailing\n\nh.root_intervals=1\n");
        const auto t = families::Thresholds::parse(in);
        CHECK(t.get("g.theorem_bound") == BigInt(5));
        CHECK(t.get("h.root_intervals") == BigInt(1));
        CHECK_FALSE(t.get("kummer.upper_lemma").has_value());

        std::ostringstream out;
        t.write(out);
        CHECK(out.str() == "g.theorem_bound = 5\nh.root_intervals = 1\n");

        std::istringstream bad1("g.theorem_bound 5\n");
        CHECK_THROWS_AS(families::Thresholds::parse(bad1), std::runtime_error);
        std::istringstream bad2("g.theorem_bound = five\n");
        CHECK_THROWS_AS(families::Thresholds::parse(bad2), std::runtime_error);
    }

    TEST_CASE("first stable parameter")
    {
        const auto all = [](long) { return true; };
        CHECK(families::first_stable_parameter(0, 10, all, [](long n) { return n >= 4; }) == BigInt(4));
        CHECK(families::first_stable_parameter(0, 10, all, [](long n) { return n != 7; }) == BigInt(8));
        CHECK_FALSE(families::first_stable_parameter(0, 10, all, [](long n) { return n < 10; }).has_value());
        // failures at untested parameters are ignored
        CHECK(families::first_stable_parameter(0, 10, [](long n) { return n % 2 == 0; },
                                               [](long n) { return n % 2 == 0 || n < 3; }) == BigInt(0));
    }
}
