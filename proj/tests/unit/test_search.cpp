#include "doctest.h"

#include <sstream>

#include "cubicmahler/report_io.hpp"
#include "cubicmahler/search.hpp"

using namespace cubicmahler;
using numerics::CertifiedReal;
using numerics::Ordering;

namespace {

CubicField field_of(long c2, long c1, long c0)
{
    return fieldgen::field_discriminant(CubicPolynomial::monic(c2, c1, c0));
}

std::string csv_of(const std::vector<search::SearchReport>& reports)
{
    std::ostringstream os;
    report_io::write_csv(os, report_io::make_rows(reports));
    return os.str();
}

}  // namespace

TEST_SUITE("search")
{
    TEST_CASE("smallest complex field")
    {
        const auto rep = search::minimal_mahler(field_of(0, -1, -1));
        CHECK(rep.minimal_measure().approx() == doctest::Approx(1.324717957244746));
        const auto theta = search::evaluate(rep.field, Vector3<BigInt>(0, 1, 0));
        REQUIRE(theta);
        CHECK(numerics::compare_strict(theta->measure, rep.minimal_measure()) == Ordering::EqualAsExact);
        CHECK(rep.bound_checks.all());
    }

    TEST_CASE("pure cubic of discriminant -108")
    {
        const auto rep = search::minimal_mahler(field_of(0, 0, -2));
        CHECK(numerics::compare_strict(rep.minimal_measure(), CertifiedReal(2)) == Ordering::EqualAsExact);
    }

    TEST_CASE("cyclic field of discriminant 49")
    {
        const auto rep = search::minimal_mahler(field_of(1, -2, -1));
        CHECK(rep.field.is_cyclic);
        CHECK(rep.minimal_measure().approx() == doctest::Approx(2.246979603717467));
    }

    TEST_CASE("naive oracle")
    {
        const CubicField K = field_of(0, -1, -1);
        CHECK_FALSE(search::naive_oracle(K, 0).has_value());
        const auto best = search::naive_oracle(K, 3);
        REQUIRE(best);
        CHECK(best->measure.approx() == doctest::Approx(1.324717957244746));
        const auto rep = search::minimal_mahler(K);
        CHECK(search::covering_cube(rep) >= 1);
    }

    TEST_CASE("tabulation of small discriminants")
    {
        const auto reps = search::tabulate(BigInt(50));
        REQUIRE(reps.size() == 4);
        CHECK(reps[0].field.discriminant == -23);
        CHECK(reps[1].field.discriminant == -31);
        CHECK(reps[2].field.discriminant == -44);
        CHECK(reps[3].field.discriminant == 49);
        CHECK(search::tabulate(BigInt(22)).empty());

        search::TabulateOptions real;
        real.signature = search::SignatureFilter::TotallyReal;
        CHECK(search::tabulate(BigInt(50), real).size() == 1);
    }

    TEST_CASE("options that must not change the result")
    {
        const std::string base = csv_of(search::tabulate(BigInt(400)));
        search::TabulateOptions opt;
        opt.jobs = 3;
        opt.search.jobs = 2;
        opt.search.shrink_on_improve = true;
        CHECK(csv_of(search::tabulate(BigInt(400), opt)) == base);
    }
}
