#include "doctest.h"

#include <sstream>

#include "cubicmahler/report_io.hpp"

using namespace cubicmahler;
using report_io::ParseError;

TEST_SUITE("report_io")
{
    TEST_CASE("decimal formatting")
    {
        CHECK(report_io::to_decimal(BigRat(0), 5) == "0");
        CHECK(report_io::to_decimal(make_rational(1, 3), 5) == "0.33333");
        CHECK(report_io::to_decimal(make_rational(-2, 3), 3) == "-0.667");
        CHECK(report_io::to_decimal(make_rational(9999, 100), 3) == "100");
        CHECK(report_io::to_decimal(make_rational(1, 1000), 2) == "0.0010");
        CHECK(report_io::to_decimal(BigRat(123456), 3) == "123000");
        CHECK(report_io::to_decimal(make_rational(314159, 100000), 4) == "3.142");
    }

    TEST_CASE("widths round up")
    {
        CHECK(report_io::to_scientific_up(make_rational(3, 100), 2) == "3.0e-2");
        CHECK(report_io::to_scientific_up(make_rational(301, 10000), 2) == "3.1e-2");
        CHECK(report_io::to_scientific_up(make_rational(991, 1000), 2) == "1.0e0");
        CHECK(report_io::to_scientific_up(BigRat(0), 2) == "0");
        CHECK_THROWS(report_io::to_scientific_up(BigRat(-1), 2));
    }

    TEST_CASE("round trips")
    {
        const auto rows = report_io::make_rows(search::tabulate(BigInt(110)));
        REQUIRE(rows.size() >= 5);
        CHECK(rows[0].measure.rfind("1.32471795724474602", 0) == 0);

        std::ostringstream csv;
        report_io::write_csv(csv, rows);
        std::istringstream csv_in(csv.str());
        const auto back = report_io::read_csv(csv_in);
        CHECK(back == rows);
        std::ostringstream csv2;
        report_io::write_csv(csv2, back);
        CHECK(csv2.str() == csv.str());

        std::ostringstream json;
        report_io::write_json(json, rows);
        std::istringstream json_in(json.str());
        CHECK(report_io::read_json(json_in) == rows);
    }

    TEST_CASE("malformed input")
    {
        std::istringstream header("disc,r1\n");
        CHECK_THROWS_AS(report_io::read_csv(header), ParseError);

        std::istringstream short_row(report_io::csv_header() + "\n-23,1,1\n");
        CHECK_THROWS_AS(report_io::read_csv(short_row), ParseError);

        std::istringstream bad_flag(report_io::csv_header() +
                                    "\n-23,1,1,2,1,0,-1,-1,0,1,0,1,0,-1,-1,1.3,1e-40,1,1\n");
        CHECK_THROWS_AS(report_io::read_csv(bad_flag), ParseError);

        std::istringstream not_json("{");
        CHECK_THROWS_AS(report_io::read_json(not_json), ParseError);
        std::istringstream missing("[{\"disc\": -23}]");
        CHECK_THROWS_AS(report_io::read_json(missing), ParseError);
    }
}
