#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubicmahler/search.hpp"

namespace cubicmahler::report_io {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One tabulated field, as written to CSV and JSON. The measure stays in
/// decimal text so a parsed file re-serializes byte for byte.
struct Row {
    BigInt disc;
    int r1 = 0;
    int r2 = 0;
    bool cyclic = false;
    /// Defining polynomial, leading coefficient first.
    std::array<BigInt, 4> poly;
    /// Witness in integral-basis coordinates.
    std::array<BigInt, 3> witness;
    /// Minimal polynomial of the witness, leading coefficient first.
    std::array<BigInt, 4> witness_poly;
    /// Midpoint of the certified enclosure to 20 significant digits.
    std::string measure;
    /// Enclosure width, rounded up to two significant digits.
    std::string measure_width;
    bool silverman = false;
    bool upper = false;

    friend bool operator==(const Row&, const Row&) = default;
};

Row make_row(const search::SearchReport& report);
std::vector<Row> make_rows(const std::vector<search::SearchReport>& reports);

/// disc,r1,r2,cyclic,c3,c2,c1,c0,w0,w1,w2,m3,m2,m1,m0,measure,measure_width,silverman,upper
std::string csv_header();
void write_csv(std::ostream& out, const std::vector<Row>& rows);
/// Throws ParseError with the line number on malformed input.
std::vector<Row> read_csv(std::istream& in);

/// Array of objects keyed by the CSV column names.
void write_json(std::ostream& out, const std::vector<Row>& rows);
std::vector<Row> read_json(std::istream& in);

/// x rounded to `digits` significant decimal digits, positional notation.
std::string to_decimal(const BigRat& x, int digits);
/// x >= 0 rounded up to `digits` significant digits, as "d.de-N".
std::string to_scientific_up(const BigRat& x, int digits);

enum class PlotClass { Complex, RealNoncyclic, Cyclic };
std::string to_string(PlotClass c);
PlotClass plot_class(const CubicField& K);

/// Writes <prefix>_measure.dat, <prefix>_measure_d14.dat and
/// <prefix>_measure_d12.dat with columns "disc class value", where value is
/// M, M/|D|^(1/4) and M/|D|^(1/2). Returns the paths written.
std::vector<std::string> write_plot_data(const std::string& prefix, const std::vector<search::SearchReport>& reports);

}  // namespace cubicmahler::report_io
