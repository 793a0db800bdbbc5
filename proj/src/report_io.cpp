#include "cubicmahler/report_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace cubicmahler::report_io {
namespace {

constexpr int kMeasureDigits = 20;
constexpr int kWidthDigits = 2;
constexpr long kMeasureBits = 128;
constexpr int kPlotDigits = 12;

const std::vector<std::string>& columns()
{
    static const std::vector<std::string> c = {"disc", "r1", "r2", "cyclic", "c3", "c2", "c1", "c0", "w0", "w1",
                                               "w2", "m3", "m2", "m1", "m0", "measure", "measure_width",
                                               "silverman", "upper"};
    return c;
}

BigRat pow10(long k)
{
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return k < 0 ? make_rational(1, p) : BigRat(p);
}

// e with 10^e <= x < 10^(e+1), for x > 0
long decimal_exponent(const BigRat& x)
{
    long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10));
    while (x < pow10(e)) --e;
    while (x >= pow10(e + 1)) ++e;
    return e;
}

// fresh enclosure, independent of how far earlier comparisons refined it
numerics::Interval measure_enclosure(const search::Candidate& c, long bits)
{
    return refine(mahler::mahler_measure(c.char_poly).measure, bits).enclosure();
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(line);
    while (std::getline(is, cur, ',')) out.push_back(cur);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

BigInt parse_int(const std::string& s, const std::string& what)
{
    BigInt v;
    if (s.empty() || v.set_str(s, 10) != 0) throw ParseError("bad integer for " + what + ": '" + s + "'");
    return v;
}

bool parse_flag(const std::string& s, const std::string& what)
{
    if (s == "1") return true;
    if (s == "0") return false;
    throw ParseError("bad flag for " + what + ": '" + s + "'");
}

using Json = nlohmann::ordered_json;

Json int_json(const BigInt& v)
{
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

BigInt json_int(const Json& j, const std::string& what)
{
    if (j.is_number_integer()) return BigInt(j.get<long>());
    if (j.is_string()) return parse_int(j.get<std::string>(), what);
    throw ParseError("bad integer for " + what);
}

}  // namespace

Row make_row(const search::SearchReport& report)
{
    const CubicField& K = report.field;
    Row r;
    r.disc = K.discriminant;
    r.r1 = K.r1;
    r.r2 = K.r2;
    r.cyclic = K.is_cyclic;
    r.poly = K.defining_poly.coefficients();
    for (int i = 0; i < 3; ++i) r.witness[i] = report.witness.coords(i);
    r.witness_poly = report.witness.char_poly.coefficients();
    const numerics::Interval m = measure_enclosure(report.witness, kMeasureBits);
    r.measure = to_decimal(m.midpoint().to_rational(), kMeasureDigits);
    r.measure_width = to_scientific_up(m.width().to_rational(), kWidthDigits);
    r.silverman = report.bound_checks.silverman;
    r.upper = report.bound_checks.upper;
    return r;
}

std::vector<Row> make_rows(const std::vector<search::SearchReport>& reports)
{
    std::vector<Row> rows;
    rows.reserve(reports.size());
    for (const auto& rep : reports) rows.push_back(make_row(rep));
    return rows;
}

std::string to_decimal(const BigRat& x, int digits)
{
    if (sgn(x) == 0) return "0";
    const BigRat ax = abs(x);
    long e = decimal_exponent(ax);
    BigInt s = round_nearest(BigRat(ax * pow10(digits - 1 - e)));
    if (BigRat(s) == pow10(digits)) {
        s /= 10;
        ++e;
    }
    const std::string d = s.get_str();
    std::string out = sgn(x) < 0 ? "-" : "";
    const long point = e + 1;
    if (point <= 0) {
        out += "0." + std::string(static_cast<std::size_t>(-point), '0') + d;
    } else if (point >= static_cast<long>(d.size())) {
        out += d + std::string(static_cast<std::size_t>(point - static_cast<long>(d.size())), '0');
    } else {
        out += d.substr(0, static_cast<std::size_t>(point)) + "." + d.substr(static_cast<std::size_t>(point));
    }
    return out;
}

std::string to_scientific_up(const BigRat& x, int digits)
{
    if (sgn(x) < 0) throw std::invalid_argument("to_scientific_up: negative value");
    if (sgn(x) == 0) return "0";
    long e = decimal_exponent(x);
    BigInt s = ceil(BigRat(x * pow10(digits - 1 - e)));
    if (BigRat(s) == pow10(digits)) {
        s /= 10;
        ++e;
    }
    const std::string d = s.get_str();
    std::string out = d.substr(0, 1);
    if (d.size() > 1) out += "." + d.substr(1);
    return out + "e" + std::to_string(e);
}

std::string csv_header()
{
    std::string h;
    for (const auto& c : columns()) h += (h.empty() ? "" : ",") + c;
    return h;
}

void write_csv(std::ostream& out, const std::vector<Row>& rows)
{
    out << csv_header() << '\n';
    for (const Row& r : rows) {
        out << r.disc << ',' << r.r1 << ',' << r.r2 << ',' << (r.cyclic ? 1 : 0);
        for (const auto& c : r.poly) out << ',' << c;
        for (const auto& c : r.witness) out << ',' << c;
        for (const auto& c : r.witness_poly) out << ',' << c;
        out << ',' << r.measure << ',' << r.measure_width << ',' << (r.silverman ? 1 : 0) << ','
            << (r.upper ? 1 : 0) << '\n';
    }
}

std::vector<Row> read_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != csv_header()) throw ParseError("line 1: unexpected CSV header");
    std::vector<Row> rows;
    for (long lineno = 2; std::getline(in, line); ++lineno) {
        if (line.empty()) continue;
        const auto f = split(line);
        if (f.size() != columns().size())
            throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(columns().size()) +
                             " fields");
        try {
            Row r;
            r.disc = parse_int(f[0], "disc");
            r.r1 = static_cast<int>(parse_int(f[1], "r1").get_si());
            r.r2 = static_cast<int>(parse_int(f[2], "r2").get_si());
            r.cyclic = parse_flag(f[3], "cyclic");
            for (int i = 0; i < 4; ++i) r.poly[i] = parse_int(f[4 + i], columns()[4 + i]);
            for (int i = 0; i < 3; ++i) r.witness[i] = parse_int(f[8 + i], columns()[8 + i]);
            for (int i = 0; i < 4; ++i) r.witness_poly[i] = parse_int(f[11 + i], columns()[11 + i]);
            r.measure = f[15];
            r.measure_width = f[16];
            r.silverman = parse_flag(f[17], "silverman");
            r.upper = parse_flag(f[18], "upper");
            rows.push_back(std::move(r));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return rows;
}

void write_json(std::ostream& out, const std::vector<Row>& rows)
{
    Json arr = Json::array();
    for (const Row& r : rows) {
        Json o;
        o["disc"] = int_json(r.disc);
        o["r1"] = r.r1;
        o["r2"] = r.r2;
        o["cyclic"] = r.cyclic;
        for (int i = 0; i < 4; ++i) o[columns()[4 + i]] = int_json(r.poly[i]);
        for (int i = 0; i < 3; ++i) o[columns()[8 + i]] = int_json(r.witness[i]);
        for (int i = 0; i < 4; ++i) o[columns()[11 + i]] = int_json(r.witness_poly[i]);
        o["measure"] = r.measure;
        o["measure_width"] = r.measure_width;
        o["silverman"] = r.silverman;
        o["upper"] = r.upper;
        arr.push_back(std::move(o));
    }
    out << arr.dump(2) << '\n';
}

std::vector<Row> read_json(std::istream& in)
{
    Json arr;
    try {
        in >> arr;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("expected a JSON array");
    std::vector<Row> rows;
    for (const auto& o : arr) {
        try {
            Row r;
            r.disc = json_int(o.at("disc"), "disc");
            r.r1 = o.at("r1").get<int>();
            r.r2 = o.at("r2").get<int>();
            r.cyclic = o.at("cyclic").get<bool>();
            for (int i = 0; i < 4; ++i) r.poly[i] = json_int(o.at(columns()[4 + i]), columns()[4 + i]);
            for (int i = 0; i < 3; ++i) r.witness[i] = json_int(o.at(columns()[8 + i]), columns()[8 + i]);
            for (int i = 0; i < 4; ++i) r.witness_poly[i] = json_int(o.at(columns()[11 + i]), columns()[11 + i]);
            r.measure = o.at("measure").get<std::string>();
            r.measure_width = o.at("measure_width").get<std::string>();
            r.silverman = o.at("silverman").get<bool>();
            r.upper = o.at("upper").get<bool>();
            rows.push_back(std::move(r));
        } catch (const Json::exception& e) {
            throw ParseError(std::string("row ") + std::to_string(rows.size()) + ": " + e.what());
        }
    }
    return rows;
}

std::string to_string(PlotClass c)
{
    switch (c) {
    case PlotClass::Complex:
        return "complex";
    case PlotClass::RealNoncyclic:
        return "real_noncyclic";
    case PlotClass::Cyclic:
        return "cyclic";
    }
    return "";
}

PlotClass plot_class(const CubicField& K)
{
    if (K.r2 > 0) return PlotClass::Complex;
    return K.is_cyclic ? PlotClass::Cyclic : PlotClass::RealNoncyclic;
}

std::vector<std::string> write_plot_data(const std::string& prefix, const std::vector<search::SearchReport>& reports)
{
    const std::vector<std::pair<std::string, unsigned>> series = {{"_measure.dat", 0}, {"_measure_d14.dat", 4},
                                                                  {"_measure_d12.dat", 2}};
    std::vector<std::string> paths;
    for (const auto& [suffix, root] : series) {
        const std::string path = prefix + suffix;
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << "# disc class value\n";
        for (const auto& rep : reports) {
            numerics::CertifiedReal v = mahler::mahler_measure(rep.witness.char_poly).measure;
            if (root != 0) v = v / nth_root(numerics::CertifiedReal(BigInt(abs(rep.field.discriminant))), root);
            const auto enc = refine(v, 64).enclosure();
            out << rep.field.discriminant << ' ' << to_string(plot_class(rep.field)) << ' '
                << to_decimal(enc.midpoint().to_rational(), kPlotDigits) << '\n';
        }
        if (!out) throw std::runtime_error("error writing " + path);
        paths.push_back(path);
    }
    return paths;
}

}  // namespace cubicmahler::report_io
