#include "cubicmahler/families.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cubicmahler/embed.hpp"
#include "cubicmahler/numerics/arith.hpp"

namespace cubicmahler::families {
namespace {

using numerics::Ordering;

bool less(const CertifiedReal& a, const CertifiedReal& b)
{
    return numerics::compare_strict(a, b) == Ordering::Less;
}

bool less_equal(const CertifiedReal& a, const CertifiedReal& b)
{
    const auto o = numerics::compare_strict(a, b);
    return o == Ordering::Less || o == Ordering::EqualAsExact;
}

CertifiedReal rat(const BigInt& num, const BigInt& den = 1) { return CertifiedReal(make_rational(num, den)); }

// lo < x < hi, recording a failure line otherwise
void check_open(RootIntervalCheck& out, const std::string& label, const CertifiedReal& x, const BigRat& lo,
                const BigRat& hi)
{
    if (less(CertifiedReal(lo), x) && less(x, CertifiedReal(hi))) return;
    std::ostringstream os;
    os << label << " ~ " << x.approx() << " not in (" << lo.get_str() << ", " << hi.get_str() << ")";
    out.failures.push_back(os.str());
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool at_or_above(const Thresholds& t, const char* key, const BigInt& n)
{
    const auto v = t.get(key);
    return v && n >= *v;
}

}  // namespace

std::string to_string(Family f)
{
    switch (f) {
    case Family::Simplest:
        return "simplest";
    case Family::G:
        return "g";
    case Family::H:
        return "h";
    case Family::Kummer:
        return "kummer";
    }
    return "";
}

std::optional<Family> parse_family(const std::string& name)
{
    for (Family f : {Family::Simplest, Family::G, Family::H, Family::Kummer})
        if (to_string(f) == name) return f;
    return std::nullopt;
}

bool squarefree(const BigInt& m) { return numerics::squarefree(m); }

FamilyInstance make_instance(Family tag, const BigInt& n)
{
    FamilyInstance inst;
    inst.tag = tag;
    inst.parameter = n;
    const BigInt n2 = n * n;
    switch (tag) {
    case Family::Simplest:
        if (sgn(n) < 0) throw std::invalid_argument("simplest family needs n >= 0");
        inst.poly = CubicPolynomial::monic(n, -(n + 3), 1);
        inst.predicted_poly_disc = (n2 + 3 * n + 9) * (n2 + 3 * n + 9);
        break;
    case Family::G:
        if (n <= 2) throw std::invalid_argument("family g needs n > 2");
        inst.poly = CubicPolynomial::monic(-n, 0, n);
        inst.predicted_poly_disc = n2 * (4 * n2 - 27);
        inst.squarefree_condition = squarefree(4 * n2 - 27);
        break;
    case Family::H:
        if (n < 1) throw std::invalid_argument("family h needs n >= 1");
        inst.poly = CubicPolynomial::monic(n, 0, n);
        inst.predicted_poly_disc = -n2 * (4 * n2 + 27);
        inst.squarefree_condition = squarefree(4 * n2 + 27);
        break;
    case Family::Kummer: {
        if (n < 2 || !numerics::is_prime(n)) throw std::invalid_argument("kummer family needs a prime p");
        const BigInt r = mod(n, 9);
        if (r == 1 || r == 8) throw std::invalid_argument("kummer family needs p != +-1 mod 9");
        inst.poly = CubicPolynomial::monic(0, 0, -n);
        inst.predicted_poly_disc = -27 * n2;
        inst.residue_condition = true;
        break;
    }
    }
    inst.parameter_prime = n >= 2 && numerics::is_prime(n);
    inst.field = fieldgen::field_discriminant(inst.poly);
    switch (tag) {
    case Family::Simplest:
        inst.eligible = inst.field.discriminant == inst.predicted_poly_disc;
        break;
    case Family::G:
    case Family::H:
        inst.eligible = inst.parameter_prime && inst.squarefree_condition;
        break;
    case Family::Kummer:
        inst.eligible = inst.parameter_prime && inst.residue_condition;
        break;
    }
    if (tag == Family::Kummer) {
        inst.theta = embed::cubic_roots(inst.poly).real_roots[0];
        // theta is irrational, so refinement separates it from k +- 1/2
        for (long bits = 64;; bits *= 2) {
            inst.theta = refine(inst.theta, bits);
            const BigInt lo = round_nearest(inst.theta.lo().to_rational());
            const BigInt hi = round_nearest(inst.theta.hi().to_rational());
            if (lo == hi) {
                inst.k = lo;
                break;
            }
        }
        inst.alpha = inst.theta - CertifiedReal(inst.k);
    }
    return inst;
}

RootIntervalCheck verify_root_intervals(const FamilyInstance& inst)
{
    RootIntervalCheck out;
    const BigInt& n = inst.parameter;
    if (inst.tag == Family::Kummer) {
        check_open(out, "theta - k", inst.alpha, BigRat(-1, 2), BigRat(1, 2));
        out.holds = out.failures.empty();
        return out;
    }
    if (inst.tag == Family::Simplest && sgn(n) == 0) {
        out.applicable = false;
        return out;
    }
    const auto roots = embed::cubic_roots(inst.poly);
    const BigRat inv = make_rational(1, n);
    const BigRat nr(n);
    switch (inst.tag) {
    case Family::Simplest:
        if (roots.r1 != 3) {
            out.failures.push_back("expected three real roots");
            break;
        }
        check_open(out, "r1", roots.real_roots[0], -(1 + nr + inv), -(1 + nr));
        check_open(out, "r2", roots.real_roots[1], BigRat(0), inv);
        check_open(out, "r3", roots.real_roots[2], BigRat(1), 1 + inv);
        break;
    case Family::G:
        if (roots.r1 != 3) {
            out.failures.push_back("expected three real roots");
            break;
        }
        check_open(out, "r1", roots.real_roots[0], BigRat(-1), -1 + inv);
        check_open(out, "r2", roots.real_roots[1], BigRat(1), 1 + inv);
        check_open(out, "r3", roots.real_roots[2], nr - 2 * inv, nr);
        break;
    case Family::H:
        check_open(out, "r", roots.real_roots[0], -nr - inv, -nr);
        break;
    case Family::Kummer:
        break;
    }
    out.holds = out.failures.empty();
    return out;
}

std::optional<BigInt> Thresholds::get(const std::string& key) const
{
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

Thresholds Thresholds::parse(std::istream& in)
{
    Thresholds t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("thresholds line " + std::to_string(lineno) + ": missing '='");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        BigInt v;
        if (key.empty() || value.empty() || v.set_str(value, 10) != 0)
            throw std::runtime_error("thresholds line " + std::to_string(lineno) + ": expected key = integer");
        t.values_[key] = v;
    }
    return t;
}

Thresholds Thresholds::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open thresholds file " + path);
    return parse(in);
}

void Thresholds::write(std::ostream& out) const
{
    for (const auto& [k, v] : values_) out << k << " = " << v << '\n';
}

CertifiedReal kummer_shift_measure(const FamilyInstance& inst)
{
    return mahler::mahler_measure(inst.poly.shifted(inst.k)).measure;
}

std::vector<BoundVerdict> verify_theorem_bounds(const FamilyInstance& inst, const search::SearchReport& report,
                                                const Thresholds& thresholds)
{
    const CertifiedReal& m = report.minimal_measure();
    const BigInt d = abs(report.field.discriminant);
    const CertifiedReal m3 = m * square(m);
    const CertifiedReal m4 = square(square(m));
    const BigInt& n = inst.parameter;
    std::vector<BoundVerdict> out;
    switch (inst.tag) {
    case Family::Simplest:
        // M < 2^(1/2) |D|^(1/4)
        out.push_back({"M < 2^(1/2) |D|^(1/4)", inst.eligible && at_or_above(thresholds, Thresholds::kSimplestBound, n),
                       less(m4, rat(4 * d))});
        break;
    case Family::G:
        out.push_back({"M < |D|^(1/4)", inst.eligible && at_or_above(thresholds, Thresholds::kGBound, n),
                       less(m4, rat(d))});
        break;
    case Family::H:
        out.push_back({"M < 2^(-1/2) |D|^(1/4)", inst.eligible && at_or_above(thresholds, Thresholds::kHBound, n),
                       less(rat(4) * m4, rat(d))});
        break;
    case Family::Kummer: {
        const BigInt p2 = n * n;
        out.push_back({"(1/30) |D|^(1/3) < M", inst.eligible, less(rat(d), rat(27000) * m3)});
        out.push_back({"M < (4/3) |D|^(1/3)", inst.eligible, less(rat(27) * m3, rat(64 * d))});
        const CertifiedReal ms = kummer_shift_measure(inst);
        out.push_back({"M(theta - k) <= (4/3) |D|^(1/3)",
                       inst.eligible && at_or_above(thresholds, Thresholds::kKummerUpper, n),
                       less_equal(ms * square(ms), rat(64 * p2))});
        out.push_back({"M >= theta^2 / 10", inst.eligible, less_equal(rat(p2), rat(1000) * m3)});
        break;
    }
    }
    return out;
}

bool verify_kummer_conjugate_identity(const BigInt& a, const BigInt& b, const BigInt& p)
{
    const auto roots = embed::cubic_roots(CubicPolynomial::monic(0, 0, -p));
    const embed::MinkowskiVector v = embed::minkowski_power(Vector3<BigRat>(BigRat(a), BigRat(b), BigRat(0)), roots);
    const CertifiedReal& theta = roots.real_roots[0];
    const CertifiedReal lhs = refine(square(v(1)) + square(v(2)), 256);
    const CertifiedReal rhs =
        refine(CertifiedReal(BigInt(a * a)) - CertifiedReal(BigInt(a * b)) * theta + CertifiedReal(BigInt(b * b)) * square(theta), 256);
    return lhs.enclosure().overlaps(rhs.enclosure()) && lhs.enclosure().meets_relative_width(100) &&
           rhs.enclosure().meets_relative_width(100);
}

}  // namespace cubicmahler::families
