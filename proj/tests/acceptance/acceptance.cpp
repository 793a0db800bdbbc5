// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cubicmahler/embed.hpp"
#include "cubicmahler/families.hpp"
#include "cubicmahler/lattice.hpp"
#include "cubicmahler/numerics/arith.hpp"
#include "cubicmahler/report_io.hpp"
#include "cubicmahler/search.hpp"

using namespace cubicmahler;
using numerics::CertifiedReal;
using numerics::Ordering;

namespace {

constexpr long kTableBound = 2000;
constexpr long kOracleBound = 500;
constexpr long kFamilyMax = 50;
constexpr long kFormulaMax = 200;
constexpr std::uint64_t kSeed = 0x5eed2024;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what)
    {
        if (ok) return;
        pass = false;
        if (failures.size() < 5) failures.push_back(what);
    }
};

CertifiedReal num(const BigInt& v) { return CertifiedReal(v); }

bool less(const CertifiedReal& a, const CertifiedReal& b) { return numerics::compare_strict(a, b) == Ordering::Less; }

bool less_equal(const CertifiedReal& a, const CertifiedReal& b)
{
    const auto o = numerics::compare_strict(a, b);
    return o == Ordering::Less || o == Ordering::EqualAsExact;
}

std::string csv_of(const std::vector<search::SearchReport>& reports)
{
    std::ostringstream os;
    report_io::write_csv(os, report_io::make_rows(reports));
    return os.str();
}

std::string disc_label(const BigInt& d) { return "D=" + d.get_str(); }

// Shared tabulation at |D| <= 2000 in exact mode, single worker.
const std::vector<search::SearchReport>& base_table()
{
    static const std::vector<search::SearchReport> table = search::tabulate(BigInt(kTableBound));
    return table;
}

Outcome bound_sandwich()
{
    Outcome out;
    const auto& table = base_table();
    long complex = 0, real = 0;
    for (const auto& rep : table) {
        const CertifiedReal& m = rep.minimal_measure();
        const BigInt d = abs(rep.field.discriminant);
        const CertifiedReal m2 = square(m);
        // 3^(-3/4) |D|^(1/4) <= M  <=>  |D| <= 27 M^4, checked strictly
        out.require(less(num(d), CertifiedReal(27) * square(m2)), disc_label(rep.field.discriminant) + " lower");
        // M <= 2^6 |D|^(1/2)  <=>  M^2 <= 4096 |D|, checked strictly
        out.require(less(m2, num(4096 * d)), disc_label(rep.field.discriminant) + " upper");
        out.require(rep.bound_checks.all(), disc_label(rep.field.discriminant) + " report flags");
        (rep.field.r2 > 0 ? complex : real) += 1;
    }
    out.require(!table.empty(), "empty table");
    out.detail = std::to_string(table.size()) + " fields with |D| <= " + std::to_string(kTableBound) + " (" +
                 std::to_string(real) + " totally real, " + std::to_string(complex) + " complex), strict checks";
    return out;
}

// Exact Gram matrix of phi(1), phi(theta), phi(theta^2) for x^3 - p:
// <phi(theta^i), phi(theta^j)> = p^((i+j)/3) a_ij with a_ii = 2 and
// a_ij = 1/2 otherwise, so |b_k*|^2 = p^(2k/3) det(A_(k+1)) / det(A_k).
BigRat leading_det(int k)
{
    const BigRat two(2), half(1, 2);
    if (k == 1) return two;
    if (k == 2) return two * two - half * half;
    return two * (two * two - half * half) - half * (half * two - half * half) + half * (half * half - two * half);
}

Outcome worked_example()
{
    Outcome out;
    const CubicPolynomial f = CubicPolynomial::monic(0, 0, -5);
    const CubicField K = fieldgen::field_discriminant(f);
    const auto roots = embed::cubic_roots(f);

    lattice::MatrixX<CertifiedReal> rows(3, 3);
    for (int i = 0; i < 3; ++i) {
        Vector3<BigRat> u = Vector3<BigRat>::Zero();
        u(i) = 1;
        rows.row(i) = embed::minkowski_power(u, roots).transpose();
    }
    const auto gs = lattice::gram_schmidt(rows);

    const BigRat c2 = leading_det(2) / leading_det(1);
    const BigRat c3 = leading_det(3) / leading_det(2);
    out.require(c2 == BigRat(15, 8), "exact |b2*|^2 coefficient");
    out.require(c3 == BigRat(9, 5), "exact |b3*|^2 coefficient");

    const CertifiedReal theta = roots.real_roots[0];
    const CertifiedReal theta2 = square(theta);
    const std::vector<CertifiedReal> closed = {CertifiedReal(2), CertifiedReal(BigRat(15, 8)) * theta2,
                                               CertifiedReal(BigRat(9, 5)) * square(theta2)};
    const BigRat tol(1, 1000000000000);
    std::ostringstream lens;
    for (int k = 0; k < 3; ++k) {
        const auto value = refine(gs.norm2[k], 64).enclosure();
        const auto expect = refine(closed[k], 64).enclosure();
        const BigRat lo = value.lo().to_rational();
        const BigRat width = value.width().to_rational();
        out.require(sgn(lo) > 0 && width <= tol * lo, "|b" + std::to_string(k + 1) + "*|^2 width");
        out.require(value.overlaps(expect), "|b" + std::to_string(k + 1) + "*|^2 closed form");
        lens << (k ? ", " : "") << value.approx();
    }
    // |b1*|^2 = |phi(1)|^2 = 1 + 1 + 0 exactly
    out.require(numerics::compare_strict(gs.norm2[0], CertifiedReal(2)) == Ordering::EqualAsExact, "|b1*|^2 = 2");

    // The bound (9/5) theta^4 equals |b3*|^2, so c^2 |b3*|^2 <= |phi(beta)|^2 < bound forces c^2 < 1.
    const BigRat ratio = BigRat(9, 5) / c3;
    BigInt c_max = 0;
    while (BigRat((c_max + 1) * (c_max + 1)) < ratio) ++c_max;
    out.require(c_max == 0, "last coordinate bound");

    // box computation: every lattice point near the bound with c != 0 lies above it
    const CertifiedReal bound = closed[2];
    const auto gs_iv = lattice::gram_schmidt(embed::basis_matrix(K, roots, 128));
    long below = 0;
    lattice::enumerate_ball(gs_iv, refine(bound, 64).enclosure(), [&](long long a, long long b, long long c) {
        if (a == 0 && b == 0 && c == 0) return;
        const Vector3<BigInt> x(static_cast<long>(a), static_cast<long>(b), static_cast<long>(c));
        const CertifiedReal n2 = embed::squared_norm(embed::minkowski(x, K, roots));
        const auto o = numerics::compare_strict(n2, bound);
        if (o == Ordering::Less) {
            ++below;
            out.require(c == 0, "vector below the bound with c != 0");
        } else {
            out.require(o == Ordering::Greater, "undecided norm comparison");
        }
    });
    out.detail = "GS squared lengths " + lens.str() + "; |b1*|^2 = 2; " +
                 std::to_string(below) + " vectors below (9/5) theta^4, all with c = 0";
    return out;
}

Outcome oracle_equivalence()
{
    Outcome out;
    long fields = 0;
    BigInt widest = 0;
    for (const auto& rep : base_table()) {
        if (abs(rep.field.discriminant) > kOracleBound) continue;
        ++fields;
        const BigInt cube = search::covering_cube(rep);
        if (cube > widest) widest = cube;
        const auto best = search::naive_oracle(rep.field, cube.get_si());
        const std::string label = disc_label(rep.field.discriminant);
        if (!best) {
            out.require(false, label + " oracle found nothing");
            continue;
        }
        out.require(best->char_poly == rep.witness.char_poly, label + " witness polynomial");
        out.require(numerics::compare_strict(best->measure, rep.minimal_measure()) == Ordering::EqualAsExact,
                    label + " measure");
    }
    out.detail = std::to_string(fields) + " fields with |D| <= " + std::to_string(kOracleBound) +
                 ", covering cubes up to half-width " + widest.get_str();
    return out;
}

families::Thresholds thresholds()
{
    return families::Thresholds::load(CUBICMAHLER_DEFAULT_THRESHOLDS);
}

Outcome kummer()
{
    Outcome out;
    const auto t = thresholds();
    const auto upper_from = t.get(families::Thresholds::kKummerUpper);
    out.require(upper_from.has_value(), "no kummer.upper_lemma threshold");
    long primes = 0, shifted = 0;
    for (long p = 2; p <= 100; ++p) {
        if (!numerics::is_prime(BigInt(p)) || p % 9 == 1 || p % 9 == 8) continue;
        ++primes;
        const auto inst = families::make_instance(families::Family::Kummer, BigInt(p));
        const std::string label = "p=" + std::to_string(p);
        out.require(inst.field.discriminant == -27 * p * p, label + " discriminant");
        const auto rep = search::minimal_mahler(inst.field);
        const CertifiedReal m3 = rep.minimal_measure() * square(rep.minimal_measure());
        const BigInt d(27 * p * p);
        // (1/30) |D|^(1/3) < M  <=>  |D| < 27000 M^3
        out.require(less(num(d), CertifiedReal(27000) * m3), label + " lower");
        // M < (4/3) |D|^(1/3)  <=>  27 M^3 < 64 |D|
        out.require(less(CertifiedReal(27) * m3, num(64 * d)), label + " upper");
        if (upper_from && p >= *upper_from) {
            ++shifted;
            const CertifiedReal ms = mahler::mahler_measure(inst.poly.shifted(inst.k)).measure;
            out.require(less_equal(CertifiedReal(27) * ms * square(ms), num(64 * d)), label + " M(theta - k)");
        }
    }
    out.detail = std::to_string(primes) + " primes p <= 100; M(theta - k) bound for " + std::to_string(shifted) +
                 " of them (p >= " + (upper_from ? upper_from->get_str() : "?") + ")";
    return out;
}

Outcome family_bounds()
{
    using families::Family;
    Outcome out;
    const auto t = thresholds();
    std::map<std::string, long> asserted;

    // M^4 < k |D| with k = 4, 1 and 1/4
    const std::vector<std::tuple<Family, const char*, BigRat, long>> fams = {
        {Family::Simplest, families::Thresholds::kSimplestBound, BigRat(4), 0},
        {Family::G, families::Thresholds::kGBound, BigRat(1), 3},
        {Family::H, families::Thresholds::kHBound, BigRat(1, 4), 1}};
    for (const auto& [tag, key, factor, first] : fams) {
        const auto from = t.get(key);
        out.require(from.has_value(), std::string("missing threshold ") + key);
        for (long n = first; n <= kFamilyMax; ++n) {
            const auto inst = families::make_instance(tag, BigInt(n));
            if (!inst.eligible || !from || n < *from) continue;
            const auto rep = search::minimal_mahler(inst.field);
            const CertifiedReal m4 = square(square(rep.minimal_measure()));
            out.require(less(m4, CertifiedReal(factor * BigRat(abs(rep.field.discriminant)))),
                        families::to_string(tag) + " n=" + std::to_string(n));
            ++asserted[families::to_string(tag)];
        }
    }

    // root intervals for g and h, from the recorded thresholds
    long root_checks = 0;
    for (const auto& [tag, key] : {std::pair{Family::G, families::Thresholds::kGRoots},
                                   std::pair{Family::H, families::Thresholds::kHRoots}}) {
        const auto from = t.get(key);
        out.require(from.has_value(), std::string("missing threshold ") + key);
        if (!from) continue;
        for (long n = from->get_si(); n <= kFamilyMax; ++n) {
            const auto chk = families::verify_root_intervals(families::make_instance(tag, BigInt(n)));
            out.require(chk.holds, families::to_string(tag) + " roots n=" + std::to_string(n));
            ++root_checks;
        }
    }

    // Simplest family: (-(n + 1 + 1/n), -(n + 1)) misses r1 for every n >= 2.
    // The root lies in (-(n + 1 + 2/n), -(n + 1 + 1/n)), an interval of the
    // same width, and M(f_n) < n + 2 + 2/n + 1/n^2 still holds.
    long literal_failures = 0, simplest_checks = 0;
    for (long n = 2; n <= kFamilyMax; ++n) {
        const auto inst = families::make_instance(Family::Simplest, BigInt(n));
        const auto literal = families::verify_root_intervals(inst);
        if (!literal.holds) ++literal_failures;
        const std::string label = "simplest n=" + std::to_string(n);
        out.require(literal.failures.size() <= 1, label + " r2/r3 intervals");

        const auto roots = embed::cubic_roots(inst.poly);
        const BigRat nn(n), inv(1, n);
        const CertifiedReal& r1 = roots.real_roots[0];
        out.require(less(CertifiedReal(-(nn + 1 + 2 * inv)), r1) && less(r1, CertifiedReal(-(nn + 1 + inv))),
                    label + " corrected r1 interval");
        const CertifiedReal mf = mahler::mahler_measure(inst.poly).measure;
        out.require(less(mf, CertifiedReal(nn + 2 + 2 * inv + inv * inv)), label + " M(f_n) bound");
        ++simplest_checks;
    }
    out.require(literal_failures == kFamilyMax - 1, "simplest literal r1 interval unexpectedly held");

    std::ostringstream os;
    os << "theorem bound at eligible n <= " << kFamilyMax << " from thresholds: simplest " << asserted["simplest"]
       << ", g " << asserted["g"] << ", h " << asserted["h"] << "; g/h root intervals " << root_checks
       << "; simplest r1 in (-(n+1+1/n), -(n+1)) fails for all " << literal_failures
       << " n in [2, 50], corrected interval (-(n+1+2/n), -(n+1+1/n)) and M(f_n) bound hold for " << simplest_checks;
    out.detail = os.str();
    return out;
}

Outcome discriminant_formulas()
{
    Outcome out;
    long checks = 0;
    for (long n = 0; n <= kFormulaMax; ++n) {
        const BigInt N(n), n2 = N * N;
        const BigInt s = n2 + 3 * N + 9;
        out.require(CubicPolynomial::monic(N, -(N + 3), 1).discriminant() == s * s, "f_" + std::to_string(n));
        out.require(CubicPolynomial::monic(-N, 0, N).discriminant() == n2 * (4 * n2 - 27), "g_" + std::to_string(n));
        out.require(CubicPolynomial::monic(N, 0, N).discriminant() == -n2 * (4 * n2 + 27), "h_" + std::to_string(n));
        checks += 3;
    }
    const BigInt dh1 = CubicPolynomial::monic(1, 0, 1).discriminant();
    out.require(dh1 == -31, "dh_1");
    out.require(fieldgen::field_discriminant(CubicPolynomial::monic(1, 0, 1)).discriminant == -31, "D_K of h_1");
    out.detail = std::to_string(checks) + " exact identities for n <= " + std::to_string(kFormulaMax) +
                 "; dh_1 = " + dh1.get_str();
    return out;
}

BigInt det3(const lattice::MatrixX<BigInt>& m)
{
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Outcome lll_properties()
{
    Outcome out;
    std::mt19937_64 rng(kSeed);

    // random bases
    std::uniform_int_distribution<long> entry(-60, 60);
    const BigRat delta(3, 4), half(1, 2);
    long bases = 0;
    while (bases < 1000) {
        lattice::MatrixX<BigInt> in(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) in(i, j) = entry(rng);
        if (sgn(det3(in)) == 0) continue;
        ++bases;
        const auto res = lattice::lll_reduce(in);
        const std::string label = "basis " + std::to_string(bases);
        out.require(abs(det3(res.transform)) == 1, label + " unimodular");
        lattice::MatrixX<BigRat> expect(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                BigInt s = 0;
                for (int k = 0; k < 3; ++k) s += res.transform(i, k) * in(k, j);
                expect(i, j) = s;
            }
        out.require(expect == res.basis, label + " basis = transform * input");
        const auto gs = lattice::gram_schmidt(expect);
        for (int i = 1; i < 3; ++i) {
            for (int j = 0; j < i; ++j) out.require(abs(gs.mu(i, j)) <= half, label + " size reduced");
            const BigRat m = gs.mu(i, i - 1);
            out.require((delta - m * m) * gs.norm2[i - 1] <= gs.norm2[i], label + " Lovasz");
        }
    }

    // norm versus measure on random elements
    const auto fields = fieldgen::enumerate_fields(BigInt(-1000), BigInt(1000));
    std::uniform_int_distribution<long> coord(-12, 12);
    long elements = 0, used_fields = 0;
    for (std::size_t fi = 0; fi < fields.size() && used_fields < 50; ++fi, ++used_fields) {
        const CubicField& K = fields[fi];
        const auto roots = embed::cubic_roots(K.defining_poly);
        const CertifiedReal f(static_cast<long>(K.r1 + K.r2));
        for (int e = 0; e < 200; ++e) {
            const Vector3<BigInt> x(coord(rng), coord(rng), coord(rng));
            if (!mahler::is_primitive(x, K)) {
                --e;
                continue;
            }
            ++elements;
            const CertifiedReal m = mahler::mahler_measure(mahler::char_poly(x, K)).measure;
            const CertifiedReal n2 = embed::squared_norm(embed::minkowski(x, K, roots));
            const std::string label = disc_label(K.discriminant) + " element";
            // M^(1/3) <= |phi| <= f^(1/2) M, squared and cubed
            out.require(less_equal(square(m), n2 * square(n2)), label + " lower");
            out.require(less_equal(n2, f * square(m)), label + " upper");
            out.require(embed::norm_measure_bounds_check(x, K, roots), label + " library check");
        }
    }

    // scaled and exact reduction give the same table
    search::TabulateOptions scaled;
    scaled.search.lll.mode = lattice::LllMode::ScaledInt;
    scaled.search.lll.scale_digits = 10;
    const auto scaled_table = search::tabulate(BigInt(kTableBound), scaled);
    out.require(csv_of(scaled_table) == csv_of(base_table()), "scaled and exact tables differ");

    out.detail = std::to_string(bases) + " random bases; " + std::to_string(elements) + " elements over " +
                 std::to_string(used_fields) + " fields; scaled (M=10) and exact agree on " +
                 std::to_string(scaled_table.size()) + " fields";
    return out;
}

Outcome determinism()
{
    Outcome out;
    search::TabulateOptions parallel;
    parallel.jobs = 3;
    parallel.search.jobs = 2;
    const std::string a = csv_of(base_table());
    const std::string b = csv_of(search::tabulate(BigInt(kTableBound), parallel));
    out.require(a == b, "CSV output depends on worker count");
    out.detail = "CSV of " + std::to_string(a.size()) + " bytes identical with 1 and 3x2 workers";
    return out;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"bound sandwich", bound_sandwich},
        {"x^3 - 5 worked example", worked_example},
        {"oracle equivalence", oracle_equivalence},
        {"kummer bounds", kummer},
        {"family bounds", family_bounds},
        {"family discriminants", discriminant_formulas},
        {"lll and norm properties", lll_properties},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
