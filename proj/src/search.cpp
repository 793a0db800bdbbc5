#include "cubicmahler/search.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "cubicmahler/parallel.hpp"

namespace cubicmahler::search {
namespace {

using numerics::Ordering;

std::string describe(const Candidate& c)
{
    std::ostringstream os;
    os << "(" << c.coords(0) << ", " << c.coords(1) << ", " << c.coords(2) << ") char poly "
       << c.char_poly.to_string() << " measure in [" << c.measure.lo().to_string() << ", "
       << c.measure.hi().to_string() << "]";
    return os.str();
}

int compare_coeffs(const CubicPolynomial& a, const CubicPolynomial& b)
{
    for (int i = 1; i < 4; ++i) {
        const int c = cmp(a.coefficients()[i], b.coefficients()[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool coords_less(const Vector3<BigInt>& a, const Vector3<BigInt>& b)
{
    for (int i = 0; i < 3; ++i)
        if (a(i) != b(i)) return a(i) < b(i);
    return false;
}

BigInt lower_bound_from(long long c2, long long c1, long long c0)
{
    const auto ceil3 = [](long long v) { return (std::llabs(v) + 2) / 3; };
    return BigInt(static_cast<long>(std::max({std::llabs(c0), ceil3(c2), ceil3(c1)})));
}

numerics::Dyadic ball_radius2(const CertifiedReal& measure, int f)
{
    const numerics::Dyadic& m = measure.hi();
    return m * m + numerics::Dyadic(f - 1);
}

constexpr long kSeedRange = 2;

Vector3<BigInt> to_big(long long a, long long b, long long c)
{
    return Vector3<BigInt>(BigInt(static_cast<long>(a)), BigInt(static_cast<long>(b)), BigInt(static_cast<long>(c)));
}

// Best candidate over part of a coordinate range, with a running bound.
class Scanner {
public:
    Scanner(const CubicField& K, const Candidate& start) : field_(K), fast_(K), best_(start) {}

    // Returns true when the candidate became the new best.
    bool offer(const Vector3<BigInt>& coords)
    {
        if (!is_primitive_coordinates(coords)) return false;
        if (coords(0).fits_slong_p() && coords(1).fits_slong_p() && coords(2).fits_slong_p()) {
            if (auto q = fast_(coords(0).get_si(), coords(1).get_si(), coords(2).get_si())) {
                if (numerics::Dyadic(lower_bound_from((*q)[0], (*q)[1], (*q)[2])) > best_.measure.hi()) return false;
            }
        }
        const auto cand = evaluate(field_, coords);
        ++measures_;
        if (!cand) return false;
        if (candidate_less(*cand, best_)) {
            best_ = *cand;
            return true;
        }
        return false;
    }

    const Candidate& best() const { return best_; }
    std::uint64_t measures() const { return measures_; }

private:
    const CubicField& field_;
    mahler::FastCharPoly fast_;
    Candidate best_;
    std::uint64_t measures_ = 0;
};

}  // namespace

bool candidate_less(const Candidate& a, const Candidate& b)
{
    switch (numerics::compare_strict(a.measure, b.measure)) {
    case Ordering::Less:
        return true;
    case Ordering::Greater:
        return false;
    case Ordering::Undecided:
        throw CertificationError("cannot order measures of " + describe(a) + " and " + describe(b));
    case Ordering::EqualAsExact:
        break;
    }
    if (const int c = compare_coeffs(a.char_poly, b.char_poly); c != 0) return c < 0;
    return coords_less(a.coords, b.coords);
}

std::optional<Candidate> evaluate(const CubicField& K, const Vector3<BigInt>& coords)
{
    if (!is_primitive_coordinates(coords)) return std::nullopt;
    Candidate c;
    c.coords = coords;
    c.char_poly = mahler::char_poly(coords, K);
    const CubicPolynomial neg = c.char_poly.negated();
    const int order = compare_coeffs(neg, c.char_poly);
    const bool flip_coords = [&] {
        for (int i = 0; i < 3; ++i)
            if (sgn(coords(i)) != 0) return sgn(coords(i)) < 0;
        return false;
    }();
    if (order < 0 || (order == 0 && flip_coords)) {
        c.coords = -coords;
        c.char_poly = neg;
    }
    auto m = mahler::mahler_measure(c.char_poly);
    c.measure = m.measure;
    c.measure_poly = m.measure_poly;
    return c;
}

BoundChecks check_bounds(const CertifiedReal& measure, const BigInt& discriminant)
{
    const BigInt d = abs(discriminant);
    const CertifiedReal m2 = square(measure);
    const auto holds = [](Ordering o) { return o == Ordering::Less || o == Ordering::EqualAsExact; };
    BoundChecks b;
    b.silverman = holds(numerics::compare_strict(CertifiedReal(d), CertifiedReal(27) * square(m2)));
    b.upper = holds(numerics::compare_strict(m2, CertifiedReal(BigInt(4096 * d))));
    return b;
}

SearchReport minimal_mahler(const CubicField& K, const SearchOptions& options)
{
    SearchReport rep;
    rep.field = K;
    const auto roots = embed::cubic_roots(K.defining_poly);
    rep.lattice = lattice::reduce_minkowski_lattice(K, roots, options.lll);
    const Matrix3<BigInt>& t = rep.lattice.basis.transform;

    std::optional<Candidate> seed;
    const auto consider_seed = [&](const Vector3<BigInt>& coords) {
        if (auto c = evaluate(K, coords); c && (!seed || candidate_less(*c, *seed))) seed = c;
    };
    // Short vectors, small combinations of the reduced ones, and the
    // integral basis. Elements of small measure have one large conjugate and
    // need not be short, so the ball alone can seed badly.
    numerics::Interval longest(0L);
    for (int i = 0; i < 3; ++i) {
        numerics::Interval n2(0L);
        for (int j = 0; j < 3; ++j) n2 = n2 + square(rep.lattice.basis.vectors(i, j));
        if (n2.hi() > longest.hi()) longest = n2;
    }
    const auto canonical = [](long long a, long long b, long long c) {
        return a > 0 || (a == 0 && (b > 0 || (b == 0 && c > 0)));
    };
    lattice::enumerate_ball(rep.lattice.gs, longest, [&](long long a, long long b, long long c) {
        if (canonical(a, b, c)) consider_seed(t.transpose() * to_big(a, b, c));
    });
    for (long a = 0; a <= kSeedRange; ++a)
        for (long b = -kSeedRange; b <= kSeedRange; ++b)
            for (long c = -kSeedRange; c <= kSeedRange; ++c)
                if (canonical(a, b, c)) consider_seed(t.transpose() * to_big(a, b, c));
    for (int i = 1; i < 3; ++i) consider_seed(Vector3<BigInt>::Unit(i));
    // two independent rows always give a non-rational element
    if (!seed) throw std::logic_error("minimal_mahler: no primitive seed element");
    rep.seed = *seed;

    const int f = K.r1 + K.r2;
    rep.box = lattice::coefficient_bounds(rep.lattice.gs, seed->measure.enclosure(), f);

    // Every element with measure m has squared Minkowski norm at most
    // m^2 + r1 + r2 - 1, so only box points in that ball can tie or improve.
    const long long c_max = rep.box.c_max.get_si();
    const unsigned jobs = std::max(1u, options.jobs);
    const long long width = 2 * c_max + 1;
    const long long slices = std::min<long long>(width, jobs == 1 ? 1 : 4LL * jobs);
    std::vector<Candidate> bests(slices, *seed);
    std::vector<std::uint64_t> examined(slices, 0), measured(slices, 0);
    parallel_for(static_cast<std::size_t>(slices), jobs, [&](std::size_t s) {
        const long long lo = -c_max + width * static_cast<long long>(s) / slices;
        const long long hi = -c_max + width * static_cast<long long>(s + 1) / slices - 1;
        Scanner scan(K, *seed);
        numerics::Dyadic radius2 = ball_radius2(seed->measure, f);
        lattice::enumerate_box_in_ball(
            rep.box, rep.lattice.gs, [&] { return radius2; }, lo, hi, [&](long long a, long long b, long long c) {
                ++examined[s];
                if (scan.offer(t.transpose() * to_big(a, b, c)) && options.shrink_on_improve)
                    radius2 = ball_radius2(scan.best().measure, f);
            });
        bests[s] = scan.best();
        measured[s] = scan.measures();
    });
    Candidate best = *seed;
    for (const auto& c : bests)
        if (candidate_less(c, best)) best = c;
    for (long long s = 0; s < slices; ++s) {
        rep.candidates_examined += examined[s];
        rep.measures_computed += measured[s];
    }
    rep.witness = best;
    const Matrix3<BigRat> tinv = t.cast<BigRat>().transpose().inverse();
    const Vector3<BigRat> w = tinv * best.coords.cast<BigRat>();
    for (int k = 0; k < 3; ++k) rep.witness_lll(k) = w(k).get_num();
    rep.bound_checks = check_bounds(best.measure, K.discriminant);
    return rep;
}

std::vector<SearchReport> tabulate_fields(const std::vector<CubicField>& fields, const TabulateOptions& options)
{
    std::vector<std::optional<SearchReport>> slots(fields.size());
    parallel_for(fields.size(), options.jobs,
                 [&](std::size_t i) { slots[i] = minimal_mahler(fields[i], options.search); });
    std::vector<SearchReport> out;
    out.reserve(fields.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::vector<SearchReport> tabulate(const BigInt& disc_abs_bound, const TabulateOptions& options)
{
    BigInt lo = -disc_abs_bound, hi = disc_abs_bound;
    if (options.signature == SignatureFilter::TotallyReal) lo = 1;
    if (options.signature == SignatureFilter::Complex) hi = -1;
    if (sgn(disc_abs_bound) <= 0 || lo > hi) return {};
    fieldgen::EnumerateOptions eo;
    eo.jobs = options.jobs;
    return tabulate_fields(fieldgen::enumerate_fields(lo, hi, eo), options);
}

std::optional<Candidate> naive_oracle(const CubicField& K, long bound)
{
    if (bound < 1) return std::nullopt;
    // start from the integral basis so the running bound prunes early
    std::optional<Candidate> start;
    for (int i = 1; i < 3; ++i) {
        Vector3<BigInt> e(0, 0, 0);
        e(i) = 1;
        auto c = evaluate(K, e);
        if (!start || candidate_less(*c, *start)) start = c;
    }
    Scanner scan(K, *start);
    for (long x = 0; x <= bound; ++x)
        for (long y = (x == 0 ? 0 : -bound); y <= bound; ++y)
            for (long z = (x == 0 && y == 0 ? 1 : -bound); z <= bound; ++z)
                scan.offer(Vector3<BigInt>(BigInt(x), BigInt(y), BigInt(z)));
    return scan.best();
}

BigInt covering_cube(const SearchReport& report)
{
    const Matrix3<BigInt>& t = report.lattice.basis.transform;
    const BigInt m[3] = {report.box.a_max, report.box.b_max, report.box.c_max};
    BigInt out = 0;
    for (int k = 0; k < 3; ++k) {
        BigInt s = 0;
        for (int i = 0; i < 3; ++i) s += abs(t(i, k)) * m[i];
        out = std::max(out, s);
    }
    return out;
}

}  // namespace cubicmahler::search
