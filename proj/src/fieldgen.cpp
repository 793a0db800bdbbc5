#include "cubicmahler/fieldgen.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cubicmahler/embed.hpp"
#include "cubicmahler/lattice.hpp"
#include "cubicmahler/mahler.hpp"
#include "cubicmahler/numerics/arith.hpp"
#include "cubicmahler/parallel.hpp"

namespace cubicmahler::fieldgen {
namespace {

using numerics::Interval;

// polynomials over F_p, low to high, trimmed
using ModPoly = std::vector<BigInt>;

void trim(ModPoly& a)
{
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ModPoly reduce(const ModPoly& a, const BigInt& p)
{
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i], p);
    trim(r);
    return r;
}

BigInt inverse_mod(const BigInt& a, const BigInt& p)
{
    BigInt r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

ModPoly remainder(ModPoly a, const ModPoly& b, const BigInt& p)
{
    const BigInt inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const BigInt q = mod(a.back() * inv, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - q * b[i], p);
        trim(a);
    }
    return a;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, const BigInt& p)
{
    while (!b.empty()) {
        ModPoly r = remainder(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// the repeated root of f mod p, for p | disc(f)
BigInt repeated_root(const CubicPolynomial& f, const BigInt& p)
{
    if (p < 1000) {
        const unsigned long pu = p.get_ui();
        for (unsigned long r = 0; r < pu; ++r) {
            const BigInt x(r);
            const BigInt fx = f.eval(x);
            const BigInt dx = 3 * x * x + 2 * f.c2() * x + f.c1();
            if (divides(p, fx) && divides(p, dx)) return x;
        }
        throw std::logic_error("repeated_root: no double root mod " + p.get_str());
    }
    const ModPoly fp = reduce({f.c0(), f.c1(), f.c2(), 1}, p);
    const ModPoly dp = reduce({f.c1(), 2 * f.c2(), 3}, p);
    ModPoly g = gcd_mod(fp, dp, p);
    // g = (x - r) or (x - r)^2
    const BigInt inv = inverse_mod(g.back(), p);
    for (auto& c : g) c = mod(c * inv, p);
    if (g.size() == 2) return mod(-g[0], p);
    if (g.size() == 3) return mod(-g[1] * inverse_mod(BigInt(2), p), p);
    throw std::logic_error("repeated_root: unexpected gcd degree mod " + p.get_str());
}

Vector3<BigInt> multiply_coords(const CubicField& K, const Vector3<BigInt>& x, const Vector3<BigInt>& y)
{
    return multiplication_matrix(K, x) * y;
}

Vector3<BigInt> mod_vec(const Vector3<BigInt>& v, const BigInt& p)
{
    return Vector3<BigInt>(mod(v(0), p), mod(v(1), p), mod(v(2), p));
}

Vector3<BigInt> power_mod(const CubicField& K, Vector3<BigInt> x, BigInt e, const BigInt& p)
{
    Vector3<BigInt> r(1, 0, 0);
    x = mod_vec(x, p);
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mod_vec(multiply_coords(K, r, x), p);
        x = mod_vec(multiply_coords(K, x, x), p);
        e >>= 1;
    }
    return r;
}

// kernel basis over F_p of a 3x3 matrix
std::vector<Vector3<BigInt>> kernel_mod(Matrix3<BigInt> m, const BigInt& p)
{
    int pivot_col[3] = {-1, -1, -1};
    int row = 0;
    std::vector<int> free_cols;
    for (int c = 0; c < 3; ++c) {
        int pr = -1;
        for (int r = row; r < 3; ++r)
            if (sgn(mod(m(r, c), p)) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) {
            free_cols.push_back(c);
            continue;
        }
        m.row(row).swap(m.row(pr));
        const BigInt inv = inverse_mod(mod(m(row, c), p), p);
        for (int k = 0; k < 3; ++k) m(row, k) = mod(m(row, k) * inv, p);
        for (int r = 0; r < 3; ++r) {
            if (r == row || sgn(m(r, c)) == 0) continue;
            const BigInt factor = m(r, c);
            for (int k = 0; k < 3; ++k) m(r, k) = mod(m(r, k) - factor * m(row, k), p);
        }
        pivot_col[row] = c;
        ++row;
    }
    std::vector<Vector3<BigInt>> basis;
    for (int fc : free_cols) {
        Vector3<BigInt> v(0, 0, 0);
        v(fc) = 1;
        for (int r = 0; r < row; ++r) v(pivot_col[r]) = mod(-m(r, fc), p);
        basis.push_back(v);
    }
    return basis;
}

bool integral_over_p(const CubicField& K, const Vector3<BigInt>& v, const BigInt& p)
{
    const auto c = char_poly_coefficients(multiplication_matrix(K, v));
    return divides(p, c[0]) && divides(p * p, c[1]) && divides(p * p * p, c[2]);
}

BigRat hunter_u_upper(const BigInt& t2, const BigInt& n)
{
    // (t^2 + 2 sqrt(n)) / 3, rounded up
    return make_rational(t2 + 2 * (isqrt(n) + 1), 3);
}

bool key_less(const CubicPolynomial& a, const CubicPolynomial& b)
{
    const BigInt ta = a.c2() * a.c2() - 2 * a.c1(), tb = b.c2() * b.c2() - 2 * b.c1();
    if (ta != tb) return ta < tb;
    if (a.c2() != b.c2()) return a.c2() < b.c2();
    if (a.c1() != b.c1()) return a.c1() < b.c1();
    return a.c0() < b.c0();
}

// Field with its reduced Minkowski lattice, for root searches.
struct RootSearcher {
    CubicField field;
    lattice::GramSchmidtData<Interval> gs;
    Matrix3<BigInt> transform;

    explicit RootSearcher(CubicField K) : field(std::move(K))
    {
        const auto roots = embed::cubic_roots(field.defining_poly);
        const auto red = lattice::reduce_minkowski_lattice(field, roots);
        gs = red.gs;
        transform = red.basis.transform;
    }

    bool has_root(const CubicPolynomial& g) const
    {
        if (sgn(g.discriminant()) != sgn(field.discriminant)) return false;
        const BigRat ratio = make_rational(g.discriminant(), field.discriminant);
        if (ratio.get_den() != 1 || !is_perfect_square(ratio.get_num())) return false;
        // squared Minkowski length of a root of g
        const auto groots = embed::cubic_roots(g);
        numerics::CertifiedReal len2;
        if (groots.r1 == 3) {
            len2 = numerics::CertifiedReal(BigInt(g.c2() * g.c2() - 2 * g.c1()));
        } else {
            len2 = square(groots.real_roots[0]) + groots.tau_abs2;
        }
        const Interval radius = len2.enclosure() + Interval(numerics::Dyadic(1).ldexp(-20));
        const mahler::FastCharPoly fast(field);
        bool found = false;
        lattice::enumerate_ball(gs, radius, [&](long long x, long long y, long long z) {
            if (found) return;
            const Vector3<BigInt> lc(BigInt(static_cast<long>(x)), BigInt(static_cast<long>(y)), BigInt(static_cast<long>(z)));
            const Vector3<BigInt> c = transform.transpose() * lc;
            if (!is_primitive_coordinates(c)) return;
            if (c(0).fits_slong_p() && c(1).fits_slong_p() && c(2).fits_slong_p()) {
                if (auto q = fast(c(0).get_si(), c(1).get_si(), c(2).get_si())) {
                    found = g.c2() == static_cast<long>((*q)[0]) && g.c1() == static_cast<long>((*q)[1]) &&
                            g.c0() == static_cast<long>((*q)[2]);
                    return;
                }
            }
            found = mahler::char_poly(c, field) == g;
        });
        return found;
    }
};

struct StreamEntry {
    CubicPolynomial poly;
    std::optional<CubicField> field;
};

// Maximal order of f when its discriminant can lie in [lo, hi], else nullopt.
std::optional<CubicField> field_in_range(const CubicPolynomial& f, const BigInt& lo, const BigInt& hi)
{
    const BigInt d = f.discriminant();
    const BigInt s = numerics::largest_square_divisor(d);
    const BigInt smallest = d / (s * s);
    // D_K = d / m^2 for some m | s; |D_K| >= |d| / s^2
    if (sgn(d) > 0 && (smallest > hi || d < lo)) return std::nullopt;
    if (sgn(d) < 0 && (smallest < lo || d > hi)) return std::nullopt;
    CubicField K = field_discriminant(f);
    if (K.discriminant < lo || K.discriminant > hi) return std::nullopt;
    return K;
}

}  // namespace

ReducibleError::ReducibleError(const CubicPolynomial& f)
    : std::invalid_argument(f.to_string() + " is reducible: " + describe_factorization(f))
{
}

bool in_hunter_box(const CubicPolynomial& f, const BigInt& n)
{
    if (!f.is_monic()) return false;
    const BigInt t2 = f.c2() * f.c2();
    const auto within = [&](const BigInt& v) {
        // 3 |v| - t^2 <= 2 sqrt(n)
        const BigInt a = 3 * abs(v) - t2;
        return sgn(a) <= 0 || a * a <= 4 * n;
    };
    if (!within(t2 - 2 * f.c1()) || !within(f.c1())) return false;
    // 729 c0^2 <= (t^2 + 2 sqrt(n))^3
    const BigInt t4 = t2 * t2;
    const BigInt lhs = 729 * f.c0() * f.c0() - t4 * t2 - 12 * t2 * n;
    const BigInt rc = 6 * t4 + 8 * n;
    return sgn(lhs) <= 0 || lhs * lhs <= rc * rc * n;
}

void for_each_polynomial(const BigInt& n, const std::function<void(const CubicPolynomial&)>& visit)
{
    if (sgn(n) <= 0) return;
    const BigRat u = hunter_u_upper(1, n);
    const BigInt c1_max = ceil(u) + 1;
    // |c0| <= (U/3)^(3/2)
    const double u3 = u.get_d() / 3.0;
    const BigInt c0_max = BigInt(static_cast<long>(std::ceil(std::pow(u3, 1.5)))) + 1;
    for (long c2 = -1; c2 <= 0; ++c2) {
        for (BigInt c1 = -c1_max; c1 <= c1_max; ++c1) {
            for (BigInt c0 = -c0_max; c0 <= c0_max; ++c0) {
                if (sgn(c0) == 0) continue;
                const CubicPolynomial f = CubicPolynomial::monic(BigInt(c2), c1, c0);
                if (!in_hunter_box(f, n)) continue;
                if (!f.is_irreducible()) continue;
                visit(f);
            }
        }
    }
}

std::vector<CubicPolynomial> enumerate_polynomials(const BigInt& n)
{
    std::vector<CubicPolynomial> out;
    for_each_polynomial(n, [&](const CubicPolynomial& f) { out.push_back(f); });
    return out;
}

bool dedekind_p_maximal(const CubicPolynomial& f, const BigInt& p)
{
    if (!divides(p, f.discriminant())) return true;
    const BigInt r = repeated_root(f, p);
    return !divides(p * p, f.eval(r));
}

std::optional<Vector3<BigRat>> p_enlargement(const CubicField& order, const BigInt& p)
{
    // radical of O/pO = kernel of x -> x^q with q = p^j >= 3
    BigInt q = p;
    while (q < 3) q *= p;
    Matrix3<BigInt> frob;
    for (int j = 0; j < 3; ++j) {
        Vector3<BigInt> e(0, 0, 0);
        e(j) = 1;
        frob.col(j) = power_mod(order, e, q, p);
    }
    const auto ker = kernel_mod(frob, p);
    std::vector<Vector3<BigInt>> points;
    if (ker.size() == 1) {
        points.push_back(ker[0]);
    } else if (ker.size() == 2) {
        for (BigInt l = 0; l < p; ++l) points.push_back(mod_vec(ker[0] + l * ker[1], p));
        points.push_back(ker[1]);
    } else if (ker.size() == 3) {
        throw std::logic_error("p_enlargement: radical is the whole order");
    }
    for (const auto& v : points) {
        if (integral_over_p(order, v, p)) {
            Vector3<BigRat> w = to_power_basis(order, v);
            for (int k = 0; k < 3; ++k) w(k) /= BigRat(p);
            return w;
        }
    }
    return std::nullopt;
}

Matrix3<BigRat> hermite_basis(const std::vector<Vector3<BigRat>>& rows)
{
    BigInt den = 1;
    for (const auto& r : rows)
        for (int k = 0; k < 3; ++k) den = lcm(den, BigInt(r(k).get_den()));
    std::vector<std::array<BigInt, 3>> m;
    for (const auto& r : rows) {
        std::array<BigInt, 3> v;
        for (int k = 0; k < 3; ++k) v[k] = BigInt(r(k) * den);
        m.push_back(v);
    }
    std::array<std::array<BigInt, 3>, 3> h{};
    std::size_t live = m.size();
    for (int col = 2; col >= 0; --col) {
        // gcd elimination on column `col` among rows [0, live)
        for (;;) {
            std::size_t best = live;
            for (std::size_t i = 0; i < live; ++i)
                if (sgn(m[i][col]) != 0 && (best == live || abs(m[i][col]) < abs(m[best][col]))) best = i;
            if (best == live) throw std::invalid_argument("hermite_basis: rows do not span a full lattice");
            bool done = true;
            for (std::size_t i = 0; i < live; ++i) {
                if (i == best || sgn(m[i][col]) == 0) continue;
                const BigInt qt = floor_div(m[i][col], m[best][col]);
                for (int k = 0; k < 3; ++k) m[i][k] -= qt * m[best][k];
                if (sgn(m[i][col]) != 0) done = false;
            }
            if (done) {
                if (sgn(m[best][col]) < 0)
                    for (int k = 0; k < 3; ++k) m[best][k] = -m[best][k];
                h[col] = m[best];
                std::swap(m[best], m[live - 1]);
                --live;
                break;
            }
        }
    }
    // reduce entries left of each pivot modulo the pivots below
    for (int r = 1; r < 3; ++r)
        for (int c = r - 1; c >= 0; --c) {
            const BigInt qt = floor_div(h[r][c], h[c][c]);
            for (int k = 0; k < 3; ++k) h[r][k] -= qt * h[c][k];
        }
    Matrix3<BigRat> out;
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 3; ++k) {
            out(r, k) = BigRat(h[r][k], den);
            out(r, k).canonicalize();
        }
    return out;
}

namespace {

// smallest order containing the module spanned by the rows of `basis`
Matrix3<BigRat> ring_closure(const CubicPolynomial& f, Matrix3<BigRat> basis)
{
    for (;;) {
        std::vector<Vector3<BigRat>> rows;
        for (int i = 0; i < 3; ++i) rows.push_back(basis.row(i).transpose());
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) rows.push_back(multiply_mod(f, rows[i], rows[j]));
        const Matrix3<BigRat> next = hermite_basis(rows);
        if (next == basis) return basis;
        basis = next;
    }
}

}  // namespace

CubicField field_discriminant(const CubicPolynomial& f)
{
    if (!f.is_monic()) throw std::invalid_argument("field_discriminant: polynomial must be monic");
    if (!f.is_irreducible()) throw ReducibleError(f);
    CubicField order = make_field(f, power_basis());
    for (const auto& pp : numerics::factor(f.discriminant())) {
        if (pp.exponent < 2) continue;
        const BigInt& p = pp.prime;
        if (dedekind_p_maximal(f, p)) continue;
        while (divides(p * p, order.discriminant)) {
            const auto beta = p_enlargement(order, p);
            if (!beta) break;
            std::vector<Vector3<BigRat>> rows;
            for (int i = 0; i < 3; ++i) rows.push_back(order.basis.row(i).transpose());
            rows.push_back(*beta);
            order = make_field(f, ring_closure(f, hermite_basis(rows)));
        }
    }
    return order;
}

std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b)
{
    const auto three = [](const BigInt& x, const BigInt& y) {
        const int c = cmp(x, y);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    };
    if (auto c = three(abs(a.discriminant), abs(b.discriminant)); c != 0) return c;
    if (auto c = three(a.discriminant, b.discriminant); c != 0) return c;
    if (auto c = three(a.t2(), b.t2()); c != 0) return c;
    if (auto c = three(a.c2, b.c2); c != 0) return c;
    if (auto c = three(a.c1, b.c1); c != 0) return c;
    return three(a.c0, b.c0);
}

bool has_root_in(const CubicField& K, const CubicPolynomial& g)
{
    if (!g.is_monic() || !g.is_irreducible()) return false;
    return RootSearcher(K).has_root(g);
}

CanonicalKey canonical_key(const CubicField& K)
{
    const BigInt n = abs(K.discriminant);
    std::vector<CubicPolynomial> candidates;
    for_each_polynomial(n, [&](const CubicPolynomial& g) {
        const BigInt d = g.discriminant();
        if (sgn(d) != sgn(K.discriminant) || !divides(K.discriminant, d)) return;
        if (!is_perfect_square(d / K.discriminant)) return;
        candidates.push_back(g);
    });
    std::sort(candidates.begin(), candidates.end(), key_less);
    const RootSearcher searcher(K);
    for (const auto& g : candidates)
        if (searcher.has_root(g)) return {K.discriminant, g.c2(), g.c1(), g.c0()};
    throw std::logic_error("canonical_key: no generator in the Hunter box for D = " + K.discriminant.get_str());
}

std::vector<KeyedField> enumerate_keyed_fields(const BigInt& disc_min, const BigInt& disc_max,
                                               const EnumerateOptions& options)
{
    if (disc_min > disc_max) throw std::invalid_argument("enumerate_fields: empty discriminant range");
    const BigInt n = std::max<BigInt>(abs(disc_min), abs(disc_max));
    std::vector<StreamEntry> stream;
    for_each_polynomial(n, [&](const CubicPolynomial& f) { stream.push_back({f, std::nullopt}); });
    if (options.reverse_stream) std::reverse(stream.begin(), stream.end());
    parallel_for(stream.size(), options.jobs,
                 [&](std::size_t i) { stream[i].field = field_in_range(stream[i].poly, disc_min, disc_max); });

    std::map<BigInt, std::vector<const StreamEntry*>> groups;
    for (const auto& e : stream)
        if (e.field) groups[e.field->discriminant].push_back(&e);

    std::vector<std::vector<const StreamEntry*>> group_list;
    for (auto& [d, members] : groups) {
        const BigInt nd = abs(d);
        // members inside the Hunter box for |D| come first, in key order
        std::sort(members.begin(), members.end(), [&](const StreamEntry* a, const StreamEntry* b) {
            const bool ia = in_hunter_box(a->poly, nd), ib = in_hunter_box(b->poly, nd);
            if (ia != ib) return ia;
            return key_less(a->poly, b->poly);
        });
        group_list.push_back(members);
    }
    std::vector<std::vector<KeyedField>> per_group(group_list.size());
    parallel_for(group_list.size(), options.jobs, [&](std::size_t gi) {
        const auto& members = group_list[gi];
        const BigInt nd = abs(members.front()->field->discriminant);
        std::vector<RootSearcher> classes;
        for (const StreamEntry* e : members) {
            bool known = false;
            for (const auto& c : classes)
                if (c.has_root(e->poly)) {
                    known = true;
                    break;
                }
            if (known) continue;
            if (!in_hunter_box(e->poly, nd))
                throw std::logic_error("enumerate_fields: field without a Hunter generator at D = " + nd.get_str());
            classes.emplace_back(*e->field);
            const CubicField& K = classes.back().field;
            per_group[gi].push_back({CanonicalKey{K.discriminant, e->poly.c2(), e->poly.c1(), e->poly.c0()}, K});
        }
    });
    std::vector<KeyedField> out;
    for (auto& g : per_group)
        for (auto& kf : g) out.push_back(std::move(kf));
    std::sort(out.begin(), out.end(), [](const KeyedField& a, const KeyedField& b) { return a.key < b.key; });
    return out;
}

std::vector<CubicField> enumerate_fields(const BigInt& disc_min, const BigInt& disc_max, const EnumerateOptions& options)
{
    std::vector<CubicField> out;
    for (auto& kf : enumerate_keyed_fields(disc_min, disc_max, options)) out.push_back(std::move(kf.field));
    return out;
}

}  // namespace cubicmahler::fieldgen
