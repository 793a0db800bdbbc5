#include "cubicmahler/lattice.hpp"

#include <algorithm>
#include <optional>

namespace cubicmahler::lattice {
namespace {

using numerics::Dyadic;
using numerics::Rounding;

constexpr int kMaxSteps = 100000;

enum class Outcome { Done, Undecided };

Matrix3<Interval> integer_combination(const Matrix3<BigInt>& t, const Matrix3<Interval>& v)
{
    Matrix3<Interval> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Interval s(0L);
            for (int k = 0; k < 3; ++k)
                if (sgn(t(i, k)) != 0) s += Interval(t(i, k)) * v(k, j);
            out(i, j) = s;
        }
    return out;
}

// LLL on the lattice spanned by t * v, acting on t only. With `force`, an
// undecided Lovasz test counts as satisfied.
Outcome interval_lll(const Matrix3<Interval>& v, Matrix3<BigInt>& t, const BigRat& delta, bool force,
                     bool& lovasz_certified)
{
    const Interval d = Interval::from_rational(delta, Interval::kDefaultPrecision);
    int k = 1;
    for (int step = 0; k < 3; ++step) {
        if (step > kMaxSteps) throw UndecidedError("lattice reduction did not terminate");
        auto gs = gram_schmidt<Interval>(MatrixX<Interval>(integer_combination(t, v)));
        for (int j = k - 1; j >= 0; --j) {
            const BigInt q = round_nearest(gs.mu(k, j).midpoint().to_rational());
            if (sgn(q) == 0) continue;
            t.row(k) -= q * t.row(j);
            gs = gram_schmidt<Interval>(MatrixX<Interval>(integer_combination(t, v)));
        }
        const Interval& mu = gs.mu(k, k - 1);
        const Interval rhs = (d - square(mu)) * gs.norm2[k - 1];
        const Interval& lhs = gs.norm2[k];
        if (rhs.hi() <= lhs.lo()) {
            ++k;
        } else if (lhs.hi() < rhs.lo()) {
            t.row(k).swap(t.row(k - 1));
            k = std::max(k - 1, 1);
        } else if (force) {
            lovasz_certified = false;
            ++k;
        } else {
            return Outcome::Undecided;
        }
    }
    return Outcome::Done;
}

Dyadic max_abs_mu(const GramSchmidtData<Interval>& gs)
{
    Dyadic m;
    for (int i = 0; i < gs.size(); ++i)
        for (int j = 0; j < i; ++j) m = max(m, gs.mu(i, j).magnitude());
    return m;
}

// floor(scale * x) when it is determined by the enclosure
std::optional<BigInt> certified_floor(const Interval& x, const BigInt& scale)
{
    const BigInt lo = (x.lo() * Dyadic(scale)).floor();
    const BigInt hi = (x.hi() * Dyadic(scale)).floor();
    if (lo != hi) return std::nullopt;
    return lo;
}

BigInt floor_hi(const Interval& x) { return x.hi().floor(); }

}  // namespace

LllResult lll_reduce(const MatrixX<BigRat>& rows, const BigRat& delta)
{
    const Eigen::Index n = rows.rows();
    LllResult r;
    r.basis = rows;
    r.transform = MatrixX<BigInt>::Identity(n, n);
    if (n == 0) return r;
    auto gs = gram_schmidt<BigRat>(r.basis);
    Eigen::Index k = 1;
    while (k < n) {
        for (Eigen::Index j = k - 1; j >= 0; --j) {
            const BigInt q = round_nearest(gs.mu(k, j));
            if (sgn(q) == 0) continue;
            const BigRat qr(q);
            r.basis.row(k) -= qr * r.basis.row(j);
            r.transform.row(k) -= q * r.transform.row(j);
            for (Eigen::Index l = 0; l <= j; ++l) gs.mu(k, l) -= qr * gs.mu(j, l);
        }
        const BigRat& mu = gs.mu(k, k - 1);
        if (gs.norm2[k] >= (delta - mu * mu) * gs.norm2[k - 1]) {
            ++k;
        } else {
            r.basis.row(k).swap(r.basis.row(k - 1));
            r.transform.row(k).swap(r.transform.row(k - 1));
            gs = gram_schmidt<BigRat>(r.basis);
            ++r.swaps;
            k = std::max<Eigen::Index>(k - 1, 1);
        }
    }
    r.gs = gram_schmidt<BigRat>(r.basis);
    return r;
}

LllResult lll_reduce(const MatrixX<BigInt>& rows, const BigRat& delta)
{
    return lll_reduce(MatrixX<BigRat>(rows.cast<BigRat>()), delta);
}

bool is_lll_reduced(const GramSchmidtData<BigRat>& gs, const BigRat& delta)
{
    const BigRat half(1, 2);
    for (int i = 0; i < gs.size(); ++i)
        for (int j = 0; j < i; ++j)
            if (abs(gs.mu(i, j)) > half) return false;
    for (int i = 1; i < gs.size(); ++i) {
        const BigRat& mu = gs.mu(i, i - 1);
        if (gs.norm2[i] < (delta - mu * mu) * gs.norm2[i - 1]) return false;
    }
    return true;
}

ReducedLattice reduce_minkowski_lattice(const CubicField& K, const embed::ConjugateSet& roots, const LllConfig& config)
{
    const BigRat delta(3, 4);
    ReducedLattice out;
    out.basis.mode = config.mode;
    Matrix3<BigInt> t = Matrix3<BigInt>::Identity();
    long bits = numerics::kWorkingBits;
    Matrix3<Interval> v;

    if (config.mode == LllMode::ScaledInt) {
        out.basis.scale_digits = config.scale_digits;
        const BigInt scale = pow(BigInt(10), static_cast<unsigned long>(config.scale_digits));
        MatrixX<BigInt> scaled(3, 3);
        for (;;) {
            v = embed::basis_matrix(K, roots, bits);
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i)
                for (int j = 0; j < 3 && ok; ++j) {
                    const auto fl = certified_floor(v(i, j), scale);
                    if (fl) scaled(i, j) = *fl;
                    else ok = false;
                }
            if (ok) break;
            if (bits >= config.precision_ceiling) throw UndecidedError("scaled lattice entry sits on an integer");
            bits *= 2;
        }
        const LllResult r = lll_reduce(scaled, delta);
        t = r.transform;
    }

    // certified pass; in scaled mode it only cleans up truncation effects
    bool certified = true;
    for (;;) {
        v = embed::basis_matrix(K, roots, bits);
        const bool force = bits >= config.precision_ceiling;
        Matrix3<BigInt> trial = t;
        try {
            if (interval_lll(v, trial, delta, force, certified) == Outcome::Done) {
                t = trial;
                break;
            }
        } catch (const DegenerateBasisError&) {
            if (force) throw;
        } catch (const std::domain_error&) {
            if (force) throw;
        }
        bits *= 2;
    }
    out.basis.vectors = integer_combination(t, v);
    out.basis.transform = t;
    out.gs = gram_schmidt<Interval>(MatrixX<Interval>(out.basis.vectors));
    out.mu_bound = max_abs_mu(out.gs);
    out.lovasz_certified = certified;
    out.first_is_one = t.row(0).cwiseAbs() == Eigen::Matrix<BigInt, 1, 3>(1, 0, 0);
    out.bits = bits;
    return out;
}

SearchBox coefficient_bounds(const GramSchmidtData<Interval>& gs, const Interval& measure_bound, int f)
{
    if (gs.size() != 3) throw std::invalid_argument("coefficient_bounds: expected a 3-dimensional basis");
    if (!measure_bound.certainly_positive()) throw std::invalid_argument("coefficient_bounds: measure bound must be positive");
    const Dyadic half = Dyadic(1).ldexp(-1);
    Dyadic m = half;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < i; ++j) {
            const Interval a = abs(gs.mu(i, j));
            if (a.lo() > half) throw std::invalid_argument("coefficient_bounds: basis is not size-reduced");
            m = max(m, a.hi());
        }
    const Interval mi(m);
    const Interval r = sqrt(Interval(static_cast<long>(f))) * Interval(measure_bound.hi());
    Interval inv[3];
    for (int i = 0; i < 3; ++i) inv[i] = Interval(1L) / sqrt(gs.norm2[i]);
    SearchBox box;
    box.f = f;
    box.measure_bound = measure_bound;
    box.c_max = floor_hi(r * inv[2]);
    box.b_max = floor_hi(r * (inv[1] + mi * inv[2]));
    box.a_max = floor_hi(r * (inv[0] + mi * inv[1] + (mi * mi + mi) * inv[2]));
    return box;
}

BigInt last_coordinate_bound(const GramSchmidtData<CertifiedReal>& gs, const CertifiedReal& norm2_bound)
{
    const CertifiedReal& g = gs.norm2.back();
    const Interval ratio = norm2_bound.enclosure() / g.enclosure();
    if (ratio.hi().sign() <= 0) return 0;
    BigInt c = isqrt(ratio.hi().floor());
    while (sgn(c) > 0) {
        const auto o = numerics::compare_strict(CertifiedReal(BigInt(c * c)) * g, norm2_bound);
        if (o == numerics::Ordering::Less || o == numerics::Ordering::Undecided) break;
        --c;
    }
    return c;
}

std::uint64_t box_size(const SearchBox& box)
{
    const auto side = [](const BigInt& m) -> BigInt { return 2 * m + 1; };
    const BigInt total = (side(box.a_max) * side(box.b_max) * side(box.c_max) - 1) / 2;
    return total.get_ui();
}

void enumerate_box_slice(const SearchBox& box, long long a_begin, long long a_end, const BoxVisitor& visit)
{
    const long long am = box.a_max.get_si(), bm = box.b_max.get_si(), cm = box.c_max.get_si();
    a_begin = std::max(a_begin, 0LL);
    a_end = std::min(a_end, am);
    for (long long a = a_begin; a <= a_end; ++a) {
        for (long long b = (a == 0 ? 0 : -bm); b <= bm; ++b) {
            for (long long c = (a == 0 && b == 0 ? 1 : -cm); c <= cm; ++c) visit(a, b, c);
        }
    }
}

void enumerate_box(const SearchBox& box, const BoxVisitor& visit)
{
    enumerate_box_slice(box, 0, box.a_max.get_si(), visit);
}

void enumerate_ball(const GramSchmidtData<Interval>& gs, const Interval& radius2, const BoxVisitor& visit)
{
    if (gs.size() != 3) throw std::invalid_argument("enumerate_ball: expected a 3-dimensional basis");
    const Interval r2(radius2.hi());
    // integer range [ceil(lo(center - s)), floor(hi(center + s))] with s^2 = rem / g
    const auto range = [](const Interval& center, const Interval& rem, const Interval& g) {
        const Interval s = sqrt(Interval(rem.hi()) / g);
        const BigInt lo = (center - s).lo().ceil();
        const BigInt hi = (center + s).hi().floor();
        return std::pair<long long, long long>(lo.get_si(), hi.get_si());
    };
    const auto [z_lo, z_hi] = range(Interval(0L), r2, gs.norm2[2]);
    for (long long z = z_lo; z <= z_hi; ++z) {
        const Interval zi(static_cast<long>(z));
        const Interval rem2 = r2 - gs.norm2[2] * square(zi);
        if (rem2.hi().sign() < 0) continue;
        const Interval cy = -(gs.mu(2, 1) * zi);
        const auto [y_lo, y_hi] = range(cy, rem2, gs.norm2[1]);
        for (long long y = y_lo; y <= y_hi; ++y) {
            const Interval rem1 = rem2 - gs.norm2[1] * square(Interval(static_cast<long>(y)) - cy);
            if (rem1.hi().sign() < 0) continue;
            const Interval cx = -(gs.mu(1, 0) * Interval(static_cast<long>(y)) + gs.mu(2, 0) * zi);
            const auto [x_lo, x_hi] = range(cx, rem1, gs.norm2[0]);
            for (long long x = x_lo; x <= x_hi; ++x) visit(x, y, z);
        }
    }
}

void enumerate_box_in_ball(const SearchBox& box, const GramSchmidtData<Interval>& gs,
                           const std::function<numerics::Dyadic()>& radius2, long long c_begin, long long c_end,
                           const BoxVisitor& visit)
{
    if (gs.size() != 3) throw std::invalid_argument("enumerate_box_in_ball: expected a 3-dimensional basis");
    const long long a_max = box.a_max.get_si(), b_max = box.b_max.get_si(), c_max = box.c_max.get_si();
    c_begin = std::max(c_begin, -c_max);
    c_end = std::min(c_end, c_max);
    // [ceil(lo(center - s)), floor(hi(center + s))] with s^2 = rem / g, or empty
    const auto range = [](const Interval& center, const Interval& rem, const Interval& g) {
        if (rem.hi().sign() < 0) return std::pair<long long, long long>(1, 0);
        const Interval s = sqrt(Interval(rem.hi()) / g);
        return std::pair<long long, long long>((center - s).lo().ceil().get_si(), (center + s).hi().floor().get_si());
    };
    for (long long z = c_begin; z <= c_end; ++z) {
        const Interval zi(static_cast<long>(z));
        const Interval rem2 = Interval(radius2()) - gs.norm2[2] * square(zi);
        const Interval cy = -(gs.mu(2, 1) * zi);
        auto [y_lo, y_hi] = range(cy, rem2, gs.norm2[1]);
        y_lo = std::max(y_lo, -b_max);
        y_hi = std::min(y_hi, b_max);
        for (long long y = y_lo; y <= y_hi; ++y) {
            const Interval yi(static_cast<long>(y));
            const Interval rem1 = Interval(radius2()) - gs.norm2[2] * square(zi) - gs.norm2[1] * square(yi - cy);
            const Interval cx = -(gs.mu(1, 0) * yi + gs.mu(2, 0) * zi);
            auto [x_lo, x_hi] = range(cx, rem1, gs.norm2[0]);
            // first nonzero coordinate positive
            x_lo = std::max(x_lo, (y > 0 || (y == 0 && z > 0)) ? 0LL : 1LL);
            x_hi = std::min(x_hi, a_max);
            for (long long x = x_lo; x <= x_hi; ++x) visit(x, y, z);
        }
    }
}

}  // namespace cubicmahler::lattice
