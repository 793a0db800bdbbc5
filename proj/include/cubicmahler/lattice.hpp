#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "cubicmahler/embed.hpp"

namespace cubicmahler::lattice {

using numerics::CertifiedReal;
using numerics::Interval;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

class DegenerateBasisError : public std::runtime_error {
public:
    DegenerateBasisError() : std::runtime_error("lattice basis is degenerate") {}
};

/// Raised when a reduction decision stays undecided at the precision ceiling.
class UndecidedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool possibly_zero(const BigRat& x) { return sgn(x) == 0; }
inline bool possibly_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool possibly_zero(const Interval& x) { return x.contains_zero(); }
inline bool possibly_zero(const CertifiedReal& x)
{
    const auto o = numerics::compare_strict(x, CertifiedReal(0), 256);
    return o == numerics::Ordering::EqualAsExact || o == numerics::Ordering::Undecided;
}

}  // namespace detail

/// Orthogonalization of the rows b_1..b_n: b_i* = b_i - sum_{j<i} mu_ij b_j*.
template <typename Scalar>
struct GramSchmidtData {
    MatrixX<Scalar> star;
    /// Strictly lower triangular part holds mu_ij; the diagonal is 1.
    MatrixX<Scalar> mu;
    std::vector<Scalar> norm2;

    int size() const { return static_cast<int>(star.rows()); }
};

/// Throws DegenerateBasisError if some |b_i*|^2 is (or may be) zero.
template <typename Scalar>
GramSchmidtData<Scalar> gram_schmidt(const MatrixX<Scalar>& rows)
{
    const Eigen::Index n = rows.rows();
    GramSchmidtData<Scalar> gs;
    gs.star = rows;
    gs.mu = MatrixX<Scalar>::Identity(n, n);
    gs.norm2.reserve(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < i; ++j) {
            const Scalar m = rows.row(i).dot(gs.star.row(j)) / gs.norm2[j];
            gs.mu(i, j) = m;
            gs.star.row(i) -= m * gs.star.row(j);
        }
        const Scalar len = gs.star.row(i).squaredNorm();
        if (detail::possibly_zero(len)) throw DegenerateBasisError();
        gs.norm2.push_back(len);
    }
    return gs;
}

template <typename Scalar, int R, int C>
GramSchmidtData<Scalar> gram_schmidt(const Eigen::Matrix<Scalar, R, C>& rows)
{
    return gram_schmidt<Scalar>(MatrixX<Scalar>(rows));
}

/// Exact LLL on rational rows. `transform` is unimodular with
/// basis = transform * input.
struct LllResult {
    MatrixX<BigRat> basis;
    MatrixX<BigInt> transform;
    GramSchmidtData<BigRat> gs;
    int swaps = 0;
};

LllResult lll_reduce(const MatrixX<BigRat>& rows, const BigRat& delta = BigRat(3, 4));
LllResult lll_reduce(const MatrixX<BigInt>& rows, const BigRat& delta = BigRat(3, 4));

/// Size reduction and Lovasz condition, checked exactly.
bool is_lll_reduced(const GramSchmidtData<BigRat>& gs, const BigRat& delta = BigRat(3, 4));

enum class LllMode { ExactRational, ScaledInt };

struct LllConfig {
    LllMode mode = LllMode::ExactRational;
    /// Decimal digits M of the 10^M scaling in ScaledInt mode.
    int scale_digits = 10;
    /// Largest working precision (bits) before giving up on a decision.
    long precision_ceiling = 4096;
};

/// Minkowski images of a Z-basis of O_K.
struct LatticeBasis {
    /// Rows phi(beta_i), certified.
    Matrix3<Interval> vectors;
    /// Rows: beta_i in integral-basis coordinates.
    Matrix3<BigInt> transform = Matrix3<BigInt>::Identity();
    LllMode mode = LllMode::ExactRational;
    int scale_digits = 0;
};

struct ReducedLattice {
    LatticeBasis basis;
    GramSchmidtData<Interval> gs;
    /// max |mu_ij| (upper endpoint), at least 1/2 only through rounding slack.
    numerics::Dyadic mu_bound;
    bool lovasz_certified = true;
    bool first_is_one = false;
    long bits = 0;
};

/// LLL-reduce the Minkowski lattice of O_K in the configured mode. Every
/// reduction step is taken on certified data, so the result is a basis of
/// O_K whatever the rounding; only the Lovasz condition may be left
/// uncertified at the precision ceiling.
ReducedLattice reduce_minkowski_lattice(const CubicField& K, const embed::ConjugateSet& roots,
                                        const LllConfig& config = {});

struct SearchBox {
    BigInt a_max = 0, b_max = 0, c_max = 0;
    /// Measure bound C the box was built for (upper endpoint used).
    Interval measure_bound;
    /// r1 + r2 of the field, i.e. 3 or 2.
    int f = 3;
};

/// Coordinates of every alpha with ||phi(alpha)|| <= f^(1/2) C lie in the box.
/// With m = max(1/2, max |mu|): |c| <= R / |b3*|, |b| <= R (1/|b2*| + m/|b3*|),
/// |a| <= R (1/|b1*| + m/|b2*| + (m^2 + m)/|b3*|), R = f^(1/2) C.
/// Throws std::invalid_argument when some |mu| certainly exceeds 1/2.
SearchBox coefficient_bounds(const GramSchmidtData<Interval>& gs, const Interval& measure_bound, int f);

/// Largest c >= 0 with c^2 |b3*|^2 < norm2_bound, which bounds the last
/// coordinate of every lattice vector of squared length below norm2_bound.
/// Undecided comparisons count c in.
BigInt last_coordinate_bound(const GramSchmidtData<CertifiedReal>& gs, const CertifiedReal& norm2_bound);

/// Number of triples enumerate_box yields.
std::uint64_t box_size(const SearchBox& box);

using BoxVisitor = std::function<void(long long, long long, long long)>;

/// Every nonzero (a, b, c) in the box with the first nonzero coordinate
/// positive, in lexicographic order.
void enumerate_box(const SearchBox& box, const BoxVisitor& visit);

/// The part of enumerate_box with a in [a_begin, a_end].
void enumerate_box_slice(const SearchBox& box, long long a_begin, long long a_end, const BoxVisitor& visit);

/// Every integer vector x (coordinates in the basis of `gs`) with
/// |sum x_i b_i|^2 <= radius2, zero included. Bounds are taken on upper
/// endpoints, so a few vectors slightly outside may also be visited.
void enumerate_ball(const GramSchmidtData<Interval>& gs, const Interval& radius2, const BoxVisitor& visit);

/// Points of enumerate_box with c in [c_begin, c_end] that also lie in the
/// ball of squared radius radius2(). The radius is read again before each
/// row, so the visitor may shrink it.
void enumerate_box_in_ball(const SearchBox& box, const GramSchmidtData<Interval>& gs,
                           const std::function<numerics::Dyadic()>& radius2, long long c_begin, long long c_end,
                           const BoxVisitor& visit);

}  // namespace cubicmahler::lattice
