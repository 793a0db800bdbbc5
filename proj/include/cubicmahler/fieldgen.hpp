#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cubicmahler/field.hpp"

namespace cubicmahler::fieldgen {

/// Thrown for a reducible polynomial where an irreducible one is required.
class ReducibleError : public std::invalid_argument {
public:
    explicit ReducibleError(const CubicPolynomial& f);
};

/// Hunter bound T2 <= t^2/3 + gamma_2 (N/3)^(1/2) with gamma_2 = 2/sqrt(3),
/// compared exactly. True when the coefficients of f (trace t = -c2) satisfy
/// |c2^2 - 2 c1| <= U, |c1| <= U and |c0| <= (U/3)^(3/2).
bool in_hunter_box(const CubicPolynomial& f, const BigInt& disc_abs_bound);

/// Monic irreducible cubics with c2 in {0, -1} inside the Hunter box for
/// `disc_abs_bound`, in lexicographic (c2, c1, c0) order.
std::vector<CubicPolynomial> enumerate_polynomials(const BigInt& disc_abs_bound);

/// Visit the same stream without materializing it.
void for_each_polynomial(const BigInt& disc_abs_bound, const std::function<void(const CubicPolynomial&)>& visit);

/// Dedekind criterion for Z[theta] at p: true iff p does not divide the index.
bool dedekind_p_maximal(const CubicPolynomial& f, const BigInt& p);

/// An element of O_K \ O with p times it in O, found among the projective
/// points of the p-radical of O / pO; nullopt iff O is p-maximal.
/// The result is in power-basis coordinates.
std::optional<Vector3<BigRat>> p_enlargement(const CubicField& order, const BigInt& p);

/// Hermite basis (rows, power basis) of the Z-module spanned by `rows`,
/// in the layout w1 = 1, w2 = (u + v theta) / d2, w3 = (x + y theta + z theta^2) / d3.
Matrix3<BigRat> hermite_basis(const std::vector<Vector3<BigRat>>& rows);

/// Maximal order of Q(theta) for monic irreducible f: D_K, index and
/// integral basis, via the factorization of disc(f).
/// Throws ReducibleError or numerics::FactorizationError.
CubicField field_discriminant(const CubicPolynomial& f);

struct CanonicalKey {
    BigInt discriminant;
    BigInt c2, c1, c0;

    /// The polynomial x^3 + c2 x^2 + c1 x + c0.
    CubicPolynomial polynomial() const { return CubicPolynomial::monic(c2, c1, c0); }
    BigInt t2() const { return c2 * c2 - 2 * c1; }

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    /// Order used for sorting: |D|, sign of D, then (T2, c2, c1, c0).
    friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b);
};

/// True iff g has a root in K (so Q(root of g) is isomorphic to K when g is
/// an irreducible cubic).
bool has_root_in(const CubicField& K, const CubicPolynomial& g);

/// Least (T2, c2, c1, c0) over char polys x^3 + c2 x^2 + c1 x + c0 of
/// primitive elements of O_K with c2 in {0, -1} inside the Hunter box for |D_K|.
CanonicalKey canonical_key(const CubicField& K);

struct EnumerateOptions {
    /// Process the polynomial stream back to front (the output must not change).
    bool reverse_stream = false;
    unsigned jobs = 1;
};

/// One field per isomorphism class with disc_min <= D_K <= disc_max, sorted
/// by (|D_K|, sign, canonical key). Each field is built on its key polynomial.
std::vector<CubicField> enumerate_fields(const BigInt& disc_min, const BigInt& disc_max,
                                         const EnumerateOptions& options = {});

/// Key and field together, as produced by the enumerator.
struct KeyedField {
    CanonicalKey key;
    CubicField field;
};
std::vector<KeyedField> enumerate_keyed_fields(const BigInt& disc_min, const BigInt& disc_max,
                                               const EnumerateOptions& options = {});

}  // namespace cubicmahler::fieldgen
