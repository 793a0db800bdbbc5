#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cubicmahler/fieldgen.hpp"
#include "cubicmahler/lattice.hpp"
#include "cubicmahler/mahler.hpp"

namespace cubicmahler::search {

using numerics::CertifiedReal;

/// Two candidate measures could not be ordered. Carries both candidates.
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An evaluated primitive element.
struct Candidate {
    /// Integral-basis coordinates, sign chosen so that the characteristic
    /// polynomial is the smaller of those of alpha and -alpha.
    Vector3<BigInt> coords;
    CubicPolynomial char_poly;
    CertifiedReal measure;
    numerics::IntPoly measure_poly;
};

/// Total order used to pick witnesses: measure, then (c2, c1, c0) of the
/// characteristic polynomial, then integral coordinates. Throws
/// CertificationError when two different measures cannot be separated.
bool candidate_less(const Candidate& a, const Candidate& b);

/// Candidate for alpha (or -alpha); nullopt when alpha is in Z.
std::optional<Candidate> evaluate(const CubicField& K, const Vector3<BigInt>& coords);

struct BoundChecks {
    /// 3^(-3/4) |D|^(1/4) <= M
    bool silverman = false;
    /// M <= 2^6 |D|^(1/2)
    bool upper = false;
    bool all() const { return silverman && upper; }
};

BoundChecks check_bounds(const CertifiedReal& measure, const BigInt& discriminant);

struct SearchOptions {
    lattice::LllConfig lll;
    /// Threads for scanning one box.
    unsigned jobs = 1;
    /// Shrink the search ball whenever the bound improves. The result is
    /// unchanged; candidates_examined then depends on jobs.
    bool shrink_on_improve = false;
};

struct SearchReport {
    CubicField field;
    Candidate witness;
    /// Witness coordinates in the reduced basis.
    Vector3<BigInt> witness_lll;
    Candidate seed;
    lattice::ReducedLattice lattice;
    lattice::SearchBox box;
    std::uint64_t candidates_examined = 0;
    std::uint64_t measures_computed = 0;
    BoundChecks bound_checks;

    const CertifiedReal& minimal_measure() const { return witness.measure; }
};

/// M(O_K) with a witness, by scanning the coefficient box of a reduced
/// Minkowski basis seeded with the measures of the basis elements.
SearchReport minimal_mahler(const CubicField& K, const SearchOptions& options = {});

enum class SignatureFilter { All, TotallyReal, Complex };

struct TabulateOptions {
    SearchOptions search;
    SignatureFilter signature = SignatureFilter::All;
    /// Worker threads over fields.
    unsigned jobs = 1;
};

/// One report per field with |D_K| <= disc_abs_bound, sorted by (|D|, sign, key).
std::vector<SearchReport> tabulate(const BigInt& disc_abs_bound, const TabulateOptions& options = {});

/// Same, for fields already enumerated.
std::vector<SearchReport> tabulate_fields(const std::vector<CubicField>& fields, const TabulateOptions& options = {});

/// Exhaustive minimum over integral coordinates in [-bound, bound]^3.
/// Nullopt when the cube holds no primitive element (bound < 1).
std::optional<Candidate> naive_oracle(const CubicField& K, long bound);

/// Smallest cube half-width containing the report's box mapped to
/// integral-basis coordinates.
BigInt covering_cube(const SearchReport& report);

}  // namespace cubicmahler::search
