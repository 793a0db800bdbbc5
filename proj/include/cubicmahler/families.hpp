#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubicmahler/search.hpp"

namespace cubicmahler::families {

using numerics::CertifiedReal;

/// f_n = x^3 + n x^2 - (n+3) x + 1, g_n = x^3 - n x^2 + n,
/// h_n = x^3 + n x^2 + n, and x^3 - p.
enum class Family { Simplest, G, H, Kummer };

std::string to_string(Family f);
/// "simplest", "g", "h" or "kummer".
std::optional<Family> parse_family(const std::string& name);

struct FamilyInstance {
    Family tag = Family::Simplest;
    BigInt parameter;
    CubicPolynomial poly;
    /// Discriminant of the polynomial by the closed formula of the family.
    BigInt predicted_poly_disc;
    /// The maximal order of Q(root of poly).
    CubicField field;

    bool parameter_prime = false;
    /// 4n^2 -+ 27 squarefree (G and H only).
    bool squarefree_condition = false;
    /// p not congruent to +-1 mod 9 (Kummer only).
    bool residue_condition = false;
    /// The family's hypotheses hold, so its statements apply. For Simplest
    /// this means D_K equals the predicted discriminant.
    bool eligible = false;

    // Kummer data: theta = p^(1/3), k the nearest integer, alpha = theta - k.
    CertifiedReal theta;
    BigInt k;
    CertifiedReal alpha;
};

/// Throws std::invalid_argument for a parameter outside the family's range
/// (n >= 0, n > 2, n >= 1, or p prime with p != +-1 mod 9).
FamilyInstance make_instance(Family tag, const BigInt& parameter);

/// Claimed interval per root, verified with certified comparisons.
struct RootIntervalCheck {
    bool applicable = true;
    bool holds = false;
    /// One line per interval that failed.
    std::vector<std::string> failures;
};

RootIntervalCheck verify_root_intervals(const FamilyInstance& inst);

/// Smallest parameters from which each "sufficiently large" claim was
/// observed to hold, read from a key=value file.
class Thresholds {
public:
    static constexpr const char* kSimplestRoots = "simplest.root_intervals";
    static constexpr const char* kSimplestBound = "simplest.theorem_bound";
    static constexpr const char* kGRoots = "g.root_intervals";
    static constexpr const char* kGBound = "g.theorem_bound";
    static constexpr const char* kHRoots = "h.root_intervals";
    static constexpr const char* kHBound = "h.theorem_bound";
    static constexpr const char* kKummerUpper = "kummer.upper_lemma";

    std::optional<BigInt> get(const std::string& key) const;
    void set(const std::string& key, const BigInt& value) { values_[key] = value; }
    const std::map<std::string, BigInt>& values() const { return values_; }

    /// Lines "key = value"; '#' starts a comment. Throws std::runtime_error
    /// on malformed lines.
    static Thresholds parse(std::istream& in);
    static Thresholds load(const std::string& path);
    void write(std::ostream& out) const;

private:
    std::map<std::string, BigInt> values_;
};

struct BoundVerdict {
    std::string name;
    /// The statement is claimed for this instance (eligible and above threshold).
    bool asserted = false;
    bool holds = false;
};

/// The family's M^4 / |D| bound, the general bounds and the Kummer estimates,
/// each evaluated with certified comparisons against report's M(O_K).
std::vector<BoundVerdict> verify_theorem_bounds(const FamilyInstance& inst, const search::SearchReport& report,
                                                const Thresholds& thresholds);

/// M(theta - k) for a Kummer instance.
CertifiedReal kummer_shift_measure(const FamilyInstance& inst);

/// |a + omega b theta|^2 from the Minkowski embedding of a + b theta, and
/// the closed form a^2 - a b theta + b^2 theta^2; true when the two
/// enclosures overlap and both are narrower than 2^-100 relative.
bool verify_kummer_conjugate_identity(const BigInt& a, const BigInt& b, const BigInt& p);

/// True iff no prime square divides m; |m| >= 1.
bool squarefree(const BigInt& m);

/// Smallest n0 in [lo, hi] such that pass(n) holds for every tested n >= n0,
/// or nullopt if pass(hi) fails. Parameters that are not tested
/// (test(n) false) are skipped.
template <typename Test, typename Pass>
std::optional<BigInt> first_stable_parameter(long lo, long hi, Test&& test, Pass&& pass)
{
    std::optional<BigInt> first;
    for (long n = lo; n <= hi; ++n) {
        if (!test(n)) continue;
        if (pass(n)) {
            if (!first) first = BigInt(n);
        } else {
            first.reset();
        }
    }
    return first;
}

}  // namespace cubicmahler::families
