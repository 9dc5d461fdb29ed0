#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charmorph/algebra.hpp"
#include "charmorph/subspace.hpp"

namespace charmorph {

/// Basis of the unital subalgebra of End(k^dim) generated by the
/// alpha_i, computed by closing {id, alpha_1, ..., alpha_d} under
/// products.  dimension <= dim^2.
struct GeneratedAlgebra {
    std::vector<Matrix> basis;
    std::size_t dimension = 0;
};

GeneratedAlgebra generated_algebra(const LinearMap& phi);

enum class IrredStatus { Irreducible, Reducible, Unknown };

struct IrreducibilityCertificate {
    enum class Kind { GeneratedDimension, ExhaustiveSpinUp };
    Kind kind;
    std::size_t generated_dimension = 0;  // meaningful for GeneratedDimension
};

/**
 * Verdict on whether k^dim has a proper nonzero subspace invariant
 * under every alpha_i.  Reducible always carries a verified witness;
 * Irreducible carries its certificate: the full matrix algebra
 * (dimension dim^2, sufficient over any field) or an exhaustive
 * spin-up over every projective point of a small prime field.
 * Over infinite fields the heuristic may return Unknown.
 */
struct IrreducibilityVerdict {
    IrredStatus status = IrredStatus::Unknown;
    std::optional<Subspace> witness;
    std::optional<IrreducibilityCertificate> certificate;
};

IrreducibilityVerdict irreducibility(const LinearMap& phi);

/// Restriction of every alpha_i to a subspace they preserve, expressed
/// in the subspace's canonical basis.  Throws DimensionMismatch when
/// some alpha_i does not map the subspace into itself.
LinearMap restrict_to_invariant(const LinearMap& phi, const Subspace& invariant);

/// The induced maps on k^dim / invariant, in the coordinates of the
/// non-pivot positions of the canonical basis.
LinearMap quotient_by_invariant(const LinearMap& phi, const Subspace& invariant);

/// The exhaustive decision procedure on its own: spins up every
/// projective point of GF(p)^dim.  Returns nullopt when the field is
/// not prime or the point count exceeds the desk budget (1e5).
std::optional<IrreducibilityVerdict> exhaustive_spin_up_verdict(const LinearMap& phi);

/// Roots of p lying in the coefficient field.  Exact over GF(p) (trial
/// over residues) and over Q (rational root theorem when the cleared
/// coefficients factor in budget); a probe of simple candidates over
/// cyclotomic fields, which is all the heuristic reducibility search
/// needs.
std::vector<Scalar> roots_in_field(const Polynomial& p);

// ----------------------------------------------------------------------
// Paper-derived fixtures
// ----------------------------------------------------------------------

/// alpha_1 = [[1,a],[0,0]], alpha_2 = [[0,b],[0,1]]; requires a+b != 0
/// (with a+b = 0 the map degenerates to an honest representation).
LinearMap fixture_example1(const FieldPtr& f, const Scalar& a, const Scalar& b);
LinearMap fixture_example1(const FieldPtr& f, long a, long b);

/// The irreducible non-homomorphism on k^3: three 3x3 matrices with a
/// global 1/2 factor; requires characteristic != 2.
LinearMap fixture_example2(const FieldPtr& f);

/// Block-diagonal homomorphism: alpha_i acts as the identity on its
/// own block of the given size (sizes may be zero); dim is the sum.
LinearMap fixture_diag_hom(const FieldPtr& f, const std::vector<std::size_t>& multiplicities);

// ----------------------------------------------------------------------
// Desk-scale search
// ----------------------------------------------------------------------

enum class SearchMode { Exhaustive, Random };

/// Conjugation-invariant fingerprint: the sorted characteristic
/// polynomials of the alpha_i plus traces of all words of length <= 3.
std::string conjugation_signature(const LinearMap& phi);

struct SearchResult {
    LinearMap map;
    bool is_hom = false;
    bool is_characteristic = true;
    IrreducibilityVerdict irreducibility;
    std::string signature;
};

struct SearchStats {
    std::uint64_t enumerated = 0;
    std::uint64_t characteristic_passes = 0;
    std::uint64_t distinct_signatures = 0;
};

struct SearchOutput {
    std::vector<SearchResult> results;
    SearchStats stats;
};

/**
 * Enumerates (exhaustive, prime fields, lexicographic by entries) or
 * samples (random, budget trials, explicit seed) d-tuples of dim x dim
 * matrices, keeps the characteristic morphisms, classifies each and
 * deduplicates by signature.  Exhaustive mode requires
 * p^(d*dim^2) <= 1e7 (SearchSpaceTooLarge otherwise).
 */
SearchOutput search(const FieldPtr& f, std::size_t d, std::size_t dim, SearchMode mode,
                    std::uint64_t budget, std::uint64_t seed = 0);

}  // namespace charmorph
