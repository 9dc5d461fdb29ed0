#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "charmorph/algebra.hpp"
#include "charmorph/report.hpp"

namespace charmorph {

/**
 * The certification procedures for a linear map phi: k^d -> End(k^dim),
 * phi(e_i) = alpha_i.  Each check is a pure function returning a full
 * CheckReport; equation indices are evaluated in a fixed deterministic
 * order, so reports are reproducible.
 */

/// Defining relations of k^d: sum alpha_i = id, alpha_i^2 = alpha_i,
/// alpha_i alpha_j = 0 for i != j.  Pass means phi is a (unital)
/// algebra homomorphism.
CheckReport is_algebra_homomorphism(const LinearMap& phi);

/// The characteristic identity: expands prod_i (T - x_i) with
/// T = sum_j x_j alpha_j over commuting variables x_1..x_d and requires
/// every degree-d coefficient matrix to vanish.  Equivalent to
/// "char poly of a annihilates phi(a) for all a".
CheckReport characteristic_check(const LinearMap& phi);

/// The minimal-polynomial identity, stratified by coincidence pattern:
/// for every set partition {B_1..B_r} of {1..d} the blocks'
/// beta_m = sum_{i in B_m} alpha_i must satisfy the r-variable
/// characteristic identity.  Pass means "min poly of a annihilates
/// phi(a) for all a".
CheckReport minimal_characteristic_check(const LinearMap& phi);

enum class NcMode { Fast, Naive };

/// The noncommutative characteristic identity: for every multi-index
/// (i_1..i_d) the symmetrized residual
///     R = sum_{sigma in S_d} prod_k (alpha_{i_k} - delta^{i_k}_{sigma(k)})
/// (ordered product) must vanish.  Fast mode evaluates R by
/// inclusion-exclusion over the positions that contribute a delta:
///     R = sum_{S, k -> i_k injective on S} (-1)^|S| (d-|S|)!
///         prod_{k not in S} alpha_{i_k};
/// naive mode sums over all d! permutations and is kept as the oracle.
/// Requires characteristic 0 or > d (CharacteristicTooSmall otherwise).
CheckReport nc_characteristic_check(const LinearMap& phi, NcMode mode = NcMode::Fast);

/// One multi-index residual (indices 0-based).
Matrix nc_residual(const LinearMap& phi, const std::vector<std::size_t>& index, NcMode mode);

/// All d^d residuals in lexicographic multi-index order.
std::vector<std::pair<std::vector<std::size_t>, Matrix>> nc_residuals(const LinearMap& phi,
                                                                      NcMode mode);

enum class RootsMode { Full, ProofPath };

/// The torsion test: phi(1) = id and phi(a)^n = id for n-torsion a.
/// Full mode enumerates all n^d elements (zeta^{c_1}, ..., zeta^{c_d});
/// proof-path mode checks only 1 + (zeta^b - 1)e_i and
/// 1 + (zeta^a - 1)(e_i + e_j), which drive the same conclusion.
/// Requires n > 2 (NTooSmall) and a field with n distinct n-th roots
/// of unity (NoSuchRoot).
CheckReport roots_of_unity_check(const LinearMap& phi, unsigned n,
                                 RootsMode mode = RootsMode::Full);

/// Number of torsion elements full mode would enumerate (n^d), used by
/// callers that fall back to the proof path when this explodes.
double roots_full_cost(const LinearMap& phi, unsigned n);

/// Exponent quadruple (a, b, c, d) violating the root-ratio dichotomy.
struct RootRatioQuadruple {
    unsigned a, b, c, d;
};

/// Exhaustively tests, over all (a,b,c,d) in (Z_n)^4 with b,d != 0:
/// if (zeta^a - 1)(zeta^d - 1) = (zeta^c - 1)(zeta^b - 1) then a=b,c=d
/// or a=c,b=d (mod n) -- unless a = c = 0, where both sides of the
/// ratio form are 0/nonzero and the equality carries no information.
/// Returns the violating quadruples; the expected result is empty.
std::vector<RootRatioQuadruple> verify_root_ratio_lemma(unsigned n, const FieldPtr& f);

}  // namespace charmorph
