#pragma once

#include <random>

#include "charmorph/algebra.hpp"

namespace charmorph::sampling {

using Rng = std::mt19937_64;

/// Small-height random element: bounded fractions over Q, bounded
/// integer coefficient vectors over Q(zeta_n), uniform residues mod p.
Scalar random_scalar(const FieldPtr& f, Rng& rng, long height = 3);

Matrix random_matrix(const FieldPtr& f, std::size_t dim, Rng& rng, long height = 3);

/// Rejection-samples until full rank.
Matrix random_invertible(const FieldPtr& f, std::size_t dim, Rng& rng);

LinearMap random_linear_map(const FieldPtr& f, std::size_t d, std::size_t dim, Rng& rng,
                            long height = 3);

/// A genuine homomorphism in disguise: a random block-diagonal 0/1
/// idempotent pattern conjugated by a random invertible matrix.
LinearMap random_conjugated_hom(const FieldPtr& f, std::size_t d, std::size_t dim, Rng& rng);

/// Copy with a random offset added to one random entry of one alpha_i.
LinearMap perturb_one_entry(const LinearMap& phi, Rng& rng);

}  // namespace charmorph::sampling
