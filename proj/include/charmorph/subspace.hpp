#pragma once

#include <vector>

#include "charmorph/matrix.hpp"

namespace charmorph {

/**
 * A linear subspace of k^ambient, held as its canonical reduced
 * row-echelon basis so that equality of subspaces is structural
 * equality of bases.
 */
class Subspace {
public:
    static Subspace zero(const FieldPtr& f, std::size_t ambient);
    static Subspace full(const FieldPtr& f, std::size_t ambient);
    static Subspace span(const FieldPtr& f, std::size_t ambient,
                         std::vector<std::vector<Scalar>> vectors);

    const FieldPtr& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::vector<Scalar>>& basis() const { return basis_; }

    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == ambient_; }
    bool is_proper_nonzero() const { return !is_zero() && !is_full(); }

    bool contains(const std::vector<Scalar>& v) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    std::string str() const;

private:
    Subspace(FieldPtr f, std::size_t ambient, std::vector<std::vector<Scalar>> basis)
        : field_(std::move(f)), ambient_(ambient), basis_(std::move(basis)) {}

    FieldPtr field_;
    std::size_t ambient_;
    std::vector<std::vector<Scalar>> basis_;  // RREF rows, pivots ascending
};

/// Null space of m, canonical basis.
Subspace kernel(const Matrix& m);

/// Smallest subspace containing seed and stable under every generator:
/// the fixpoint of repeated generator application and re-spanning.
Subspace spin_up(const Subspace& seed, const std::vector<Matrix>& generators);

}  // namespace charmorph
