#pragma once

#include <vector>

#include "charmorph/matrix.hpp"
#include "charmorph/polynomial.hpp"

namespace charmorph {

/// An element a = (a_1, ..., a_d) of the split algebra k^d, coordinates
/// in the basis of orthogonal idempotents e_1, ..., e_d.
class AlgebraElement {
public:
    AlgebraElement(FieldPtr f, std::vector<Scalar> coords);

    static AlgebraElement unit(const FieldPtr& f, std::size_t d);        // (1, ..., 1)
    static AlgebraElement idempotent(const FieldPtr& f, std::size_t d, std::size_t i);

    const FieldPtr& field() const { return field_; }
    std::size_t d() const { return coords_.size(); }
    const std::vector<Scalar>& coords() const { return coords_; }
    const Scalar& coord(std::size_t i) const { return coords_[i]; }

    bool operator==(const AlgebraElement& o) const;

    std::string str() const;

private:
    FieldPtr field_;
    std::vector<Scalar> coords_;
};

/**
 * A linear map phi: k^d -> End(k^dim), stored as the images
 * alpha_i = phi(e_i) of the coordinate idempotents.  The tuple
 * determines phi by linearity.
 */
class LinearMap {
public:
    LinearMap(FieldPtr f, std::vector<Matrix> alphas);

    const FieldPtr& field() const { return field_; }
    std::size_t d() const { return alphas_.size(); }
    std::size_t dim() const { return dim_; }
    const std::vector<Matrix>& alphas() const { return alphas_; }
    const Matrix& alpha(std::size_t i) const { return alphas_[i]; }

    bool operator==(const LinearMap& o) const;

private:
    FieldPtr field_;
    std::size_t dim_;
    std::vector<Matrix> alphas_;
};

/// phi(a) = sum_i a_i alpha_i.
Matrix apply(const LinearMap& phi, const AlgebraElement& a);

/// Characteristic polynomial of left multiplication by a on k^d:
/// prod_i (t - a_i).
Polynomial char_poly_element(const AlgebraElement& a);

/// Minimal polynomial of left multiplication by a: one linear factor
/// per distinct coordinate value.
Polynomial min_poly_element(const AlgebraElement& a);

}  // namespace charmorph
