#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "charmorph/polynomial.hpp"
#include "charmorph/scalar.hpp"

namespace charmorph {

/// Dense square matrix over an exact field.  Immutable value semantics;
/// entries are stored row-major.
class Matrix {
public:
    Matrix(FieldPtr f, std::size_t dim, std::vector<Scalar> entries);

    static Matrix zero(const FieldPtr& f, std::size_t dim);
    static Matrix identity(const FieldPtr& f, std::size_t dim);
    /// c * identity
    static Matrix scalar(const FieldPtr& f, std::size_t dim, const Scalar& c);
    /// Convenience builder from small integers (tests, fixtures).
    static Matrix of_ints(const FieldPtr& f, const std::vector<std::vector<long>>& rows);

    const FieldPtr& field() const { return field_; }
    std::size_t dim() const { return dim_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Scalar& c) const;
    Matrix operator-() const;
    Matrix pow(std::uint64_t e) const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;

    Scalar trace() const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    std::size_t rank() const;
    /// Gauss-Jordan inverse; nullopt when singular.
    std::optional<Matrix> inverse() const;

    std::string str() const;

private:
    void require_compatible(const Matrix& o) const;

    FieldPtr field_;
    std::size_t dim_;
    std::vector<Scalar> entries_;
};

/// det(tI - M) by the Berkowitz iteration: division-free, so valid over
/// every field including small characteristic.  Monic of degree dim.
Polynomial char_poly(const Matrix& m);

/// Least-degree monic annihilator, found as the first linear dependence
/// among the vectorized powers I, M, M^2, ...  Divides char_poly(m).
Polynomial min_poly(const Matrix& m);

}  // namespace charmorph
