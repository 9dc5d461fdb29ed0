#pragma once

#include <string>
#include <utility>
#include <vector>

#include "charmorph/scalar.hpp"

namespace charmorph {

class Matrix;

/**
 * Exact univariate polynomial over a field, ascending coefficients,
 * trailing zeros stripped.  The zero polynomial has no coefficients
 * and degree -1.
 */
class Polynomial {
public:
    Polynomial(FieldPtr f, std::vector<Scalar> coeffs);

    static Polynomial zero(const FieldPtr& f) { return Polynomial(f, {}); }
    static Polynomial constant(const Scalar& c);
    static Polynomial monomial(const Scalar& c, std::size_t degree);
    /// t - root
    static Polynomial linear_root(const Scalar& root);

    const FieldPtr& field() const { return field_; }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    /// Coefficient of t^k (zero beyond the degree).
    Scalar coeff(std::size_t k) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& c) const;
    Polynomial operator-() const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    bool divides(const Polynomial& multiple) const;

    Scalar eval(const Scalar& x) const;
    /// Horner evaluation with the matrix substituted for t.
    Matrix eval(const Matrix& m) const;

    std::string str(const std::string& var = "t") const;

private:
    FieldPtr field_;
    std::vector<Scalar> coeffs_;
};

/// Phi_n as a polynomial over Q: monic, integer coefficients, degree
/// phi(n), with prod_{m | n} Phi_m = z^n - 1.
Polynomial cyclotomic_polynomial(unsigned n);

}  // namespace charmorph
