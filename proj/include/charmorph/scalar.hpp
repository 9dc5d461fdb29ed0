#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "charmorph/field.hpp"

namespace charmorph {

/**
 * An exact field element in canonical form: a reduced fraction over Q,
 * a residue polynomial of degree < deg Phi_n over Q(zeta_n), or a
 * residue in [0, p) over GF(p).  Equality is structural.
 *
 * Values are immutable once built; all operations are pure, so Scalars
 * can be shared freely across threads.
 */
class Scalar {
public:
    static Scalar zero(const FieldPtr& f);
    static Scalar one(const FieldPtr& f);
    static Scalar of_integer(const FieldPtr& f, long v);
    static Scalar of_integer(const FieldPtr& f, const mpz_class& v);
    static Scalar of_rational(const FieldPtr& f, const mpq_class& v);

    /// Cyclotomic element from coefficients of powers of z (any length);
    /// reduced modulo Phi_n.
    static Scalar of_coefficients(const FieldPtr& f, std::vector<mpq_class> coeffs);

    /// Parses the scalar text grammar: "-3/2", "7", "1/2*z^2-z+3", "4".
    /// Whitespace-insensitive.  The generator z is only valid over
    /// cyclotomic fields.  line_no is echoed in ParseError diagnostics.
    static Scalar parse(const FieldPtr& f, std::string_view text, std::size_t line_no = 0);

    const FieldPtr& field() const { return field_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(std::uint64_t e) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_one() const;

    /// The rational value; only valid over Q.
    const mpq_class& rational_value() const { return std::get<mpq_class>(value_); }
    /// The residue in [0, p); only valid over GF(p).
    std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
    /// Coefficients of 1, z, ..., z^{deg-1}; only valid over Q(zeta_n).
    const std::vector<mpq_class>& coefficients() const {
        return std::get<std::vector<mpq_class>>(value_);
    }

    /// Canonical rendering.  Compact form has no whitespace and is what
    /// the input grammar expects inside matrix rows.
    std::string str(bool compact = false) const;

private:
    using Value = std::variant<mpq_class, std::vector<mpq_class>, std::uint64_t>;

    Scalar(FieldPtr f, Value v) : field_(std::move(f)), value_(std::move(v)) {}

    void require_same_field(const Scalar& o) const;

    FieldPtr field_;
    Value value_;
};

/// A primitive n-th root of unity: the class of z^{m/n} over Q(zeta_m)
/// when n | m, a multiplicative-order-n residue over GF(p) when n | p-1,
/// and +/-1 over Q for n <= 2.  Throws NoSuchRoot otherwise.
Scalar primitive_root_of_unity(const FieldPtr& f, unsigned n);

}  // namespace charmorph
