#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace charmorph {

enum class FieldKind { Rational, Cyclotomic, Prime };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * An exact coefficient field: the rationals, a cyclotomic field
 * Q[z]/(Phi_n(z)), or a prime field Z/p.
 *
 * Instances are immutable and shared; Scalars keep a FieldPtr to
 * their field.  Equality is structural (kind and parameter), not
 * pointer identity.  The cyclotomic modulus Phi_n is computed once
 * at construction, so arithmetic never re-derives it.
 */
class Field {
public:
    static FieldPtr rationals();

    /// Q(zeta_n) modeled as Q[z]/(Phi_n), n >= 1.
    static FieldPtr cyclotomic(unsigned n);

    /// Z/p; p must be prime and fit in 32 bits (validated by trial division).
    static FieldPtr prime(std::uint64_t p);

    FieldKind kind() const { return kind_; }

    /// n for cyclotomic fields, 0 otherwise.
    unsigned cyclotomic_order() const { return kind_ == FieldKind::Cyclotomic ? param_ : 0; }

    /// p for prime fields, 0 in characteristic zero.
    std::uint64_t characteristic() const { return kind_ == FieldKind::Prime ? param_ : 0; }

    /// Degree over the prime field / Q: deg Phi_n for cyclotomic, else 1.
    unsigned degree() const { return degree_; }

    std::uint64_t prime_modulus() const { return kind_ == FieldKind::Prime ? param_ : 0; }

    /// Coefficients of Phi_n, ascending, monic; empty unless cyclotomic.
    const std::vector<mpz_class>& modulus() const { return modulus_; }

    bool operator==(const Field& other) const {
        return kind_ == other.kind_ && param_ == other.param_;
    }
    bool operator!=(const Field& other) const { return !(*this == other); }

    /// "Q", "Q(zeta_5)", "GF(7)".
    std::string name() const;

private:
    Field(FieldKind kind, std::uint64_t param);

    FieldKind kind_;
    std::uint64_t param_;  // n or p; unused for Q
    unsigned degree_;
    std::vector<mpz_class> modulus_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a && b && *a == *b;
}

/// Coefficients of the n-th cyclotomic polynomial Phi_n, ascending, monic.
/// Computed by recursive exact division of z^n - 1 by the Phi_d, d | n, d < n.
std::vector<mpz_class> cyclotomic_coefficients(unsigned n);

/// Euler totient (degree of Phi_n).
unsigned euler_totient(unsigned n);

bool is_prime_u64(std::uint64_t p);

}  // namespace charmorph
