#include "charmorph/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "charmorph/error.hpp"

namespace charmorph {

namespace {

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + b) % p; }
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b) % p; }
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw DivisionByZero();
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp_t = t - q * new_t;
        t = new_t;
        new_t = tmp_t;
        std::int64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_integer_mod(const mpz_class& v, std::uint64_t p) {
    mpz_class r = v % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

// --- dense Q[z] helpers for cyclotomic reduction and inversion ---

using QPoly = std::vector<mpq_class>;

void strip(QPoly& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

QPoly reduce_mod(QPoly v, const std::vector<mpz_class>& modulus) {
    const std::size_t m = modulus.size() - 1;
    if (v.size() < m) {
        v.resize(m);
        return v;
    }
    for (std::size_t k = v.size(); k-- > m;) {
        mpq_class c = v[k];
        if (c == 0) continue;
        v[k] = 0;
        for (std::size_t j = 0; j < m; ++j) v[k - m + j] -= c * modulus[j];
    }
    v.resize(m);
    return v;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
    QPoly out(a.size() + b.size() > 1 ? a.size() + b.size() - 1 : 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Remainder of a by monic-normalized b; also accumulates the quotient action
// on a companion vector when tracking Bezout coefficients.
QPoly poly_divmod(QPoly a, const QPoly& b, QPoly* quotient) {
    strip(a);
    QPoly q;
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        mpq_class c = a.back() / b.back();
        std::size_t shift = a.size() - 1 - db;
        if (q.size() < shift + 1) q.resize(shift + 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
        strip(a);
        if (a.empty()) break;
    }
    if (quotient) *quotient = std::move(q);
    return a;
}

// u with u*a == 1 mod modulus; modulus irreducible so any nonzero a works.
QPoly poly_inverse_mod(QPoly a, const std::vector<mpz_class>& modulus) {
    QPoly r0(modulus.begin(), modulus.end());
    QPoly r1 = std::move(a);
    strip(r1);
    if (r1.empty()) throw DivisionByZero();
    QPoly s0 = {}, s1 = {mpq_class(1)};
    while (!r1.empty()) {
        QPoly q;
        QPoly r2 = poly_divmod(std::move(r0), r1, &q);
        QPoly s2 = s0;
        QPoly qs = poly_mul(q, s1);
        if (s2.size() < qs.size()) s2.resize(qs.size());
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        strip(s2);
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(r2);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant: gcd(a, Phi_n).
    mpq_class c = r0.at(0);
    for (auto& v : s0) v /= c;
    return reduce_mod(std::move(s0), modulus);
}

}  // namespace

void Scalar::require_same_field(const Scalar& o) const {
    if (!same_field(field_, o.field_))
        throw MixedFields("operands in " + field_->name() + " and " + o.field_->name());
}

Scalar Scalar::zero(const FieldPtr& f) { return of_integer(f, 0L); }
Scalar Scalar::one(const FieldPtr& f) { return of_integer(f, 1L); }

Scalar Scalar::of_integer(const FieldPtr& f, long v) { return of_integer(f, mpz_class(v)); }

Scalar Scalar::of_integer(const FieldPtr& f, const mpz_class& v) {
    switch (f->kind()) {
        case FieldKind::Rational: return Scalar(f, mpq_class(v));
        case FieldKind::Cyclotomic: {
            QPoly c(f->degree());
            c[0] = v;
            return Scalar(f, std::move(c));
        }
        case FieldKind::Prime: return Scalar(f, reduce_integer_mod(v, f->prime_modulus()));
    }
    throw Error("unreachable");
}

Scalar Scalar::of_rational(const FieldPtr& f, const mpq_class& v) {
    switch (f->kind()) {
        case FieldKind::Rational: return Scalar(f, v);
        case FieldKind::Cyclotomic: {
            QPoly c(f->degree());
            c[0] = v;
            return Scalar(f, std::move(c));
        }
        case FieldKind::Prime: {
            std::uint64_t p = f->prime_modulus();
            std::uint64_t num = reduce_integer_mod(v.get_num(), p);
            std::uint64_t den = reduce_integer_mod(v.get_den(), p);
            return Scalar(f, mod_mul(num, mod_inverse(den, p), p));
        }
    }
    throw Error("unreachable");
}

Scalar Scalar::of_coefficients(const FieldPtr& f, std::vector<mpq_class> coeffs) {
    if (f->kind() != FieldKind::Cyclotomic)
        throw MixedFields("coefficient vectors require a cyclotomic field");
    return Scalar(f, reduce_mod(std::move(coeffs), f->modulus()));
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    switch (field_->kind()) {
        case FieldKind::Rational:
            return Scalar(field_, mpq_class(rational_value() + o.rational_value()));
        case FieldKind::Cyclotomic: {
            QPoly v = coefficients();
            const QPoly& w = o.coefficients();
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += w[i];
            return Scalar(field_, std::move(v));
        }
        case FieldKind::Prime:
            return Scalar(field_, mod_add(residue(), o.residue(), field_->prime_modulus()));
    }
    throw Error("unreachable");
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    switch (field_->kind()) {
        case FieldKind::Rational:
            return Scalar(field_, mpq_class(rational_value() - o.rational_value()));
        case FieldKind::Cyclotomic: {
            QPoly v = coefficients();
            const QPoly& w = o.coefficients();
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
            return Scalar(field_, std::move(v));
        }
        case FieldKind::Prime:
            return Scalar(field_, mod_sub(residue(), o.residue(), field_->prime_modulus()));
    }
    throw Error("unreachable");
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    switch (field_->kind()) {
        case FieldKind::Rational:
            return Scalar(field_, mpq_class(rational_value() * o.rational_value()));
        case FieldKind::Cyclotomic:
            return Scalar(field_, reduce_mod(poly_mul(coefficients(), o.coefficients()),
                                             field_->modulus()));
        case FieldKind::Prime:
            return Scalar(field_, mod_mul(residue(), o.residue(), field_->prime_modulus()));
    }
    throw Error("unreachable");
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    switch (field_->kind()) {
        case FieldKind::Rational: return Scalar(field_, mpq_class(-rational_value()));
        case FieldKind::Cyclotomic: {
            QPoly v = coefficients();
            for (auto& c : v) c = -c;
            return Scalar(field_, std::move(v));
        }
        case FieldKind::Prime: {
            std::uint64_t r = residue();
            return Scalar(field_, r == 0 ? 0 : field_->prime_modulus() - r);
        }
    }
    throw Error("unreachable");
}

Scalar Scalar::inverse() const {
    switch (field_->kind()) {
        case FieldKind::Rational: {
            if (rational_value() == 0) throw DivisionByZero();
            return Scalar(field_, mpq_class(1 / rational_value()));
        }
        case FieldKind::Cyclotomic:
            return Scalar(field_, poly_inverse_mod(coefficients(), field_->modulus()));
        case FieldKind::Prime:
            return Scalar(field_, mod_inverse(residue(), field_->prime_modulus()));
    }
    throw Error("unreachable");
}

Scalar Scalar::pow(std::uint64_t e) const {
    Scalar base = *this;
    Scalar acc = one(field_);
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_field(o);
    return value_ == o.value_;
}

bool Scalar::is_zero() const {
    switch (field_->kind()) {
        case FieldKind::Rational: return rational_value() == 0;
        case FieldKind::Cyclotomic: {
            for (const auto& c : coefficients())
                if (c != 0) return false;
            return true;
        }
        case FieldKind::Prime: return residue() == 0;
    }
    throw Error("unreachable");
}

bool Scalar::is_one() const {
    switch (field_->kind()) {
        case FieldKind::Rational: return rational_value() == 1;
        case FieldKind::Cyclotomic: {
            const auto& c = coefficients();
            if (c[0] != 1) return false;
            for (std::size_t i = 1; i < c.size(); ++i)
                if (c[i] != 0) return false;
            return true;
        }
        case FieldKind::Prime: return residue() == 1;
    }
    throw Error("unreachable");
}

namespace {

std::string rational_str(const mpq_class& q) { return q.get_str(); }

void append_term(std::string& out, const mpq_class& coef, std::size_t exp, bool compact) {
    const bool first = out.empty();
    mpq_class c = coef;
    if (first) {
        if (c < 0) {
            out += '-';
            c = -c;
        }
    } else {
        out += compact ? (coef < 0 ? "-" : "+") : (coef < 0 ? " - " : " + ");
        if (c < 0) c = -c;
    }
    if (exp == 0) {
        out += rational_str(c);
        return;
    }
    if (c != 1) {
        out += rational_str(c);
        out += '*';
    }
    out += 'z';
    if (exp > 1) {
        out += '^';
        out += std::to_string(exp);
    }
}

}  // namespace

std::string Scalar::str(bool compact) const {
    switch (field_->kind()) {
        case FieldKind::Rational: return rational_str(rational_value());
        case FieldKind::Prime: return std::to_string(residue());
        case FieldKind::Cyclotomic: {
            const auto& c = coefficients();
            std::string out;
            for (std::size_t k = c.size(); k-- > 0;) {
                if (c[k] != 0) append_term(out, c[k], k, compact);
            }
            return out.empty() ? "0" : out;
        }
    }
    throw Error("unreachable");
}

// ------------------------------ parsing ------------------------------

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;
    std::size_t line;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, line); }

    mpz_class integer() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected an integer in scalar '" + std::string(s) + "'");
        return mpz_class(std::string(s.substr(start, i - start)), 10);
    }
};

}  // namespace

Scalar Scalar::parse(const FieldPtr& f, std::string_view text, std::size_t line_no) {
    Cursor cur{text, 0, line_no};
    const bool cyclotomic = f->kind() == FieldKind::Cyclotomic;
    // exponent -> rational coefficient, exponents reduced mod n (z^n = 1)
    std::vector<mpq_class> raw(cyclotomic ? f->cyclotomic_order() : 1);

    bool any_term = false;
    while (true) {
        if (cur.eof()) break;
        int sign = 1;
        while (true) {
            if (cur.eat('+')) continue;
            if (cur.eat('-')) {
                sign = -sign;
                continue;
            }
            break;
        }
        if (cur.eof()) cur.fail("dangling sign in scalar '" + std::string(text) + "'");

        mpq_class coef = 1;
        bool saw_number = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            mpz_class num = cur.integer();
            mpz_class den = 1;
            if (cur.eat('/')) {
                den = cur.integer();
                if (den == 0) cur.fail("zero denominator in scalar '" + std::string(text) + "'");
            }
            coef = mpq_class(num, den);
            coef.canonicalize();
            saw_number = true;
        }
        std::size_t exp = 0;
        bool saw_z = false;
        if ((saw_number && cur.eat('*')) || (!saw_number && cur.peek() == 'z')) {
            if (!cur.eat('z')) cur.fail("expected z after '*' in scalar '" + std::string(text) + "'");
            saw_z = true;
            exp = 1;
            if (cur.eat('^')) {
                mpz_class e = cur.integer();
                if (!cyclotomic) {
                    exp = e.get_ui();  // rejected below anyway
                } else {
                    // z has multiplicative order n, so exponents reduce mod n.
                    exp = mpz_class(e % f->cyclotomic_order()).get_ui();
                }
            }
        }
        if (!saw_number && !saw_z)
            cur.fail("unexpected character '" + std::string(1, cur.peek()) + "' in scalar '" +
                     std::string(text) + "'");
        if (saw_z && !cyclotomic)
            cur.fail("generator z is not an element of " + f->name());

        if (sign < 0) coef = -coef;
        raw[exp % raw.size()] += coef;
        any_term = true;

        char c = cur.peek();
        if (c == '+' || c == '-') continue;
        if (cur.eof()) break;
        cur.fail("unexpected character '" + std::string(1, c) + "' in scalar '" +
                 std::string(text) + "'");
    }
    if (!any_term) cur.fail("empty scalar");

    switch (f->kind()) {
        case FieldKind::Rational: return of_rational(f, raw[0]);
        case FieldKind::Prime: {
            if (mpz_class(raw[0].get_den()) != 1 &&
                reduce_integer_mod(raw[0].get_den(), f->prime_modulus()) == 0)
                cur.fail("denominator vanishes in " + f->name());
            return of_rational(f, raw[0]);
        }
        case FieldKind::Cyclotomic: return of_coefficients(f, std::move(raw));
    }
    throw Error("unreachable");
}

Scalar primitive_root_of_unity(const FieldPtr& f, unsigned n) {
    if (n == 0) throw BadParams("root order must be positive");
    if (n == 1) return Scalar::one(f);
    switch (f->kind()) {
        case FieldKind::Rational:
            if (n == 2) return -Scalar::one(f);
            throw NoSuchRoot("Q contains no primitive " + std::to_string(n) + "-th root of unity");
        case FieldKind::Cyclotomic: {
            unsigned m = f->cyclotomic_order();
            if (m % n == 0) {
                QPoly z(2, mpq_class(0));
                z[1] = 1;
                Scalar zeta = Scalar::of_coefficients(f, std::move(z));
                return zeta.pow(m / n);
            }
            if (n == 2) return -Scalar::one(f);
            throw NoSuchRoot("Q(zeta_" + std::to_string(m) + ") lacks a primitive " +
                             std::to_string(n) + "-th root of unity");
        }
        case FieldKind::Prime: {
            std::uint64_t p = f->prime_modulus();
            if ((p - 1) % n != 0)
                throw NoSuchRoot(std::to_string(n) + " does not divide " + std::to_string(p) +
                                 "-1");
            for (std::uint64_t c = 2; c < p; ++c) {
                Scalar s = Scalar::of_integer(f, static_cast<long>(c));
                if (!s.pow(n).is_one()) continue;
                bool primitive = true;
                for (unsigned m = 1; m < n && primitive; ++m)
                    if (s.pow(m).is_one()) primitive = false;
                if (primitive) return s;
            }
            throw NoSuchRoot("no primitive root found");  // unreachable for prime p, n | p-1
        }
    }
    throw Error("unreachable");
}

}  // namespace charmorph
