#include "charmorph/polynomial.hpp"

#include "charmorph/error.hpp"
#include "charmorph/matrix.hpp"

namespace charmorph {

Polynomial::Polynomial(FieldPtr f, std::vector<Scalar> coeffs)
    : field_(std::move(f)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!same_field(c.field(), field_)) throw MixedFields("polynomial coefficient field");
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, Scalar::zero(c.field()));
    v[degree] = c;
    return Polynomial(c.field(), std::move(v));
}

Polynomial Polynomial::linear_root(const Scalar& root) {
    return Polynomial(root.field(), {-root, Scalar::one(root.field())});
}

Scalar Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(field_);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Scalar> out;
    const std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(coeff(i) + o.coeff(i));
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Scalar> out;
    const std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(coeff(i) - o.coeff(i));
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return zero(field_);
    std::vector<Scalar> out(coeffs_.size() + o.coeffs_.size() - 1, Scalar::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    std::vector<Scalar> out = coeffs_;
    for (auto& x : out) x = x * c;
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Scalar> out = coeffs_;
    for (auto& x : out) x = -x;
    return Polynomial(field_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_field(field_, o.field_) || coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != o.coeffs_[i]) return false;
    return true;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    Polynomial rem = *this;
    std::vector<Scalar> quot;
    const int dd = divisor.degree();
    if (rem.degree() >= dd) quot.assign(rem.degree() - dd + 1, Scalar::zero(field_));
    const Scalar lead_inv = divisor.coeffs_.back().inverse();
    while (rem.degree() >= dd) {
        const std::size_t shift = rem.degree() - dd;
        const Scalar c = rem.coeffs_.back() * lead_inv;
        quot[shift] = c;
        std::vector<Scalar> next = rem.coeffs_;
        for (int j = 0; j <= dd; ++j)
            next[shift + j] = next[shift + j] - c * divisor.coeffs_[j];
        rem = Polynomial(field_, std::move(next));
    }
    return {Polynomial(field_, std::move(quot)), rem};
}

bool Polynomial::divides(const Polynomial& multiple) const {
    if (is_zero()) return multiple.is_zero();
    return multiple.divmod(*this).second.is_zero();
}

Scalar Polynomial::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

Matrix Polynomial::eval(const Matrix& m) const {
    Matrix acc = Matrix::zero(field_, m.dim());
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * m + Matrix::scalar(field_, m.dim(), coeffs_[i]);
    return acc;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        std::string c = coeffs_[k].str();
        // Multi-term scalars (cyclotomic coefficients) get parentheses.
        const bool composite = c.find_first_of("+-", 1) != std::string::npos;
        if (composite) c = "(" + c + ")";
        if (!out.empty()) {
            if (!composite && c[0] == '-') {
                out += " - ";
                c = c.substr(1);
            } else {
                out += " + ";
            }
        }
        if (k == 0) {
            out += c;
        } else {
            if (c == "1")
                ;
            else if (c == "-1")
                out += '-';
            else {
                out += c;
                out += '*';
            }
            out += var;
            if (k > 1) out += '^' + std::to_string(k);
        }
    }
    return out;
}

Polynomial cyclotomic_polynomial(unsigned n) {
    const auto z_coeffs = cyclotomic_coefficients(n);
    FieldPtr q = Field::rationals();
    std::vector<Scalar> coeffs;
    coeffs.reserve(z_coeffs.size());
    for (const auto& c : z_coeffs) coeffs.push_back(Scalar::of_integer(q, c));
    return Polynomial(q, std::move(coeffs));
}

}  // namespace charmorph
