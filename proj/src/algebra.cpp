#include "charmorph/algebra.hpp"

#include <algorithm>

#include "charmorph/error.hpp"

namespace charmorph {

AlgebraElement::AlgebraElement(FieldPtr f, std::vector<Scalar> coords)
    : field_(std::move(f)), coords_(std::move(coords)) {
    if (coords_.empty()) throw DimensionMismatch("algebra element needs d >= 1 coordinates");
    for (const auto& c : coords_)
        if (!same_field(c.field(), field_)) throw MixedFields("algebra element coordinate field");
}

AlgebraElement AlgebraElement::unit(const FieldPtr& f, std::size_t d) {
    return AlgebraElement(f, std::vector<Scalar>(d, Scalar::one(f)));
}

AlgebraElement AlgebraElement::idempotent(const FieldPtr& f, std::size_t d, std::size_t i) {
    std::vector<Scalar> c(d, Scalar::zero(f));
    c.at(i) = Scalar::one(f);
    return AlgebraElement(f, std::move(c));
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return same_field(field_, o.field_) && coords_ == o.coords_;
}

std::string AlgebraElement::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ", ";
        out += coords_[i].str();
    }
    return out + ")";
}

LinearMap::LinearMap(FieldPtr f, std::vector<Matrix> alphas)
    : field_(std::move(f)), dim_(0), alphas_(std::move(alphas)) {
    if (alphas_.empty()) throw DimensionMismatch("linear map needs d >= 1 matrices");
    dim_ = alphas_[0].dim();
    for (const auto& a : alphas_) {
        if (!same_field(a.field(), field_)) throw MixedFields("linear map matrix field");
        if (a.dim() != dim_) throw DimensionMismatch("linear map matrices of unequal dimension");
    }
}

bool LinearMap::operator==(const LinearMap& o) const {
    return same_field(field_, o.field_) && alphas_ == o.alphas_;
}

Matrix apply(const LinearMap& phi, const AlgebraElement& a) {
    if (!same_field(phi.field(), a.field()))
        throw MixedFields("linear map and element over different fields");
    if (a.d() != phi.d()) throw DimensionMismatch("element coordinates vs map arity");
    Matrix out = Matrix::zero(phi.field(), phi.dim());
    for (std::size_t i = 0; i < phi.d(); ++i) {
        if (!a.coord(i).is_zero()) out = out + phi.alpha(i) * a.coord(i);
    }
    return out;
}

Polynomial char_poly_element(const AlgebraElement& a) {
    Polynomial p = Polynomial::constant(Scalar::one(a.field()));
    for (const auto& c : a.coords()) p = p * Polynomial::linear_root(c);
    return p;
}

Polynomial min_poly_element(const AlgebraElement& a) {
    std::vector<Scalar> distinct;
    for (const auto& c : a.coords()) {
        if (std::find(distinct.begin(), distinct.end(), c) == distinct.end())
            distinct.push_back(c);
    }
    Polynomial p = Polynomial::constant(Scalar::one(a.field()));
    for (const auto& c : distinct) p = p * Polynomial::linear_root(c);
    return p;
}

}  // namespace charmorph
