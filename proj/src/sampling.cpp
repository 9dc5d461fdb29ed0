#include "charmorph/sampling.hpp"

#include "charmorph/classify.hpp"
#include "charmorph/error.hpp"

namespace charmorph::sampling {

Scalar random_scalar(const FieldPtr& f, Rng& rng, long height) {
    switch (f->kind()) {
        case FieldKind::Rational: {
            std::uniform_int_distribution<long> num(-height, height);
            std::uniform_int_distribution<long> den(1, height);
            mpq_class q(num(rng), den(rng));
            q.canonicalize();
            return Scalar::of_rational(f, q);
        }
        case FieldKind::Cyclotomic: {
            std::uniform_int_distribution<long> coef(-height, height);
            std::vector<mpq_class> c(f->degree());
            for (auto& x : c) x = coef(rng);
            return Scalar::of_coefficients(f, std::move(c));
        }
        case FieldKind::Prime: {
            std::uniform_int_distribution<std::uint64_t> res(0, f->prime_modulus() - 1);
            return Scalar::of_integer(f, static_cast<long>(res(rng)));
        }
    }
    throw Error("unreachable");
}

Matrix random_matrix(const FieldPtr& f, std::size_t dim, Rng& rng, long height) {
    std::vector<Scalar> entries;
    entries.reserve(dim * dim);
    for (std::size_t i = 0; i < dim * dim; ++i) entries.push_back(random_scalar(f, rng, height));
    return Matrix(f, dim, std::move(entries));
}

Matrix random_invertible(const FieldPtr& f, std::size_t dim, Rng& rng) {
    while (true) {
        Matrix m = random_matrix(f, dim, rng, 2);
        if (m.rank() == dim) return m;
    }
}

LinearMap random_linear_map(const FieldPtr& f, std::size_t d, std::size_t dim, Rng& rng,
                            long height) {
    std::vector<Matrix> alphas;
    alphas.reserve(d);
    for (std::size_t i = 0; i < d; ++i) alphas.push_back(random_matrix(f, dim, rng, height));
    return LinearMap(f, std::move(alphas));
}

LinearMap random_conjugated_hom(const FieldPtr& f, std::size_t d, std::size_t dim, Rng& rng) {
    std::uniform_int_distribution<std::size_t> block(0, d - 1);
    std::vector<std::size_t> multiplicities(d, 0);
    for (std::size_t slot = 0; slot < dim; ++slot) ++multiplicities[block(rng)];
    LinearMap diagonal = fixture_diag_hom(f, multiplicities);

    const Matrix p = random_invertible(f, dim, rng);
    const Matrix p_inv = *p.inverse();
    std::vector<Matrix> alphas;
    alphas.reserve(d);
    for (const auto& a : diagonal.alphas()) alphas.push_back(p * a * p_inv);
    return LinearMap(f, std::move(alphas));
}

LinearMap perturb_one_entry(const LinearMap& phi, Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick_matrix(0, phi.d() - 1);
    std::uniform_int_distribution<std::size_t> pick_pos(0, phi.dim() - 1);
    std::vector<Matrix> alphas = phi.alphas();
    Matrix& target = alphas[pick_matrix(rng)];
    Scalar offset = random_scalar(phi.field(), rng, 2);
    while (offset.is_zero()) offset = random_scalar(phi.field(), rng, 2);
    target.at(pick_pos(rng), pick_pos(rng)) += offset;
    return LinearMap(phi.field(), std::move(alphas));
}

}  // namespace charmorph::sampling
