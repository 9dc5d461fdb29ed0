#include <doctest.h>

#include "charmorph/classify.hpp"
#include "charmorph/error.hpp"
#include "charmorph/sampling.hpp"
#include "charmorph/subspace.hpp"

using namespace charmorph;

namespace {

const FieldPtr kQ = Field::rationals();

std::vector<FieldPtr> all_field_kinds() {
    return {kQ, Field::cyclotomic(4), Field::prime(7)};
}

// Oracle: char poly as the cofactor-expansion determinant of tI - M,
// computed over the polynomial ring, independent of the Berkowitz path.
Polynomial det_cofactor(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    const FieldPtr& f = m[0][0].field();
    Polynomial det = Polynomial::zero(f);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * det_cofactor(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

Polynomial char_poly_oracle(const Matrix& m) {
    const FieldPtr& f = m.field();
    std::vector<std::vector<Polynomial>> entries;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        std::vector<Polynomial> row;
        for (std::size_t j = 0; j < m.dim(); ++j) {
            Polynomial e = Polynomial::constant(-m.at(i, j));
            if (i == j) e = e + Polynomial::monomial(Scalar::one(f), 1);
            row.push_back(std::move(e));
        }
        entries.push_back(std::move(row));
    }
    return det_cofactor(entries);
}

// All monic divisors of a product of linear factors given by its roots
// with multiplicity (enough for the minimality oracle below).
std::vector<Polynomial> monic_divisors_of_split(const FieldPtr& f,
                                                const std::vector<Scalar>& roots) {
    std::vector<Polynomial> divisors{Polynomial::constant(Scalar::one(f))};
    for (const auto& r : roots) {
        const std::size_t n = divisors.size();
        for (std::size_t i = 0; i < n; ++i)
            divisors.push_back(divisors[i] * Polynomial::linear_root(r));
    }
    return divisors;
}

}  // namespace

TEST_CASE("matrix ring basics") {
    const Matrix m = Matrix::of_ints(kQ, {{1, 2}, {3, 4}});
    CHECK(Matrix::identity(kQ, 2) * m == m);
    CHECK(m * Matrix::identity(kQ, 2) == m);

    const Matrix nil = Matrix::of_ints(kQ, {{0, 1}, {0, 0}});
    CHECK((nil * nil).is_zero());
    CHECK(nil.pow(2).is_zero());
    CHECK(nil.pow(0).is_identity());

    CHECK_THROWS_AS((void)(m + Matrix::identity(kQ, 3)), DimensionMismatch);
    CHECK_THROWS_AS((void)(m + Matrix::identity(Field::prime(5), 2)), MixedFields);
}

TEST_CASE("the two example-1 matrices multiply to [[0,2],[0,0]] at a=b=1") {
    const LinearMap phi = fixture_example1(kQ, 1, 1);
    CHECK(phi.alpha(0) * phi.alpha(1) == Matrix::of_ints(kQ, {{0, 2}, {0, 0}}));
}

TEST_CASE("char_poly on canonical shapes") {
    SUBCASE("diagonal: product of t - a_i") {
        const std::vector<long> values{2, -1, 5};
        Matrix diag = Matrix::zero(kQ, 3);
        Polynomial expected = Polynomial::constant(Scalar::one(kQ));
        for (std::size_t i = 0; i < 3; ++i) {
            diag.at(i, i) = Scalar::of_integer(kQ, values[i]);
            expected = expected * Polynomial::linear_root(Scalar::of_integer(kQ, values[i]));
        }
        CHECK(char_poly(diag) == expected);
    }
    SUBCASE("nilpotent 2x2: t^2") {
        const Matrix nil = Matrix::of_ints(kQ, {{0, 1}, {0, 0}});
        CHECK(char_poly(nil) == Polynomial::monomial(Scalar::one(kQ), 2));
    }
    SUBCASE("example-2 first matrix: t^2 (t - 1), against the cofactor oracle") {
        const Matrix m = fixture_example2(kQ).alpha(0);
        const Polynomial oracle = char_poly_oracle(m);
        // t^2 (t - 1) = t^3 - t^2
        const Polynomial expected(kQ, {Scalar::zero(kQ), Scalar::zero(kQ), -Scalar::one(kQ),
                                       Scalar::one(kQ)});
        CHECK(oracle == expected);
        CHECK(char_poly(m) == expected);
    }
}

TEST_CASE("char_poly matches the cofactor oracle on random matrices") {
    sampling::Rng rng(1234);
    for (const auto& f : all_field_kinds()) {
        CAPTURE(f->name());
        for (std::size_t dim = 1; dim <= 4; ++dim)
            for (int trial = 0; trial < 5; ++trial) {
                const Matrix m = sampling::random_matrix(f, dim, rng);
                CHECK(char_poly(m) == char_poly_oracle(m));
            }
    }
}

TEST_CASE("Cayley-Hamilton and min | char on random matrices, dim <= 5") {
    sampling::Rng rng(4321);
    for (const auto& f : all_field_kinds()) {
        CAPTURE(f->name());
        for (int trial = 0; trial < 12; ++trial) {
            std::uniform_int_distribution<std::size_t> dims(1, 5);
            const Matrix m = sampling::random_matrix(f, dims(rng), rng);
            const Polynomial chi = char_poly(m);
            CHECK(chi.is_monic());
            CHECK(chi.degree() == static_cast<int>(m.dim()));
            CHECK(chi.eval(m).is_zero());
            const Polynomial mu = min_poly(m);
            CHECK(mu.is_monic());
            CHECK(mu.eval(m).is_zero());
            CHECK(mu.divides(chi));
        }
    }
}

TEST_CASE("min_poly on canonical shapes") {
    CHECK(min_poly(Matrix::identity(kQ, 3)) ==
          Polynomial::linear_root(Scalar::one(kQ)));  // t - 1
    CHECK(min_poly(Matrix::of_ints(kQ, {{0, 1}, {0, 0}})) ==
          Polynomial::monomial(Scalar::one(kQ), 2));  // t^2

    SUBCASE("example-2 first matrix: t^2 (t - 1), with a minimality oracle") {
        const Matrix m = fixture_example2(kQ).alpha(0);
        const Scalar zero = Scalar::zero(kQ), one = Scalar::one(kQ);
        const Polynomial expected(kQ, {zero, zero, -one, one});
        CHECK(min_poly(m) == expected);
        // oracle: expected annihilates m and no proper monic divisor does
        CHECK(expected.eval(m).is_zero());
        for (const auto& div : monic_divisors_of_split(kQ, {zero, zero, one})) {
            if (div == expected || div.degree() == 3) continue;
            CHECK(!div.eval(m).is_zero());
        }
    }
}

TEST_CASE("kernel computation") {
    CHECK(kernel(Matrix::zero(kQ, 3)) == Subspace::full(kQ, 3));
    CHECK(kernel(Matrix::identity(kQ, 3)) == Subspace::zero(kQ, 3));

    // [[1,1],[0,0]] kills (-1, 1)
    const Matrix m = Matrix::of_ints(kQ, {{1, 1}, {0, 0}});
    const Subspace k = kernel(m);
    CHECK(k == Subspace::span(kQ, 2, {{-Scalar::one(kQ), Scalar::one(kQ)}}));
    CHECK(k.dim() == 1);

    sampling::Rng rng(55);
    for (const auto& f : all_field_kinds()) {
        for (int trial = 0; trial < 10; ++trial) {
            const Matrix r = sampling::random_matrix(f, 4, rng);
            const Subspace ker = kernel(r);
            CHECK(ker.dim() == 4 - r.rank());
            for (const auto& v : ker.basis()) {
                for (const auto& x : r.apply(v)) CHECK(x.is_zero());
            }
        }
    }
}

TEST_CASE("spin_up") {
    const LinearMap ex1 = fixture_example1(kQ, 1, 1);
    const std::vector<Scalar> e1{Scalar::one(kQ), Scalar::zero(kQ)};

    SUBCASE("full seed stays full") {
        CHECK(spin_up(Subspace::full(kQ, 2), ex1.alphas()) == Subspace::full(kQ, 2));
    }
    SUBCASE("first coordinate line is already invariant for example 1") {
        const Subspace seed = Subspace::span(kQ, 2, {e1});
        CHECK(spin_up(seed, ex1.alphas()) == seed);
    }
    SUBCASE("a cyclic permutation spreads a coordinate line to everything") {
        const Matrix cyc = Matrix::of_ints(kQ, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
        const Subspace seed =
            Subspace::span(kQ, 3, {{Scalar::one(kQ), Scalar::zero(kQ), Scalar::zero(kQ)}});
        CHECK(spin_up(seed, {cyc}) == Subspace::full(kQ, 3));
    }
    SUBCASE("output is invariant under every generator") {
        sampling::Rng rng(77);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Matrix> gens{sampling::random_matrix(kQ, 4, rng),
                                     sampling::random_matrix(kQ, 4, rng)};
            std::vector<Scalar> seed_vec;
            for (int i = 0; i < 4; ++i) seed_vec.push_back(sampling::random_scalar(kQ, rng));
            const Subspace out = spin_up(Subspace::span(kQ, 4, {seed_vec}), gens);
            for (const auto& g : gens)
                for (const auto& v : out.basis()) CHECK(out.contains(g.apply(v)));
        }
    }
}

TEST_CASE("subspace canonical form") {
    const Scalar one = Scalar::one(kQ), zero = Scalar::zero(kQ);
    const Scalar two = Scalar::of_integer(kQ, 2), four = Scalar::of_integer(kQ, 4);
    // scaling and redundant spanning vectors normalize away
    CHECK(Subspace::span(kQ, 2, {{two, four}}) == Subspace::span(kQ, 2, {{one, two}}));
    CHECK(Subspace::span(kQ, 2, {{one, two}, {two, four}}).dim() == 1);
    const Subspace s = Subspace::span(kQ, 3, {{one, one, zero}, {zero, one, one}});
    CHECK(s.dim() == 2);
    CHECK(s.contains({one, two, one}));   // sum of the generators
    CHECK(!s.contains({one, zero, one}));
    CHECK(Subspace::zero(kQ, 3).dim() == 0);
    CHECK(Subspace::full(kQ, 3).is_full());
    CHECK(!s.is_full());
    CHECK(s.is_proper_nonzero());
}

TEST_CASE("inverse and rank") {
    sampling::Rng rng(88);
    for (const auto& f : all_field_kinds()) {
        const Matrix p = sampling::random_invertible(f, 3, rng);
        CHECK(p.rank() == 3);
        CHECK((*p.inverse() * p).is_identity());
        CHECK((p * *p.inverse()).is_identity());
    }
    CHECK(!Matrix::of_ints(kQ, {{1, 2}, {2, 4}}).inverse().has_value());
    CHECK(Matrix::of_ints(kQ, {{1, 2}, {2, 4}}).rank() == 1);
}
