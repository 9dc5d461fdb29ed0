#include <doctest.h>

#include <random>

#include "charmorph/error.hpp"
#include "charmorph/polynomial.hpp"
#include "charmorph/sampling.hpp"
#include "charmorph/scalar.hpp"

using namespace charmorph;

namespace {

const FieldPtr kQ = Field::rationals();

std::vector<FieldPtr> all_field_kinds() {
    return {kQ, Field::cyclotomic(5), Field::cyclotomic(12), Field::prime(7), Field::prime(2)};
}

}  // namespace

TEST_CASE("field construction and validation") {
    CHECK(kQ->kind() == FieldKind::Rational);
    CHECK(Field::cyclotomic(5)->degree() == 4);
    CHECK(Field::prime(7)->characteristic() == 7);
    CHECK(*Field::prime(7) == *Field::prime(7));
    CHECK(*Field::prime(7) != *Field::prime(5));
    CHECK(*Field::cyclotomic(3) != *Field::prime(3));
    CHECK_THROWS_AS(Field::prime(6), BadParams);
    CHECK_THROWS_AS(Field::prime(1), BadParams);
    CHECK_THROWS_AS(Field::cyclotomic(0), BadParams);
    // residues must stay within one machine word after products
    CHECK_THROWS_AS(Field::prime((std::uint64_t{1} << 32) + 15), BadParams);
}

TEST_CASE("rational arithmetic: 1/2 + 1/3 = 5/6") {
    const Scalar half = Scalar::of_rational(kQ, mpq_class(1, 2));
    const Scalar third = Scalar::of_rational(kQ, mpq_class(1, 3));
    CHECK(half + third == Scalar::of_rational(kQ, mpq_class(5, 6)));
}

TEST_CASE("cyclotomic(4): z * z = -1") {
    const FieldPtr f = Field::cyclotomic(4);
    const Scalar z = primitive_root_of_unity(f, 4);
    CHECK(z * z == -Scalar::one(f));
}

TEST_CASE("GF(7): inverse(3) = 5, against the brute-force oracle") {
    const FieldPtr f = Field::prime(7);
    const Scalar three = Scalar::of_integer(f, 3);
    // oracle: the unique m in [1, 7) with 3m = 1 mod 7
    std::uint64_t oracle = 0;
    for (std::uint64_t m = 1; m < 7; ++m)
        if ((3 * m) % 7 == 1) oracle = m;
    CHECK(oracle == 5);
    CHECK(three.inverse() == Scalar::of_integer(f, static_cast<long>(oracle)));
    CHECK(three.inverse().residue() == 5);
}

TEST_CASE("field axioms hold on random triples in every supported field") {
    sampling::Rng rng(20240811);
    for (const auto& f : all_field_kinds()) {
        CAPTURE(f->name());
        for (int trial = 0; trial < 30; ++trial) {
            const Scalar x = sampling::random_scalar(f, rng);
            const Scalar y = sampling::random_scalar(f, rng);
            const Scalar w = sampling::random_scalar(f, rng);
            CHECK((x + y) + w == x + (y + w));
            CHECK(x * (y + w) == x * y + x * w);
            CHECK(x + Scalar::zero(f) == x);
            CHECK(x * Scalar::one(f) == x);
            CHECK(x - x == Scalar::zero(f));
            if (!x.is_zero()) {
                CHECK(x * x.inverse() == Scalar::one(f));
                CHECK((x / x) == Scalar::one(f));
            }
        }
    }
}

TEST_CASE("mixed-field operands and zero division are rejected") {
    CHECK_THROWS_AS((void)(Scalar::one(kQ) + Scalar::one(Field::prime(7))), MixedFields);
    CHECK_THROWS_AS((void)Scalar::zero(kQ).inverse(), DivisionByZero);
    CHECK_THROWS_AS((void)Scalar::zero(Field::prime(7)).inverse(), DivisionByZero);
    CHECK_THROWS_AS((void)Scalar::zero(Field::cyclotomic(5)).inverse(), DivisionByZero);
}

namespace {

// Oracle: Phi_n by dividing z^n - 1 by the product of the lower Phi_m.
Polynomial cyclotomic_via_division(unsigned n, const std::vector<Polynomial>& lower) {
    std::vector<Scalar> c(n + 1, Scalar::zero(kQ));
    c[0] = -Scalar::one(kQ);
    c[n] = Scalar::one(kQ);
    Polynomial num(kQ, std::move(c));
    Polynomial den = Polynomial::constant(Scalar::one(kQ));
    for (unsigned m = 1; m < n; ++m)
        if (n % m == 0) den = den * lower[m];
    auto [quot, rem] = num.divmod(den);
    REQUIRE(rem.is_zero());
    return quot;
}

}  // namespace

TEST_CASE("cyclotomic polynomials: small cases and the divisor product identity") {
    const Scalar one = Scalar::one(kQ);

    // n = 1: z - 1
    CHECK(cyclotomic_polynomial(1) == Polynomial(kQ, {-one, one}));

    // n = 4 and n = 6 against the division oracle
    std::vector<Polynomial> lower{Polynomial::constant(one)};
    for (unsigned m = 1; m <= 6; ++m) lower.push_back(cyclotomic_polynomial(m));
    CHECK(cyclotomic_polynomial(4) == cyclotomic_via_division(4, lower));
    CHECK(cyclotomic_polynomial(4) == Polynomial(kQ, {one, Scalar::zero(kQ), one}));  // z^2 + 1
    CHECK(cyclotomic_polynomial(6) == cyclotomic_via_division(6, lower));
    CHECK(cyclotomic_polynomial(6) == Polynomial(kQ, {one, -one, one}));  // z^2 - z + 1

    for (unsigned n = 1; n <= 24; ++n) {
        CAPTURE(n);
        CHECK(cyclotomic_polynomial(n).degree() == static_cast<int>(euler_totient(n)));
        Polynomial product = Polynomial::constant(one);
        for (unsigned m = 1; m <= n; ++m)
            if (n % m == 0) product = product * cyclotomic_polynomial(m);
        std::vector<Scalar> c(n + 1, Scalar::zero(kQ));
        c[0] = -one;
        c[n] = one;
        CHECK(product == Polynomial(kQ, std::move(c)));
    }
}

TEST_CASE("primitive roots of unity") {
    SUBCASE("cyclotomic(5) yields the generator z") {
        const FieldPtr f = Field::cyclotomic(5);
        const Scalar zeta = primitive_root_of_unity(f, 5);
        std::vector<mpq_class> z(4);
        z[1] = 1;
        CHECK(zeta == Scalar::of_coefficients(f, z));
    }
    SUBCASE("GF(7), n = 3 yields 2, matching the exhaustive order oracle") {
        const FieldPtr f = Field::prime(7);
        // oracle: smallest c >= 2 whose multiplicative order is exactly 3
        std::uint64_t oracle = 0;
        for (std::uint64_t c = 2; c < 7 && !oracle; ++c) {
            std::uint64_t pw = 1;
            bool early = false;
            for (unsigned m = 1; m <= 3; ++m) {
                pw = (pw * c) % 7;
                if (pw == 1 && m < 3) early = true;
            }
            if (pw == 1 && !early) oracle = c;
        }
        CHECK(oracle == 2);
        CHECK(primitive_root_of_unity(f, 3) == Scalar::of_integer(f, static_cast<long>(oracle)));
    }
    SUBCASE("GF(7), n = 5 has no root since 5 does not divide 6") {
        CHECK_THROWS_AS((void)primitive_root_of_unity(Field::prime(7), 5), NoSuchRoot);
    }
    SUBCASE("rationals only have order <= 2") {
        CHECK(primitive_root_of_unity(kQ, 1) == Scalar::one(kQ));
        CHECK(primitive_root_of_unity(kQ, 2) == -Scalar::one(kQ));
        CHECK_THROWS_AS((void)primitive_root_of_unity(kQ, 3), NoSuchRoot);
    }
    SUBCASE("powers of a primitive root are pairwise distinct until n") {
        for (const FieldPtr& f : {Field::cyclotomic(7), Field::prime(29)}) {
            const unsigned n = 7;
            const Scalar zeta = primitive_root_of_unity(f, n);
            CHECK(zeta.pow(n).is_one());
            std::vector<Scalar> powers;
            for (unsigned k = 0; k < n; ++k) powers.push_back(zeta.pow(k));
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = i + 1; j < n; ++j) CHECK(powers[i] != powers[j]);
        }
    }
}

TEST_CASE("scalar text grammar") {
    SUBCASE("rationals") {
        CHECK(Scalar::parse(kQ, "-3/2") == Scalar::of_rational(kQ, mpq_class(-3, 2)));
        CHECK(Scalar::parse(kQ, "7") == Scalar::of_integer(kQ, 7));
        CHECK(Scalar::parse(kQ, " - 3 / 2 ") == Scalar::of_rational(kQ, mpq_class(-3, 2)));
        CHECK(Scalar::parse(kQ, "2/4") == Scalar::of_rational(kQ, mpq_class(1, 2)));
        CHECK(Scalar::parse(kQ, "1+1") == Scalar::of_integer(kQ, 2));
    }
    SUBCASE("cyclotomic") {
        const FieldPtr f = Field::cyclotomic(7);
        const Scalar z = primitive_root_of_unity(f, 7);
        const Scalar parsed = Scalar::parse(f, "1/2*z^2 - z + 3");
        CHECK(parsed ==
              z * z * Scalar::of_rational(f, mpq_class(1, 2)) - z + Scalar::of_integer(f, 3));
        CHECK(Scalar::parse(f, "1/2*z^2-z+3") == parsed);  // compact spelling
        CHECK(Scalar::parse(f, "z^7") == Scalar::one(f));  // exponents reduce mod n
    }
    SUBCASE("prime field") {
        const FieldPtr f = Field::prime(7);
        CHECK(Scalar::parse(f, "4") == Scalar::of_integer(f, 4));
        CHECK(Scalar::parse(f, "-1") == Scalar::of_integer(f, 6));
        CHECK(Scalar::parse(f, "10") == Scalar::of_integer(f, 3));
    }
    SUBCASE("rejects") {
        CHECK_THROWS_AS((void)Scalar::parse(kQ, "z+1"), ParseError);
        CHECK_THROWS_AS((void)Scalar::parse(kQ, ""), ParseError);
        CHECK_THROWS_AS((void)Scalar::parse(kQ, "1/0"), ParseError);
        CHECK_THROWS_AS((void)Scalar::parse(kQ, "1..2"), ParseError);
        CHECK_THROWS_AS((void)Scalar::parse(kQ, "3x"), ParseError);
        CHECK_THROWS_AS((void)Scalar::parse(Field::prime(5), "z"), ParseError);
    }
    SUBCASE("printing round-trips through the grammar") {
        sampling::Rng rng(7);
        for (const auto& f : all_field_kinds()) {
            for (int trial = 0; trial < 20; ++trial) {
                const Scalar x = sampling::random_scalar(f, rng);
                CHECK(Scalar::parse(f, x.str()) == x);
                CHECK(Scalar::parse(f, x.str(true)) == x);
            }
        }
    }
}
