#include "charmorph/classify.hpp"

#include <algorithm>
#include <set>

#include "charmorph/checks.hpp"
#include "charmorph/error.hpp"
#include "charmorph/sampling.hpp"

namespace charmorph {

namespace {

std::vector<Scalar> vectorize(const Matrix& m) {
    std::vector<Scalar> v;
    v.reserve(m.dim() * m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) v.push_back(m.at(i, j));
    return v;
}

Matrix matrixize(const FieldPtr& f, std::size_t dim, const std::vector<Scalar>& v) {
    return Matrix(f, dim, v);
}

// Incremental echelon basis of a space of matrices.
struct MatrixSpan {
    std::vector<std::vector<Scalar>> rows;
    std::vector<std::size_t> leads;

    // Reduced remainder of vec(m), or empty when m already lies in the span.
    std::vector<Scalar> reduce(const Matrix& m) const {
        std::vector<Scalar> v = vectorize(m);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Scalar c = v[leads[i]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * rows[i][j];
        }
        for (const auto& x : v)
            if (!x.is_zero()) return v;
        return {};
    }

    bool insert(std::vector<Scalar> v) {
        if (v.empty()) return false;
        std::size_t lead = 0;
        while (lead < v.size() && v[lead].is_zero()) ++lead;
        if (lead == v.size()) return false;
        const Scalar inv = v[lead].inverse();
        for (auto& x : v) x *= inv;
        rows.push_back(std::move(v));
        leads.push_back(lead);
        return true;
    }
};

}  // namespace

GeneratedAlgebra generated_algebra(const LinearMap& phi) {
    const FieldPtr& f = phi.field();
    const std::size_t dim = phi.dim();
    const std::size_t cap = dim * dim;

    MatrixSpan span;
    std::vector<Matrix> basis;
    auto add = [&](const Matrix& m) {
        std::vector<Scalar> reduced = span.reduce(m);
        if (reduced.empty()) return false;
        span.insert(reduced);
        basis.push_back(matrixize(f, dim, span.rows.back()));
        return true;
    };

    add(Matrix::identity(f, dim));
    for (const auto& a : phi.alphas()) add(a);

    std::size_t processed = 0;
    while (processed < basis.size() && basis.size() < cap) {
        const Matrix current = basis[processed];
        const std::size_t snapshot = basis.size();
        for (std::size_t j = 0; j < snapshot && basis.size() < cap; ++j) {
            add(current * basis[j]);
            if (basis.size() < cap) add(basis[j] * current);
        }
        ++processed;
    }
    return GeneratedAlgebra{std::move(basis), span.rows.size()};
}

// ----------------------------------------------------------------------
// Root finding used by the reducibility heuristics
// ----------------------------------------------------------------------

namespace {

std::vector<mpz_class> positive_divisors(mpz_class v) {
    if (v < 0) v = -v;
    std::vector<std::pair<mpz_class, unsigned>> factors;
    mpz_class rest = v;
    for (mpz_class p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (rest > 1) factors.emplace_back(rest, 1);
    std::vector<mpz_class> divisors{1};
    for (const auto& [p, e] : factors) {
        const std::size_t n = divisors.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * pk);
        }
    }
    return divisors;
}

std::vector<Scalar> rational_roots(const Polynomial& p) {
    const FieldPtr& f = p.field();
    std::vector<Scalar> roots;
    Polynomial work = p;

    // Strip t-power factors: 0 is a root while the constant term vanishes.
    if (!work.is_zero() && work.coeff(0).is_zero()) {
        roots.push_back(Scalar::zero(f));
        while (!work.is_zero() && work.coeff(0).is_zero()) {
            std::vector<Scalar> shifted(work.coefficients().begin() + 1,
                                        work.coefficients().end());
            work = Polynomial(f, std::move(shifted));
        }
    }
    if (work.degree() < 1) return roots;

    // Clear denominators to an integer polynomial.
    mpz_class lcm_den = 1;
    for (const auto& c : work.coefficients())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                c.rational_value().get_den().get_mpz_t());
    std::vector<mpz_class> zc;
    zc.reserve(work.coefficients().size());
    for (const auto& c : work.coefficients())
        zc.push_back(mpz_class(c.rational_value() * lcm_den));

    const mpz_class a0 = zc.front(), an = zc.back();
    const mpz_class budget("1000000000000");
    if (abs(a0) > budget || abs(an) > budget) {
        // Fall back to a small probe rather than factoring huge integers.
        for (long num = -6; num <= 6; ++num)
            for (long den = 1; den <= 4; ++den) {
                Scalar cand = Scalar::of_rational(f, mpq_class(num, den));
                if (p.eval(cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        return roots;
    }

    for (const mpz_class& num : positive_divisors(a0))
        for (const mpz_class& den : positive_divisors(an)) {
            for (int sign = 1; sign >= -1; sign -= 2) {
                mpq_class q(sign * num, den);
                q.canonicalize();
                Scalar cand = Scalar::of_rational(f, q);
                if (p.eval(cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    return roots;
}

}  // namespace

std::vector<Scalar> roots_in_field(const Polynomial& p) {
    const FieldPtr& f = p.field();
    std::vector<Scalar> roots;
    if (p.is_zero()) return roots;
    switch (f->kind()) {
        case FieldKind::Prime: {
            const std::uint64_t q = f->prime_modulus();
            if (q > 100000) return roots;  // out of desk scale for exhaustion
            for (std::uint64_t r = 0; r < q; ++r) {
                Scalar cand = Scalar::of_integer(f, static_cast<long>(r));
                if (p.eval(cand).is_zero()) roots.push_back(cand);
            }
            return roots;
        }
        case FieldKind::Rational: return rational_roots(p);
        case FieldKind::Cyclotomic: {
            std::vector<Scalar> candidates{Scalar::zero(f), Scalar::one(f), -Scalar::one(f)};
            const unsigned n = f->cyclotomic_order();
            const Scalar zeta = primitive_root_of_unity(f, n);
            Scalar power = zeta;
            for (unsigned k = 1; k < n; ++k) {
                candidates.push_back(power);
                candidates.push_back(-power);
                power = power * zeta;
            }
            for (const auto& cand : candidates) {
                if (p.eval(cand).is_zero() &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
            return roots;
        }
    }
    return roots;
}

// ----------------------------------------------------------------------
// Irreducibility
// ----------------------------------------------------------------------

std::optional<IrreducibilityVerdict> exhaustive_spin_up_verdict(const LinearMap& phi) {
    const FieldPtr& f = phi.field();
    if (f->kind() != FieldKind::Prime) return std::nullopt;
    const std::uint64_t p = f->prime_modulus();
    const std::size_t dim = phi.dim();

    double points = 0;  // (p^dim - 1)/(p - 1)
    double power = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        points += power;
        power *= static_cast<double>(p);
    }
    if (points > 1e5) return std::nullopt;

    // Projective representatives: first nonzero coordinate equal to 1.
    for (std::size_t first = 0; first < dim; ++first) {
        const std::size_t tail = dim - first - 1;
        std::vector<std::uint64_t> digits(tail, 0);
        while (true) {
            std::vector<Scalar> v(dim, Scalar::zero(f));
            v[first] = Scalar::one(f);
            for (std::size_t t = 0; t < tail; ++t)
                v[first + 1 + t] = Scalar::of_integer(f, static_cast<long>(digits[t]));
            Subspace orbit = spin_up(Subspace::span(f, dim, {v}), phi.alphas());
            if (orbit.is_proper_nonzero())
                return IrreducibilityVerdict{IrredStatus::Reducible, orbit, std::nullopt};

            std::size_t k = tail;
            while (k > 0 && digits[k - 1] == p - 1) digits[--k] = 0;
            if (k == 0) break;
            ++digits[k - 1];
        }
    }
    return IrreducibilityVerdict{
        IrredStatus::Irreducible, std::nullopt,
        IrreducibilityCertificate{IrreducibilityCertificate::Kind::ExhaustiveSpinUp, 0}};
}

IrreducibilityVerdict irreducibility(const LinearMap& phi) {
    const FieldPtr& f = phi.field();
    const std::size_t dim = phi.dim();

    const GeneratedAlgebra gen = generated_algebra(phi);
    if (gen.dimension == dim * dim)
        return IrreducibilityVerdict{
            IrredStatus::Irreducible, std::nullopt,
            IrreducibilityCertificate{IrreducibilityCertificate::Kind::GeneratedDimension,
                                      gen.dimension}};

    // Heuristic witnesses: spin up eigenvector candidates of the alpha_i
    // and of a few short words.
    std::vector<std::vector<Scalar>> seeds;
    for (const auto& a : phi.alphas()) {
        for (const auto& lambda : roots_in_field(min_poly(a))) {
            const Subspace k = kernel(a - Matrix::scalar(f, dim, lambda));
            for (const auto& v : k.basis()) seeds.push_back(v);
        }
    }
    sampling::Rng rng(0x51D5EEDull);  // fixed seed: verdicts stay deterministic
    std::uniform_int_distribution<std::size_t> pick(0, phi.d() - 1);
    std::uniform_int_distribution<int> len(1, 3);
    for (std::size_t trial = 0; trial < 8 * phi.d(); ++trial) {
        Matrix word = phi.alpha(pick(rng));
        for (int l = len(rng); l > 1; --l) word = word * phi.alpha(pick(rng));
        const Subspace word_kernel = kernel(word);
        for (const auto& v : word_kernel.basis()) seeds.push_back(v);
    }
    for (const auto& v : seeds) {
        bool nonzero = false;
        for (const auto& x : v) nonzero = nonzero || !x.is_zero();
        if (!nonzero) continue;
        Subspace orbit = spin_up(Subspace::span(f, dim, {v}), phi.alphas());
        if (orbit.is_proper_nonzero())
            return IrreducibilityVerdict{IrredStatus::Reducible, orbit, std::nullopt};
    }

    if (auto exhaustive = exhaustive_spin_up_verdict(phi)) return *exhaustive;
    return IrreducibilityVerdict{IrredStatus::Unknown, std::nullopt, std::nullopt};
}

namespace {

std::vector<std::size_t> pivot_positions(const Subspace& w) {
    std::vector<std::size_t> pivots;
    for (const auto& row : w.basis()) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead].is_zero()) ++lead;
        pivots.push_back(lead);
    }
    return pivots;
}

}  // namespace

LinearMap restrict_to_invariant(const LinearMap& phi, const Subspace& invariant) {
    const FieldPtr& f = phi.field();
    if (invariant.ambient_dim() != phi.dim())
        throw DimensionMismatch("subspace ambient vs map dimension");
    if (invariant.dim() == 0) throw DimensionMismatch("cannot restrict to the zero subspace");
    const std::vector<std::size_t> pivots = pivot_positions(invariant);
    const std::size_t k = invariant.dim();

    std::vector<Matrix> restricted;
    restricted.reserve(phi.d());
    for (std::size_t idx = 0; idx < phi.d(); ++idx) {
        const Matrix& a = phi.alpha(idx);
        Matrix r = Matrix::zero(f, k);
        for (std::size_t j = 0; j < k; ++j) {
            const std::vector<Scalar> image = a.apply(invariant.basis()[j]);
            if (!invariant.contains(image))
                throw DimensionMismatch("subspace is not invariant under alpha_" +
                                        std::to_string(idx + 1));
            // rows are fully reduced, so coordinates sit at the pivots
            for (std::size_t i = 0; i < k; ++i) r.at(i, j) = image[pivots[i]];
        }
        restricted.push_back(std::move(r));
    }
    return LinearMap(f, std::move(restricted));
}

LinearMap quotient_by_invariant(const LinearMap& phi, const Subspace& invariant) {
    const FieldPtr& f = phi.field();
    const std::size_t n = phi.dim();
    if (invariant.ambient_dim() != n)
        throw DimensionMismatch("subspace ambient vs map dimension");
    if (invariant.is_full()) throw DimensionMismatch("cannot quotient by the full space");
    const std::vector<std::size_t> pivots = pivot_positions(invariant);

    std::vector<std::size_t> frees;
    for (std::size_t m = 0; m < n; ++m)
        if (std::find(pivots.begin(), pivots.end(), m) == pivots.end()) frees.push_back(m);
    const std::size_t q = frees.size();

    // class of u: reduce modulo the subspace, read off free coordinates
    auto quotient_coords = [&](std::vector<Scalar> u) {
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            const Scalar c = u[pivots[i]];
            if (c.is_zero()) continue;
            for (std::size_t m = 0; m < n; ++m) u[m] -= c * invariant.basis()[i][m];
        }
        std::vector<Scalar> out;
        out.reserve(q);
        for (std::size_t m : frees) out.push_back(u[m]);
        return out;
    };

    std::vector<Matrix> induced;
    induced.reserve(phi.d());
    for (const auto& a : phi.alphas()) {
        Matrix qa = Matrix::zero(f, q);
        for (std::size_t j = 0; j < q; ++j) {
            std::vector<Scalar> e(n, Scalar::zero(f));
            e[frees[j]] = Scalar::one(f);
            const std::vector<Scalar> image = quotient_coords(a.apply(e));
            for (std::size_t i = 0; i < q; ++i) qa.at(i, j) = image[i];
        }
        induced.push_back(std::move(qa));
    }
    return LinearMap(f, std::move(induced));
}

// ----------------------------------------------------------------------
// Fixtures
// ----------------------------------------------------------------------

LinearMap fixture_example1(const FieldPtr& f, const Scalar& a, const Scalar& b) {
    if ((a + b).is_zero())
        throw BadParams("example1 needs a + b != 0 (otherwise the map is a representation)");
    const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
    Matrix alpha1(f, 2, {one, a, zero, zero});
    Matrix alpha2(f, 2, {zero, b, zero, one});
    return LinearMap(f, {std::move(alpha1), std::move(alpha2)});
}

LinearMap fixture_example1(const FieldPtr& f, long a, long b) {
    return fixture_example1(f, Scalar::of_integer(f, a), Scalar::of_integer(f, b));
}

LinearMap fixture_example2(const FieldPtr& f) {
    if (f->characteristic() == 2)
        throw BadParams("example2 is undefined in characteristic 2 (uses a 1/2 factor)");
    const Scalar half = Scalar::of_rational(f, mpq_class(1, 2));
    auto scaled = [&](std::vector<std::vector<long>> rows) {
        return Matrix::of_ints(f, rows) * half;
    };
    Matrix alpha1 = scaled({{0, 1, 1}, {0, 1, -1}, {0, -1, 1}});
    Matrix alpha2 = scaled({{1, 0, -1}, {1, 0, 1}, {-1, 0, 1}});
    Matrix alpha3 = scaled({{1, -1, 0}, {-1, 1, 0}, {1, 1, 0}});
    return LinearMap(f, {std::move(alpha1), std::move(alpha2), std::move(alpha3)});
}

LinearMap fixture_diag_hom(const FieldPtr& f, const std::vector<std::size_t>& multiplicities) {
    if (multiplicities.empty()) throw BadParams("diag_hom needs at least one block");
    std::size_t dim = 0;
    for (std::size_t m : multiplicities) dim += m;
    if (dim == 0) throw BadParams("diag_hom needs a positive total dimension");

    std::vector<Matrix> alphas;
    std::size_t offset = 0;
    for (std::size_t m : multiplicities) {
        Matrix a = Matrix::zero(f, dim);
        for (std::size_t k = 0; k < m; ++k) a.at(offset + k, offset + k) = Scalar::one(f);
        offset += m;
        alphas.push_back(std::move(a));
    }
    return LinearMap(f, std::move(alphas));
}

// ----------------------------------------------------------------------
// Search
// ----------------------------------------------------------------------

std::string conjugation_signature(const LinearMap& phi) {
    std::vector<std::string> polys;
    polys.reserve(phi.d());
    for (const auto& a : phi.alphas()) polys.push_back(char_poly(a).str());
    std::sort(polys.begin(), polys.end());

    std::string sig = "charpolys:";
    for (const auto& s : polys) sig += s + ";";

    // Traces and ranks of all words up to length 3, in word order.  Traces
    // alone only see the semisimplification (an extension and its diagonal
    // have identical trace data), so the ranks carry the radical part.
    sig += "|words:";
    const std::size_t d = phi.d();
    auto word_stats = [&](const Matrix& w) {
        sig += w.trace().str() + "r" + std::to_string(w.rank()) + ",";
    };
    for (std::size_t i = 0; i < d; ++i) word_stats(phi.alpha(i));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) word_stats(phi.alpha(i) * phi.alpha(j));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Matrix ij = phi.alpha(i) * phi.alpha(j);
            for (std::size_t k = 0; k < d; ++k) word_stats(ij * phi.alpha(k));
        }
    return sig;
}

namespace {

void classify_candidate(const LinearMap& map, SearchOutput& out, std::set<std::string>& seen) {
    ++out.stats.enumerated;
    if (!characteristic_check(map).passed()) return;
    ++out.stats.characteristic_passes;
    std::string sig = conjugation_signature(map);
    if (!seen.insert(sig).second) return;
    SearchResult result{map, is_algebra_homomorphism(map).passed(), true, irreducibility(map),
                        std::move(sig)};
    out.results.push_back(std::move(result));
}

}  // namespace

SearchOutput search(const FieldPtr& f, std::size_t d, std::size_t dim, SearchMode mode,
                    std::uint64_t budget, std::uint64_t seed) {
    if (d == 0 || dim == 0) throw BadParams("search needs d >= 1 and dim >= 1");
    SearchOutput out;
    std::set<std::string> seen;

    if (mode == SearchMode::Exhaustive) {
        if (f->kind() != FieldKind::Prime)
            throw BadParams("exhaustive search requires a prime field");
        const std::uint64_t p = f->prime_modulus();
        const std::size_t cells = d * dim * dim;
        double size = 1;
        for (std::size_t i = 0; i < cells; ++i) {
            size *= static_cast<double>(p);
            if (size > 1e7)
                throw SearchSpaceTooLarge("p^(d*dim^2) exceeds 1e7 for p = " + std::to_string(p) +
                                          ", d = " + std::to_string(d) +
                                          ", dim = " + std::to_string(dim));
        }

        std::vector<std::uint64_t> digits(cells, 0);
        std::vector<Scalar> residues;
        residues.reserve(p);
        for (std::uint64_t r = 0; r < p; ++r)
            residues.push_back(Scalar::of_integer(f, static_cast<long>(r)));

        while (true) {
            std::vector<Matrix> alphas;
            alphas.reserve(d);
            for (std::size_t i = 0; i < d; ++i) {
                std::vector<Scalar> entries;
                entries.reserve(dim * dim);
                for (std::size_t k = 0; k < dim * dim; ++k)
                    entries.push_back(residues[digits[i * dim * dim + k]]);
                alphas.emplace_back(f, dim, std::move(entries));
            }
            classify_candidate(LinearMap(f, std::move(alphas)), out, seen);

            std::size_t k = cells;
            while (k > 0 && digits[k - 1] == p - 1) digits[--k] = 0;
            if (k == 0) break;
            ++digits[k - 1];
        }
    } else {
        sampling::Rng rng(seed);
        for (std::uint64_t trial = 0; trial < budget; ++trial)
            classify_candidate(sampling::random_linear_map(f, d, dim, rng), out, seen);
    }

    out.stats.distinct_signatures = seen.size();
    return out;
}

}  // namespace charmorph
