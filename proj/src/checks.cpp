#include "charmorph/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>

#include "charmorph/error.hpp"

namespace charmorph {

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Polynomial in commuting variables with matrix coefficients, keyed by
// exponent vector.  std::map keeps monomials in lexicographic order.
using MatPoly = std::map<std::vector<unsigned>, Matrix>;

// Expands prod_{j=1..r} (sum_m x_m beta_m - x_j); coefficients multiply
// on the right as the product is taken in order j = 1..r.
MatPoly expand_characteristic_product(const std::vector<Matrix>& betas) {
    const std::size_t r = betas.size();
    const FieldPtr& f = betas[0].field();
    const std::size_t dim = betas[0].dim();
    const Matrix id = Matrix::identity(f, dim);

    MatPoly poly;
    poly.emplace(std::vector<unsigned>(r, 0), id);
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<Matrix> factors;
        factors.reserve(r);
        for (std::size_t m = 0; m < r; ++m)
            factors.push_back(m == j ? betas[m] - id : betas[m]);
        MatPoly next;
        for (const auto& [expo, coef] : poly) {
            if (coef.is_zero()) continue;
            for (std::size_t m = 0; m < r; ++m) {
                std::vector<unsigned> e = expo;
                ++e[m];
                const Matrix term = coef * factors[m];
                auto it = next.find(e);
                if (it == next.end())
                    next.emplace(std::move(e), term);
                else
                    it->second = it->second + term;
            }
        }
        poly = std::move(next);
    }
    return poly;
}

std::string monomial_str(const std::vector<unsigned>& expo, const char* var) {
    std::string out;
    for (std::size_t i = 0; i < expo.size(); ++i) {
        if (expo[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += var + std::to_string(i + 1);
        if (expo[i] > 1) out += '^' + std::to_string(expo[i]);
    }
    return out.empty() ? "1" : out;
}

// All exponent vectors of length r with total degree r, lexicographic:
// the C(2r-1, r) monomials the expanded identity must annihilate.
std::vector<std::vector<unsigned>> degree_r_monomials(std::size_t r) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> expo(r, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
        if (pos + 1 == r) {
            expo[pos] = left;
            out.push_back(expo);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            expo[pos] = e;
            rec(pos + 1, left - e);
        }
    };
    rec(0, static_cast<unsigned>(r));
    return out;
}

// All set partitions of {0..d-1} as restricted growth strings, in RGS
// order; the coarsest partition comes first.
std::vector<std::vector<std::size_t>> set_partitions(std::size_t d) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> rgs(d, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t max) {
        if (i == d) {
            out.push_back(rgs);
            return;
        }
        for (std::size_t b = 0; b <= max + 1 && b <= i; ++b) {
            rgs[i] = b;
            rec(i + 1, std::max(max, b));
        }
    };
    if (d > 0) rec(1, 0);
    return out;
}

std::string partition_str(const std::vector<std::size_t>& rgs) {
    const std::size_t blocks = rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::string out;
    for (std::size_t b = 0; b < blocks; ++b) {
        out += '{';
        bool first = true;
        for (std::size_t i = 0; i < rgs.size(); ++i) {
            if (rgs[i] != b) continue;
            if (!first) out += ',';
            out += std::to_string(i + 1);
            first = false;
        }
        out += '}';
    }
    return out;
}

std::string index_tuple_str(const std::vector<std::size_t>& idx, bool one_based) {
    std::string out = "(";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(idx[k] + (one_based ? 1 : 0));
    }
    return out + ")";
}

void record(CheckReport& report, std::string kind, const Matrix& residual) {
    if (!residual.is_zero())
        report.violations.push_back(Violation{std::move(kind), residual, std::nullopt});
}

}  // namespace

CheckReport is_algebra_homomorphism(const LinearMap& phi) {
    Timer timer;
    CheckReport report{"hom", {}, {}};
    const std::size_t d = phi.d();
    const Matrix id = Matrix::identity(phi.field(), phi.dim());

    Matrix sum = Matrix::zero(phi.field(), phi.dim());
    for (std::size_t i = 0; i < d; ++i) sum = sum + phi.alpha(i);
    record(report, "unit(sum alpha_i - id)", sum - id);
    ++report.stats.equations;

    for (std::size_t i = 0; i < d; ++i) {
        record(report, "idempotent(" + std::to_string(i + 1) + ")",
               phi.alpha(i) * phi.alpha(i) - phi.alpha(i));
        ++report.stats.equations;
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            record(report,
                   "product(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                   phi.alpha(i) * phi.alpha(j));
            ++report.stats.equations;
        }

    report.stats.elapsed_seconds = timer.seconds();
    return report;
}

CheckReport characteristic_check(const LinearMap& phi) {
    Timer timer;
    CheckReport report{"char", {}, {}};
    const MatPoly poly = expand_characteristic_product(phi.alphas());
    for (const auto& expo : degree_r_monomials(phi.d())) {
        auto it = poly.find(expo);
        if (it != poly.end()) record(report, "monomial " + monomial_str(expo, "x"), it->second);
        ++report.stats.equations;
    }
    report.stats.elapsed_seconds = timer.seconds();
    return report;
}

CheckReport minimal_characteristic_check(const LinearMap& phi) {
    Timer timer;
    CheckReport report{"minchar", {}, {}};
    const std::size_t d = phi.d();
    for (const auto& rgs : set_partitions(d)) {
        const std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<Matrix> betas(blocks, Matrix::zero(phi.field(), phi.dim()));
        for (std::size_t i = 0; i < d; ++i) betas[rgs[i]] = betas[rgs[i]] + phi.alpha(i);

        const MatPoly poly = expand_characteristic_product(betas);
        const std::string prefix = "partition " + partition_str(rgs) + " ";
        for (const auto& expo : degree_r_monomials(blocks)) {
            auto it = poly.find(expo);
            if (it != poly.end())
                record(report, prefix + "monomial " + monomial_str(expo, "y"), it->second);
            ++report.stats.equations;
        }
    }
    report.stats.elapsed_seconds = timer.seconds();
    return report;
}

// ---------------------------------------------------------------------
// Noncommutative identity
// ---------------------------------------------------------------------

namespace {

void require_large_characteristic(const LinearMap& phi) {
    const std::uint64_t p = phi.field()->characteristic();
    if (p != 0 && p <= phi.d())
        throw CharacteristicTooSmall("field characteristic " + std::to_string(p) +
                                     " must be 0 or greater than d = " + std::to_string(phi.d()));
}

Matrix nc_residual_naive(const LinearMap& phi, const std::vector<std::size_t>& index) {
    const std::size_t d = phi.d();
    const FieldPtr& f = phi.field();
    const Matrix id = Matrix::identity(f, phi.dim());
    std::vector<Matrix> shifted;  // alpha_i - id
    shifted.reserve(d);
    for (std::size_t i = 0; i < d; ++i) shifted.push_back(phi.alpha(i) - id);

    Matrix total = Matrix::zero(f, phi.dim());
    std::vector<std::size_t> perm(d);
    for (std::size_t k = 0; k < d; ++k) perm[k] = k;
    do {
        Matrix prod = id;
        for (std::size_t k = 0; k < d; ++k)
            prod = prod * (index[k] == perm[k] ? shifted[index[k]] : phi.alpha(index[k]));
        total = total + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Matrix nc_residual_fast(const LinearMap& phi, const std::vector<std::size_t>& index) {
    const std::size_t d = phi.d();
    const FieldPtr& f = phi.field();
    std::vector<Scalar> factorial(d + 1, Scalar::one(f));
    for (std::size_t k = 1; k <= d; ++k)
        factorial[k] = factorial[k - 1] * Scalar::of_integer(f, static_cast<long>(k));

    Matrix total = Matrix::zero(f, phi.dim());
    // Walk positions in order, branching on membership of the delta set
    // S; the running product over excluded positions is shared across
    // the whole subtree, and S stays injective via the used-value mask.
    std::function<void(std::size_t, std::uint64_t, std::size_t, const Matrix&)> rec =
        [&](std::size_t k, std::uint64_t used, std::size_t s, const Matrix& prefix) {
            if (k == d) {
                Scalar weight = factorial[d - s];
                if (s & 1) weight = -weight;
                total = total + prefix * weight;
                return;
            }
            rec(k + 1, used, s, prefix * phi.alpha(index[k]));
            const std::uint64_t bit = std::uint64_t{1} << index[k];
            if (!(used & bit)) rec(k + 1, used | bit, s + 1, prefix);
        };
    rec(0, 0, 0, Matrix::identity(f, phi.dim()));
    return total;
}

}  // namespace

Matrix nc_residual(const LinearMap& phi, const std::vector<std::size_t>& index, NcMode mode) {
    require_large_characteristic(phi);
    if (index.size() != phi.d()) throw DimensionMismatch("multi-index length vs d");
    for (std::size_t i : index)
        if (i >= phi.d()) throw DimensionMismatch("multi-index entry out of range");
    return mode == NcMode::Naive ? nc_residual_naive(phi, index) : nc_residual_fast(phi, index);
}

std::vector<std::pair<std::vector<std::size_t>, Matrix>> nc_residuals(const LinearMap& phi,
                                                                      NcMode mode) {
    require_large_characteristic(phi);
    const std::size_t d = phi.d();
    std::vector<std::pair<std::vector<std::size_t>, Matrix>> out;
    std::vector<std::size_t> index(d, 0);
    while (true) {
        out.emplace_back(index, mode == NcMode::Naive ? nc_residual_naive(phi, index)
                                                      : nc_residual_fast(phi, index));
        std::size_t k = d;
        while (k > 0 && index[k - 1] == d - 1) index[--k] = 0;
        if (k == 0) break;
        ++index[k - 1];
    }
    return out;
}

CheckReport nc_characteristic_check(const LinearMap& phi, NcMode mode) {
    Timer timer;
    require_large_characteristic(phi);
    CheckReport report{"nc", {}, {}};
    for (auto& [index, residual] : nc_residuals(phi, mode)) {
        record(report, "multi-index " + index_tuple_str(index, /*one_based=*/true), residual);
        ++report.stats.equations;
    }
    report.stats.elapsed_seconds = timer.seconds();
    return report;
}

// ---------------------------------------------------------------------
// Roots of unity
// ---------------------------------------------------------------------

double roots_full_cost(const LinearMap& phi, unsigned n) {
    return std::pow(static_cast<double>(n), static_cast<double>(phi.d()));
}

CheckReport roots_of_unity_check(const LinearMap& phi, unsigned n, RootsMode mode) {
    Timer timer;
    if (n <= 2) throw NTooSmall("roots-of-unity test requires n > 2, got n = " + std::to_string(n));
    const FieldPtr& f = phi.field();
    const Scalar zeta = primitive_root_of_unity(f, n);
    const std::size_t d = phi.d();
    const Matrix id = Matrix::identity(f, phi.dim());

    CheckReport report{"roots", {}, {}};

    // phi(1) = id is a hypothesis of the test; without it the torsion
    // sweep is meaningless, so a failure here is reported alone.
    const Matrix unit_image = apply(phi, AlgebraElement::unit(f, d));
    ++report.stats.equations;
    if (unit_image != id) {
        const std::vector<std::size_t> zero_tuple(d, 0);
        record(report, "torsion " + index_tuple_str(zero_tuple, false) + " [phi(1) != id]",
               unit_image - id);
        report.stats.elapsed_seconds = timer.seconds();
        return report;
    }

    std::vector<Scalar> zpow(n, Scalar::one(f));
    for (unsigned k = 1; k < n; ++k) zpow[k] = zpow[k - 1] * zeta;

    auto check_element = [&](const std::vector<unsigned>& exponents) {
        std::vector<Scalar> coords;
        coords.reserve(d);
        for (unsigned e : exponents) coords.push_back(zpow[e % n]);
        const AlgebraElement a(f, coords);
        const Matrix image_pow = apply(phi, a).pow(n);
        ++report.stats.equations;
        std::vector<std::size_t> idx(exponents.begin(), exponents.end());
        record(report, "torsion " + index_tuple_str(idx, /*one_based=*/false), image_pow - id);
    };

    if (mode == RootsMode::Full) {
        std::vector<unsigned> expo(d, 0);
        while (true) {
            check_element(expo);
            std::size_t k = d;
            while (k > 0 && expo[k - 1] == n - 1) expo[--k] = 0;
            if (k == 0) break;
            ++expo[k - 1];
        }
    } else {
        // 1 + (zeta^b - 1) e_i
        for (std::size_t i = 0; i < d; ++i)
            for (unsigned b = 1; b < n; ++b) {
                std::vector<unsigned> expo(d, 0);
                expo[i] = b;
                check_element(expo);
            }
        // 1 + (zeta^a - 1)(e_i + e_j)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                for (unsigned a = 1; a < n; ++a) {
                    std::vector<unsigned> expo(d, 0);
                    expo[i] = a;
                    expo[j] = a;
                    check_element(expo);
                }
    }

    report.stats.elapsed_seconds = timer.seconds();
    return report;
}

// ---------------------------------------------------------------------
// Root-ratio dichotomy
// ---------------------------------------------------------------------

std::vector<RootRatioQuadruple> verify_root_ratio_lemma(unsigned n, const FieldPtr& f) {
    if (n < 2) throw BadParams("root-ratio verification requires n >= 2");
    const Scalar zeta = primitive_root_of_unity(f, n);
    const Scalar one = Scalar::one(f);

    std::vector<Scalar> diff;  // zeta^k - 1
    diff.reserve(n);
    Scalar power = one;
    for (unsigned k = 0; k < n; ++k) {
        diff.push_back(power - one);
        power = power * zeta;
    }

    // (zeta^a - 1)(zeta^d - 1), cross-multiplied form of the ratio.
    std::vector<std::vector<Scalar>> prod(n, std::vector<Scalar>());
    for (unsigned a = 0; a < n; ++a) {
        prod[a].reserve(n);
        for (unsigned b = 0; b < n; ++b) prod[a].push_back(diff[a] * diff[b]);
    }

    std::vector<RootRatioQuadruple> violations;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 1; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                for (unsigned dd = 1; dd < n; ++dd) {
                    if (prod[a][dd] != prod[c][b]) continue;
                    // Both numerators vanishing (a = c = 0) makes the ratio
                    // equality the trivial 0 = 0, which constrains nothing;
                    // the dichotomy only speaks to nonzero ratios.
                    const bool trivial = (a == 0 && c == 0);
                    const bool case1 = (a == b && c == dd);
                    const bool case2 = (a == c && b == dd);
                    if (!trivial && !case1 && !case2) violations.push_back({a, b, c, dd});
                }
    return violations;
}

}  // namespace charmorph
