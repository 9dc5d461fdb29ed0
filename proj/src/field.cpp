#include "charmorph/field.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "charmorph/error.hpp"

namespace charmorph {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    if (p % 3 == 0) return p == 3;
    for (std::uint64_t d = 5; d * d <= p; d += 6) {
        if (p % d == 0 || p % (d + 2) == 0) return false;
    }
    return true;
}

unsigned euler_totient(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, divisor monic; remainder must vanish.
std::vector<mpz_class> exact_div(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    const std::size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<mpz_class> quot(dn - dd + 1);
    for (std::size_t k = dn + 1; k-- > dd;) {
        mpz_class c = num[k];
        quot[k - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw Error("internal: inexact cyclotomic division");
    return quot;
}

}  // namespace

std::vector<mpz_class> cyclotomic_coefficients(unsigned n) {
    static std::mutex mtx;
    static std::map<unsigned, std::vector<mpz_class>> cache;
    if (n == 0) throw BadParams("cyclotomic order must be positive");

    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d, all divisions exact.
    std::function<std::vector<mpz_class>(unsigned)> phi = [&](unsigned m) -> std::vector<mpz_class> {
        auto hit = cache.find(m);
        if (hit != cache.end()) return hit->second;
        std::vector<mpz_class> f(m + 1);
        f[0] = -1;
        f[m] = 1;
        for (unsigned d = 1; d < m; ++d) {
            if (m % d == 0) f = exact_div(std::move(f), phi(d));
        }
        cache.emplace(m, f);
        return f;
    };
    return phi(n);
}

Field::Field(FieldKind kind, std::uint64_t param) : kind_(kind), param_(param), degree_(1) {
    switch (kind_) {
        case FieldKind::Rational:
            break;
        case FieldKind::Cyclotomic:
            modulus_ = cyclotomic_coefficients(static_cast<unsigned>(param_));
            degree_ = static_cast<unsigned>(modulus_.size() - 1);
            break;
        case FieldKind::Prime:
            if (!is_prime_u64(param_)) throw BadParams("modulus " + std::to_string(param_) + " is not prime");
            if (param_ >> 32) throw BadParams("prime modulus must fit in 32 bits");
            break;
    }
}

FieldPtr Field::rationals() {
    static FieldPtr q(new Field(FieldKind::Rational, 0));
    return q;
}

FieldPtr Field::cyclotomic(unsigned n) {
    if (n == 0) throw BadParams("cyclotomic order must be positive");
    return FieldPtr(new Field(FieldKind::Cyclotomic, n));
}

FieldPtr Field::prime(std::uint64_t p) {
    return FieldPtr(new Field(FieldKind::Prime, p));
}

std::string Field::name() const {
    switch (kind_) {
        case FieldKind::Rational: return "Q";
        case FieldKind::Cyclotomic: return "Q(zeta_" + std::to_string(param_) + ")";
        case FieldKind::Prime: return "GF(" + std::to_string(param_) + ")";
    }
    return "?";
}

}  // namespace charmorph
