#include "charmorph/matrix.hpp"

#include "charmorph/error.hpp"

namespace charmorph {

Matrix::Matrix(FieldPtr f, std::size_t dim, std::vector<Scalar> entries)
    : field_(std::move(f)), dim_(dim), entries_(std::move(entries)) {
    if (dim_ == 0) throw DimensionMismatch("matrix dimension must be positive");
    if (entries_.size() != dim_ * dim_)
        throw DimensionMismatch("expected " + std::to_string(dim_ * dim_) + " entries, got " +
                                std::to_string(entries_.size()));
    for (const auto& e : entries_)
        if (!same_field(e.field(), field_)) throw MixedFields("matrix entry field");
}

Matrix Matrix::zero(const FieldPtr& f, std::size_t dim) {
    return Matrix(f, dim, std::vector<Scalar>(dim * dim, Scalar::zero(f)));
}

Matrix Matrix::identity(const FieldPtr& f, std::size_t dim) {
    return scalar(f, dim, Scalar::one(f));
}

Matrix Matrix::scalar(const FieldPtr& f, std::size_t dim, const Scalar& c) {
    Matrix m = zero(f, dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = c;
    return m;
}

Matrix Matrix::of_ints(const FieldPtr& f, const std::vector<std::vector<long>>& rows) {
    const std::size_t n = rows.size();
    std::vector<Scalar> e;
    e.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw DimensionMismatch("ragged integer matrix literal");
        for (long v : row) e.push_back(Scalar::of_integer(f, v));
    }
    return Matrix(f, n, std::move(e));
}

void Matrix::require_compatible(const Matrix& o) const {
    if (!same_field(field_, o.field_))
        throw MixedFields("matrices over " + field_->name() + " and " + o.field_->name());
    if (dim_ != o.dim_)
        throw DimensionMismatch("matrix dimensions " + std::to_string(dim_) + " vs " +
                                std::to_string(o.dim_));
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_compatible(o);
    std::vector<Scalar> e = entries_;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.entries_[i];
    return Matrix(field_, dim_, std::move(e));
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_compatible(o);
    std::vector<Scalar> e = entries_;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.entries_[i];
    return Matrix(field_, dim_, std::move(e));
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_compatible(o);
    Matrix out = zero(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                out.at(i, j) += a * b;
            }
        }
    }
    return out;
}

Matrix Matrix::operator*(const Scalar& c) const {
    std::vector<Scalar> e = entries_;
    for (auto& x : e) x *= c;
    return Matrix(field_, dim_, std::move(e));
}

Matrix Matrix::operator-() const {
    std::vector<Scalar> e = entries_;
    for (auto& x : e) x = -x;
    return Matrix(field_, dim_, std::move(e));
}

Matrix Matrix::pow(std::uint64_t e) const {
    Matrix base = *this;
    Matrix acc = identity(field_, dim_);
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool Matrix::operator==(const Matrix& o) const {
    if (!same_field(field_, o.field_) || dim_ != o.dim_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != o.entries_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

Scalar Matrix::trace() const {
    Scalar t = Scalar::zero(field_);
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != dim_) throw DimensionMismatch("vector length vs matrix dimension");
    std::vector<Scalar> out(dim_, Scalar::zero(field_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
        }
    return out;
}

std::size_t Matrix::rank() const {
    std::vector<Scalar> a = entries_;
    const std::size_t n = dim_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && a[pivot * n + col].is_zero()) ++pivot;
        if (pivot == n) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(a[rank * n + j], a[pivot * n + j]);
        const Scalar inv = a[rank * n + col].inverse();
        for (std::size_t j = col; j < n; ++j) a[rank * n + j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || a[i * n + col].is_zero()) continue;
            const Scalar f = a[i * n + col];
            for (std::size_t j = col; j < n; ++j)
                a[i * n + j] -= f * a[rank * n + j];
        }
        ++rank;
    }
    return rank;
}

std::optional<Matrix> Matrix::inverse() const {
    const std::size_t n = dim_;
    std::vector<Scalar> a = entries_;
    Matrix inv = identity(field_, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot * n + col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[col * n + j], a[pivot * n + j]);
                std::swap(inv.at(col, j), inv.at(pivot, j));
            }
        const Scalar s = a[col * n + col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col * n + j] *= s;
            inv.at(col, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i * n + col].is_zero()) continue;
            const Scalar f = a[i * n + col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i * n + j] -= f * a[col * n + j];
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::string Matrix::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < dim_; ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < dim_; ++j) {
            if (j) out += ", ";
            out += at(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

Polynomial char_poly(const Matrix& m) {
    const FieldPtr& f = m.field();
    const std::size_t n = m.dim();
    const Scalar zero = Scalar::zero(f);

    // coeffs of det(tI - A) for the trailing principal k x k block,
    // descending: coeffs[0] t^k + ... + coeffs[k].
    std::vector<Scalar> coeffs = {Scalar::one(f), -m.at(n - 1, n - 1)};
    for (std::size_t k = 2; k <= n; ++k) {
        const std::size_t base = n - k;  // trailing k x k block starts here
        // Toeplitz column: 1, -a, -R C, -R M C, ..., -R M^{k-2} C where a is
        // the block's top-left entry, R its first row, C its first column and
        // M the previous (k-1) x (k-1) block.
        std::vector<Scalar> col;
        col.reserve(k + 1);
        col.push_back(Scalar::one(f));
        col.push_back(-m.at(base, base));
        std::vector<Scalar> w;  // running M^j C
        w.reserve(k - 1);
        for (std::size_t i = 1; i < k; ++i) w.push_back(m.at(base + i, base));
        for (std::size_t j = 0; j + 2 <= k; ++j) {
            Scalar dot = zero;
            for (std::size_t i = 1; i < k; ++i) {
                if (!m.at(base, base + i).is_zero() && !w[i - 1].is_zero())
                    dot += m.at(base, base + i) * w[i - 1];
            }
            col.push_back(-dot);
            if (j + 3 <= k) {
                std::vector<Scalar> next(k - 1, zero);
                for (std::size_t r = 1; r < k; ++r)
                    for (std::size_t c = 1; c < k; ++c) {
                        if (!m.at(base + r, base + c).is_zero() && !w[c - 1].is_zero())
                            next[r - 1] += m.at(base + r, base + c) * w[c - 1];
                    }
                w = std::move(next);
            }
        }
        // Multiply the lower-triangular Toeplitz matrix T(col) into coeffs.
        std::vector<Scalar> out(k + 1, zero);
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                if (i >= j && i - j < col.size() && !col[i - j].is_zero() && !coeffs[j].is_zero())
                    out[i] += col[i - j] * coeffs[j];
            }
        coeffs = std::move(out);
    }

    std::vector<Scalar> ascending(coeffs.rbegin(), coeffs.rend());
    return Polynomial(f, std::move(ascending));
}

Polynomial min_poly(const Matrix& m) {
    const FieldPtr& f = m.field();
    const std::size_t n = m.dim();
    const std::size_t len = n * n;

    // Echelon rows over the vectorized powers, each remembering its
    // expression in terms of vec(M^0), ..., vec(M^k).
    struct Row {
        std::vector<Scalar> v;
        std::vector<Scalar> combo;
        std::size_t lead;
    };
    std::vector<Row> rows;

    Matrix power = Matrix::identity(f, n);
    for (std::size_t k = 0;; ++k) {
        std::vector<Scalar> v;
        v.reserve(len);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v.push_back(power.at(i, j));
        std::vector<Scalar> combo(k + 1, Scalar::zero(f));
        combo[k] = Scalar::one(f);

        for (const Row& r : rows) {
            if (r.lead >= len) continue;
            const Scalar c = v[r.lead];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < len; ++j) v[j] -= c * r.v[j];
            for (std::size_t j = 0; j < r.combo.size(); ++j) combo[j] -= c * r.combo[j];
        }
        std::size_t lead = 0;
        while (lead < len && v[lead].is_zero()) ++lead;
        if (lead == len) {
            // M^k = -sum_{j<k} combo[j]/combo[k] ... combo[k] stayed 1 by
            // construction, so the monic annihilator reads off directly.
            std::vector<Scalar> coeffs = std::move(combo);
            return Polynomial(f, std::move(coeffs));
        }
        const Scalar inv = v[lead].inverse();
        for (auto& x : v) x *= inv;
        for (auto& x : combo) x *= inv;
        rows.push_back(Row{std::move(v), std::move(combo), lead});
        power = power * m;
        if (k > len) throw Error("internal: minimal polynomial search exceeded bound");
    }
}

}  // namespace charmorph
