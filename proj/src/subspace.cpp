#include "charmorph/subspace.hpp"

#include <algorithm>

#include "charmorph/error.hpp"

namespace charmorph {

namespace {

// In-place reduced row echelon form; returns pivot columns.  Zero rows
// are dropped and rows end up sorted by pivot.
std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t width = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const Scalar inv = rows[r][col].inverse();
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            const Scalar f = rows[i][col];
            for (std::size_t j = col; j < width; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Reduce v against echelon rows; true if a nonzero remainder was kept
// (appended, normalized, with its pivot recorded).
bool insert_reduced(std::vector<std::vector<Scalar>>& rows, std::vector<std::size_t>& leads,
                    std::vector<Scalar> v) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Scalar c = v[leads[i]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * rows[i][j];
    }
    std::size_t lead = 0;
    while (lead < v.size() && v[lead].is_zero()) ++lead;
    if (lead == v.size()) return false;
    const Scalar inv = v[lead].inverse();
    for (auto& x : v) x *= inv;
    rows.push_back(std::move(v));
    leads.push_back(lead);
    return true;
}

}  // namespace

Subspace Subspace::zero(const FieldPtr& f, std::size_t ambient) {
    return Subspace(f, ambient, {});
}

Subspace Subspace::full(const FieldPtr& f, std::size_t ambient) {
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t i = 0; i < ambient; ++i) {
        std::vector<Scalar> row(ambient, Scalar::zero(f));
        row[i] = Scalar::one(f);
        basis.push_back(std::move(row));
    }
    return Subspace(f, ambient, std::move(basis));
}

Subspace Subspace::span(const FieldPtr& f, std::size_t ambient,
                        std::vector<std::vector<Scalar>> vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambient) throw DimensionMismatch("spanning vector length vs ambient");
    rref(vectors);
    return Subspace(f, ambient, std::move(vectors));
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length vs ambient");
    std::vector<Scalar> w = v;
    for (const auto& row : basis_) {
        std::size_t lead = 0;
        while (lead < ambient_ && row[lead].is_zero()) ++lead;
        const Scalar c = w[lead];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j) w[j] -= c * row[j];
    }
    for (const auto& x : w)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    if (!same_field(field_, o.field_) || ambient_ != o.ambient_ ||
        basis_.size() != o.basis_.size())
        return false;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] != o.basis_[i]) return false;
    return true;
}

std::string Subspace::str() const {
    std::string out = "span{";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        out += i ? ", (" : "(";
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (j) out += ", ";
            out += basis_[i][j].str();
        }
        out += ")";
    }
    return out + "}";
}

Subspace kernel(const Matrix& m) {
    const FieldPtr& f = m.field();
    const std::size_t n = m.dim();
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    const std::vector<std::size_t> pivots = rref(rows);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(n, Scalar::zero(f));
        v[free] = Scalar::one(f);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return Subspace::span(f, n, std::move(basis));
}

Subspace spin_up(const Subspace& seed, const std::vector<Matrix>& generators) {
    const FieldPtr& f = seed.field();
    const std::size_t n = seed.ambient_dim();
    for (const auto& g : generators)
        if (g.dim() != n) throw DimensionMismatch("generator dimension vs ambient");

    std::vector<std::vector<Scalar>> rows;
    std::vector<std::size_t> leads;
    std::vector<std::vector<Scalar>> work;
    for (const auto& v : seed.basis())
        if (insert_reduced(rows, leads, v)) work.push_back(rows.back());

    while (!work.empty() && rows.size() < n) {
        std::vector<Scalar> v = std::move(work.back());
        work.pop_back();
        for (const auto& g : generators) {
            if (rows.size() == n) break;
            if (insert_reduced(rows, leads, g.apply(v))) work.push_back(rows.back());
        }
    }
    return Subspace::span(f, n, std::move(rows));
}

}  // namespace charmorph
