#include "covmf/linalg.hpp"

#include <algorithm>

#include "covmf/error.hpp"

namespace covmf {

ExactMatrix ExactMatrix::identity(std::size_t n, int field_order) {
    ExactMatrix m(n, n, field_order);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CycloScalar::one(field_order);
    return m;
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& o) const {
    if (cols_ != o.rows_) raise(Errc::DimensionMismatch, "matrix product shape mismatch");
    ExactMatrix r(rows_, o.cols_, order_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const CycloScalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const CycloScalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

RrefResult rref(const ExactMatrix& m) {
    ExactMatrix w = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < w.cols() && row < w.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < w.rows() && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == w.rows()) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w.at(pivot, j), w.at(row, j));
        CycloScalar inv = w.at(row, col).inverse();
        for (std::size_t j = col; j < w.cols(); ++j) w.at(row, j) = w.at(row, j) * inv;
        for (std::size_t i = 0; i < w.rows(); ++i) {
            if (i == row || w.at(i, col).is_zero()) continue;
            CycloScalar f = w.at(i, col);
            for (std::size_t j = col; j < w.cols(); ++j)
                w.at(i, j) -= f * w.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    std::size_t rank = pivots.size();
    ExactMatrix basis(rank, w.cols(), w.field_order());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) basis.at(i, j) = w.at(i, j);
    Subspace s{w.cols(), std::move(basis), std::move(pivots)};
    return RrefResult{std::move(s), rank};
}

std::optional<std::vector<CycloScalar>> solve_membership(const Subspace& s,
                                                         std::span<const CycloScalar> v) {
    if (v.size() != s.ambient_dim)
        raise(Errc::DimensionMismatch, "vector length does not match ambient dimension");
    int order = s.basis.field_order();
    std::vector<CycloScalar> coords;
    coords.reserve(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) coords.push_back(v[s.pivots[i]].promoted(order));
    // residual check: v - sum coords_i * basis_i must vanish
    for (std::size_t j = 0; j < s.ambient_dim; ++j) {
        CycloScalar acc = v[j].promoted(order);
        for (std::size_t i = 0; i < s.dim(); ++i) acc -= coords[i] * s.basis.at(i, j);
        if (!acc.is_zero()) return std::nullopt;
    }
    return coords;
}

std::optional<std::vector<CycloScalar>> solve_in_rows(
    const std::vector<std::vector<CycloScalar>>& rows, std::span<const CycloScalar> v,
    int field_order) {
    const std::size_t k = rows.size();
    const std::size_t dim = v.size();
    for (const auto& r : rows)
        if (r.size() != dim) raise(Errc::DimensionMismatch, "row length mismatch");
    // columns 0..k-1 hold the rows transposed, column k holds the target
    ExactMatrix aug(dim, k + 1, field_order);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < dim; ++i) aug.at(i, j) = rows[j][i].promoted(field_order);
    for (std::size_t i = 0; i < dim; ++i) aug.at(i, k) = v[i].promoted(field_order);
    RrefResult r = rref(aug);
    std::vector<CycloScalar> coeffs(k, CycloScalar::zero(field_order));
    for (std::size_t i = 0; i < r.space.dim(); ++i) {
        std::size_t p = r.space.pivots[i];
        if (p == k) return std::nullopt; // pivot in the target column: inconsistent
        coeffs[p] = r.space.basis.at(i, k);
    }
    return coeffs;
}

bool RrefAccumulator::add_row(std::vector<CycloScalar> row) {
    if (row.size() != ambient_) raise(Errc::DimensionMismatch, "row length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        CycloScalar f = row[pivots_[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = pivots_[i]; j < ambient_; ++j) row[j] -= f * rows_[i][j];
    }
    std::size_t p = 0;
    while (p < ambient_ && row[p].is_zero()) ++p;
    if (p == ambient_) return false;
    CycloScalar inv = row[p].inverse();
    for (std::size_t j = p; j < ambient_; ++j) row[j] = row[j] * inv;
    for (auto& r : rows_) {
        CycloScalar f = r[p];
        if (f.is_zero()) continue;
        for (std::size_t j = p; j < ambient_; ++j) r[j] -= f * row[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
}

bool RrefAccumulator::contains(std::span<const CycloScalar> v) const {
    if (v.size() != ambient_) raise(Errc::DimensionMismatch, "vector length mismatch");
    std::vector<CycloScalar> w(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        CycloScalar f = w[pivots_[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = pivots_[i]; j < ambient_; ++j) w[j] -= f * rows_[i][j];
    }
    for (const auto& c : w)
        if (!c.is_zero()) return false;
    return true;
}

Subspace RrefAccumulator::to_subspace() const {
    ExactMatrix basis(rows_.size(), ambient_, order_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) basis.at(i, j) = rows_[i][j];
    return Subspace{ambient_, std::move(basis), pivots_};
}

CycloScalar determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) raise(Errc::DimensionMismatch, "determinant of non-square matrix");
    ExactMatrix w = m;
    const std::size_t n = w.rows();
    CycloScalar det = CycloScalar::one(w.field_order());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return CycloScalar::zero(w.field_order());
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(pivot, j), w.at(col, j));
            det = -det;
        }
        det *= w.at(col, col);
        CycloScalar inv = w.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (w.at(i, col).is_zero()) continue;
            CycloScalar f = w.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) w.at(i, j) -= f * w.at(col, j);
        }
    }
    return det;
}

} // namespace covmf
