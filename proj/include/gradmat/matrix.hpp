#pragma once

/// Dense matrices over an exact field, with Gaussian elimination, span
/// membership, kernels and inverses. Everything is exact; there are no
/// tolerances anywhere.

#include <cstdint>
#include <optional>
#include <vector>

#include "gradmat/common.hpp"
#include "gradmat/scalar.hpp"

namespace gradmat {

class Matrix {
public:
    Matrix() = default;

    Matrix(const Field& f, std::int64_t rows, std::int64_t cols)
        : field_(f), rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows * cols), Scalar::zero(f)) {
        if (rows < 1 || cols < 1) throw invalid_argument("matrix dimensions must be positive");
    }

    static Matrix identity(const Field& f, std::int64_t n) {
        Matrix m(f, n, n);
        for (std::int64_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    static Matrix unit(const Field& f, std::int64_t n, std::int64_t i, std::int64_t j) {
        Matrix m(f, n, n);
        m.at(i, j) = Scalar::one(f);
        return m;
    }

    static Matrix from_rows(const Field& f,
                            const std::vector<std::vector<Scalar>>& rows) {
        Matrix m(f, static_cast<std::int64_t>(rows.size()),
                 static_cast<std::int64_t>(rows.at(0).size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows[0].size())
                throw invalid_argument("ragged rows");
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                m.at(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)) = rows[i][j];
        }
        return m;
    }

    /// Integer literal rows, mapped into the field.
    static Matrix lit(const Field& f,
                      const std::vector<std::vector<std::int64_t>>& rows) {
        Matrix m(f, static_cast<std::int64_t>(rows.size()),
                 static_cast<std::int64_t>(rows.at(0).size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                m.at(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)) =
                    Scalar::make(f, rows[i][j]);
        return m;
    }

    const Field& field() const { return field_; }
    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    Scalar& at(std::int64_t i, std::int64_t j) {
        return entries_[static_cast<std::size_t>(i * cols_ + j)];
    }
    const Scalar& at(std::int64_t i, std::int64_t j) const {
        return entries_[static_cast<std::size_t>(i * cols_ + j)];
    }

    const std::vector<Scalar>& entries() const { return entries_; }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < entries_.size(); ++k)
            r.entries_[k] = entries_[k] + o.entries_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < entries_.size(); ++k)
            r.entries_[k] = entries_[k] - o.entries_[k];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw invalid_argument("dimension mismatch in product");
        Matrix r(field_, rows_, o.cols_);
        for (std::int64_t i = 0; i < rows_; ++i)
            for (std::int64_t t = 0; t < cols_; ++t) {
                const Scalar& a = at(i, t);
                if (a.is_zero()) continue;
                for (std::int64_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + a * o.at(t, j);
            }
        return r;
    }

    Matrix scaled(const Scalar& c) const {
        Matrix r = *this;
        for (auto& e : r.entries_) e = e * c;
        return r;
    }

    Matrix transposed() const {
        Matrix r(field_, cols_, rows_);
        for (std::int64_t i = 0; i < rows_; ++i)
            for (std::int64_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw invalid_argument("matrix shape mismatch");
    }

    Field field_;
    std::int64_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> entries_;
};

// ---------------------------------------------------------------------------
// Elimination kernels.

/// In-place reduced row echelon form; returns pivot column indices.
inline std::vector<std::int64_t> rref(Matrix& m) {
    std::vector<std::int64_t> pivots;
    std::int64_t r = 0;
    for (std::int64_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::int64_t pr = -1;
        for (std::int64_t i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (std::int64_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(pr, j), m.at(r, j));
        const Scalar inv = m.at(r, c).inverse();
        for (std::int64_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (std::int64_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Scalar f = m.at(i, c);
            for (std::int64_t j = c; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::int64_t rank(Matrix m) {
    return static_cast<std::int64_t>(rref(m).size());
}

/// One solution of A x = b, or nullopt if inconsistent (free variables zero).
inline std::optional<std::vector<Scalar>> solve(const Matrix& a,
                                                const std::vector<Scalar>& b) {
    if (static_cast<std::int64_t>(b.size()) != a.rows())
        throw invalid_argument("right-hand side length mismatch");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::int64_t i = 0; i < a.rows(); ++i) {
        for (std::int64_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<Scalar> x(static_cast<std::size_t>(a.cols()), Scalar::zero(a.field()));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[static_cast<std::size_t>(pivots[i])] = aug.at(static_cast<std::int64_t>(i), a.cols());
    return x;
}

/// RREF basis of the kernel of A.
inline std::vector<std::vector<Scalar>> kernel(Matrix a) {
    const Field f = a.field();
    const std::int64_t n = a.cols();
    auto pivots = rref(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Scalar>> out;
    for (std::int64_t c = 0; c < n; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        std::vector<Scalar> v(static_cast<std::size_t>(n), Scalar::zero(f));
        v[static_cast<std::size_t>(c)] = Scalar::one(f);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[static_cast<std::size_t>(pivots[i])] =
                -a.at(static_cast<std::int64_t>(i), c);
        out.push_back(std::move(v));
    }
    return out;
}

inline std::optional<Matrix> try_inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw invalid_argument("inverse of non-square matrix");
    const std::int64_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one(m.field());
    }
    auto pivots = rref(aug);
    if (static_cast<std::int64_t>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] >= n)
        return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

inline Matrix inverse(const Matrix& m) {
    auto r = try_inverse(m);
    if (!r) throw invalid_argument("matrix is singular");
    return *r;
}

// ---------------------------------------------------------------------------
// Span operations on flattened matrices.

inline Matrix columns_from_vectors(const Field& f,
                                   const std::vector<std::vector<Scalar>>& vecs,
                                   std::size_t dim) {
    Matrix m(f, static_cast<std::int64_t>(dim), static_cast<std::int64_t>(vecs.size()));
    for (std::size_t j = 0; j < vecs.size(); ++j) {
        if (vecs[j].size() != dim) throw invalid_argument("vector length mismatch");
        for (std::size_t i = 0; i < dim; ++i)
            m.at(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)) = vecs[j][i];
    }
    return m;
}

enum class SpanStatus { InSpan, NotInSpan, InvalidBasis };

struct SpanResult {
    SpanStatus status;
    std::vector<Scalar> coords; // valid when status == InSpan
};

/// Coordinates of `target` in the span of `basis` (matrices of equal shape).
/// A linearly dependent basis is reported as InvalidBasis, which is distinct
/// from NotInSpan.
inline SpanResult span_solve(const std::vector<Matrix>& basis, const Matrix& target) {
    if (basis.empty())
        return {target.is_zero() ? SpanStatus::InSpan : SpanStatus::NotInSpan, {}};
    const Field& f = target.field();
    const std::size_t dim = target.entries().size();
    std::vector<std::vector<Scalar>> cols;
    for (const auto& b : basis) {
        if (b.rows() != target.rows() || b.cols() != target.cols())
            throw invalid_argument("span basis shape mismatch");
        cols.push_back(b.entries());
    }
    Matrix a = columns_from_vectors(f, cols, dim);
    if (rank(a) < static_cast<std::int64_t>(basis.size()))
        return {SpanStatus::InvalidBasis, {}};
    auto x = solve(a, target.entries());
    if (!x) return {SpanStatus::NotInSpan, {}};
    return {SpanStatus::InSpan, std::move(*x)};
}

/// Membership of a flattened vector in the span of vectors (no independence
/// requirement).
inline bool vector_in_span(const Field& f,
                           const std::vector<std::vector<Scalar>>& span,
                           const std::vector<Scalar>& v) {
    if (span.empty()) {
        for (const auto& e : v)
            if (!e.is_zero()) return false;
        return true;
    }
    Matrix a = columns_from_vectors(f, span, v.size());
    return solve(a, v).has_value();
}

/// True iff every product x*y with x in b1, y in b2 lies in span(b3).
inline bool subspace_contains_products(const std::vector<Matrix>& b1,
                                       const std::vector<Matrix>& b2,
                                       const std::vector<Matrix>& b3) {
    std::vector<std::vector<Scalar>> span;
    for (const auto& m : b3) span.push_back(m.entries());
    for (const auto& x : b1)
        for (const auto& y : b2) {
            Matrix p = x * y;
            if (!vector_in_span(p.field(), span, p.entries())) return false;
        }
    return true;
}

} // namespace gradmat
