#pragma once

// Dense exact linear algebra: vectors, linear maps, row echelon forms,
// kernels, affine solves and quotient spaces.

#include "qhopf/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qhopf {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(Field f, std::size_t n) { return Vector(n, f.zero()); }

inline Vector basis_vector(Field f, std::size_t n, std::size_t i)
{
    Vector v = zero_vector(f, n);
    v.at(i) = f.one();
    return v;
}

inline bool is_zero(const Vector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline Vector& add_scaled(Vector& acc, const Scalar& c, const Vector& v)
{
    if (acc.size() != v.size()) throw MathError("vector length mismatch");
    if (c.is_zero()) return acc;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) acc[i] += c * v[i];
    }
    return acc;
}

inline Vector operator+(Vector a, const Vector& b)
{
    if (a.size() != b.size()) throw MathError("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vector operator-(Vector a, const Vector& b)
{
    if (a.size() != b.size()) throw MathError("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Vector operator*(const Scalar& c, Vector v)
{
    for (auto& x : v) x *= c;
    return v;
}

inline Scalar dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size()) throw MathError("vector length mismatch");
    if (a.empty()) throw MathError("dot product of empty vectors");
    Scalar s = a[0].field().zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    }
    return s;
}

/// Linear map k^cols -> k^rows stored row-major; column j is the image of e_j.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

    static Matrix identity(Field f, std::size_t n)
    {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }

    static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols)
    {
        Matrix m(f, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
        return m;
    }

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t domain_dim() const { return cols_; }
    std::size_t codomain_dim() const { return rows_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector column(std::size_t j) const
    {
        Vector v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

    void set_column(std::size_t j, const Vector& v)
    {
        if (v.size() != rows_) throw MathError("column length mismatch");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    Vector apply(const Vector& v) const
    {
        if (v.size() != cols_) {
            throw MathError("dimension mismatch: map expects " + std::to_string(cols_) + ", got " + std::to_string(v.size()));
        }
        Vector out = zero_vector(field_, rows_);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const auto& a = (*this)(i, j);
                if (!a.is_zero()) out[i] += a * v[j];
            }
        }
        return out;
    }

    /// (*this) after `inner`.
    Matrix compose(const Matrix& inner) const
    {
        if (inner.rows_ != cols_) throw MathError("dimension mismatch in composition");
        Matrix out(field_, rows_, inner.cols_);
        for (std::size_t j = 0; j < inner.cols_; ++j) out.set_column(j, apply(inner.column(j)));
        return out;
    }

    Matrix transpose() const
    {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw MathError("matrix shape mismatch");
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
        return a;
    }

private:
    Field field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

using LinearMap = Matrix;

/// Reduced row echelon form. Pivoting takes the first nonzero entry in the
/// leftmost remaining column.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots; // pivot column of each nonzero row, increasing
    std::size_t rank() const { return pivots.size(); }
};

inline Echelon row_reduce(Matrix m)
{
    Echelon e;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        }
        const Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Scalar factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
            }
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(m);
    return e;
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

/// Basis of the null space, one vector per free column (free coordinate = 1).
inline std::vector<Vector> kernel(const Matrix& m)
{
    const auto e = row_reduce(m);
    const auto f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(f, m.cols());
        v[free] = f.one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct AffineSolution {
    Vector solution;
    std::size_t kernel_dim = 0;
};

/// One solution of m x = target (free coordinates set to 0), or nullopt.
inline std::optional<AffineSolution> solve_affine(const Matrix& m, const Vector& target)
{
    if (target.size() != m.rows()) throw MathError("dimension mismatch in solve_affine");
    const auto f = m.field();
    Matrix aug(f, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = target[i];
    }
    const auto e = row_reduce(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) {
        return std::nullopt;
    }
    AffineSolution s{zero_vector(f, m.cols()), m.cols() - e.rank()};
    for (std::size_t r = 0; r < e.pivots.size(); ++r) s.solution[e.pivots[r]] = e.reduced(r, m.cols());
    return s;
}

inline std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols()) return std::nullopt;
    const auto n = m.rows();
    const auto f = m.field();
    if (n == 0) return m;
    Matrix aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = f.one();
    }
    const auto e = row_reduce(aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

/// Ambient space modulo the span of a set of relation vectors. The chosen
/// complement is spanned by the standard basis vectors at non-pivot columns of
/// the echelonized relations.
class QuotientSpace {
public:
    QuotientSpace() = default;

    QuotientSpace(Field f, std::size_t ambient_dim, const std::vector<Vector>& relations) : field_(f), ambient_(ambient_dim)
    {
        Matrix rel(f, relations.size(), ambient_dim);
        for (std::size_t i = 0; i < relations.size(); ++i) {
            if (relations[i].size() != ambient_dim) throw MathError("relation vector outside the ambient space");
            for (std::size_t j = 0; j < ambient_dim; ++j) rel(i, j) = relations[i][j];
        }
        auto e = row_reduce(rel);
        std::vector<bool> is_pivot(ambient_dim, false);
        for (auto c : e.pivots) is_pivot[c] = true;
        for (std::size_t j = 0; j < ambient_dim; ++j) {
            if (!is_pivot[j]) free_.push_back(j);
        }
        pivots_ = e.pivots;
        rows_.reserve(pivots_.size());
        for (std::size_t r = 0; r < pivots_.size(); ++r) rows_.push_back(e.reduced.row(r));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return free_.size(); }
    std::size_t relation_rank() const { return pivots_.size(); }

    Vector project(Vector v) const
    {
        if (v.size() != ambient_) throw MathError("dimension mismatch in quotient projection");
        for (std::size_t r = 0; r < pivots_.size(); ++r) {
            const Scalar c = v[pivots_[r]];
            if (!c.is_zero()) add_scaled(v, -c, rows_[r]);
        }
        Vector q;
        q.reserve(free_.size());
        for (auto j : free_) q.push_back(v[j]);
        return q;
    }

    Vector section(const Vector& q) const
    {
        if (q.size() != free_.size()) throw MathError("dimension mismatch in quotient section");
        Vector v = zero_vector(field_, ambient_);
        for (std::size_t k = 0; k < free_.size(); ++k) v[free_[k]] = q[k];
        return v;
    }

    Matrix projection_matrix() const
    {
        Matrix m(field_, dim(), ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) m.set_column(j, project(basis_vector(field_, ambient_, j)));
        return m;
    }

    Matrix section_matrix() const
    {
        Matrix m(field_, ambient_, dim());
        for (std::size_t k = 0; k < dim(); ++k) m(free_[k], k) = field_.one();
        return m;
    }

private:
    Field field_{};
    std::size_t ambient_ = 0;
    std::vector<std::size_t> pivots_;
    std::vector<std::size_t> free_;
    std::vector<Vector> rows_;
};

inline QuotientSpace quotient_by_relations(Field f, std::size_t ambient_dim, const std::vector<Vector>& relations)
{
    return QuotientSpace(f, ambient_dim, relations);
}

} // namespace qhopf
