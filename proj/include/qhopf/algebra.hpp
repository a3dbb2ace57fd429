#pragma once

// Finite-dimensional (not necessarily associative) algebras given by structure
// constants, and multiplication in tensor products of such algebras.

#include "qhopf/tensor.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qhopf {

struct SparseEntry {
    std::size_t index;
    Scalar coef;
};
using SparseVector = std::vector<SparseEntry>;

inline SparseVector sparsify(const Vector& v)
{
    SparseVector s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) s.push_back({i, v[i]});
    }
    return s;
}

/// An algebra with basis e_0..e_{n-1}: table[i * n + j] = coordinates of e_i e_j.
class FiniteAlgebra {
public:
    FiniteAlgebra() = default;

    FiniteAlgebra(Field f, std::vector<std::string> basis, Vector unit, std::vector<Vector> table)
        : field_(f), basis_(std::move(basis)), unit_(std::move(unit)), table_(std::move(table))
    {
        const auto n = basis_.size();
        if (n == 0) throw MathError("algebra of dimension 0");
        if (unit_.size() != n) throw MathError("unit has " + std::to_string(unit_.size()) + " coordinates, expected " + std::to_string(n));
        if (table_.size() != n * n) throw MathError("multiplication table has wrong arity");
        for (const auto& row : table_) {
            if (row.size() != n) throw MathError("multiplication table entry has wrong length");
        }
        sparse_.reserve(table_.size());
        for (const auto& v : table_) sparse_.push_back(sparsify(v));
    }

    Field field() const { return field_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis_names() const { return basis_; }
    const Vector& unit() const { return unit_; }
    const std::vector<Vector>& table() const { return table_; }

    Vector e(std::size_t i) const { return basis_vector(field_, dim(), i); }
    Vector zero() const { return zero_vector(field_, dim()); }

    const Vector& product_of_basis(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }
    const SparseVector& sparse_product(std::size_t i, std::size_t j) const { return sparse_.at(i * dim() + j); }

    Vector mul(const Vector& x, const Vector& y) const
    {
        const auto n = dim();
        if (x.size() != n || y.size() != n) throw MathError("element dimension mismatch in product");
        Vector out = zero();
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                const Scalar c = x[i] * y[j];
                for (const auto& [k, a] : sparse_product(i, j)) out[k] += c * a;
            }
        }
        return out;
    }

    Vector mul(const Vector& x, const Vector& y, const Vector& z) const { return mul(mul(x, y), z); }

    /// Matrix of a |-> x a.
    Matrix left_multiplication(const Vector& x) const
    {
        Matrix m(field_, dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, mul(x, e(j)));
        return m;
    }

    Matrix right_multiplication(const Vector& x) const
    {
        Matrix m(field_, dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, mul(e(j), x));
        return m;
    }

    FiniteAlgebra opposite() const
    {
        std::vector<Vector> t(table_.size());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) t[i * dim() + j] = product_of_basis(j, i);
        return FiniteAlgebra(field_, basis_, unit_, std::move(t));
    }

private:
    Field field_{};
    std::vector<std::string> basis_;
    Vector unit_;
    std::vector<Vector> table_;
    std::vector<SparseVector> sparse_;
};

/// Leg-wise product in A_1 (x) ... (x) A_k; `legs[l]` is the algebra of leg l.
inline Tensor tensor_mul(const std::vector<const FiniteAlgebra*>& legs, const Tensor& x, const Tensor& y)
{
    const auto k = legs.size();
    if (x.rank() != k || y.rank() != k) throw MathError("tensor rank does not match the number of algebra legs");
    std::vector<std::size_t> dims(k);
    for (std::size_t l = 0; l < k; ++l) {
        dims[l] = legs[l]->dim();
        if (x.leg_dim(l) != dims[l] || y.leg_dim(l) != dims[l]) throw MathError("tensor leg dimension mismatch in product");
    }
    Tensor out(x.field(), dims);
    std::vector<std::pair<MultiIndex, Scalar>> xs, ys;
    x.for_each_nonzero([&](const MultiIndex& i, const Scalar& c) { xs.emplace_back(i, c); });
    y.for_each_nonzero([&](const MultiIndex& i, const Scalar& c) { ys.emplace_back(i, c); });

    std::vector<std::pair<std::size_t, Scalar>> acc, next;
    for (const auto& [xi, xc] : xs) {
        for (const auto& [yi, yc] : ys) {
            acc.clear();
            acc.emplace_back(0, xc * yc);
            for (std::size_t l = 0; l < k && !acc.empty(); ++l) {
                next.clear();
                for (const auto& [flat, c] : acc) {
                    for (const auto& [b, a] : legs[l]->sparse_product(xi[l], yi[l])) next.emplace_back(flat * dims[l] + b, c * a);
                }
                std::swap(acc, next);
            }
            for (const auto& [flat, c] : acc) out.at(flat) += c;
        }
    }
    return out;
}

inline Tensor tensor_unit(const std::vector<const FiniteAlgebra*>& legs)
{
    Tensor t = Tensor::from_vector(legs.at(0)->unit());
    for (std::size_t l = 1; l < legs.size(); ++l) t = kron(t, Tensor::from_vector(legs[l]->unit()));
    return t;
}

/// One summand of a tensor split along its legs: legs[0] carries the
/// coefficient, the remaining legs are basis vectors.
struct Term {
    std::vector<Vector> legs;
    const Vector& operator[](std::size_t l) const { return legs.at(l); }
};

/// Sweedler-style decomposition t = sum of leg_0 (x) leg_1 (x) ... over the
/// nonzero coordinates of t.
inline std::vector<Term> terms(const Tensor& t)
{
    std::vector<Term> out;
    const auto f = t.field();
    t.for_each_nonzero([&](const MultiIndex& idx, const Scalar& c) {
        Term term;
        for (std::size_t l = 0; l < idx.size(); ++l) term.legs.push_back(basis_vector(f, t.leg_dim(l), idx[l]));
        term.legs[0] = c * term.legs[0];
        out.push_back(std::move(term));
    });
    return out;
}

} // namespace qhopf
