#pragma once

// Dense tensors over a product of finite-dimensional spaces.
//
// Leg addressing is row-major: the coordinate of e_{i1} (x) ... (x) e_{ik}
// lives at ((i1 * d2 + i2) * d3 + i3) ... ; the last leg varies fastest.
// Indices are 0-based everywhere.

#include "qhopf/linalg.hpp"

#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace qhopf {

using MultiIndex = std::vector<std::size_t>;

class Tensor {
public:
    Tensor() = default;

    Tensor(Field f, std::vector<std::size_t> legs) : field_(f), legs_(std::move(legs))
    {
        if (legs_.empty()) throw MathError("tensor must have at least one leg");
        coords_.assign(total_size(legs_), f.zero());
    }

    Tensor(std::vector<std::size_t> legs, Vector coords) : legs_(std::move(legs)), coords_(std::move(coords))
    {
        if (legs_.empty()) throw MathError("tensor must have at least one leg");
        if (coords_.size() != total_size(legs_)) {
            throw MathError("tensor coordinate count " + std::to_string(coords_.size()) + " does not match leg dimensions");
        }
        if (coords_.empty()) throw MathError("tensor over a zero-dimensional leg");
        field_ = coords_.front().field();
    }

    /// Rank-1 tensor holding a plain vector.
    static Tensor from_vector(const Vector& v) { return Tensor({v.size()}, v); }

    Field field() const { return field_; }
    std::size_t rank() const { return legs_.size(); }
    const std::vector<std::size_t>& legs() const { return legs_; }
    std::size_t leg_dim(std::size_t leg) const { return legs_.at(leg); }
    std::size_t size() const { return coords_.size(); }
    const Vector& coords() const { return coords_; }
    Vector& coords() { return coords_; }

    Scalar& at(std::size_t flat) { return coords_.at(flat); }
    const Scalar& at(std::size_t flat) const { return coords_.at(flat); }
    Scalar& operator[](const MultiIndex& idx) { return coords_.at(flatten(idx)); }
    const Scalar& operator[](const MultiIndex& idx) const { return coords_.at(flatten(idx)); }

    std::size_t flatten(const MultiIndex& idx) const
    {
        if (idx.size() != legs_.size()) throw MathError("multi-index rank mismatch");
        std::size_t flat = 0;
        for (std::size_t l = 0; l < legs_.size(); ++l) {
            if (idx[l] >= legs_[l]) throw MathError("multi-index out of range on leg " + std::to_string(l));
            flat = flat * legs_[l] + idx[l];
        }
        return flat;
    }

    MultiIndex unflatten(std::size_t flat) const
    {
        MultiIndex idx(legs_.size());
        for (std::size_t l = legs_.size(); l-- > 0;) {
            idx[l] = flat % legs_[l];
            flat /= legs_[l];
        }
        return idx;
    }

    bool is_zero() const { return qhopf::is_zero(coords_); }

    /// Calls fn(multi_index, coefficient) for every nonzero coordinate in
    /// lexicographic order.
    void for_each_nonzero(const std::function<void(const MultiIndex&, const Scalar&)>& fn) const
    {
        for (std::size_t k = 0; k < coords_.size(); ++k) {
            if (!coords_[k].is_zero()) fn(unflatten(k), coords_[k]);
        }
    }

    Tensor& operator+=(const Tensor& o)
    {
        check_shape(o);
        for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
        return *this;
    }

    Tensor& operator-=(const Tensor& o)
    {
        check_shape(o);
        for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
        return *this;
    }

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Scalar& c, Tensor t)
    {
        for (auto& x : t.coords_) x *= c;
        return t;
    }

    friend bool operator==(const Tensor& a, const Tensor& b) { return a.legs_ == b.legs_ && a.coords_ == b.coords_; }

    static std::size_t total_size(const std::vector<std::size_t>& legs)
    {
        return std::accumulate(legs.begin(), legs.end(), std::size_t{1}, std::multiplies<>());
    }

private:
    void check_shape(const Tensor& o) const
    {
        if (legs_ != o.legs_) throw MathError("tensor shape mismatch");
    }

    Field field_{};
    std::vector<std::size_t> legs_;
    Vector coords_;
};

/// a (x) b, legs concatenated.
inline Tensor kron(const Tensor& a, const Tensor& b)
{
    auto legs = a.legs();
    legs.insert(legs.end(), b.legs().begin(), b.legs().end());
    Tensor out(a.field(), legs);
    const auto nb = b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.at(i).is_zero()) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            if (!b.at(j).is_zero()) out.at(i * nb + j) = a.at(i) * b.at(j);
        }
    }
    return out;
}

inline Tensor kron(const Vector& a, const Vector& b) { return kron(Tensor::from_vector(a), Tensor::from_vector(b)); }

inline Tensor kron(const Vector& a, const Vector& b, const Vector& c)
{
    return kron(kron(a, b), Tensor::from_vector(c));
}

/// Reorders legs: output leg l is input leg perm[l]. The swap (.)^{21} is
/// permute(t, {1, 0}); (.)^{321} is permute(t, {2, 1, 0}).
inline Tensor permute(const Tensor& t, const std::vector<std::size_t>& perm)
{
    if (perm.size() != t.rank()) throw MathError("permutation rank mismatch");
    std::vector<std::size_t> legs(perm.size());
    for (std::size_t l = 0; l < perm.size(); ++l) legs[l] = t.leg_dim(perm.at(l));
    Tensor out(t.field(), legs);
    MultiIndex dst(perm.size());
    t.for_each_nonzero([&](const MultiIndex& src, const Scalar& c) {
        for (std::size_t l = 0; l < perm.size(); ++l) dst[l] = src[perm[l]];
        out[dst] = c;
    });
    return out;
}

/// Maps one leg through a linear map. The image of that leg is split into
/// `out_legs` (whose product must equal the map's codomain dimension); an empty
/// `out_legs` drops the leg, which requires a 1-dimensional codomain and a
/// tensor of rank at least 2.
inline Tensor contract(const Tensor& t, std::size_t leg, const LinearMap& m, const std::vector<std::size_t>& out_legs)
{
    if (leg >= t.rank()) throw MathError("leg " + std::to_string(leg) + " out of range for rank " + std::to_string(t.rank()));
    if (t.leg_dim(leg) != m.domain_dim()) {
        throw MathError("dimension mismatch: leg " + std::to_string(leg) + " has dimension " + std::to_string(t.leg_dim(leg)) +
                        " but the map expects " + std::to_string(m.domain_dim()));
    }
    if (Tensor::total_size(out_legs) != m.codomain_dim()) throw MathError("output legs do not match codomain");
    if (out_legs.empty() && t.rank() < 2) throw MathError("cannot drop the only leg of a tensor");

    std::vector<std::size_t> legs(t.legs().begin(), t.legs().begin() + static_cast<std::ptrdiff_t>(leg));
    legs.insert(legs.end(), out_legs.begin(), out_legs.end());
    legs.insert(legs.end(), t.legs().begin() + static_cast<std::ptrdiff_t>(leg) + 1, t.legs().end());
    Tensor out(t.field(), legs);

    const std::size_t inner = Tensor::total_size(std::vector<std::size_t>(t.legs().begin() + static_cast<std::ptrdiff_t>(leg) + 1, t.legs().end()));
    const std::size_t mid_in = t.leg_dim(leg);
    const std::size_t mid_out = m.codomain_dim();
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        const auto& c = t.at(flat);
        if (c.is_zero()) continue;
        const std::size_t hi = flat / (mid_in * inner);
        const std::size_t j = (flat / inner) % mid_in;
        const std::size_t lo = flat % inner;
        for (std::size_t i = 0; i < mid_out; ++i) {
            const auto& a = m(i, j);
            if (!a.is_zero()) out.at((hi * mid_out + i) * inner + lo) += a * c;
        }
    }
    return out;
}

/// Leg-preserving variant for square maps, or leg-dropping for a 1 x n map.
inline Tensor contract(const Tensor& t, std::size_t leg, const LinearMap& m)
{
    if (m.codomain_dim() == 1 && t.rank() >= 2) return contract(t, leg, m, {});
    return contract(t, leg, m, {m.codomain_dim()});
}

} // namespace qhopf
