#pragma once

// Right H-comodule algebras, the element q_rho, and the quasi-smash product
// C#H*, which is a left H-module algebra.

#include "qhopf/derived.hpp"
#include "qhopf/module_algebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qhopf {

/// An associative algebra C with rho: C -> C (x) H (rho[a] is the rank-2
/// tensor rho(e_a)) and phi_rho, phi_rho_inv in C (x) H (x) H.
class ComoduleAlgebra {
public:
    ComoduleAlgebra() = default;

    ComoduleAlgebra(FiniteAlgebra algebra, std::vector<Tensor> rho, Tensor phi_rho, Tensor phi_rho_inv)
        : alg_(std::move(algebra)), rho_(std::move(rho)), phi_(std::move(phi_rho)), phi_inv_(std::move(phi_rho_inv))
    {
        const auto c = alg_.dim();
        if (rho_.size() != c) throw MathError("malformed dimensions: rho needs one entry per basis element");
        if (rho_.empty() || rho_.front().rank() != 2) throw MathError("malformed dimensions: rho entries must be rank-2 tensors");
        const auto n = rho_.front().leg_dim(1);
        for (const auto& t : rho_) {
            if (t.legs() != std::vector<std::size_t>{c, n}) throw MathError("malformed dimensions: rho entries must be dim C x dim H");
        }
        for (const auto* t : {&phi_, &phi_inv_}) {
            if (t->legs() != std::vector<std::size_t>{c, n, n}) throw MathError("malformed dimensions: phi_rho must be dim C x dim H x dim H");
        }
        rho_map_ = Matrix(alg_.field(), c * n, c);
        for (std::size_t a = 0; a < c; ++a) rho_map_.set_column(a, rho_[a].coords());
    }

    Field field() const { return alg_.field(); }
    std::size_t dim() const { return alg_.dim(); }
    std::size_t dim_H() const { return rho_.front().leg_dim(1); }
    const FiniteAlgebra& algebra() const { return alg_; }
    const std::vector<Tensor>& rho() const { return rho_; }
    const Tensor& phi_rho() const { return phi_; }
    const Tensor& phi_rho_inv() const { return phi_inv_; }
    const Matrix& rho_map() const { return rho_map_; }
    Vector e(std::size_t i) const { return alg_.e(i); }

    Tensor rho_of(const Vector& a) const { return Tensor({dim(), dim_H()}, rho_map_.apply(a)); }
    Tensor rho_on(const Tensor& t, std::size_t leg) const { return contract(t, leg, rho_map_, {dim(), dim_H()}); }

private:
    FiniteAlgebra alg_;
    std::vector<Tensor> rho_;
    Tensor phi_, phi_inv_;
    Matrix rho_map_;
};

/// Leg algebras for C (x) H^{(x)k}.
inline std::vector<const FiniteAlgebra*> comodule_legs(const ComoduleAlgebra& C, const QuasiHopfAlgebra& H, std::size_t h_legs)
{
    std::vector<const FiniteAlgebra*> legs{&C.algebra()};
    for (std::size_t i = 0; i < h_legs; ++i) legs.push_back(&H.algebra());
    return legs;
}

inline void require_comodule_dim(const QuasiHopfAlgebra& H, const ComoduleAlgebra& C)
{
    if (C.dim_H() != H.dim()) throw MathError("dimension mismatch: comodule algebra coacts by a space of dimension " + std::to_string(C.dim_H()));
}

inline Report verify_comodule_algebra(const QuasiHopfAlgebra& H, const ComoduleAlgebra& C)
{
    require_comodule_dim(H, C);
    Report r("comodule algebra axioms");
    const auto c = C.dim();
    const auto& A = C.algebra();
    const auto L2 = comodule_legs(C, H, 1);
    const auto L3 = comodule_legs(C, H, 2);
    const auto L4 = comodule_legs(C, H, 3);
    auto mul2 = [&](const Tensor& x, const Tensor& y) { return tensor_mul(L2, x, y); };
    auto mul3 = [&](const Tensor& x, const Tensor& y) { return tensor_mul(L3, x, y); };
    auto mul4 = [&](const Tensor& x, const Tensor& y) { return tensor_mul(L4, x, y); };
    const auto& phi = C.phi_rho();
    const auto& phi_inv = C.phi_rho_inv();

    r.add(check_forall("associativity", "C associative", {c, c, c}, [&](const MultiIndex& i) {
        return std::pair{A.mul(A.mul(A.e(i[0]), A.e(i[1])), A.e(i[2])), A.mul(A.e(i[0]), A.mul(A.e(i[1]), A.e(i[2])))};
    }));
    r.add(check_forall("unit", "C unital", {c}, [&](const MultiIndex& i) {
        auto lhs = A.mul(A.unit(), A.e(i[0]));
        const auto rhs = A.mul(A.e(i[0]), A.unit());
        lhs.insert(lhs.end(), rhs.begin(), rhs.end());
        const auto a = A.e(i[0]);
        auto both = a;
        both.insert(both.end(), a.begin(), a.end());
        return std::pair{lhs, both};
    }));
    r.add(check_forall("rho-multiplicative", "rho algebra map", {c, c}, [&](const MultiIndex& i) {
        return std::pair{C.rho_of(A.mul(A.e(i[0]), A.e(i[1]))).coords(), mul2(C.rho_of(A.e(i[0])), C.rho_of(A.e(i[1]))).coords()};
    }));
    r.add(check_equal("rho-unital", "rho algebra map", C.rho_of(A.unit()), tensor_unit(L2)));
    r.add(check_equal("phi-rho-inverse", "phi_rho invertible", mul3(phi, phi_inv), tensor_unit(L3)));
    r.add(check_equal("phi-rho-inverse-left", "phi_rho invertible", mul3(phi_inv, phi), tensor_unit(L3)));
    r.add(check_forall("coasoccomod", "coasoccomod", {c}, [&](const MultiIndex& i) {
        const auto ra = C.rho_of(A.e(i[0]));
        return std::pair{mul3(mul3(phi, C.rho_on(ra, 0)), phi_inv).coords(), H.delta_on(ra, 1).coords()};
    }));
    r.add(check_forall("counitcomod", "counitcomod", {c}, [&](const MultiIndex& i) {
        return std::pair{H.eps_on(C.rho_of(A.e(i[0])), 1).coords(), A.e(i[0])};
    }));
    {
        const auto lhs = mul4(H.delta_on(phi, 2), C.rho_on(phi, 0));
        const auto rhs = mul4(mul4(kron(Tensor::from_vector(A.unit()), H.phi()), H.delta_on(phi, 1)),
                              kron(phi, Tensor::from_vector(H.one())));
        r.add(check_equal("pentagoncomod", "pentagoncomod", lhs, rhs));
    }
    {
        const auto one2 = tensor_unit(L2);
        auto chk = check_equal("counitrocomod", "counitrocomod", H.eps_on(phi, 1), one2);
        if (chk.passed) chk = check_equal("counitrocomod", "counitrocomod", H.eps_on(phi, 2), one2);
        r.add(std::move(chk));
    }
    return r;
}

/// k with rho(1) = 1 (x) 1 and trivial phi_rho.
inline ComoduleAlgebra trivial_comodule(const QuasiHopfAlgebra& H)
{
    const auto F = H.field();
    FiniteAlgebra k(F, {"1"}, {F.one()}, {Vector{F.one()}});
    const auto one = Vector{F.one()};
    return ComoduleAlgebra(k, {kron(one, H.one())}, kron(one, H.one(), H.one()), kron(one, H.one(), H.one()));
}

/// H over itself: rho = Delta, phi_rho = phi.
inline ComoduleAlgebra regular_comodule(const QuasiHopfAlgebra& H)
{
    return ComoduleAlgebra(H.algebra(), H.comul(), H.phi(), H.phi_inv());
}

/// q_rho = X_rho^1 (x) S^{-1}(alpha X_rho^3) X_rho^2
inline Tensor q_rho_element(const QuasiHopfAlgebra& H, const ComoduleAlgebra& C)
{
    Tensor q(H.field(), {C.dim(), H.dim()});
    for (const auto& X : terms(C.phi_rho())) q += kron(X[0], H.mul(H.Sinv(H.mul(H.alpha(), X[2])), X[1]));
    return q;
}

inline Report verify_q_rho(const QuasiHopfAlgebra& H, const ComoduleAlgebra& C, const Tensor& q_rho)
{
    Report r("q_rho identities");
    const auto c = C.dim();
    const auto n = H.dim();
    const auto& A = C.algebra();
    const auto L2 = comodule_legs(C, H, 1);
    const auto L3 = comodule_legs(C, H, 2);
    auto mul2 = [&](const Tensor& x, const Tensor& y) { return tensor_mul(L2, x, y); };
    auto mul3 = [&](const Tensor& x, const Tensor& y) { return tensor_mul(L3, x, y); };
    r.add(check_forall("qro", "qro", {c}, [&](const MultiIndex& i) {
        const auto a = A.e(i[0]);
        Tensor lhs(H.field(), {c, n});
        for (const auto& t : terms(C.rho_of(a))) lhs += mul2(mul2(kron(A.unit(), H.Sinv(t[1])), q_rho), C.rho_of(t[0]));
        return std::pair{lhs.coords(), mul2(kron(a, H.one()), q_rho).coords()};
    }));
    // (rho (x) I)(q_rho) phi_rho^{-1} = (1 (x) 1 (x) S^{-1}(X_rho^3)) (X_rho^1 (x) q_R Delta(X_rho^2))
    const auto q_R = compute_pq(H).q_R;
    Tensor rhs(H.field(), {c, n, n});
    for (const auto& X : terms(C.phi_rho())) {
        rhs += mul3(kron(A.unit(), H.one(), H.Sinv(X[2])), kron(Tensor::from_vector(X[0]), H.mul(q_R, H.delta(X[1]))));
    }
    r.add(check_equal("qrofi", "qrofi", mul3(C.rho_on(q_rho, 0), C.phi_rho_inv()), rhs));
    return r;
}

struct QuasiSmash {
    ModuleAlgebra algebra; // basis e_a # e^i at index a * n + i
    Tensor q_rho;
    InvariantsData invariants;
    Report report;
};

/// (a # h*)(b # g*) = a b_0 x_rho^1 # (h* <- b_1 x_rho^2)(g* <- x_rho^3), with
/// g (a # h*) = a # (g -> h*). Sweedler legs: rho(b) = b_0 (x) b_1 is read off
/// the rank-2 tensor rho[b] with leg 0 in C and leg 1 in H.
inline QuasiSmash quasi_smash(const QuasiHopfAlgebra& H, const ComoduleAlgebra& C)
{
    require_comodule_dim(H, C);
    const auto F = H.field();
    const auto c = C.dim();
    const auto n = H.dim();
    const auto N = c * n;
    const auto& A = C.algebra();
    const auto x_terms = terms(C.phi_rho_inv());

    std::vector<Vector> table(N * N, zero_vector(F, N));
    for (std::size_t b = 0; b < c; ++b) {
        const auto rb = terms(C.rho_of(A.e(b)));
        for (const auto& x : x_terms) {
            for (const auto& t : rb) {
                const auto b0x = A.mul(t[0], x[0]);
                const auto b1x = H.mul(t[1], x[1]);
                for (std::size_t i = 0; i < n; ++i) {
                    const auto left = H.hit_right(H.e(i), b1x);
                    for (std::size_t j = 0; j < n; ++j) {
                        const auto dual = H.convolve(left, H.hit_right(H.e(j), x[2]));
                        if (is_zero(dual)) continue;
                        for (std::size_t a = 0; a < c; ++a) {
                            const auto prod = A.mul(A.e(a), b0x);
                            auto& out = table[(a * n + i) * N + (b * n + j)];
                            for (std::size_t p = 0; p < c; ++p) {
                                if (prod[p].is_zero()) continue;
                                for (std::size_t q = 0; q < n; ++q) {
                                    if (!dual[q].is_zero()) out[p * n + q] += prod[p] * dual[q];
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    std::vector<std::string> names;
    for (std::size_t a = 0; a < c; ++a)
        for (std::size_t i = 0; i < n; ++i) names.push_back(A.basis_names()[a] + "#e^" + H.algebra().basis_names()[i]);
    FiniteAlgebra alg(F, names, kron(A.unit(), H.counit()).coords(), std::move(table));

    std::vector<Matrix> action;
    for (std::size_t g = 0; g < n; ++g) {
        Matrix m(F, N, N);
        for (std::size_t a = 0; a < c; ++a)
            for (std::size_t i = 0; i < n; ++i) m.set_column(a * n + i, kron(A.e(a), H.hit_left(H.e(g), H.e(i))).coords());
        action.push_back(std::move(m));
    }

    QuasiSmash qs{ModuleAlgebra(std::move(alg), std::move(action)), q_rho_element(H, C), {}, Report("quasi-smash product")};
    qs.report.merge(verify_module_algebra(H, qs.algebra));
    qs.invariants = invariants(H, qs.algebra);
    qs.report.merge(qs.invariants.report);
    std::vector<Vector> expected;
    for (std::size_t a = 0; a < c; ++a) expected.push_back(kron(A.e(a), H.counit()).coords());
    bool same = qs.invariants.basis.size() == c;
    for (const auto& v : expected) same = same && coordinates_in(F, qs.invariants.basis, v).has_value();
    qs.report.add(check_true("invariants-are-C", "invariants = C # eps", same,
                             "invariant subspace has dimension " + std::to_string(qs.invariants.basis.size())));
    qs.report.merge(verify_q_rho(H, C, qs.q_rho));
    return qs;
}

} // namespace qhopf
