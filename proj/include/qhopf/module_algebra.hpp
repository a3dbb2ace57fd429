#pragma once

// Left H-module algebras (not necessarily associative), their invariants, the
// smash product A#H, and relative (H,A)-Hopf modules.

#include "qhopf/quasi_hopf.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qhopf {

/// A left H-module algebra: action[h] is the matrix of e_h acting on A.
class ModuleAlgebra {
public:
    ModuleAlgebra() = default;

    ModuleAlgebra(FiniteAlgebra algebra, std::vector<Matrix> action) : alg_(std::move(algebra)), action_(std::move(action))
    {
        for (const auto& m : action_) {
            if (m.rows() != alg_.dim() || m.cols() != alg_.dim()) throw MathError("malformed dimensions: action matrix must be dim A x dim A");
        }
    }

    Field field() const { return alg_.field(); }
    std::size_t dim() const { return alg_.dim(); }
    const FiniteAlgebra& algebra() const { return alg_; }
    const std::vector<Matrix>& action() const { return action_; }
    const Vector& unit() const { return alg_.unit(); }
    Vector e(std::size_t i) const { return alg_.e(i); }
    Vector zero() const { return alg_.zero(); }
    Vector mul(const Vector& a, const Vector& b) const { return alg_.mul(a, b); }

    Matrix action_of(const Vector& h) const
    {
        if (h.size() != action_.size()) throw MathError("dimension mismatch: element of H has wrong length for this action");
        Matrix m(field(), dim(), dim());
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (h[i].is_zero()) continue;
            for (std::size_t r = 0; r < dim(); ++r)
                for (std::size_t c = 0; c < dim(); ++c) m(r, c) += h[i] * action_[i](r, c);
        }
        return m;
    }

    Vector act(const Vector& h, const Vector& a) const
    {
        Vector out = zero();
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (!h[i].is_zero()) out = out + h[i] * action_.at(i).apply(a);
        }
        return out;
    }

private:
    FiniteAlgebra alg_;
    std::vector<Matrix> action_;
};

/// k with h 1 = eps(h) 1.
inline ModuleAlgebra trivial_module_algebra(const QuasiHopfAlgebra& H)
{
    const auto F = H.field();
    FiniteAlgebra k(F, {"1"}, {F.one()}, {Vector{F.one()}});
    std::vector<Matrix> action;
    for (std::size_t h = 0; h < H.dim(); ++h) action.push_back(Matrix::from_columns(F, 1, {Vector{H.counit()[h]}}));
    return ModuleAlgebra(std::move(k), std::move(action));
}

inline void require_action_dim(const QuasiHopfAlgebra& H, std::size_t count, const std::string& what)
{
    if (count != H.dim()) {
        throw MathError("dimension mismatch: " + what + " has " + std::to_string(count) + " action matrices, H has dimension " +
                        std::to_string(H.dim()));
    }
}

inline Report verify_module_algebra(const QuasiHopfAlgebra& H, const ModuleAlgebra& A)
{
    require_action_dim(H, A.action().size(), "module algebra");
    Report r("module algebra axioms");
    const auto n = H.dim();
    const auto m = A.dim();
    const auto& one = A.unit();
    r.add(check_forall("module-unit", "1 a = a", {m}, [&](const MultiIndex& i) {
        return std::pair{A.act(H.one(), A.e(i[0])), A.e(i[0])};
    }));
    r.add(check_forall("module-associative", "(gh) a = g(h a)", {n, n, m}, [&](const MultiIndex& i) {
        const auto g = H.e(i[0]), h = H.e(i[1]), a = A.e(i[2]);
        return std::pair{A.act(H.mul(g, h), a), A.act(g, A.act(h, a))};
    }));
    r.add(check_forall("algebra-unit", "1_A a = a 1_A = a", {m}, [&](const MultiIndex& i) {
        const auto a = A.e(i[0]);
        auto lhs = A.mul(one, a);
        const auto rhs = A.mul(a, one);
        lhs.insert(lhs.end(), rhs.begin(), rhs.end());
        auto both = a;
        both.insert(both.end(), a.begin(), a.end());
        return std::pair{lhs, both};
    }));
    const auto phi_terms = terms(H.phi());
    r.add(check_forall("smashasoc", "smashasoc", {m, m, m}, [&](const MultiIndex& i) {
        const auto a = A.e(i[0]), b = A.e(i[1]), c = A.e(i[2]);
        Vector rhs = A.zero();
        for (const auto& X : phi_terms) rhs = rhs + A.mul(A.act(X[0], a), A.mul(A.act(X[1], b), A.act(X[2], c)));
        return std::pair{A.mul(A.mul(a, b), c), rhs};
    }));
    r.add(check_forall("smashmod", "smashmod", {n, m, m}, [&](const MultiIndex& i) {
        const auto h = H.e(i[0]);
        const auto a = A.e(i[1]), b = A.e(i[2]);
        Vector rhs = A.zero();
        for (const auto& t : terms(H.delta(h))) rhs = rhs + A.mul(A.act(t[0], a), A.act(t[1], b));
        return std::pair{A.act(h, A.mul(a, b)), rhs};
    }));
    r.add(check_forall("2.11", "2.11", {n}, [&](const MultiIndex& i) {
        const auto h = H.e(i[0]);
        return std::pair{A.act(h, one), H.eps(h) * one};
    }));
    return r;
}

/// Invariant subspace {v : e_h v = eps(e_h) v for all h} of a space on which H
/// acts by the given matrices, as a list of basis vectors.
inline std::vector<Vector> invariant_basis(const QuasiHopfAlgebra& H, const std::vector<Matrix>& action, std::size_t dim)
{
    require_action_dim(H, action.size(), "module");
    Matrix stacked(H.field(), H.dim() * dim, dim);
    for (std::size_t h = 0; h < H.dim(); ++h) {
        const auto e = H.eps(H.e(h));
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) stacked(h * dim + r, c) = action[h](r, c) - (r == c ? e : H.field().zero());
    }
    return kernel(stacked);
}

/// Coordinates of v in the span of `basis`, if it lies there.
inline std::optional<Vector> coordinates_in(Field f, const std::vector<Vector>& basis, const Vector& v)
{
    if (basis.empty()) {
        if (is_zero(v)) return Vector{};
        return std::nullopt;
    }
    auto sol = solve_affine(Matrix::from_columns(f, v.size(), basis), v);
    if (!sol) return std::nullopt;
    return sol->solution;
}

struct InvariantsData {
    std::vector<Vector> basis; // vectors in A
    FiniteAlgebra algebra;     // B with multiplication in these coordinates
    Matrix inclusion;          // B -> A
    Report report;
};

inline InvariantsData invariants(const QuasiHopfAlgebra& H, const ModuleAlgebra& A)
{
    InvariantsData d;
    d.basis = invariant_basis(H, A.action(), A.dim());
    d.report = Report("invariants");
    const auto k = d.basis.size();
    const auto F = A.field();
    d.inclusion = Matrix::from_columns(F, A.dim(), d.basis);
    if (k == 0) throw MathError("invariant subalgebra is zero (unit is not invariant)");

    std::vector<Vector> table(k * k);
    bool closed = true;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            auto c = coordinates_in(F, d.basis, A.mul(d.basis[i], d.basis[j]));
            if (!c) {
                closed = false;
                c = zero_vector(F, k);
            }
            table[i * k + j] = *c;
        }
    }
    d.report.add(check_true("invariants-closed", "B closed under multiplication", closed, "product of invariants is not invariant"));
    const auto unit = coordinates_in(F, d.basis, A.unit());
    d.report.add(check_true("unit-invariant", "1_A in B", unit.has_value(), "1_A is not invariant"));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back("b" + std::to_string(i));
    d.algebra = FiniteAlgebra(F, names, unit.value_or(zero_vector(F, k)), table);
    d.report.add(check_forall("invariants-associative", "B associative", {k, k, k}, [&](const MultiIndex& i) {
        const auto& B = d.algebra;
        return std::pair{B.mul(B.mul(B.e(i[0]), B.e(i[1])), B.e(i[2])), B.mul(B.e(i[0]), B.mul(B.e(i[1]), B.e(i[2])))};
    }));
    return d;
}

/// A#H on the basis e_a # e_h at index a * n + h.
struct SmashAlgebra {
    FiniteAlgebra algebra;
    std::size_t dim_A = 0, dim_H = 0;
    std::vector<Matrix> h_action; // h x (a#g) = h_1 a # h_2 g
    Report report;

    std::size_t index(std::size_t a, std::size_t h) const { return a * dim_H + h; }

    Vector pure(const Vector& a, const Vector& h) const { return kron(a, h).coords(); }
};

inline SmashAlgebra smash_product(const QuasiHopfAlgebra& H, const ModuleAlgebra& A, bool verify = true)
{
    require_action_dim(H, A.action().size(), "module algebra");
    const auto n = H.dim();
    const auto m = A.dim();
    const auto F = H.field();
    SmashAlgebra s;
    s.dim_A = m;
    s.dim_H = n;
    const auto N = m * n;
    const auto x_terms = terms(H.phi_inv());

    // (a#h)(b#g) = (x^1 a)(x^2 h_1 b) # x^3 h_2 g
    std::vector<Vector> table(N * N, zero_vector(F, N));
    for (std::size_t h = 0; h < n; ++h) {
        const auto dh = terms(H.delta(H.e(h)));
        for (const auto& x : x_terms) {
            for (const auto& t : dh) {
                const auto left_h = H.mul(x[1], t[0]);
                const auto right_h = H.mul(x[2], t[1]);
                const auto act_b = A.action_of(left_h);
                const auto act_a = A.action_of(x[0]);
                for (std::size_t a = 0; a < m; ++a) {
                    const auto xa = act_a.column(a);
                    for (std::size_t b = 0; b < m; ++b) {
                        const auto prod = A.mul(xa, act_b.column(b));
                        if (is_zero(prod)) continue;
                        for (std::size_t g = 0; g < n; ++g) {
                            const auto hg = H.mul(right_h, H.e(g));
                            auto& out = table[(a * n + h) * N + (b * n + g)];
                            for (std::size_t i = 0; i < m; ++i) {
                                if (prod[i].is_zero()) continue;
                                for (std::size_t j = 0; j < n; ++j) {
                                    if (!hg[j].is_zero()) out[i * n + j] += prod[i] * hg[j];
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    std::vector<std::string> names;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t h = 0; h < n; ++h) names.push_back(A.algebra().basis_names()[a] + "#" + H.algebra().basis_names()[h]);
    s.algebra = FiniteAlgebra(F, names, kron(A.unit(), H.one()).coords(), std::move(table));

    for (std::size_t h = 0; h < n; ++h) {
        Matrix act(F, N, N);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t g = 0; g < n; ++g) {
                Tensor out(F, {m, n});
                for (const auto& t : terms(H.delta(H.e(h)))) out += kron(A.act(t[0], A.e(a)), H.mul(t[1], H.e(g)));
                act.set_column(a * n + g, out.coords());
            }
        s.h_action.push_back(std::move(act));
    }

    s.report = Report("smash product");
    if (!verify) return s;
    const auto& S = s.algebra;
    s.report.add(check_forall("smash-associative", "A#H associative", {N, N, N}, [&](const MultiIndex& i) {
        return std::pair{S.mul(S.mul(S.e(i[0]), S.e(i[1])), S.e(i[2])), S.mul(S.e(i[0]), S.mul(S.e(i[1]), S.e(i[2])))};
    }));
    s.report.add(check_forall("smash-unit", "1_A#1 unit", {N}, [&](const MultiIndex& i) {
        auto lhs = S.mul(S.unit(), S.e(i[0]));
        const auto rhs = S.mul(S.e(i[0]), S.unit());
        lhs.insert(lhs.end(), rhs.begin(), rhs.end());
        const auto u = S.e(i[0]);
        auto both = u;
        both.insert(both.end(), u.begin(), u.end());
        return std::pair{lhs, both};
    }));
    s.report.add(check_forall("embedding-multiplicative", "h -> 1#h algebra map", {n, n}, [&](const MultiIndex& i) {
        const auto g = H.e(i[0]), h = H.e(i[1]);
        return std::pair{S.mul(s.pure(A.unit(), g), s.pure(A.unit(), h)), s.pure(A.unit(), H.mul(g, h))};
    }));
    s.report.add(check_forall("hmodsmash", "h x u = (1#h) u", {n, N}, [&](const MultiIndex& i) {
        return std::pair{s.h_action[i[0]].column(i[1]), S.mul(s.pure(A.unit(), H.e(i[0])), S.e(i[1]))};
    }));
    return s;
}

/// Left module over A#H realized as A with (a#h) b = a (h b).
inline std::vector<Matrix> smash_action_on_A(const ModuleAlgebra& A, const SmashAlgebra& s)
{
    std::vector<Matrix> out;
    for (std::size_t a = 0; a < s.dim_A; ++a)
        for (std::size_t h = 0; h < s.dim_H; ++h) {
            Matrix m(A.field(), A.dim(), A.dim());
            for (std::size_t b = 0; b < A.dim(); ++b) m.set_column(b, A.mul(A.e(a), A.action()[h].column(b)));
            out.push_back(std::move(m));
        }
    return out;
}

/// A relative (H,A)-Hopf module M: h_action[h] and a_action[a] act on M.
struct RelativeModule {
    std::size_t dim = 0;
    std::vector<Matrix> h_action;
    std::vector<Matrix> a_action;
};

inline Vector act_on(const std::vector<Matrix>& action, const Vector& x, const Vector& v)
{
    Vector out = zero_vector(v.front().field(), action.front().rows());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) out = out + x[i] * action[i].apply(v);
    }
    return out;
}

/// A over itself: H acts as on A, A by left multiplication.
inline RelativeModule regular_relative_module(const ModuleAlgebra& A)
{
    RelativeModule M{A.dim(), A.action(), {}};
    for (std::size_t a = 0; a < A.dim(); ++a) M.a_action.push_back(A.algebra().left_multiplication(A.e(a)));
    return M;
}

/// A#H with H and A acting by left multiplication along h -> 1#h, a -> a#1.
inline RelativeModule smash_relative_module(const QuasiHopfAlgebra& H, const ModuleAlgebra& A, const SmashAlgebra& s)
{
    RelativeModule M{s.algebra.dim(), {}, {}};
    for (std::size_t h = 0; h < H.dim(); ++h) M.h_action.push_back(s.algebra.left_multiplication(s.pure(A.unit(), H.e(h))));
    for (std::size_t a = 0; a < A.dim(); ++a) M.a_action.push_back(s.algebra.left_multiplication(s.pure(A.e(a), H.one())));
    return M;
}

/// The three relative-module axioms plus the induced left A#H-action
/// (a#h) m = a (h m) being an algebra action.
inline Report verify_relative_module(const QuasiHopfAlgebra& H, const ModuleAlgebra& A, const SmashAlgebra& s, const RelativeModule& M)
{
    require_action_dim(H, M.h_action.size(), "relative module");
    if (M.a_action.size() != A.dim()) throw MathError("dimension mismatch: relative module needs one A-action matrix per basis element of A");
    Report r("relative Hopf module axioms");
    const auto n = H.dim();
    const auto m = A.dim();
    const auto d = M.dim;
    auto hm = [&](const Vector& h, const Vector& v) { return act_on(M.h_action, h, v); };
    auto am = [&](const Vector& a, const Vector& v) { return act_on(M.a_action, a, v); };
    auto em = [&](std::size_t i) { return basis_vector(H.field(), d, i); };

    r.add(check_forall("H-module-unit", "1 m = m", {d}, [&](const MultiIndex& i) { return std::pair{hm(H.one(), em(i[0])), em(i[0])}; }));
    r.add(check_forall("H-module-associative", "(gh) m = g(h m)", {n, n, d}, [&](const MultiIndex& i) {
        return std::pair{hm(H.mul(H.e(i[0]), H.e(i[1])), em(i[2])), hm(H.e(i[0]), hm(H.e(i[1]), em(i[2])))};
    }));
    const auto phi_terms = terms(H.phi());
    r.add(check_forall("relative-associative", "(ab)m = (X^1 a)[(X^2 b)(X^3 m)]", {m, m, d}, [&](const MultiIndex& i) {
        const auto a = A.e(i[0]), b = A.e(i[1]), v = em(i[2]);
        Vector rhs = zero_vector(H.field(), d);
        for (const auto& X : phi_terms) rhs = rhs + am(A.act(X[0], a), am(A.act(X[1], b), hm(X[2], v)));
        return std::pair{am(A.mul(a, b), v), rhs};
    }));
    r.add(check_forall("relative-linear", "h(am) = (h_1 a)(h_2 m)", {n, m, d}, [&](const MultiIndex& i) {
        const auto h = H.e(i[0]);
        const auto a = A.e(i[1]);
        const auto v = em(i[2]);
        Vector rhs = zero_vector(H.field(), d);
        for (const auto& t : terms(H.delta(h))) rhs = rhs + am(A.act(t[0], a), hm(t[1], v));
        return std::pair{hm(h, am(a, v)), rhs};
    }));
    r.add(check_forall("relative-unit", "1_A m = m", {d}, [&](const MultiIndex& i) { return std::pair{am(A.unit(), em(i[0])), em(i[0])}; }));

    // Induced action of A#H.
    const auto N = s.algebra.dim();
    std::vector<Matrix> smash_act;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t h = 0; h < n; ++h) smash_act.push_back(M.a_action[a].compose(M.h_action[h]));
    r.add(check_forall("smash-action-unit", "(1#1) m = m", {d}, [&](const MultiIndex& i) {
        return std::pair{act_on(smash_act, s.algebra.unit(), em(i[0])), em(i[0])};
    }));
    r.add(check_forall("smash-action-associative", "(uv) m = u(v m)", {N, N, d}, [&](const MultiIndex& i) {
        const auto u = s.algebra.e(i[0]), v = s.algebra.e(i[1]);
        return std::pair{act_on(smash_act, s.algebra.mul(u, v), em(i[2])), act_on(smash_act, u, act_on(smash_act, v, em(i[2])))};
    }));
    return r;
}

struct EpsilonM {
    std::vector<Vector> invariants; // basis of M^H
    QuotientSpace domain;           // A (x)_B M^H as a quotient of A (x) M^H
    Matrix map;                     // domain -> M
    bool injective = false;
    bool surjective = false;
    bool bijective() const { return injective && surjective; }
    Report report;
};

/// eps_M : A (x)_B M^H -> M, a (x) m |-> a m.
inline EpsilonM counit_epsilon_M(const QuasiHopfAlgebra& H, const ModuleAlgebra& A, const InvariantsData& B, const SmashAlgebra& s,
                                 const RelativeModule& M)
{
    const auto F = H.field();
    const auto m = A.dim();
    const auto d = M.dim;
    EpsilonM e;
    e.invariants = invariant_basis(H, M.h_action, d);
    const auto k = e.invariants.size();
    e.report = Report("adjunction counit");
    auto am = [&](const Vector& a, const Vector& v) { return act_on(M.a_action, a, v); };

    // Relations a b (x) x - a (x) b x over basis a of A, b of B, x of M^H.
    std::vector<Vector> relations;
    bool closed = true;
    for (std::size_t a = 0; a < m; ++a)
        for (const auto& b : B.basis)
            for (std::size_t x = 0; x < k; ++x) {
                Vector rel = kron(A.mul(A.e(a), b), basis_vector(F, k, x)).coords();
                const auto bx = coordinates_in(F, e.invariants, am(b, e.invariants[x]));
                if (!bx) {
                    closed = false;
                    continue;
                }
                rel = rel - kron(A.e(a), *bx).coords();
                relations.push_back(std::move(rel));
            }
    e.report.add(check_true("invariants-stable", "B M^H in M^H", closed, "b m left M^H"));
    e.domain = quotient_by_relations(F, m * k, relations);

    // Ambient map A (x) M^H -> M.
    Matrix ambient(F, d, m * k);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t x = 0; x < k; ++x) ambient.set_column(a * k + x, am(A.e(a), e.invariants[x]));
    bool well_defined = true;
    for (const auto& rel : relations) well_defined = well_defined && is_zero(ambient.apply(rel));
    e.report.add(check_true("epsilon-well-defined", "eps_M balanced", well_defined, "eps_M does not vanish on balancing relations"));
    e.map = ambient.compose(e.domain.section_matrix());
    const auto rk = rank(e.map);
    e.injective = rk == e.domain.dim();
    e.surjective = rk == d;

    // eps_M((a#h)(b (x) x)) = (a#h) eps_M(b (x) x); A#H acts on A by (a#h)b = a(h b).
    const auto smash_on_A = smash_action_on_A(A, s);
    std::vector<Matrix> smash_on_M;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t h = 0; h < H.dim(); ++h) smash_on_M.push_back(M.a_action[a].compose(M.h_action[h]));
    e.report.add(check_forall("epsilon-linear", "eps_M left A#H-linear", {s.algebra.dim(), m, k}, [&](const MultiIndex& i) {
        const auto moved = smash_on_A[i[0]].column(i[1]);
        const auto lhs = ambient.apply(kron(moved, basis_vector(F, k, i[2])).coords());
        const auto rhs = smash_on_M[i[0]].apply(am(A.e(i[1]), e.invariants[i[2]]));
        return std::pair{lhs, rhs};
    }));
    return e;
}

} // namespace qhopf
