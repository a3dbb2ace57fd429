#pragma once

// The Morita context between A#H and B = A^H, the canonical Galois maps, total
// integrals, trace-one elements and the equivalence checks tying them together.

#include "qhopf/integrals.hpp"
#include "qhopf/module_algebra.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qhopf {

/// Everything computed once per (H, A): derived elements, integral data, the
/// invariants and the smash product.
struct Setting {
    QuasiHopfAlgebra H;
    ModuleAlgebra A;
    DerivedElements D;
    IntegralData integral;
    InvariantsData B;
    SmashAlgebra smash;
    std::vector<Matrix> left; // (a#h) b = a (h b), indexed like the smash basis

    std::size_t n() const { return H.dim(); }
    std::size_t m() const { return A.dim(); }
    Vector left_act(const Vector& u, const Vector& b) const { return act_on(left, u, b); }
};

inline Setting make_setting(const QuasiHopfAlgebra& H, const ModuleAlgebra& A)
{
    require_action_dim(H, A.action().size(), "module algebra");
    Setting s{H, A, compute_pq(H), compute_integral_data(H), invariants(H, A), smash_product(H, A, false), {}};
    s.left = smash_action_on_A(s.A, s.smash);
    return s;
}

/// Coordinates of a (x) b in A (x) A.
inline Vector pure2(const Vector& a, const Vector& b) { return kron(a, b).coords(); }

// ---------------------------------------------------------------------------
// phi : H (x) A -> A#H

struct PhiIso {
    Matrix phi;     // H (x) A (index h * m + a) -> A#H
    Matrix phi_inv; // A#H -> H (x) A
    Report report;
};

inline PhiIso phi_iso(const Setting& s)
{
    const auto& H = s.H;
    const auto& A = s.A;
    const auto F = H.field();
    const auto n = s.n();
    const auto m = s.m();
    const auto N = n * m;
    PhiIso r{Matrix(F, N, N), Matrix(F, N, N), Report("H (x) A = A#H")};
    const auto pL = terms(s.D.p_L);
    const auto qL = terms(s.D.q_L);
    for (std::size_t h = 0; h < n; ++h) {
        const auto dh = terms(H.delta(H.e(h)));
        for (std::size_t a = 0; a < m; ++a) {
            // phi(h (x) a) = h_1 p_L^1 a # h_2 p_L^2
            Tensor out(F, {m, n});
            for (const auto& t : dh)
                for (const auto& p : pL) out += kron(A.act(H.mul(t[0], p[0]), A.e(a)), H.mul(t[1], p[1]));
            r.phi.set_column(h * m + a, out.coords());
            // phi^{-1}(a # h) = q_L^2 h_2 (x) S^{-1}(q_L^1 h_1) a
            Tensor back(F, {n, m});
            for (const auto& t : dh)
                for (const auto& q : qL) back += kron(H.mul(q[1], t[1]), A.act(H.Sinv(H.mul(q[0], t[0])), A.e(a)));
            r.phi_inv.set_column(a * n + h, back.coords());
        }
    }
    const auto id = Matrix::identity(F, N);
    r.report.add(check_true("phi-phi-inverse", "isomHtensorAcuAtensorH", r.phi.compose(r.phi_inv) == id, "phi phi^{-1} != id"));
    r.report.add(check_true("phi-inverse-phi", "isomHtensorAcuAtensorH", r.phi_inv.compose(r.phi) == id, "phi^{-1} phi != id"));
    r.report.add(check_forall("phi-H-linear", "isomHtensorAcuAtensorH", {n, N}, [&](const MultiIndex& i) {
        // h * (g (x) a) = hg (x) a
        const auto v = basis_vector(F, N, i[1]);
        const auto g = i[1] / m;
        const auto a = i[1] % m;
        const auto moved = kron(H.mul(H.e(i[0]), H.e(g)), A.e(a)).coords();
        return std::pair{r.phi.apply(moved), s.smash.h_action[i[0]].apply(r.phi.apply(v))};
    }));
    return r;
}

// ---------------------------------------------------------------------------
// Right action of A#H on A

struct RightAction {
    std::vector<Matrix> by_basis; // by_basis[b * n + h] is a |-> a ._gamma (b#h)
    Report report;

    Vector apply(const Vector& a, const Vector& u) const { return act_on(by_basis, u, a); }
};

/// a ._gamma (b#h) = S^{-1}(S(X^2) Lambda (gamma -> X^3 h)) [(p_L^1 S^{-1}(X^1) a)(p_L^2 b)]
inline RightAction right_action(const Setting& s)
{
    const auto& H = s.H;
    const auto& A = s.A;
    const auto F = H.field();
    const auto n = s.n();
    const auto m = s.m();
    const auto& gamma = s.integral.gamma;
    const auto& Lambda = s.integral.lambda;
    const auto X_terms = terms(H.phi());
    const auto pL = terms(s.D.p_L);

    RightAction r;
    r.by_basis.assign(m * n, Matrix(F, m, m));
    for (std::size_t h = 0; h < n; ++h) {
        for (const auto& X : X_terms) {
            const auto outer = H.Sinv(H.mul(H.S(X[1]), Lambda, H.weak_left(gamma, H.mul(X[2], H.e(h)))));
            if (is_zero(outer)) continue;
            const auto outer_act = A.action_of(outer);
            for (const auto& p : pL) {
                const auto first = A.action_of(H.mul(p[0], H.Sinv(X[0])));
                const auto second = A.action_of(p[1]);
                for (std::size_t b = 0; b < m; ++b) {
                    const auto pb = second.column(b);
                    auto& M = r.by_basis[b * n + h];
                    for (std::size_t a = 0; a < m; ++a) {
                        const auto v = outer_act.apply(A.mul(first.column(a), pb));
                        for (std::size_t k = 0; k < m; ++k) M(k, a) += v[k];
                    }
                }
            }
        }
    }

    const auto& S = s.smash.algebra;
    const auto N = S.dim();
    r.report = Report("right action of A#H on A");
    r.report.add(check_forall("right-action-unit", "str la dr de a smash h mod", {m}, [&](const MultiIndex& i) {
        return std::pair{r.apply(A.e(i[0]), S.unit()), A.e(i[0])};
    }));
    r.report.add(check_forall("right-action-associative", "str la dr de a smash h mod", {m, N, N}, [&](const MultiIndex& i) {
        const auto a = A.e(i[0]);
        const auto u = S.e(i[1]), v = S.e(i[2]);
        return std::pair{r.apply(r.apply(a, u), v), r.apply(a, S.mul(u, v))};
    }));
    r.report.add(check_forall("right-action-B-compatible", "str la dr de a smash h mod", {s.B.basis.size(), m, N}, [&](const MultiIndex& i) {
        const auto& b = s.B.basis[i[0]];
        const auto a = A.e(i[1]);
        const auto u = S.e(i[2]);
        return std::pair{r.apply(A.mul(b, a), u), A.mul(b, r.apply(a, u))};
    }));
    return r;
}

// ---------------------------------------------------------------------------
// Morita context

struct MoritaContext {
    RightAction right;
    QuotientSpace over_smash; // A (x)_{A#H} A
    QuotientSpace over_B;     // A (x)_B A
    Matrix pairing_B_raw;     // A (x) A -> A, values in B
    Matrix pairing_smash_raw; // A (x) A -> A#H
    Matrix pairing_B;         // A (x)_{A#H} A -> B (B coordinates)
    Matrix pairing_smash;     // A (x)_B A -> A#H
    bool pairing_B_surjective = false;
    bool pairing_smash_surjective = false;
    bool pairing_smash_bijective = false;
    Report report;

    Vector round(const Vector& a, const Vector& b) const { return pairing_B_raw.apply(pure2(a, b)); }
    Vector square(const Vector& a, const Vector& b) const { return pairing_smash_raw.apply(pure2(a, b)); }
};

/// Balancing relations a b (x) c - a (x) b c for b in B.
inline QuotientSpace balanced_over_B(const Setting& s)
{
    const auto m = s.m();
    std::vector<Vector> rel;
    for (std::size_t a = 0; a < m; ++a)
        for (const auto& b : s.B.basis)
            for (std::size_t c = 0; c < m; ++c) rel.push_back(pure2(s.A.mul(s.A.e(a), b), s.A.e(c)) - pure2(s.A.e(a), s.A.mul(b, s.A.e(c))));
    return quotient_by_relations(s.H.field(), m * m, rel);
}

inline MoritaContext morita_context(const Setting& s)
{
    const auto& H = s.H;
    const auto& A = s.A;
    const auto F = H.field();
    const auto m = s.m();
    const auto& Sm = s.smash.algebra;
    const auto N = Sm.dim();
    const auto& t = s.integral.t;
    const auto& B = s.B;
    const auto k = B.basis.size();
    const auto pL = terms(s.D.p_L);

    MoritaContext c;
    c.right = right_action(s);
    c.report = Report("Morita context");
    c.report.merge(c.right.report);

    // (a, b) = t [(p_L^1 a)(p_L^2 b)];  [a, b] = (a # t)(p_L^1 b # p_L^2)
    c.pairing_B_raw = Matrix(F, m, m * m);
    c.pairing_smash_raw = Matrix(F, N, m * m);
    const auto t_act = A.action_of(t);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            Vector round = A.zero();
            Vector square = zero_vector(F, N);
            for (const auto& p : pL) {
                round = round + A.mul(A.act(p[0], A.e(a)), A.act(p[1], A.e(b)));
                square = square + Sm.mul(s.smash.pure(A.e(a), t), s.smash.pure(A.act(p[0], A.e(b)), p[1]));
            }
            c.pairing_B_raw.set_column(a * m + b, t_act.apply(round));
            c.pairing_smash_raw.set_column(a * m + b, square);
        }
    }

    auto rt = [&](const Vector& a, const Vector& u) { return c.right.apply(a, u); };
    auto lt = [&](const Vector& u, const Vector& b) { return s.left_act(u, b); };
    auto round = [&](const Vector& a, const Vector& b) { return c.round(a, b); };
    auto square = [&](const Vector& a, const Vector& b) { return c.square(a, b); };

    c.report.add(check_forall("pairing-B-in-invariants", "moritaB", {m, m}, [&](const MultiIndex& i) {
        const auto v = round(A.e(i[0]), A.e(i[1]));
        const bool in_B = coordinates_in(F, B.basis, v).has_value();
        return std::pair{Vector{in_B ? F.one() : F.zero()}, Vector{F.one()}};
    }));
    c.report.add(check_forall("pairing-B-balanced", "moritaB", {m, N, m}, [&](const MultiIndex& i) {
        const auto a = A.e(i[0]), u = Sm.e(i[1]), x = A.e(i[2]);
        return std::pair{round(rt(a, u), x), round(a, lt(u, x))};
    }));
    c.report.add(check_forall("pairing-B-left-B-linear", "moritaB", {k, m, m}, [&](const MultiIndex& i) {
        const auto& b = B.basis[i[0]];
        const auto a = A.e(i[1]), x = A.e(i[2]);
        return std::pair{round(A.mul(b, a), x), A.mul(b, round(a, x))};
    }));
    c.report.add(check_forall("pairing-B-right-B-linear", "moritaB", {m, m, k}, [&](const MultiIndex& i) {
        const auto& b = B.basis[i[2]];
        const auto a = A.e(i[0]), x = A.e(i[1]);
        return std::pair{round(a, A.mul(x, b)), A.mul(round(a, x), b)};
    }));
    c.report.add(check_forall("pairing-smash-balanced", "moritasmash", {m, k, m}, [&](const MultiIndex& i) {
        const auto& b = B.basis[i[1]];
        const auto a = A.e(i[0]), x = A.e(i[2]);
        return std::pair{square(A.mul(a, b), x), square(a, A.mul(b, x))};
    }));
    c.report.add(check_forall("pairing-smash-left-linear", "moritasmash", {N, m, m}, [&](const MultiIndex& i) {
        const auto u = Sm.e(i[0]);
        const auto a = A.e(i[1]), x = A.e(i[2]);
        return std::pair{square(lt(u, a), x), Sm.mul(u, square(a, x))};
    }));
    c.report.add(check_forall("pairing-smash-right-linear", "moritasmash", {m, m, N}, [&](const MultiIndex& i) {
        const auto a = A.e(i[0]), x = A.e(i[1]);
        const auto u = Sm.e(i[2]);
        return std::pair{square(a, rt(x, u)), Sm.mul(square(a, x), u)};
    }));
    c.report.add(check_forall("morita-associative-left", "moritasmash", {m, m, m}, [&](const MultiIndex& i) {
        const auto a = A.e(i[0]), b = A.e(i[1]), x = A.e(i[2]);
        return std::pair{lt(square(a, b), x), A.mul(a, round(b, x))};
    }));
    c.report.add(check_forall("morita-associative-right", "moritaB", {m, m, m}, [&](const MultiIndex& i) {
        const auto a = A.e(i[0]), b = A.e(i[1]), x = A.e(i[2]);
        return std::pair{rt(a, square(b, x)), A.mul(round(a, b), x)};
    }));

    // Quotients and the induced maps.
    std::vector<Vector> rel;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t u = 0; u < N; ++u)
            for (std::size_t x = 0; x < m; ++x) rel.push_back(pure2(rt(A.e(a), Sm.e(u)), A.e(x)) - pure2(A.e(a), lt(Sm.e(u), A.e(x))));
    c.over_smash = quotient_by_relations(F, m * m, rel);
    c.over_B = balanced_over_B(s);

    const auto to_B = [&](const Matrix& in_A) {
        Matrix out(F, k, in_A.cols());
        for (std::size_t j = 0; j < in_A.cols(); ++j) out.set_column(j, coordinates_in(F, B.basis, in_A.column(j)).value_or(zero_vector(F, k)));
        return out;
    };
    c.pairing_B = to_B(c.pairing_B_raw.compose(c.over_smash.section_matrix()));
    c.pairing_smash = c.pairing_smash_raw.compose(c.over_B.section_matrix());
    c.pairing_B_surjective = rank(c.pairing_B) == k;
    const auto rs = rank(c.pairing_smash);
    c.pairing_smash_surjective = rs == N;
    c.pairing_smash_bijective = c.pairing_smash_surjective && rs == c.over_B.dim();
    c.report.set_flag("pairing_B_surjective", c.pairing_B_surjective);
    c.report.set_flag("pairing_smash_surjective", c.pairing_smash_surjective);
    c.report.set_flag("pairing_smash_bijective", c.pairing_smash_bijective);
    return c;
}

// ---------------------------------------------------------------------------
// Galois maps

struct GaloisData {
    QuotientSpace domain;   // A (x)_B A
    Matrix can_raw;         // A (x) A -> A (x) H*, index a * n + i
    Matrix can_prime_raw;
    Matrix can;             // on the quotient
    Matrix can_prime;
    Matrix Xi, Xi_inv;      // on A (x) H*
    std::size_t can_rank = 0;
    bool surjective = false;
    bool bijective = false;
    Report report;
};

/// Matrix on A (x) A of e_a (x) e_b |-> sum_i coeff(a, b, i) (x) e^i.
inline Matrix a_tensor_dual_map(const Setting& s, const std::function<Vector(std::size_t, std::size_t, std::size_t)>& coeff)
{
    const auto m = s.m();
    const auto n = s.n();
    Matrix out(s.H.field(), m * n, m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vector col = zero_vector(s.H.field(), m * n);
            for (std::size_t i = 0; i < n; ++i) {
                const auto v = coeff(a, b, i);
                for (std::size_t r = 0; r < m; ++r) col[r * n + i] += v[r];
            }
            out.set_column(a * m + b, col);
        }
    return out;
}

inline GaloisData can_maps(const Setting& s)
{
    const auto& H = s.H;
    const auto& A = s.A;
    const auto F = H.field();
    const auto n = s.n();
    const auto m = s.m();
    const auto g = compute_gauge_f(H);
    const auto E = compute_UV(H, g, s.D);

    GaloisData d;
    d.report = Report("Galois maps");
    d.domain = balanced_over_B(s);
    const auto pR = terms(s.D.p_R);
    const auto UR = terms(E.U_R);

    // can(a (x) b) = sum_i (p_R^1 a)(p_R^2 e_i b) (x) e^i
    d.can_raw = a_tensor_dual_map(s, [&](std::size_t a, std::size_t b, std::size_t i) {
        Vector v = A.zero();
        for (const auto& p : pR) v = v + A.mul(A.act(p[0], A.e(a)), A.act(H.mul(p[1], H.e(i)), A.e(b)));
        return v;
    });
    // can'(a (x) b) = sum_i (U_R^1 e_i a)(U_R^2 b) (x) e^i
    d.can_prime_raw = a_tensor_dual_map(s, [&](std::size_t a, std::size_t b, std::size_t i) {
        Vector v = A.zero();
        for (const auto& u : UR) v = v + A.mul(A.act(H.mul(u[0], H.e(i)), A.e(a)), A.act(u[1], A.e(b)));
        return v;
    });

    // Xi(a (x) h*) = sum_i e_i a (x) (e^i <- q_L^1)((h* o S) <- q_L^2)
    // Xi^{-1}(a (x) h*) = sum_i e_i a (x) (f^{-1,1} -> (h* o S^{-1}) <- V_L^1)(f^{-1,2} -> e^i <- V_L^2)
    const auto qL = terms(s.D.q_L);
    const auto VL = terms(E.V_L);
    const auto finv = terms(g.f_inv);
    const auto N = m * n;
    d.Xi = Matrix(F, N, N);
    d.Xi_inv = Matrix(F, N, N);
    for (std::size_t j = 0; j < n; ++j) {
        const auto hs = H.e(j);
        for (std::size_t i = 0; i < n; ++i) {
            const auto ei = H.e(i);
            Vector fwd = zero_vector(F, n);
            for (const auto& q : qL) fwd = fwd + H.convolve(H.hit_right(ei, q[0]), H.hit_right(H.compose_S(hs), q[1]));
            Vector bwd = zero_vector(F, n);
            for (const auto& f : finv)
                for (const auto& v : VL)
                    bwd = bwd + H.convolve(H.hit_left(f[0], H.hit_right(H.compose_Sinv(hs), v[0])), H.hit_left(f[1], H.hit_right(ei, v[1])));
            for (std::size_t a = 0; a < m; ++a) {
                const auto moved = A.act(ei, A.e(a));
                const auto fw = kron(moved, fwd).coords();
                const auto bw = kron(moved, bwd).coords();
                for (std::size_t r = 0; r < N; ++r) {
                    d.Xi(r, a * n + j) += fw[r];
                    d.Xi_inv(r, a * n + j) += bw[r];
                }
            }
        }
    }

    const auto sec = d.domain.section_matrix();
    d.can = d.can_raw.compose(sec);
    d.can_prime = d.can_prime_raw.compose(sec);
    bool can_balanced = true;
    for (std::size_t a = 0; a < m; ++a)
        for (const auto& b : s.B.basis)
            for (std::size_t c = 0; c < m; ++c) {
                const auto rel = pure2(A.mul(A.e(a), b), A.e(c)) - pure2(A.e(a), A.mul(b, A.e(c)));
                can_balanced = can_balanced && is_zero(d.can_raw.apply(rel));
            }
    d.report.add(check_true("can-balanced", "can", can_balanced, "can does not vanish on B-balancing relations"));
    d.report.add(check_true("Xi-can", "can'", d.Xi.compose(d.can_raw) == d.can_prime_raw, "Xi o can != can'"));
    const auto id = Matrix::identity(F, N);
    d.report.add(check_true("Xi-Xi-inverse", "Xi", d.Xi.compose(d.Xi_inv) == id, "Xi o Xi^{-1} != id"));
    d.report.add(check_true("Xi-inverse-Xi", "Xi", d.Xi_inv.compose(d.Xi) == id, "Xi^{-1} o Xi != id"));

    d.can_rank = rank(d.can);
    d.surjective = d.can_rank == N;
    d.bijective = d.surjective && d.can_rank == d.domain.dim();
    d.report.set_flag("can_surjective", d.surjective);
    d.report.set_flag("galois", d.bijective);
    d.report.set_flag("can_prime_bijective", rank(d.can_prime) == N && N == d.domain.dim());
    d.report.data()["can_rank"] = d.can_rank;
    d.report.data()["domain_dim"] = d.domain.dim();
    d.report.data()["codomain_dim"] = N;
    return d;
}

/// (I (x) theta_t) o can = [-,-] on A (x) A, identifying A (x) H with A#H.
inline Check theta_relation(const Setting& s, const GaloisData& g, const MoritaContext& c)
{
    const auto fr = frobenius_theta_t(s.H, s.integral);
    const auto m = s.m();
    const auto n = s.n();
    Matrix I_theta(s.H.field(), m * n, m * n);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t h = 0; h < n; ++h) I_theta(a * n + h, a * n + i) = fr.theta(h, i);
    const auto lhs = I_theta.compose(g.can_raw);
    return check_true("theta-relation", "(I (x) theta_t) can = [-,-]", lhs == c.pairing_smash_raw, "(I (x) theta_t) o can != [-,-]");
}

// ---------------------------------------------------------------------------
// Total integrals and trace one

/// Phi : H* -> A with Phi(h -> h*) = h Phi(h*) and Phi(eps) = 1_A, as an m x n
/// matrix, or none.
inline std::optional<Matrix> total_integral(const QuasiHopfAlgebra& H, const ModuleAlgebra& A)
{
    const auto F = H.field();
    const auto n = H.dim();
    const auto m = A.dim();
    // Unknown Phi(r, c) at index r * n + c.
    Matrix sys(F, n * n * m + m, m * n);
    Vector rhs = zero_vector(F, n * n * m + m);
    std::size_t row = 0;
    for (std::size_t h = 0; h < n; ++h) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto moved = H.hit_left(H.e(h), H.e(i));
            for (std::size_t r = 0; r < m; ++r, ++row) {
                for (std::size_t c = 0; c < n; ++c) sys(row, r * n + c) += moved[c];
                for (std::size_t q = 0; q < m; ++q) sys(row, q * n + i) -= A.action()[h](r, q);
            }
        }
    }
    for (std::size_t r = 0; r < m; ++r, ++row) {
        for (std::size_t c = 0; c < n; ++c) sys(row, r * n + c) = H.counit()[c];
        rhs[row] = A.unit()[r];
    }
    const auto sol = solve_affine(sys, rhs);
    if (!sol) return std::nullopt;
    Matrix phi(F, m, n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c) phi(r, c) = sol->solution[r * n + c];
    return phi;
}

inline Report verify_total_integral(const QuasiHopfAlgebra& H, const ModuleAlgebra& A, const Matrix& phi)
{
    Report r("total integral");
    const auto n = H.dim();
    r.add(check_forall("total-integral-H-linear", "total integral", {n, n}, [&](const MultiIndex& i) {
        return std::pair{phi.apply(H.hit_left(H.e(i[0]), H.e(i[1]))), A.act(H.e(i[0]), phi.column(i[1]))};
    }));
    r.add(check_equal("total-integral-unit", "total integral", phi.apply(H.counit()), A.unit()));
    return r;
}

/// a with t a = 1_A.
inline std::optional<Vector> trace_one(const QuasiHopfAlgebra&, const ModuleAlgebra& A, const Vector& t)
{
    const auto sol = solve_affine(A.action_of(t), A.unit());
    if (!sol) return std::nullopt;
    return sol->solution;
}

// ---------------------------------------------------------------------------
// Equivalences

struct EquivalenceSuite {
    Report report; // flags plus one check per asserted implication
};

inline EquivalenceSuite equivalence_suite(const Setting& s)
{
    EquivalenceSuite e{Report("equivalences")};
    auto& r = e.report;
    const auto morita = morita_context(s);
    const auto galois = can_maps(s);
    const auto epsA = counit_epsilon_M(s.H, s.A, s.B, s.smash, regular_relative_module(s.A));
    const auto epsAH = counit_epsilon_M(s.H, s.A, s.B, s.smash, smash_relative_module(s.H, s.A, s.smash));
    const auto phi = total_integral(s.H, s.A);
    const auto a1 = trace_one(s.H, s.A, s.integral.t);

    r.merge(morita.report, "morita");
    r.merge(galois.report, "galois");
    r.add(theta_relation(s, galois, morita));
    r.merge(epsA.report, "epsilon_A");
    r.merge(epsAH.report, "epsilon_AH");
    if (phi) r.merge(verify_total_integral(s.H, s.A, *phi));
    if (a1) r.add(check_equal("trace-one", "trace one", s.A.act(s.integral.t, *a1), s.A.unit()));

    const bool galois_flag = galois.bijective;
    const bool eps_AH_surjective = epsAH.surjective;
    r.set_flag("galois", galois_flag);
    r.set_flag("can_surjective", galois.surjective);
    r.set_flag("pairing_smash_bijective", morita.pairing_smash_bijective);
    r.set_flag("pairing_smash_surjective", morita.pairing_smash_surjective);
    r.set_flag("epsilon_AH_bijective", epsAH.bijective());
    r.set_flag("epsilon_AH_surjective", eps_AH_surjective);
    r.set_flag("epsilon_A_bijective", epsA.bijective());
    r.set_flag("pairing_B_surjective", morita.pairing_B_surjective);
    r.set_flag("total_integral", phi.has_value());
    r.set_flag("trace_one", a1.has_value());
    const bool strong = morita.pairing_B_surjective && morita.pairing_smash_surjective;
    r.set_flag("strong_structure", strong);

    const std::vector<bool> galois_class{galois_flag, galois.surjective, morita.pairing_smash_bijective, morita.pairing_smash_surjective,
                                         epsAH.bijective(), eps_AH_surjective};
    const std::vector<bool> integral_class{morita.pairing_B_surjective, phi.has_value(), a1.has_value()};
    auto all_equal = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [&](bool b) { return b == v.front(); }); };
    r.add(check_true("galois-equivalences", "ThMoritaGalois", all_equal(galois_class),
                     "Galois, can surjective, [-,-] bijective/surjective and eps_{A#H} bijective/surjective disagree"));
    r.add(check_true("integral-equivalences", "total integral", all_equal(integral_class),
                     "(-,-) surjective, total integral and trace one disagree"));
    r.add(check_true("weak-structure-on-A", "ThMoritaGalois", !galois_flag || epsA.bijective(), "Galois but eps_A not bijective"));
    r.add(check_true("strong-structure", "Strong Structure Theorem", strong == (galois_flag && phi.has_value()),
                     "both Morita maps surjective differs from Galois with total integral"));
    return e;
}

} // namespace qhopf
