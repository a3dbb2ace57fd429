#pragma once

// The elements p_L, q_L, p_R, q_R and U_L, V_L, U_R, V_R of a quasi-Hopf
// algebra, together with the identities they satisfy.

#include "qhopf/quasi_hopf.hpp"

namespace qhopf {

struct DerivedElements {
    Tensor p_L, q_L, p_R, q_R;
};

struct UVElements {
    Tensor U_L, V_L, U_R, V_R;
};

inline DerivedElements compute_pq(const QuasiHopfAlgebra& H)
{
    const auto n = H.dim();
    const auto F = H.field();
    const auto& alpha = H.alpha();
    const auto& beta = H.beta();
    DerivedElements d{Tensor(F, {n, n}), Tensor(F, {n, n}), Tensor(F, {n, n}), Tensor(F, {n, n})};
    for (const auto& X : terms(H.phi())) {
        // p_L = X^2 S^{-1}(X^1 beta) (x) X^3
        d.p_L += kron(H.mul(X[1], H.Sinv(H.mul(X[0], beta))), X[2]);
        // q_R = X^1 (x) S^{-1}(alpha X^3) X^2
        d.q_R += kron(X[0], H.mul(H.Sinv(H.mul(alpha, X[2])), X[1]));
    }
    for (const auto& x : terms(H.phi_inv())) {
        // q_L = S(x^1) alpha x^2 (x) x^3
        d.q_L += kron(H.mul(H.S(x[0]), alpha, x[1]), x[2]);
        // p_R = x^1 (x) x^2 beta S(x^3)
        d.p_R += kron(x[0], H.mul(x[1], beta, H.S(x[2])));
    }
    return d;
}

inline Report verify_pq_identities(const QuasiHopfAlgebra& H, const DerivedElements& D)
{
    Report r("p/q identities");
    const auto n = H.dim();
    const auto one = H.one();
    const auto one2 = H.unit_tensor(2);
    const auto& p_L = D.p_L;
    const auto& q_L = D.q_L;
    const auto& p_R = D.p_R;
    const auto& q_R = D.q_R;

    r.add(check_forall("pl", "pl", {n}, [&](const MultiIndex& i) {
        const auto h = H.e(i[0]);
        Tensor lhs(H.field(), {n, n});
        for (const auto& t : terms(H.delta(h))) lhs += H.mul(H.delta(t[1]), p_L, kron(H.Sinv(t[0]), one));
        return std::pair{lhs.coords(), H.mul(p_L, kron(one, h)).coords()};
    }));
    r.add(check_forall("ql", "ql", {n}, [&](const MultiIndex& i) {
        const auto h = H.e(i[0]);
        Tensor lhs(H.field(), {n, n});
        for (const auto& t : terms(H.delta(h))) lhs += H.mul(kron(H.S(t[0]), one), q_L, H.delta(t[1]));
        return std::pair{lhs.coords(), H.mul(kron(one, h), q_L).coords()};
    }));
    r.add(check_forall("pr", "pr", {n}, [&](const MultiIndex& i) {
        const auto h = H.e(i[0]);
        Tensor lhs(H.field(), {n, n});
        for (const auto& t : terms(H.delta(h))) lhs += H.mul(H.delta(t[0]), p_R, kron(one, H.S(t[1])));
        return std::pair{lhs.coords(), H.mul(p_R, kron(h, one)).coords()};
    }));
    r.add(check_forall("qr", "qr", {n}, [&](const MultiIndex& i) {
        const auto h = H.e(i[0]);
        Tensor lhs(H.field(), {n, n});
        for (const auto& t : terms(H.delta(h))) lhs += H.mul(kron(one, H.Sinv(t[1])), q_R, H.delta(t[0]));
        return std::pair{lhs.coords(), H.mul(kron(h, one), q_R).coords()};
    }));

    auto sum2 = [&](const Tensor& over, const std::function<Tensor(const Term&)>& fn) {
        Tensor acc(H.field(), {n, n});
        for (const auto& t : terms(over)) acc += fn(t);
        return acc;
    };
    r.add(check_equal("qlpl", "qlpl", sum2(q_L, [&](const Term& Q) { return H.mul(H.delta(Q[1]), p_L, kron(H.Sinv(Q[0]), one)); }), one2));
    r.add(check_equal("plql", "plql", sum2(p_L, [&](const Term& P) { return H.mul(kron(H.S(P[0]), one), q_L, H.delta(P[1])); }), one2));
    r.add(check_equal("qrpr", "qrpr", sum2(q_R, [&](const Term& Q) { return H.mul(H.delta(Q[0]), p_R, kron(one, H.S(Q[1]))); }), one2));
    r.add(check_equal("prqr", "prqr", sum2(p_R, [&](const Term& P) { return H.mul(kron(one, H.Sinv(P[1])), q_R, H.delta(P[0])); }), one2));

    const auto phi_terms = terms(H.phi());
    const auto phi_inv_terms = terms(H.phi_inv());
    {
        Tensor rhs(H.field(), {n, n, n});
        for (const auto& X : phi_terms) {
            rhs += H.mul(kron(H.mul(H.delta(X[1]), p_L), Tensor::from_vector(X[2])), kron(H.Sinv(X[0]), one, one));
        }
        r.add(check_equal("fipl", "fipl", H.mul(H.phi_inv(), H.delta_on(p_L, 1)), rhs));
    }
    {
        Tensor rhs(H.field(), {n, n, n});
        for (const auto& x : phi_inv_terms) {
            rhs += H.mul(kron(H.S(x[0]), one, one), kron(H.mul(q_L, H.delta(x[1])), Tensor::from_vector(x[2])));
        }
        r.add(check_equal("qlfi", "qlfi", H.mul(H.delta_on(q_L, 1), H.phi()), rhs));
    }
    {
        Tensor rhs(H.field(), {n, n, n});
        for (const auto& x : phi_inv_terms) {
            rhs += H.mul(kron(Tensor::from_vector(x[0]), H.mul(H.delta(x[1]), p_R)), kron(one, one, H.S(x[2])));
        }
        r.add(check_equal("fipr", "fipr", H.mul(H.phi(), H.delta_on(p_R, 0)), rhs));
    }
    {
        Tensor rhs(H.field(), {n, n, n});
        for (const auto& X : phi_terms) {
            rhs += H.mul(kron(one, one, H.Sinv(X[2])), kron(Tensor::from_vector(X[0]), H.mul(q_R, H.delta(X[1]))));
        }
        r.add(check_equal("qrfi", "qrfi", H.mul(H.delta_on(q_R, 0), H.phi_inv()), rhs));
    }
    return r;
}

/// Needs the gauge element; callers obtain it from compute_gauge_f so that a
/// failed gauge solve makes these elements unavailable.
inline UVElements compute_UV(const QuasiHopfAlgebra& H, const GaugeElement& g, const DerivedElements& D)
{
    const auto swap = [](const Tensor& t) { return permute(t, {1, 0}); };
    return UVElements{
        H.Sinv_all(swap(H.mul(D.q_L, g.f_inv))),
        H.mul(H.S_all(swap(D.p_L)), g.f),
        H.mul(g.f_inv, H.S_all(swap(D.q_R))),
        H.Sinv_all(swap(H.mul(g.f, D.p_R))),
    };
}

inline Report verify_UV(const QuasiHopfAlgebra& H, const UVElements& E)
{
    Report r("U/V relations");
    const auto n = H.dim();
    const auto one = H.one();
    for (const auto& [name, t] : {std::pair{"V_L", &E.V_L}, std::pair{"U_L", &E.U_L}, std::pair{"V_R", &E.V_R}, std::pair{"U_R", &E.U_R}}) {
        r.add(check_true(std::string(name) + "-nonzero", "nonzero", !t->is_zero(), std::string(name) + " is zero"));
    }
    auto forall = [&](const std::string& name, const std::function<std::pair<Tensor, Tensor>(const Vector&)>& sides) {
        r.add(check_forall(name, name, {n}, [&](const MultiIndex& i) {
            auto [a, b] = sides(H.e(i[0]));
            return std::pair{a.coords(), b.coords()};
        }));
    };
    forall("VL-relation", [&](const Vector& h) {
        Tensor lhs(H.field(), {n, n});
        for (const auto& t : terms(H.delta(h))) lhs += H.mul(kron(one, t[0]), E.V_L, H.delta(H.S(t[1])));
        return std::pair{lhs, H.mul(kron(H.S(h), one), E.V_L)};
    });
    forall("UL-relation", [&](const Vector& h) {
        Tensor lhs(H.field(), {n, n});
        for (const auto& t : terms(H.delta(h))) lhs += H.mul(H.delta(H.Sinv(t[1])), E.U_L, kron(one, t[0]));
        return std::pair{lhs, H.mul(E.U_L, kron(H.Sinv(h), one))};
    });
    forall("VR-relation", [&](const Vector& h) {
        Tensor lhs(H.field(), {n, n});
        for (const auto& t : terms(H.delta(h))) lhs += H.mul(kron(t[1], one), E.V_R, H.delta(H.Sinv(t[0])));
        return std::pair{lhs, H.mul(kron(one, H.Sinv(h)), E.V_R)};
    });
    forall("UR-relation", [&](const Vector& h) {
        Tensor lhs(H.field(), {n, n});
        for (const auto& t : terms(H.delta(h))) lhs += H.mul(H.delta(H.S(t[0])), E.U_R, kron(t[1], one));
        return std::pair{lhs, H.mul(E.U_R, kron(one, H.S(h)))};
    });
    return r;
}

} // namespace qhopf
