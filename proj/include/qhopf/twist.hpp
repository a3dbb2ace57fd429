#pragma once

// Gauge twisting of a quasi-Hopf algebra by F in H (x) H, the induced module
// algebra A_{F^-1} over H_F, and the smash isomorphism a#h |-> F^1.a # F^2 h.

#include "qhopf/morita.hpp"

namespace qhopf {

struct GaugeTwist {
    Tensor F, F_inv;
    QuasiHopfAlgebra H_F;
    ModuleAlgebra A_twisted;
    Matrix smash_iso; // A#H -> A_{F^-1}#H_F
    bool galois_before = false, galois_after = false;
    bool total_integral_before = false, total_integral_after = false;
    Report report;
};

/// Delta_F = F Delta F^-1, phi_F = (1 (x) F)(I (x) Delta)(F) phi (Delta (x) I)(F^-1)(F^-1 (x) 1),
/// alpha_F = S(G^1) alpha G^2 with G = F^-1, beta_F = F^1 beta S(F^2).
inline QuasiHopfAlgebra twist_quasi_hopf(const QuasiHopfAlgebra& H, const Tensor& F, const Tensor& F_inv)
{
    const auto n = H.dim();
    const auto one = H.one();
    std::vector<Tensor> comul;
    comul.reserve(n);
    for (std::size_t i = 0; i < n; ++i) comul.push_back(H.mul(F, H.delta(H.e(i)), F_inv));

    const auto phi = H.mul(H.mul(kron(Tensor::from_vector(one), F), H.delta_on(F, 1), H.phi()),
                           H.mul(H.delta_on(F_inv, 0), kron(F_inv, Tensor::from_vector(one))));
    const auto phi_inv = H.mul(H.mul(kron(F, Tensor::from_vector(one)), H.delta_on(F, 0), H.phi_inv()),
                               H.mul(H.delta_on(F_inv, 1), kron(Tensor::from_vector(one), F_inv)));

    Vector alpha = H.zero(), beta = H.zero();
    for (const auto& g : terms(F_inv)) alpha = alpha + H.mul(H.S(g[0]), H.alpha(), g[1]);
    for (const auto& f : terms(F)) beta = beta + H.mul(f[0], H.beta(), H.S(f[1]));
    return QuasiHopfAlgebra(H.algebra(), std::move(comul), H.counit(), phi, phi_inv, H.antipode(), alpha, beta);
}

/// a o b = (G^1.a)(G^2.b) with G = F^-1; the H-action is unchanged.
inline ModuleAlgebra twist_module_algebra(const ModuleAlgebra& A, const Tensor& F_inv)
{
    const auto m = A.dim();
    const auto g_terms = terms(F_inv);
    std::vector<Vector> table(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            Vector v = A.zero();
            for (const auto& g : g_terms) v = v + A.mul(A.act(g[0], A.e(a)), A.act(g[1], A.e(b)));
            table[a * m + b] = std::move(v);
        }
    return ModuleAlgebra(FiniteAlgebra(A.field(), A.algebra().basis_names(), A.unit(), std::move(table)), A.action());
}

inline GaugeTwist gauge_twist(const QuasiHopfAlgebra& H, const ModuleAlgebra& A, const Tensor& F,
                              std::optional<Tensor> F_inv = std::nullopt)
{
    const auto n = H.dim();
    const auto m = A.dim();
    const auto f = H.field();
    if (F.legs() != std::vector<std::size_t>{n, n}) throw MathError("malformed dimensions: F must be an n x n tensor");
    if (!(H.eps_on(F, 0).coords() == H.one()) || !(H.eps_on(F, 1).coords() == H.one()))
        throw PreconditionError("gauge transformation F is not counit-normalized");
    if (!F_inv) F_inv = invert2(H, F);
    if (!F_inv) throw PreconditionError("gauge transformation F is not invertible");
    if (!(H.mul(F, *F_inv) == H.unit_tensor(2)) || !(H.mul(*F_inv, F) == H.unit_tensor(2)))
        throw PreconditionError("F_inv is not the inverse of F");

    GaugeTwist g;
    g.F = F;
    g.F_inv = *F_inv;
    g.report = Report("gauge twist");
    g.H_F = twist_quasi_hopf(H, F, *F_inv);
    g.A_twisted = twist_module_algebra(A, *F_inv);
    g.report.merge(verify_quasi_hopf(g.H_F), "H_F");
    g.report.merge(verify_module_algebra(g.H_F, g.A_twisted), "A_twisted");

    const auto before = smash_product(H, A, false);
    const auto after = smash_product(g.H_F, g.A_twisted, false);
    g.smash_iso = Matrix(f, m * n, m * n);
    const auto f_terms = terms(F);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t h = 0; h < n; ++h) {
            Vector v = zero_vector(f, m * n);
            for (const auto& t : f_terms) v = v + pure2(A.act(t[0], A.e(a)), H.mul(t[1], H.e(h)));
            g.smash_iso.set_column(a * n + h, v);
        }
    const auto& sigma = g.smash_iso;
    const auto& S1 = before.algebra;
    const auto& S2 = after.algebra;
    g.report.add(check_true("smash-iso-bijective", "gauge twist", rank(sigma) == m * n, "a#h -> F^1.a # F^2 h is singular"));
    g.report.add(check_equal("smash-iso-unital", "gauge twist", sigma.apply(S1.unit()), S2.unit()));
    g.report.add(check_forall("smash-iso-multiplicative", "gauge twist", {m * n, m * n}, [&](const MultiIndex& i) {
        return std::pair{sigma.apply(S1.mul(S1.e(i[0]), S1.e(i[1]))), S2.mul(sigma.apply(S1.e(i[0])), sigma.apply(S1.e(i[1])))};
    }));

    const auto inv_before = invariant_basis(H, A.action(), m);
    const auto inv_after = invariant_basis(g.H_F, g.A_twisted.action(), m);
    auto span_rank = [&](std::vector<Vector> vs) { return vs.empty() ? 0 : rank(Matrix::from_columns(f, m, vs)); };
    auto both = inv_before;
    both.insert(both.end(), inv_after.begin(), inv_after.end());
    g.report.add(check_true("same-invariants", "gauge twist",
                            inv_before.size() == inv_after.size() && span_rank(both) == inv_before.size(),
                            "invariants of A and A_twisted differ"));

    g.galois_before = can_maps(make_setting(H, A)).bijective;
    g.galois_after = can_maps(make_setting(g.H_F, g.A_twisted)).bijective;
    g.total_integral_before = total_integral(H, A).has_value();
    g.total_integral_after = total_integral(g.H_F, g.A_twisted).has_value();
    g.report.add(check_true("galois-invariant", "gauge twist", g.galois_before == g.galois_after, "Galois verdict changed under twisting"));
    g.report.add(check_true("total-integral-invariant", "gauge twist", g.total_integral_before == g.total_integral_after,
                            "total integral existence changed under twisting"));
    g.report.set_flag("galois", g.galois_after);
    g.report.set_flag("total_integral", g.total_integral_after);
    return g;
}

} // namespace qhopf
