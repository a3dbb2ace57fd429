#pragma once

// The explicit inverse of the Galois map of a quasi-smash product and its
// total integral h* |-> 1 # h*.

#include "qhopf/comodule.hpp"
#include "qhopf/morita.hpp"

namespace qhopf {

struct QuasiSmashGalois {
    Matrix can_inverse_raw; // A (x) H* -> A (x) A, A = C#H*
    Matrix can_inverse;     // A (x) H* -> A (x)_C A
    bool two_sided = false;
    Report report;
};

/// can^{-1}((a # h*) (x) g*) = sum_i (a # h*)(q_rho^1 # (e^i o S) <- q_rho^2) (x) (1 # g* <- e_i)
inline QuasiSmashGalois quasismash_can_inverse(const QuasiHopfAlgebra& H, const ComoduleAlgebra& C, const QuasiSmash& qs,
                                                 const GaloisData& g)
{
    const auto F = H.field();
    const auto n = H.dim();
    const auto m = qs.algebra.dim();
    const auto& A = qs.algebra;
    const auto q_terms = terms(qs.q_rho);

    // Right factors q_rho^1 # (e^i o S) <- q_rho^2 for each i.
    std::vector<Vector> right(n, zero_vector(F, m));
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& q : q_terms) right[i] = right[i] + kron(q[0], H.hit_right(H.compose_S(H.e(i)), q[1])).coords();
    const auto one_C = C.algebra().unit();

    QuasiSmashGalois r;
    r.report = Report("quasi-smash Galois inverse");
    r.can_inverse_raw = Matrix(F, m * m, m * n);
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto left = A.mul(A.e(u), right[i]);
            for (std::size_t k = 0; k < n; ++k) {
                const auto second = kron(one_C, H.hit_right(H.e(k), H.e(i))).coords();
                const auto v = pure2(left, second);
                for (std::size_t row = 0; row < m * m; ++row) r.can_inverse_raw(row, u * n + k) += v[row];
            }
        }
    }
    r.can_inverse = g.domain.projection_matrix().compose(r.can_inverse_raw);

    // Elements (a # h*) (x) (1 # g*) span A (x)_C A.
    std::vector<Vector> spanning;
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t k = 0; k < n; ++k) spanning.push_back(g.domain.project(pure2(A.e(u), kron(one_C, H.e(k)).coords())));
    r.report.add(check_true("reduced-elements-span", "quasismash", rank(Matrix::from_columns(F, g.domain.dim(), spanning)) == g.domain.dim(),
                            "(a # h*) (x) (1 # g*) do not span A (x)_C A"));
    r.report.add(check_true("can-can-inverse", "quasismash Galois", g.can.compose(r.can_inverse) == Matrix::identity(F, m * n),
                            "can o can^{-1} != id"));
    r.report.add(check_true("can-inverse-can", "quasismash Galois", r.can_inverse.compose(g.can) == Matrix::identity(F, g.domain.dim()),
                            "can^{-1} o can != id"));
    r.two_sided = r.report.passed();
    return r;
}

/// Phi(h*) = 1 # h*, checked and compared with the generic solver.
inline Report quasismash_total_integral(const QuasiHopfAlgebra& H, const ComoduleAlgebra& C, const QuasiSmash& qs)
{
    const auto n = H.dim();
    Matrix phi(H.field(), qs.algebra.dim(), n);
    for (std::size_t i = 0; i < n; ++i) phi.set_column(i, kron(C.algebra().unit(), H.e(i)).coords());
    auto r = verify_total_integral(H, qs.algebra, phi);
    r.add(check_true("solver-agrees", "total integral", total_integral(H, qs.algebra).has_value(), "generic solver finds no total integral"));
    return r;
}

} // namespace qhopf
