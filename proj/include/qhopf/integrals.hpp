#pragma once

// Left integrals, the modular element, and the Frobenius isomorphism H* -> H.

#include "qhopf/derived.hpp"

namespace qhopf {

struct IntegralData {
    Vector t;
    std::size_t integral_dim = 0;
    Vector gamma;  // values gamma(e_i)
    Vector lambda; // Lambda = gamma(q_L^2) q_L^1
    Report report;
};

/// Kernel of the stacked maps t |-> e_h t - eps(e_h) t. The first kernel vector
/// is rescaled so that its first nonzero coordinate is 1.
inline IntegralData left_integrals(const QuasiHopfAlgebra& H)
{
    const auto n = H.dim();
    Matrix stacked(H.field(), n * n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t h = 0; h < n; ++h) {
            const auto col = H.mul(H.e(h), H.e(j)) - H.eps(H.e(h)) * H.e(j);
            for (std::size_t k = 0; k < n; ++k) stacked(h * n + k, j) = col[k];
        }
    }
    auto ker = kernel(stacked);
    if (ker.empty()) throw MathError("zero integral space");
    IntegralData d;
    d.integral_dim = ker.size();
    d.t = ker.front();
    for (const auto& c : d.t) {
        if (!c.is_zero()) {
            d.t = c.inverse() * d.t;
            break;
        }
    }
    return d;
}

inline std::size_t first_nonzero(const Vector& v)
{
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k].is_zero()) return k;
    }
    throw MathError("zero vector has no leading coordinate");
}

/// gamma(h) from t h = gamma(h) t, checked to be an algebra map; Lambda from q_L.
inline void modular_element(const QuasiHopfAlgebra& H, IntegralData& d)
{
    const auto n = H.dim();
    const auto k0 = first_nonzero(d.t);
    d.gamma = H.zero();
    for (std::size_t h = 0; h < n; ++h) {
        const auto th = H.mul(d.t, H.e(h));
        const auto c = th[k0] / d.t[k0];
        if (th != c * d.t) throw MathError("t*h not proportional to t for basis element " + H.algebra().basis_names()[h]);
        d.gamma[h] = c;
    }
    d.report = Report("integrals");
    d.report.add(check_true("integral-dim-one", "left integrals one dimensional", d.integral_dim == 1,
                            "dimension " + std::to_string(d.integral_dim)));
    d.report.add(check_forall("left-integral", "ht = eps(h)t", {n}, [&](const MultiIndex& i) {
        const auto h = H.e(i[0]);
        return std::pair{H.mul(h, d.t), H.eps(h) * d.t};
    }));
    d.report.add(check_forall("gama", "gama", {n}, [&](const MultiIndex& i) {
        const auto h = H.e(i[0]);
        return std::pair{H.mul(d.t, h), dot(d.gamma, h) * d.t};
    }));
    d.report.add(check_forall("gamma-multiplicative", "gamma algebra map", {n, n}, [&](const MultiIndex& i) {
        return std::pair{Vector{dot(d.gamma, H.mul(H.e(i[0]), H.e(i[1])))}, Vector{d.gamma[i[0]] * d.gamma[i[1]]}};
    }));
    d.report.add(check_equal("gamma-unital", "gamma algebra map", Vector{dot(d.gamma, H.one())}, Vector{H.field().one()}));
    d.report.add(check_forall("gamma-S-multiplicative", "gamma o S algebra map", {n, n}, [&](const MultiIndex& i) {
        const auto gs = H.compose_S(d.gamma);
        return std::pair{Vector{dot(gs, H.mul(H.e(i[0]), H.e(i[1])))}, Vector{gs[i[0]] * gs[i[1]]}};
    }));

    const auto q_L = compute_pq(H).q_L;
    d.lambda = H.zero();
    for (const auto& q : terms(q_L)) d.lambda = d.lambda + dot(d.gamma, q[1]) * q[0];
}

inline Check check_S_of_t(const QuasiHopfAlgebra& H, const IntegralData& d)
{
    return check_equal("S(t)", "S(t) = Lambda(gamma -> t)", H.S(d.t), H.mul(d.lambda, H.weak_left(d.gamma, d.t)));
}

inline IntegralData compute_integral_data(const QuasiHopfAlgebra& H)
{
    auto d = left_integrals(H);
    modular_element(H, d);
    d.report.add(check_S_of_t(H, d));
    return d;
}

/// P(h) = sum_i e^i(S^{-2}(q_L^1 e_{i1} S(beta)) h) q_L^2 e_{i2}.
inline Matrix projection_P(const QuasiHopfAlgebra& H)
{
    const auto n = H.dim();
    const auto q_L = compute_pq(H).q_L;
    const auto Sbeta = kron(H.S(H.beta()), H.one());
    Matrix P(H.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto Y = H.mul(q_L, H.delta(H.e(i)), Sbeta);
        for (const auto& y : terms(Y)) {
            const auto left = H.Sinv(H.Sinv(y[0]));
            for (std::size_t k = 0; k < n; ++k) {
                const auto c = H.mul(left, H.e(k))[i];
                if (c.is_zero()) continue;
                for (std::size_t r = 0; r < n; ++r) P(r, k) += c * y[1][r];
            }
        }
    }
    return P;
}

struct FrobeniusData {
    Matrix theta;     // theta_t : H* -> H (dual basis coordinates in, H coordinates out)
    Matrix theta_inv; // from P: h |-> sum_i c(e_i h) e^i S^{-1}, where P(x) = c(x) t
    Matrix P;
    Report report;
};

/// theta_t(h*) = h*(q_L^1 t_1 p_L^1) q_L^2 t_2 p_L^2, together with the inverse
/// built from P on the slice t (x) H*.
inline FrobeniusData frobenius_theta_t(const QuasiHopfAlgebra& H, const IntegralData& d)
{
    const auto n = H.dim();
    const auto F = H.field();
    if (d.integral_dim != 1) throw MathError("integral space has dimension " + std::to_string(d.integral_dim) + ", expected 1");
    const auto D = compute_pq(H);
    const auto X = H.mul(D.q_L, H.delta(d.t), D.p_L);
    FrobeniusData fd;
    fd.theta = Matrix(F, n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t b = 0; b < n; ++b) fd.theta(b, j) = X[{j, b}];

    fd.P = projection_P(H);
    fd.report = Report("Frobenius isomorphism");
    const auto k0 = first_nonzero(d.t);
    bool in_integrals = true;
    for (std::size_t k = 0; k < n; ++k) {
        const auto v = fd.P.column(k);
        in_integrals = in_integrals && v == (v[k0] / d.t[k0]) * d.t;
    }
    fd.report.add(check_true("P-lands-in-integrals", "P(h) left integral", in_integrals, "P(h) not a multiple of t"));
    fd.report.add(check_true("P-nonzero", "P(h) nonzero for some h", rank(fd.P) > 0, "P identically zero"));

    const auto Sinv_dual = H.antipode_inv().transpose(); // h* |-> h* o S^{-1}
    fd.theta_inv = Matrix(F, n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Vector out = zero_vector(F, n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = fd.P.apply(H.mul(H.e(i), H.e(k)))[k0] / d.t[k0];
            if (!c.is_zero()) out = out + c * Sinv_dual.column(i);
        }
        fd.theta_inv.set_column(k, out);
    }
    fd.report.add(check_true("theta-bijective", "theta_t bijective", rank(fd.theta) == n, "theta_t singular"));
    fd.report.add(check_true("theta-theta-inverse", "Theta Theta^{-1} = id",
                             fd.theta.compose(fd.theta_inv) == Matrix::identity(F, n), "Theta not invertible"));
    fd.report.add(check_true("theta-inverse-theta", "Theta^{-1} Theta = id",
                             fd.theta_inv.compose(fd.theta) == Matrix::identity(F, n), "Theta not invertible"));
    fd.report.add(check_forall("theta-H-linear", "theta_t(h* <- S(h)) = h theta_t(h*)", {n, n}, [&](const MultiIndex& i) {
        const auto h = H.e(i[0]);
        const auto hs = H.e(i[1]);
        return std::pair{fd.theta.apply(H.hit_right(hs, H.S(h))), H.mul(h, fd.theta.apply(hs))};
    }));
    return fd;
}

inline Report verify_integral_identities(const QuasiHopfAlgebra& H, const Vector& t)
{
    Report r("integral identities");
    const auto n = H.dim();
    const auto one = H.one();
    const auto D = compute_pq(H);
    const auto dt = H.delta(t);
    const auto qLdt = H.mul(D.q_L, dt);
    const auto qRdt = H.mul(D.q_R, dt);
    r.add(check_forall("Sqlt", "Sqlt", {n}, [&](const MultiIndex& i) {
        const auto h = H.e(i[0]);
        return std::pair{H.mul(kron(H.S(h), one), qLdt).coords(), H.mul(kron(one, h), qLdt).coords()};
    }));
    r.add(check_forall("Sqrt", "Sqrt", {n}, [&](const MultiIndex& i) {
        const auto h = H.e(i[0]);
        return std::pair{H.mul(kron(H.S(h), one), qRdt).coords(), H.mul(kron(one, h), qRdt).coords()};
    }));
    {
        const auto b = kron(H.beta(), one);
        auto c = check_equal("betaql", "betaql", H.mul(b, qLdt), dt);
        if (c.passed) c = check_equal("betaql", "betaql", H.mul(b, qRdt), dt);
        r.add(std::move(c));
    }
    {
        const auto b = kron(one, H.Sinv(H.beta()));
        auto c = check_equal("sbetaql", "sbetaql", H.mul(b, qLdt), dt);
        if (c.passed) c = check_equal("sbetaql", "sbetaql", H.mul(b, qRdt), dt);
        r.add(std::move(c));
    }
    return r;
}

} // namespace qhopf
