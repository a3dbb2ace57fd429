#pragma once

// Independent reference computations for the test suite.
//
// Everything here works on plain index arrays of boost::multiprecision
// rationals with hand-entered structure constants and its own Gaussian
// elimination. Nothing from include/qhopf is used, so agreement with the
// library is evidence rather than tautology.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace oracle {

using Q = boost::multiprecision::cpp_rational;
using Vec = std::vector<Q>;

struct Alg {
    int n = 0;
    Vec mul;   // mul[(i * n + j) * n + k]: coefficient of e_k in e_i e_j
    Vec comul; // comul[(i * n + a) * n + b]: coefficient of e_a (x) e_b in Delta(e_i)
    Vec eps;
    Vec phi, phinv; // [(a * n + b) * n + c]
    Vec S;          // S[j * n + i]: coefficient of e_i in S(e_j)
    Vec alpha, beta;
};

inline std::string str(const Q& q)
{
    return q.str();
}

inline std::vector<std::string> strs(const Vec& v)
{
    std::vector<std::string> out;
    for (const auto& q : v) out.push_back(str(q));
    return out;
}

inline Vec zeros(std::size_t n) { return Vec(n, Q(0)); }

inline Vec unitvec(int n, int i)
{
    auto v = zeros(n);
    v[i] = 1;
    return v;
}

inline Vec prod(const Alg& A, const Vec& x, const Vec& y)
{
    const int n = A.n;
    auto out = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out[k] += x[i] * y[j] * A.mul[(i * n + j) * n + k];
    return out;
}

inline Vec apply_S(const Alg& A, const Vec& x, const Vec& Smat)
{
    const int n = A.n;
    auto out = zeros(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out[i] += x[j] * Smat[j * n + i];
    return out;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<int> rref(std::vector<Vec>& rows, int cols)
{
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int p = r;
        while (p < static_cast<int>(rows.size()) && rows[p][c] == 0) ++p;
        if (p == static_cast<int>(rows.size())) continue;
        std::swap(rows[p], rows[r]);
        Q inv = 1 / rows[r][c];
        for (auto& v : rows[r]) v *= inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Q f = rows[i][c];
            for (int j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

inline std::vector<Vec> nullspace(std::vector<Vec> rows, int cols)
{
    auto piv = rref(rows, cols);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<Vec> out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        auto v = zeros(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -rows[r][f];
        out.push_back(v);
    }
    return out;
}

inline int rank_of(std::vector<Vec> rows, int cols) { return static_cast<int>(rref(rows, cols).size()); }

inline Vec invert_matrix(const Vec& M, int n) // M[j * n + i] column-major like S
{
    std::vector<Vec> rows(n, zeros(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = M[j * n + i];
        rows[i][n + i] = 1;
    }
    rref(rows, 2 * n);
    Vec out = zeros(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[j * n + i] = rows[i][n + j];
    return out;
}

// ---------------------------------------------------------------------------
// Hand-entered algebras

inline Alg kz2()
{
    Alg A;
    A.n = 2;
    A.mul = {1, 0, 0, 1, 0, 1, 1, 0}; // 1*1=1, 1*g=g, g*1=g, g*g=1
    A.comul = zeros(8);
    A.comul[(0 * 2 + 0) * 2 + 0] = 1;
    A.comul[(1 * 2 + 1) * 2 + 1] = 1;
    A.eps = {1, 1};
    A.phi = zeros(8);
    A.phi[0] = 1;
    A.phinv = A.phi;
    A.S = {1, 0, 0, 1};
    A.alpha = {1, 0};
    A.beta = {1, 0};
    return A;
}

/// phi = 1 - 2 p(x)p(x)p with p = (1 - g)/2: p(x)p(x)p has coefficient
/// (1/8)(-1)^{#g} on e_a(x)e_b(x)e_c.
inline Alg h2tw()
{
    Alg A = kz2();
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                Q ppp = Q(((a + b + c) % 2) ? -1 : 1) / 8;
                A.phi[(a * 2 + b) * 2 + c] = (a + b + c == 0 ? Q(1) : Q(0)) - 2 * ppp;
            }
    A.phinv = A.phi;
    A.alpha = {0, 1};
    A.beta = {1, 0};
    return A;
}

/// Sweedler's algebra, basis 1, g, x, gx.
inline Alg sw4()
{
    Alg A;
    A.n = 4;
    A.mul = zeros(64);
    auto set = [&](int i, int j, int k, int c) { A.mul[(i * 4 + j) * 4 + k] = c; };
    for (int j = 0; j < 4; ++j) set(0, j, j, 1);
    set(1, 0, 1, 1);
    set(1, 1, 0, 1);
    set(1, 2, 3, 1);
    set(1, 3, 2, 1);
    set(2, 0, 2, 1);
    set(2, 1, 3, -1); // x g = -gx
    set(3, 0, 3, 1);
    set(3, 1, 2, -1); // gx g = -x
    A.comul = zeros(64);
    auto cm = [&](int i, int a, int b, int c) { A.comul[(i * 4 + a) * 4 + b] += c; };
    cm(0, 0, 0, 1);
    cm(1, 1, 1, 1);
    cm(2, 2, 0, 1); // x (x) 1
    cm(2, 1, 2, 1); // g (x) x
    cm(3, 3, 1, 1); // gx (x) g
    cm(3, 0, 3, 1); // 1 (x) gx
    A.eps = {1, 1, 0, 0};
    A.phi = zeros(64);
    A.phi[0] = 1;
    A.phinv = A.phi;
    A.S = zeros(16);
    A.S[0 * 4 + 0] = 1;
    A.S[1 * 4 + 1] = 1;
    A.S[2 * 4 + 3] = -1; // S(x) = -gx
    A.S[3 * 4 + 2] = 1;  // S(gx) = x
    A.alpha = unitvec(4, 0);
    A.beta = unitvec(4, 0);
    return A;
}

// ---------------------------------------------------------------------------
// Integrals

/// Kernel of h |-> e_h t - eps(e_h) t, scaled so the first nonzero entry is 1.
inline std::vector<Vec> left_integrals(const Alg& A)
{
    const int n = A.n;
    std::vector<Vec> rows;
    for (int h = 0; h < n; ++h) {
        for (int k = 0; k < n; ++k) {
            Vec row = zeros(n);
            for (int j = 0; j < n; ++j) {
                row[j] = A.mul[(h * n + j) * n + k] - (j == k ? A.eps[h] : Q(0));
            }
            rows.push_back(row);
        }
    }
    auto ker = nullspace(rows, n);
    for (auto& v : ker) {
        Q lead = 0;
        for (auto& c : v)
            if (lead == 0 && c != 0) lead = c;
        for (auto& c : v) c /= lead;
    }
    return ker;
}

/// gamma(e_h) from t e_h = gamma(e_h) t.
inline Vec modular(const Alg& A, const Vec& t)
{
    Vec g = zeros(A.n);
    int k0 = 0;
    while (t[k0] == 0) ++k0;
    for (int h = 0; h < A.n; ++h) g[h] = prod(A, t, unitvec(A.n, h))[k0] / t[k0];
    return g;
}

// ---------------------------------------------------------------------------
// p/q elements as n x n coefficient arrays [a * n + b]

inline Vec tensor2(const Vec& x, const Vec& y)
{
    const int n = static_cast<int>(x.size());
    Vec out = zeros(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out[a * n + b] = x[a] * y[b];
    return out;
}

inline void add_to(Vec& acc, const Vec& v)
{
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

inline Vec scaled(Q c, Vec v)
{
    for (auto& x : v) x *= c;
    return v;
}

struct PQ {
    Vec pL, qL, pR, qR;
};

inline PQ pq(const Alg& A)
{
    const int n = A.n;
    const Vec Sinv = invert_matrix(A.S, n);
    PQ r{zeros(n * n), zeros(n * n), zeros(n * n), zeros(n * n)};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const auto ea = unitvec(n, a), eb = unitvec(n, b), ec = unitvec(n, c);
                const Q X = A.phi[(a * n + b) * n + c];
                const Q x = A.phinv[(a * n + b) * n + c];
                if (X != 0) {
                    add_to(r.pL, scaled(X, tensor2(prod(A, eb, apply_S(A, prod(A, ea, A.beta), Sinv)), ec)));
                    add_to(r.qR, scaled(X, tensor2(ea, prod(A, apply_S(A, prod(A, A.alpha, ec), Sinv), eb))));
                }
                if (x != 0) {
                    add_to(r.qL, scaled(x, tensor2(prod(A, prod(A, apply_S(A, ea, A.S), A.alpha), eb), ec)));
                    add_to(r.pR, scaled(x, tensor2(ea, prod(A, prod(A, eb, A.beta), apply_S(A, ec, A.S)))));
                }
            }
    return r;
}

/// Lambda = gamma(q_L^2) q_L^1.
inline Vec big_lambda(const Alg& A, const Vec& gamma, const Vec& qL)
{
    const int n = A.n;
    Vec out = zeros(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out[a] += qL[a * n + b] * gamma[b];
    return out;
}

} // namespace oracle
