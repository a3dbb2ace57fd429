#pragma once

// Built-in example structures.
//
//   KZ2   group algebra of Z/2, basis 1, g
//   H2TW  KZ2 with associator 1(x)1(x)1 - 2 p(x)p(x)p, p = (1 - g)/2,
//         S = id, alpha = g, beta = 1 (needs 2 invertible)
//   SW4   Sweedler's 4-dimensional Hopf algebra, basis 1, g, x, gx
//
// Entry names: KZ2, H2TW, SW4, TRIV(X) (ground field with trivial action),
// QS(k,X) and QS(X,X) (quasi-smash of the trivial and of the regular comodule
// algebra), TWIST(X) (a quasi-smash over X with a fixed gauge transformation).

#include "qhopf/io.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qhopf {

namespace build {

using Entry = std::pair<MultiIndex, Scalar>;

inline Tensor tensor(Field f, std::vector<std::size_t> legs, const std::vector<Entry>& entries)
{
    Tensor t(f, std::move(legs));
    for (const auto& [idx, c] : entries) t[idx] += c;
    return t;
}

inline FiniteAlgebra algebra(Field f, std::vector<std::string> names,
                             const std::function<Vector(std::size_t, std::size_t)>& product)
{
    const auto n = names.size();
    std::vector<Vector> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = product(i, j);
    return FiniteAlgebra(f, std::move(names), basis_vector(f, n, 0), std::move(table));
}

/// Coordinates from small integers.
inline Vector ints(Field f, std::initializer_list<long long> xs)
{
    Vector v;
    for (auto x : xs) v.push_back(f.from_int(x));
    return v;
}

inline Tensor trivial_phi(Field f, std::size_t n)
{
    return kron(basis_vector(f, n, 0), basis_vector(f, n, 0), basis_vector(f, n, 0));
}

inline FiniteAlgebra z2_algebra(Field f)
{
    return algebra(f, {"1", "g"}, [f](std::size_t i, std::size_t j) { return basis_vector(f, 2, (i + j) % 2); });
}

inline std::vector<Tensor> grouplike_comul_z2(Field f)
{
    return {kron(basis_vector(f, 2, 0), basis_vector(f, 2, 0)), kron(basis_vector(f, 2, 1), basis_vector(f, 2, 1))};
}

} // namespace build

inline QuasiHopfAlgebra make_kz2(Field f = Field::rational())
{
    return QuasiHopfAlgebra(build::z2_algebra(f), build::grouplike_comul_z2(f), build::ints(f, {1, 1}),
                            build::trivial_phi(f, 2), build::trivial_phi(f, 2), Matrix::identity(f, 2),
                            build::ints(f, {1, 0}), build::ints(f, {1, 0}));
}

/// p = (1 - g)/2 in KZ2.
inline Vector z2_idempotent(Field f)
{
    if (f.characteristic() == 2) throw MathError("p = (1 - g)/2 requires 2 to be invertible; field " + f.to_string() + " has characteristic 2");
    const auto half = f.from_int(2).inverse();
    return Vector{half, -half};
}

inline QuasiHopfAlgebra make_h2tw(Field f = Field::rational())
{
    const auto p = z2_idempotent(f);
    const auto one = basis_vector(f, 2, 0);
    const Tensor phi = kron(one, one, one) - f.from_int(2) * kron(p, p, p);
    // (p(x)p(x)p)^2 = p(x)p(x)p, so phi^2 = 1 - 4P + 4P = 1.
    return QuasiHopfAlgebra(build::z2_algebra(f), build::grouplike_comul_z2(f), build::ints(f, {1, 1}), phi, phi,
                            Matrix::identity(f, 2), build::ints(f, {0, 1}), build::ints(f, {1, 0}));
}

inline QuasiHopfAlgebra make_sw4(Field f = Field::rational())
{
    // e_i = g^a x^b with a = i % 2, b = i / 2; x g = -g x, x^2 = 0.
    auto alg = build::algebra(f, {"1", "g", "x", "gx"}, [f](std::size_t i, std::size_t j) {
        const std::size_t a = i % 2, b = i / 2, c = j % 2, d = j / 2;
        Vector v = zero_vector(f, 4);
        if (b + d >= 2) return v;
        v[(a + c) % 2 + 2 * (b + d)] = f.from_int((b * c) % 2 ? -1 : 1);
        return v;
    });
    auto e = [f](std::size_t i) { return basis_vector(f, 4, i); };
    std::vector<Tensor> comul = {
        kron(e(0), e(0)),
        kron(e(1), e(1)),
        kron(e(2), e(0)) + kron(e(1), e(2)),
        kron(e(3), e(1)) + kron(e(0), e(3)),
    };
    Matrix S = Matrix::from_columns(f, 4, {e(0), e(1), f.from_int(-1) * e(3), e(2)});
    return QuasiHopfAlgebra(std::move(alg), std::move(comul), build::ints(f, {1, 1, 0, 0}), build::trivial_phi(f, 4),
                            build::trivial_phi(f, 4), std::move(S), e(0), e(0));
}

/// F = 1(x)1 + p(x)p on KZ2 or H2TW; F^-1 = 1(x)1 - p(x)p/2 since (p(x)p)^2 = p(x)p.
inline std::pair<Tensor, Tensor> z2_twist(Field f = Field::rational())
{
    const auto p = z2_idempotent(f);
    const auto one = basis_vector(f, 2, 0);
    const auto pp = kron(p, p);
    return {kron(one, one) + pp, kron(one, one) - f.from_int(2).inverse() * pp};
}

/// F = 1(x)1 + x(x)x on SW4; F^-1 = 1(x)1 - x(x)x since x^2 = 0.
inline std::pair<Tensor, Tensor> sw4_twist(Field f = Field::rational())
{
    const auto one = basis_vector(f, 4, 0);
    const auto x = basis_vector(f, 4, 2);
    return {kron(one, one) + kron(x, x), kron(one, one) - kron(x, x)};
}

struct CatalogEntry {
    std::string name;
    QuasiHopfAlgebra H;
    std::optional<ModuleAlgebra> A;
    std::optional<ComoduleAlgebra> C;
    std::optional<Gauge> F;
};

inline QuasiHopfAlgebra catalog_algebra(const std::string& name, Field f)
{
    if (name == "KZ2") return make_kz2(f);
    if (name == "H2TW") return make_h2tw(f);
    if (name == "SW4") return make_sw4(f);
    throw InputError("unknown catalog algebra '" + name + "' (expected KZ2, H2TW or SW4)");
}

/// The structure the twist entry of X acts on: QS(k,X), or QS(H2TW,H2TW) since
/// k is not a comodule algebra over H2TW.
inline ComoduleAlgebra twist_comodule(const std::string& base, const QuasiHopfAlgebra& H)
{
    return base == "H2TW" ? regular_comodule(H) : trivial_comodule(H);
}

/// Builds the named entry over f. Structures are returned unverified; callers
/// run the verification suites.
inline CatalogEntry catalog_get(const std::string& name, Field f = Field::rational())
{
    auto args = [&](const std::string& head) -> std::optional<std::string> {
        if (!name.starts_with(head + "(") || !name.ends_with(")")) return std::nullopt;
        return name.substr(head.size() + 1, name.size() - head.size() - 2);
    };
    CatalogEntry e;
    e.name = name;
    if (auto x = args("TRIV")) {
        e.H = catalog_algebra(*x, f);
        e.A = trivial_module_algebra(e.H);
    } else if (auto x = args("QS")) {
        const auto comma = x->find(',');
        if (comma == std::string::npos) throw InputError("catalog entry '" + name + "': expected QS(C,H)");
        const auto c = x->substr(0, comma), h = x->substr(comma + 1);
        e.H = catalog_algebra(h, f);
        if (c == "k")
            e.C = trivial_comodule(e.H);
        else if (c == h)
            e.C = regular_comodule(e.H);
        else
            throw InputError("catalog entry '" + name + "': comodule algebra must be k or " + h);
    } else if (auto x = args("TWIST")) {
        e.H = catalog_algebra(*x, f);
        e.C = twist_comodule(*x, e.H);
        auto [F, F_inv] = *x == "SW4" ? sw4_twist(f) : z2_twist(f);
        e.F = Gauge{F, F_inv};
    } else {
        e.H = catalog_algebra(name, f);
    }
    return e;
}

/// Shipped entries: (name, field). QS(k,H2TW) is not among them because k is
/// not a comodule algebra over H2TW.
inline std::vector<std::pair<std::string, Field>> catalog_names()
{
    const auto Q = Field::rational();
    const auto F2 = Field::prime(2);
    return {{"KZ2", Q},           {"KZ2", F2},         {"H2TW", Q},          {"SW4", Q},
            {"TRIV(KZ2)", Q},     {"TRIV(KZ2)", F2},   {"TRIV(H2TW)", Q},    {"TRIV(SW4)", Q},
            {"QS(k,KZ2)", Q},     {"QS(k,SW4)", Q},    {"QS(KZ2,KZ2)", Q},   {"QS(H2TW,H2TW)", Q},
            {"TWIST(KZ2)", Q},    {"TWIST(H2TW)", Q},  {"TWIST(SW4)", Q}};
}

/// File stem: QS(k,KZ2) over fp:2 -> QS_k_KZ2@fp2.
inline std::string catalog_slug(const std::string& name, Field f)
{
    std::string s;
    for (char c : name) {
        if (c == '(' || c == ',') s += '_';
        else if (c != ')') s += c;
    }
    if (!f.is_rational()) s += "@fp" + std::to_string(f.characteristic());
    return s;
}

/// {kind, name, field, hopf, module_algebra | comodule_algebra, gauge}.
inline Json emit_catalog_entry(const CatalogEntry& e)
{
    Json j;
    j["kind"] = "catalog_entry";
    j["name"] = e.name;
    j["field"] = e.H.field().to_string();
    j["hopf"] = emit_quasi_hopf(e.H);
    if (e.A) j["module_algebra"] = emit_module_algebra(*e.A);
    if (e.C) j["comodule_algebra"] = emit_comodule_algebra(*e.C);
    if (e.F) j["gauge"] = emit_gauge(*e.F);
    return j;
}

inline CatalogEntry parse_catalog_entry(const Json& doc, std::optional<Field> field = std::nullopt)
{
    io::expect_kind(doc, "", "catalog_entry");
    const auto& name = io::field_of(doc, "name", "");
    if (!name.is_string()) throw InputError("name: expected a string");
    CatalogEntry e;
    e.name = name.get<std::string>();
    e.H = parse_quasi_hopf(io::field_of(doc, "hopf", ""), field, "hopf");
    if (doc.contains("module_algebra")) e.A = parse_module_algebra(doc["module_algebra"], field, "module_algebra");
    if (doc.contains("comodule_algebra")) e.C = parse_comodule_algebra(doc["comodule_algebra"], field, "comodule_algebra");
    if (doc.contains("gauge")) e.F = parse_gauge(doc["gauge"], field, "gauge");
    return e;
}

} // namespace qhopf
