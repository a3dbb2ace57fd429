#pragma once

// JSON file formats and canonical emission.
//
// Scalars are strings in the exact grammar ("a", "-a", "a/b"). Sparse tensors
// are lists of entries [i1, ..., ik, "coef"] with 0-based indices in row-major
// order. Matrices are lists of rows. Every document carries "kind" and "field".
//
//   quasi_hopf        dim, basis, unit, mul[i][j], comul[i] (sparse n x n),
//                     counit, phi, phi_inv (sparse n x n x n), antipode
//                     (matrix, column i = S(e_i)), alpha, beta
//   module_algebra    dim, basis, unit, mul[i][j], action[h] (matrix)
//   comodule_algebra  dim, hopf_dim, basis, unit, mul[i][j], rho[a] (sparse
//                     dim x hopf_dim), phi_rho, phi_rho_inv (sparse
//                     dim x hopf_dim x hopf_dim)
//   gauge             dim, F, F_inv (sparse n x n; F_inv optional)

#include "qhopf/comodule.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qhopf {

using Json = nlohmann::ordered_json;

/// Malformed input: bad JSON, a missing or ill-typed field, inconsistent
/// dimensions. The message starts with the offending field path.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace io {

inline std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
inline std::string join(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline const Json& field_of(const Json& j, const std::string& key, const std::string& path)
{
    if (!j.is_object()) throw InputError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(join(path, key) + ": missing field");
    return *it;
}

inline const Json& array_of(const Json& j, const std::string& path, std::optional<std::size_t> size = std::nullopt)
{
    if (!j.is_array()) throw InputError(path + ": expected an array");
    if (size && j.size() != *size)
        throw InputError(path + ": expected " + std::to_string(*size) + " entries, got " + std::to_string(j.size()));
    return j;
}

inline std::size_t index_of(const Json& j, const std::string& path, std::size_t bound)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw InputError(path + ": expected a non-negative integer");
    const auto v = j.get<std::size_t>();
    if (v >= bound) throw InputError(path + ": index " + std::to_string(v) + " out of range (< " + std::to_string(bound) + ")");
    return v;
}

inline std::size_t dim_of(const Json& doc, const std::string& key, const std::string& path)
{
    const auto& j = field_of(doc, key, path);
    if (!j.is_number_unsigned() || j.get<std::size_t>() == 0) throw InputError(join(path, key) + ": expected a positive integer");
    return j.get<std::size_t>();
}

inline Scalar scalar_of(const Json& j, const std::string& path, Field f)
{
    if (!j.is_string()) throw InputError(path + ": scalars must be strings");
    try {
        return f.scalar(j.get<std::string>());
    } catch (const MathError& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline Vector vector_of(const Json& j, const std::string& path, Field f, std::size_t n)
{
    array_of(j, path, n);
    Vector v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar_of(j[i], join(path, i), f));
    return v;
}

inline Matrix matrix_of(const Json& j, const std::string& path, Field f, std::size_t rows, std::size_t cols)
{
    array_of(j, path, rows);
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto row = vector_of(j[r], join(path, r), f, cols);
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    }
    return m;
}

inline Tensor sparse_of(const Json& j, const std::string& path, Field f, const std::vector<std::size_t>& legs)
{
    array_of(j, path);
    Tensor t(f, legs);
    for (std::size_t e = 0; e < j.size(); ++e) {
        const auto p = join(path, e);
        const auto& entry = array_of(j[e], p, legs.size() + 1);
        MultiIndex idx(legs.size());
        for (std::size_t l = 0; l < legs.size(); ++l) idx[l] = index_of(entry[l], join(p, l), legs[l]);
        t[idx] += scalar_of(entry[legs.size()], join(p, legs.size()), f);
    }
    return t;
}

inline std::vector<std::string> names_of(const Json& j, const std::string& path, std::size_t n)
{
    array_of(j, path, n);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_string()) throw InputError(join(path, i) + ": expected a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

/// The file's field, or the override when given.
inline Field field_spec(const Json& doc, const std::string& path, std::optional<Field> override_field)
{
    const auto& j = field_of(doc, "field", path);
    if (!j.is_string()) throw InputError(join(path, "field") + ": expected a string");
    Field f;
    try {
        f = Field::parse(j.get<std::string>());
    } catch (const MathError& e) {
        throw InputError(join(path, "field") + ": " + e.what());
    }
    return override_field ? *override_field : f;
}

inline void expect_kind(const Json& doc, const std::string& path, const std::string& kind)
{
    const auto& j = field_of(doc, "kind", path);
    if (!j.is_string() || j.get<std::string>() != kind)
        throw InputError(join(path, "kind") + ": expected \"" + kind + "\", got " + j.dump());
}

inline FiniteAlgebra algebra_of(const Json& doc, const std::string& path, Field f, std::size_t n)
{
    auto basis = names_of(field_of(doc, "basis", path), join(path, "basis"), n);
    auto unit = vector_of(field_of(doc, "unit", path), join(path, "unit"), f, n);
    const auto mp = join(path, "mul");
    const auto& mul = array_of(field_of(doc, "mul", path), mp, n);
    std::vector<Vector> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = array_of(mul[i], join(mp, i), n);
        for (std::size_t k = 0; k < n; ++k) table[i * n + k] = vector_of(row[k], join(join(mp, i), k), f, n);
    }
    return FiniteAlgebra(f, std::move(basis), std::move(unit), std::move(table));
}

// Emission --------------------------------------------------------------------

inline Json emit(const Vector& v)
{
    Json j = Json::array();
    for (const auto& s : v) j.push_back(s.to_string());
    return j;
}

inline Json emit(const Matrix& m)
{
    Json j = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(emit(m.row(r)));
    return j;
}

inline Json emit(const Tensor& t)
{
    Json j = Json::array();
    t.for_each_nonzero([&](const MultiIndex& idx, const Scalar& c) {
        Json e = Json::array();
        for (auto i : idx) e.push_back(i);
        e.push_back(c.to_string());
        j.push_back(std::move(e));
    });
    return j;
}

inline void emit_algebra(Json& j, const FiniteAlgebra& A)
{
    j["basis"] = A.basis_names();
    j["unit"] = emit(A.unit());
    Json mul = Json::array();
    for (std::size_t i = 0; i < A.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < A.dim(); ++k) row.push_back(emit(A.product_of_basis(i, k)));
        mul.push_back(std::move(row));
    }
    j["mul"] = std::move(mul);
}

} // namespace io

// Documents ---------------------------------------------------------------------

inline QuasiHopfAlgebra parse_quasi_hopf(const Json& doc, std::optional<Field> field = std::nullopt, const std::string& path = "")
{
    using namespace io;
    expect_kind(doc, path, "quasi_hopf");
    const auto f = field_spec(doc, path, field);
    const auto n = dim_of(doc, "dim", path);
    auto alg = algebra_of(doc, path, f, n);
    const auto cp = join(path, "comul");
    const auto& cj = array_of(field_of(doc, "comul", path), cp, n);
    std::vector<Tensor> comul;
    for (std::size_t i = 0; i < n; ++i) comul.push_back(sparse_of(cj[i], join(cp, i), f, {n, n}));
    auto counit = vector_of(field_of(doc, "counit", path), join(path, "counit"), f, n);
    auto phi = sparse_of(field_of(doc, "phi", path), join(path, "phi"), f, {n, n, n});
    auto phi_inv = sparse_of(field_of(doc, "phi_inv", path), join(path, "phi_inv"), f, {n, n, n});
    auto S = matrix_of(field_of(doc, "antipode", path), join(path, "antipode"), f, n, n);
    auto alpha = vector_of(field_of(doc, "alpha", path), join(path, "alpha"), f, n);
    auto beta = vector_of(field_of(doc, "beta", path), join(path, "beta"), f, n);
    return QuasiHopfAlgebra(std::move(alg), std::move(comul), std::move(counit), std::move(phi), std::move(phi_inv), std::move(S),
                            std::move(alpha), std::move(beta));
}

inline Json emit_quasi_hopf(const QuasiHopfAlgebra& H)
{
    Json j;
    j["kind"] = "quasi_hopf";
    j["field"] = H.field().to_string();
    j["dim"] = H.dim();
    io::emit_algebra(j, H.algebra());
    Json comul = Json::array();
    for (const auto& t : H.comul()) comul.push_back(io::emit(t));
    j["comul"] = std::move(comul);
    j["counit"] = io::emit(H.counit());
    j["phi"] = io::emit(H.phi());
    j["phi_inv"] = io::emit(H.phi_inv());
    j["antipode"] = io::emit(H.antipode());
    j["alpha"] = io::emit(H.alpha());
    j["beta"] = io::emit(H.beta());
    return j;
}

inline ModuleAlgebra parse_module_algebra(const Json& doc, std::optional<Field> field = std::nullopt, const std::string& path = "")
{
    using namespace io;
    expect_kind(doc, path, "module_algebra");
    const auto f = field_spec(doc, path, field);
    const auto m = dim_of(doc, "dim", path);
    auto alg = algebra_of(doc, path, f, m);
    const auto ap = join(path, "action");
    const auto& aj = array_of(field_of(doc, "action", path), ap);
    std::vector<Matrix> action;
    for (std::size_t h = 0; h < aj.size(); ++h) action.push_back(matrix_of(aj[h], join(ap, h), f, m, m));
    return ModuleAlgebra(std::move(alg), std::move(action));
}

inline Json emit_module_algebra(const ModuleAlgebra& A)
{
    Json j;
    j["kind"] = "module_algebra";
    j["field"] = A.field().to_string();
    j["dim"] = A.dim();
    io::emit_algebra(j, A.algebra());
    Json action = Json::array();
    for (const auto& m : A.action()) action.push_back(io::emit(m));
    j["action"] = std::move(action);
    return j;
}

inline ComoduleAlgebra parse_comodule_algebra(const Json& doc, std::optional<Field> field = std::nullopt, const std::string& path = "")
{
    using namespace io;
    expect_kind(doc, path, "comodule_algebra");
    const auto f = field_spec(doc, path, field);
    const auto c = dim_of(doc, "dim", path);
    const auto n = dim_of(doc, "hopf_dim", path);
    auto alg = algebra_of(doc, path, f, c);
    const auto rp = join(path, "rho");
    const auto& rj = array_of(field_of(doc, "rho", path), rp, c);
    std::vector<Tensor> rho;
    for (std::size_t a = 0; a < c; ++a) rho.push_back(sparse_of(rj[a], join(rp, a), f, {c, n}));
    auto phi = sparse_of(field_of(doc, "phi_rho", path), join(path, "phi_rho"), f, {c, n, n});
    auto phi_inv = sparse_of(field_of(doc, "phi_rho_inv", path), join(path, "phi_rho_inv"), f, {c, n, n});
    return ComoduleAlgebra(std::move(alg), std::move(rho), std::move(phi), std::move(phi_inv));
}

inline Json emit_comodule_algebra(const ComoduleAlgebra& C)
{
    Json j;
    j["kind"] = "comodule_algebra";
    j["field"] = C.field().to_string();
    j["dim"] = C.dim();
    j["hopf_dim"] = C.dim_H();
    io::emit_algebra(j, C.algebra());
    Json rho = Json::array();
    for (const auto& t : C.rho()) rho.push_back(io::emit(t));
    j["rho"] = std::move(rho);
    j["phi_rho"] = io::emit(C.phi_rho());
    j["phi_rho_inv"] = io::emit(C.phi_rho_inv());
    return j;
}

struct Gauge {
    Tensor F;
    std::optional<Tensor> F_inv;
};

inline Gauge parse_gauge(const Json& doc, std::optional<Field> field = std::nullopt, const std::string& path = "")
{
    using namespace io;
    expect_kind(doc, path, "gauge");
    const auto f = field_spec(doc, path, field);
    const auto n = dim_of(doc, "dim", path);
    Gauge g{sparse_of(field_of(doc, "F", path), join(path, "F"), f, {n, n}), std::nullopt};
    if (doc.contains("F_inv")) g.F_inv = sparse_of(doc["F_inv"], join(path, "F_inv"), f, {n, n});
    return g;
}

inline Json emit_gauge(const Gauge& g)
{
    Json j;
    j["kind"] = "gauge";
    j["field"] = g.F.field().to_string();
    j["dim"] = g.F.leg_dim(0);
    j["F"] = io::emit(g.F);
    if (g.F_inv) j["F_inv"] = io::emit(*g.F_inv);
    return j;
}

// Canonical text ----------------------------------------------------------------

namespace io {

inline void dump_canonical(std::ostringstream& os, const Json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    if (j.is_object() && !j.empty()) {
        os << "{\n";
        std::size_t k = 0;
        for (const auto& [key, v] : j.items()) {
            os << inner << Json(key).dump() << ": ";
            dump_canonical(os, v, indent + 1);
            os << (++k < j.size() ? ",\n" : "\n");
        }
        os << pad << "}";
    } else if (j.is_array() && !j.empty() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_object(); })) {
        os << "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            os << inner;
            dump_canonical(os, j[k], indent + 1);
            os << (k + 1 < j.size() ? ",\n" : "\n");
        }
        os << pad << "]";
    } else {
        os << j.dump();
    }
}

} // namespace io

/// Objects one key per line, scalar arrays on a single line, trailing newline.
inline std::string canonical_text(const Json& j)
{
    std::ostringstream os;
    io::dump_canonical(os, j, 0);
    os << "\n";
    return os.str();
}

inline Json parse_json_text(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(source + ": " + e.what());
    }
}

inline Json read_json_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

// Reports -----------------------------------------------------------------------

inline Json emit_report(const Report& r)
{
    Json j;
    j["title"] = r.title();
    j["passed"] = r.passed();
    Json checks = Json::array();
    for (const auto& c : r.checks()) {
        Json e;
        e["name"] = c.name;
        e["tag"] = c.tag;
        e["status"] = c.passed ? "pass" : "fail";
        if (!c.passed) {
            e["witness"] = c.witness;
            if (!c.lhs.empty() || !c.rhs.empty()) {
                e["lhs"] = c.lhs;
                e["rhs"] = c.rhs;
            }
            if (!c.detail.empty()) e["detail"] = c.detail;
        }
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    Json flags = Json::object();
    for (const auto& [k, v] : r.flags()) flags[k] = v;
    j["flags"] = std::move(flags);
    j["data"] = r.data();
    return j;
}

inline std::string report_text(const Report& r)
{
    std::ostringstream os;
    os << r.title() << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : r.checks()) {
        os << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.name << "  (" << c.tag << ")";
        if (!c.passed) {
            if (!c.witness.empty()) os << " at " << Json(c.witness).dump();
            if (!c.lhs.empty() || !c.rhs.empty()) os << "\n        lhs " << Json(c.lhs).dump() << "\n        rhs " << Json(c.rhs).dump();
            if (!c.detail.empty()) os << "\n        " << c.detail;
        }
        os << "\n";
    }
    for (const auto& [k, v] : r.flags()) os << "  flag " << k << " = " << (v ? "true" : "false") << "\n";
    for (const auto& [k, v] : r.data().items()) os << "  " << k << " = " << v.dump() << "\n";
    return os.str();
}

} // namespace qhopf
