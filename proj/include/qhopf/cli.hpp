#pragma once

// Command-line surface. run_command is the whole program minus process
// plumbing so that tests can drive it in-process.
//
// Exit codes: 0 all checks passed (verdicts such as "not Galois" are results),
// 1 a mathematical check failed, 2 input or usage error.

#include "qhopf/catalog.hpp"
#include "qhopf/quasismash.hpp"
#include "qhopf/twist.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace qhopf {

enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_input_error = 2 };

/// Structures gathered from the command's inputs.
struct Bundle {
    std::optional<QuasiHopfAlgebra> H;
    std::optional<ModuleAlgebra> A;
    std::optional<ComoduleAlgebra> C;
    std::optional<Gauge> F;

    void absorb(CatalogEntry e)
    {
        H = std::move(e.H);
        if (e.A) A = std::move(e.A);
        if (e.C) C = std::move(e.C);
        if (e.F) F = std::move(e.F);
    }

    const QuasiHopfAlgebra& hopf() const
    {
        if (!H) throw InputError("no quasi-Hopf algebra given (pass an algebra file or catalog:NAME)");
        return *H;
    }
};

/// Each input is catalog:NAME or a JSON file whose "kind" selects the slot.
inline Bundle resolve_inputs(const std::vector<std::string>& inputs, std::optional<Field> field)
{
    Bundle b;
    for (const auto& in : inputs) {
        if (in.starts_with("catalog:")) {
            b.absorb(catalog_get(in.substr(8), field.value_or(Field::rational())));
            continue;
        }
        const auto doc = read_json_file(in);
        const auto kind = doc.is_object() && doc.contains("kind") && doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";
        try {
            if (kind == "quasi_hopf")
                b.H = parse_quasi_hopf(doc, field);
            else if (kind == "module_algebra")
                b.A = parse_module_algebra(doc, field);
            else if (kind == "comodule_algebra")
                b.C = parse_comodule_algebra(doc, field);
            else if (kind == "gauge")
                b.F = parse_gauge(doc, field);
            else if (kind == "catalog_entry")
                b.absorb(parse_catalog_entry(doc, field));
            else
                throw InputError("kind: expected quasi_hopf, module_algebra, comodule_algebra, gauge or catalog_entry");
        } catch (const InputError& e) {
            throw InputError(in + ": " + e.what());
        } catch (const MathError& e) {
            throw InputError(in + ": " + e.what());
        }
    }
    return b;
}

/// Verifies H and whichever of A, C were given, and produces the module algebra
/// the later stages act on (A itself, or the quasi-smash of C).
struct Prepared {
    Report report;
    std::optional<ModuleAlgebra> A;
    std::optional<QuasiSmash> qs;
};

inline Prepared prepare(const Bundle& b, bool need_module_algebra)
{
    const auto& H = b.hopf();
    Prepared p{Report("inputs"), std::nullopt, std::nullopt};
    p.report.merge(verify_quasi_hopf(H), "H");
    if (b.C) {
        require_comodule_dim(H, *b.C);
        p.report.merge(verify_comodule_algebra(H, *b.C), "C");
        if (p.report.passed()) {
            p.qs = quasi_smash(H, *b.C);
            p.report.merge(p.qs->report, "quasi-smash");
            p.A = p.qs->algebra;
        }
    }
    if (b.A) {
        p.report.merge(verify_module_algebra(H, *b.A), "A");
        p.A = *b.A;
    }
    if (need_module_algebra && !b.A && !b.C) throw InputError("this command needs a module algebra or comodule algebra input");
    return p;
}

inline Json vector_json(const Vector& v) { return io::emit(v); }

// Commands ------------------------------------------------------------------

inline Report cmd_verify(const Bundle& b) { return prepare(b, false).report; }

inline Report cmd_derive(const Bundle& b)
{
    const auto& H = b.hopf();
    Report r("derived elements");
    r.merge(verify_quasi_hopf(H), "H");
    if (!r.passed()) return r;
    const auto D = compute_pq(H);
    r.merge(verify_pq_identities(H, D));
    const auto g = compute_gauge_f(H);
    r.merge(g.report, "gauge");
    if (g.report.passed()) {
        const auto uv = compute_UV(H, g, D);
        r.merge(verify_UV(H, uv));
        r.data()["U_L"] = io::emit(uv.U_L);
        r.data()["V_L"] = io::emit(uv.V_L);
        r.data()["U_R"] = io::emit(uv.U_R);
        r.data()["V_R"] = io::emit(uv.V_R);
    }
    r.data()["p_L"] = io::emit(D.p_L);
    r.data()["q_L"] = io::emit(D.q_L);
    r.data()["p_R"] = io::emit(D.p_R);
    r.data()["q_R"] = io::emit(D.q_R);
    r.data()["f"] = io::emit(g.f);
    r.data()["f_inv"] = io::emit(g.f_inv);
    return r;
}

inline Report cmd_integrals(const Bundle& b)
{
    const auto& H = b.hopf();
    Report r("integrals");
    r.merge(verify_quasi_hopf(H), "H");
    if (!r.passed()) return r;
    const auto d = compute_integral_data(H);
    r.merge(d.report);
    r.data()["integral_dim"] = d.integral_dim;
    r.data()["t"] = vector_json(d.t);
    r.data()["gamma"] = vector_json(d.gamma);
    r.data()["Lambda"] = vector_json(d.lambda);
    r.merge(verify_integral_identities(H, d.t));
    if (d.integral_dim == 1) r.merge(frobenius_theta_t(H, d).report, "frobenius");
    return r;
}

inline Report cmd_morita(const Bundle& b)
{
    auto p = prepare(b, true);
    Report r("Morita context");
    r.merge(p.report, "input");
    if (!r.passed()) return r;
    const auto s = make_setting(b.hopf(), *p.A);
    r.merge(phi_iso(s).report, "phi");
    const auto c = morita_context(s);
    r.merge(c.right.report, "right-action");
    r.merge(c.report);
    r.set_flag("pairing_B_surjective", c.pairing_B_surjective);
    r.set_flag("pairing_smash_surjective", c.pairing_smash_surjective);
    r.set_flag("pairing_smash_bijective", c.pairing_smash_bijective);
    return r;
}

inline Report cmd_galois(const Bundle& b)
{
    auto p = prepare(b, true);
    Report r("Galois maps");
    r.merge(p.report, "input");
    if (!r.passed()) return r;
    const auto s = make_setting(b.hopf(), *p.A);
    const auto g = can_maps(s);
    r.merge(g.report);
    r.add(theta_relation(s, g, morita_context(s)));
    r.set_flag("galois", g.bijective);
    r.data()["verdict"] = g.bijective ? "Galois" : "not Galois";
    return r;
}

inline Report cmd_quasismash(const Bundle& b)
{
    if (!b.C) throw InputError("quasismash needs a comodule algebra input");
    auto p = prepare(b, true);
    Report r("quasi-smash product");
    r.merge(p.report, "input");
    if (!r.passed()) return r;
    const auto& H = b.hopf();
    const auto g = can_maps(make_setting(H, p.qs->algebra));
    const auto inv = quasismash_can_inverse(H, *b.C, *p.qs, g);
    r.merge(inv.report);
    r.add(check_true("verdicts-agree", "consistency", inv.two_sided == g.bijective, "explicit inverse and rank verdict disagree"));
    r.merge(quasismash_total_integral(H, *b.C, *p.qs), "total-integral");
    r.set_flag("galois", g.bijective);
    r.data()["dim"] = p.qs->algebra.dim();
    r.data()["q_rho"] = io::emit(p.qs->q_rho);
    return r;
}

inline Report cmd_twist(const Bundle& b)
{
    if (!b.F) throw InputError("twist needs a gauge transformation input");
    auto p = prepare(b, true);
    Report r("gauge twist");
    r.merge(p.report, "input");
    if (!r.passed()) return r;
    const auto g = gauge_twist(b.hopf(), *p.A, b.F->F, b.F->F_inv);
    r.merge(g.report);
    r.set_flag("galois_before", g.galois_before);
    r.set_flag("total_integral_before", g.total_integral_before);
    r.data()["F_inv"] = io::emit(g.F_inv);
    return r;
}

inline Report cmd_suite(const Bundle& b)
{
    auto p = prepare(b, true);
    Report r("equivalence suite");
    r.merge(p.report, "input");
    if (!r.passed()) return r;
    r.merge(equivalence_suite(make_setting(b.hopf(), *p.A)).report);
    return r;
}

// Expected results ------------------------------------------------------------

/// The golden block stored with each catalog entry, recomputed from scratch.
inline Json expected_results(const CatalogEntry& e)
{
    Bundle b;
    b.absorb(e);
    Json j;
    const auto& H = b.hopf();
    j["axioms"] = verify_quasi_hopf(H).passed();
    const auto d = compute_integral_data(H);
    j["integral_dim"] = d.integral_dim;
    j["t"] = vector_json(d.t);
    j["gamma"] = vector_json(d.gamma);
    j["Lambda"] = vector_json(d.lambda);
    j["eps_t"] = H.eps(d.t).to_string();
    if (!b.A && !b.C) return j;

    auto p = prepare(b, true);
    j["inputs_verified"] = p.report.passed();
    if (!p.report.passed()) return j;
    const auto s = make_setting(H, *p.A);
    j["invariants_dim"] = s.B.basis.size();
    const auto g = can_maps(s);
    j["can_rank"] = g.can_rank;
    j["domain_dim"] = g.domain.dim();
    const auto suite = equivalence_suite(s);
    j["suite_passed"] = suite.report.passed();
    Json flags = Json::object();
    for (const auto& [k, v] : suite.report.flags())
        if (k.find('.') == std::string::npos) flags[k] = v;
    j["flags"] = std::move(flags);
    if (p.qs) j["can_inverse_two_sided"] = quasismash_can_inverse(H, *b.C, *p.qs, g).two_sided;
    if (b.F) {
        const auto t = gauge_twist(H, *p.A, b.F->F, b.F->F_inv);
        j["twist_passed"] = t.report.passed();
        j["galois_after_twist"] = t.galois_after;
        j["total_integral_after_twist"] = t.total_integral_after;
    }
    return j;
}

inline Json catalog_document(const std::string& name, Field f)
{
    const auto e = catalog_get(name, f);
    auto j = emit_catalog_entry(e);
    j["expected"] = expected_results(e);
    return j;
}

// Driver ------------------------------------------------------------------------

inline int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact verification of finite-dimensional quasi-Hopf algebras and their module algebras", "qhopf"};
    app.require_subcommand(1);
    std::string field_text;
    bool json = false;
    app.add_option("--field", field_text, "override the field: rational or fp:<p>");
    app.add_flag("--json", json, "emit the report as JSON");

    std::vector<std::string> inputs;
    std::function<Report(const Bundle&)> action;
    const std::vector<std::pair<std::string, std::pair<std::string, std::function<Report(const Bundle&)>>>> commands = {
        {"verify", {"check the quasi-Hopf, module and comodule algebra axioms", cmd_verify}},
        {"derive", {"p/q, gauge and U/V elements with their identities", cmd_derive}},
        {"integrals", {"left integrals, modular element and Frobenius isomorphism", cmd_integrals}},
        {"morita", {"Morita context between A#H and the invariants", cmd_morita}},
        {"galois", {"canonical Galois maps and verdict", cmd_galois}},
        {"quasismash", {"quasi-smash product, explicit Galois inverse, total integral", cmd_quasismash}},
        {"twist", {"gauge twist of H and A with the smash isomorphism", cmd_twist}},
        {"suite", {"equivalences between Galois, Morita and integral conditions", cmd_suite}},
    };
    for (const auto& [name, spec] : commands) {
        auto* sub = app.add_subcommand(name, spec.first)->fallthrough();
        sub->add_option("inputs", inputs, "files or catalog:NAME")->required();
        sub->callback([&action, fn = spec.second] { action = fn; });
    }
    std::string entry, out_path;
    bool list = false;
    auto* cat = app.add_subcommand("catalog", "emit a catalog entry with its expected results")->fallthrough();
    cat->add_option("name", entry, "entry name, e.g. QS(k,SW4)");
    cat->add_option("--out", out_path, "write to this file instead of stdout");
    cat->add_flag("--list", list, "list shipped entries");

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        std::optional<Field> field;
        if (!field_text.empty()) {
            try {
                field = Field::parse(field_text);
            } catch (const MathError& e) {
                throw InputError(std::string("--field: ") + e.what());
            }
        }
        if (cat->parsed()) {
            if (list) {
                for (const auto& [n, f] : catalog_names()) out << n << (f.is_rational() ? "" : " --field " + f.to_string()) << "\n";
                return exit_ok;
            }
            if (entry.empty()) throw InputError("catalog needs an entry name or --list");
            const auto text = canonical_text(catalog_document(entry, field.value_or(Field::rational())));
            if (out_path.empty()) {
                out << text;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw InputError(out_path + ": cannot write file");
                f << text;
            }
            return exit_ok;
        }
        const auto bundle = resolve_inputs(inputs, field);
        const auto report = action(bundle);
        out << (json ? canonical_text(emit_report(report)) : report_text(report));
        return report.passed() ? exit_ok : exit_check_failed;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
    }
    return exit_input_error;
}

} // namespace qhopf
