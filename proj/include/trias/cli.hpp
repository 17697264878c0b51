#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"
#include "solver.hpp"

namespace trias {
namespace cli {

struct GlobalOptions {
    std::string field_text = "Qi";
    std::string out;
    unsigned jobs = 1;

    FieldDescriptor field() const { return FieldDescriptor::parse(field_text); }
};

inline void write_text(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw InputError("cannot write " + out);
    f << text;
}

inline void emit_report(const Json& report, const GlobalOptions& opt) {
    write_text(report.dump(2) + "\n", opt.out);
}

inline Json finding(const std::string& kind) {
    Json f;
    f["kind"] = kind;
    return f;
}

template <class K>
Json vec_json(const Vec<K>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(scalar_to_json(x));
    return a;
}

inline std::string assignment_text(const std::map<char, size_t>& env, size_t dim) {
    std::string s = "(";
    bool first = true;
    for (const auto& kv : env) {
        if (!first) s += ", ";
        s += basis_symbol(dim, kv.second);
        first = false;
    }
    return s + ")";
}

// ---- check ----

template <class K>
int check_payload(const Trialgebra<K>& A, const AxiomPack& pack, Json& payload, Json& findings) {
    size_t n = A.dim();
    Json rows = Json::array();
    size_t passed = 0;
    for (const auto& row : check_pack(A, pack)) {
        Json r;
        r["identity"] = row.identity;
        r["status"] = row.violations.empty() ? "pass" : "fail";
        if (!row.violations.empty()) {
            Json vs = Json::array();
            for (const auto& v : row.violations) {
                Json vj;
                vj["assignment"] = assignment_text(v.assignment, n);
                vj["lhs"] = vec_json(v.lhs);
                vj["rhs"] = vec_json(v.rhs);
                vs.push_back(std::move(vj));
            }
            r["violations"] = std::move(vs);
            Json f = finding("identity-violation");
            f["identity"] = row.identity;
            f["count"] = row.violations.size();
            f["first_assignment"] = assignment_text(row.violations.front().assignment, n);
            findings.push_back(std::move(f));
        } else {
            ++passed;
        }
        rows.push_back(std::move(r));
    }
    payload["dim"] = n;
    payload["passed"] = passed;
    payload["total"] = rows.size();
    payload["identities"] = std::move(rows);
    return findings.empty() ? 0 : 1;
}

inline int run_check(const std::string& file, const std::string& pack_name,
                     const GlobalOptions& opt, const std::string& cmdline) {
    Json doc = read_json_file(file);
    FieldDescriptor fd = algebra_field_from_json(doc);
    AxiomPack pack = pack_by_name(pack_name);
    Json payload, findings = Json::array();
    payload["file"] = file;
    payload["pack"] = pack.name;
    payload["field"] = fd.str();
    int code = fd.kind == FieldKind::Qi
                   ? check_payload(qi_algebra_from_json(doc), pack, payload, findings)
                   : check_payload(fp_algebra_from_json(doc, fd.p), pack, payload, findings);
    emit_report(report_envelope(cmdline, payload, findings, code), opt);
    return code;
}

// ---- catalog ----

inline Json entry_summary(const CatalogEntry& e) {
    Json j;
    j["id"] = e.id;
    j["dim"] = e.dim;
    j["group"] = "As_" + std::to_string(e.dim) + "^" + std::to_string(e.group);
    Json params = Json::array();
    for (const auto& p : e.params) {
        Json pj;
        pj["name"] = p.name;
        pj["nonzero"] = p.nonzero;
        pj["dependent"] = p.dependent;
        params.push_back(std::move(pj));
    }
    j["params"] = std::move(params);
    Json cons = Json::array();
    auto names = e.names();
    for (const auto& c : e.constraints) cons.push_back(c.render(names));
    j["constraints"] = std::move(cons);
    return j;
}

inline int run_catalog_list(int dim, const GlobalOptions& opt, const std::string& cmdline) {
    Json payload;
    Json classes = Json::array();
    for (size_t d : {1, 2}) {
        if (dim != 0 && (size_t)dim != d) continue;
        for (const auto& e : catalog_entries(d)) classes.push_back(entry_summary(e));
    }
    Json assoc = Json::array();
    for (const auto& a : as_catalog()) {
        if (dim != 0 && (size_t)dim != a.dim) continue;
        Json aj;
        aj["id"] = a.id;
        aj["dim"] = a.dim;
        assoc.push_back(std::move(aj));
    }
    payload["classes"] = std::move(classes);
    payload["associative"] = std::move(assoc);
    payload["total"] = payload["classes"].size();
    emit_report(report_envelope(cmdline, payload, Json::array(), 0), opt);
    return 0;
}

inline Json poly_table_json(const CatalogEntry& e, OpKind op) {
    auto names = e.names();
    Json ti = Json::array();
    for (size_t i = 0; i < e.dim; ++i) {
        Json tj = Json::array();
        for (size_t j = 0; j < e.dim; ++j) {
            Json tk = Json::array();
            for (size_t k = 0; k < e.dim; ++k)
                tk.push_back(e.tab[(size_t)op][i][j][k].render(names));
            tj.push_back(std::move(tk));
        }
        ti.push_back(std::move(tj));
    }
    return ti;
}

inline const CatalogEntry* try_find_entry(const std::string& id) {
    for (size_t d : {1, 2})
        for (const auto& e : catalog_entries(d))
            if (e.id == id) return &e;
    return nullptr;
}

inline int run_catalog_show(const std::string& id, const GlobalOptions& opt,
                            const std::string& cmdline) {
    Json payload;
    if (const CatalogEntry* e = try_find_entry(id)) {
        payload = entry_summary(*e);
        Json ops;
        ops["vdash"] = poly_table_json(*e, OpKind::Vdash);
        ops["dashv"] = poly_table_json(*e, OpKind::Dashv);
        ops["perp"] = poly_table_json(*e, OpKind::Perp);
        payload["ops"] = std::move(ops);
        Json samples = Json::array();
        for (const auto& tuple : e->qi_samples) {
            Json t = Json::array();
            for (const auto& v : tuple) t.push_back(param_str(v));
            samples.push_back(std::move(t));
        }
        payload["designated_samples"] = std::move(samples);
    } else {
        const AsEntry& a = find_as(id);  // throws InputError when unknown
        payload["id"] = a.id;
        payload["dim"] = a.dim;
        Json ti = Json::array();
        for (size_t i = 0; i < a.dim; ++i) {
            Json tj = Json::array();
            for (size_t j = 0; j < a.dim; ++j) {
                Json tk = Json::array();
                for (size_t k = 0; k < a.dim; ++k) tk.push_back(a.table[i][j][k]);
                tj.push_back(std::move(tk));
            }
            ti.push_back(std::move(tj));
        }
        payload["vdash"] = std::move(ti);
    }
    emit_report(report_envelope(cmdline, payload, Json::array(), 0), opt);
    return 0;
}

// a segment without '=' continues the previous value, so complex scalars can
// be written in their usual "re,im" form: alpha=1,gamma=0,1 gives gamma = i
inline std::map<std::string, std::string> parse_param_list(const std::string& text) {
    std::map<std::string, std::string> out;
    if (text.empty()) return out;
    std::istringstream ss(text);
    std::string item, last;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            if (eq == 0 || last.empty())
                throw InputError("parameter list must look like name=value[,name=value...]: \"" +
                                 item + "\"");
            out[last] += "," + item;
            continue;
        }
        last = item.substr(0, eq);
        out[last] = item.substr(eq + 1);
    }
    return out;
}

inline int run_catalog_instantiate(const std::string& id, const std::string& params_text,
                                   const GlobalOptions& opt, const std::string& cmdline) {
    const CatalogEntry& e = find_entry(id);  // throws InputError when unknown
    auto kv = parse_param_list(params_text);
    FieldDescriptor fd = opt.field();
    Json out;
    if (fd.kind == FieldKind::Qi) {
        std::map<std::string, GaussRat> vals;
        for (const auto& p : kv) vals[p.first] = parse_qi_param(p.second);
        out = algebra_to_json(instantiate_named<GaussRat>(e, vals, fd));
    } else {
        std::map<std::string, FpElem> vals;
        for (const auto& p : kv) vals[p.first] = parse_fp_param(p.second, fd.p);
        out = algebra_to_json(instantiate_named<FpElem>(e, vals, fd));
    }
    write_text(out.dump(2) + "\n", opt.out);
    return 0;
}

inline int run_catalog_validate(int dim, size_t samples, const GlobalOptions& opt,
                                const std::string& cmdline) {
    std::vector<size_t> dims = dim == 0 ? std::vector<size_t>{1, 2}
                                        : std::vector<size_t>{(size_t)dim};
    ValidationReport rep = validate_catalog(opt.field(), samples, dims);
    Json payload, findings = Json::array();
    payload["field"] = rep.field;
    payload["samples_per_param"] = samples;
    payload["classes_total"] = rep.classes_total;
    payload["classes_passed"] = rep.classes_passed;
    payload["failing_sample_pairs"] = rep.failing_sample_pairs;
    Json rows = Json::array();
    for (const auto& ev : rep.entries) {
        Json r;
        r["id"] = ev.id;
        r["samples"] = ev.samples;
        r["failing_samples"] = ev.failing_samples;
        r["status"] = ev.pass ? "pass" : "fail";
        if (ev.first_failure) {
            const auto& ff = *ev.first_failure;
            Json fj;
            Json pj = Json::object();
            for (const auto& p : ff.params) pj[p.first] = p.second;
            fj["params"] = std::move(pj);
            fj["identity"] = ff.identity;
            fj["assignment"] = ff.assignment;
            fj["lhs"] = ff.lhs;
            fj["rhs"] = ff.rhs;
            r["first_failure"] = fj;

            Json f = finding("identity-violation");
            f["class"] = ev.id;
            f["failing_samples"] = ev.failing_samples;
            f["instance"] = std::move(fj);
            findings.push_back(std::move(f));
        }
        rows.push_back(std::move(r));
    }
    payload["entries"] = std::move(rows);
    int code = findings.empty() ? 0 : 1;
    emit_report(report_envelope(cmdline, payload, findings, code), opt);
    return code;
}

// ---- solve ----

inline int run_solve(const std::string& as_id, size_t max_splits, const GlobalOptions& opt,
                     const std::string& cmdline) {
    SolveResult R = simplify_solve(find_as(as_id), max_splits);
    auto names = unknown_names();
    Json payload, findings = Json::array();
    payload["vdash"] = R.as_id;
    payload["dim"] = R.dim;
    payload["raw_count"] = R.raw.size();
    Json raw = Json::array();
    for (const auto& c : R.raw) {
        Json cj;
        cj["constraint"] = c.p.render(names);
        cj["identity"] = c.identity;
        cj["assignment"] = c.assignment;
        cj["component"] = c.component;
        raw.push_back(std::move(cj));
    }
    payload["raw"] = std::move(raw);
    Json elims = Json::array();
    for (const auto& e : R.eliminations) {
        Json ej;
        ej["unknown"] = unknown_name(e.var);
        ej["value"] = e.value.render(names);
        ej["from"] = e.source;
        elims.push_back(std::move(ej));
    }
    payload["eliminations"] = std::move(elims);
    Json pruned = Json::array();
    for (const auto& p : R.pruned) pruned.push_back(p.render(names));
    payload["pruned"] = std::move(pruned);
    Json cp = Json::array();
    for (const auto& p : R.checkpoint) cp.push_back(p.render(names));
    payload["checkpoint"] = std::move(cp);
    Json fams = Json::array();
    for (const auto& f : R.families) {
        Json fj;
        Json assign = Json::object();
        for (const auto& kv : f.assign) assign[unknown_name(kv.first)] = kv.second.render(names);
        fj["assignments"] = std::move(assign);
        Json free = Json::array();
        for (uint32_t v : f.free_vars(R.universe)) free.push_back(unknown_name(v));
        fj["free"] = std::move(free);
        Json res = Json::array();
        for (const auto& p : f.residual) res.push_back(p.render(names));
        fj["residual"] = std::move(res);
        fj["path"] = f.path;
        fj["resolved"] = f.resolved;
        fams.push_back(std::move(fj));
    }
    payload["families"] = std::move(fams);
    payload["splits_used"] = R.splits_used;
    payload["budget_exhausted"] = R.budget_exhausted;
    if (R.budget_exhausted) {
        Json f = finding("split-budget-exhausted");
        f["max_splits"] = max_splits;
        findings.push_back(std::move(f));
    }
    int code = findings.empty() ? 0 : 1;
    emit_report(report_envelope(cmdline, payload, findings, code), opt);
    return code;
}

// ---- enumerate ----

inline int run_enumerate(const std::string& as_id, const GlobalOptions& opt) {
    FieldDescriptor fd = opt.field();
    if (fd.kind != FieldKind::Fp)
        throw InputError("enumerate requires a finite field (--field Fp:<p>)");
    Enumeration en = enumerate_fp(find_as(as_id), fd.p);
    std::string lines;
    for (const auto& sc : en.algebras) {
        Trialgebra<FpElem> A{std::nullopt, sc, std::nullopt};
        lines += algebra_to_json(A).dump() + "\n";
    }
    write_text(lines, opt.out);
    return 0;
}

// ---- iso ----

template <class K>
void iso_payload(const Trialgebra<K>& A, const Trialgebra<K>& B, bool exhaustive, Json& payload,
                 Json& findings) {
    IsoResult<K> r;
    if constexpr (std::is_same_v<K, FpElem>) {
        (void)exhaustive;  // the finite-field decision is exhaustive already
        r = iso_decide(A, B);
    } else {
        if (exhaustive)
            throw InputError("--exhaustive is only available over finite fields");
        r = iso_decide(A, B);
    }
    payload["result"] = r.kind == IsoKind::Isomorphic      ? "Isomorphic"
                        : r.kind == IsoKind::NotIsomorphic ? "NotIsomorphic"
                                                           : "Unknown";
    payload["method"] = r.method;
    payload["detail"] = r.detail;
    if (r.witness) payload["witness"] = matrix_to_json(*r.witness);
    if (r.kind == IsoKind::Unknown) {
        Json f = finding("undecided");
        f["detail"] = r.detail;
        findings.push_back(std::move(f));
    }
}

inline int run_iso(const std::string& file_a, const std::string& file_b, bool exhaustive,
                   const GlobalOptions& opt, const std::string& cmdline) {
    Json da = read_json_file(file_a), db = read_json_file(file_b);
    FieldDescriptor fa = algebra_field_from_json(da), fb = algebra_field_from_json(db);
    if (!(fa.kind == fb.kind && fa.p == fb.p))
        throw FieldMismatchError("algebras live over different fields: " + fa.str() + " vs " +
                                 fb.str());
    Json payload, findings = Json::array();
    payload["a"] = file_a;
    payload["b"] = file_b;
    payload["field"] = fa.str();
    if (fa.kind == FieldKind::Qi)
        iso_payload(qi_algebra_from_json(da), qi_algebra_from_json(db), exhaustive, payload,
                    findings);
    else
        iso_payload(fp_algebra_from_json(da, fa.p), fp_algebra_from_json(db, fb.p), exhaustive,
                    payload, findings);
    int code = findings.empty() ? 0 : 1;
    emit_report(report_envelope(cmdline, payload, findings, code), opt);
    return code;
}

// ---- audit ----

inline size_t parse_params_mode(const std::string& text, bool finite_field) {
    if (text == "all") {
        if (!finite_field)
            throw InputError("--params all needs a finite field; use sample:<k> over Qi");
        return 0;
    }
    if (text.rfind("sample:", 0) == 0) {
        size_t k = 0;
        try {
            k = std::stoul(text.substr(7));
        } catch (...) {
            throw InputError("bad --params value: " + text);
        }
        if (k == 0) throw InputError("sample count must be positive");
        return k;
    }
    throw InputError("--params must be \"all\" or \"sample:<k>\": " + text);
}

template <class K>
int audit_payload(const AuditReport<K>& rep, Json& payload, Json& findings) {
    payload["instances"] = rep.labels.size();
    payload["labels"] = rep.labels;
    payload["pairs"] = rep.rows.size();

    std::map<size_t, const LiftAttempt*> lift_by_row;
    for (const auto& l : rep.lifts) lift_by_row[l.row] = &l;

    auto pair_json = [&](size_t idx, bool with_lift) {
        const auto& row = rep.rows[idx];
        Json j;
        j["a"] = rep.labels[row.a];
        j["b"] = rep.labels[row.b];
        j["method"] = row.result.method;
        if (row.result.witness) j["witness"] = matrix_to_json(*row.result.witness);
        if (with_lift) {
            auto it = lift_by_row.find(idx);
            if (it != lift_by_row.end()) {
                Json lj;
                lj["verified_over_qi"] = it->second->verified;
                lj["note"] = it->second->note;
                j["lift"] = std::move(lj);
            }
        }
        return j;
    };

    Json collisions = Json::array();
    for (size_t idx : rep.collisions) {
        collisions.push_back(pair_json(idx, true));
        Json f = finding("iso-collision");
        f["a"] = rep.labels[rep.rows[idx].a];
        f["b"] = rep.labels[rep.rows[idx].b];
        findings.push_back(std::move(f));
    }
    payload["collisions"] = std::move(collisions);

    Json within = Json::array();
    for (size_t idx : rep.within_class) within.push_back(pair_json(idx, false));
    payload["within_class"] = std::move(within);

    Json unknown = Json::array();
    for (size_t idx : rep.unknown) {
        const auto& row = rep.rows[idx];
        Json j;
        j["a"] = rep.labels[row.a];
        j["b"] = rep.labels[row.b];
        j["detail"] = row.result.detail;
        unknown.push_back(std::move(j));
        Json f = finding("undecided");
        f["a"] = rep.labels[row.a];
        f["b"] = rep.labels[row.b];
        findings.push_back(std::move(f));
    }
    payload["unknown"] = std::move(unknown);

    payload["grouping_ok"] = rep.grouping_ok;
    payload["grouping_violations"] = rep.grouping_violations;
    for (const auto& g : rep.grouping_violations) {
        Json f = finding("grouping-violation");
        f["detail"] = g;
        findings.push_back(std::move(f));
    }
    return findings.empty() ? 0 : 1;
}

inline int run_audit(size_t dim, const std::string& params_mode, const GlobalOptions& opt,
                     const std::string& cmdline) {
    FieldDescriptor fd = opt.field();
    Json payload, findings = Json::array();
    payload["field"] = fd.str();
    payload["dim"] = dim;
    payload["params"] = params_mode;
    int code;
    if (fd.kind == FieldKind::Qi) {
        size_t k = parse_params_mode(params_mode, false);
        auto insts = audit_instances_qi(dim, k);
        auto rep = audit_pairwise(insts, opt.jobs);
        code = audit_payload(rep, payload, findings);
    } else {
        size_t k = parse_params_mode(params_mode, true);
        auto insts = audit_instances_fp(dim, fd.p, k);
        auto rep = audit_pairwise(insts, opt.jobs);
        code = audit_payload(rep, payload, findings);
    }
    emit_report(report_envelope(cmdline, payload, findings, code), opt);
    return code;
}

// ---- cross-check ----

inline int run_cross_check(const std::string& as_id, const GlobalOptions& opt,
                           const std::string& cmdline) {
    FieldDescriptor fd = opt.field();
    if (fd.kind != FieldKind::Fp)
        throw InputError("cross-check requires a finite field (--field Fp:<p>)");
    CrossCheckReport rep = cross_check(find_as(as_id), fd.p);
    Json payload, findings = Json::array();
    payload["vdash"] = rep.as_id;
    payload["field"] = fd.str();
    payload["enumerated"] = rep.enumerated;
    payload["instances"] = rep.instances;
    payload["unmatched_enumerated"] = rep.unmatched_enumerated;
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
        Json rj;
        rj["instance"] = row.label;
        rj["satisfies_axioms"] = row.valid;
        rj["hits"] = row.hits;
        rows.push_back(std::move(rj));
    }
    payload["rows"] = std::move(rows);
    payload["never_hit"] = rep.never_hit_labels;
    for (size_t idx : rep.unmatched_indices) {
        Json f = finding("completeness-gap");
        f["enumerated_index"] = idx;
        findings.push_back(std::move(f));
    }
    for (const auto& row : rep.rows) {
        if (row.hits > 0) continue;
        Json f = finding(row.valid ? "never-hit" : "invalid-instance");
        f["instance"] = row.label;
        findings.push_back(std::move(f));
    }
    int code = findings.empty() ? 0 : 1;
    emit_report(report_envelope(cmdline, payload, findings, code), opt);
    return code;
}

// ---- dsl parse ----

inline int run_dsl_parse(const std::string& file, const std::string& expr,
                         const GlobalOptions& opt, const std::string& cmdline) {
    std::vector<std::pair<std::string, std::string>> sources;  // (location, text)
    if (!expr.empty()) {
        sources.emplace_back("<expr>", expr);
    } else {
        std::ifstream in(file);
        if (!in) throw InputError("cannot open " + file);
        std::string line;
        size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            size_t b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            size_t e = line.find_last_not_of(" \t\r");
            sources.emplace_back(file + ":" + std::to_string(lineno),
                                 line.substr(b, e - b + 1));
        }
    }
    Json payload;
    Json ids = Json::array();
    for (const auto& [loc, text] : sources) {
        Identity id;
        try {
            id = parse_identity(text);
        } catch (const ParseError& e) {
            throw InputError(loc + ": " + e.what());
        }
        Json j;
        j["input"] = text;
        j["rendered"] = render_identity(id);
        j["arity"] = id.arity;
        std::vector<OpKind> ops;
        collect_ops(id.lhs, ops);
        collect_ops(id.rhs, ops);
        std::set<std::string> opset;
        for (auto op : ops) opset.insert(op_name(op));
        j["ops"] = std::vector<std::string>(opset.begin(), opset.end());
        ids.push_back(std::move(j));
    }
    payload["source"] = expr.empty() ? file : "<expr>";
    payload["count"] = ids.size();
    payload["identities"] = std::move(ids);
    emit_report(report_envelope(cmdline, payload, Json::array(), 0), opt);
    return 0;
}

// ---- driver ----

inline std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += " ";
        s += argv[i];
    }
    return s;
}

inline int run(int argc, char** argv) {
    CLI::App app{"exact structure-constant toolkit for triassociative algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // let --field/-o/--jobs appear after the subcommand

    GlobalOptions opt;
    app.add_option("--field", opt.field_text, "scalar field: Qi or Fp:<p>")
        ->capture_default_str();
    app.add_option("-o,--output", opt.out, "write the report to a file instead of stdout");
    app.add_option("--jobs", opt.jobs, "worker threads for pairwise audits")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();

    std::string cmdline = join_args(argc, argv);

    // check
    auto* check = app.add_subcommand(
        "check", "verify an algebra file against an axiom pack (defining identities)");
    std::string check_file, check_pack_name = "trias";
    check->add_option("file", check_file, "algebra JSON file")->required();
    check->add_option("--pack", check_pack_name,
                      "axiom pack: trias, dias, a single identity name, or assoc:<op>")
        ->capture_default_str();

    // catalog
    auto* catalog = app.add_subcommand("catalog", "the shipped classification catalogs");
    catalog->require_subcommand(1);
    auto* cat_list = catalog->add_subcommand("list", "list catalog classes");
    int cat_dim = 0;
    cat_list->add_option("--dim", cat_dim, "restrict to one dimension")->check(CLI::Range(1, 2));
    auto* cat_show = catalog->add_subcommand("show", "show one class in full");
    std::string show_id;
    cat_show->add_option("id", show_id, "class id, e.g. Trias_2^14 or As_2^2")->required();
    auto* cat_inst = catalog->add_subcommand(
        "instantiate", "emit a concrete algebra file for a class at given parameters");
    std::string inst_id, inst_params;
    cat_inst->add_option("id", inst_id, "class id")->required();
    cat_inst->add_option("--params", inst_params, "name=value[,name=value...]");
    auto* cat_val = catalog->add_subcommand(
        "validate", "check every catalog class against all defining identities");
    int val_dim = 0;
    size_t val_samples = 3;
    cat_val->add_option("--dim", val_dim, "restrict to one dimension")->check(CLI::Range(1, 2));
    cat_val->add_option("--samples", val_samples, "sample points per free parameter")
        ->capture_default_str();

    // solve
    auto* solve = app.add_subcommand(
        "solve", "replay the constraint-based classification for a fixed |- structure");
    std::string solve_id;
    size_t solve_splits = 16;
    solve->add_option("--vdash", solve_id, "associative class id, e.g. As_2^2")->required();
    solve->add_option("--max-splits", solve_splits, "case-split budget")->capture_default_str();

    // enumerate
    auto* enumerate = app.add_subcommand(
        "enumerate", "brute-force all triassociative tables over F_p for a fixed |- (JSONL)");
    std::string enum_id;
    enumerate->add_option("--vdash", enum_id, "associative class id")->required();

    // iso
    auto* iso = app.add_subcommand("iso", "decide whether two algebra files are isomorphic");
    std::string iso_a, iso_b;
    bool iso_exh = false;
    iso->add_option("a", iso_a, "first algebra JSON file")->required();
    iso->add_option("b", iso_b, "second algebra JSON file")->required();
    iso->add_flag("--exhaustive", iso_exh, "sweep all invertible matrices (finite fields)");

    // audit
    auto* audit = app.add_subcommand(
        "audit", "pairwise isomorphism audit across catalog instantiations");
    size_t audit_dim = 2;
    std::string audit_params = "sample:2";
    audit->add_option("--dim", audit_dim, "catalog dimension")->check(CLI::Range(1, 2));
    audit->add_option("--params", audit_params, "\"all\" (finite fields) or \"sample:<k>\"")
        ->capture_default_str();

    // cross-check
    auto* cc = app.add_subcommand(
        "cross-check", "compare the F_p enumeration against catalog instantiations");
    std::string cc_id;
    cc->add_option("--vdash", cc_id, "associative class id")->required();

    // dsl
    auto* dsl = app.add_subcommand("dsl", "identity-language utilities");
    dsl->require_subcommand(1);
    auto* dsl_parse = dsl->add_subcommand("parse", "parse and round-trip identities");
    std::string dsl_file, dsl_expr;
    dsl_parse->add_option("file", dsl_file, "identity file: one identity per line, # comments");
    dsl_parse->add_option("--expr", dsl_expr, "parse a single identity given inline");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*check) return run_check(check_file, check_pack_name, opt, cmdline);
        if (*cat_list) return run_catalog_list(cat_dim, opt, cmdline);
        if (*cat_show) return run_catalog_show(show_id, opt, cmdline);
        if (*cat_inst) return run_catalog_instantiate(inst_id, inst_params, opt, cmdline);
        if (*cat_val) return run_catalog_validate(val_dim, val_samples, opt, cmdline);
        if (*solve) return run_solve(solve_id, solve_splits, opt, cmdline);
        if (*enumerate) return run_enumerate(enum_id, opt);
        if (*iso) return run_iso(iso_a, iso_b, iso_exh, opt, cmdline);
        if (*audit) return run_audit(audit_dim, audit_params, opt, cmdline);
        if (*cc) return run_cross_check(cc_id, opt, cmdline);
        if (*dsl_parse) {
            if (dsl_file.empty() == dsl_expr.empty())
                throw InputError("dsl parse needs exactly one of: a file argument, --expr");
            return run_dsl_parse(dsl_file, dsl_expr, opt, cmdline);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace cli
}  // namespace trias
