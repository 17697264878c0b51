#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "iso.hpp"

namespace trias {

// Unknown layout for the structure constants of -| and _|_ over a fixed |-.
// For dim n, the k-th coordinate of e_i -| e_j is the unknown a{idx+1} with
// idx = 4i + 2j + k (dim 2) or idx = 0 (dim 1); _|_ uses the same scheme
// shifted by 8 and named b1..b8.
inline uint32_t dashv_unknown(size_t i, size_t j, size_t k, size_t n) {
    return n == 1 ? 0u : static_cast<uint32_t>(4 * i + 2 * j + k);
}

inline uint32_t perp_unknown(size_t i, size_t j, size_t k, size_t n) {
    return 8u + dashv_unknown(i, j, k, n);
}

inline std::string unknown_name(uint32_t idx) {
    return idx < 8 ? "a" + std::to_string(idx + 1) : "b" + std::to_string(idx - 7);
}

inline VarNames unknown_names() {
    return [](uint32_t idx) { return unknown_name(idx); };
}

inline std::vector<uint32_t> unknown_universe(size_t n) {
    std::vector<uint32_t> u;
    if (n == 1) {
        u = {0u, 8u};
    } else {
        for (uint32_t i = 0; i < 8; ++i) u.push_back(i);
        for (uint32_t i = 8; i < 16; ++i) u.push_back(i);
    }
    return u;
}

struct Constraint {
    Poly p;
    std::string identity;    // identity that produced it
    std::string assignment;  // basis assignment, e.g. "(x, y, x)"
    size_t component = 0;    // coordinate index
};

inline OpTables<Poly> unknown_tables(const AsEntry& as) {
    size_t n = as.dim;
    OpTables<Poly> t;
    for (auto& tab : t)
        tab.assign(n, std::vector<std::vector<Poly>>(n, std::vector<Poly>(n, Poly())));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                t[(size_t)OpKind::Vdash][i][j][k] = Poly::constant(as.table[i][j][k]);
                t[(size_t)OpKind::Dashv][i][j][k] = Poly::var(dashv_unknown(i, j, k, n));
                t[(size_t)OpKind::Perp][i][j][k] = Poly::var(perp_unknown(i, j, k, n));
            }
    return t;
}

inline std::string basis_assignment_str(const std::vector<char>& vars,
                                        const std::map<char, size_t>& env, size_t dim) {
    std::string s = "(";
    for (size_t i = 0; i < vars.size(); ++i) {
        if (i) s += ", ";
        s += basis_symbol(dim, env.at(vars[i]));
    }
    return s + ")";
}

// All distinct monic constraints obtained by evaluating every defining
// identity on every basis assignment, keeping the first provenance for each.
inline std::vector<Constraint> generate_constraints(const AsEntry& as) {
    size_t n = as.dim;
    auto tabs = unknown_tables(as);
    Poly zero, one = Poly::constant(1);
    std::vector<Constraint> out;
    std::set<std::string> seen;
    for (const Identity& id : triassociative_pack().identities) {
        auto vars = identity_vars(id);
        size_t total = 1;
        for (size_t i = 0; i < vars.size(); ++i) total *= n;
        for (size_t code = 0; code < total; ++code) {
            std::map<char, size_t> env;
            size_t c = code;
            for (char v : vars) {
                env[v] = c % n;
                c /= n;
            }
            auto lhs = eval_term_basis(id.lhs, env, tabs, n, zero, one);
            auto rhs = eval_term_basis(id.rhs, env, tabs, n, zero, one);
            for (size_t k = 0; k < n; ++k) {
                Poly d = lhs[k] - rhs[k];
                if (d.is_zero()) continue;
                Poly m = d.monic();
                if (!seen.insert(m.key()).second) continue;
                out.push_back({m, id.name, basis_assignment_str(vars, env, n), k});
            }
        }
    }
    return out;
}

struct Elimination {
    uint32_t var = 0;
    Poly value;
    std::string source;  // rendering of the constraint that forced it
};

struct Family {
    std::map<uint32_t, Poly> assign;  // solved unknowns (values in the free ones)
    std::vector<Poly> residual;       // unresolved constraints
    std::vector<std::string> path;    // split / elimination log
    bool resolved = false;

    std::vector<uint32_t> free_vars(const std::vector<uint32_t>& universe) const {
        std::vector<uint32_t> f;
        for (uint32_t v : universe)
            if (!assign.count(v)) f.push_back(v);
        return f;
    }
};

namespace detail_solver {

inline void normalize(std::vector<Constraint>& cs) {
    std::vector<Constraint> keep;
    std::set<std::string> seen;
    for (auto& c : cs) {
        if (c.p.is_zero()) continue;
        Constraint m = c;
        m.p = c.p.monic();
        if (seen.insert(m.p.key()).second) keep.push_back(std::move(m));
    }
    cs = std::move(keep);
}

// Later assignments are folded into earlier values so every value is
// expressed in the surviving free unknowns only.
inline void record_assign(std::map<uint32_t, Poly>& assign, uint32_t v, const Poly& val) {
    for (auto& kv : assign) kv.second = kv.second.substitute(v, val);
    assign[v] = val;
}

inline void substitute_constraints(std::vector<Constraint>& cs, uint32_t v, const Poly& val) {
    for (auto& c : cs) c.p = c.p.substitute(v, val);
    normalize(cs);
}

inline std::vector<size_t> render_order(const std::vector<Constraint>& cs) {
    std::vector<std::pair<std::string, size_t>> keyed;
    keyed.reserve(cs.size());
    auto names = unknown_names();
    for (size_t i = 0; i < cs.size(); ++i) keyed.emplace_back(cs[i].p.render(names), i);
    std::sort(keyed.begin(), keyed.end());
    std::vector<size_t> order;
    order.reserve(keyed.size());
    for (auto& k : keyed) order.push_back(k.second);
    return order;
}

inline std::optional<Elimination> find_elimination(const std::vector<Constraint>& cs) {
    auto names = unknown_names();
    for (size_t i : render_order(cs)) {
        const Poly& p = cs[i].p;
        auto sup = p.support();
        if (p.terms().size() == 1 && sup.size() == 1)
            return Elimination{*sup.begin(), Poly(), p.render(names)};
        for (uint32_t v : sup) {
            if (p.degree_in(v) != 1) continue;
            Poly c = p.coeff_of(v, 1);
            if (!c.is_constant() || c.is_zero()) continue;
            Poly r = p.substitute(v, Poly());
            if (!r.is_multilinear()) continue;
            return Elimination{v, r.scaled(GaussRat(-1) / c.constant_value()), p.render(names)};
        }
    }
    return std::nullopt;
}

inline std::vector<Elimination> eliminate(std::vector<Constraint>& cs,
                                          std::map<uint32_t, Poly>& assign) {
    std::vector<Elimination> out;
    while (auto e = find_elimination(cs)) {
        record_assign(assign, e->var, e->value);
        substitute_constraints(cs, e->var, e->value);
        out.push_back(*e);
    }
    return out;
}

struct SplitChoice {
    uint32_t var = 0;
    std::vector<GaussRat> roots;
    std::string source;
};

// A split candidate is a single-unknown quadratic with no constant term:
// c2*v^2 + c1*v.  Roots are tried as 0 first, then -c1/c2.
inline std::optional<SplitChoice> find_split(const std::vector<Constraint>& cs) {
    auto names = unknown_names();
    for (size_t i : render_order(cs)) {
        const Poly& p = cs[i].p;
        auto sup = p.support();
        if (sup.size() != 1) continue;
        uint32_t v = *sup.begin();
        if (p.degree_in(v) != 2) continue;
        if (!p.coeff_of(v, 0).is_zero()) continue;
        GaussRat c2 = p.coeff_of(v, 2).constant_value();
        Poly c1p = p.coeff_of(v, 1);
        SplitChoice sc{v, {GaussRat(0)}, p.render(names)};
        if (!c1p.is_zero()) sc.roots.push_back(-c1p.constant_value() / c2);
        return sc;
    }
    return std::nullopt;
}

inline std::vector<Poly> residual_polys(const std::vector<Constraint>& cs) {
    std::vector<Poly> r;
    r.reserve(cs.size());
    for (auto& c : cs) r.push_back(c.p);
    return r;
}

inline void solve_rec(std::vector<Constraint> cs, std::map<uint32_t, Poly> assign,
                      std::vector<std::string> path, size_t& splits_left, bool& exhausted,
                      std::vector<Family>& out) {
    auto names = unknown_names();
    for (auto& e : eliminate(cs, assign))
        path.push_back(unknown_name(e.var) + " = " + e.value.render(names) + "  [from " +
                       e.source + "]");
    auto sp = find_split(cs);
    if (!sp || splits_left == 0) {
        if (sp) exhausted = true;
        out.push_back(Family{std::move(assign), residual_polys(cs), std::move(path), cs.empty()});
        return;
    }
    --splits_left;
    for (const GaussRat& root : sp->roots) {
        auto cs2 = cs;
        auto assign2 = assign;
        auto path2 = path;
        Poly val = Poly::constant(root);
        record_assign(assign2, sp->var, val);
        substitute_constraints(cs2, sp->var, val);
        path2.push_back("split " + unknown_name(sp->var) + " = " + root.str() + "  [from " +
                        sp->source + "]");
        solve_rec(std::move(cs2), std::move(assign2), std::move(path2), splits_left, exhausted,
                  out);
    }
}

// A constraint is redundant when the rest of the system resolves completely
// and the candidate vanishes identically on every resulting family.
inline bool redundant_given_rest(const std::vector<Constraint>& rest, const Poly& p,
                                 size_t max_splits) {
    size_t budget = max_splits;
    bool exhausted = false;
    std::vector<Family> fams;
    solve_rec(rest, {}, {}, budget, exhausted, fams);
    if (exhausted) return false;
    for (auto& f : fams) {
        if (!f.resolved) return false;
        if (!p.substitute_all(f.assign).is_zero()) return false;
    }
    return true;
}

}  // namespace detail_solver

struct SolveResult {
    std::string as_id;
    size_t dim = 0;
    std::vector<Constraint> raw;          // deduped monic constraints, generation order
    std::map<uint32_t, Poly> shared_assign;
    std::vector<Elimination> eliminations;  // in application order
    std::vector<Poly> pruned;               // dropped as redundant
    std::vector<Poly> checkpoint;           // residual system entering the case split
    std::vector<Family> families;
    std::vector<uint32_t> universe;
    size_t splits_used = 0;
    bool budget_exhausted = false;
};

inline SolveResult simplify_solve(const AsEntry& as, size_t max_splits = 16) {
    SolveResult R;
    R.as_id = as.id;
    R.dim = as.dim;
    R.universe = unknown_universe(as.dim);
    R.raw = generate_constraints(as);

    std::vector<Constraint> cs = R.raw;
    R.eliminations = detail_solver::eliminate(cs, R.shared_assign);

    for (size_t pass = 0; pass < cs.size();) {
        auto order = detail_solver::render_order(cs);
        bool removed = false;
        for (size_t i : order) {
            std::vector<Constraint> rest;
            for (size_t j = 0; j < cs.size(); ++j)
                if (j != i) rest.push_back(cs[j]);
            if (detail_solver::redundant_given_rest(rest, cs[i].p, max_splits)) {
                R.pruned.push_back(cs[i].p);
                cs = std::move(rest);
                removed = true;
                break;
            }
        }
        if (!removed) break;
    }

    R.checkpoint = detail_solver::residual_polys(cs);
    {
        auto names = unknown_names();
        std::sort(R.checkpoint.begin(), R.checkpoint.end(),
                  [&](const Poly& a, const Poly& b) { return a.render(names) < b.render(names); });
    }

    size_t budget = max_splits;
    bool exhausted = false;
    detail_solver::solve_rec(cs, R.shared_assign, {}, budget, exhausted, R.families);
    R.splits_used = max_splits - budget;
    R.budget_exhausted = exhausted;
    return R;
}

// ---- finite-field enumeration ----

struct Enumeration {
    std::string as_id;
    uint32_t p = 0;
    size_t dashv_candidates = 0;
    size_t dashv_survivors = 0;
    std::vector<StructureConstants<FpElem>> algebras;
};

namespace detail_solver {

template <class K>
bool identity_holds(const Identity& id, const OpTables<K>& tabs, size_t n, const K& zero,
                    const K& one) {
    auto vars = identity_vars(id);
    size_t total = 1;
    for (size_t i = 0; i < vars.size(); ++i) total *= n;
    for (size_t code = 0; code < total; ++code) {
        std::map<char, size_t> env;
        size_t c = code;
        for (char v : vars) {
            env[v] = c % n;
            c /= n;
        }
        auto lhs = eval_term_basis(id.lhs, env, tabs, n, zero, one);
        auto rhs = eval_term_basis(id.rhs, env, tabs, n, zero, one);
        for (size_t k = 0; k < n; ++k)
            if (!(lhs[k] == rhs[k])) return false;
    }
    return true;
}

inline void fill_table(std::vector<std::vector<Vec<FpElem>>>& tab, uint64_t code, size_t n,
                       uint32_t p) {
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                tab[i][j][k] = FpElem::of((long)(code % p), p);
                code /= p;
            }
}

}  // namespace detail_solver

// Brute-force sweep over all -| and _|_ tables over F_p for a fixed |-.
// Stage 1 keeps the -| tables satisfying the two-operation identities,
// stage 2 extends each survivor by every _|_ table satisfying the rest,
// and every hit is re-checked against the full identity pack.
inline Enumeration enumerate_fp(const AsEntry& as, uint32_t p) {
    FieldDescriptor fd = FieldDescriptor::fp(p);
    size_t n = as.dim;
    if (n > 2) throw UnsupportedError("enumeration supports dimensions 1 and 2");

    FpElem zero = FpElem::of(0, p), one = FpElem::of(1, p);
    StructureConstants<FpElem> sc(n, fd, zero);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                sc.c[(size_t)OpKind::Vdash][i][j][k] = FpElem::of(as.table[i][j][k], p);

    const auto& axioms = builtin_axioms();
    std::vector<const Identity*> stage1, stage2;
    for (const auto& id : axioms) {
        if (id.name == "A1") continue;  // the |- table is associative by construction
        auto ops = std::vector<OpKind>{};
        collect_ops(id.lhs, ops);
        collect_ops(id.rhs, ops);
        bool perp = false;
        for (auto op : ops) perp = perp || op == OpKind::Perp;
        (perp ? stage2 : stage1).push_back(&id);
    }
    {
        Trialgebra<FpElem> probe{std::nullopt, sc, std::nullopt};
        if (!check_identity(probe, axioms.front()).empty())
            throw Error("associative table failed its own associativity over " + fd.str());
    }

    size_t cells = n * n * n;
    uint64_t total = 1;
    for (size_t i = 0; i < cells; ++i) total *= p;

    Enumeration out;
    out.as_id = as.id;
    out.p = p;
    out.dashv_candidates = total;

    std::vector<uint64_t> survivors;
    for (uint64_t code = 0; code < total; ++code) {
        detail_solver::fill_table(sc.c[(size_t)OpKind::Dashv], code, n, p);
        bool ok = true;
        for (const Identity* id : stage1)
            if (!detail_solver::identity_holds(*id, sc.c, n, zero, one)) {
                ok = false;
                break;
            }
        if (ok) survivors.push_back(code);
    }
    out.dashv_survivors = survivors.size();

    AxiomPack full = triassociative_pack();
    for (uint64_t dcode : survivors) {
        detail_solver::fill_table(sc.c[(size_t)OpKind::Dashv], dcode, n, p);
        for (uint64_t pcode = 0; pcode < total; ++pcode) {
            detail_solver::fill_table(sc.c[(size_t)OpKind::Perp], pcode, n, p);
            bool ok = true;
            for (const Identity* id : stage2)
                if (!detail_solver::identity_holds(*id, sc.c, n, zero, one)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            Trialgebra<FpElem> A{std::nullopt, sc, std::nullopt};
            if (!passes_pack(A, full))
                throw Error("staged enumeration produced a table failing the full pack");
            out.algebras.push_back(sc);
        }
    }
    return out;
}

// Unknown-indexed view of a concrete table, for comparing enumeration
// points against solver families.
inline std::map<uint32_t, FpElem> table_point(const StructureConstants<FpElem>& sc) {
    std::map<uint32_t, FpElem> pt;
    size_t n = sc.dim;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                pt[dashv_unknown(i, j, k, n)] = sc.c[(size_t)OpKind::Dashv][i][j][k];
                pt[perp_unknown(i, j, k, n)] = sc.c[(size_t)OpKind::Perp][i][j][k];
            }
    return pt;
}

inline bool family_covers_point(const Family& f, const std::map<uint32_t, FpElem>& pt,
                                uint32_t p) {
    for (auto& kv : f.assign) {
        FpElem want = kv.second.eval_fp(pt, p);
        if (!(pt.at(kv.first) == want)) return false;
    }
    for (auto& r : f.residual)
        if (!r.eval_fp(pt, p).is_zero()) return false;
    return true;
}

// Structural match between a resolved family and a catalog entry: cellwise
// equality of all three tables up to a consistent bijection between the
// family's free unknowns and the entry's parameters.
inline bool family_matches_entry(const AsEntry& as, const Family& f, const CatalogEntry& e) {
    if (!f.resolved || e.dim != as.dim) return false;
    size_t n = as.dim;
    const uint32_t kParamBase = 1000;
    std::map<uint32_t, uint32_t> var_to_param, param_to_var;

    auto cell_matches = [&](const Poly& fam_raw, const Poly& ent_raw) {
        Poly fam = fam_raw.substitute_all(f.assign);
        Poly ent = ent_raw;
        for (size_t pos = e.params.size(); pos-- > 0;)
            ent = ent.substitute((uint32_t)pos, Poly::var(kParamBase + (uint32_t)pos));
        if (fam.is_constant() || ent.is_constant()) return fam == ent;
        auto fs = fam.support();
        auto es = ent.support();
        if (fs.size() != 1 || es.size() != 1) return false;
        uint32_t v = *fs.begin(), q = *es.begin();
        if (fam.degree() != 1 || ent.degree() != 1) return false;
        if (!(fam.coeff_of(v, 1) == ent.coeff_of(q, 1))) return false;
        if (!fam.coeff_of(v, 0).is_zero() || !ent.coeff_of(q, 0).is_zero()) return false;
        auto it = var_to_param.find(v);
        if (it != var_to_param.end()) return it->second == q;
        if (param_to_var.count(q)) return false;
        var_to_param[v] = q;
        param_to_var[q] = v;
        return true;
    };

    auto tabs = unknown_tables(as);
    for (size_t op = 0; op < 3; ++op)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k)
                    if (!cell_matches(tabs[op][i][j][k], e.tab[op][i][j][k])) return false;
    return true;
}

// ---- catalog cross-check over F_p ----

struct CrossCheckRow {
    std::string label;
    bool valid = false;  // instance satisfies the identity pack
    size_t hits = 0;     // enumerated tables isomorphic to it
};

struct CrossCheckReport {
    std::string as_id;
    uint32_t p = 0;
    size_t enumerated = 0;
    size_t instances = 0;
    size_t unmatched_enumerated = 0;
    std::vector<size_t> unmatched_indices;
    std::vector<CrossCheckRow> rows;
    std::vector<std::string> never_hit_labels;
};

inline CrossCheckReport cross_check(const AsEntry& as, uint32_t p) {
    CrossCheckReport rep;
    rep.as_id = as.id;
    rep.p = p;

    auto en = enumerate_fp(as, p);
    rep.enumerated = en.algebras.size();

    FieldDescriptor fd = FieldDescriptor::fp(p);
    std::vector<Trialgebra<FpElem>> insts;
    for (const auto& e : catalog_entries(as.dim)) {
        if (e.group != as.index) continue;
        for (auto& tuple : fp_admissible_assignments(e, p))
            insts.push_back(instantiate<FpElem>(e, tuple, fd));
    }
    rep.instances = insts.size();

    AxiomPack pack = triassociative_pack();
    std::vector<InvariantVector> inst_inv;
    for (auto& A : insts) {
        rep.rows.push_back({instance_label(A), passes_pack(A, pack), 0});
        inst_inv.push_back(invariants(A));
    }

    auto gl = gl_matrices(as.dim, p);
    std::vector<bool> matched(en.algebras.size(), false);
    for (size_t a = 0; a < en.algebras.size(); ++a) {
        Trialgebra<FpElem> A{std::nullopt, en.algebras[a], std::nullopt};
        InvariantVector ia = invariants(A);
        for (size_t b = 0; b < insts.size(); ++b) {
            if (!(ia == inst_inv[b])) continue;
            if (iso_exhaustive(A, insts[b], &gl).kind == IsoKind::Isomorphic) {
                matched[a] = true;
                rep.rows[b].hits++;
            }
        }
    }
    for (size_t a = 0; a < en.algebras.size(); ++a)
        if (!matched[a]) rep.unmatched_indices.push_back(a);
    rep.unmatched_enumerated = rep.unmatched_indices.size();
    for (auto& row : rep.rows)
        if (row.hits == 0) rep.never_hit_labels.push_back(row.label);
    return rep;
}

}  // namespace trias
