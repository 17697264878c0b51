#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "linalg.hpp"
#include "parallel.hpp"

namespace trias {

// ------------------------------------------------------------------ invariants

struct OpInvariants {
    bool commutative = false;
    size_t square_dim = 0; // dimension of span { e_i o e_j }
    size_t left_ann = 0;   // dim { u : u o v = 0 for all v }
    size_t right_ann = 0;  // dim { v : u o v = 0 for all u }
    bool operator==(const OpInvariants& o) const = default;
};

struct InvariantVector {
    std::array<OpInvariants, 3> ops; // vdash, dashv, perp
    std::array<bool, 3> op_equal;    // vdash==dashv, vdash==perp, dashv==perp
    bool operator==(const InvariantVector& o) const = default;
};

template <class K>
InvariantVector invariants(const Trialgebra<K>& A) {
    size_t n = A.dim();
    InvariantVector out;
    for (OpKind op : kOps) {
        OpInvariants inv;
        inv.commutative = true;
        Mat<K> sq, lrows, rrows;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (A.constants.product(op, i, j) != A.constants.product(op, j, i)) inv.commutative = false;
                sq.push_back(A.constants.product(op, i, j));
            }
        // u in left annihilator iff sum_i u_i c[i][j][k] = 0 for every (j, k)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                Vec<K> row;
                for (size_t i = 0; i < n; ++i) row.push_back(A.constants.product(op, i, j)[k]);
                lrows.push_back(std::move(row));
            }
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k) {
                Vec<K> row;
                for (size_t j = 0; j < n; ++j) row.push_back(A.constants.product(op, i, j)[k]);
                rrows.push_back(std::move(row));
            }
        inv.square_dim = rank(sq);
        inv.left_ann = n - rank(lrows);
        inv.right_ann = n - rank(rrows);
        out.ops[(size_t)op] = inv;
    }
    auto eq = [&](OpKind a, OpKind b) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (A.constants.product(a, i, j) != A.constants.product(b, i, j)) return false;
        return true;
    };
    out.op_equal = {eq(OpKind::Vdash, OpKind::Dashv), eq(OpKind::Vdash, OpKind::Perp),
                    eq(OpKind::Dashv, OpKind::Perp)};
    return out;
}

// human description of the first differing component, for NotIsomorphic(invariant)
inline std::optional<std::string> first_invariant_difference(const InvariantVector& a, const InvariantVector& b) {
    for (OpKind op : kOps) {
        const auto& x = a.ops[(size_t)op];
        const auto& y = b.ops[(size_t)op];
        std::string nm = op_name(op);
        if (x.square_dim != y.square_dim)
            return nm + " square dims differ: " + std::to_string(x.square_dim) + " vs " + std::to_string(y.square_dim);
        if (x.commutative != y.commutative) return nm + " commutativity differs";
        if (x.left_ann != y.left_ann)
            return nm + " left annihilator dims differ: " + std::to_string(x.left_ann) + " vs " +
                   std::to_string(y.left_ann);
        if (x.right_ann != y.right_ann)
            return nm + " right annihilator dims differ: " + std::to_string(x.right_ann) + " vs " +
                   std::to_string(y.right_ann);
    }
    static const char* flag[3] = {"vdash=dashv", "vdash=perp", "dashv=perp"};
    for (size_t i = 0; i < 3; ++i)
        if (a.op_equal[i] != b.op_equal[i]) return std::string("op-equality flag ") + flag[i] + " differs";
    return std::nullopt;
}

// ------------------------------------------------------------------ iso results

enum class IsoKind { Isomorphic, NotIsomorphic, Unknown };

template <class K>
struct IsoResult {
    IsoKind kind = IsoKind::Unknown;
    std::string method; // "exhaustive" | "invariant" | "witness-library"
    std::string detail;
    std::optional<Mat<K>> witness; // transport(A, witness) == B

    static IsoResult isomorphic(Mat<K> g, std::string method) {
        return IsoResult{IsoKind::Isomorphic, std::move(method), "", std::move(g)};
    }
    static IsoResult not_isomorphic(std::string method, std::string detail) {
        return IsoResult{IsoKind::NotIsomorphic, std::move(method), std::move(detail), std::nullopt};
    }
    static IsoResult unknown(std::string detail) {
        return IsoResult{IsoKind::Unknown, "", std::move(detail), std::nullopt};
    }
};

// ------------------------------------------------------------------ GL_n(F_p)

inline std::vector<Mat<FpElem>> gl_matrices(size_t n, uint32_t p) {
    if (n < 1 || n > 2) throw UnsupportedError("exhaustive search supports dimensions 1 and 2 only");
    std::vector<Mat<FpElem>> out;
    if (n == 1) {
        for (uint32_t a = 1; a < p; ++a) out.push_back({{FpElem(a, p)}});
        return out;
    }
    for (uint32_t a = 0; a < p; ++a)
        for (uint32_t b = 0; b < p; ++b)
            for (uint32_t c = 0; c < p; ++c)
                for (uint32_t d = 0; d < p; ++d) {
                    if (((uint64_t)a * d) % p == ((uint64_t)b * c) % p) continue;
                    out.push_back({{FpElem(a, p), FpElem(b, p)}, {FpElem(c, p), FpElem(d, p)}});
                }
    return out;
}

// fast witness test: g * (e_i o_B e_j) == (g e_i) o_A (g e_j) for every op and cell,
// which is exactly transport(A, g) == B without forming g^-1
template <class K>
bool is_transport_witness(const Trialgebra<K>& A, const Trialgebra<K>& B, const Mat<K>& g) {
    size_t n = A.dim();
    std::vector<Vec<K>> cols;
    for (size_t j = 0; j < n; ++j) {
        Vec<K> c;
        for (size_t i = 0; i < n; ++i) c.push_back(g[i][j]);
        cols.push_back(std::move(c));
    }
    for (OpKind op : kOps)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Vec<K> lhs = mat_vec(g, B.constants.product(op, i, j));
                Vec<K> rhs = evaluate(A, op, cols[i], cols[j]);
                if (lhs != rhs) return false;
            }
    return true;
}

template <class K>
void ensure_comparable(const Trialgebra<K>& A, const Trialgebra<K>& B) {
    if (A.field() != B.field())
        throw FieldMismatchError("cannot compare algebras over " + A.field().str() + " and " + B.field().str());
    if (A.dim() != B.dim()) throw DimensionError("cannot compare algebras of different dimension");
}

inline IsoResult<FpElem> iso_exhaustive(const Trialgebra<FpElem>& A, const Trialgebra<FpElem>& B,
                                        const std::vector<Mat<FpElem>>* gl = nullptr) {
    ensure_comparable(A, B);
    if (A.field().kind != FieldKind::Fp) throw UnsupportedError("exhaustive search requires a finite field");
    std::vector<Mat<FpElem>> local;
    if (!gl) {
        local = gl_matrices(A.dim(), A.field().p);
        gl = &local;
    }
    for (const auto& g : *gl) {
        if (!is_transport_witness(A, B, g)) continue;
        // re-verify through the full transport path before trusting the witness
        auto T = transport(A, basis_change(g, A.field()));
        if (!same_table(T, B)) throw Error("witness failed transport re-verification");
        return IsoResult<FpElem>::isomorphic(g, "exhaustive");
    }
    return IsoResult<FpElem>::not_isomorphic(
        "exhaustive", "all " + std::to_string(gl->size()) + " invertible matrices tried");
}

// ------------------------------------------------------------------ Qi witness library

inline std::vector<GaussRat> candidate_scalars(const Trialgebra<GaussRat>& A, const Trialgebra<GaussRat>& B) {
    std::vector<GaussRat> out{GaussRat(1), GaussRat(-1), GaussRat::i()};
    auto add = [&](const GaussRat& v) {
        if (v.is_zero()) return;
        for (auto& w : out)
            if (w == v) return;
        out.push_back(v);
    };
    for (const Trialgebra<GaussRat>* T : {&A, &B})
        for (OpKind op : kOps)
            for (size_t i = 0; i < T->dim(); ++i)
                for (size_t j = 0; j < T->dim(); ++j)
                    for (const GaussRat& c : T->constants.product(op, i, j)) {
                        if (c.is_zero()) continue;
                        add(c);
                        add(c.inv());
                    }
    return out;
}

inline IsoResult<GaussRat> iso_witness_library(const Trialgebra<GaussRat>& A, const Trialgebra<GaussRat>& B) {
    size_t n = A.dim();
    auto scal = candidate_scalars(A, B);
    std::vector<Mat<GaussRat>> perms;
    if (n == 1) {
        perms = {{{GaussRat(1)}}};
    } else {
        perms = {{{GaussRat(1), GaussRat(0)}, {GaussRat(0), GaussRat(1)}},
                 {{GaussRat(0), GaussRat(1)}, {GaussRat(1), GaussRat(0)}}};
    }
    for (const auto& P : perms) {
        if (n == 1) {
            for (const auto& c : scal) {
                Mat<GaussRat> g = {{c}};
                if (is_transport_witness(A, B, g)) return IsoResult<GaussRat>::isomorphic(g, "witness-library");
            }
        } else {
            for (const auto& c1 : scal)
                for (const auto& c2 : scal) {
                    // g = P * diag(c1, c2)
                    Mat<GaussRat> g = {{P[0][0] * c1, P[0][1] * c2}, {P[1][0] * c1, P[1][1] * c2}};
                    if (is_transport_witness(A, B, g))
                        return IsoResult<GaussRat>::isomorphic(g, "witness-library");
                }
        }
    }
    return IsoResult<GaussRat>::unknown("invariants agree; witness library exhausted");
}

// ------------------------------------------------------------------ decision

inline IsoResult<FpElem> iso_decide(const Trialgebra<FpElem>& A, const Trialgebra<FpElem>& B,
                                    const std::vector<Mat<FpElem>>* gl = nullptr) {
    return iso_exhaustive(A, B, gl);
}

inline IsoResult<GaussRat> iso_decide(const Trialgebra<GaussRat>& A, const Trialgebra<GaussRat>& B) {
    ensure_comparable(A, B);
    auto ia = invariants(A), ib = invariants(B);
    if (auto diff = first_invariant_difference(ia, ib))
        return IsoResult<GaussRat>::not_isomorphic("invariant", *diff);
    auto r = iso_witness_library(A, B);
    if (r.kind == IsoKind::Isomorphic) {
        auto T = transport(A, basis_change(*r.witness, A.field()));
        if (!same_table(T, B)) throw Error("witness failed transport re-verification");
    }
    return r;
}

// ------------------------------------------------------------------ audit

template <class K>
std::string instance_label(const Trialgebra<K>& A) {
    if (!A.provenance) return A.name.value_or("(anonymous)");
    const auto& pv = *A.provenance;
    if (pv.params.empty()) return pv.klass;
    const CatalogEntry& e = find_entry(pv.klass);
    std::string s = pv.klass + "@";
    bool first = true;
    for (auto& p : e.params) {
        if (!first) s += ",";
        first = false;
        s += p.name + "=" + pv.params.at(p.name);
    }
    return s;
}

template <class K>
struct AuditRow {
    size_t a = 0, b = 0; // instance indices
    IsoResult<K> result;
};

struct LiftAttempt {
    size_t row = 0;
    bool verified = false;
    std::string note;
};

template <class K>
struct AuditReport {
    std::vector<std::string> labels;
    std::vector<std::string> classes;
    std::vector<AuditRow<K>> rows;       // all pairs a < b, lexicographic
    std::vector<size_t> collisions;      // row indices: Isomorphic across distinct classes
    std::vector<size_t> within_class;    // row indices: Isomorphic within one class
    std::vector<size_t> unknown;         // row indices: Unknown
    std::vector<LiftAttempt> lifts;      // exact-lift attempts for collisions (finite fields)
    bool grouping_ok = true;
    std::vector<std::string> grouping_violations;
};

// exact re-check of a finite-field collision over Q(i): lift parameters and
// witness entries through Z and re-run the transport; failure is recorded,
// not judged
inline LiftAttempt attempt_qi_lift(size_t row, const Provenance& pa, const Provenance& pb,
                                   const Mat<FpElem>& witness) {
    LiftAttempt out{row, false, ""};
    auto lift_params = [](const Provenance& pv) {
        const CatalogEntry& e = find_entry(pv.klass);
        std::vector<GaussRat> vals;
        for (auto& p : e.params) vals.push_back(GaussRat(Rational::parse(pv.params.at(p.name))));
        return instantiate<GaussRat>(e, vals, FieldDescriptor::qi());
    };
    try {
        Trialgebra<GaussRat> A = lift_params(pa);
        Trialgebra<GaussRat> B = lift_params(pb);
        Mat<GaussRat> g;
        for (auto& r : witness) {
            Vec<GaussRat> row2;
            for (auto& x : r) row2.push_back(GaussRat((long)x.v));
            g.push_back(std::move(row2));
        }
        if (det(g).is_zero()) {
            out.note = "lifted witness is singular over Q(i)";
            return out;
        }
        if (is_transport_witness(A, B, g)) {
            out.verified = true;
            out.note = "witness verifies exactly over Q(i)";
        } else {
            out.note = "lifted witness does not transport over Q(i)";
        }
    } catch (const Error& e) {
        out.note = std::string("lift failed: ") + e.what();
    }
    return out;
}

template <class K>
int instance_group(const Trialgebra<K>& A) {
    if (!A.provenance) return 0;
    return find_entry(A.provenance->klass).group;
}

template <class K>
AuditReport<K> audit_pairwise(const std::vector<Trialgebra<K>>& instances, size_t jobs = 1) {
    AuditReport<K> rep;
    size_t m = instances.size();
    for (auto& A : instances) {
        rep.labels.push_back(instance_label(A));
        rep.classes.push_back(A.provenance ? A.provenance->klass : std::string());
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    rep.rows.resize(pairs.size());

    std::vector<Mat<FpElem>> gl;
    if (m > 0 && instances[0].field().kind == FieldKind::Fp)
        gl = gl_matrices(instances[0].dim(), instances[0].field().p);

    parallel_for(pairs.size(), jobs, [&](size_t t) {
        auto [i, j] = pairs[t];
        AuditRow<K> row;
        row.a = i;
        row.b = j;
        if constexpr (std::is_same_v<K, FpElem>) {
            row.result = iso_decide(instances[i], instances[j], &gl);
        } else {
            row.result = iso_decide(instances[i], instances[j]);
        }
        rep.rows[t] = std::move(row);
    });

    for (size_t t = 0; t < rep.rows.size(); ++t) {
        const auto& row = rep.rows[t];
        if (row.result.kind == IsoKind::Unknown) rep.unknown.push_back(t);
        if (row.result.kind != IsoKind::Isomorphic) continue;
        bool same = rep.classes[row.a] == rep.classes[row.b] && !rep.classes[row.a].empty();
        (same ? rep.within_class : rep.collisions).push_back(t);
        int ga = instance_group(instances[row.a]);
        int gb = instance_group(instances[row.b]);
        if (ga != 0 && gb != 0 && ga != gb) {
            rep.grouping_ok = false;
            rep.grouping_violations.push_back(rep.labels[row.a] + " ~ " + rep.labels[row.b]);
        }
        if constexpr (std::is_same_v<K, FpElem>) {
            if (!same && instances[row.a].provenance && instances[row.b].provenance)
                rep.lifts.push_back(attempt_qi_lift(t, *instances[row.a].provenance,
                                                    *instances[row.b].provenance, *row.result.witness));
        }
    }
    return rep;
}

// sampled or exhaustive instantiation set for the audit, over either field
inline std::vector<Trialgebra<GaussRat>> audit_instances_qi(size_t dim, size_t sample_k) {
    std::vector<Trialgebra<GaussRat>> out;
    for (const CatalogEntry& e : catalog_entries(dim))
        for (auto& tuple : qi_sample_assignments(e, sample_k))
            out.push_back(instantiate<GaussRat>(e, tuple, FieldDescriptor::qi()));
    return out;
}

// sample_k == 0 means every admissible assignment
inline std::vector<Trialgebra<FpElem>> audit_instances_fp(size_t dim, uint32_t p, size_t sample_k) {
    std::vector<Trialgebra<FpElem>> out;
    FieldDescriptor fd = FieldDescriptor::fp(p);
    for (const CatalogEntry& e : catalog_entries(dim)) {
        auto adm = fp_admissible_assignments(e, p);
        if (sample_k > 0 && adm.size() > sample_k) adm.resize(sample_k);
        for (auto& tuple : adm) out.push_back(instantiate<FpElem>(e, tuple, fd));
    }
    return out;
}

} // namespace trias
