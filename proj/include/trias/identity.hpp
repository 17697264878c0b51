#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace trias {

// ------------------------------------------------------------------ AST

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    // variable leaf when var != 0, product node otherwise
    char var = 0; // 'x', 'y' or 'z'
    OpKind op = OpKind::Vdash;
    TermPtr left, right;

    static TermPtr v(char c) {
        auto t = std::make_shared<Term>();
        t->var = c;
        return t;
    }
    static TermPtr prod(OpKind op, TermPtr l, TermPtr r) {
        auto t = std::make_shared<Term>();
        t->op = op;
        t->left = std::move(l);
        t->right = std::move(r);
        return t;
    }
    bool is_var() const { return var != 0; }
};

inline bool term_equal(const TermPtr& a, const TermPtr& b) {
    if (a->is_var() != b->is_var()) return false;
    if (a->is_var()) return a->var == b->var;
    return a->op == b->op && term_equal(a->left, b->left) && term_equal(a->right, b->right);
}

struct Identity {
    std::string name;
    TermPtr lhs, rhs;
    int arity = 0; // number of distinct variables

    bool operator==(const Identity& o) const {
        return term_equal(lhs, o.lhs) && term_equal(rhs, o.rhs);
    }
};

inline void collect_vars(const TermPtr& t, std::map<char, int>& multiset) {
    if (t->is_var()) {
        multiset[t->var]++;
        return;
    }
    collect_vars(t->left, multiset);
    collect_vars(t->right, multiset);
}

inline Identity make_identity(std::string name, TermPtr l, TermPtr r) {
    std::map<char, int> ml, mr;
    collect_vars(l, ml);
    collect_vars(r, mr);
    if (ml != mr) throw ParseError("variable multisets differ between sides", 0);
    Identity id{std::move(name), std::move(l), std::move(r), (int)ml.size()};
    return id;
}

// ------------------------------------------------------------------ rendering

inline std::string render_term(const TermPtr& t, bool outer = true) {
    if (t->is_var()) return std::string(1, t->var);
    std::string body = render_term(t->left, false) + " " + op_symbol(t->op) + " " + render_term(t->right, false);
    return outer ? body : "(" + body + ")";
}

inline std::string render_identity(const Identity& id) {
    return render_term(id.lhs) + " = " + render_term(id.rhs);
}

// ------------------------------------------------------------------ parser

// grammar:  identity := term "=" term
//           term     := var | "(" term OPSYM term ")"
//           OPSYM    := "|-" | "-|" | "_|_"     var := x | y | z
// outermost parentheses optional on each side
class IdentityParser {
public:
    explicit IdentityParser(std::string text) : s_(std::move(text)) {}

    Identity parse(const std::string& name = "") {
        TermPtr l = parse_side();
        skip_ws();
        expect('=');
        TermPtr r = parse_side();
        skip_ws();
        if (pos_ < s_.size()) throw ParseError("trailing input after identity", pos_);
        return make_identity(name, l, r);
    }

    TermPtr parse_side() {
        TermPtr t = parse_term();
        skip_ws();
        if (auto op = peek_op()) { // un-parenthesized top-level product
            consume_op();
            TermPtr r = parse_term();
            return Term::prod(*op, t, r);
        }
        return t;
    }

private:
    TermPtr parse_term() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            return Term::v(c);
        }
        if (c == '(') {
            ++pos_;
            TermPtr l = parse_term();
            skip_ws();
            auto op = peek_op();
            if (!op) throw ParseError("expected operation symbol", pos_);
            consume_op();
            TermPtr r = parse_term();
            skip_ws();
            expect(')');
            return Term::prod(*op, l, r);
        }
        throw ParseError(std::string("unknown symbol '") + c + "'", pos_);
    }

    std::optional<OpKind> peek_op() {
        skip_ws();
        if (s_.compare(pos_, 3, "_|_") == 0) return OpKind::Perp;
        if (s_.compare(pos_, 2, "|-") == 0) return OpKind::Vdash;
        if (s_.compare(pos_, 2, "-|") == 0) return OpKind::Dashv;
        return std::nullopt;
    }

    void consume_op() {
        if (s_.compare(pos_, 3, "_|_") == 0) pos_ += 3;
        else pos_ += 2;
    }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::string s_;
    size_t pos_ = 0;
};

inline Identity parse_identity(const std::string& text, const std::string& name = "") {
    return IdentityParser(text).parse(name);
}

// ------------------------------------------------------------------ built-ins

inline std::vector<Identity> builtin_axioms() {
    auto mk = [](const char* name, const char* text) { return parse_identity(text, name); };
    return {
        mk("A1", "(x |- y) |- z = x |- (y |- z)"),
        mk("A2", "(x -| y) -| z = x -| (y -| z)"),
        mk("D1", "(x -| y) |- z = x |- (y |- z)"),
        mk("D2", "(x -| y) -| z = x -| (y |- z)"),
        mk("S1", "(x |- y) -| z = x |- (y -| z)"),
        mk("T1", "(x _|_ y) |- z = x |- (y |- z)"),
        mk("T2", "(x -| y) -| z = x -| (y _|_ z)"),
        mk("T3", "(x |- y) _|_ z = x |- (y _|_ z)"),
        mk("T4", "(x _|_ y) -| z = x _|_ (y -| z)"),
        mk("S2", "(x -| y) _|_ z = x _|_ (y |- z)"),
        mk("A3", "(x _|_ y) _|_ z = x _|_ (y _|_ z)"),
    };
}

struct AxiomPack {
    std::string name;
    std::vector<Identity> identities;
};

inline void collect_ops(const TermPtr& t, std::vector<OpKind>& ops) {
    if (t->is_var()) return;
    ops.push_back(t->op);
    collect_ops(t->left, ops);
    collect_ops(t->right, ops);
}

inline bool uses_only(const Identity& id, std::initializer_list<OpKind> allowed) {
    std::vector<OpKind> ops;
    collect_ops(id.lhs, ops);
    collect_ops(id.rhs, ops);
    return std::all_of(ops.begin(), ops.end(), [&](OpKind o) {
        return std::find(allowed.begin(), allowed.end(), o) != allowed.end();
    });
}

inline AxiomPack triassociative_pack() { return {"trias", builtin_axioms()}; }

inline AxiomPack diassociative_pack() {
    AxiomPack p{"dias", {}};
    for (auto& id : builtin_axioms())
        if (uses_only(id, {OpKind::Vdash, OpKind::Dashv})) p.identities.push_back(id);
    return p;
}

inline AxiomPack associative_pack(OpKind op) {
    std::string sym = op_symbol(op);
    std::string text = "(x " + sym + " y) " + sym + " z = x " + sym + " (y " + sym + " z)";
    return {std::string("assoc:") + op_name(op), {parse_identity(text, std::string("assoc(") + op_name(op) + ")")}};
}

// named pack or single identity: "trias", "dias", "assoc:vdash", "A1".."A3", "D1", ...
inline AxiomPack pack_by_name(const std::string& name) {
    if (name == "trias") return triassociative_pack();
    if (name == "dias") return diassociative_pack();
    for (OpKind op : kOps)
        if (name == std::string("assoc:") + op_name(op)) return associative_pack(op);
    for (auto& id : builtin_axioms())
        if (id.name == name) return {name, {id}};
    throw InputError("unknown axiom pack or identity name: " + name);
}

// ------------------------------------------------------------------ checking

// Generic evaluator over any commutative-ring-valued multiplication tables:
// tables[op][i][j] is a length-n coefficient vector. Used both with field
// scalars (identity checks) and with polynomials (solver constraint generation).
template <class R>
using OpTables = std::array<std::vector<std::vector<std::vector<R>>>, 3>;

// basis-vector term evaluation: variables map straight to basis indices
template <class R>
std::vector<R> eval_term_basis(const TermPtr& t, const std::map<char, size_t>& env, const OpTables<R>& tables,
                               size_t n, const R& zero, const R& one) {
    if (t->is_var()) {
        std::vector<R> e(n, zero);
        e[env.at(t->var)] = one;
        return e;
    }
    std::vector<R> l = eval_term_basis(t->left, env, tables, n, zero, one);
    std::vector<R> r = eval_term_basis(t->right, env, tables, n, zero, one);
    std::vector<R> out(n, zero);
    const auto& tab = tables[(size_t)t->op];
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            R f = l[i] * r[j];
            for (size_t k = 0; k < n; ++k) out[k] = out[k] + f * tab[i][j][k];
        }
    }
    return out;
}

struct VarAssignment {
    std::map<char, size_t> env; // variable -> basis index
};

template <class K>
struct Violation {
    std::string identity;
    std::map<char, size_t> assignment;
    Vec<K> lhs, rhs;
};

inline std::vector<char> identity_vars(const Identity& id) {
    std::map<char, int> m;
    collect_vars(id.lhs, m);
    std::vector<char> vars;
    for (auto& [c, cnt] : m) vars.push_back(c);
    return vars;
}

// evaluates both sides on all n^arity basis assignments; multilinearity makes
// this decide the identity on the whole space
template <class K>
std::vector<Violation<K>> check_identity(const Trialgebra<K>& A, const Identity& id) {
    size_t n = A.dim();
    K zero = zero_like(A.constants.product(OpKind::Vdash, 0, 0)[0]);
    K one = one_like(zero);
    std::vector<char> vars = identity_vars(id);
    std::vector<Violation<K>> out;
    size_t total = 1;
    for (size_t i = 0; i < vars.size(); ++i) total *= n;
    for (size_t code = 0; code < total; ++code) {
        std::map<char, size_t> env;
        size_t c = code;
        for (char v : vars) {
            env[v] = c % n;
            c /= n;
        }
        auto l = eval_term_basis(id.lhs, env, A.constants.c, n, zero, one);
        auto r = eval_term_basis(id.rhs, env, A.constants.c, n, zero, one);
        if (l != r) out.push_back(Violation<K>{id.name, env, l, r});
    }
    return out;
}

template <class K>
struct PackRow {
    std::string identity;
    bool pass;
    std::vector<Violation<K>> violations;
};

template <class K>
std::vector<PackRow<K>> check_pack(const Trialgebra<K>& A, const AxiomPack& pack) {
    std::vector<PackRow<K>> rows;
    for (const auto& id : pack.identities) {
        auto v = check_identity(A, id);
        rows.push_back(PackRow<K>{id.name, v.empty(), std::move(v)});
    }
    return rows;
}

template <class K>
bool passes_pack(const Trialgebra<K>& A, const AxiomPack& pack) {
    for (const auto& id : pack.identities)
        if (!check_identity(A, id).empty()) return false;
    return true;
}

// ------------------------------------------------------------------ column symmetry

// the involution that reverses operand order, swaps |- and -|, renames x<->z,
// and swaps the two sides of the equation
inline TermPtr mirror_term(const TermPtr& t) {
    if (t->is_var()) {
        char c = t->var == 'x' ? 'z' : (t->var == 'z' ? 'x' : 'y');
        return Term::v(c);
    }
    OpKind op = t->op == OpKind::Vdash ? OpKind::Dashv : (t->op == OpKind::Dashv ? OpKind::Vdash : OpKind::Perp);
    return Term::prod(op, mirror_term(t->right), mirror_term(t->left));
}

inline Identity mirror_identity(const Identity& id) {
    return make_identity(id.name, mirror_term(id.rhs), mirror_term(id.lhs));
}

} // namespace trias
