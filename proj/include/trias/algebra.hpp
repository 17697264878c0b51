#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "linalg.hpp"

namespace trias {

// Vdash < Dashv < Perp is the canonical serialization order.
enum class OpKind { Vdash = 0, Dashv = 1, Perp = 2 };

inline constexpr std::array<OpKind, 3> kOps = {OpKind::Vdash, OpKind::Dashv, OpKind::Perp};

inline const char* op_name(OpKind op) {
    switch (op) {
        case OpKind::Vdash: return "vdash";
        case OpKind::Dashv: return "dashv";
        case OpKind::Perp: return "perp";
    }
    return "?";
}

inline const char* op_symbol(OpKind op) {
    switch (op) {
        case OpKind::Vdash: return "|-";
        case OpKind::Dashv: return "-|";
        case OpKind::Perp: return "_|_";
    }
    return "?";
}

// e_i o e_j = sum_k c[op][i][j][k] e_k ; basis convention e0 = x, e1 = y
template <class K>
struct StructureConstants {
    size_t dim = 0;
    FieldDescriptor field;
    // c[op][i][j] is the coefficient vector of e_i o e_j
    std::array<std::vector<std::vector<Vec<K>>>, 3> c;

    StructureConstants() = default;
    StructureConstants(size_t n, FieldDescriptor fd, const K& zero) : dim(n), field(fd) {
        for (auto& t : c)
            t.assign(n, std::vector<Vec<K>>(n, Vec<K>(n, zero)));
    }

    const Vec<K>& product(OpKind op, size_t i, size_t j) const { return c[(size_t)op][i][j]; }
    Vec<K>& product(OpKind op, size_t i, size_t j) { return c[(size_t)op][i][j]; }

    void set(OpKind op, size_t i, size_t j, Vec<K> v) {
        if (v.size() != dim) throw DimensionError("coefficient vector length != dim");
        c[(size_t)op][i][j] = std::move(v);
    }

    bool operator==(const StructureConstants& o) const {
        return dim == o.dim && field == o.field && c == o.c;
    }
};

using ParamAssignment = std::map<std::string, std::string>; // param name -> rendered scalar

struct Provenance {
    std::string klass;       // catalog entry id
    ParamAssignment params;  // rendered per the scalar grammar
    bool operator==(const Provenance& o) const { return klass == o.klass && params == o.params; }
};

template <class K>
struct Trialgebra {
    std::optional<std::string> name;
    StructureConstants<K> constants;
    std::optional<Provenance> provenance;

    size_t dim() const { return constants.dim; }
    const FieldDescriptor& field() const { return constants.field; }
};

// bilinear extension of the structure constants
template <class K>
Vec<K> evaluate(const Trialgebra<K>& A, OpKind op, const Vec<K>& u, const Vec<K>& v) {
    size_t n = A.dim();
    if (u.size() != n || v.size() != n) throw DimensionError("operand length != dim");
    Vec<K> r = zero_vec(n, u[0]);
    for (size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (v[j].is_zero()) continue;
            K f = u[i] * v[j];
            const Vec<K>& row = A.constants.product(op, i, j);
            for (size_t k = 0; k < n; ++k) r[k] = r[k] + f * row[k];
        }
    }
    return r;
}

template <class K>
struct BasisChange {
    size_t dim = 0;
    FieldDescriptor field;
    Mat<K> matrix; // column j = image of e_j

    Vec<K> column(size_t j) const {
        Vec<K> r;
        r.reserve(dim);
        for (size_t i = 0; i < dim; ++i) r.push_back(matrix[i][j]);
        return r;
    }
};

template <class K>
BasisChange<K> basis_change(Mat<K> m, FieldDescriptor fd) {
    BasisChange<K> g{m.size(), fd, std::move(m)};
    if (det(g.matrix).is_zero()) throw SingularMatrixError("change of basis must be invertible");
    return g;
}

// B with u o_B v = g^{-1}( g(u) o_A g(v) )
template <class K>
Trialgebra<K> transport(const Trialgebra<K>& A, const BasisChange<K>& g) {
    size_t n = A.dim();
    if (g.dim != n) throw DimensionError("basis change dimension mismatch");
    if (!(g.field == A.field())) throw FieldMismatchError("basis change field mismatch");
    Mat<K> ginv = invert(g.matrix);
    Trialgebra<K> B;
    B.constants = StructureConstants<K>(n, A.field(), zero_like(g.matrix[0][0]));
    for (OpKind op : kOps)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Vec<K> w = evaluate(A, op, g.column(i), g.column(j));
                B.constants.set(op, i, j, mat_vec(ginv, w));
            }
    return B;
}

template <class K>
bool same_table(const Trialgebra<K>& A, const Trialgebra<K>& B) {
    return A.constants == B.constants;
}

} // namespace trias
