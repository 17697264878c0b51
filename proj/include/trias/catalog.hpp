#pragma once

#include <optional>
#include <string>
#include <vector>

#include "identity.hpp"
#include "poly.hpp"

namespace trias {

// ------------------------------------------------------------------ entry model

struct ParamSpec {
    std::string name;
    bool nonzero = false;   // domain excludes 0
    bool dependent = false; // value pinned down by the polynomial constraints
};

// a classified family: table templates whose entries are polynomials in the
// parameters, plus the polynomial constraints the parameters must satisfy
struct CatalogEntry {
    std::string id;
    size_t dim = 0;
    int group = 0; // index of the associated vdash-class (As_<dim>^group)
    std::vector<ParamSpec> params;
    std::vector<Poly> constraints;
    // tab[op][i][j][k], each a polynomial in the parameters
    std::array<std::vector<std::vector<std::vector<Poly>>>, 3> tab;
    // designated exact sample tuples (param order) for constrained families
    std::vector<std::vector<GaussRat>> qi_samples;

    VarNames names() const {
        auto ps = params;
        return [ps](uint32_t v) { return ps.at(v).name; };
    }
    size_t free_param_count() const {
        size_t c = 0;
        for (auto& p : params)
            if (!p.dependent) ++c;
        return c;
    }
    std::optional<uint32_t> param_index(const std::string& name) const {
        for (uint32_t i = 0; i < params.size(); ++i)
            if (params[i].name == name) return i;
        return std::nullopt;
    }
};

// a fixed associative multiplication (single product, integer coefficients)
struct AsEntry {
    std::string id;
    size_t dim = 0;
    int index = 0; // the k of As_<dim>^k
    std::vector<std::vector<std::vector<int>>> table; // [i][j][k]
};

// ------------------------------------------------------------------ builder

class EntryBuilder {
public:
    EntryBuilder(std::string id, size_t dim, int group) {
        e_.id = std::move(id);
        e_.dim = dim;
        e_.group = group;
        for (auto& t : e_.tab)
            t.assign(dim, std::vector<std::vector<Poly>>(dim, std::vector<Poly>(dim)));
    }

    Poly param(const std::string& name) { return add_param(name, false, false); }
    Poly param_nz(const std::string& name) { return add_param(name, true, false); }
    Poly dep(const std::string& name) { return add_param(name, false, true); }

    EntryBuilder& constraint(const Poly& p) {
        e_.constraints.push_back(p);
        return *this;
    }

    // coefficient vector of e_i op e_j
    EntryBuilder& cell(OpKind op, size_t i, size_t j, std::vector<Poly> coeffs) {
        if (coeffs.size() != e_.dim) throw DimensionError("cell coefficient count != dim");
        e_.tab[(size_t)op][i][j] = std::move(coeffs);
        return *this;
    }

    EntryBuilder& sample(std::vector<GaussRat> tuple) {
        if (tuple.size() != e_.params.size()) throw DimensionError("sample arity != param count");
        e_.qi_samples.push_back(std::move(tuple));
        return *this;
    }

    CatalogEntry build() { return e_; }

private:
    Poly add_param(const std::string& name, bool nz, bool dep) {
        e_.params.push_back(ParamSpec{name, nz, dep});
        return Poly::var((uint32_t)(e_.params.size() - 1));
    }
    CatalogEntry e_;
};

// ------------------------------------------------------------------ data

namespace detail {

inline Poly pc(long n) { return Poly::constant(n); }

inline std::vector<CatalogEntry> build_dim1() {
    std::vector<CatalogEntry> out;
    {
        EntryBuilder b("Trias_1^1", 1, 1); // abelian
        out.push_back(b.build());
    }
    {
        EntryBuilder b("Trias_1^2", 1, 1); // x _|_ x = x
        b.cell(OpKind::Perp, 0, 0, {pc(1)});
        out.push_back(b.build());
    }
    {
        EntryBuilder b("Trias_1^3", 1, 2); // all three products: x o x = x
        b.cell(OpKind::Vdash, 0, 0, {pc(1)});
        b.cell(OpKind::Dashv, 0, 0, {pc(1)});
        b.cell(OpKind::Perp, 0, 0, {pc(1)});
        out.push_back(b.build());
    }
    return out;
}

inline std::vector<GaussRat> gr(std::initializer_list<GaussRat> xs) { return std::vector<GaussRat>(xs); }
inline GaussRat gi() { return GaussRat::i(); }

inline std::vector<CatalogEntry> build_dim2() {
    std::vector<CatalogEntry> out;
    auto P = OpKind::Perp;
    auto R = OpKind::Dashv;
    auto L = OpKind::Vdash;

    { // 1: abelian
        EntryBuilder b("Trias_2^1", 2, 1);
        out.push_back(b.build());
    }
    { // 2: y _|_ y = x
        EntryBuilder b("Trias_2^2", 2, 1);
        b.cell(P, 1, 1, {pc(1), pc(0)});
        out.push_back(b.build());
    }
    { // 3: y _|_ y = alpha*x + y
        EntryBuilder b("Trias_2^3", 2, 1);
        Poly al = b.param("alpha");
        b.cell(P, 1, 1, {al, pc(1)});
        out.push_back(b.build());
    }
    { // 4: y _|_ x = x, y _|_ y = alpha*y (alpha != 0)
        EntryBuilder b("Trias_2^4", 2, 1);
        Poly al = b.param_nz("alpha");
        b.cell(P, 1, 0, {pc(1), pc(0)});
        b.cell(P, 1, 1, {pc(0), al});
        out.push_back(b.build());
    }
    { // 5: x _|_ y = x, y _|_ y = alpha*y (alpha != 0)
        EntryBuilder b("Trias_2^5", 2, 1);
        Poly al = b.param_nz("alpha");
        b.cell(P, 0, 1, {pc(1), pc(0)});
        b.cell(P, 1, 1, {pc(0), al});
        out.push_back(b.build());
    }
    { // 6: x _|_ y = y _|_ x = x, y _|_ y = alpha*x + y
        EntryBuilder b("Trias_2^6", 2, 1);
        Poly al = b.param("alpha");
        b.cell(P, 0, 1, {pc(1), pc(0)});
        b.cell(P, 1, 0, {pc(1), pc(0)});
        b.cell(P, 1, 1, {al, pc(1)});
        out.push_back(b.build());
    }
    { // 7: x _|_ x = x, y _|_ y = alpha*y
        EntryBuilder b("Trias_2^7", 2, 1);
        Poly al = b.param("alpha");
        b.cell(P, 0, 0, {pc(1), pc(0)});
        b.cell(P, 1, 1, {pc(0), al});
        out.push_back(b.build());
    }
    { // 8: x _|_ x = x, y _|_ x = y
        EntryBuilder b("Trias_2^8", 2, 1);
        b.cell(P, 0, 0, {pc(1), pc(0)});
        b.cell(P, 1, 0, {pc(0), pc(1)});
        out.push_back(b.build());
    }
    { // 9: x _|_ x = x, x _|_ y = y, y _|_ x = alpha*x, y _|_ y = alpha*y
        EntryBuilder b("Trias_2^9", 2, 1);
        Poly al = b.param("alpha");
        b.cell(P, 0, 0, {pc(1), pc(0)});
        b.cell(P, 0, 1, {pc(0), pc(1)});
        b.cell(P, 1, 0, {al, pc(0)});
        b.cell(P, 1, 1, {pc(0), al});
        out.push_back(b.build());
    }
    { // 10: x _|_ x = x, x _|_ y = y, y _|_ x = y, y _|_ y = alpha*x + beta*y
        EntryBuilder b("Trias_2^10", 2, 1);
        Poly al = b.param("alpha"), be = b.param("beta");
        b.cell(P, 0, 0, {pc(1), pc(0)});
        b.cell(P, 0, 1, {pc(0), pc(1)});
        b.cell(P, 1, 0, {pc(0), pc(1)});
        b.cell(P, 1, 1, {al, be});
        out.push_back(b.build());
    }
    { // 11: x _|_ x = x, x _|_ y = y _|_ x = alpha*x, y _|_ y = alpha*y (alpha != 0)
        EntryBuilder b("Trias_2^11", 2, 1);
        Poly al = b.param_nz("alpha");
        b.cell(P, 0, 0, {pc(1), pc(0)});
        b.cell(P, 0, 1, {al, pc(0)});
        b.cell(P, 1, 0, {al, pc(0)});
        b.cell(P, 1, 1, {pc(0), al});
        out.push_back(b.build());
    }
    { // 12: x _|_ x = x, x _|_ y = alpha*x, y _|_ x = y, y _|_ y = alpha*y (alpha != 0)
        EntryBuilder b("Trias_2^12", 2, 1);
        Poly al = b.param_nz("alpha");
        b.cell(P, 0, 0, {pc(1), pc(0)});
        b.cell(P, 0, 1, {al, pc(0)});
        b.cell(P, 1, 0, {pc(0), pc(1)});
        b.cell(P, 1, 1, {pc(0), al});
        out.push_back(b.build());
    }
    { // 13: x _|_ x = alpha*x + y
        EntryBuilder b("Trias_2^13", 2, 1);
        Poly al = b.param("alpha");
        b.cell(P, 0, 0, {al, pc(1)});
        out.push_back(b.build());
    }
    { // 14: x _|_ x = alpha_1*x + beta*y, x _|_ y = y _|_ x = gamma*y, y _|_ y = alpha_2*y
        //     with gamma^2 - alpha_1*gamma - beta*alpha_2 = 0, beta != 0
        EntryBuilder b("Trias_2^14", 2, 1);
        Poly a1 = b.param("alpha_1"), a2 = b.param("alpha_2"), be = b.param_nz("beta"), ga = b.dep("gamma");
        b.constraint(ga * ga - a1 * ga - be * a2);
        b.cell(P, 0, 0, {a1, be});
        b.cell(P, 0, 1, {pc(0), ga});
        b.cell(P, 1, 0, {pc(0), ga});
        b.cell(P, 1, 1, {pc(0), a2});
        b.sample(gr({GaussRat(0), GaussRat(0), GaussRat(1), GaussRat(0)}));
        b.sample(gr({GaussRat(0), GaussRat(1), GaussRat(1), GaussRat(1)}));
        b.sample(gr({GaussRat(1), GaussRat(0), GaussRat(1), GaussRat(1)}));
        b.sample(gr({GaussRat(0), GaussRat(-1), GaussRat(1), gi()}));
        b.sample(gr({GaussRat(1), GaussRat(1), GaussRat(2), GaussRat(2)}));
        out.push_back(b.build());
    }
    { // 15: x _|_ x = alpha*x + y, x _|_ y = y _|_ x = beta*x, y _|_ y = beta*y (beta != 0)
        EntryBuilder b("Trias_2^15", 2, 1);
        Poly al = b.param("alpha"), be = b.param_nz("beta");
        b.cell(P, 0, 0, {al, pc(1)});
        b.cell(P, 0, 1, {be, pc(0)});
        b.cell(P, 1, 0, {be, pc(0)});
        b.cell(P, 1, 1, {pc(0), be});
        out.push_back(b.build());
    }
    { // 16: x _|_ x = alpha*x + beta_1*y, x _|_ y = y _|_ x = gamma_1*x + gamma_2*y,
        //     y _|_ y = beta_2*x ; full associativity variety:
        //     gamma_1*gamma_2 = beta_1*beta_2 and gamma_2^2 - alpha*gamma_2 + beta_1*gamma_1 = 0
        EntryBuilder b("Trias_2^16", 2, 1);
        Poly al = b.param("alpha"), b1 = b.param_nz("beta_1"), b2 = b.param_nz("beta_2");
        Poly g1 = b.dep("gamma_1"), g2 = b.dep("gamma_2");
        b.constraint(g1 * g2 - b1 * b2);
        b.constraint(g2 * g2 - al * g2 + b1 * g1);
        b.cell(P, 0, 0, {al, b1});
        b.cell(P, 0, 1, {g1, g2});
        b.cell(P, 1, 0, {g1, g2});
        b.cell(P, 1, 1, {b2, pc(0)});
        b.sample(gr({GaussRat(2), GaussRat(1), GaussRat(1), GaussRat(1), GaussRat(1)}));
        b.sample(gr({GaussRat(3), GaussRat(1), GaussRat(2), GaussRat(2), GaussRat(1)}));
        b.sample(gr({GaussRat(3), GaussRat(2), GaussRat(Rational(1, 2)), GaussRat(1), GaussRat(1)}));
        b.sample(gr({GaussRat(0), GaussRat(1), gi(), GaussRat(1), gi()}));
        b.sample(gr({GaussRat(0), GaussRat(1), GaussRat(-1), GaussRat(-1), GaussRat(1)}));
        out.push_back(b.build());
    }
    { // 17: x _|_ x = alpha*x + beta_1*y, x _|_ y = y _|_ x = gamma_1*x + gamma_2*y,
        //     y _|_ y = beta_2*x + beta_3*y ; associativity variety:
        //     gamma_1*gamma_2 = beta_1*beta_2 and gamma_2^2 - alpha*gamma_2 + beta_1*gamma_1 - beta_1*beta_3 = 0
        EntryBuilder b("Trias_2^17", 2, 1);
        Poly al = b.param("alpha"), b1 = b.param_nz("beta_1"), b2 = b.param_nz("beta_2"), b3 = b.param_nz("beta_3");
        Poly g1 = b.dep("gamma_1"), g2 = b.dep("gamma_2");
        b.constraint(g1 * g2 - b1 * b2);
        b.constraint(g2 * g2 - al * g2 + b1 * g1 - b1 * b3);
        b.cell(P, 0, 0, {al, b1});
        b.cell(P, 0, 1, {g1, g2});
        b.cell(P, 1, 0, {g1, g2});
        b.cell(P, 1, 1, {b2, b3});
        b.sample(gr({GaussRat(1), GaussRat(1), GaussRat(1), GaussRat(1), GaussRat(1), GaussRat(1)}));
        b.sample(gr({GaussRat(2), GaussRat(1), GaussRat(2), GaussRat(1), GaussRat(2), GaussRat(1)}));
        b.sample(gr({GaussRat(0), GaussRat(1), GaussRat(-1), GaussRat(2), GaussRat(1), GaussRat(-1)}));
        b.sample(gr({gi(), GaussRat(1), gi(), GaussRat(1), gi(), GaussRat(1)}));
        out.push_back(b.build());
    }
    { // 18: y -| y = y, x _|_ x = alpha*x
        EntryBuilder b("Trias_2^18", 2, 1);
        Poly al = b.param("alpha");
        b.cell(R, 1, 1, {pc(0), pc(1)});
        b.cell(P, 0, 0, {al, pc(0)});
        out.push_back(b.build());
    }
    { // 19: y -| y = x, y _|_ y = alpha*x
        EntryBuilder b("Trias_2^19", 2, 1);
        Poly al = b.param("alpha");
        b.cell(R, 1, 1, {pc(1), pc(0)});
        b.cell(P, 1, 1, {al, pc(0)});
        out.push_back(b.build());
    }
    { // 20: x -| x = y, x _|_ x = alpha*y
        EntryBuilder b("Trias_2^20", 2, 1);
        Poly al = b.param("alpha");
        b.cell(R, 0, 0, {pc(0), pc(1)});
        b.cell(P, 0, 0, {pc(0), al});
        out.push_back(b.build());
    }
    { // 21: y -| x = x
        EntryBuilder b("Trias_2^21", 2, 1);
        b.cell(R, 1, 0, {pc(1), pc(0)});
        out.push_back(b.build());
    }
    { // 22: x -| y = x, y -| x = alpha*x
        EntryBuilder b("Trias_2^22", 2, 1);
        Poly al = b.param("alpha");
        b.cell(R, 0, 1, {pc(1), pc(0)});
        b.cell(R, 1, 0, {al, pc(0)});
        out.push_back(b.build());
    }
    { // 23: x -| y = x, y _|_ x = alpha*x
        EntryBuilder b("Trias_2^23", 2, 1);
        Poly al = b.param("alpha");
        b.cell(R, 0, 1, {pc(1), pc(0)});
        b.cell(P, 1, 0, {al, pc(0)});
        out.push_back(b.build());
    }
    { // 24: -| and _|_ both nonzero; gamma_1^3 = alpha_1^2*alpha_2 etc.; the table slot
        //   alpha_1*beta/alpha_2 is carried by the dependent parameter mu
        EntryBuilder b("Trias_2^24", 2, 1);
        Poly a1 = b.param_nz("alpha_1"), a2 = b.param_nz("alpha_2"), be = b.param("beta");
        Poly g1 = b.dep("gamma_1"), g2 = b.dep("gamma_2");
        Poly d1 = b.dep("delta_1"), d2 = b.dep("delta_2"), mu = b.dep("mu");
        b.constraint(g1 * g1 * g1 - a1 * a1 * a2);
        b.constraint(g2 * a1 - g1 * g1);
        b.constraint(d1 * a2 - g1 * be);
        b.constraint(d2 * a2 - g2 * be);
        b.constraint(mu * a2 - a1 * be);
        b.cell(R, 0, 0, {g1, a1});
        b.cell(R, 0, 1, {-g2, -g1});
        b.cell(R, 1, 0, {-g2, -g1});
        b.cell(R, 1, 1, {a2, g2});
        b.cell(P, 0, 0, {d1, mu});
        b.cell(P, 0, 1, {-d2, -d1});
        b.cell(P, 1, 0, {-d2, -d1});
        b.cell(P, 1, 1, {be, d2});
        b.sample(gr({GaussRat(1), GaussRat(1), GaussRat(0), GaussRat(1), GaussRat(1), GaussRat(0), GaussRat(0), GaussRat(0)}));
        b.sample(gr({GaussRat(1), GaussRat(1), GaussRat(1), GaussRat(1), GaussRat(1), GaussRat(1), GaussRat(1), GaussRat(1)}));
        b.sample(gr({GaussRat(2), GaussRat(2), GaussRat(1), GaussRat(2), GaussRat(2), GaussRat(1), GaussRat(1), GaussRat(1)}));
        b.sample(gr({GaussRat(1), GaussRat(8), GaussRat(1), GaussRat(2), GaussRat(4), GaussRat(Rational(1, 4)),
                     GaussRat(Rational(1, 2)), GaussRat(Rational(1, 8))}));
        out.push_back(b.build());
    }
    { // 25: x |- x = x ; x -| x = x, y -| x = y ; x _|_ x = x, y _|_ x = y
        EntryBuilder b("Trias_2^25", 2, 2);
        b.cell(L, 0, 0, {pc(1), pc(0)});
        b.cell(R, 0, 0, {pc(1), pc(0)});
        b.cell(R, 1, 0, {pc(0), pc(1)});
        b.cell(P, 0, 0, {pc(1), pc(0)});
        b.cell(P, 1, 0, {pc(0), pc(1)});
        out.push_back(b.build());
    }
    { // 26: x |- x = x ; x -| x = x, y -| x = y ; x _|_ x = x
        EntryBuilder b("Trias_2^26", 2, 2);
        b.cell(L, 0, 0, {pc(1), pc(0)});
        b.cell(R, 0, 0, {pc(1), pc(0)});
        b.cell(R, 1, 0, {pc(0), pc(1)});
        b.cell(P, 0, 0, {pc(1), pc(0)});
        out.push_back(b.build());
    }
    { // 27: x |- x = x ; x -| x = x ; x _|_ x = x, y _|_ y = alpha*y
        EntryBuilder b("Trias_2^27", 2, 2);
        Poly al = b.param("alpha");
        b.cell(L, 0, 0, {pc(1), pc(0)});
        b.cell(R, 0, 0, {pc(1), pc(0)});
        b.cell(P, 0, 0, {pc(1), pc(0)});
        b.cell(P, 1, 1, {pc(0), al});
        out.push_back(b.build());
    }
    { // 28: x |- x = y ; x -| x = alpha*y ; x _|_ x = beta*y
        EntryBuilder b("Trias_2^28", 2, 3);
        Poly al = b.param("alpha"), be = b.param("beta");
        b.cell(L, 0, 0, {pc(0), pc(1)});
        b.cell(R, 0, 0, {pc(0), al});
        b.cell(P, 0, 0, {pc(0), be});
        out.push_back(b.build());
    }
    { // 29
        EntryBuilder b("Trias_2^29", 2, 4);
        b.cell(L, 0, 0, {pc(1), pc(0)});
        b.cell(L, 0, 1, {pc(0), pc(1)});
        b.cell(R, 0, 0, {pc(1), pc(0)});
        b.cell(P, 0, 0, {pc(1), pc(0)});
        out.push_back(b.build());
    }
    { // 30
        EntryBuilder b("Trias_2^30", 2, 4);
        b.cell(L, 0, 0, {pc(1), pc(0)});
        b.cell(L, 0, 1, {pc(0), pc(1)});
        b.cell(R, 0, 0, {pc(1), pc(0)});
        b.cell(P, 0, 0, {pc(1), pc(0)});
        b.cell(P, 0, 1, {pc(0), pc(1)});
        out.push_back(b.build());
    }
    { // 31
        EntryBuilder b("Trias_2^31", 2, 4);
        Poly al = b.param("alpha");
        b.cell(L, 0, 0, {pc(1), pc(0)});
        b.cell(L, 0, 1, {pc(0), pc(1)});
        b.cell(R, 0, 0, {pc(1), pc(0)});
        b.cell(R, 1, 0, {pc(0), pc(1)});
        b.cell(P, 0, 0, {pc(1), pc(0)});
        b.cell(P, 1, 1, {pc(0), al});
        out.push_back(b.build());
    }
    { // 32
        EntryBuilder b("Trias_2^32", 2, 4);
        b.cell(L, 0, 0, {pc(1), pc(0)});
        b.cell(L, 0, 1, {pc(0), pc(1)});
        b.cell(R, 0, 0, {pc(1), pc(0)});
        b.cell(R, 1, 0, {pc(0), pc(1)});
        b.cell(P, 0, 0, {pc(1), pc(0)});
        b.cell(P, 1, 0, {pc(0), pc(1)});
        out.push_back(b.build());
    }
    { // 33
        EntryBuilder b("Trias_2^33", 2, 4);
        b.cell(L, 0, 0, {pc(1), pc(0)});
        b.cell(L, 0, 1, {pc(0), pc(1)});
        b.cell(R, 0, 0, {pc(1), pc(0)});
        b.cell(R, 1, 0, {pc(0), pc(1)});
        b.cell(P, 0, 0, {pc(1), pc(0)});
        b.cell(P, 0, 1, {pc(0), pc(1)});
        out.push_back(b.build());
    }
    { // 34
        EntryBuilder b("Trias_2^34", 2, 4);
        Poly al = b.param("alpha");
        b.cell(L, 0, 0, {pc(1), pc(0)});
        b.cell(L, 0, 1, {pc(0), pc(1)});
        b.cell(R, 0, 0, {pc(1), pc(0)});
        b.cell(R, 1, 0, {pc(0), pc(1)});
        b.cell(P, 0, 0, {pc(1), pc(0)});
        b.cell(P, 0, 1, {pc(0), pc(1)});
        b.cell(P, 1, 0, {pc(0), pc(1)});
        b.cell(P, 1, 1, {pc(0), al});
        out.push_back(b.build());
    }
    { // 35
        EntryBuilder b("Trias_2^35", 2, 4);
        Poly al = b.param_nz("alpha");
        b.cell(L, 0, 0, {pc(1), pc(0)});
        b.cell(L, 0, 1, {pc(0), pc(1)});
        b.cell(R, 0, 0, {pc(1), pc(0)});
        b.cell(R, 1, 0, {pc(0), pc(1)});
        b.cell(P, 0, 0, {pc(1), al});
        out.push_back(b.build());
    }
    { // 36: perp table with gamma^2 - gamma - alpha*beta = 0
        EntryBuilder b("Trias_2^36", 2, 4);
        Poly al = b.param_nz("alpha"), be = b.param("beta"), ga = b.dep("gamma");
        b.constraint(ga * ga - ga - al * be);
        b.cell(L, 0, 0, {pc(1), pc(0)});
        b.cell(L, 0, 1, {pc(0), pc(1)});
        b.cell(R, 0, 0, {pc(1), pc(0)});
        b.cell(R, 1, 0, {pc(0), pc(1)});
        b.cell(P, 0, 0, {pc(1), al});
        b.cell(P, 0, 1, {pc(0), ga});
        b.cell(P, 1, 0, {pc(0), ga});
        b.cell(P, 1, 1, {pc(0), be});
        b.sample(gr({GaussRat(1), GaussRat(0), GaussRat(0)}));
        b.sample(gr({GaussRat(1), GaussRat(0), GaussRat(1)}));
        b.sample(gr({GaussRat(1), GaussRat(2), GaussRat(2)}));
        b.sample(gr({GaussRat(2), GaussRat(1), GaussRat(2)}));
        b.sample(gr({GaussRat(1), GaussRat(Rational(-1), Rational(-1)), gi()}));
        out.push_back(b.build());
    }
    { // 37
        EntryBuilder b("Trias_2^37", 2, 4);
        b.cell(L, 0, 0, {pc(1), pc(0)});
        b.cell(L, 0, 1, {pc(0), pc(1)});
        b.cell(R, 0, 0, {pc(1), pc(0)});
        b.cell(R, 0, 1, {pc(0), pc(1)});
        b.cell(P, 0, 0, {pc(1), pc(0)});
        b.cell(P, 0, 1, {pc(0), pc(1)});
        out.push_back(b.build());
    }
    { // 38
        EntryBuilder b("Trias_2^38", 2, 4);
        Poly al = b.param_nz("alpha");
        b.cell(L, 0, 0, {pc(1), pc(0)});
        b.cell(L, 0, 1, {pc(0), pc(1)});
        b.cell(R, 0, 0, {pc(1), al});
        b.cell(P, 0, 0, {pc(1), al});
        out.push_back(b.build());
    }
    { // 39
        EntryBuilder b("Trias_2^39", 2, 4);
        Poly al = b.param_nz("alpha");
        b.cell(L, 0, 0, {pc(1), pc(0)});
        b.cell(L, 0, 1, {pc(0), pc(1)});
        b.cell(R, 0, 0, {pc(1), al});
        b.cell(P, 0, 0, {pc(1), pc(0)});
        b.cell(P, 0, 1, {pc(0), pc(1)});
        out.push_back(b.build());
    }
    { // 40: all three products equal: x o x = x, y o x = y
        EntryBuilder b("Trias_2^40", 2, 5);
        for (OpKind op : kOps) {
            b.cell(op, 0, 0, {pc(1), pc(0)});
            b.cell(op, 1, 0, {pc(0), pc(1)});
        }
        out.push_back(b.build());
    }
    { // 41: all three products equal: x o x = x, x o y = y, y o x = y
        EntryBuilder b("Trias_2^41", 2, 6);
        for (OpKind op : kOps) {
            b.cell(op, 0, 0, {pc(1), pc(0)});
            b.cell(op, 0, 1, {pc(0), pc(1)});
            b.cell(op, 1, 0, {pc(0), pc(1)});
        }
        out.push_back(b.build());
    }
    { // 42: all three products equal: x o x = x, y o y = y
        EntryBuilder b("Trias_2^42", 2, 7);
        for (OpKind op : kOps) {
            b.cell(op, 0, 0, {pc(1), pc(0)});
            b.cell(op, 1, 1, {pc(0), pc(1)});
        }
        out.push_back(b.build());
    }
    return out;
}

inline std::vector<AsEntry> build_as() {
    std::vector<AsEntry> out;
    auto zero = [](size_t n) {
        return std::vector<std::vector<std::vector<int>>>(
            n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
    };
    {
        AsEntry e{"As_1^1", 1, 1, zero(1)};
        out.push_back(e);
    }
    {
        AsEntry e{"As_1^2", 1, 2, zero(1)};
        e.table[0][0][0] = 1; // x x = x
        out.push_back(e);
    }
    for (int k = 1; k <= 7; ++k) {
        AsEntry e{"As_2^" + std::to_string(k), 2, k, zero(2)};
        auto s = [&](size_t i, size_t j, int cx, int cy) {
            e.table[i][j][0] = cx;
            e.table[i][j][1] = cy;
        };
        switch (k) {
            case 1: break;
            case 2: s(0, 0, 1, 0); break;                              // xx = x
            case 3: s(0, 0, 0, 1); break;                              // xx = y
            case 4: s(0, 0, 1, 0); s(0, 1, 0, 1); break;               // xx = x, xy = y
            case 5: s(0, 0, 1, 0); s(1, 0, 0, 1); break;               // xx = x, yx = y
            case 6: s(0, 0, 1, 0); s(0, 1, 0, 1); s(1, 0, 0, 1); break; // xx = x, xy = y, yx = y
            case 7: s(0, 0, 1, 0); s(1, 1, 0, 1); break;               // xx = x, yy = y
        }
        out.push_back(e);
    }
    return out;
}

} // namespace detail

inline const std::vector<CatalogEntry>& catalog_dim1() {
    static const std::vector<CatalogEntry> v = detail::build_dim1();
    return v;
}
inline const std::vector<CatalogEntry>& catalog_dim2() {
    static const std::vector<CatalogEntry> v = detail::build_dim2();
    return v;
}
inline const std::vector<CatalogEntry>& catalog_entries(size_t dim) {
    if (dim == 1) return catalog_dim1();
    if (dim == 2) return catalog_dim2();
    throw UnsupportedError("no catalog for dimension " + std::to_string(dim) + " (supported: 1, 2)");
}
inline const std::vector<AsEntry>& as_catalog() {
    static const std::vector<AsEntry> v = detail::build_as();
    return v;
}

inline const CatalogEntry& find_entry(const std::string& id) {
    for (size_t d : {1, 2})
        for (auto& e : catalog_entries(d))
            if (e.id == id) return e;
    throw InputError("unknown catalog class: " + id);
}

inline const AsEntry& find_as(const std::string& id) {
    for (auto& e : as_catalog())
        if (e.id == id) return e;
    throw InputError("unknown associative class: " + id);
}

inline const AsEntry& group_as(size_t dim, int group) {
    for (auto& e : as_catalog())
        if (e.dim == dim && e.index == group) return e;
    throw InputError("no associative class As_" + std::to_string(dim) + "^" + std::to_string(group));
}

inline std::vector<const CatalogEntry*> group_members(size_t dim, int group) {
    std::vector<const CatalogEntry*> out;
    for (auto& e : catalog_entries(dim))
        if (e.group == group) out.push_back(&e);
    return out;
}

// ------------------------------------------------------------------ instantiation

inline GaussRat eval_poly_at(const Poly& p, const std::map<uint32_t, GaussRat>& a, const FieldDescriptor&) {
    return p.eval_qi(a);
}
inline FpElem eval_poly_at(const Poly& p, const std::map<uint32_t, FpElem>& a, const FieldDescriptor& fd) {
    return p.eval_fp(a, fd.p);
}

inline std::string param_str(const GaussRat& v) {
    return v.im.is_zero() ? v.re.str() : v.re.str() + "," + v.im.str();
}
inline std::string param_str(const FpElem& v) { return std::to_string(v.v); }

// positional parameter values, in declaration order
template <class K>
Trialgebra<K> instantiate(const CatalogEntry& e, const std::vector<K>& values, const FieldDescriptor& fd) {
    if (values.size() != e.params.size())
        throw ArityError(e.id + " takes " + std::to_string(e.params.size()) + " parameter(s), got " +
                         std::to_string(values.size()));
    std::map<uint32_t, K> assign;
    for (uint32_t i = 0; i < values.size(); ++i) {
        if (e.params[i].nonzero && values[i].is_zero())
            throw DomainError("parameter " + e.params[i].name + " of " + e.id + " must be nonzero");
        assign[i] = values[i];
    }
    for (const Poly& c : e.constraints) {
        K v = eval_poly_at(c, assign, fd);
        if (!v.is_zero())
            throw ConstraintError("constraint " + c.render(e.names()) + " = 0 violated for " + e.id +
                                  " (evaluates to " + param_str(v) + ")");
    }
    Trialgebra<K> A;
    K zero = zero_like(values.empty() ? eval_poly_at(Poly(), assign, fd) : values[0]);
    A.constants = StructureConstants<K>(e.dim, fd, zero);
    for (OpKind op : kOps)
        for (size_t i = 0; i < e.dim; ++i)
            for (size_t j = 0; j < e.dim; ++j) {
                Vec<K> cell(e.dim, zero);
                for (size_t k = 0; k < e.dim; ++k)
                    cell[k] = eval_poly_at(e.tab[(size_t)op][i][j][k], assign, fd);
                A.constants.set(op, i, j, std::move(cell));
            }
    Provenance prov;
    prov.klass = e.id;
    for (uint32_t i = 0; i < values.size(); ++i) prov.params[e.params[i].name] = param_str(values[i]);
    A.provenance = prov;
    A.name = e.id;
    return A;
}

// by-name parameter values
template <class K>
Trialgebra<K> instantiate_named(const CatalogEntry& e, const std::map<std::string, K>& byname,
                                const FieldDescriptor& fd) {
    std::vector<K> values;
    for (auto& p : e.params) {
        auto it = byname.find(p.name);
        if (it == byname.end()) throw InputError("missing parameter " + p.name + " for " + e.id);
        values.push_back(it->second);
    }
    for (auto& [k, v] : byname)
        if (!e.param_index(k)) throw InputError(e.id + " has no parameter named " + k);
    return instantiate(e, values, fd);
}

template <class K>
Trialgebra<K> as_trialgebra(const AsEntry& e, const FieldDescriptor& fd, const K& one) {
    K zero = zero_like(one);
    Trialgebra<K> A;
    A.constants = StructureConstants<K>(e.dim, fd, zero);
    for (size_t i = 0; i < e.dim; ++i)
        for (size_t j = 0; j < e.dim; ++j) {
            Vec<K> cell(e.dim, zero);
            for (size_t k = 0; k < e.dim; ++k) {
                int c = e.table[i][j][k];
                K acc = zero;
                for (int t = 0; t < (c >= 0 ? c : -c); ++t) acc = acc + one;
                cell[k] = c >= 0 ? acc : zero - acc;
            }
            A.constants.set(OpKind::Vdash, i, j, std::move(cell));
        }
    A.name = e.id;
    return A;
}

// ------------------------------------------------------------------ sampling

// exact sample tuples for one entry: designated tuples when the family is
// constrained, otherwise a k-point grid per free parameter (0-based where the
// domain admits 0, else 1-based), last parameter varying fastest
inline std::vector<std::vector<GaussRat>> qi_sample_assignments(const CatalogEntry& e, size_t k) {
    if (!e.qi_samples.empty()) {
        std::vector<std::vector<GaussRat>> out(e.qi_samples.begin(),
                                               e.qi_samples.begin() + std::min(k, e.qi_samples.size()));
        return out;
    }
    if (e.params.empty()) return {{}};
    std::vector<std::vector<GaussRat>> grids;
    for (auto& p : e.params) {
        std::vector<GaussRat> g;
        for (size_t t = 0; t < k; ++t) g.push_back(GaussRat((long)(p.nonzero ? t + 1 : t)));
        grids.push_back(std::move(g));
    }
    std::vector<std::vector<GaussRat>> out;
    std::vector<size_t> idx(e.params.size(), 0);
    while (true) {
        std::vector<GaussRat> tuple;
        for (size_t i = 0; i < idx.size(); ++i) tuple.push_back(grids[i][idx[i]]);
        out.push_back(std::move(tuple));
        size_t pos = idx.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < grids[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) return out;
        }
    }
}

// every parameter tuple over F_p meeting the domain and constraint conditions,
// in ascending lexicographic order
inline std::vector<std::vector<FpElem>> fp_admissible_assignments(const CatalogEntry& e, uint32_t p) {
    std::vector<std::vector<FpElem>> out;
    size_t np = e.params.size();
    if (np == 0) {
        out.push_back({});
        return out;
    }
    std::vector<uint32_t> digits(np, 0);
    while (true) {
        bool ok = true;
        for (size_t i = 0; i < np; ++i)
            if (e.params[i].nonzero && digits[i] == 0) { ok = false; break; }
        if (ok) {
            std::map<uint32_t, FpElem> assign;
            for (size_t i = 0; i < np; ++i) assign[(uint32_t)i] = FpElem(digits[i], p);
            for (const Poly& c : e.constraints)
                if (!c.eval_fp(assign, p).is_zero()) { ok = false; break; }
            if (ok) {
                std::vector<FpElem> tuple;
                for (size_t i = 0; i < np; ++i) tuple.push_back(FpElem(digits[i], p));
                out.push_back(std::move(tuple));
            }
        }
        size_t pos = np;
        bool done = true;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < p) { done = false; break; }
            digits[pos] = 0;
        }
        if (done) return out;
    }
}

// ------------------------------------------------------------------ validation

struct ValidationFailure {
    std::string entry_id;
    std::vector<std::pair<std::string, std::string>> params; // name, value text
    std::string identity;
    std::string assignment; // e.g. "(y, y, x)"
    std::string lhs, rhs;   // rendered coefficient vectors
};

struct EntryValidation {
    std::string id;
    size_t samples = 0;
    size_t failing_samples = 0;
    bool pass = true;
    std::optional<ValidationFailure> first_failure;
};

struct ValidationReport {
    std::string field;
    size_t classes_total = 0;
    size_t classes_passed = 0;
    size_t failing_sample_pairs = 0;
    std::vector<EntryValidation> entries;
};

inline std::string basis_symbol(size_t dim, size_t idx) {
    if (dim == 1) return "x";
    return idx == 0 ? "x" : "y";
}

template <class K>
std::string render_vec(const Vec<K>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += param_str(v[i]);
    }
    return s + "]";
}

template <class K>
std::optional<ValidationFailure> validate_instance(const CatalogEntry& e, const Trialgebra<K>& A) {
    for (const Identity& id : builtin_axioms()) {
        auto viols = check_identity(A, id);
        if (viols.empty()) continue;
        const auto& v = viols.front();
        ValidationFailure f;
        f.entry_id = e.id;
        if (A.provenance)
            for (auto& p : e.params) f.params.emplace_back(p.name, A.provenance->params.at(p.name));
        f.identity = id.name;
        std::string a = "(";
        bool first = true;
        for (auto& [var, idx] : v.assignment) {
            if (!first) a += ", ";
            first = false;
            a += basis_symbol(A.dim(), idx);
        }
        f.assignment = a + ")";
        f.lhs = render_vec(v.lhs);
        f.rhs = render_vec(v.rhs);
        return f;
    }
    return std::nullopt;
}

// instantiates every catalog class of both dimensions at sample points and
// checks all 11 identities exactly; failures are reported with the first
// violating instance, never patched
inline ValidationReport validate_catalog(const FieldDescriptor& fd, size_t samples_per_param,
                                          const std::vector<size_t>& dims = {1, 2}) {
    ValidationReport rep;
    rep.field = fd.str();
    for (size_t dim : dims) {
        for (const CatalogEntry& e : catalog_entries(dim)) {
            EntryValidation ev;
            ev.id = e.id;
            if (fd.kind == FieldKind::Qi) {
                for (auto& tuple : qi_sample_assignments(e, samples_per_param)) {
                    auto A = instantiate<GaussRat>(e, tuple, fd);
                    ++ev.samples;
                    if (auto f = validate_instance(e, A)) {
                        ++ev.failing_samples;
                        if (!ev.first_failure) ev.first_failure = f;
                    }
                }
            } else {
                auto all = fp_admissible_assignments(e, fd.p);
                size_t cap = 1;
                size_t nf = std::max<size_t>(e.free_param_count(), 1);
                for (size_t i = 0; i < nf; ++i) cap *= samples_per_param;
                if (all.size() > cap) all.resize(cap);
                for (auto& tuple : all) {
                    auto A = instantiate<FpElem>(e, tuple, fd);
                    ++ev.samples;
                    if (auto f = validate_instance(e, A)) {
                        ++ev.failing_samples;
                        if (!ev.first_failure) ev.first_failure = f;
                    }
                }
            }
            ev.pass = ev.failing_samples == 0;
            rep.failing_sample_pairs += ev.failing_samples;
            ++rep.classes_total;
            if (ev.pass) ++rep.classes_passed;
            rep.entries.push_back(std::move(ev));
        }
    }
    return rep;
}

// associativity check for the single-product catalog
template <class K>
bool as_entry_associative(const AsEntry& e, const FieldDescriptor& fd, const K& one) {
    auto A = as_trialgebra(e, fd, one);
    return check_identity(A, builtin_axioms().front()).empty(); // A1 on vdash
}

} // namespace trias
