#include <catch_amalgamated.hpp>

#include <random>

#include <trias/catalog.hpp>
#include <trias/identity.hpp>

using namespace trias;

TEST_CASE("builtin axioms come in canonical order") {
    std::vector<std::string> names;
    for (const auto& id : builtin_axioms()) names.push_back(id.name);
    CHECK(names == std::vector<std::string>{"A1", "A2", "D1", "D2", "S1", "T1", "T2", "T3", "T4",
                                            "S2", "A3"});
    for (const auto& id : builtin_axioms()) CHECK(id.arity == 3);
}

TEST_CASE("parser round-trips every builtin axiom") {
    for (const auto& id : builtin_axioms()) {
        Identity back = parse_identity(render_identity(id), id.name);
        CHECK(back == id);
    }
}

TEST_CASE("parser round-trips random identities") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> coin(0, 2);
    // random full binary trees over a fixed variable sequence, same sequence on
    // both sides so the multiset check passes
    std::function<TermPtr(std::vector<char>&)> build = [&](std::vector<char>& pool) -> TermPtr {
        if (pool.size() == 1) {
            char v = pool[0];
            pool.clear();
            return Term::v(v);
        }
        std::uniform_int_distribution<size_t> cut(1, pool.size() - 1);
        size_t c = cut(rng);
        std::vector<char> left(pool.begin(), pool.begin() + c);
        std::vector<char> right(pool.begin() + c, pool.end());
        OpKind op = kOps[coin(rng)];
        return Term::prod(op, build(left), build(right));
    };
    for (int t = 0; t < 200; ++t) {
        std::vector<char> vars = {'x', 'y', 'z'};
        std::shuffle(vars.begin(), vars.end(), rng);
        std::vector<char> l = vars, r = vars;
        Identity id = make_identity("t", build(l), build(r));
        CHECK(parse_identity(render_identity(id)) == id);
    }
}

TEST_CASE("parser reports position-tagged errors") {
    CHECK_THROWS_AS(parse_identity("x |- y = z"), ParseError);        // multiset mismatch
    CHECK_THROWS_AS(parse_identity("(x |- y = x |- y"), ParseError);  // unbalanced
    CHECK_THROWS_AS(parse_identity("x ? y = x ? y"), ParseError);     // unknown operator
    CHECK_THROWS_AS(parse_identity("w |- y = w |- y"), ParseError);   // bad variable
    CHECK_THROWS_AS(parse_identity("x |- y"), ParseError);            // missing '='
    try {
        parse_identity("x |- ");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("at position") != std::string::npos);
    }
}

// the involution that swaps the outer products and reverses arguments maps the
// axiom list onto itself: A1<->A2, D1<->D2, T1<->T2, T3<->T4, and fixes S1, S2,
// A3 (up to swapping sides and renaming x<->z)
namespace {

TermPtr mirror(const TermPtr& t) {
    if (t->is_var()) {
        char v = t->var == 'x' ? 'z' : t->var == 'z' ? 'x' : t->var;
        return Term::v(v);
    }
    OpKind op = t->op == OpKind::Vdash ? OpKind::Dashv
                : t->op == OpKind::Dashv ? OpKind::Vdash
                                         : OpKind::Perp;
    return Term::prod(op, mirror(t->right), mirror(t->left));
}

}  // namespace

TEST_CASE("mirror symmetry of the axiom list") {
    std::map<std::string, std::string> partner = {
        {"A1", "A2"}, {"A2", "A1"}, {"D1", "D2"}, {"D2", "D1"}, {"S1", "S1"}, {"T1", "T2"},
        {"T2", "T1"}, {"T3", "T4"}, {"T4", "T3"}, {"S2", "S2"}, {"A3", "A3"}};
    std::map<std::string, Identity> by_name;
    for (const auto& id : builtin_axioms()) by_name.emplace(id.name, id);
    for (const auto& id : builtin_axioms()) {
        const Identity& p = by_name.at(partner.at(id.name));
        // mirroring swaps the sides as well
        CHECK(term_equal(mirror(id.lhs), p.rhs));
        CHECK(term_equal(mirror(id.rhs), p.lhs));
    }
}

TEST_CASE("axiom packs by name") {
    CHECK(pack_by_name("trias").identities.size() == 11);
    auto dias = pack_by_name("dias");
    CHECK(dias.identities.size() == 5);
    for (const auto& id : dias.identities) CHECK(uses_only(id, {OpKind::Vdash, OpKind::Dashv}));
    CHECK(pack_by_name("assoc:perp").identities.size() == 1);
    CHECK(pack_by_name("A3").identities.front().name == "A3");
    CHECK_THROWS_AS(pack_by_name("nope"), InputError);
}

TEST_CASE("identity checking finds all violations of a bad table") {
    // dim 1, x -| x = x, everything else zero: D2 and T2 fail, the other nine pass
    FieldDescriptor fd = FieldDescriptor::qi();
    Trialgebra<GaussRat> A;
    A.constants = StructureConstants<GaussRat>(1, fd, GaussRat());
    A.constants.set(OpKind::Dashv, 0, 0, Vec<GaussRat>{GaussRat(1)});
    std::vector<std::string> failing;
    for (const auto& row : check_pack(A, triassociative_pack()))
        if (!row.violations.empty()) failing.push_back(row.identity);
    CHECK(failing == std::vector<std::string>{"D2", "T2"});

    auto vs = check_identity(A, pack_by_name("D2").identities.front());
    REQUIRE(vs.size() == 1);
    CHECK(vs.front().assignment == std::map<char, size_t>{{'x', 0}, {'y', 0}, {'z', 0}});
    CHECK(vs.front().lhs == Vec<GaussRat>{GaussRat(1)});
    CHECK(vs.front().rhs == Vec<GaussRat>{GaussRat()});
}

TEST_CASE("pack checks pass on a catalog instance") {
    auto A = instantiate<GaussRat>(find_entry("Trias_1^3"), {}, FieldDescriptor::qi());
    CHECK(passes_pack(A, triassociative_pack()));
    CHECK(passes_pack(A, diassociative_pack()));
}
