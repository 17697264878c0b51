#include <catch_amalgamated.hpp>

#include <set>

#include <trias/catalog.hpp>

using namespace trias;

TEST_CASE("catalog sizes") {
    CHECK(catalog_entries(1).size() == 3);
    CHECK(catalog_entries(2).size() == 42);
    CHECK_THROWS_AS(catalog_entries(3), UnsupportedError);
    size_t as1 = 0, as2 = 0;
    for (const auto& a : as_catalog()) (a.dim == 1 ? as1 : as2)++;
    CHECK(as1 == 2);
    CHECK(as2 == 7);
    CHECK_THROWS_AS(find_entry("Trias_9^9"), InputError);
    CHECK_THROWS_AS(find_as("As_9^9"), InputError);
}

TEST_CASE("ids and groups are consistent") {
    std::set<std::string> seen;
    for (size_t d : {1, 2})
        for (const auto& e : catalog_entries(d)) {
            CHECK(seen.insert(e.id).second);
            CHECK(e.dim == d);
            // the group index must name a shipped associative class
            CHECK_NOTHROW(group_as(e.dim, e.group));
        }
}

TEST_CASE("every class restricts to its associative group on the first product") {
    for (size_t d : {1, 2})
        for (const auto& e : catalog_entries(d)) {
            const AsEntry& g = group_as(e.dim, e.group);
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j)
                    for (size_t k = 0; k < d; ++k) {
                        const Poly& p = e.tab[(size_t)OpKind::Vdash][i][j][k];
                        CHECK(p.is_constant());
                        CHECK(p.constant_value() == GaussRat(g.table[i][j][k]));
                    }
        }
}

TEST_CASE("every associative class is associative, over both fields") {
    for (const auto& a : as_catalog()) {
        auto A = as_trialgebra<GaussRat>(a, FieldDescriptor::qi(), GaussRat(1));
        CHECK(passes_pack(A, associative_pack(OpKind::Vdash)));
        auto B = as_trialgebra<FpElem>(a, FieldDescriptor::fp(7), FpElem(1, 7));
        CHECK(passes_pack(B, associative_pack(OpKind::Vdash)));
    }
}

TEST_CASE("instantiation validates arity, domain, and constraints") {
    const CatalogEntry& e4 = find_entry("Trias_2^4");
    FieldDescriptor qi = FieldDescriptor::qi();
    CHECK_THROWS_AS(instantiate<GaussRat>(e4, {}, qi), ArityError);
    CHECK_THROWS_AS(instantiate<GaussRat>(e4, {GaussRat(0)}, qi), DomainError);
    CHECK_NOTHROW(instantiate<GaussRat>(e4, {GaussRat(1)}, qi));

    const CatalogEntry& e14 = find_entry("Trias_2^14");
    // gamma^2 - alpha_1*gamma - beta*alpha_2 must vanish
    CHECK_THROWS_AS(
        instantiate<GaussRat>(e14, {GaussRat(0), GaussRat(0), GaussRat(1), GaussRat(1)}, qi),
        ConstraintError);
    CHECK_NOTHROW(
        instantiate<GaussRat>(e14, {GaussRat(0), GaussRat(1), GaussRat(1), GaussRat(1)}, qi));
    CHECK_THROWS_AS(instantiate_named<GaussRat>(e14, {{"alpha_1", GaussRat(0)}}, qi), InputError);
    CHECK_THROWS_AS(instantiate_named<GaussRat>(
                        e14, {{"alpha_1", GaussRat(0)}, {"alpha_2", GaussRat(0)},
                              {"beta", GaussRat(1)}, {"gamma", GaussRat(0)}, {"zz", GaussRat(0)}},
                        qi),
                    InputError);
}

TEST_CASE("designated exact samples ship with every constrained family") {
    for (const char* id : {"Trias_2^14", "Trias_2^16", "Trias_2^17"}) {
        const CatalogEntry& e = find_entry(id);
        REQUIRE_FALSE(e.constraints.empty());
        auto samples = qi_sample_assignments(e, 5);
        REQUIRE_FALSE(samples.empty());
        for (const auto& tuple : samples) {
            std::map<uint32_t, GaussRat> assign;
            for (uint32_t i = 0; i < tuple.size(); ++i) assign[i] = tuple[i];
            for (const Poly& c : e.constraints)
                CHECK(eval_poly_at(c, assign, FieldDescriptor::qi()).is_zero());
            CHECK_NOTHROW(instantiate<GaussRat>(e, tuple, FieldDescriptor::qi()));
        }
    }
}

TEST_CASE("unconstrained sampling grids respect the nonzero flag") {
    const CatalogEntry& e4 = find_entry("Trias_2^4");
    auto s = qi_sample_assignments(e4, 3);
    REQUIRE(s.size() == 3);
    for (const auto& t : s) CHECK_FALSE(t[0].is_zero());
    const CatalogEntry& e2 = find_entry("Trias_2^2");
    CHECK(qi_sample_assignments(e2, 3) == std::vector<std::vector<GaussRat>>{{}});
}

TEST_CASE("admissible parameter tuples over small prime fields") {
    const CatalogEntry& e4 = find_entry("Trias_2^4");
    auto a4 = fp_admissible_assignments(e4, 2);
    REQUIRE(a4.size() == 1);
    CHECK(a4[0][0].v == 1);

    const CatalogEntry& e14 = find_entry("Trias_2^14");
    CHECK(fp_admissible_assignments(e14, 2).size() == 4);

    // faithfulness sweep: every admissible tuple satisfies domain + constraints,
    // and instantiation at it passes without throwing
    for (const auto& e : catalog_entries(2)) {
        for (const auto& tuple : fp_admissible_assignments(e, 3)) {
            std::map<uint32_t, FpElem> assign;
            for (uint32_t i = 0; i < tuple.size(); ++i) {
                if (e.params[i].nonzero) CHECK_FALSE(tuple[i].is_zero());
                assign[i] = tuple[i];
            }
            for (const Poly& c : e.constraints)
                CHECK(eval_poly_at(c, assign, FieldDescriptor::fp(3)).is_zero());
            CHECK_NOTHROW(instantiate<FpElem>(e, tuple, FieldDescriptor::fp(3)));
        }
    }
}

TEST_CASE("full validation over the gaussian rationals") {
    auto rep = validate_catalog(FieldDescriptor::qi(), 3);
    CHECK(rep.classes_total == 45);
    CHECK(rep.classes_passed == 39);
    CHECK(rep.failing_sample_pairs == 14);
    std::set<std::string> failing;
    for (const auto& ev : rep.entries)
        if (!ev.pass) failing.insert(ev.id);
    CHECK(failing == std::set<std::string>{"Trias_2^4", "Trias_2^5", "Trias_2^18", "Trias_2^21",
                                           "Trias_2^22", "Trias_2^23"});
    for (const auto& ev : rep.entries)
        if (!ev.pass) {
            REQUIRE(ev.first_failure);
            CHECK_FALSE(ev.first_failure->identity.empty());
            CHECK_FALSE(ev.first_failure->assignment.empty());
            CHECK(ev.first_failure->lhs != ev.first_failure->rhs);
        }
}

TEST_CASE("the two parameterized failures hold exactly away from 1") {
    // the shipped tables for these two classes satisfy all eleven identities
    // exactly when alpha = 1 and break A3 otherwise
    for (const char* id : {"Trias_2^4", "Trias_2^5"}) {
        const CatalogEntry& e = find_entry(id);
        auto good = instantiate<GaussRat>(e, {GaussRat(1)}, FieldDescriptor::qi());
        CHECK(passes_pack(good, triassociative_pack()));
        for (long v : {2, 3, -1}) {
            auto bad = instantiate<GaussRat>(e, {GaussRat(v)}, FieldDescriptor::qi());
            CHECK_FALSE(check_identity(bad, pack_by_name("A3").identities.front()).empty());
        }
    }
}

TEST_CASE("full validation over a prime field flags the same classes") {
    auto rep = validate_catalog(FieldDescriptor::fp(5), 2);
    CHECK(rep.classes_total == 45);
    std::set<std::string> failing;
    for (const auto& ev : rep.entries)
        if (!ev.pass) failing.insert(ev.id);
    CHECK(failing == std::set<std::string>{"Trias_2^4", "Trias_2^5", "Trias_2^18", "Trias_2^21",
                                           "Trias_2^22", "Trias_2^23"});
}
