#include "weakhopf/zoo.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace weakhopf;

namespace {

const std::vector<NamedAlgebra>& zoo() {
    static const std::vector<NamedAlgebra> z = corpus();
    return z;
}

const NamedAlgebra& by_name(const std::string& name) {
    for (const auto& e : zoo())
        if (e.name == name) return e;
    FAIL("unknown corpus algebra " + name);
    throw Error("unreachable");
}

}  // namespace

TEST_CASE("corpus shape is pinned") {
    const std::vector<std::pair<std::string, int>> expected = {
        {"trivial", 1},  {"two_points", 2}, {"z2_group", 2},
        {"pair2", 4},    {"z3_group", 3},   {"z4_group", 4},
        {"two_points_z2", 8}, {"idem2", 2}, {"leftzero3", 3}};
    REQUIRE(zoo().size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i) {
        REQUIRE(zoo()[i].name == expected[i].first);
        REQUIRE(zoo()[i].algebra.dim == expected[i].second);
    }
    int groupoids = 0, monoids = 0;
    for (const auto& e : zoo()) {
        if (e.groupoid) ++groupoids;
        if (e.monoid) ++monoids;
        REQUIRE((e.groupoid.has_value() != e.monoid.has_value()));
    }
    REQUIRE(groupoids == 7);
    REQUIRE(monoids == 2);
}

TEST_CASE("every corpus algebra ships three lawful named modules") {
    for (const auto& entry : zoo()) {
        INFO(entry.name);
        auto mods = standard_modules(entry);  // throws if any module is unlawful
        REQUIRE(mods.size() == 3);
        for (const auto& [mname, mod] : mods) {
            INFO(mname);
            REQUIRE(!mname.empty());
            REQUIRE(mod.action.cod() == mod.carrier);
            REQUIRE(mod.action.dom() == mod.carrier * entry.algebra.dim);
        }
    }
}

TEST_CASE("groupoid validation rejects malformed data") {
    SECTION("no objects") {
        FiniteGroupoid G;
        REQUIRE_THROWS_AS(validate_groupoid(G), InvalidGroupoid);
    }
    SECTION("identity arrow of the wrong object") {
        FiniteGroupoid G = discrete_groupoid(2);
        G.identity = {0, 0};
        REQUIRE_THROWS_WITH(validate_groupoid(G),
                            Catch::Matchers::ContainsSubstring("not an endomorphism"));
    }
    SECTION("composition defined across mismatched objects") {
        FiniteGroupoid G = discrete_groupoid(2);
        G.composition[0][1] = 0;
        REQUIRE_THROWS_WITH(validate_groupoid(G),
                            Catch::Matchers::ContainsSubstring("middle objects"));
    }
    SECTION("composite lands on the wrong arrow") {
        FiniteGroupoid G = pair_groupoid(2);
        G.composition[0][1] = 0;  // f00∘f01 must be f01, not f00
        REQUIRE_THROWS_WITH(validate_groupoid(G),
                            Catch::Matchers::ContainsSubstring("composite endpoints"));
    }
    SECTION("broken inverses") {
        FiniteGroupoid G = cyclic_group_groupoid(3);
        G.inverse = {0, 1, 2};
        REQUIRE_THROWS_WITH(validate_groupoid(G),
                            Catch::Matchers::ContainsSubstring("inverse law"));
    }
    SECTION("non-associative composition") {
        FiniteGroupoid G = two_object_z2_groupoid();
        G.composition[2][5] = 0;  // keeps endpoints, identities, inverses intact
        REQUIRE_THROWS_WITH(validate_groupoid(G),
                            Catch::Matchers::ContainsSubstring("associativity"));
    }
}

TEST_CASE("monoid validation rejects malformed tables") {
    REQUIRE_THROWS_AS(validate_monoid(FiniteMonoidTable{}), InvalidMonoid);
    REQUIRE_THROWS_AS(validate_monoid(FiniteMonoidTable{2, {{0, 1}, {1, 0}}, 5}), InvalidMonoid);
    REQUIRE_THROWS_AS(validate_monoid(FiniteMonoidTable{2, {{0, 1}}, 0}), InvalidMonoid);
    REQUIRE_THROWS_AS(validate_monoid(FiniteMonoidTable{2, {{0, 7}, {1, 0}}, 0}), InvalidMonoid);
    REQUIRE_THROWS_WITH(validate_monoid(FiniteMonoidTable{2, {{1, 0}, {0, 1}}, 0}),
                        Catch::Matchers::ContainsSubstring("unit law"));
    REQUIRE_THROWS_WITH(
        validate_monoid(FiniteMonoidTable{3, {{0, 1, 2}, {1, 2, 1}, {2, 2, 2}}, 0}),
        Catch::Matchers::ContainsSubstring("associativity"));
}

TEST_CASE("group detection on multiplication tables") {
    REQUIRE(monoid_is_group(FiniteMonoidTable{2, {{0, 1}, {1, 0}}, 0}));
    REQUIRE(!monoid_is_group(idempotent_two_monoid()));
    REQUIRE(!monoid_is_group(left_zero_three_monoid()));
}

TEST_CASE("builders produce valid groupoids of the pinned sizes") {
    for (int n : {1, 2, 3}) {
        FiniteGroupoid P = pair_groupoid(n);
        validate_groupoid(P);
        REQUIRE(P.size() == n * n);
        FiniteGroupoid D = discrete_groupoid(n);
        validate_groupoid(D);
        REQUIRE(D.size() == n);
        FiniteGroupoid C = cyclic_group_groupoid(n);
        validate_groupoid(C);
        REQUIRE(C.size() == n);
    }
    FiniteGroupoid T = two_object_z2_groupoid();
    validate_groupoid(T);
    REQUIRE(T.size() == 8);
    REQUIRE(T.objects == 2);
}

TEST_CASE("free modules are lawful") {
    const WeakBimonoid& B = by_name("pair2").algebra;
    for (int X : {1, 2, 3}) {
        RightModule F = free_module(B, X);
        REQUIRE(F.carrier == X * B.dim);
        REQUIRE(is_module(F, B));
    }
}

TEST_CASE("mutation produces a counterexample for every named axiom group") {
    const WeakBimonoid& B = by_name("two_points").algebra;
    auto entry_fails = [](const AxiomReport& rep, const char* name) {
        const AxiomCheck* c = rep.find(name);
        return c != nullptr && !c->holds;
    };

    SECTION("monoid and comonoid layers") {
        WeakBimonoid m1 = mutate(B, "mu_associative");
        REQUIRE(entry_fails(validate_monoid_comonoid(m1), "mu_associative"));

        WeakBimonoid m2 = mutate(B, "mu_unital");
        AxiomReport r2 = validate_monoid_comonoid(m2);
        REQUIRE((entry_fails(r2, "mu_left_unital") || entry_fails(r2, "mu_right_unital")));

        WeakBimonoid m3 = mutate(B, "delta_coassociative");
        REQUIRE(entry_fails(validate_monoid_comonoid(m3), "delta_coassociative"));

        WeakBimonoid m4 = mutate(B, "delta_counital");
        AxiomReport r4 = validate_monoid_comonoid(m4);
        REQUIRE((entry_fails(r4, "delta_left_counital") || entry_fails(r4, "delta_right_counital")));
    }
    SECTION("compatibility layer") {
        WeakBimonoid m5 = mutate(B, "mult_comult_compat");
        REQUIRE(entry_fails(check_weak_bimonoid(m5), "mult_comult_compat"));

        WeakBimonoid m6 = mutate(B, "weak_counit");
        AxiomReport r6 = check_weak_bimonoid(m6);
        REQUIRE((entry_fails(r6, "weak_counit_braided") || entry_fails(r6, "weak_counit_plain")));

        WeakBimonoid m7 = mutate(B, "weak_unit");
        AxiomReport r7 = check_weak_bimonoid(m7);
        REQUIRE((entry_fails(r7, "weak_unit_braided") || entry_fails(r7, "weak_unit_plain")));

        WeakBimonoid m8 = mutate(B, "counit_mult");
        AxiomReport r8 = check_weak_bimonoid(m8);
        REQUIRE((entry_fails(r8, "counit_mult_braided") || entry_fails(r8, "counit_mult_plain")));
    }
    SECTION("any layer at all") {
        WeakBimonoid m = mutate(B, "any");
        REQUIRE((!validate_monoid_comonoid(m).all_hold() || !check_weak_bimonoid(m).all_hold()));
    }
    SECTION("unknown targets are rejected") {
        REQUIRE_THROWS_AS(mutate(B, "nonsense"), Error);
    }
    SECTION("mutation is deterministic") {
        WeakBimonoid a = mutate(B, "weak_unit");
        WeakBimonoid b = mutate(B, "weak_unit");
        REQUIRE(a.mu == b.mu);
        REQUIRE(a.delta == b.delta);
        REQUIRE(a.eta == b.eta);
        REQUIRE(a.eps == b.eps);
    }
}

TEST_CASE("mutants differ from their origin in exactly one entry") {
    const WeakBimonoid& B = by_name("z2_group").algebra;
    WeakBimonoid m = mutate(B, "mult_comult_compat");
    int diffs = 0;
    auto count = [&](const LinMap& x, const LinMap& y) {
        for (int r = 0; r < x.cod(); ++r)
            for (int c = 0; c < x.dom(); ++c)
                if (x.entry(r, c) != y.entry(r, c)) {
                    ++diffs;
                    REQUIRE((x.entry(r, c) - y.entry(r, c) == 1 ||
                             x.entry(r, c) - y.entry(r, c) == -1));
                }
    };
    count(B.mu, m.mu);
    count(B.delta, m.delta);
    count(B.eta, m.eta);
    count(B.eps, m.eps);
    REQUIRE(diffs == 1);
}
