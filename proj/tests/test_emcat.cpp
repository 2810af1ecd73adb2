#include "weakhopf/modules.hpp"
#include "weakhopf/zoo.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>

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

RightModule named_module(const NamedAlgebra& entry, const std::string& mod) {
    for (const auto& [n, m] : standard_modules(entry))
        if (n == mod) return m;
    FAIL("unknown module " + mod + " on " + entry.name);
    throw Error("unreachable");
}

}  // namespace

TEST_CASE("module validation") {
    const WeakBimonoid& B2 = by_name("two_points").algebra;
    AxiomReport rep = validate_module(regular_module(B2), B2);
    REQUIRE(rep.all_hold());
    REQUIRE(rep.find("action_associative") != nullptr);
    REQUIRE(rep.find("action_unital") != nullptr);

    // the all-ones functional is not multiplicative over the two-point algebra
    RightModule fake = character_module({Rational(1), Rational(1)});
    REQUIRE(!is_module(fake, B2));
}

TEST_CASE("base monoid laws hold on the whole corpus with the pinned ranks") {
    const std::map<std::string, int> expected_rank = {
        {"trivial", 1}, {"two_points", 2},    {"z2_group", 1},
        {"pair2", 2},   {"z3_group", 1},      {"z4_group", 1},
        {"two_points_z2", 2}, {"idem2", 1},   {"leftzero3", 1}};
    for (const auto& entry : zoo()) {
        INFO(entry.name);
        BaseMonoid base = base_monoid(entry.algebra);
        REQUIRE(base.laws.all_hold());
        REQUIRE(base.R_dim == expected_rank.at(entry.name));
        for (const char* name :
             {"base_mult_associative", "base_mult_left_unital", "base_mult_right_unital",
              "base_comult_coassociative", "base_comult_left_counital",
              "base_comult_right_counital", "base_frobenius_left", "base_frobenius_right",
              "base_separable"})
            REQUIRE(base.laws.find(name) != nullptr);
        // separability, re-stated directly
        REQUIRE(compose(base.mu_R, base.delta_R) == LinMap::identity(base.R_dim));
        // the factorization really splits the projection
        REQUIRE(compose(base.I(), base.P()) == base.projection);
        REQUIRE(compose(base.P(), base.I()) == LinMap::identity(base.R_dim));
    }
}

TEST_CASE("base monoid of the pair groupoid, frozen") {
    BaseMonoid base = base_monoid(by_name("pair2").algebra);
    REQUIRE(base.R_dim == 2);
    REQUIRE(base.P() == LinMap::from_rows({{Rational(1), Rational(0), Rational(1), Rational(0)},
                                           {Rational(0), Rational(1), Rational(0), Rational(1)}}));
    REQUIRE(base.I() == LinMap::from_rows({{Rational(1), Rational(0)},
                                           {Rational(0), Rational(0)},
                                           {Rational(0), Rational(0)},
                                           {Rational(0), Rational(1)}}));
    REQUIRE(base.mu_R == LinMap::from_rows({{Rational(1), Rational(0), Rational(0), Rational(0)},
                                            {Rational(0), Rational(0), Rational(0), Rational(1)}}));
    REQUIRE(base.eta_R == LinMap::column({Rational(1), Rational(1)}));
    REQUIRE(base.delta_R == LinMap::from_rows({{Rational(1), Rational(0)},
                                               {Rational(0), Rational(0)},
                                               {Rational(0), Rational(0)},
                                               {Rational(0), Rational(1)}}));
    REQUIRE(base.eps_R == LinMap::row({Rational(1), Rational(1)}));
}

TEST_CASE("module products truncate") {
    const NamedAlgebra& tp = by_name("two_points");
    const WeakBimonoid& B = tp.algebra;
    RightModule p0 = named_module(tp, "point0");
    RightModule p1 = named_module(tp, "point1");

    SECTION("two different points multiply to zero") {
        ModuleTensor zero = module_tensor(p0, p1, B);
        REQUIRE(zero.E == LinMap::zero(1, 1));
        REQUIRE(zero.split.rank == 0);
        REQUIRE(zero.product.carrier == 0);
        REQUIRE(is_module(zero.product, B));
    }
    SECTION("a point squares to itself") {
        ModuleTensor same = module_tensor(p0, p0, B);
        REQUIRE(same.E == LinMap::identity(1));
        REQUIRE(same.product.carrier == 1);
        REQUIRE(same.product.action == p0.action);
    }
    SECTION("the regular module squares to the diagonal") {
        RightModule reg = regular_module(B);
        ModuleTensor sq = module_tensor(reg, reg, B);
        LinMap diag = LinMap::zero(4, 4);
        diag.set_entry(0, 0, Rational(1));
        diag.set_entry(3, 3, Rational(1));
        REQUIRE(sq.E == diag);
        REQUIRE(sq.product.carrier == 2);
        REQUIRE(is_module(sq.product, B));
    }
}

TEST_CASE("module product error contracts") {
    SECTION("a non-idempotent pairing is rejected") {
        const WeakBimonoid& B2 = by_name("two_points").algebra;
        RightModule fake = character_module({Rational(1), Rational(1)});  // not a module here
        REQUIRE_THROWS_AS(module_tensor(fake, fake, B2), IdempotencyFailed);
    }
    SECTION("an unlawful transported action is rejected") {
        const WeakBimonoid& Z2 = by_name("z2_group").algebra;
        // unital but non-multiplicative scaling: the pairing idempotent is the
        // identity, yet the induced action fails associativity.
        RightModule fake = character_module({Rational(1), Rational(2)});
        REQUIRE_THROWS_AS(module_tensor(fake, fake, Z2), ModuleLawFailed);
    }
}

TEST_CASE("product cache reuses computed products") {
    const NamedAlgebra& tp = by_name("two_points");
    ProductCache cache(tp.algebra);
    RightModule reg = regular_module(tp.algebra);
    const ModuleTensor& first = cache.product(reg, reg);
    const ModuleTensor& second = cache.product(reg, reg);
    REQUIRE(&first == &second);
}

TEST_CASE("associators are invertible module morphisms with pentagon coherence") {
    const NamedAlgebra& entry = by_name("pair2");
    const WeakBimonoid& B = entry.algebra;
    auto mods = standard_modules(entry);
    RightModule A = mods[0].second, C = mods[1].second, D = mods[2].second;
    ProductCache cache(B);

    LinMap alpha = associator(A, C, D, cache);
    REQUIRE(is_invertible(alpha));

    // pentagon on (A, C, D, A)
    const RightModule& F = A;
    const ModuleTensor& AC = cache.product(A, C);
    const ModuleTensor& CD = cache.product(C, D);
    const ModuleTensor& DF = cache.product(D, F);
    LinMap path1 = compose(
        box_morphism(LinMap::identity(A.carrier), associator(C, D, F, cache),
                     cache.product(A, cache.product(CD.product, F).product),
                     cache.product(A, cache.product(C, DF.product).product)),
        associator(A, CD.product, F, cache),
        box_morphism(associator(A, C, D, cache), LinMap::identity(F.carrier),
                     cache.product(cache.product(AC.product, D).product, F),
                     cache.product(cache.product(A, CD.product).product, F)));
    LinMap path2 = compose(associator(A, C, cache.product(D, F).product, cache),
                           associator(AC.product, D, F, cache));
    REQUIRE(path1 == path2);
}

TEST_CASE("unit constraints invert both ways on every corpus module") {
    for (const auto& entry : zoo()) {
        INFO(entry.name);
        BaseMonoid base = base_monoid(entry.algebra);
        ProductCache cache(entry.algebra);
        for (const auto& [mname, mod] : standard_modules(entry)) {
            INFO(mname);
            UnitConstraints uc = unit_constraints(mod, entry.algebra, base, cache);
            REQUIRE(compose(uc.rho, uc.rho_inv) == LinMap::identity(mod.carrier));
            REQUIRE(compose(uc.rho_inv, uc.rho) ==
                    LinMap::identity(uc.with_unit_right.product.carrier));
            REQUIRE(compose(uc.lambda, uc.lambda_inv) == LinMap::identity(mod.carrier));
            REQUIRE(compose(uc.lambda_inv, uc.lambda) ==
                    LinMap::identity(uc.with_unit_left.product.carrier));
        }
    }
}

TEST_CASE("triangle identity links the unit constraints through the associator") {
    const NamedAlgebra& entry = by_name("two_points");
    const WeakBimonoid& B = entry.algebra;
    BaseMonoid base = base_monoid(B);
    ProductCache cache(B);
    RightModule A = regular_module(B);
    RightModule C = named_module(entry, "point0");
    UnitConstraints ucA = unit_constraints(A, B, base, cache);
    UnitConstraints ucC = unit_constraints(C, B, base, cache);

    const ModuleTensor& AR = cache.product(A, base.unit_module);
    const ModuleTensor& RC = cache.product(base.unit_module, C);
    LinMap lhs = compose(
        box_morphism(LinMap::identity(A.carrier), ucC.lambda,
                     cache.product(A, RC.product), cache.product(A, C)),
        associator(A, base.unit_module, C, cache));
    LinMap rhs = box_morphism(ucA.rho, LinMap::identity(C.carrier),
                              cache.product(AR.product, C), cache.product(A, C));
    REQUIRE(lhs == rhs);
}

TEST_CASE("coherence sweep emits fully labeled checks") {
    const NamedAlgebra& entry = by_name("z2_group");
    auto mods = standard_modules(entry);
    std::vector<RightModule> ms;
    for (auto& [n, m] : mods) ms.push_back(m);
    AxiomReport rep = coherence_check(ms, entry.algebra);
    REQUIRE(rep.all_hold());
    for (const char* name :
         {"split_section_retraction[0,1]", "split_reassembles_idempotent[2,2]",
          "associator_invertible[0,1,2]", "frobenius_square_sections[0,1,2]",
          "frobenius_square_retractions[2,1,0]", "frobenius_square_monoidal_first[1,1,1]",
          "frobenius_square_opmonoidal_first[1,1,1]", "pentagon[0,1,2,0]", "triangle[1,2]"})
        REQUIRE(rep.find(name) != nullptr);
}

TEST_CASE("base actions make every corpus module an exact bimodule") {
    for (const auto& entry : zoo()) {
        INFO(entry.name);
        BaseMonoid base = base_monoid(entry.algebra);
        for (const auto& [mname, mod] : standard_modules(entry)) {
            INFO(mname);
            BaseBimodule bb = r_bimodule_actions(mod, entry.algebra, base);
            REQUIRE(bb.laws.all_hold());
            for (const char* name :
                 {"left_action_unital", "left_action_associative", "right_action_unital",
                  "right_action_associative", "actions_commute", "two_sided_factors_left_first",
                  "two_sided_factors_right_first"})
                REQUIRE(bb.laws.find(name) != nullptr);
        }
    }
}

TEST_CASE("base monoids transport along isomorphisms") {
    const WeakBimonoid& B2 = by_name("two_points").algebra;
    SECTION("the point swap induces the base swap") {
        LinMap swap_points =
            LinMap::from_rows({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
        LinMap gamma = base_iso(swap_points, B2, B2);
        REQUIRE(gamma == swap_points);  // here R = B and the projection is the identity
    }
    SECTION("non-morphisms are rejected") {
        LinMap g = LinMap::from_rows({{Rational(1), Rational(0)}, {Rational(1), Rational(1)}});
        REQUIRE_THROWS_AS(base_iso(g, B2, B2), NotAMorphism);
    }
}
