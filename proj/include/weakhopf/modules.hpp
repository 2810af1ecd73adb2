#pragma once

#include "weakhopf/errors.hpp"
#include "weakhopf/linmap.hpp"
#include "weakhopf/report.hpp"
#include "weakhopf/solve.hpp"
#include "weakhopf/weak_bimonoid.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace weakhopf {

// A right module (A, a) over the carrier: a : A⊗B → A.
struct RightModule {
    int carrier = 0;
    LinMap action;  // carrier × (carrier*dim)
};

inline AxiomReport validate_module(const RightModule& A, const WeakBimonoid& B) {
    if (A.action.cod() != A.carrier || A.action.dom() != A.carrier * B.dim)
        throw DimensionMismatch("validate_module: action has the wrong shape");
    AxiomReport rep;
    LinMap idA = LinMap::identity(A.carrier);
    rep.require_equal("action_associative", compose(A.action, tensor(A.action, B.id())),
                      compose(A.action, tensor(idA, B.mu)));
    rep.require_equal("action_unital", compose(A.action, tensor(idA, B.eta)), idA);
    return rep;
}

inline bool is_module(const RightModule& A, const WeakBimonoid& B) {
    return validate_module(A, B).all_hold();
}

// The pairwise idempotent E_{A,C} = (a⊗c)∘τ_{A,C}∘u_{A⊗C} on A⊗C.
inline LinMap module_pair_idempotent(const RightModule& A, const RightModule& C,
                                     const WeakBimonoid& B) {
    return compose(tensor(A.action, C.action), tau(B, A.carrier, C.carrier),
                   tensor(LinMap::identity(A.carrier * C.carrier), B.eta));
}

// ---------------------------------------------------------------------------
// Base monoid: the split image of ⊓ carries a separable Frobenius structure.
// ---------------------------------------------------------------------------

struct BaseMonoid {
    LinMap projection;     // ⊓ : B → B
    SplitIdempotent split; // retraction P : B → R, section I : R → B
    int R_dim = 0;
    RightModule unit_module;  // (R, r) with r = P∘μ∘(I⊗B)
    const LinMap& P() const { return split.retraction; }
    const LinMap& I() const { return split.section; }
    const LinMap& r_action() const { return unit_module.action; }
    LinMap mu_R;    // R⊗R → R
    LinMap eta_R;   // k → R
    LinMap delta_R; // R → R⊗R
    LinMap eps_R;   // R → k
    AxiomReport laws;  // the verified monoid/comonoid/Frobenius/separability laws
};

inline BaseMonoid base_monoid(const WeakBimonoid& B) {
    BaseMonoid out;
    out.projection = sqcap(B);
    out.split = split_idempotent(out.projection);
    out.R_dim = out.split.rank;
    const LinMap& P = out.split.retraction;
    const LinMap& I = out.split.section;
    int R = out.R_dim;
    LinMap idR = LinMap::identity(R);

    out.unit_module = RightModule{R, compose(P, B.mu, tensor(I, B.id()))};
    AxiomReport modlaws = validate_module(out.unit_module, B);
    if (!modlaws.all_hold())
        throw FrobeniusCheckFailed("base_monoid: unit module law failed: " +
                                   modlaws.failing_joined());

    LinMap E = module_pair_idempotent(out.unit_module, out.unit_module, B);
    out.mu_R = compose(tensor(idR, B.eps), tensor(idR, I), E);
    out.eta_R = compose(P, B.eta);
    out.delta_R = compose(E, tensor(idR, P), tensor(idR, B.eta));
    out.eps_R = compose(B.eps, I);

    AxiomReport& rep = out.laws;
    rep.require_equal("base_mult_associative", compose(out.mu_R, tensor(out.mu_R, idR)),
                      compose(out.mu_R, tensor(idR, out.mu_R)));
    rep.require_equal("base_mult_left_unital", compose(out.mu_R, tensor(out.eta_R, idR)), idR);
    rep.require_equal("base_mult_right_unital", compose(out.mu_R, tensor(idR, out.eta_R)), idR);
    rep.require_equal("base_comult_coassociative",
                      compose(tensor(out.delta_R, idR), out.delta_R),
                      compose(tensor(idR, out.delta_R), out.delta_R));
    rep.require_equal("base_comult_left_counital",
                      compose(tensor(out.eps_R, idR), out.delta_R), idR);
    rep.require_equal("base_comult_right_counital",
                      compose(tensor(idR, out.eps_R), out.delta_R), idR);
    LinMap frob_mid = compose(out.delta_R, out.mu_R);
    rep.require_equal("base_frobenius_left", compose(tensor(out.mu_R, idR), tensor(idR, out.delta_R)),
                      frob_mid);
    rep.require_equal("base_frobenius_right",
                      compose(tensor(idR, out.mu_R), tensor(out.delta_R, idR)), frob_mid);
    rep.require_equal("base_separable", compose(out.mu_R, out.delta_R), idR);
    if (!rep.all_hold())
        throw FrobeniusCheckFailed("base_monoid: failed laws: " + rep.failing_joined());
    return out;
}

// ---------------------------------------------------------------------------
// Truncated tensor product of modules: split E_{A,C}, transport the action.
// ---------------------------------------------------------------------------

struct ModuleTensor {
    RightModule left, right;
    LinMap E;               // the idempotent on A⊗C
    SplitIdempotent split;  // retraction p, section i
    RightModule product;    // (A□C, transported action)
};

inline ModuleTensor module_tensor(const RightModule& A, const RightModule& C,
                                  const WeakBimonoid& B) {
    ModuleTensor out;
    out.left = A;
    out.right = C;
    out.E = module_pair_idempotent(A, C, B);
    if (compose(out.E, out.E) != out.E)
        throw IdempotencyFailed("module_tensor: E is not idempotent");
    out.split = split_idempotent(out.E);
    LinMap action = compose(out.split.retraction, tensor(A.action, C.action),
                            tau(B, A.carrier, C.carrier),
                            tensor(out.split.section, B.id()));
    out.product = RightModule{out.split.rank, action};
    AxiomReport laws = validate_module(out.product, B);
    if (!laws.all_hold())
        throw ModuleLawFailed("module_tensor: product action law failed: " +
                              laws.failing_joined());
    return out;
}

// Memoizes module_tensor by the exact content of both modules, so coherence
// sweeps do not re-split the same pair.
class ProductCache {
  public:
    explicit ProductCache(const WeakBimonoid& B) : B_(&B) {}

    const ModuleTensor& product(const RightModule& A, const RightModule& C) {
        auto key = std::make_pair(A.action.key(), C.action.key());
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, module_tensor(A, C, *B_)).first;
        return it->second;
    }

    const WeakBimonoid& algebra() const { return *B_; }

  private:
    const WeakBimonoid* B_;
    std::map<std::pair<std::string, std::string>, ModuleTensor> cache_;
};

// f□g on product modules, transported through the splittings.
inline LinMap box_morphism(const LinMap& f, const LinMap& g, const ModuleTensor& from,
                           const ModuleTensor& to) {
    return compose(to.split.retraction, tensor(f, g), from.split.section);
}

// The associator (A□C)□D → A□(C□D):
// p_{A,C□D}∘(A⊗p_{C,D})∘(i_{A,C}⊗D)∘i_{A□C,D}.
inline LinMap associator(const RightModule& A, const RightModule& C, const RightModule& D,
                         ProductCache& cache) {
    const ModuleTensor& AC = cache.product(A, C);
    const ModuleTensor& CD = cache.product(C, D);
    const ModuleTensor& AC_D = cache.product(AC.product, D);
    const ModuleTensor& A_CD = cache.product(A, CD.product);
    return compose(A_CD.split.retraction, tensor(LinMap::identity(A.carrier), CD.split.retraction),
                   tensor(AC.split.section, LinMap::identity(D.carrier)), AC_D.split.section);
}

inline LinMap associator(const RightModule& A, const RightModule& C, const RightModule& D,
                         const WeakBimonoid& B) {
    ProductCache cache(B);
    return associator(A, C, D, cache);
}

// ---------------------------------------------------------------------------
// Unit constraints against the base monoid.
// ---------------------------------------------------------------------------

struct UnitConstraints {
    ModuleTensor with_unit_right;  // A□R
    ModuleTensor with_unit_left;   // R□A
    LinMap rho;         // A□R → A
    LinMap rho_inv;     // A → A□R
    LinMap lambda;      // R□A → A
    LinMap lambda_inv;  // A → R□A
};

inline UnitConstraints unit_constraints(const RightModule& A, const WeakBimonoid& B,
                                        const BaseMonoid& base, ProductCache& cache) {
    UnitConstraints out{cache.product(A, base.unit_module), cache.product(base.unit_module, A),
                        LinMap(), LinMap(), LinMap(), LinMap()};
    const LinMap& P = base.split.retraction;
    const LinMap& I = base.split.section;
    LinMap idA = LinMap::identity(A.carrier);

    out.rho = compose(tensor(idA, B.eps), tensor(idA, I), out.with_unit_right.split.section);
    out.rho_inv = compose(out.with_unit_right.split.retraction, tensor(A.action, P),
                          tau(B, A.carrier, 1), tensor(idA, B.eta));
    out.lambda = compose(tensor(B.eps, idA), tensor(I, idA), out.with_unit_left.split.section);
    out.lambda_inv = compose(out.with_unit_left.split.retraction, tensor(P, A.action),
                             tau(B, 1, A.carrier), tensor(idA, B.eta));

    if (compose(out.rho, out.rho_inv) != idA ||
        compose(out.rho_inv, out.rho) != LinMap::identity(out.with_unit_right.product.carrier))
        throw ConstraintNotInvertible("unit_constraints: rho is not invertible");
    if (compose(out.lambda, out.lambda_inv) != idA ||
        compose(out.lambda_inv, out.lambda) != LinMap::identity(out.with_unit_left.product.carrier))
        throw ConstraintNotInvertible("unit_constraints: lambda is not invertible");

    // Both constraints must be module morphisms.
    if (compose(out.rho, out.with_unit_right.product.action) !=
        compose(A.action, tensor(out.rho, B.id())))
        throw ModuleLawFailed("unit_constraints: rho is not a module morphism");
    if (compose(out.lambda, out.with_unit_left.product.action) !=
        compose(A.action, tensor(out.lambda, B.id())))
        throw ModuleLawFailed("unit_constraints: lambda is not a module morphism");
    return out;
}

inline UnitConstraints unit_constraints(const RightModule& A, const WeakBimonoid& B,
                                        const BaseMonoid& base) {
    ProductCache cache(B);
    return unit_constraints(A, B, base, cache);
}

inline UnitConstraints unit_constraints(const RightModule& A, const WeakBimonoid& B) {
    return unit_constraints(A, B, base_monoid(B));
}

// ---------------------------------------------------------------------------
// Coherence: separable-Frobenius squares, pentagon, triangle.
// ---------------------------------------------------------------------------

// Verifies, over all tuples from `modules`: the two separable-Frobenius
// squares tying the sections/retractions to the associator, invertibility of
// every associator, the pentagon on all 4-tuples, and the triangle through
// the unit. Any failure is a hard CoherenceFailed error naming the tuple.
inline AxiomReport coherence_check(const std::vector<RightModule>& modules,
                                   const WeakBimonoid& B) {
    AxiomReport rep;
    ProductCache cache(B);
    BaseMonoid base = base_monoid(B);
    int n = static_cast<int>(modules.size());
    auto lbl = [](const std::string& base_name, std::initializer_list<int> xs) {
        std::string s = base_name + "[";
        bool first = true;
        for (int x : xs) {
            if (!first) s += ",";
            s += std::to_string(x);
            first = false;
        }
        return s + "]";
    };

    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            const ModuleTensor& AC = cache.product(modules[a], modules[c]);
            rep.require_equal(lbl("split_section_retraction", {a, c}),
                              compose(AC.split.retraction, AC.split.section),
                              LinMap::identity(AC.product.carrier));
            rep.require_equal(lbl("split_reassembles_idempotent", {a, c}),
                              compose(AC.split.section, AC.split.retraction), AC.E);
        }

    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
                const RightModule &A = modules[a], &C = modules[c], &D = modules[d];
                const ModuleTensor& AC = cache.product(A, C);
                const ModuleTensor& CD = cache.product(C, D);
                const ModuleTensor& AC_D = cache.product(AC.product, D);
                const ModuleTensor& A_CD = cache.product(A, CD.product);
                LinMap alpha = associator(A, C, D, cache);
                bool invertible = A_CD.product.carrier == AC_D.product.carrier &&
                                  is_invertible(alpha);
                rep.require(lbl("associator_invertible", {a, c, d}), invertible);

                LinMap idA = LinMap::identity(A.carrier);
                LinMap idD = LinMap::identity(D.carrier);
                // Section square: unsplitting after the associator matches
                // unsplitting directly.
                rep.require_equal(
                    lbl("frobenius_square_sections", {a, c, d}),
                    compose(tensor(AC.split.section, idD), AC_D.split.section),
                    compose(tensor(idA, CD.split.section), A_CD.split.section, alpha));
                // Retraction square.
                rep.require_equal(
                    lbl("frobenius_square_retractions", {a, c, d}),
                    compose(A_CD.split.retraction, tensor(idA, CD.split.retraction)),
                    compose(alpha, AC_D.split.retraction,
                            tensor(AC.split.retraction, idD)));
                // The two mixed separable-Frobenius squares (monoidal structure
                // p against opmonoidal structure i, transported across the
                // associator).
                if (invertible) {
                    LinMap alpha_inv = inverse(alpha);
                    rep.require_equal(
                        lbl("frobenius_square_monoidal_first", {a, c, d}),
                        compose(tensor(AC.split.retraction, idD),
                                tensor(idA, CD.split.section)),
                        compose(AC_D.split.section, alpha_inv, A_CD.split.retraction));
                    rep.require_equal(
                        lbl("frobenius_square_opmonoidal_first", {a, c, d}),
                        compose(tensor(idA, CD.split.retraction),
                                tensor(AC.split.section, idD)),
                        compose(A_CD.split.section, alpha, AC_D.split.retraction));
                } else {
                    rep.require(lbl("frobenius_square_monoidal_first", {a, c, d}), false);
                    rep.require(lbl("frobenius_square_opmonoidal_first", {a, c, d}), false);
                }
            }

    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d)
                for (int f = 0; f < n; ++f) {
                    const RightModule &A = modules[a], &C = modules[c], &D = modules[d],
                                      &F = modules[f];
                    const ModuleTensor& AC = cache.product(A, C);
                    const ModuleTensor& CD = cache.product(C, D);
                    const ModuleTensor& DF = cache.product(D, F);
                    const ModuleTensor& AC_D = cache.product(AC.product, D);
                    const ModuleTensor& A_CD = cache.product(A, CD.product);
                    LinMap a_cd = associator(A, C, D, cache);
                    LinMap path1 = compose(
                        box_morphism(LinMap::identity(A.carrier),
                                     associator(C, D, F, cache),
                                     cache.product(A, cache.product(CD.product, F).product),
                                     cache.product(A, cache.product(C, DF.product).product)),
                        associator(A, CD.product, F, cache),
                        box_morphism(a_cd, LinMap::identity(F.carrier),
                                     cache.product(AC_D.product, F),
                                     cache.product(A_CD.product, F)));
                    LinMap path2 = compose(associator(A, C, cache.product(D, F).product, cache),
                                           associator(AC.product, D, F, cache));
                    rep.require_equal(lbl("pentagon", {a, c, d, f}), path1, path2);
                }

    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            const RightModule &A = modules[a], &C = modules[c];
            UnitConstraints uc_a = unit_constraints(A, B, base, cache);
            UnitConstraints uc_c = unit_constraints(C, B, base, cache);
            const ModuleTensor& AR = cache.product(A, base.unit_module);
            const ModuleTensor& RC = cache.product(base.unit_module, C);
            const ModuleTensor& AC = cache.product(A, C);
            LinMap alpha = associator(A, base.unit_module, C, cache);
            LinMap lhs = compose(
                box_morphism(LinMap::identity(A.carrier), uc_c.lambda,
                             cache.product(A, RC.product), AC),
                alpha);
            LinMap rhs = box_morphism(uc_a.rho, LinMap::identity(C.carrier),
                                      cache.product(AR.product, C), AC);
            rep.require_equal(lbl("triangle", {a, c}), lhs, rhs);
        }

    if (!rep.all_hold())
        throw CoherenceFailed("coherence_check: failed: " + rep.failing_joined());
    return rep;
}

// ---------------------------------------------------------------------------
// The two-sided base action R⊗A⊗R → A and its derived one-sided actions.
// ---------------------------------------------------------------------------

struct BaseBimodule {
    LinMap two_sided;     // R⊗A⊗R → A
    LinMap left_action;   // R⊗A → A
    LinMap right_action;  // A⊗R → A
    AxiomReport laws;
};

inline BaseBimodule r_bimodule_actions(const RightModule& A, const WeakBimonoid& B,
                                       const BaseMonoid& base) {
    const RightModule& Rm = base.unit_module;
    const LinMap& I = base.split.section;
    int Rd = base.R_dim;
    LinMap idR = LinMap::identity(Rd);
    LinMap idA = LinMap::identity(A.carrier);

    // E³ on R⊗A⊗R via the left-bracketed three-fold strength.
    LinMap tau3 = compose(tensor(tau(B, Rd, A.carrier), LinMap::identity(Rd * B.dim)),
                          tau(B, Rd * A.carrier, Rd));
    LinMap E3 = compose(tensor(Rm.action, A.action, Rm.action), tau3,
                        tensor(LinMap::identity(Rd * A.carrier * Rd), B.eta));
    BaseBimodule out;
    out.two_sided = compose(tensor(B.eps, idA, B.eps), tensor(I, idA, I), E3);
    out.left_action = compose(out.two_sided, tensor(idR, idA, base.eta_R));
    out.right_action = compose(out.two_sided, tensor(base.eta_R, idA, idR));

    AxiomReport& rep = out.laws;
    rep.require_equal("left_action_unital", compose(out.left_action, tensor(base.eta_R, idA)),
                      idA);
    rep.require_equal("left_action_associative",
                      compose(out.left_action, tensor(idR, out.left_action)),
                      compose(out.left_action, tensor(base.mu_R, idA)));
    rep.require_equal("right_action_unital", compose(out.right_action, tensor(idA, base.eta_R)),
                      idA);
    rep.require_equal("right_action_associative",
                      compose(out.right_action, tensor(out.right_action, idR)),
                      compose(out.right_action, tensor(idA, base.mu_R)));
    rep.require_equal("actions_commute",
                      compose(out.right_action, tensor(out.left_action, idR)),
                      compose(out.left_action, tensor(idR, out.right_action)));
    rep.require_equal("two_sided_factors_left_first",
                      compose(out.right_action, tensor(out.left_action, idR)), out.two_sided);
    rep.require_equal("two_sided_factors_right_first",
                      compose(out.left_action, tensor(idR, out.right_action)), out.two_sided);
    if (!rep.all_hold())
        throw BimoduleLawFailed("r_bimodule_actions: failed: " + rep.failing_joined());
    return out;
}

inline BaseBimodule r_bimodule_actions(const RightModule& A, const WeakBimonoid& B) {
    return r_bimodule_actions(A, B, base_monoid(B));
}

// ---------------------------------------------------------------------------
// Base-monoid comparison along a carrier morphism.
// ---------------------------------------------------------------------------

// For a carrier map g that is a morphism (check_morphism all-holds), the
// induced γ = P′∘g∘I is an isomorphism of base monoids; returns γ, throwing
// NotAMorphism when g fails the diagrams or γ fails to be an isomorphism.
inline LinMap base_iso(const LinMap& g, const WeakBimonoid& B, const WeakBimonoid& Bp) {
    AxiomReport mor = check_morphism(g, B, Bp);
    if (!mor.all_hold())
        throw NotAMorphism("base_iso: g fails: " + mor.failing_joined());
    BaseMonoid RB = base_monoid(B);
    BaseMonoid RBp = base_monoid(Bp);
    LinMap gamma = compose(RBp.split.retraction, g, RB.split.section);
    AxiomReport rep;
    rep.require("gamma_invertible",
                RB.R_dim == RBp.R_dim && is_invertible(gamma));
    rep.require_equal("gamma_preserves_mult", compose(gamma, RB.mu_R),
                      compose(RBp.mu_R, tensor(gamma, gamma)));
    rep.require_equal("gamma_preserves_unit", compose(gamma, RB.eta_R), RBp.eta_R);
    rep.require_equal("gamma_preserves_comult", compose(RBp.delta_R, gamma),
                      compose(tensor(gamma, gamma), RB.delta_R));
    rep.require_equal("gamma_preserves_counit", compose(RBp.eps_R, gamma), RB.eps_R);
    if (!rep.all_hold())
        throw NotAMorphism("base_iso: gamma fails: " + rep.failing_joined());
    return gamma;
}

}  // namespace weakhopf
