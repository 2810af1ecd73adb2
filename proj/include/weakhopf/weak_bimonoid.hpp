#pragma once

#include "weakhopf/errors.hpp"
#include "weakhopf/linmap.hpp"
#include "weakhopf/report.hpp"
#include "weakhopf/solve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weakhopf {

// Finite-dimensional algebra+coalgebra data (μ, η, δ, ε) on a single carrier,
// together with an optional invertible Yang–Baxter operator standing in for
// the self-braiding of the carrier. Whether the data satisfies any laws is a
// question for the checkers below — broken inputs are values, not errors.
struct WeakBimonoid {
    int dim = 0;
    LinMap mu;     // dim  × dim², multiplication B⊗B → B
    LinMap eta;    // dim  × 1,    unit k → B
    LinMap delta;  // dim² × dim,  comultiplication B → B⊗B
    LinMap eps;    // 1    × dim,  counit B → k
    std::optional<LinMap> custom_braid;  // dim² × dim²; symmetric swap when absent

    WeakBimonoid() = default;

    WeakBimonoid(int dim_, LinMap mu_, LinMap eta_, LinMap delta_, LinMap eps_,
                 std::optional<LinMap> braid_ = std::nullopt)
        : dim(dim_),
          mu(std::move(mu_)),
          eta(std::move(eta_)),
          delta(std::move(delta_)),
          eps(std::move(eps_)),
          custom_braid(std::move(braid_)) {
        auto shape = [&](const LinMap& m, int cod, int dom, const char* what) {
            if (m.cod() != cod || m.dom() != dom)
                throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(cod) +
                                        "x" + std::to_string(dom) + ", got " +
                                        std::to_string(m.cod()) + "x" + std::to_string(m.dom()));
        };
        shape(mu, dim, dim * dim, "mu");
        shape(eta, dim, 1, "eta");
        shape(delta, dim * dim, dim, "delta");
        shape(eps, 1, dim, "eps");
        if (custom_braid) {
            shape(*custom_braid, dim * dim, dim * dim, "braid");
            if (!is_invertible(*custom_braid)) throw InvalidBraid("braid is not invertible");
            LinMap c = *custom_braid;
            LinMap id = LinMap::identity(dim);
            LinMap c12 = tensor(c, id);
            LinMap c23 = tensor(id, c);
            if (compose(c12, c23, c12) != compose(c23, c12, c23))
                throw InvalidBraid("braid fails the Yang-Baxter equation");
        }
    }

    LinMap id() const { return LinMap::identity(dim); }
    bool has_custom_braid() const { return custom_braid.has_value(); }
    // The self-braiding c_{B,B} used wherever a formula braids two carrier
    // factors; defaults to the symmetric swap.
    LinMap braid() const { return custom_braid ? *custom_braid : swap_map(dim, dim); }
    LinMap braid_inv() const {
        return custom_braid ? inverse(*custom_braid) : swap_map(dim, dim);
    }
};

// ---------------------------------------------------------------------------
// (Co)monoid laws.
// ---------------------------------------------------------------------------

inline AxiomReport validate_monoid_comonoid(const WeakBimonoid& B) {
    AxiomReport rep;
    LinMap id = B.id();
    rep.require_equal("mu_associative", compose(B.mu, tensor(B.mu, id)),
                      compose(B.mu, tensor(id, B.mu)));
    rep.require_equal("mu_left_unital", compose(B.mu, tensor(B.eta, id)), id);
    rep.require_equal("mu_right_unital", compose(B.mu, tensor(id, B.eta)), id);
    rep.require_equal("delta_coassociative", compose(tensor(B.delta, id), B.delta),
                      compose(tensor(id, B.delta), B.delta));
    rep.require_equal("delta_left_counital", compose(tensor(B.eps, id), B.delta), id);
    rep.require_equal("delta_right_counital", compose(tensor(id, B.eps), B.delta), id);
    return rep;
}

// ---------------------------------------------------------------------------
// Weak bimonoid compatibility diagrams.
//
// Names: "mult_comult_compat" is the single multiplicativity square
// δ∘μ = (μ⊗μ)∘(B⊗c⊗B)∘(δ⊗δ); the "weak_counit_*" pair weakens counit
// multiplicativity (one square braided, one plain); the "weak_unit_*" pair
// weakens unit comultiplicativity; the "counit_mult_*" pair are the two
// triangles relating ε∘μ² to the split counit forms.
// ---------------------------------------------------------------------------

inline AxiomReport check_weak_bimonoid(const WeakBimonoid& B) {
    AxiomReport rep;
    LinMap id = B.id();
    LinMap c = B.braid();
    LinMap ci = B.braid_inv();

    rep.require_equal(
        "mult_comult_compat", compose(B.delta, B.mu),
        compose(tensor(B.mu, B.mu), tensor(id, c, id), tensor(B.delta, B.delta)));

    // Weak counit compatibility, braided square:
    // (ε⊗B)∘(μ⊗μ)∘(B⊗c⁻¹⊗B)∘(B⊗δ⊗B)∘(B⊗η⊗B) = (ε⊗B)∘(μ⊗B)∘(B⊗c⁻¹)∘(B⊗δ).
    rep.require_equal(
        "weak_counit_braided",
        compose(tensor(B.eps, id), tensor(B.mu, B.mu), tensor(id, ci, id),
                tensor(id, B.delta, id), tensor(id, B.eta, id)),
        compose(tensor(B.eps, id), tensor(B.mu, id), tensor(id, ci), tensor(id, B.delta)));
    // ... and the plain square (no braiding in the middle).
    rep.require_equal(
        "weak_counit_plain",
        compose(tensor(B.eps, id), tensor(B.mu, B.mu), tensor(id, B.delta, id),
                tensor(id, B.eta, id)),
        compose(tensor(B.eps, id), tensor(B.mu, id), tensor(id, B.delta)));

    // Weak unit compatibility, braided square:
    // (δ⊗B)∘δ∘η = (B⊗μ⊗B)∘(B⊗c⁻¹⊗B)∘(δ⊗δ)∘(η⊗η).
    rep.require_equal("weak_unit_braided", compose(tensor(B.delta, id), B.delta, B.eta),
                      compose(tensor(id, B.mu, id), tensor(id, ci, id),
                              tensor(B.delta, B.delta), tensor(B.eta, B.eta)));
    rep.require_equal("weak_unit_plain", compose(tensor(B.delta, id), B.delta, B.eta),
                      compose(tensor(id, B.mu, id), tensor(B.delta, B.delta),
                              tensor(B.eta, B.eta)));

    // ε∘μ² agrees with both split forms (braided and plain triangles).
    LinMap eps_mu2 = compose(B.eps, B.mu, tensor(B.mu, id));
    rep.require_equal("counit_mult_braided", eps_mu2,
                      compose(tensor(B.eps, B.eps), tensor(B.mu, B.mu), tensor(id, ci, id),
                              tensor(id, B.delta, id)));
    rep.require_equal("counit_mult_plain", eps_mu2,
                      compose(tensor(B.eps, B.eps), tensor(B.mu, B.mu),
                              tensor(id, B.delta, id)));
    return rep;
}

// ---------------------------------------------------------------------------
// The induced endofunctor T = –⊗B with its monad structure and opmonoidal
// strength.
// ---------------------------------------------------------------------------

// τ₀ : TK → K is the counit.
inline LinMap tau0(const WeakBimonoid& B) { return B.eps; }

// τ_{X,Y} : T(X⊗Y) → TX⊗TY for plain objects of dimensions X and Y:
// (X ⊗ c_{Y,B} ⊗ B) ∘ (X ⊗ Y ⊗ δ), with c_{Y,B} the symmetric swap (generic
// objects braid symmetrically with the carrier; see tau_right_free for slots
// occupied by free objects).
inline LinMap tau(const WeakBimonoid& B, int X, int Y) {
    return compose(tensor(LinMap::identity(X), swap_map(Y, B.dim), LinMap::identity(B.dim)),
                   tensor(LinMap::identity(X * Y), B.delta));
}

// τ_{X,TY} : T(X⊗TY) → TX⊗T(TY) where the right slot is the free object
// TY = Y⊗B. Its braiding with the carrier expands along the hexagon as
// c_{Y⊗B,B} = (c_{Y,B}⊗B)∘(Y⊗c_{B,B}), so a custom braid on the carrier is
// honored exactly where a carrier factor crosses a carrier factor.
inline LinMap tau_right_free(const WeakBimonoid& B, int X, int Y) {
    LinMap c_TY_B = compose(tensor(swap_map(Y, B.dim), LinMap::identity(B.dim)),
                            tensor(LinMap::identity(Y), B.braid()));
    return compose(tensor(LinMap::identity(X), c_TY_B, LinMap::identity(B.dim)),
                   tensor(LinMap::identity(X * Y * B.dim), B.delta));
}

struct InducedMonad {
    const WeakBimonoid* B;

    explicit InducedMonad(const WeakBimonoid& b) : B(&b) {}

    int T(int X) const { return X * B->dim; }
    // m_X = X⊗μ : T²X → TX.
    LinMap m(int X) const { return tensor(LinMap::identity(X), B->mu); }
    // u_X = X⊗η : X → TX.
    LinMap u(int X) const { return tensor(LinMap::identity(X), B->eta); }
    LinMap tau(int X, int Y) const { return weakhopf::tau(*B, X, Y); }
    LinMap tau_right_free(int X, int Y) const { return weakhopf::tau_right_free(*B, X, Y); }
    LinMap tau0() const { return B->eps; }
};

// ---------------------------------------------------------------------------
// The projection ⊓ : TK → TK and its direct 5-step form.
// ---------------------------------------------------------------------------

// ⊓ written out without the strength: (B⊗ε)∘(B⊗μ)∘(c_{B,B}⊗B)∘(B⊗δ)∘(B⊗η).
inline LinMap sqcap_direct(const WeakBimonoid& B) {
    LinMap id = B.id();
    return compose(tensor(id, B.eps), tensor(id, B.mu), tensor(B.braid(), id),
                   tensor(id, B.delta), tensor(id, B.eta));
}

// ⊓ = (TK⊗τ₀)∘(TK⊗m_K)∘τ_{K,TK}∘u_{TK}. Asserts agreement with the direct
// form, idempotency, and the absorption law ⊓∘m_K∘T⊓ = ⊓∘m_K.
inline LinMap sqcap(const WeakBimonoid& B) {
    LinMap id = B.id();
    LinMap pi = compose(tensor(id, B.eps), tensor(id, B.mu), tau_right_free(B, 1, 1),
                        tensor(id, B.eta));
    if (pi != sqcap_direct(B))
        throw Error("sqcap: strength route and direct route disagree (internal)");
    if (compose(pi, pi) != pi) throw IdempotencyFailed("sqcap: projection is not idempotent");
    if (compose(pi, B.mu, tensor(pi, id)) != compose(pi, B.mu))
        throw IdempotencyFailed("sqcap: projection does not absorb multiplication");
    return pi;
}

// ---------------------------------------------------------------------------
// The five opmonoidal-strength axioms quantified over object dimensions,
// plus the projection/idempotent-exchange consequences.
// ---------------------------------------------------------------------------

inline AxiomReport check_tau_axioms(const WeakBimonoid& B,
                                    const std::vector<int>& dims = {1, 2}) {
    AxiomReport rep;
    InducedMonad T(B);
    LinMap idB = B.id();
    auto lbl = [](const std::string& base, std::initializer_list<int> xs) {
        std::string s = base + "[";
        bool first = true;
        for (int x : xs) {
            if (!first) s += ",";
            s += std::to_string(x);
            first = false;
        }
        return s + "]";
    };

    for (int X : dims) {
        // Right unit compatibility: the X-level projection composed into m_X
        // reproduces its own defining composite.
        LinMap bottom = compose(tensor(LinMap::identity(T.T(X)), B.eps),
                                tensor(LinMap::identity(T.T(X)), B.mu), T.tau_right_free(X, 1));
        LinMap pi_X = compose(bottom, tensor(LinMap::identity(X * B.dim), B.eta));
        rep.require_equal(lbl("strength_unit_compat_right", {X}),
                          compose(T.m(X), tensor(pi_X, idB)), bottom);

        // Left unit compatibility (mirror, with TK in the left slot).
        LinMap bottom2 = compose(tensor(B.eps, LinMap::identity(T.T(X))),
                                 tensor(B.mu, LinMap::identity(T.T(X))), T.tau(B.dim, X));
        LinMap pi2_X = compose(bottom2, tensor(LinMap::identity(B.dim * X), B.eta));
        rep.require_equal(lbl("strength_unit_compat_left", {X}),
                          compose(T.m(X), tensor(pi2_X, idB)), bottom2);
    }

    for (int X : dims)
        for (int Y : dims) {
            // τ commutes with multiplication.
            LinMap lhs = compose(T.tau(X, Y), T.m(X * Y));
            LinMap rhs = compose(tensor(T.m(X), T.m(Y)), T.tau_right_free(X * B.dim, Y),
                                 tensor(T.tau(X, Y), idB));
            rep.require_equal(lbl("strength_mult_compat", {X, Y}), lhs, rhs);
        }

    for (int X : dims)
        for (int Y : dims)
            for (int Z : dims) {
                LinMap bottom = compose(tensor(T.tau(X, Y), LinMap::identity(T.T(Z))),
                                        T.tau(X * Y, Z), T.u(X * Y * Z));
                // Unitality of τ against the right factor.
                LinMap top_r = compose(
                    tensor(LinMap::identity(T.T(X)), T.m(Y), LinMap::identity(T.T(Z))),
                    tensor(T.tau_right_free(X, Y), LinMap::identity(T.T(Z))),
                    tensor(LinMap::identity(X * T.T(Y)), B.eta, LinMap::identity(T.T(Z))),
                    tensor(LinMap::identity(X), T.tau(Y, Z)),
                    tensor(LinMap::identity(X * Y * Z), B.eta));
                rep.require_equal(lbl("strength_assoc_compat_right", {X, Y, Z}), top_r, bottom);

                // ... and against the left factor.
                LinMap top_l = compose(
                    tensor(LinMap::identity(T.T(X)), T.m(Y), LinMap::identity(T.T(Z))),
                    tensor(LinMap::identity(T.T(X)), T.tau(Y * B.dim, Z)),
                    tensor(LinMap::identity(T.T(X)), LinMap::identity(T.T(Y) * Z), B.eta),
                    tensor(T.tau(X, Y), LinMap::identity(Z)),
                    tensor(LinMap::identity(X * Y), B.eta, LinMap::identity(Z)));
                rep.require_equal(lbl("strength_assoc_compat_left", {X, Y, Z}), top_l, bottom);

                // The two bracketings of the three-fold strength agree.
                LinMap tau3_left = compose(tensor(T.tau(X, Y), LinMap::identity(T.T(Z))),
                                           T.tau(X * Y, Z));
                LinMap tau3_right = compose(tensor(LinMap::identity(T.T(X)), T.tau(Y, Z)),
                                            T.tau(X, Y * Z));
                rep.require_equal(lbl("strength_triple_bracketing", {X, Y, Z}), tau3_left,
                                  tau3_right);
            }

    // ⊓ absorbs multiplication (checked as a report entry here, and asserted
    // hard inside sqcap()).
    LinMap pi = compose(tensor(idB, B.eps), tensor(idB, B.mu), tau_right_free(B, 1, 1),
                        tensor(idB, B.eta));
    rep.require_equal("projection_absorbs_mult", compose(pi, B.mu, tensor(pi, idB)),
                      compose(pi, B.mu));
    rep.require_equal("projection_idempotent", compose(pi, pi), pi);

    // Pairwise idempotents compose to the triple idempotent, in both orders.
    auto E_pair = [&](int X, int Y) {
        return compose(tensor(T.m(X), T.m(Y)), T.tau_right_free(X * B.dim, Y),
                       T.u(T.T(X) * T.T(Y)));
    };
    for (int X : dims)
        for (int Y : dims)
            for (int Z : dims) {
                LinMap Exy = E_pair(X, Y);
                LinMap Eyz = E_pair(Y, Z);
                LinMap tau3 = compose(
                    tensor(T.tau_right_free(X * B.dim, Y), LinMap::identity(T.T(Z) * B.dim)),
                    T.tau_right_free(T.T(X) * T.T(Y), Z));
                LinMap E3 = compose(tensor(T.m(X), T.m(Y), T.m(Z)), tau3,
                                    T.u(T.T(X) * T.T(Y) * T.T(Z)));
                LinMap idTX = LinMap::identity(T.T(X));
                LinMap idTZ = LinMap::identity(T.T(Z));
                rep.require_equal(lbl("idempotent_exchange_left", {X, Y, Z}),
                                  compose(tensor(idTX, Eyz), tensor(Exy, idTZ)), E3);
                rep.require_equal(lbl("idempotent_exchange_right", {X, Y, Z}),
                                  compose(tensor(Exy, idTZ), tensor(idTX, Eyz)), E3);
            }
    return rep;
}

// ---------------------------------------------------------------------------
// Morphisms of the induced structures: a carrier map g : B → B′ induces a
// morphism of the derived monads+strengths iff it is a map of monoids and of
// comonoids that preserves the counit.
// ---------------------------------------------------------------------------

inline AxiomReport check_morphism(const LinMap& g, const WeakBimonoid& B,
                                  const WeakBimonoid& Bp) {
    if (g.dom() != B.dim || g.cod() != Bp.dim)
        throw DimensionMismatch("check_morphism: g has the wrong shape");
    AxiomReport rep;
    rep.require_equal("preserves_mult", compose(g, B.mu), compose(Bp.mu, tensor(g, g)));
    rep.require_equal("preserves_unit", compose(g, B.eta), Bp.eta);
    rep.require_equal("preserves_comult", compose(Bp.delta, g), compose(tensor(g, g), B.delta));
    rep.require_equal("preserves_counit", compose(Bp.eps, g), B.eps);
    return rep;
}

}  // namespace weakhopf
