#pragma once

#include "weakhopf/errors.hpp"
#include "weakhopf/linmap.hpp"
#include "weakhopf/modules.hpp"
#include "weakhopf/weak_bimonoid.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace weakhopf {

// ---------------------------------------------------------------------------
// Finite groupoids.
// ---------------------------------------------------------------------------

struct GroupoidArrow {
    int source = 0;
    int target = 0;
    std::string label;
};

struct FiniteGroupoid {
    int objects = 0;
    std::vector<GroupoidArrow> arrows;
    // composition[g][h] = index of g∘h (first h, then g) when
    // arrows[h].target == arrows[g].source; -1 otherwise.
    std::vector<std::vector<int>> composition;
    std::vector<int> identity;  // identity arrow per object
    std::vector<int> inverse;   // two-sided inverse per arrow

    int size() const { return static_cast<int>(arrows.size()); }
};

inline void validate_groupoid(const FiniteGroupoid& G) {
    int n = G.size();
    if (G.objects <= 0) throw InvalidGroupoid("objects must be positive");
    if (n == 0) throw InvalidGroupoid("a groupoid needs at least the identity arrows");
    if (static_cast<int>(G.identity.size()) != G.objects)
        throw InvalidGroupoid("identity table has the wrong length");
    if (static_cast<int>(G.inverse.size()) != n)
        throw InvalidGroupoid("inverse table has the wrong length");
    if (static_cast<int>(G.composition.size()) != n)
        throw InvalidGroupoid("composition table has the wrong shape");
    for (const auto& row : G.composition)
        if (static_cast<int>(row.size()) != n)
            throw InvalidGroupoid("composition table has the wrong shape");
    for (const auto& a : G.arrows)
        if (a.source < 0 || a.source >= G.objects || a.target < 0 || a.target >= G.objects)
            throw InvalidGroupoid("arrow endpoints out of range");
    for (int o = 0; o < G.objects; ++o) {
        int e = G.identity[o];
        if (e < 0 || e >= n || G.arrows[e].source != o || G.arrows[e].target != o)
            throw InvalidGroupoid("identity arrow of object " + std::to_string(o) +
                                  " is not an endomorphism of it");
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            int gh = G.composition[g][h];
            bool composable = G.arrows[h].target == G.arrows[g].source;
            if (composable != (gh >= 0))
                throw InvalidGroupoid("composition defined iff middle objects match violated at (" +
                                      std::to_string(g) + "," + std::to_string(h) + ")");
            if (gh >= 0) {
                if (gh >= n) throw InvalidGroupoid("composition index out of range");
                if (G.arrows[gh].source != G.arrows[h].source ||
                    G.arrows[gh].target != G.arrows[g].target)
                    throw InvalidGroupoid("composite endpoints are wrong at (" + std::to_string(g) +
                                          "," + std::to_string(h) + ")");
            }
        }
    for (int g = 0; g < n; ++g) {
        if (G.composition[g][G.identity[G.arrows[g].source]] != g ||
            G.composition[G.identity[G.arrows[g].target]][g] != g)
            throw InvalidGroupoid("identity law fails at arrow " + std::to_string(g));
        int gi = G.inverse[g];
        if (gi < 0 || gi >= n) throw InvalidGroupoid("inverse index out of range");
        if (G.composition[g][gi] != G.identity[G.arrows[g].target] ||
            G.composition[gi][g] != G.identity[G.arrows[g].source])
            throw InvalidGroupoid("inverse law fails at arrow " + std::to_string(g));
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) {
                int hk = G.composition[h][k];
                int gh = G.composition[g][h];
                if (hk >= 0 && gh >= 0 && G.composition[g][hk] != G.composition[gh][k])
                    throw InvalidGroupoid("associativity fails at (" + std::to_string(g) + "," +
                                          std::to_string(h) + "," + std::to_string(k) + ")");
            }
}

inline FiniteGroupoid discrete_groupoid(int n) {
    FiniteGroupoid G;
    G.objects = n;
    for (int o = 0; o < n; ++o) {
        G.arrows.push_back({o, o, "id" + std::to_string(o)});
        G.identity.push_back(o);
        G.inverse.push_back(o);
    }
    G.composition.assign(n, std::vector<int>(n, -1));
    for (int o = 0; o < n; ++o) G.composition[o][o] = o;
    return G;
}

// Arrows f_ij : j → i for all pairs; f_ij∘f_jl = f_il. Index (i,j) ↦ i·n+j.
inline FiniteGroupoid pair_groupoid(int n) {
    FiniteGroupoid G;
    G.objects = n;
    auto idx = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            G.arrows.push_back({j, i, "f" + std::to_string(i) + std::to_string(j)});
    for (int o = 0; o < n; ++o) G.identity.push_back(idx(o, o));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G.inverse.push_back(idx(j, i));
    int m = n * n;
    G.composition.assign(m, std::vector<int>(m, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                G.composition[idx(i, j)][idx(j, k)] = idx(i, k);
    return G;
}

inline FiniteGroupoid cyclic_group_groupoid(int n) {
    FiniteGroupoid G;
    G.objects = 1;
    for (int k = 0; k < n; ++k) G.arrows.push_back({0, 0, "g" + std::to_string(k)});
    G.identity.push_back(0);
    for (int k = 0; k < n; ++k) G.inverse.push_back((n - k) % n);
    G.composition.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) G.composition[a][b] = (a + b) % n;
    return G;
}

// The connected groupoid on two objects whose vertex groups are Z/2:
// arrows (i←j, s) for i,j,s ∈ {0,1}, composing by (i←j,s)∘(j←k,t) = (i←k,s⊕t).
inline FiniteGroupoid two_object_z2_groupoid() {
    FiniteGroupoid G;
    G.objects = 2;
    auto idx = [](int i, int j, int s) { return i * 4 + j * 2 + s; };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int s = 0; s < 2; ++s)
                G.arrows.push_back({j, i, "a" + std::to_string(i) + std::to_string(j) +
                                              std::to_string(s)});
    G.identity = {idx(0, 0, 0), idx(1, 1, 0)};
    G.inverse.assign(8, -1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int s = 0; s < 2; ++s) G.inverse[idx(i, j, s)] = idx(j, i, s);
    G.composition.assign(8, std::vector<int>(8, -1));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int s = 0; s < 2; ++s)
                for (int k = 0; k < 2; ++k)
                    for (int t = 0; t < 2; ++t)
                        G.composition[idx(i, j, s)][idx(j, k, t)] = idx(i, k, s ^ t);
    return G;
}

// ---------------------------------------------------------------------------
// Finite monoids by multiplication table.
// ---------------------------------------------------------------------------

struct FiniteMonoidTable {
    int size = 0;
    std::vector<std::vector<int>> table;  // table[a][b] = a·b
    int unit = 0;
};

inline void validate_monoid(const FiniteMonoidTable& M) {
    int n = M.size;
    if (n <= 0) throw InvalidMonoid("size must be positive");
    if (M.unit < 0 || M.unit >= n) throw InvalidMonoid("unit index out of range");
    if (static_cast<int>(M.table.size()) != n)
        throw InvalidMonoid("multiplication table has the wrong shape");
    for (const auto& row : M.table) {
        if (static_cast<int>(row.size()) != n)
            throw InvalidMonoid("multiplication table has the wrong shape");
        for (int v : row)
            if (v < 0 || v >= n) throw InvalidMonoid("table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        if (M.table[M.unit][a] != a || M.table[a][M.unit] != a)
            throw InvalidMonoid("unit law fails at element " + std::to_string(a));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (M.table[M.table[a][b]][c] != M.table[a][M.table[b][c]])
                    throw InvalidMonoid("associativity fails at (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
}

inline bool monoid_is_group(const FiniteMonoidTable& M) {
    for (int a = 0; a < M.size; ++a) {
        bool has_inverse = false;
        for (int b = 0; b < M.size && !has_inverse; ++b)
            has_inverse = M.table[a][b] == M.unit && M.table[b][a] == M.unit;
        if (!has_inverse) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Algebras from combinatorial data.
// ---------------------------------------------------------------------------

// Basis = arrows; μ = composition-or-zero, η = sum of identities, every basis
// vector grouplike, ε ≡ 1.
inline WeakBimonoid groupoid_algebra(const FiniteGroupoid& G) {
    validate_groupoid(G);
    int n = G.size();
    LinMap mu = LinMap::zero(n, n * n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (G.composition[g][h] >= 0)
                mu.set_entry(G.composition[g][h], g * n + h, Rational(1));
    LinMap eta = LinMap::zero(n, 1);
    for (int o = 0; o < G.objects; ++o) eta.set_entry(G.identity[o], 0, Rational(1));
    LinMap delta = LinMap::zero(n * n, n);
    LinMap eps = LinMap::zero(1, n);
    for (int g = 0; g < n; ++g) {
        delta.set_entry(g * n + g, g, Rational(1));
        eps.set_entry(0, g, Rational(1));
    }
    return WeakBimonoid(n, mu, eta, delta, eps);
}

inline WeakBimonoid monoid_algebra(const FiniteMonoidTable& M) {
    validate_monoid(M);
    int n = M.size;
    LinMap mu = LinMap::zero(n, n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mu.set_entry(M.table[a][b], a * n + b, Rational(1));
    LinMap eta = LinMap::zero(n, 1);
    eta.set_entry(M.unit, 0, Rational(1));
    LinMap delta = LinMap::zero(n * n, n);
    LinMap eps = LinMap::zero(1, n);
    for (int a = 0; a < n; ++a) {
        delta.set_entry(a * n + a, a, Rational(1));
        eps.set_entry(0, a, Rational(1));
    }
    return WeakBimonoid(n, mu, eta, delta, eps);
}

// Combinatorial forms of the structure maps of a groupoid algebra, used as
// independent oracles against the composite formulas.
inline LinMap groupoid_antipode(const FiniteGroupoid& G) {
    int n = G.size();
    LinMap nu = LinMap::zero(n, n);
    for (int g = 0; g < n; ++g) nu.set_entry(G.inverse[g], g, Rational(1));
    return nu;
}

inline LinMap groupoid_source_idempotent(const FiniteGroupoid& G) {
    int n = G.size();
    LinMap t = LinMap::zero(n, n);
    for (int g = 0; g < n; ++g) t.set_entry(G.identity[G.arrows[g].source], g, Rational(1));
    return t;
}

inline LinMap groupoid_target_idempotent(const FiniteGroupoid& G) {
    int n = G.size();
    LinMap r = LinMap::zero(n, n);
    for (int g = 0; g < n; ++g) r.set_entry(G.identity[G.arrows[g].target], g, Rational(1));
    return r;
}

// ---------------------------------------------------------------------------
// Module builders.
// ---------------------------------------------------------------------------

inline RightModule regular_module(const WeakBimonoid& B) { return RightModule{B.dim, B.mu}; }

inline RightModule free_module(const WeakBimonoid& B, int X) {
    return RightModule{X * B.dim, tensor(LinMap::identity(X), B.mu)};
}

// One-dimensional module along a multiplicative character (row of values).
inline RightModule character_module(const std::vector<Rational>& values) {
    LinMap action = LinMap::zero(1, static_cast<int>(values.size()));
    for (int k = 0; k < static_cast<int>(values.size()); ++k)
        action.set_entry(0, k, values[k]);
    return RightModule{1, action};
}

// d-dimensional module from one matrix per basis element of B:
// v·e_k = M_k v.
inline RightModule matrix_module(const std::vector<LinMap>& mats) {
    int d = mats.at(0).cod();
    int dim = static_cast<int>(mats.size());
    LinMap action = LinMap::zero(d, d * dim);
    for (int k = 0; k < dim; ++k) {
        if (mats[k].cod() != d || mats[k].dom() != d)
            throw DimensionMismatch("matrix_module: all matrices must be d×d");
        for (int a = 0; a < d; ++a)
            for (const auto& [r, val] : mats[k].col_entries(a))
                action.set_entry(r, a * dim + k, val);
    }
    return RightModule{d, action};
}

// Carrier spanned by the objects; e_o·g = [target(g) = o]·e_{source(g)}.
inline RightModule object_module(const FiniteGroupoid& G) {
    int n = G.size();
    LinMap action = LinMap::zero(G.objects, G.objects * n);
    for (int o = 0; o < G.objects; ++o)
        for (int g = 0; g < n; ++g)
            if (G.arrows[g].target == o)
                action.set_entry(G.arrows[g].source, o * n + g, Rational(1));
    return RightModule{G.objects, action};
}

// Sign-twisted object module of the two-object Z/2 groupoid:
// e_o·(i←j,s) = [i = o]·(−1)^s·e_j.
inline RightModule object_sign_module(const FiniteGroupoid& G) {
    int n = G.size();
    LinMap action = LinMap::zero(G.objects, G.objects * n);
    for (int o = 0; o < G.objects; ++o)
        for (int g = 0; g < n; ++g)
            if (G.arrows[g].target == o) {
                int s = g % 2;  // arrow index (i,j,s) ↦ i·4+j·2+s
                action.set_entry(G.arrows[g].source, o * n + g,
                                 s == 0 ? Rational(1) : Rational(-1));
            }
    return RightModule{G.objects, action};
}

// Span of the arrows into a fixed object, under right multiplication.
inline RightModule arrows_into_module(const FiniteGroupoid& G, int object) {
    int n = G.size();
    std::vector<int> local(n, -1);
    std::vector<int> basis;
    for (int g = 0; g < n; ++g)
        if (G.arrows[g].target == object) {
            local[g] = static_cast<int>(basis.size());
            basis.push_back(g);
        }
    int d = static_cast<int>(basis.size());
    LinMap action = LinMap::zero(d, d * n);
    for (int a = 0; a < d; ++a)
        for (int h = 0; h < n; ++h) {
            int gh = G.composition[basis[a]][h];
            if (gh >= 0) action.set_entry(local[gh], a * n + h, Rational(1));
        }
    return RightModule{d, action};
}

// ---------------------------------------------------------------------------
// The pinned example corpus.
// ---------------------------------------------------------------------------

struct NamedAlgebra {
    std::string name;
    WeakBimonoid algebra;
    std::optional<FiniteGroupoid> groupoid;
    std::optional<FiniteMonoidTable> monoid;
};

inline FiniteMonoidTable idempotent_two_monoid() {
    return FiniteMonoidTable{2, {{0, 1}, {1, 1}}, 0};
}

inline FiniteMonoidTable left_zero_three_monoid() {
    return FiniteMonoidTable{3, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0};
}

inline std::vector<NamedAlgebra> corpus() {
    std::vector<NamedAlgebra> out;
    auto add_groupoid = [&](const std::string& name, const FiniteGroupoid& G) {
        out.push_back({name, groupoid_algebra(G), G, std::nullopt});
    };
    auto add_monoid = [&](const std::string& name, const FiniteMonoidTable& M) {
        out.push_back({name, monoid_algebra(M), std::nullopt, M});
    };
    add_groupoid("trivial", discrete_groupoid(1));
    add_groupoid("two_points", discrete_groupoid(2));
    add_groupoid("z2_group", cyclic_group_groupoid(2));
    add_groupoid("pair2", pair_groupoid(2));
    add_groupoid("z3_group", cyclic_group_groupoid(3));
    add_groupoid("z4_group", cyclic_group_groupoid(4));
    add_groupoid("two_points_z2", two_object_z2_groupoid());
    add_monoid("idem2", idempotent_two_monoid());
    add_monoid("leftzero3", left_zero_three_monoid());
    return out;
}

// Three lawful right modules per corpus algebra, keyed by name.
inline std::vector<std::pair<std::string, RightModule>> standard_modules(
    const NamedAlgebra& entry) {
    const WeakBimonoid& B = entry.algebra;
    std::vector<std::pair<std::string, RightModule>> mods;
    const std::string& name = entry.name;
    if (name == "trivial") {
        mods = {{"regular", regular_module(B)},
                {"unit_character", character_module({Rational(1)})},
                {"free2", free_module(B, 2)}};
    } else if (name == "two_points") {
        mods = {{"regular", regular_module(B)},
                {"point0", character_module({Rational(1), Rational(0)})},
                {"point1", character_module({Rational(0), Rational(1)})}};
    } else if (name == "z2_group") {
        mods = {{"regular", regular_module(B)},
                {"trivial_character", character_module({Rational(1), Rational(1)})},
                {"sign", character_module({Rational(1), Rational(-1)})}};
    } else if (name == "pair2") {
        mods = {{"regular", regular_module(B)},
                {"objects", object_module(*entry.groupoid)},
                {"into0", arrows_into_module(*entry.groupoid, 0)}};
    } else if (name == "z3_group") {
        LinMap m0 = LinMap::identity(2);
        LinMap m1 = LinMap::zero(2, 2);
        m1.set_entry(0, 1, Rational(-1));
        m1.set_entry(1, 0, Rational(1));
        m1.set_entry(1, 1, Rational(-1));
        LinMap m2 = compose(m1, m1);
        mods = {{"regular", regular_module(B)},
                {"trivial_character",
                 character_module({Rational(1), Rational(1), Rational(1)})},
                {"planar_rotation", matrix_module({m0, m1, m2})}};
    } else if (name == "z4_group") {
        mods = {{"regular", regular_module(B)},
                {"trivial_character",
                 character_module({Rational(1), Rational(1), Rational(1), Rational(1)})},
                {"sign",
                 character_module({Rational(1), Rational(-1), Rational(1), Rational(-1)})}};
    } else if (name == "two_points_z2") {
        mods = {{"objects", object_module(*entry.groupoid)},
                {"objects_sign", object_sign_module(*entry.groupoid)},
                {"into0", arrows_into_module(*entry.groupoid, 0)}};
    } else if (name == "idem2") {
        mods = {{"regular", regular_module(B)},
                {"trivial_character", character_module({Rational(1), Rational(1)})},
                {"null_x", character_module({Rational(1), Rational(0)})}};
    } else if (name == "leftzero3") {
        // Right multiplication fixes both non-unit elements, so the ideal they
        // span is a two-dimensional module with trivial action.
        mods = {{"regular", regular_module(B)},
                {"trivial_character",
                 character_module({Rational(1), Rational(1), Rational(1)})},
                {"ideal_ab",
                 matrix_module({LinMap::identity(2), LinMap::identity(2), LinMap::identity(2)})}};
    } else {
        throw Error("standard_modules: unknown corpus entry '" + name + "'");
    }
    for (const auto& [mname, mod] : mods) {
        AxiomReport laws = validate_module(mod, B);
        if (!laws.all_hold())
            throw ModuleLawFailed("standard_modules: " + name + "/" + mname + ": " +
                                  laws.failing_joined());
    }
    return mods;
}

// ---------------------------------------------------------------------------
// Deterministic counterexample generator: the first single-entry ±1
// perturbation (over μ, δ, η, ε in row-major order) that makes the named
// axiom group fail.
// ---------------------------------------------------------------------------

inline WeakBimonoid mutate(const WeakBimonoid& B, const std::string& target) {
    auto entry_fails = [](const AxiomReport& rep, const std::string& name) {
        const AxiomCheck* c = rep.find(name);
        return c != nullptr && !c->holds;
    };
    auto group_fails = [&](const WeakBimonoid& cand) -> bool {
        if (target == "mu_associative" || target == "mu_unital" ||
            target == "delta_coassociative" || target == "delta_counital") {
            AxiomReport rep = validate_monoid_comonoid(cand);
            if (target == "mu_associative") return entry_fails(rep, "mu_associative");
            if (target == "mu_unital")
                return entry_fails(rep, "mu_left_unital") || entry_fails(rep, "mu_right_unital");
            if (target == "delta_coassociative") return entry_fails(rep, "delta_coassociative");
            return entry_fails(rep, "delta_left_counital") ||
                   entry_fails(rep, "delta_right_counital");
        }
        if (target == "mult_comult_compat" || target == "weak_counit" ||
            target == "weak_unit" || target == "counit_mult") {
            AxiomReport rep = check_weak_bimonoid(cand);
            if (target == "mult_comult_compat") return entry_fails(rep, "mult_comult_compat");
            if (target == "weak_counit")
                return entry_fails(rep, "weak_counit_braided") ||
                       entry_fails(rep, "weak_counit_plain");
            if (target == "weak_unit")
                return entry_fails(rep, "weak_unit_braided") ||
                       entry_fails(rep, "weak_unit_plain");
            return entry_fails(rep, "counit_mult_braided") ||
                   entry_fails(rep, "counit_mult_plain");
        }
        if (target == "any")
            return !validate_monoid_comonoid(cand).all_hold() ||
                   !check_weak_bimonoid(cand).all_hold();
        throw Error("mutate: unknown target '" + target + "'");
    };

    LinMap WeakBimonoid::*slots[] = {&WeakBimonoid::mu, &WeakBimonoid::delta, &WeakBimonoid::eta,
                                     &WeakBimonoid::eps};
    for (auto slot : slots) {
        const LinMap& orig = B.*slot;
        for (int r = 0; r < orig.cod(); ++r)
            for (int c = 0; c < orig.dom(); ++c)
                for (int sign = 0; sign < 2; ++sign) {
                    WeakBimonoid cand = B;
                    Rational shift = sign == 0 ? Rational(1) : Rational(-1);
                    (cand.*slot).set_entry(r, c, orig.entry(r, c) + shift);
                    if (group_fails(cand)) return cand;
                }
    }
    throw Error("mutate: no single-entry perturbation breaks '" + target + "'");
}

}  // namespace weakhopf
