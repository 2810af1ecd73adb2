#pragma once

#include "weakhopf/errors.hpp"
#include "weakhopf/linmap.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace weakhopf {

using DenseMatrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form by exact Gauss-Jordan elimination with
// first-nonzero pivoting (deterministic). Returns the pivot column indices in
// increasing row order. `last_col` limits the columns eligible as pivots
// (pass < width to keep augmented columns pivot-free); defaults to the full
// width.
inline std::vector<int> rref(DenseMatrix& m, int last_col = -1) {
    int rows = static_cast<int>(m.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    if (last_col < 0) last_col = cols;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < last_col && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        if (m[r][c] != 1) {
            Rational inv = Rational(1) / m[r][c];
            for (int j = c; j < cols; ++j)
                if (m[r][j] != 0) m[r][j] *= inv;
        }
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j)
                if (m[r][j] != 0) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(const LinMap& f) {
    DenseMatrix m = f.to_rows();
    return static_cast<int>(rref(m).size());
}

inline bool is_invertible(const LinMap& f) { return f.dom() == f.cod() && rank(f) == f.dom(); }

// Exact inverse of a square invertible map (Gauss-Jordan on [f | id]).
inline LinMap inverse(const LinMap& f) {
    if (f.dom() != f.cod()) throw NotSquare("inverse: map is not square");
    int n = f.dom();
    DenseMatrix aug = f.to_rows();
    for (int r = 0; r < n; ++r) {
        aug[r].resize(2 * n, Rational(0));
        aug[r][n + r] = 1;
    }
    auto pivots = rref(aug, n);
    if (static_cast<int>(pivots.size()) != n) throw NotInvertible("inverse: map is singular");
    DenseMatrix out(n, std::vector<Rational>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out[r][c] = aug[r][n + c];
    return LinMap::from_rows(out);
}

// A splitting e = section ∘ retraction with retraction ∘ section = id_rank.
struct SplitIdempotent {
    LinMap retraction;  // P : n -> rank
    LinMap section;     // I : rank -> n
    int rank = 0;
};

// Deterministic splitting of an exact idempotent e (throws NotSquare /
// NotIdempotent otherwise). The section's columns are the pivot columns of
// the reduced column echelon form of e (computed as rref of the transpose),
// and the retraction rows are the corresponding rows of e; this makes both
// factors unique functions of e's entries.
inline SplitIdempotent split_idempotent(const LinMap& e) {
    if (e.dom() != e.cod()) throw NotSquare("split_idempotent: map is not square");
    if (compose(e, e) != e) throw NotIdempotent("split_idempotent: e∘e != e");
    int n = e.dom();
    DenseMatrix t = e.transpose().to_rows();
    auto pivots = rref(t);  // pivots index rows of e; nonzero rows of rref(eᵀ) are Iᵀ
    int r = static_cast<int>(pivots.size());
    SplitIdempotent out;
    out.rank = r;
    out.section = LinMap::zero(n, r);
    for (int k = 0; k < r; ++k)
        for (int c = 0; c < n; ++c)
            if (t[k][c] != 0) out.section.set_entry(c, k, t[k][c]);
    DenseMatrix erows = e.to_rows();
    out.retraction = LinMap::zero(r, n);
    for (int k = 0; k < r; ++k)
        for (int c = 0; c < n; ++c)
            if (erows[pivots[k]][c] != 0) out.retraction.set_entry(k, c, erows[pivots[k]][c]);
    // Both identities hold by construction; assert them anyway since every
    // downstream structure depends on this factorization being exact.
    if (compose(out.section, out.retraction) != e)
        throw NotIdempotent("split_idempotent: section∘retraction != e");
    if (compose(out.retraction, out.section) != LinMap::identity(r))
        throw NotIdempotent("split_idempotent: retraction∘section != id");
    return out;
}

// Row-major vectorization of a cod×dom matrix as a (cod*dom)-column.
inline LinMap vec(const LinMap& m) {
    LinMap v = LinMap::zero(m.cod() * m.dom(), 1);
    for (int c = 0; c < m.dom(); ++c)
        for (const auto& [r, val] : m.col_entries(c)) v.set_entry(r * m.dom() + c, 0, val);
    return v;
}

inline LinMap unvec(const LinMap& v, int cod, int dom) {
    if (v.dom() != 1 || v.cod() != cod * dom) throw DimensionMismatch("unvec: shape mismatch");
    LinMap m = LinMap::zero(cod, dom);
    for (const auto& [idx, val] : v.col_entries(0)) m.set_entry(idx / dom, idx % dom, val);
    return m;
}

// Matrix of a linear operator on the space of cod×dom matrices, evaluated by
// feeding it every matrix unit. The result acts on row-major vectorizations.
template <typename F>
inline LinMap linear_operator_matrix(int cod, int dom, F&& op) {
    LinMap first = op(LinMap::zero(cod, dom));
    // op must be linear, so op(0) = 0; use it only to size the output.
    LinMap out = LinMap::zero(first.cod() * first.dom(), cod * dom);
    for (int r = 0; r < cod; ++r)
        for (int c = 0; c < dom; ++c) {
            LinMap unit = LinMap::zero(cod, dom);
            unit.set_entry(r, c, Rational(1));
            LinMap img = vec(op(unit));
            for (const auto& [row, val] : img.col_entries(0))
                out.set_entry(row, r * dom + c, val);
        }
    return out;
}

// One linear constraint  operator(vec(unknown)) = vec(rhs)  on an unknown
// cod×dom matrix. The operator's domain must be cod*dom.
struct LinearConstraint {
    LinMap op;   // k × (cod*dom)
    LinMap rhs;  // the target as a map; vectorized internally (k = cod*dom of rhs... see solve)
};

struct SolveResult {
    std::optional<LinMap> solution;  // empty means the system is inconsistent
    bool unique = false;             // meaningful only when solution is present
};

// Solves the stacked exact linear system over the space of cod×dom unknown
// matrices. When the solution space has positive dimension, returns the
// minimal-support solution under the deterministic echelon ordering (all free
// coordinates zero) and reports unique = false.
inline SolveResult solve_linear(const std::vector<LinearConstraint>& constraints, int cod,
                                int dom) {
    int n = cod * dom;
    int total_rows = 0;
    for (const auto& c : constraints) {
        if (c.op.dom() != n) throw DimensionMismatch("solve_linear: operator domain mismatch");
        if (c.op.cod() != c.rhs.cod() * c.rhs.dom())
            throw DimensionMismatch("solve_linear: rhs size mismatch");
        total_rows += c.op.cod();
    }
    DenseMatrix aug(static_cast<std::size_t>(total_rows),
                    std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(0)));
    int row0 = 0;
    for (const auto& c : constraints) {
        for (int col = 0; col < n; ++col)
            for (const auto& [r, v] : c.op.col_entries(col)) aug[row0 + r][col] = v;
        LinMap b = vec(c.rhs);
        for (const auto& [r, v] : b.col_entries(0)) aug[row0 + r][n] = v;
        row0 += c.op.cod();
    }
    auto pivots = rref(aug, n);
    // Inconsistent iff some row is (0 ... 0 | nonzero).
    for (int r = static_cast<int>(pivots.size()); r < total_rows; ++r)
        if (aug[r][n] != 0) return {std::nullopt, false};
    LinMap x = LinMap::zero(cod, dom);
    for (int k = 0; k < static_cast<int>(pivots.size()); ++k) {
        int col = pivots[k];
        if (aug[k][n] != 0) x.set_entry(col / dom, col % dom, aug[k][n]);
    }
    return {x, static_cast<int>(pivots.size()) == n};
}

}  // namespace weakhopf
