#pragma once

#include "weakhopf/errors.hpp"
#include "weakhopf/rational.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace weakhopf {

// A linear map between finite-dimensional rational vector spaces, stored as
// an exact cod()×dom() matrix. Zero-dimensional domains/codomains are
// first-class (the unique map to/from the zero space is the empty matrix).
//
// Tensor convention (normative for the whole library and the file format):
// the basis of X⊗Y is ordered with the LEFT factor most significant, i.e.
// e_i⊗e_j has index i*dim(Y) + j.
//
// Storage is sparse by column (most maps here are permutation-like), but the
// public contract is the dense matrix: entry(r, c) is total, equality is
// entry-wise, and serialization is dense row-major.
class LinMap {
  public:
    LinMap() : cod_(0), dom_(0) {}

    static LinMap zero(int cod, int dom) {
        LinMap m;
        m.cod_ = check_dim(cod);
        m.dom_ = check_dim(dom);
        m.cols_.assign(static_cast<std::size_t>(dom), {});
        return m;
    }

    static LinMap identity(int n) {
        LinMap m = zero(n, n);
        for (int i = 0; i < n; ++i) m.cols_[i].emplace_back(i, Rational(1));
        return m;
    }

    static LinMap from_rows(const std::vector<std::vector<Rational>>& rows) {
        int cod = static_cast<int>(rows.size());
        int dom = cod == 0 ? 0 : static_cast<int>(rows[0].size());
        for (const auto& row : rows)
            if (static_cast<int>(row.size()) != dom)
                throw DimensionMismatch("from_rows: ragged rows");
        LinMap m = zero(cod, dom);
        for (int r = 0; r < cod; ++r)
            for (int c = 0; c < dom; ++c)
                if (rows[r][c] != 0) m.cols_[c].emplace_back(r, rows[r][c]);
        for (auto& col : m.cols_)
            std::sort(col.begin(), col.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        return m;
    }

    // Column vector (maps from the 1-dimensional space).
    static LinMap column(const std::vector<Rational>& v) {
        LinMap m = zero(static_cast<int>(v.size()), 1);
        for (int r = 0; r < m.cod_; ++r)
            if (v[r] != 0) m.cols_[0].emplace_back(r, v[r]);
        return m;
    }

    // Row vector (maps to the 1-dimensional space).
    static LinMap row(const std::vector<Rational>& v) {
        LinMap m = zero(1, static_cast<int>(v.size()));
        for (int c = 0; c < m.dom_; ++c)
            if (v[c] != 0) m.cols_[c].emplace_back(0, v[c]);
        return m;
    }

    int dom() const { return dom_; }
    int cod() const { return cod_; }

    Rational entry(int r, int c) const {
        check_index(r, c);
        const auto& col = cols_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const auto& e, int row) { return e.first < row; });
        if (it != col.end() && it->first == r) return it->second;
        return Rational(0);
    }

    // Sets one entry (used by builders and by single-entry perturbations).
    void set_entry(int r, int c, const Rational& v) {
        check_index(r, c);
        auto& col = cols_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const auto& e, int row) { return e.first < row; });
        if (it != col.end() && it->first == r) {
            if (v == 0)
                col.erase(it);
            else
                it->second = v;
        } else if (v != 0) {
            col.insert(it, {r, v});
        }
    }

    bool is_zero() const {
        for (const auto& col : cols_)
            if (!col.empty()) return false;
        return true;
    }

    std::size_t nonzero_count() const {
        std::size_t n = 0;
        for (const auto& col : cols_) n += col.size();
        return n;
    }

    const std::vector<std::pair<int, Rational>>& col_entries(int c) const { return cols_[c]; }

    bool operator==(const LinMap& o) const {
        return cod_ == o.cod_ && dom_ == o.dom_ && cols_ == o.cols_;
    }
    bool operator!=(const LinMap& o) const { return !(*this == o); }

    std::vector<std::vector<Rational>> to_rows() const {
        std::vector<std::vector<Rational>> rows(
            static_cast<std::size_t>(cod_),
            std::vector<Rational>(static_cast<std::size_t>(dom_), Rational(0)));
        for (int c = 0; c < dom_; ++c)
            for (const auto& [r, v] : cols_[c]) rows[r][c] = v;
        return rows;
    }

    LinMap transpose() const {
        LinMap t = zero(dom_, cod_);
        for (int c = 0; c < dom_; ++c)
            for (const auto& [r, v] : cols_[c]) t.cols_[r].emplace_back(c, v);
        return t;  // columns already sorted: rows of *this are visited in column order
    }

    // Human-readable dense rendering, e.g. [[1, 0], [1/2, 1]].
    std::string str() const {
        std::ostringstream os;
        os << '[';
        auto rows = to_rows();
        for (int r = 0; r < cod_; ++r) {
            if (r) os << ", ";
            os << '[';
            for (int c = 0; c < dom_; ++c) {
                if (c) os << ", ";
                os << rows[r][c].str();
            }
            os << ']';
        }
        os << ']';
        return os.str();
    }

    // Canonical content key (dims plus sparse entries); used for memoization.
    std::string key() const {
        std::ostringstream os;
        os << cod_ << 'x' << dom_ << ':';
        for (int c = 0; c < dom_; ++c)
            for (const auto& [r, v] : cols_[c]) os << c << ',' << r << '=' << v.str() << ';';
        return os.str();
    }

    friend LinMap compose(const LinMap& g, const LinMap& f);
    friend LinMap tensor(const LinMap& f, const LinMap& g);
    friend LinMap operator+(const LinMap& a, const LinMap& b);
    friend LinMap operator-(const LinMap& a, const LinMap& b);
    friend LinMap operator*(const Rational& s, const LinMap& a);

  private:
    static int check_dim(int d) {
        if (d < 0) throw DimensionMismatch("negative dimension");
        return d;
    }
    void check_index(int r, int c) const {
        if (r < 0 || r >= cod_ || c < 0 || c >= dom_)
            throw DimensionMismatch("entry index out of range");
    }

    int cod_;
    int dom_;
    // cols_[c] holds the nonzero entries of column c, sorted by row index.
    std::vector<std::vector<std::pair<int, Rational>>> cols_;
};

// g ∘ f (apply f first). Requires dom(g) == cod(f).
inline LinMap compose(const LinMap& g, const LinMap& f) {
    if (g.dom_ != f.cod_)
        throw DimensionMismatch("compose: dom(g)=" + std::to_string(g.dom_) +
                                " != cod(f)=" + std::to_string(f.cod_));
    LinMap out = LinMap::zero(g.cod_, f.dom_);
    // Scratch accumulator over the rows of g, reused across columns.
    std::vector<Rational> scratch(static_cast<std::size_t>(g.cod_), Rational(0));
    std::vector<int> touched;
    for (int c = 0; c < f.dom_; ++c) {
        touched.clear();
        for (const auto& [k, fv] : f.cols_[c]) {
            for (const auto& [r, gv] : g.cols_[k]) {
                if (scratch[r] == 0 && !(gv == 0)) touched.push_back(r);
                scratch[r] += gv * fv;
            }
        }
        std::sort(touched.begin(), touched.end());
        auto& col = out.cols_[c];
        for (int r : touched) {
            if (scratch[r] != 0) col.emplace_back(r, scratch[r]);
            scratch[r] = 0;
        }
    }
    return out;
}

// Kronecker/tensor product f⊗g with the left factor most significant:
// (f⊗g)[r_f*cod(g)+r_g, c_f*dom(g)+c_g] = f[r_f,c_f] * g[r_g,c_g].
inline LinMap tensor(const LinMap& f, const LinMap& g) {
    LinMap out = LinMap::zero(f.cod_ * g.cod_, f.dom_ * g.dom_);
    for (int cf = 0; cf < f.dom_; ++cf) {
        for (int cg = 0; cg < g.dom_; ++cg) {
            auto& col = out.cols_[static_cast<std::size_t>(cf) * g.dom_ + cg];
            for (const auto& [rf, vf] : f.cols_[cf])
                for (const auto& [rg, vg] : g.cols_[cg])
                    col.emplace_back(rf * g.cod_ + rg, vf * vg);
        }
    }
    return out;  // inner loops emit rows in increasing order
}

template <typename... Rest>
inline LinMap tensor(const LinMap& a, const LinMap& b, const Rest&... rest) {
    return tensor(tensor(a, b), rest...);
}

// The symmetry X⊗Y → Y⊗X on spaces of dimension m = dim X, n = dim Y:
// e_i⊗e_j ↦ e_j⊗e_i.
inline LinMap swap_map(int m, int n) {
    LinMap s = LinMap::zero(n * m, m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) s.set_entry(j * m + i, i * n + j, Rational(1));
    return s;
}

inline LinMap operator+(const LinMap& a, const LinMap& b) {
    if (a.cod_ != b.cod_ || a.dom_ != b.dom_) throw DimensionMismatch("operator+: shape mismatch");
    LinMap out = LinMap::zero(a.cod_, a.dom_);
    for (int c = 0; c < a.dom_; ++c) {
        const auto& ca = a.cols_[c];
        const auto& cb = b.cols_[c];
        auto& co = out.cols_[c];
        std::size_t i = 0, j = 0;
        while (i < ca.size() || j < cb.size()) {
            if (j == cb.size() || (i < ca.size() && ca[i].first < cb[j].first)) {
                co.push_back(ca[i++]);
            } else if (i == ca.size() || cb[j].first < ca[i].first) {
                co.push_back(cb[j++]);
            } else {
                Rational v = ca[i].second + cb[j].second;
                if (v != 0) co.emplace_back(ca[i].first, v);
                ++i, ++j;
            }
        }
    }
    return out;
}

inline LinMap operator*(const Rational& s, const LinMap& a) {
    LinMap out = LinMap::zero(a.cod_, a.dom_);
    if (s == 0) return out;
    for (int c = 0; c < a.dom_; ++c)
        for (const auto& [r, v] : a.cols_[c]) out.cols_[c].emplace_back(r, s * v);
    return out;
}

inline LinMap operator-(const LinMap& a, const LinMap& b) { return a + Rational(-1) * b; }

// Composes a chain right-to-left: compose_chain(f3, f2, f1) = f3 ∘ f2 ∘ f1.
template <typename... Rest>
inline LinMap compose(const LinMap& a, const LinMap& b, const Rest&... rest) {
    return compose(compose(a, b), rest...);
}

}  // namespace weakhopf
