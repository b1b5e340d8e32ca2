#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qdr/field.hpp"

namespace qdr {

/// Sparse row: (column, value) pairs sorted by column, values nonzero.
template <class E>
using SpRow = std::vector<std::pair<int, E>>;

/// Sparse matrix with explicitly stored dimensions.
template <class E>
struct SpMat {
    int rows = 0, cols = 0;
    std::vector<SpRow<E>> r;

    SpMat() = default;
    SpMat(int m, int n) : rows(m), cols(n), r(m) {}

    void set(int i, int j, E v) {
        if (k_sp_zero(v)) return;
        auto& row = r[i];
        auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const auto& p, int c) { return p.first < c; });
        if (it != row.end() && it->first == j) it->second = std::move(v);
        else row.insert(it, {j, std::move(v)});
    }
    void add_at(int i, int j, const E& v) {
        if (k_sp_zero(v)) return;
        auto& row = r[i];
        auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const auto& p, int c) { return p.first < c; });
        if (it != row.end() && it->first == j) {
            it->second += v;
            if (k_sp_zero(it->second)) row.erase(it);
        } else {
            row.insert(it, {j, v});
        }
    }
    size_t nnz() const {
        size_t n = 0;
        for (auto& row : r) n += row.size();
        return n;
    }

    template <class X>
    static bool k_sp_zero(const X& v) { return v.is_zero(); }
    static bool k_sp_zero(const Rat& v) { return sgn(v) == 0; }
};

template <class C>
SpMat<typename C::Elem> sp_identity(const C& ctx, int n) {
    SpMat<typename C::Elem> m(n, n);
    for (int i = 0; i < n; ++i) m.r[i] = {{i, ctx.one()}};
    return m;
}

template <class E>
SpRow<E> sp_row_sum(const SpRow<E>& a, const SpRow<E>& b) {
    SpRow<E> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) out.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) out.push_back(b[j++]);
        else {
            E v = a[i].second + b[j].second;
            if (!SpMat<E>::k_sp_zero(v)) out.push_back({a[i].first, std::move(v)});
            ++i, ++j;
        }
    }
    return out;
}

template <class E>
SpRow<E> sp_row_axpy(const SpRow<E>& a, const E& c, const SpRow<E>& b) {
    // a + c*b
    SpRow<E> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) out.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) {
            E v = c * b[j].second;
            if (!SpMat<E>::k_sp_zero(v)) out.push_back({b[j].first, std::move(v)});
            ++j;
        } else {
            E v = a[i].second + c * b[j].second;
            if (!SpMat<E>::k_sp_zero(v)) out.push_back({a[i].first, std::move(v)});
            ++i, ++j;
        }
    }
    return out;
}

template <class E>
SpMat<E> sp_add(const SpMat<E>& a, const SpMat<E>& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("sp_add: shape mismatch");
    SpMat<E> out(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) out.r[i] = sp_row_sum(a.r[i], b.r[i]);
    return out;
}

template <class E>
SpMat<E> sp_scale(const SpMat<E>& a, const E& c) {
    SpMat<E> out(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) out.r[i] = sp_row_axpy(SpRow<E>{}, c, a.r[i]);
    return out;
}

template <class E>
SpMat<E> sp_sub(const SpMat<E>& a, const SpMat<E>& b) {
    SpMat<E> out(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) {
        SpRow<E> nb;
        nb.reserve(b.r[i].size());
        for (auto& [c, v] : b.r[i]) nb.push_back({c, -v});
        out.r[i] = sp_row_sum(a.r[i], nb);
    }
    return out;
}

template <class E>
SpMat<E> sp_mul(const SpMat<E>& a, const SpMat<E>& b) {
    if (a.cols != b.rows) throw std::invalid_argument("sp_mul: shape mismatch");
    SpMat<E> out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        SpRow<E> acc;
        for (auto& [k, av] : a.r[i]) acc = sp_row_axpy(acc, av, b.r[k]);
        out.r[i] = std::move(acc);
    }
    return out;
}

template <class E>
SpMat<E> sp_transpose(const SpMat<E>& a) {
    SpMat<E> out(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (auto& [j, v] : a.r[i]) out.r[j].push_back({i, v});
    return out;
}

template <class E>
std::vector<E> sp_apply(const SpMat<E>& a, const std::vector<E>& x, const E& zero) {
    std::vector<E> y(a.rows, zero);
    for (int i = 0; i < a.rows; ++i)
        for (auto& [j, v] : a.r[i]) y[i] += v * x[j];
    return y;
}

/// Applies the matrix to a sparse vector (column map composition).
template <class E>
SpRow<E> sp_apply_sparse(const SpMat<E>& aT /* transpose of A, rows = columns of A */,
                         const SpRow<E>& x) {
    SpRow<E> acc;
    for (auto& [j, v] : x) acc = sp_row_axpy(acc, v, aT.r[j]);
    return acc;
}

// ---------------------------------------------------------------------------
// Exact Gaussian elimination over a field, column-ordered pivoting.
// Pivot columns are scanned left to right, so pivot columns are the
// lexicographically first basis of the column space.  Within a column the
// sparsest candidate row is chosen.

template <class E>
struct Echelon {
    int rank = 0;
    std::vector<int> pivot_cols;           // ascending
    std::vector<int> pivot_rows;           // pivot_rows[k] eliminates pivot_cols[k]
    std::vector<SpRow<E>> rows;            // echelon rows, rows[k] starts at pivot_cols[k]
};

template <class E>
const E* row_get(const SpRow<E>& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& p, int c) { return p.first < c; });
    if (it != row.end() && it->first == col) return &it->second;
    return nullptr;
}

template <class C>
Echelon<typename C::Elem> sp_echelon(const C& ctx, const SpMat<typename C::Elem>& m) {
    using E = typename C::Elem;
    Echelon<E> ech;
    std::vector<SpRow<E>> work = m.r;
    std::vector<bool> used(m.rows, false);
    for (int col = 0; col < m.cols; ++col) {
        int best = -1;
        size_t best_sz = 0;
        for (int i = 0; i < m.rows; ++i) {
            if (used[i] || work[i].empty()) continue;
            if (work[i].front().first != col) continue;
            if (best < 0 || work[i].size() < best_sz) { best = i; best_sz = work[i].size(); }
        }
        if (best < 0) continue;
        used[best] = true;
        // normalize pivot row to a unit pivot
        E inv = ctx.one() / work[best].front().second;
        SpRow<E> prow = sp_row_axpy(SpRow<E>{}, inv, work[best]);
        for (int i = 0; i < m.rows; ++i) {
            if (used[i] || work[i].empty()) continue;
            if (work[i].front().first != col) continue;
            E c = -work[i].front().second;
            work[i] = sp_row_axpy(work[i], c, prow);
        }
        ech.pivot_cols.push_back(col);
        ech.pivot_rows.push_back(best);
        ech.rows.push_back(std::move(prow));
        ++ech.rank;
    }
    return ech;
}

template <class C>
int sp_rank(const C& ctx, const SpMat<typename C::Elem>& m) {
    return sp_echelon(ctx, m).rank;
}

/// Basis of the right kernel, one dense vector per free column.
template <class C>
std::vector<std::vector<typename C::Elem>> sp_kernel(const C& ctx,
                                                     const SpMat<typename C::Elem>& m) {
    using E = typename C::Elem;
    Echelon<E> ech = sp_echelon(ctx, m);
    // back-substitute to reduced echelon form
    for (int k = ech.rank - 1; k >= 0; --k) {
        for (int l = 0; l < k; ++l) {
            const E* v = row_get(ech.rows[l], ech.pivot_cols[k]);
            if (v) ech.rows[l] = sp_row_axpy(ech.rows[l], -(*v), ech.rows[k]);
        }
    }
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<E>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<E> v(m.cols, ctx.zero());
        v[c] = ctx.one();
        for (int k = 0; k < ech.rank; ++k) {
            const E* coef = row_get(ech.rows[k], c);
            if (coef) v[ech.pivot_cols[k]] = -(*coef);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Indices of the lexicographically first independent columns.
template <class C>
std::vector<int> sp_column_space_pivots(const C& ctx, const SpMat<typename C::Elem>& m) {
    return sp_echelon(ctx, m).pivot_cols;
}

/// Left inverse L (r x rows) of a full-column-rank matrix B (rows x r): L*B = I.
template <class C>
SpMat<typename C::Elem> sp_left_inverse(const C& ctx, const SpMat<typename C::Elem>& b) {
    using E = typename C::Elem;
    int n = b.rows, r = b.cols;
    // eliminate [B | I]
    std::vector<SpRow<E>> work(n);
    for (int i = 0; i < n; ++i) {
        work[i] = b.r[i];
        work[i].push_back({r + i, ctx.one()});
    }
    std::vector<int> pivot_row_of(r, -1);
    std::vector<bool> used(n, false);
    for (int col = 0; col < r; ++col) {
        int best = -1;
        size_t best_sz = 0;
        for (int i = 0; i < n; ++i) {
            if (used[i] || work[i].empty() || work[i].front().first != col) continue;
            if (best < 0 || work[i].size() < best_sz) { best = i; best_sz = work[i].size(); }
        }
        if (best < 0) throw std::logic_error("sp_left_inverse: matrix does not have full column rank");
        used[best] = true;
        E inv = ctx.one() / work[best].front().second;
        work[best] = sp_row_axpy(SpRow<E>{}, inv, work[best]);
        for (int i = 0; i < n; ++i) {
            if (i == best || work[i].empty() || work[i].front().first != col) continue;
            E c = -work[i].front().second;
            work[i] = sp_row_axpy(work[i], c, work[best]);
        }
        pivot_row_of[col] = best;
    }
    // back-substitution: clear B-part above pivots
    for (int col = r - 1; col >= 0; --col) {
        int pr = pivot_row_of[col];
        for (int col2 = 0; col2 < col; ++col2) {
            int pr2 = pivot_row_of[col2];
            const E* v = row_get(work[pr2], col);
            if (v) work[pr2] = sp_row_axpy(work[pr2], -(*v), work[pr]);
        }
    }
    SpMat<E> L(r, n);
    for (int col = 0; col < r; ++col) {
        for (auto& [j, v] : work[pivot_row_of[col]]) {
            if (j >= r) L.r[col].push_back({j - r, v});
        }
    }
    return L;
}

// ---------------------------------------------------------------------------
// Dense operator matrices (small, e.g. exterior-level endomorphisms).

template <class E>
struct Dense {
    int rows = 0, cols = 0;
    std::vector<std::vector<E>> a;
    Dense() = default;
    template <class C>
    Dense(const C& ctx, int m, int n) : rows(m), cols(n), a(m, std::vector<E>(n, ctx.zero())) {}
    std::vector<E>& operator[](int i) { return a[i]; }
    const std::vector<E>& operator[](int i) const { return a[i]; }
};

template <class C>
Dense<typename C::Elem> dense_mul(const C& ctx, const Dense<typename C::Elem>& x,
                                  const Dense<typename C::Elem>& y) {
    using E = typename C::Elem;
    if (x.cols != y.rows) throw std::invalid_argument("dense_mul: shape mismatch");
    Dense<E> z(ctx, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (ctx.is_zero(x.a[i][k])) continue;
            for (int j = 0; j < y.cols; ++j) z.a[i][j] += x.a[i][k] * y.a[k][j];
        }
    return z;
}

template <class C>
Dense<typename C::Elem> dense_sub(const C& ctx, const Dense<typename C::Elem>& x,
                                  const Dense<typename C::Elem>& y) {
    Dense<typename C::Elem> z(ctx, x.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) z.a[i][j] = x.a[i][j] - y.a[i][j];
    return z;
}

template <class C>
Dense<typename C::Elem> dense_add(const C& ctx, const Dense<typename C::Elem>& x,
                                  const Dense<typename C::Elem>& y) {
    Dense<typename C::Elem> z(ctx, x.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) z.a[i][j] = x.a[i][j] + y.a[i][j];
    return z;
}

template <class C>
bool dense_is_zero(const C& ctx, const Dense<typename C::Elem>& x) {
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j)
            if (!ctx.is_zero(x.a[i][j])) return false;
    return true;
}

template <class C>
SpMat<typename C::Elem> dense_to_sparse(const C& ctx, const Dense<typename C::Elem>& x) {
    SpMat<typename C::Elem> m(x.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j)
            if (!ctx.is_zero(x.a[i][j])) m.r[i].push_back({j, x.a[i][j]});
    return m;
}

template <class C>
Dense<typename C::Elem> sparse_to_dense(const C& ctx, const SpMat<typename C::Elem>& m) {
    Dense<typename C::Elem> x(ctx, m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (auto& [j, v] : m.r[i]) x.a[i][j] = v;
    return x;
}

template <class C>
int dense_rank(const C& ctx, const Dense<typename C::Elem>& x) {
    return sp_rank(ctx, dense_to_sparse(ctx, x));
}

template <class C>
Dense<typename C::Elem> dense_identity(const C& ctx, int n) {
    Dense<typename C::Elem> x(ctx, n, n);
    for (int i = 0; i < n; ++i) x.a[i][i] = ctx.one();
    return x;
}

} // namespace qdr
