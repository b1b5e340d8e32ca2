#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "qdr/frt.hpp"

namespace qdr {

// ---------------------------------------------------------------------------
// Permutation utilities for braid lifts.

/// Reduced word for a permutation (0-based one-line notation, s_i written as
/// i+1 acting on slots i+1, i+2).  The empty word is the identity.
inline std::vector<int> reduced_word(std::vector<int> p) {
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            if (p[i] > p[i + 1]) {
                std::swap(p[i], p[i + 1]);
                swaps.push_back(static_cast<int>(i) + 1);
                moved = true;
            }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps; // pi = s_{w_1} ... s_{w_r} applied right to left as operators
}

inline int perm_sign(const std::vector<int>& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

/// All (i,j)-shuffles: permutations increasing on the first i and last j slots.
inline std::vector<std::vector<int>> shuffles(int i, int j) {
    int k = i + j;
    std::vector<std::vector<int>> out;
    std::vector<int> pick(i);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == i) {
            std::vector<int> tau(k);
            std::vector<bool> used(k, false);
            for (int t = 0; t < i; ++t) {
                tau[t] = pick[t];
                used[pick[t]] = true;
            }
            int t = i;
            for (int v = 0; v < k; ++v)
                if (!used[v]) tau[t++] = v;
            out.push_back(tau);
            return;
        }
        for (int v = start; v < k; ++v) {
            pick[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    if (i == 0 || j == 0) {
        std::vector<int> id(k);
        std::iota(id.begin(), id.end(), 0);
        out.push_back(id);
        return out;
    }
    rec(0, 0);
    return out;
}

inline std::vector<int> perm_inverse(const std::vector<int>& p) {
    std::vector<int> q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

// ---------------------------------------------------------------------------
// Tensor-leg lifts.

/// Lifts a two-site operator (dim x dim per site) to slots (s, s+1) of a
/// k-fold tensor power; slot 1 is the most significant index digit.
template <class C>
SpMat<typename C::Elem> lift_two_site(const C& ctx, const SpMat<typename C::Elem>& op, int k,
                                      int s, int dim) {
    using E = typename C::Elem;
    if (k < 2 || s < 1 || s + 1 > k) throw std::invalid_argument("lift_two_site: bad slot");
    long pre = 1, post = 1;
    for (int t = 0; t < s - 1; ++t) pre *= dim;
    for (int t = s + 1; t < k; ++t) post *= dim;
    long total = pre * dim * dim * post;
    SpMat<E> out(total, total);
    for (int rab = 0; rab < dim * dim; ++rab)
        for (auto& [cab, v] : op.r[rab]) {
            for (long p = 0; p < pre; ++p)
                for (long q = 0; q < post; ++q) {
                    long row = (p * dim * dim + rab) * post + q;
                    long col = (p * dim * dim + cab) * post + q;
                    out.r[row].push_back({static_cast<int>(col), v});
                }
        }
    for (auto& row : out.r)
        std::sort(row.begin(), row.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return out;
}

// ---------------------------------------------------------------------------
// Braidings and the sigma-metric.

/// Braiding sigma_{a,b} : Gamma_a (x) Gamma_b -> Gamma_b (x) Gamma_a on the
/// coinvariant bases, computed from the right coaction of Gamma_b and the
/// right adjoint action of Gamma_a.
template <class C>
SpMat<typename C::Elem> build_braiding(const C& ctx, const FrtData<C>& f, int tau_a, int tau_b) {
    using E = typename C::Elem;
    const int n = f.N, nn = f.dim();
    const auto& act = f.action(tau_a);
    SpMat<E> sig(nn * nn, nn * nn);
    for (int kk = 0; kk < n; ++kk)
        for (int ll = 0; ll < n; ++ll)
            for (int ii = 0; ii < n; ++ii)
                for (int jj = 0; jj < n; ++jj) {
                    // coaction entry v^{(kk,ll)}_{(ii,jj)} of Gamma_b as a word
                    E scale = tau_b > 0 ? ctx.one() : (f.d[ii] / f.d[kk]);
                    SpMat<E> m = sp_mul(act.tu[kk * n + ii], act.tsu[jj * n + ll]);
                    int K = kk * n + ll, J = ii * n + jj;
                    for (int I = 0; I < nn; ++I)
                        for (auto& [L, v] : m.r[I]) sig.add_at(K * nn + L, I * nn + J, scale * v);
                }
    return sig;
}

/// Inverse braiding by exact matrix inversion.
template <class C>
SpMat<typename C::Elem> invert_square(const C& ctx, const SpMat<typename C::Elem>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("invert_square: not square");
    return sp_left_inverse(ctx, m);
}

/// Scaled-permutation form of the metric pairing g restricted to the
/// coinvariant bases: g(w_B, w_{img[B]}) = weight[B], all other pairs vanish.
template <class C>
struct MetricMap {
    std::vector<int> img;
    std::vector<typename C::Elem> weight;
};

/// g(w^+_{ij}, w^-_{kl}) = d_j d_i^{-1} delta_{jk} delta_{il} and
/// g(w^-_{ij}, w^+_{kl}) = delta_{jk} delta_{il}.
template <class C>
MetricMap<C> build_metric(const C& ctx, const FrtData<C>& f, int tau_first) {
    const int n = f.N;
    MetricMap<C> g;
    g.img.assign(n * n, 0);
    g.weight.assign(n * n, ctx.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            g.img[i * n + j] = j * n + i;
            g.weight[i * n + j] = tau_first > 0 ? f.d[j] / f.d[i] : ctx.one();
        }
    return g;
}

template <class C>
SpMat<typename C::Elem> metric_matrix(const C& ctx, const MetricMap<C>& g) {
    int nn = static_cast<int>(g.img.size());
    SpMat<typename C::Elem> m(nn, nn);
    for (int b = 0; b < nn; ++b) m.add_at(b, g.img[b], g.weight[b]);
    return m;
}

// ---------------------------------------------------------------------------
// The exterior tower of one calculus.

template <class C>
struct Level {
    int k = 0;
    long ambient = 1; // dim^k
    int rank = 0;     // dim of the exterior level
    SpMat<typename C::Elem> a_plus, a_minus; // antisymmetrizers on the ambient power
    std::vector<int> section;                // pivot columns: class t lifts to e_{section[t]}
    SpMat<typename C::Elem> proj;            // rank x ambient, proj * lift = identity
};

template <class C>
struct Tower {
    const C* ctx = nullptr;
    const FrtData<C>* frt = nullptr;
    int tau = +1;
    int dim = 0; // N^2
    SpMat<typename C::Elem> sigma, sigma_inv;
    std::vector<Level<C>> lv; // 0..kmax

    const Level<C>& level(int k) const { return lv.at(k); }
    int top() const { return static_cast<int>(lv.size()) - 1; }
};

/// A (x) id on one extra trailing slot.
template <class C>
SpMat<typename C::Elem> lift_right_pad(const C& ctx, const SpMat<typename C::Elem>& a, int dim) {
    using E = typename C::Elem;
    SpMat<E> out(a.rows * dim, a.cols * dim);
    for (int i = 0; i < a.rows; ++i)
        for (auto& [j, v] : a.r[i])
            for (int t = 0; t < dim; ++t) out.r[i * dim + t].push_back({j * dim + t, v});
    for (auto& row : out.r)
        std::sort(row.begin(), row.end(), [](auto& x, auto& y) { return x.first < y.first; });
    return out;
}

/// sigma_pi on k slots: operators compose right to left along the reduced word.
template <class C>
SpMat<typename C::Elem> braid_lift_word(const C& ctx, const SpMat<typename C::Elem>& sig, int k,
                                        const std::vector<int>& word, int dim) {
    long total = 1;
    for (int t = 0; t < k; ++t) total *= dim;
    SpMat<typename C::Elem> m = sp_identity(ctx, static_cast<int>(total));
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        m = sp_mul(lift_two_site(ctx, sig, k, *it, dim), m);
    return m;
}

/// B_{i,j} = sum over shuffles: sgn(pi) sigma_pi with pi^{-1} an (i,j)-shuffle.
template <class C>
SpMat<typename C::Elem> shuffle_operator(const C& ctx, const SpMat<typename C::Elem>& sig, int i,
                                         int j, int dim) {
    using E = typename C::Elem;
    int k = i + j;
    long total = 1;
    for (int t = 0; t < k; ++t) total *= dim;
    SpMat<E> acc(static_cast<int>(total), static_cast<int>(total));
    for (const auto& tau : shuffles(i, j)) {
        std::vector<int> pi = perm_inverse(tau);
        SpMat<E> m = braid_lift_word(ctx, sig, k, reduced_word(pi), dim);
        acc = perm_sign(pi) > 0 ? sp_add(acc, m) : sp_sub(acc, m);
    }
    return acc;
}

/// Brute-force antisymmetrizer: sum over all permutations (test oracle).
template <class C>
SpMat<typename C::Elem> antisymmetrizer_bruteforce(const C& ctx,
                                                   const SpMat<typename C::Elem>& sig, int k,
                                                   int dim) {
    using E = typename C::Elem;
    long total = 1;
    for (int t = 0; t < k; ++t) total *= dim;
    SpMat<E> acc(static_cast<int>(total), static_cast<int>(total));
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
        SpMat<E> m = braid_lift_word(ctx, sig, k, reduced_word(p), dim);
        acc = perm_sign(p) > 0 ? sp_add(acc, m) : sp_sub(acc, m);
    } while (std::next_permutation(p.begin(), p.end()));
    return acc;
}

/// Builds the exterior tower for one calculus up to degree kmax using the
/// recursion A_k = (A_{k-1} (x) id) B_{k-1,1}.
template <class C>
Tower<C> build_tower(const C& ctx, const FrtData<C>& f, int tau, int kmax) {
    using E = typename C::Elem;
    Tower<C> tw;
    tw.ctx = &ctx;
    tw.frt = &f;
    tw.tau = tau;
    tw.dim = f.dim();
    tw.sigma = build_braiding(ctx, f, tau, tau);
    tw.sigma_inv = invert_square(ctx, tw.sigma);

    for (int k = 0; k <= kmax; ++k) {
        Level<C> L;
        L.k = k;
        L.ambient = 1;
        for (int t = 0; t < k; ++t) L.ambient *= tw.dim;
        if (k == 0 || k == 1) {
            L.a_plus = sp_identity(ctx, static_cast<int>(L.ambient));
            L.a_minus = L.a_plus;
        } else {
            const Level<C>& prev = tw.lv[k - 1];
            SpMat<E> bp = shuffle_operator(ctx, tw.sigma, k - 1, 1, tw.dim);
            SpMat<E> bm = shuffle_operator(ctx, tw.sigma_inv, k - 1, 1, tw.dim);
            SpMat<E> ap1 = lift_right_pad(ctx, prev.a_plus, tw.dim);
            SpMat<E> am1 = lift_right_pad(ctx, prev.a_minus, tw.dim);
            L.a_plus = sp_mul(ap1, bp);
            L.a_minus = sp_mul(am1, bm);
        }
        Echelon<E> ech = sp_echelon(ctx, L.a_plus);
        L.rank = ech.rank;
        L.section = ech.pivot_cols;
        // proj = left_inverse(A[:, section]) * A
        SpMat<E> b(static_cast<int>(L.ambient), L.rank);
        for (int i = 0; i < static_cast<int>(L.ambient); ++i)
            for (auto& [j, v] : L.a_plus.r[i]) {
                auto it = std::lower_bound(L.section.begin(), L.section.end(), j);
                if (it != L.section.end() && *it == j)
                    b.r[i].push_back({static_cast<int>(it - L.section.begin()), v});
            }
        SpMat<E> linv = sp_left_inverse(ctx, b);
        L.proj = sp_mul(linv, L.a_plus);
        tw.lv.push_back(std::move(L));
    }
    return tw;
}

// ---------------------------------------------------------------------------
// Class-level maps.

/// Lift of class coordinates to an ambient tensor (the stored section).
template <class C>
std::vector<typename C::Elem> level_lift(const C& ctx, const Level<C>& L,
                                         const std::vector<typename C::Elem>& cls) {
    std::vector<typename C::Elem> x(L.ambient, ctx.zero());
    for (int t = 0; t < L.rank; ++t) x[L.section[t]] = cls[t];
    return x;
}

/// Projection of an ambient tensor to class coordinates.
template <class C>
std::vector<typename C::Elem> level_project(const C& ctx, const Level<C>& L,
                                            const std::vector<typename C::Elem>& x) {
    return sp_apply(L.proj, x, ctx.zero());
}

/// Wedge of two classes: project the tensor of representatives.
template <class C>
std::vector<typename C::Elem> wedge(const C& ctx, const Tower<C>& tw, int k,
                                    const std::vector<typename C::Elem>& a, int l,
                                    const std::vector<typename C::Elem>& b) {
    if (k + l > tw.top()) throw std::domain_error("wedge: degree overflow");
    auto xa = level_lift(ctx, tw.level(k), a);
    auto xb = level_lift(ctx, tw.level(l), b);
    std::vector<typename C::Elem> t(tw.level(k + l).ambient, ctx.zero());
    for (long i = 0; i < static_cast<long>(xa.size()); ++i) {
        if (ctx.is_zero(xa[i])) continue;
        for (long j = 0; j < static_cast<long>(xb.size()); ++j) {
            if (ctx.is_zero(xb[j])) continue;
            t[i * static_cast<long>(xb.size()) + j] = xa[i] * xb[j];
        }
    }
    return level_project(ctx, tw.level(k + l), t);
}

} // namespace qdr
