#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdr/characters.hpp"
#include "qdr/exterior.hpp"

namespace qdr {

/// Both calculi over one field, with the mixed braidings and the metric.
template <class C>
struct CalcPair {
    using E = typename C::Elem;

    const C* ctx = nullptr;
    const FrtData<C>* frt = nullptr;
    Tower<C> plus, minus;
    SpMat<E> sig_pm, sig_mp, sig_pm_inv, sig_mp_inv; // mixed braidings
    MetricMap<C> g_pm, g_mp;                         // scaled-permutation metric
    std::vector<E> omega_plus, omega_minus;          // coinvariant 1-forms

    const Tower<C>& tower(int tau) const { return tau > 0 ? plus : minus; }
    const MetricMap<C>& metric_from(int tau) const { return tau > 0 ? g_pm : g_mp; }
    const std::vector<E>& omega(int tau) const { return tau > 0 ? omega_plus : omega_minus; }
};

template <class C>
CalcPair<C> build_calc_pair(const C& ctx, const FrtData<C>& f, int kmax) {
    CalcPair<C> p;
    p.ctx = &ctx;
    p.frt = &f;
    p.plus = build_tower(ctx, f, +1, kmax);
    p.minus = build_tower(ctx, f, -1, kmax);
    p.sig_pm = build_braiding(ctx, f, +1, -1);
    p.sig_mp = build_braiding(ctx, f, -1, +1);
    p.sig_pm_inv = invert_square(ctx, p.sig_pm);
    p.sig_mp_inv = invert_square(ctx, p.sig_mp);
    p.g_pm = build_metric(ctx, f, +1);
    p.g_mp = build_metric(ctx, f, -1);
    const int n = f.N;
    p.omega_plus.assign(n * n, ctx.zero());
    p.omega_minus.assign(n * n, ctx.zero());
    for (int i = 0; i < n; ++i) {
        p.omega_plus[i * n + i] = ctx.one();
        p.omega_minus[i * n + i] = ctx.one() / f.d[i];
    }
    return p;
}

// ---------------------------------------------------------------------------
// The recursively extended metric: fold matched slots of two tensors.

/// gtilde(x, y) for x with kx slots on the side the metric maps from and y
/// with ky slots on the opposite side.  Pairs are contracted innermost-first:
/// (x_last, y_first), (x_last-1, y_second), ...
template <class C>
std::vector<typename C::Elem> gtilde_fold(const C& ctx, const MetricMap<C>& g,
                                          const std::vector<typename C::Elem>& x, int kx,
                                          const std::vector<typename C::Elem>& y, int ky,
                                          int dim) {
    using E = typename C::Elem;
    int m = std::min(kx, ky);
    long nm = 1;
    for (int t = 0; t < m; ++t) nm *= dim;
    if (kx >= ky) {
        long outsz = static_cast<long>(x.size()) / nm;
        std::vector<E> out(outsz, ctx.zero());
        for (long p = 0; p < outsz; ++p) {
            E acc = ctx.zero();
            for (long b = 0; b < nm; ++b) {
                const E& xv = x[p * nm + b];
                if (ctx.is_zero(xv)) continue;
                // digits of b: b_1 most significant; pair g(b_m, c_1), ...
                long rem = b, cidx = 0;
                E w = ctx.one();
                std::vector<int> digs(m);
                for (int t = m - 1; t >= 0; --t) {
                    digs[t] = static_cast<int>(rem % dim);
                    rem /= dim;
                }
                for (int t = 0; t < m; ++t) {
                    int bslot = digs[m - 1 - t]; // b_{m-t} in 1-based terms
                    w = w * g.weight[bslot];
                    cidx = cidx * dim + g.img[bslot];
                }
                const E& yv = y[cidx];
                if (!ctx.is_zero(yv)) acc += xv * w * yv;
            }
            out[p] = std::move(acc);
        }
        return out;
    }
    long outsz = static_cast<long>(y.size()) / nm;
    std::vector<E> out(outsz, ctx.zero());
    for (long b = 0; b < nm; ++b) { // b runs over all x indices (kx = m slots)
        const E& xv = x[b];
        if (ctx.is_zero(xv)) continue;
        long rem = b, cidx = 0;
        E w = ctx.one();
        std::vector<int> digs(m);
        for (int t = m - 1; t >= 0; --t) {
            digs[t] = static_cast<int>(rem % dim);
            rem /= dim;
        }
        for (int t = 0; t < m; ++t) {
            int aslot = digs[m - 1 - t]; // pair g(x_{m-t}, y_{t+1})
            w = w * g.weight[aslot];
            cidx = cidx * dim + g.img[aslot];
        }
        for (long q = 0; q < outsz; ++q) {
            const E& yv = y[cidx * outsz + q];
            if (!ctx.is_zero(yv)) out[q] += xv * w * yv;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Contraction of exterior classes.

/// <xi, zeta>^sign for xi at level k of the tau tower and zeta at level l of
/// the (-tau) tower; lands at level |k-l| of the tau tower when k >= l and of
/// the (-tau) tower otherwise.
template <class C>
std::vector<typename C::Elem> contract_classes(const CalcPair<C>& p, int tau, int sign, int k,
                                               const std::vector<typename C::Elem>& xi, int l,
                                               const std::vector<typename C::Elem>& zeta) {
    using E = typename C::Elem;
    const C& ctx = *p.ctx;
    const Tower<C>& A = p.tower(tau);
    const Tower<C>& B = p.tower(-tau);
    const int dim = A.dim;
    auto x = level_lift(ctx, A.level(k), xi);
    auto y = level_lift(ctx, B.level(l), zeta);
    const SpMat<E>& sa = sign > 0 ? A.sigma : A.sigma_inv;
    const SpMat<E>& sb = sign > 0 ? B.sigma : B.sigma_inv;
    if (k >= l) {
        if (k > l || k > 1) { // B_{0,l} = id, A_0 = A_1 = id shortcuts below
            if (k - l > 0 || l > 1) {
                SpMat<E> bop = shuffle_operator(ctx, sa, k - l, l, dim);
                x = sp_apply(bop, x, ctx.zero());
            }
            const SpMat<E>& al = sign > 0 ? B.level(l).a_plus : B.level(l).a_minus;
            y = sp_apply(al, y, ctx.zero());
        }
        auto t = gtilde_fold(ctx, p.metric_from(tau), x, k, y, l, dim);
        return level_project(ctx, A.level(k - l), t);
    }
    const SpMat<E>& ak = sign > 0 ? A.level(k).a_plus : A.level(k).a_minus;
    x = sp_apply(ak, x, ctx.zero());
    SpMat<E> bop = shuffle_operator(ctx, sb, k, l - k, dim);
    y = sp_apply(bop, y, ctx.zero());
    auto t = gtilde_fold(ctx, p.metric_from(tau), x, k, y, l, dim);
    return level_project(ctx, B.level(l - k), t);
}

// ---------------------------------------------------------------------------
// The differential, codifferentials, and Laplacians as level matrices.

template <class C>
struct TowerOps {
    int tau = +1;
    // d[k]: level k -> k+1 (the top differential maps into the zero space)
    std::vector<Dense<typename C::Elem>> d;
    // del_plus[k], del_minus[k]: level k -> k-1 (index 0 maps into the zero space)
    std::vector<Dense<typename C::Elem>> del_plus, del_minus;
    // lap_plus[k], lap_minus[k]: level k endomorphisms
    std::vector<Dense<typename C::Elem>> lap_plus, lap_minus;

    const Dense<typename C::Elem>& del(int sign, int k) const {
        return sign > 0 ? del_plus.at(k) : del_minus.at(k);
    }
    const Dense<typename C::Elem>& lap(int sign, int k) const {
        return sign > 0 ? lap_plus.at(k) : lap_minus.at(k);
    }
};

template <class C>
std::vector<typename C::Elem> unit_class(const C& ctx, int r, int t) {
    std::vector<typename C::Elem> v(r, ctx.zero());
    v[t] = ctx.one();
    return v;
}

/// d rho = w0 ^ rho - (-1)^k rho ^ w0 on level classes.
template <class C>
Dense<typename C::Elem> build_d(const C& ctx, const CalcPair<C>& p, int tau, int k) {
    using E = typename C::Elem;
    const Tower<C>& tw = p.tower(tau);
    int rk = tw.level(k).rank;
    if (k == tw.top()) return Dense<E>(ctx, 0, rk);
    int rk1 = tw.level(k + 1).rank;
    Dense<E> m(ctx, rk1, rk);
    const auto& w0 = p.omega(tau);
    for (int t = 0; t < rk; ++t) {
        auto cls = unit_class(ctx, rk, t);
        auto left = wedge(ctx, tw, 1, w0, k, cls);
        auto right = wedge(ctx, tw, k, cls, 1, w0);
        for (int i = 0; i < rk1; ++i)
            m.a[i][t] = (k % 2 == 0) ? left[i] - right[i] : left[i] + right[i];
    }
    return m;
}

/// del^sign rho = <rho, w0^{-tau}> + (-1)^k <w0^{-tau}, rho>.
template <class C>
Dense<typename C::Elem> build_del(const C& ctx, const CalcPair<C>& p, int tau, int sign, int k) {
    using E = typename C::Elem;
    const Tower<C>& tw = p.tower(tau);
    int rk = tw.level(k).rank;
    if (k == 0) return Dense<E>(ctx, 0, rk);
    int rk1 = tw.level(k - 1).rank;
    Dense<E> m(ctx, rk1, rk);
    const auto& w0m = p.omega(-tau);
    for (int t = 0; t < rk; ++t) {
        auto cls = unit_class(ctx, rk, t);
        auto first = contract_classes(p, tau, sign, k, cls, 1, w0m);
        auto second = contract_classes(p, -tau, sign, 1, w0m, k, cls);
        for (int i = 0; i < rk1; ++i)
            m.a[i][t] = (k % 2 == 0) ? first[i] + second[i] : first[i] - second[i];
    }
    return m;
}

template <class C>
TowerOps<C> build_ops(const C& ctx, const CalcPair<C>& p, int tau) {
    using E = typename C::Elem;
    const Tower<C>& tw = p.tower(tau);
    TowerOps<C> ops;
    ops.tau = tau;
    int top = tw.top();
    for (int k = 0; k <= top; ++k) {
        ops.d.push_back(build_d(ctx, p, tau, k));
        ops.del_plus.push_back(build_del(ctx, p, tau, +1, k));
        ops.del_minus.push_back(build_del(ctx, p, tau, -1, k));
    }
    for (int k = 0; k <= top; ++k) {
        int rk = tw.level(k).rank;
        Dense<E> lp(ctx, rk, rk), lm(ctx, rk, rk);
        for (int sign : {+1, -1}) {
            Dense<E> term(ctx, rk, rk);
            if (k > 0) term = dense_mul(ctx, ops.d[k - 1], ops.del(sign, k));
            Dense<E> term2(ctx, rk, rk);
            if (k < top) term2 = dense_mul(ctx, ops.del(sign, k + 1), ops.d[k]);
            Dense<E> lap = dense_sub(ctx, term2, term);
            (sign > 0 ? lp : lm) = std::move(lap);
        }
        ops.lap_plus.push_back(std::move(lp));
        ops.lap_minus.push_back(std::move(lm));
    }
    return ops;
}

// ---------------------------------------------------------------------------
// Coinvariant subspaces via generator-functional fixed points.

/// Flattened corep-value transfer for one calculus and one functional family:
/// entries [(f,K),(g,J)] = l^{s,f}_g(v^K_J) on the coinvariant basis.
template <class C>
SpMat<typename C::Elem> corep_values(const C& ctx, const FrtData<C>& f, int tau, int sign) {
    using E = typename C::Elem;
    const int n = f.N, nn = f.dim();
    const SpMat<E>& lu = sign > 0 ? f.lp : f.lm;
    const SpMat<E>& ls = sign > 0 ? f.lp_s : f.lm_s;
    SpMat<E> w(n * nn, n * nn);
    for (int kk = 0; kk < n; ++kk)
        for (int ll = 0; ll < n; ++ll)
            for (int ii = 0; ii < n; ++ii)
                for (int jj = 0; jj < n; ++jj) {
                    E scale = tau > 0 ? ctx.one() : (f.d[ii] / f.d[kk]);
                    int K = kk * n + ll, J = ii * n + jj;
                    for (int ff = 0; ff < n; ++ff)
                        for (int gg = 0; gg < n; ++gg) {
                            E acc = ctx.zero();
                            for (int h = 0; h < n; ++h) {
                                const E* v1 = row_get(lu.r[ff * n + kk], h * n + ii);
                                if (!v1) continue;
                                const E* v2 = row_get(ls.r[h * n + jj], gg * n + ll);
                                if (v2) acc += (*v1) * (*v2);
                            }
                            if (!ctx.is_zero(acc)) w.add_at(ff * nn + K, gg * nn + J, scale * acc);
                        }
                }
    return w;
}

/// Lift of the transfer to slot s (1-based) of a k-fold power.
template <class C>
SpMat<typename C::Elem> lift_transfer(const C& ctx, const SpMat<typename C::Elem>& w, int nfun,
                                      int dim, int k, int s) {
    using E = typename C::Elem;
    long pre = 1, post = 1;
    for (int t = 0; t < s - 1; ++t) pre *= dim;
    for (int t = s; t < k; ++t) post *= dim;
    long amb = pre * dim * post;
    SpMat<E> out(static_cast<int>(nfun * amb), static_cast<int>(nfun * amb));
    for (int fa = 0; fa < nfun * dim; ++fa) {
        int ff = fa / dim, aa = fa % dim;
        for (auto& [gb, v] : w.r[fa]) {
            int gg = gb / dim, bb = gb % dim;
            for (long pcur = 0; pcur < pre; ++pcur)
                for (long qcur = 0; qcur < post; ++qcur) {
                    long I = (pcur * dim + aa) * post + qcur;
                    long J = (pcur * dim + bb) * post + qcur;
                    out.r[ff * amb + I].push_back({static_cast<int>(gg * amb + J), v});
                }
        }
    }
    for (auto& row : out.r)
        std::sort(row.begin(), row.end(), [](auto& x, auto& y) { return x.first < y.first; });
    return out;
}

/// Basis (as level classes) of the joint fixed space of all generator
/// functionals: the coinvariant part of the level.
template <class C>
std::vector<std::vector<typename C::Elem>> coinvariant_basis(const C& ctx, const CalcPair<C>& p,
                                                             int tau, int k) {
    using E = typename C::Elem;
    const Tower<C>& tw = p.tower(tau);
    const FrtData<C>& f = *p.frt;
    const Level<C>& L = tw.level(k);
    const int n = f.N, dim = tw.dim;
    if (k == 0) return {std::vector<E>{ctx.one()}};

    // section injection as a sparse matrix
    SpMat<E> sect(static_cast<int>(L.ambient), L.rank);
    for (int t = 0; t < L.rank; ++t) sect.r[L.section[t]].push_back({t, ctx.one()});

    SpMat<E> stacked(2 * n * n * L.rank, L.rank);
    int blk = 0;
    for (int sign : {+1, -1}) {
        SpMat<E> w = corep_values(ctx, f, tau, sign);
        SpMat<E> transfer = lift_transfer(ctx, w, n, dim, k, 1);
        for (int s = 2; s <= k; ++s) transfer = sp_mul(transfer, lift_transfer(ctx, w, n, dim, k, s));
        for (int fi = 0; fi < n; ++fi)
            for (int gj = 0; gj < n; ++gj) {
                // Phi[I,J] = transfer[(fi,I),(gj,J)] restricted to the level
                SpMat<E> phi(static_cast<int>(L.ambient), static_cast<int>(L.ambient));
                for (long I = 0; I < L.ambient; ++I)
                    for (auto& [col, v] : transfer.r[fi * L.ambient + I])
                        if (col / L.ambient == gj) phi.r[I].push_back({static_cast<int>(col % L.ambient), v});
                SpMat<E> m = sp_mul(L.proj, sp_mul(phi, sect));
                if (fi == gj) m = sp_sub(m, sp_identity(ctx, L.rank));
                for (int rr = 0; rr < L.rank; ++rr) stacked.r[blk * L.rank + rr] = std::move(m.r[rr]);
                ++blk;
            }
    }
    return sp_kernel(ctx, stacked);
}

} // namespace qdr
