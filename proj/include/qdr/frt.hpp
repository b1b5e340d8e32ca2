#pragma once

#include <stdexcept>
#include <vector>

#include "qdr/linalg.hpp"
#include "qdr/spectral.hpp"

namespace qdr {

/// One letter of a word in the matrix generators: u^a_b or S(u^a_b).
struct Letter {
    bool antipode = false;
    int a = 0, b = 0; // 0-based indices
};

struct GeneratorWord {
    std::vector<Letter> letters;
    bool balanced() const {
        long s = 0;
        for (auto& l : letters) s += l.antipode ? -1 : 1;
        return s == 0;
    }
};

/// Everything the calculi need from the FRT description of the A-series
/// quantum group: the Hecke R-matrix, the diagonal matrix D, the adjoint
/// actions of the generators on the coinvariant 1-form basis, and the
/// representative functionals with the admissible scalars normalized to one.
template <class C>
struct FrtData {
    using E = typename C::Elem;

    const C* ctx = nullptr;
    int N = 0;
    E q, z;
    std::vector<E> d; // d_i = q^{N+1-2i}
    E r_factor;       // q^N
    E s_trace;        // [N]_q = tr D = tr D^{-1}

    SpMat<E> rhat, rhat_inv; // on the tensor square, pair index a*N+b

    struct Action {
        int tau = +1;
        std::vector<SpMat<E>> tu;  // index m*N+n, each N^2 x N^2
        std::vector<SpMat<E>> tsu; // solved from the antipode axiom
    };
    Action act_plus, act_minus;

    // representative functionals in flattened (functional, argument) form:
    // L[(i,a),(j,b)] = l^i_j(u^a_b); composition along words is matrix product.
    SpMat<E> lp, lp_s, lm, lm_s;

    int dim() const { return N * N; }
    int pair(int a, int b) const { return a * N + b; }

    const Action& action(int tau) const { return tau > 0 ? act_plus : act_minus; }

    E rhat_entry(int a, int b, int c, int dd) const {
        const E* v = row_get(rhat.r[pair(a, b)], pair(c, dd));
        return v ? *v : ctx->zero();
    }
};

/// A-series Hecke R-matrix:
///   Rhat(e_c (x) e_d) = q e_c(x)e_d                      for c = d,
///                       e_d(x)e_c + (q-q^-1) e_c(x)e_d    for c < d,
///                       e_d(x)e_c                         for c > d.
/// The index convention is pinned by the trace identity D^s_r Rhat^{rv}_{sw} =
/// r delta_{vw} together with the Hecke and braid relations (see
/// docs/conventions.md).
template <class C>
SpMat<typename C::Elem> build_rhat(const C& ctx, int n, const typename C::Elem& q) {
    using E = typename C::Elem;
    SpMat<E> m(n * n, n * n);
    E qd = q - ctx.one() / q;
    for (int c = 0; c < n; ++c)
        for (int dd = 0; dd < n; ++dd) {
            int col = c * n + dd;
            if (c == dd) {
                m.add_at(c * n + dd, col, q);
            } else {
                m.add_at(dd * n + c, col, ctx.one());
                if (c < dd) m.add_at(c * n + dd, col, qd);
            }
        }
    return m;
}

template <class C>
FrtData<C> build_frt(const C& ctx, int n, typename C::Elem q, typename C::Elem z) {
    using E = typename C::Elem;
    FrtData<C> f;
    f.ctx = &ctx;
    f.N = n;
    f.q = std::move(q);
    f.z = std::move(z);
    for (int i = 1; i <= n; ++i) f.d.push_back(cpow(ctx, f.q, n + 1 - 2 * i));
    f.r_factor = cpow(ctx, f.q, n);
    f.s_trace = qnumber(ctx, f.q, n);

    f.rhat = build_rhat(ctx, n, f.q);
    // Hecke relation gives the inverse in closed form
    E qd = f.q - ctx.one() / f.q;
    f.rhat_inv = sp_sub(f.rhat, sp_scale(sp_identity(ctx, n * n), qd));

    auto rh = [&](int a, int b, int c, int dd) -> E {
        const E* v = row_get(f.rhat.r[a * n + b], c * n + dd);
        return v ? *v : ctx.zero();
    };
    auto rhi = [&](int a, int b, int c, int dd) -> E {
        const E* v = row_get(f.rhat_inv.r[a * n + b], c * n + dd);
        return v ? *v : ctx.zero();
    };

    // T(u^m_n) for both calculi, straight from the printed adjoint actions.
    E zi = ctx.one() / f.z;
    f.act_plus.tau = +1;
    f.act_minus.tau = -1;
    f.act_plus.tu.assign(n * n, SpMat<E>(n * n, n * n));
    f.act_minus.tu.assign(n * n, SpMat<E>(n * n, n * n));
    for (int m = 0; m < n; ++m)
        for (int nn = 0; nn < n; ++nn) {
            SpMat<E>& tp = f.act_plus.tu[m * n + nn];
            SpMat<E>& tm = f.act_minus.tu[m * n + nn];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        for (int l = 0; l < n; ++l) {
                            E accp = ctx.zero(), accm = ctx.zero();
                            for (int v = 0; v < n; ++v) {
                                accp += rh(m, k, i, v) * rh(j, v, nn, l);
                                accm += rhi(m, k, i, v) * rhi(j, v, nn, l);
                            }
                            if (!ctx.is_zero(accp)) tp.add_at(i * n + j, k * n + l, zi * accp);
                            if (!ctx.is_zero(accm))
                                tm.add_at(i * n + j, k * n + l, f.z * f.d[i] * (ctx.one() / f.d[k]) * accm);
                        }
        }

    // T(Su^m_n) via the antipode axiom: sum_k T(u^m_k) T(Su^k_n) = delta_{mn} I.
    auto solve_tsu = [&](const std::vector<SpMat<E>>& tu) {
        int nn2 = n * n, big = n * nn2;
        SpMat<E> b(big, big);
        for (int m = 0; m < n; ++m)
            for (int k = 0; k < n; ++k) {
                const SpMat<E>& t = tu[m * n + k];
                for (int al = 0; al < nn2; ++al)
                    for (auto& [be, v] : t.r[al]) b.add_at(m * nn2 + al, k * nn2 + be, v);
            }
        SpMat<E> binv = sp_left_inverse(ctx, b);
        std::vector<SpMat<E>> tsu(n * n, SpMat<E>(nn2, nn2));
        for (int k = 0; k < n; ++k)
            for (int nn_ = 0; nn_ < n; ++nn_) {
                SpMat<E>& t = tsu[k * n + nn_];
                for (int be = 0; be < nn2; ++be)
                    for (auto& [col, v] : binv.r[k * nn2 + be]) {
                        if (col / nn2 == nn_) t.add_at(be, col % nn2, v);
                    }
            }
        return tsu;
    };
    f.act_plus.tsu = solve_tsu(f.act_plus.tu);
    f.act_minus.tsu = solve_tsu(f.act_minus.tu);

    // Functionals with admissible scalars set to one.  l+ on u comes from the
    // universal r-form; l- on S(u) is pinned by the printed adjoint action and
    // l- on u is its convolution inverse.
    int nn2 = n * n;
    f.lp = SpMat<E>(nn2, nn2);
    f.lm_s = SpMat<E>(nn2, nn2);
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            for (int j = 0; j < n; ++j)
                for (int b = 0; b < n; ++b) {
                    E vp = rh(i, a, b, j);   // l+^i_j(u^a_b) = Rhat^{ia}_{bj}
                    E vm = rh(a, i, j, b);   // l-^i_j(S u^a_b) = Rhat^{ai}_{jb}
                    if (!ctx.is_zero(vp)) f.lp.add_at(i * n + a, j * n + b, vp);
                    if (!ctx.is_zero(vm)) f.lm_s.add_at(i * n + a, j * n + b, vm);
                }
    f.lp_s = sp_left_inverse(ctx, f.lp);
    f.lm = sp_left_inverse(ctx, f.lm_s);
    return f;
}

/// Ordered product of generator action matrices over a word.
template <class C>
SpMat<typename C::Elem> adjoint_on_word(const C& ctx, const FrtData<C>& f, int tau,
                                        const GeneratorWord& w) {
    using E = typename C::Elem;
    const auto& act = f.action(tau);
    SpMat<E> m = sp_identity(ctx, f.dim());
    for (const Letter& l : w.letters) {
        const SpMat<E>& t = l.antipode ? act.tsu[l.a * f.N + l.b] : act.tu[l.a * f.N + l.b];
        m = sp_mul(m, t);
    }
    return m;
}

/// N x N matrix of functional values [l^{sign,i}_j(w)] on a balanced word.
template <class C>
Dense<typename C::Elem> functional_eval(const C& ctx, const FrtData<C>& f, int sign,
                                        const GeneratorWord& w) {
    using E = typename C::Elem;
    if (!w.balanced())
        throw std::domain_error("functional_eval: unbalanced word depends on the admissible scalars");
    const SpMat<E>& lu = sign > 0 ? f.lp : f.lm;
    const SpMat<E>& ls = sign > 0 ? f.lp_s : f.lm_s;
    Dense<E> val = dense_identity(ctx, f.N);
    for (const Letter& l : w.letters) {
        const SpMat<E>& big = l.antipode ? ls : lu;
        Dense<E> step(ctx, f.N, f.N);
        for (int i = 0; i < f.N; ++i)
            for (auto& [col, v] : big.r[i * f.N + l.a])
                if (col % f.N == l.b) step.a[i][col / f.N] = v;
        val = dense_mul(ctx, val, step);
    }
    return val;
}

/// Conjugation coefficients of the square of the antipode:
/// S^2(u^i_j) = (d_j / d_i) u^i_j, forced by D being a morphism from the
/// double-contragredient corepresentation to u.
template <class C>
Dense<typename C::Elem> s_squared_coefficients(const C& ctx, const FrtData<C>& f) {
    Dense<typename C::Elem> m(ctx, f.N, f.N);
    for (int i = 0; i < f.N; ++i)
        for (int j = 0; j < f.N; ++j) m.a[i][j] = f.d[j] / f.d[i];
    return m;
}

} // namespace qdr
