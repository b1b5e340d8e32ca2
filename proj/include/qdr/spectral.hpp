#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdr/characters.hpp"
#include "qdr/field.hpp"
#include "qdr/partitions.hpp"

namespace qdr {

/// q-number [M] at base t: (t^M - t^-M)/(t - t^-1).
template <class C>
typename C::Elem qnumber(const C& ctx, const typename C::Elem& t, long m) {
    if (m == 0) return ctx.zero();
    auto tm = cpow(ctx, t, m);
    auto tmi = cpow(ctx, t, -m);
    return (tm - tmi) / (t - ctx.one() / t);
}

/// Evaluation data for one calculus on one quantum group.
template <class C>
struct SpectralParams {
    const C* ctx = nullptr;
    GroupSpec group;
    typename C::Elem q, z;

    const C& c() const { return *ctx; }
};

template <class C>
SpectralParams<C> make_params(const C& ctx, GroupSpec g, typename C::Elem q, typename C::Elem z) {
    if (!g.is_a_series()) {
        // z must square to one for the B/C/D families
        auto z2 = z * z;
        if (!(z2 == ctx.one())) throw std::invalid_argument("SpectralParams: B/C/D require z^2 = 1");
    }
    return SpectralParams<C>{&ctx, g, std::move(q), std::move(z)};
}

/// A-series eigenvalue e^tau_lambda(q,z), defined for every lambda in P_+:
///   z^{-tau m} ([N] + tau (q - q^-1) sum_x sgn(x) q^{tau(N + 2 c(x))}) - [N].
template <class C>
typename C::Elem eigen_a(const SpectralParams<C>& p, const GenPartition& lam, int tau) {
    const C& ctx = p.c();
    if (!p.group.is_a_series()) throw std::domain_error("eigen_a: A-series groups only");
    if (tau != 1 && tau != -1) throw std::invalid_argument("eigen_a: tau must be +-1");
    const int n = p.group.N;
    if (lam.rows() != n) throw std::invalid_argument("eigen_a: partition length != N");
    auto qn = qnumber(ctx, p.q, n);
    auto sum = ctx.zero();
    for (const Cell& x : boxes(lam)) {
        auto t = cpow(ctx, p.q, tau * (n + 2 * x.content));
        sum = (x.sign > 0) ? sum + t : sum - t;
    }
    auto qdiff = p.q - ctx.one() / p.q;
    auto inner = qn + (tau > 0 ? qdiff * sum : -(qdiff * sum));
    auto zfac = cpow(ctx, p.z, -tau * lam.weight());
    return zfac * inner - qn;
}

/// The regularity quantity F_{lambda mu} coded directly from its printed form;
/// independent of eigen_a up to algebra.
template <class C>
typename C::Elem f_direct(const SpectralParams<C>& p, const GenPartition& lam,
                          const GenPartition& mu) {
    const C& ctx = p.c();
    const int n = p.group.N;
    auto qn = qnumber(ctx, p.q, n);
    auto zl = cpow(ctx, p.z, lam.weight());
    auto zmi = cpow(ctx, p.z, -mu.weight());
    auto first = (zmi - ctx.from_long(2) + zl) * qn;
    auto smu = ctx.zero();
    for (const Cell& x : boxes(mu)) {
        auto t = cpow(ctx, p.q, n + 2 * x.content);
        smu = (x.sign > 0) ? smu + t : smu - t;
    }
    auto slam = ctx.zero();
    for (const Cell& x : boxes(lam)) {
        auto t = cpow(ctx, p.q, -n - 2 * x.content);
        slam = (x.sign > 0) ? slam + t : slam - t;
    }
    auto qdiff = p.q - ctx.one() / p.q;
    return first + qdiff * (zmi * smu - zl * slam);
}

template <class C>
struct EigenRecord {
    GenPartition lam, mu;
    typename C::Elem e_minus_lam, e_plus_mu, e_sum, f_value;
    bool is_zero = false;
};

/// Computes both codings of E_{lambda mu} and insists they agree identically.
template <class C>
EigenRecord<C> regularity_value(const SpectralParams<C>& p, const GenPartition& lam,
                                const GenPartition& mu) {
    EigenRecord<C> r{lam, mu, eigen_a(p, lam, -1), eigen_a(p, mu, +1), p.c().zero(), p.c().zero()};
    r.e_sum = r.e_minus_lam + r.e_plus_mu;
    r.f_value = f_direct(p, lam, mu);
    if (!(r.e_sum == r.f_value))
        throw std::logic_error("regularity_value: codings disagree (internal consistency)");
    r.is_zero = p.c().is_zero(r.e_sum);
    return r;
}

/// B/C/D eigenvalue: eps z^{|lambda|} (q - q^-1)^2 sum_x [N - eps + 2 c(x)].
template <class C>
typename C::Elem eigen_bcd(const SpectralParams<C>& p, const GenPartition& lam) {
    const C& ctx = p.c();
    if (p.group.is_a_series()) throw std::domain_error("eigen_bcd: B/C/D families only");
    const int n = p.group.N;
    const int eps = p.group.epsilon();
    auto sum = ctx.zero();
    for (const Cell& x : boxes(lam)) {
        if (x.sign < 0) throw std::domain_error("eigen_bcd: nonnegative partitions only");
        sum += qnumber(ctx, p.q, n - eps + 2 * x.content);
    }
    auto qdiff = p.q - ctx.one() / p.q;
    auto val = cpow(ctx, p.z, lam.weight()) * qdiff * qdiff * sum;
    return eps > 0 ? val : -val;
}

// ---------------------------------------------------------------------------
// Zero-set scans.

struct ZeroScan {
    std::vector<std::pair<GenPartition, GenPartition>> zeros;      // parity-filtered for B/C/D
    std::vector<std::pair<GenPartition, GenPartition>> raw_zeros;  // unfiltered (B/C/D only)
    long pairs_scanned = 0;
};

template <class C>
ZeroScan zero_scan(const SpectralParams<C>& p, const Window& w) {
    ZeroScan out;
    std::vector<GenPartition> parts = list_partitions(p.group, w);
    if (p.group.is_a_series()) {
        std::vector<typename C::Elem> eminus, eplus;
        eminus.reserve(parts.size());
        eplus.reserve(parts.size());
        for (auto& lam : parts) {
            eminus.push_back(eigen_a(p, lam, -1));
            eplus.push_back(eigen_a(p, lam, +1));
        }
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = 0; j < parts.size(); ++j) {
                ++out.pairs_scanned;
                if (p.c().is_zero(eminus[i] + eplus[j]))
                    out.zeros.push_back({parts[i], parts[j]});
            }
    } else {
        std::vector<typename C::Elem> e;
        e.reserve(parts.size());
        for (auto& lam : parts) e.push_back(eigen_bcd(p, lam));
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = 0; j < parts.size(); ++j) {
                ++out.pairs_scanned;
                if (p.c().is_zero(e[i] + e[j])) {
                    out.raw_zeros.push_back({parts[i], parts[j]});
                    if ((parts[i].weight() - parts[j].weight()) % 2 == 0)
                        out.zeros.push_back({parts[i], parts[j]});
                }
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact limits t -> 1 along z = t^{2/N}, computed in the presentation q = r^N,
// z = r^2 with r a formal generator.

/// Order of vanishing at r = 1 and the value of p/(r-1)^ord at r = 1.
inline std::pair<int, Rat> root_order_at_one(const Poly<Rat>& p) {
    std::vector<Rat> d = dense_from(p);
    int ord = 0;
    while (true) {
        Rat v(0);
        for (auto& c : d) v += c; // evaluation at 1
        if (sgn(v) != 0 || d.empty()) return {ord, v};
        // synthetic division by (r - 1)
        std::vector<Rat> qout(d.size() > 1 ? d.size() - 1 : 0, Rat(0));
        Rat carry(0);
        for (int i = static_cast<int>(d.size()) - 1; i >= 1; --i) {
            carry += d[i];
            qout[i - 1] = carry;
        }
        d = std::move(qout);
        dtrim(d);
        ++ord;
        if (ord > 4096) throw std::logic_error("root_order_at_one: runaway order");
    }
}

/// Finite limit of a univariate rational function at r = 1 (throws on poles).
inline Rat limit_at_one(const Frac<Rat>& f) {
    if (f.is_zero()) return Rat(0);
    auto [on, vn] = root_order_at_one(f.num());
    if (f.den_is_one()) {
        return on == 0 ? vn : Rat(0);
    }
    auto [od, vd] = root_order_at_one(f.den_or_one());
    if (on < od) throw std::domain_error("limit_at_one: pole at r = 1");
    if (on > od) return Rat(0);
    return vn / vd;
}

struct LimitCheck {
    Rat tilde_plus, tilde_minus; // limits of (t-t^-1)^-2 e^tau(t, t^{2/N})
    Rat closed_form;             // (m N^2 + 2 c N - m^2) / (2N)
    Rat mi_sum;                  // the m_i double sum, equal to twice the closed form
    bool ok = false;
};

inline LimitCheck limit_checks(const GenPartition& lam, int n) {
    if (!lam.nonnegative()) throw std::domain_error("limit_checks: P_++ only");
    RatFnCtx ctx(1, {"r"});
    auto r = ctx.var(0);
    auto q = cpow(ctx, r, n);
    auto z = r * r;
    GroupSpec g(GroupFamily::GL, n);
    auto p = make_params(ctx, g, q, z);
    auto qdiff = q - ctx.one() / q;
    LimitCheck out;
    out.tilde_plus = limit_at_one(eigen_a(p, lam, +1) / (qdiff * qdiff));
    out.tilde_minus = limit_at_one(eigen_a(p, lam, -1) / (qdiff * qdiff));

    PartitionStats st = stats(lam);
    long m = st.weight;
    out.closed_form = Rat(m * n * static_cast<long>(n) + 2 * st.content * n - m * m) / Rat(2 * n);

    Rat s(0);
    for (int i = 1; i <= n - 1; ++i) {
        long mi = lam.part(i - 1) - lam.part(i);
        long inner = static_cast<long>(i) * (mi + n);
        for (int j = 1; j < i; ++j) inner += 2l * j * (lam.part(j - 1) - lam.part(j));
        s += rat_of((n - i) * mi, n) * Rat(inner);
    }
    s.canonicalize();
    out.mi_sum = s;

    out.ok = out.tilde_plus == out.closed_form && out.tilde_minus == out.closed_form &&
             out.mi_sum == Rat(2) * out.closed_form;
    return out;
}

/// Verifies e^tau_{lambda+(1^N)} + [N] = q^{2 tau} z^{-N tau} (e^tau_lambda + [N]).
template <class C>
bool recursion_check(const SpectralParams<C>& p, const GenPartition& lam, int tau) {
    const C& ctx = p.c();
    const int n = p.group.N;
    auto qn = qnumber(ctx, p.q, n);
    auto lhs = eigen_a(p, shift(lam, 1), tau) + qn;
    auto rhs = cpow(ctx, p.q, 2 * tau) * cpow(ctx, p.z, -n * tau) * (eigen_a(p, lam, tau) + qn);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Quantum-determinant closure data.

template <class C>
struct DeterminantData {
    typename C::Elem coefficient;
    bool closed = false;
};

/// d D = coeff * (...) with coeff = q^{2 tau} z^{-tau N} - 1 for the general
/// linear family and z^{-N} - 1 for the orthogonal family.  The determinant is
/// trivial for the determinant-one family (closed, coefficient zero).
template <class C>
DeterminantData<C> determinant_data(const SpectralParams<C>& p, int tau) {
    const C& ctx = p.c();
    DeterminantData<C> out{ctx.zero(), true};
    switch (p.group.family) {
        case GroupFamily::SL:
            return out;
        case GroupFamily::GL: {
            out.coefficient = cpow(ctx, p.q, 2 * tau) * cpow(ctx, p.z, -tau * p.group.N) - ctx.one();
            break;
        }
        case GroupFamily::OOdd:
        case GroupFamily::OEven: {
            out.coefficient = cpow(ctx, p.z, -p.group.N) - ctx.one();
            break;
        }
        default:
            throw std::domain_error("determinant_data: no quantum determinant for this family");
    }
    out.closed = ctx.is_zero(out.coefficient);
    return out;
}

// ---------------------------------------------------------------------------
// Predicted cohomology structure.

struct CohomologyPrediction {
    std::vector<long> coinvariant_dims;   // from character blocks, degrees 0..N^2
    std::vector<long> product_coeffs;     // coefficients of prod (1 + t^{2i-1})
    bool root_of_unity = false;
    int m = 0;                            // order of the root of unity
    std::string tensor_factor;            // symbolic factor in the non-regular case
    bool agree = false;
};

inline CohomologyPrediction cohomology_prediction(int n, bool root_of_unity_mode, int m_order,
                                                  int max_degree = -1) {
    CohomologyPrediction out;
    int top = max_degree < 0 ? n * n : std::min(max_degree, n * n);
    for (int k = 0; k <= top; ++k) out.coinvariant_dims.push_back(blocks(n, k).coinvariant_multiplicity);
    auto pc = coinvariant_poincare_coefficients(n);
    out.product_coeffs.assign(pc.begin(), pc.begin() + top + 1);
    out.root_of_unity = root_of_unity_mode;
    out.m = m_order;
    if (root_of_unity_mode)
        out.tensor_factor = "C[D^" + std::to_string(m_order) + ",D^-" + std::to_string(m_order) + "]";
    out.agree = out.coinvariant_dims == out.product_coeffs;
    return out;
}

/// The cyclotomic presentation used for the root-of-unity scans: q = s^N and
/// z = s^2 eta with eta a primitive (mN)-th root of unity, so z^N q^{-2} is a
/// primitive m-th root of unity.
struct RootOfUnityField {
    std::shared_ptr<CycFnCtx> ctx;
    SpectralParams<CycFnCtx> params;
};

inline RootOfUnityField make_root_of_unity_params(int n, int m) {
    auto ctx = std::make_shared<CycFnCtx>(m * n);
    auto s = ctx->var();
    auto q = cpow(*ctx, s, n);
    auto z = s * s * ctx->zeta();
    GroupSpec g(GroupFamily::GL, n);
    RootOfUnityField f;
    f.ctx = ctx;
    f.params = make_params(*ctx, g, std::move(q), std::move(z));
    return f;
}

} // namespace qdr
