#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qdr/linalg.hpp"

namespace qdr {

struct ModularRankReport {
    int rank = -1;
    int agreeing_primes = 0;
    std::vector<uint64_t> primes;
    bool accepted = false; // >= 3 primes agree on the same value
};

/// Evaluates a symbolic matrix at fresh random images modulo p, retrying when
/// a denominator vanishes.
inline SpMat<Fp> sp_specialize(const SpMat<Frac<Rat>>& m, const FpCtx& ctx,
                               std::mt19937_64& rng, int unity_bound = 64, int max_tries = 32) {
    std::uniform_int_distribution<uint64_t> dist(2, ctx.modulus() - 2);
    for (int t = 0; t < max_tries; ++t) {
        Fp q0(dist(rng), ctx.modulus());
        Fp z0(dist(rng), ctx.modulus());
        if (q0.is_zero() || z0.is_zero()) continue;
        bool low_order = false;
        Fp acc = ctx.one();
        for (int k = 1; k <= unity_bound; ++k) {
            acc = acc * q0;
            if (acc == ctx.one()) { low_order = true; break; }
        }
        if (low_order) continue;
        try {
            SpMat<Fp> out(m.rows, m.cols);
            for (int i = 0; i < m.rows; ++i)
                for (auto& [j, v] : m.r[i]) {
                    Fp w = specialize_fp(v, ctx, q0, z0);
                    if (!w.is_zero()) out.r[i].push_back({j, w});
                }
            return out;
        } catch (const SpecializeError&) {
            continue; // resample
        }
    }
    throw SpecializeError("sp_specialize: no admissible images found");
}

/// Rank modulo several independent primes; the result is certified as a lower
/// bound on the symbolic rank and accepted when at least three primes agree.
inline ModularRankReport modular_rank(const SpMat<Frac<Rat>>& m, uint64_t seed, int nprimes = 3) {
    ModularRankReport rep;
    std::mt19937_64 rng(seed);
    std::vector<int> ranks;
    for (int i = 0; i < nprimes; ++i) {
        uint64_t p = random_prime_above_2_60(rng);
        FpCtx ctx(p);
        SpMat<Fp> mi = sp_specialize(m, ctx, rng);
        ranks.push_back(sp_rank(ctx, mi));
        rep.primes.push_back(p);
    }
    rep.rank = ranks.empty() ? 0 : *std::max_element(ranks.begin(), ranks.end());
    rep.agreeing_primes = static_cast<int>(std::count(ranks.begin(), ranks.end(), rep.rank));
    rep.accepted = rep.agreeing_primes >= 3 && rep.agreeing_primes == nprimes;
    return rep;
}

enum class RankStrategy { FractionFree, Modular };

/// Exact rank for the fraction-free strategy; certified modular rank otherwise.
inline int rank_with_strategy(const SpMat<Frac<Rat>>& m, RankStrategy s, uint64_t seed = 1,
                              int nprimes = 3) {
    if (s == RankStrategy::FractionFree) {
        RatFnCtx ctx(2, {"q", "z"});
        return sp_rank(ctx, m);
    }
    ModularRankReport rep = modular_rank(m, seed, nprimes);
    if (!rep.accepted) throw std::runtime_error("rank_with_strategy: modular ranks disagree");
    return rep.rank;
}

} // namespace qdr
