#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "qdr/partitions.hpp"
#include "qdr/rat.hpp"

namespace qdr {

inline bool weakly_decreasing(const std::vector<int>& k) {
    for (size_t i = 1; i < k.size(); ++i)
        if (k[i - 1] < k[i]) return false;
    return true;
}

/// Symmetric Laurent polynomial in N variables with integer coefficients,
/// stored on dominant (weakly decreasing) orbit representatives.  The
/// coefficient of a representative is the coefficient of that monomial.
class SymLaurent {
public:
    using Key = std::vector<int>;

    explicit SymLaurent(int nvars) : n_(nvars) {}

    int nvars() const { return n_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<Key, Int>& orbits() const { return c_; }

    static SymLaurent one(int nvars) {
        SymLaurent s(nvars);
        s.c_[Key(nvars, 0)] = 1;
        return s;
    }

    void add_orbit(Key k, const Int& coeff) {
        if (coeff == 0) return;
        if (static_cast<int>(k.size()) != n_) throw std::invalid_argument("SymLaurent: bad key size");
        if (!weakly_decreasing(k)) throw std::invalid_argument("SymLaurent: key must be dominant");
        auto it = c_.find(k);
        if (it == c_.end()) c_.emplace(std::move(k), coeff);
        else {
            it->second += coeff;
            if (it->second == 0) c_.erase(it);
        }
    }

    /// All distinct monomials of an orbit.
    static std::vector<Key> orbit_list(Key k) {
        std::sort(k.begin(), k.end());
        std::vector<Key> out;
        do out.push_back(k);
        while (std::next_permutation(k.begin(), k.end()));
        return out;
    }

    long orbit_size(const Key& k) const { return static_cast<long>(orbit_list(k).size()); }

    Int dimension() const { // evaluation at x_i = 1
        Int d = 0;
        for (auto& [k, c] : c_) d += c * orbit_size(k);
        return d;
    }

    friend SymLaurent operator+(const SymLaurent& a, const SymLaurent& b) {
        SymLaurent r = a;
        for (auto& [k, c] : b.c_) r.add_orbit(k, c);
        return r;
    }
    friend SymLaurent operator-(const SymLaurent& a, const SymLaurent& b) {
        SymLaurent r = a;
        for (auto& [k, c] : b.c_) r.add_orbit(k, -c);
        return r;
    }
    SymLaurent scaled(const Int& s) const {
        SymLaurent r(n_);
        if (s == 0) return r;
        for (auto& [k, c] : c_) r.c_[k] = c * s;
        return r;
    }

    /// Product via monomial convolution.  The coefficient of a dominant
    /// monomial in the (symmetric) product is accumulated directly.
    friend SymLaurent operator*(const SymLaurent& a, const SymLaurent& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("SymLaurent: variable count mismatch");
        SymLaurent r(a.n_);
        for (auto& [ka, ca] : a.c_) {
            std::vector<Key> oa = orbit_list(ka);
            for (auto& [kb, cb] : b.c_) {
                std::vector<Key> ob = orbit_list(kb);
                Int coeff = ca * cb;
                Key sum(a.n_);
                for (const Key& x : oa)
                    for (const Key& y : ob) {
                        for (int i = 0; i < a.n_; ++i) sum[i] = x[i] + y[i];
                        if (weakly_decreasing(sum)) r.add_orbit(sum, coeff);
                    }
            }
        }
        return r;
    }

    /// Adams operation: substitute x_i -> x_i^j (j may be negative).
    SymLaurent adams(int j) const {
        SymLaurent r(n_);
        for (auto& [k, c] : c_) {
            Key kk = k;
            for (int& e : kk) e *= j;
            std::sort(kk.begin(), kk.end(), std::greater<int>());
            r.add_orbit(std::move(kk), c);
        }
        return r;
    }

    SymLaurent shifted_all(int m) const { // multiply by (x_1...x_N)^m
        SymLaurent r(n_);
        for (auto& [k, c] : c_) {
            Key kk = k;
            for (int& e : kk) e += m;
            r.c_[std::move(kk)] = c;
        }
        return r;
    }

    int min_exponent() const {
        int m = 0;
        for (auto& [k, c] : c_) m = std::min(m, k.back());
        return m;
    }

    friend bool operator==(const SymLaurent& a, const SymLaurent& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const SymLaurent& a, const SymLaurent& b) { return !(a == b); }

private:
    int n_;
    std::map<Key, Int> c_;
};

/// Character of u (x) u^c: (sum x_i)(sum x_j^-1), dimension N^2.
inline SymLaurent ad_character(int n) {
    if (n < 2) throw std::invalid_argument("ad_character: N >= 2");
    SymLaurent fund(n), dual(n);
    {
        std::vector<int> k(n, 0);
        k[0] = 1;
        fund.add_orbit(k, 1);
        std::vector<int> kd(n, 0);
        kd[n - 1] = -1;
        dual.add_orbit(kd, 1);
    }
    return fund * dual;
}

/// Schur polynomial s_lambda (lambda with nonnegative parts) via semistandard
/// tableaux; serves as the monomial-level oracle for expansions.
inline SymLaurent schur(const GenPartition& lam, int nvars) {
    if (!lam.nonnegative()) throw std::invalid_argument("schur: nonnegative parts required");
    if (lam.rows() > nvars && lam.part(nvars) > 0)
        return SymLaurent(nvars); // too many rows: zero in N variables
    SymLaurent out(nvars);
    std::vector<int> shape;
    for (int i = 0; i < lam.rows(); ++i)
        if (lam.part(i) > 0) shape.push_back(lam.part(i));
    if (static_cast<int>(shape.size()) > nvars) return SymLaurent(nvars);
    if (shape.empty()) return SymLaurent::one(nvars);

    int rows = static_cast<int>(shape.size());
    std::vector<std::vector<int>> t(rows);
    for (int i = 0; i < rows; ++i) t[i].assign(shape[i], 0);
    std::vector<int> weight(nvars, 0);

    std::function<void(int, int)> fill = [&](int i, int j) {
        if (i == rows) {
            std::vector<int> w = weight;
            if (weakly_decreasing(w)) out.add_orbit(w, 1);
            return;
        }
        int ni = i, nj = j + 1;
        if (nj >= shape[i]) { ni = i + 1; nj = 0; }
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[i][j - 1]);                      // weakly increasing rows
        if (i > 0 && j < shape[i - 1]) lo = std::max(lo, t[i - 1][j] + 1); // strictly increasing columns
        for (int v = lo; v <= nvars; ++v) {
            t[i][j] = v;
            weight[v - 1]++;
            fill(ni, nj);
            weight[v - 1]--;
        }
    };
    fill(0, 0);
    return out;
}

/// Isotypic decomposition: distinct highest weights with positive multiplicities.
struct CorepDecomp {
    std::vector<std::pair<GenPartition, long>> comps;

    long multiplicity(const GenPartition& lam) const {
        for (auto& [p, m] : comps)
            if (p == lam) return m;
        return 0;
    }
    long trivial_multiplicity(int n) const { return multiplicity(GenPartition::zero(n)); }
};

/// Rational-representation dimension of the GL(N) irreducible with highest
/// weight lambda (Weyl dimension formula; shift-invariant).
inline Int weyl_dimension(const GenPartition& lam) {
    int n = lam.rows();
    Int num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= lam.part(i) - lam.part(j) + j - i;
            den *= j - i;
        }
    return num / den;
}

/// Expands a genuine character into Schur functions by repeatedly subtracting
/// the lexicographically dominant term.  Throws when a negative multiplicity
/// appears (the input was not a character).
inline CorepDecomp schur_expand(const SymLaurent& chi) {
    int n = chi.nvars();
    int m = std::max(0, -chi.min_exponent());
    SymLaurent work = chi.shifted_all(m);
    std::vector<std::pair<GenPartition, long>> found;
    while (!work.is_zero()) {
        auto it = work.orbits().rbegin(); // lexicographically greatest dominant key
        SymLaurent::Key lam = it->first;
        Int mult = it->second;
        if (lam.back() < 0) throw std::domain_error("schur_expand: input is not polynomial after shift");
        if (mult < 0) throw std::domain_error("schur_expand: negative multiplicity, not a character");
        GenPartition p(lam);
        work = work - schur(p, n).scaled(mult);
        found.push_back({shift(p, -m), mult.get_si()});
    }
    CorepDecomp d;
    d.comps = std::move(found);
    std::sort(d.comps.begin(), d.comps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return d;
}

/// k-th exterior power of a character by the Newton/Adams recursion
/// e_k = (1/k) sum_{j=1..k} (-1)^{j-1} psi^j(chi) e_{k-j}.
inline std::vector<SymLaurent> exterior_powers(const SymLaurent& chi, int kmax) {
    if (kmax < 0) throw std::invalid_argument("exterior_powers: negative degree");
    int n = chi.nvars();
    std::vector<SymLaurent> e;
    e.push_back(SymLaurent::one(n));
    std::vector<SymLaurent> psi; // psi[j] = adams(j+1)
    for (int j = 1; j <= kmax; ++j) psi.push_back(chi.adams(j));
    for (int k = 1; k <= kmax; ++k) {
        SymLaurent acc(n);
        for (int j = 1; j <= k; ++j) {
            SymLaurent term = psi[j - 1] * e[k - j];
            acc = (j % 2 == 1) ? acc + term : acc - term;
        }
        // divide exactly by k
        SymLaurent ek(n);
        for (auto& [key, c] : acc.orbits()) {
            if (c % k != 0) throw std::logic_error("exterior_powers: non-integral division");
            ek.add_orbit(key, c / k);
        }
        e.push_back(std::move(ek));
    }
    return e;
}

inline SymLaurent exterior_power(const SymLaurent& chi, int k) {
    return exterior_powers(chi, k).at(k);
}

/// Isotypic blocks of the k-th exterior power of 1 (+) ad, with the
/// coinvariant (trivial) multiplicity.
struct BlockData {
    CorepDecomp decomp;
    long coinvariant_multiplicity = 0;
    Int total_dimension = 0;
};

inline BlockData blocks(int n, int k) {
    if (k < 0 || k > n * n) throw std::invalid_argument("blocks: 0 <= k <= N^2");
    SymLaurent chi = ad_character(n);
    SymLaurent ek = exterior_power(chi, k);
    BlockData b;
    b.decomp = schur_expand(ek);
    b.coinvariant_multiplicity = b.decomp.trivial_multiplicity(n);
    for (auto& [p, m] : b.decomp.comps) b.total_dimension += weyl_dimension(p) * m;
    return b;
}

/// Coefficients of prod_{i=1..n} (1 + t^{2i-1}), degrees 0..n^2.
inline std::vector<long> coinvariant_poincare_coefficients(int n) {
    std::vector<long> c = {1};
    for (int i = 1; i <= n; ++i) {
        std::vector<long> next(c.size() + 2 * i - 1, 0);
        for (size_t d = 0; d < c.size(); ++d) {
            next[d] += c[d];
            next[d + 2 * i - 1] += c[d];
        }
        c = std::move(next);
    }
    c.resize(static_cast<size_t>(n) * n + 1, 0);
    return c;
}

} // namespace qdr
