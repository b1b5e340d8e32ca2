#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdr/cyclotomic.hpp"
#include "qdr/rat.hpp"

namespace qdr {

template <class K> inline bool k_is_zero(const K& x) { return x.is_zero(); }
template <> inline bool k_is_zero<Rat>(const Rat& x) { return sgn(x) == 0; }

template <class K> inline std::string k_str(const K& x) { return x.str(); }
template <> inline std::string k_str<Rat>(const Rat& x) { return rat_str(x); }

/// Exponent vector for at most two field generators.
using Mono = std::array<int, 2>;

struct MonoLexGt {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a[0] != b[0]) return a[0] > b[0];
        return a[1] > b[1];
    }
};

/// Sparse polynomial in up to two variables over a coefficient field K.
/// Terms are kept in descending lexicographic order; the leading term is front().
template <class K>
class Poly {
public:
    using Terms = std::map<Mono, K, MonoLexGt>;

    Poly() = default;
    static Poly term(const Mono& m, K c) {
        Poly p;
        if (!k_is_zero(c)) p.t_[m] = std::move(c);
        return p;
    }
    static Poly constant(K c) { return term({0, 0}, std::move(c)); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    int degree(int var) const {
        int d = 0;
        bool any = false;
        for (auto& [m, c] : t_) {
            if (!any || m[var] > d) d = m[var];
            any = true;
        }
        return any ? d : -1;
    }

    const Mono& lead_mono() const { return t_.begin()->first; }
    const K& lead_coeff() const { return t_.begin()->second; }

    void add_term(const Mono& m, const K& c) {
        if (k_is_zero(c)) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (k_is_zero(it->second)) t_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (auto& [m, c] : b.t_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (auto& [m, c] : b.t_) r.add_term(m, -c);
        return r;
    }
    Poly operator-() const {
        Poly r;
        for (auto& [m, c] : t_) r.t_[m] = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (auto& [ma, ca] : a.t_)
            for (auto& [mb, cb] : b.t_) r.add_term({ma[0] + mb[0], ma[1] + mb[1]}, ca * cb);
        return r;
    }
    Poly scaled(const K& c) const {
        Poly r;
        if (k_is_zero(c)) return r;
        for (auto& [m, k] : t_) r.t_[m] = k * c;
        return r;
    }
    Poly mono_shifted(const Mono& s) const {
        Poly r;
        for (auto& [m, c] : t_) r.t_[{m[0] + s[0], m[1] + s[1]}] = c;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.t_.size() != b.t_.size()) return false;
        auto ia = a.t_.begin();
        auto ib = b.t_.begin();
        for (; ia != a.t_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return false;
            if (!(ia->second == ib->second)) return false;
        }
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    template <class E>
    E eval(const E& x0, const E& x1) const {
        E acc = x0 - x0; // typed zero
        for (auto& [m, c] : t_) {
            E t = coeff_cast<E>(c);
            for (int i = 0; i < m[0]; ++i) t = t * x0;
            for (int i = 0; i < m[1]; ++i) t = t * x1;
            acc = acc + t;
        }
        return acc;
    }

    template <class E, class CoeffMap>
    E eval_mapped(const E& x0, const E& x1, CoeffMap&& cm) const {
        E acc = x0 - x0;
        for (auto& [m, c] : t_) {
            E t = cm(c);
            for (int i = 0; i < m[0]; ++i) t = t * x0;
            for (int i = 0; i < m[1]; ++i) t = t * x1;
            acc = acc + t;
        }
        return acc;
    }

    std::string str(const std::vector<std::string>& vars) const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto& [m, c] : t_) {
            std::string cs = k_str(c);
            bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
            if (out.empty()) {
                if (neg) { out += "-"; cs = cs.substr(1); }
            } else {
                if (neg) { out += "-"; cs = cs.substr(1); }
                else out += "+";
            }
            bool composite = cs.find_first_of("+-") != std::string::npos;
            std::string vpart;
            for (int v = 0; v < 2; ++v) {
                if (m[v] == 0) continue;
                if (!vpart.empty()) vpart += "*";
                vpart += v < static_cast<int>(vars.size()) ? vars[v] : ("x" + std::to_string(v));
                if (m[v] != 1) vpart += "^" + std::to_string(m[v]);
            }
            if (vpart.empty()) {
                out += composite ? "(" + cs + ")" : cs;
            } else if (cs == "1") {
                out += vpart;
            } else {
                out += (composite ? "(" + cs + ")" : cs) + "*" + vpart;
            }
        }
        return out;
    }

private:
    template <class E>
    static E coeff_cast(const K& c) {
        if constexpr (std::is_same_v<E, K>) return c;
        else return E(c);
    }
    Terms t_;
};

// ---------------------------------------------------------------------------
// Dense univariate helpers over a field K (variable = var0 of the sparse form).

template <class K>
std::vector<K> dense_from(const Poly<K>& p) {
    std::vector<K> d;
    for (auto& [m, c] : p.terms()) {
        if (m[1] != 0) throw std::logic_error("dense_from: polynomial is not univariate");
        if (m[0] >= static_cast<int>(d.size())) d.resize(m[0] + 1, K{});
        d[m[0]] = c;
    }
    return d;
}

template <class K>
Poly<K> sparse_from(const std::vector<K>& d, int var) {
    Poly<K> p;
    for (int i = 0; i < static_cast<int>(d.size()); ++i) {
        Mono m = {0, 0};
        m[var] = i;
        p.add_term(m, d[i]);
    }
    return p;
}

template <class K>
void dtrim(std::vector<K>& a) {
    while (!a.empty() && k_is_zero(a.back())) a.pop_back();
}

template <class K>
std::vector<K> dmul(const std::vector<K>& a, const std::vector<K>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<K> c(a.size() + b.size() - 1, K{});
    for (size_t i = 0; i < a.size(); ++i) {
        if (k_is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    dtrim(c);
    return c;
}

template <class K>
void ddivmod(const std::vector<K>& a, const std::vector<K>& b, std::vector<K>& q, std::vector<K>& r) {
    if (b.empty()) throw std::domain_error("ddivmod: division by zero polynomial");
    r = a;
    dtrim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 1, K{});
    while (r.size() >= b.size() && !r.empty()) {
        size_t k = r.size() - b.size();
        K c = r.back() / b.back();
        q[k] += c;
        for (size_t i = 0; i < b.size(); ++i) r[i + k] -= c * b[i];
        dtrim(r);
    }
    dtrim(q);
}

// Monic gcd of dense univariate polynomials over a field.
template <class K>
std::vector<K> dgcd(std::vector<K> a, std::vector<K> b) {
    dtrim(a);
    dtrim(b);
    while (!b.empty()) {
        std::vector<K> q, r;
        ddivmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        K inv = a.back();
        for (auto& c : a) c = c / inv;
    }
    return a;
}

// ---------------------------------------------------------------------------
// Bivariate gcd via primitive pseudo-remainder sequences.  The main variable
// is var1; coefficients are dense univariate polynomials in var0.

namespace bivar {

template <class K>
using BP = std::vector<std::vector<K>>; // BP[j] = coefficient of var1^j, dense in var0

template <class K>
void btrim(BP<K>& a) {
    for (auto& c : a) dtrim(c);
    while (!a.empty() && a.back().empty()) a.pop_back();
}

template <class K>
BP<K> bp_from(const Poly<K>& p) {
    BP<K> a;
    for (auto& [m, c] : p.terms()) {
        if (m[1] >= static_cast<int>(a.size())) a.resize(m[1] + 1);
        auto& row = a[m[1]];
        if (m[0] >= static_cast<int>(row.size())) row.resize(m[0] + 1, K{});
        row[m[0]] = c;
    }
    btrim(a);
    return a;
}

template <class K>
Poly<K> bp_to(const BP<K>& a) {
    Poly<K> p;
    for (int j = 0; j < static_cast<int>(a.size()); ++j)
        for (int i = 0; i < static_cast<int>(a[j].size()); ++i) p.add_term({i, j}, a[j][i]);
    return p;
}

// Content w.r.t. the main variable: gcd of all coefficient polynomials.
template <class K>
std::vector<K> content(const BP<K>& a) {
    std::vector<K> g;
    for (auto& c : a) g = dgcd(g, c);
    return g;
}

template <class K>
BP<K> divide_content(const BP<K>& a, const std::vector<K>& g) {
    BP<K> r(a.size());
    for (size_t j = 0; j < a.size(); ++j) {
        if (a[j].empty()) continue;
        std::vector<K> q, rem;
        ddivmod(a[j], g, q, rem);
        if (!rem.empty()) throw std::logic_error("bivar: non-exact content division");
        r[j] = std::move(q);
    }
    btrim(r);
    return r;
}

// Pseudo-remainder of a by b in the main variable.
template <class K>
BP<K> prem(BP<K> a, const BP<K>& b) {
    btrim(a);
    if (b.empty()) throw std::domain_error("bivar: prem by zero");
    const std::vector<K>& lb = b.back();
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        std::vector<K> la = a.back();
        BP<K> next(da); // degree drops by at least one
        for (int j = 0; j < da; ++j) {
            std::vector<K> t = dmul(lb, j < static_cast<int>(a.size()) ? a[j] : std::vector<K>{});
            int k = j - (da - db);
            if (k >= 0 && k < static_cast<int>(b.size())) {
                std::vector<K> u = dmul(la, b[k]);
                if (u.size() > t.size()) t.resize(u.size(), K{});
                for (size_t i = 0; i < u.size(); ++i) t[i] -= u[i];
                dtrim(t);
            }
            next[j] = std::move(t);
        }
        btrim(next);
        a = std::move(next);
    }
    return a;
}

template <class K>
BP<K> bgcd(BP<K> a, BP<K> b) {
    btrim(a);
    btrim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<K> ca = content(a), cb = content(b);
    std::vector<K> cg = dgcd(ca, cb);
    a = divide_content(a, ca);
    b = divide_content(b, cb);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        BP<K> r = prem(a, b);
        btrim(r);
        if (!r.empty()) r = divide_content(r, content(r));
        a = std::move(b);
        b = std::move(r);
    }
    std::vector<K> cr = content(a);
    a = divide_content(a, cr);
    // reattach the content gcd
    BP<K> g(a.size());
    for (size_t j = 0; j < a.size(); ++j) g[j] = dmul(a[j], cg);
    btrim(g);
    return g;
}

} // namespace bivar

/// Monic gcd (leading coefficient 1 in descending lex order) of sparse polynomials.
template <class K>
Poly<K> poly_gcd(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() && b.is_zero()) return Poly<K>{};
    Poly<K> g;
    if (a.degree(1) <= 0 && b.degree(1) <= 0) {
        g = sparse_from(dgcd(dense_from(a), dense_from(b)), 0);
    } else {
        auto gb = bivar::bgcd(bivar::bp_from(a), bivar::bp_from(b));
        g = bivar::bp_to(gb);
    }
    if (!g.is_zero()) {
        K inv = g.lead_coeff();
        Poly<K> gg;
        for (auto& [m, c] : g.terms()) gg.add_term(m, c / inv);
        return gg;
    }
    return g;
}

/// Exact multivariate division (throws if not exact).
template <class K>
Poly<K> poly_exact_div(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw std::domain_error("poly_exact_div: division by zero");
    Poly<K> rem = a, q;
    while (!rem.is_zero()) {
        const Mono& ml = rem.lead_mono();
        const Mono& mb = b.lead_mono();
        Mono mq = {ml[0] - mb[0], ml[1] - mb[1]};
        if (mq[0] < 0 || mq[1] < 0) throw std::logic_error("poly_exact_div: not divisible");
        K cq = rem.lead_coeff() / b.lead_coeff();
        q.add_term(mq, cq);
        rem = rem - b.mono_shifted(mq).scaled(cq);
    }
    return q;
}

} // namespace qdr
