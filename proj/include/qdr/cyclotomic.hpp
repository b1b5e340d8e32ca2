#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdr/rat.hpp"

namespace qdr {

namespace upoly {

// Dense univariate polynomials over Rat, used for cyclotomic arithmetic.
using UP = std::vector<Rat>;

inline void up_trim(UP& a) {
    while (!a.empty() && is_zero(a.back())) a.pop_back();
}

inline int up_deg(const UP& a) { return static_cast<int>(a.size()) - 1; }

inline UP up_mul(const UP& a, const UP& b) {
    if (a.empty() || b.empty()) return {};
    UP c(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    up_trim(c);
    return c;
}

inline UP up_sub(const UP& a, const UP& b) {
    UP c = a;
    if (b.size() > c.size()) c.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    up_trim(c);
    return c;
}

// Division with remainder over the rationals; divisor must be nonzero.
inline void up_divmod(const UP& a, const UP& b, UP& q, UP& r) {
    if (b.empty()) throw std::domain_error("upoly: division by zero polynomial");
    r = a;
    up_trim(r);
    q.assign(r.size() > b.size() ? r.size() - b.size() + 1 : 1, Rat(0));
    while (up_deg(r) >= up_deg(b)) {
        int k = up_deg(r) - up_deg(b);
        Rat c = r.back() / b.back();
        q[k] += c;
        for (size_t i = 0; i < b.size(); ++i) r[i + k] -= c * b[i];
        up_trim(r);
    }
    up_trim(q);
}

} // namespace upoly

/// The number field Q(zeta_n), zeta_n a primitive n-th root of unity.
struct CycloField {
    int order = 1;                // n
    upoly::UP minpoly;            // Phi_n, monic
    int deg() const { return upoly::up_deg(minpoly); }

    static std::shared_ptr<const CycloField> make(int n);
};

/// Computes Phi_n(x) exactly via Phi_n = (x^n-1) / prod_{d|n, d<n} Phi_d.
inline upoly::UP cyclotomic_polynomial(int n) {
    using namespace upoly;
    UP num(n + 1, Rat(0));
    num[0] = Rat(-1);
    num[n] = Rat(1);
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        UP phi_d = cyclotomic_polynomial(d);
        UP q, r;
        up_divmod(num, phi_d, q, r);
        if (!r.empty()) throw std::logic_error("cyclotomic: non-exact division");
        num = q;
    }
    return num;
}

inline std::shared_ptr<const CycloField> CycloField::make(int n) {
    auto f = std::make_shared<CycloField>();
    f->order = n;
    f->minpoly = cyclotomic_polynomial(n);
    return f;
}

/// Element of Q(zeta_n): a rational polynomial in zeta of degree < deg Phi_n.
/// Default-constructed elements are the context-free zero literal.
class Cyclo {
public:
    Cyclo() = default;
    Cyclo(std::shared_ptr<const CycloField> f, upoly::UP c) : f_(std::move(f)), c_(std::move(c)) {
        reduce();
    }
    static Cyclo from_rat(std::shared_ptr<const CycloField> f, const Rat& r) {
        return Cyclo(std::move(f), sgn(r) == 0 ? upoly::UP{} : upoly::UP{r});
    }
    static Cyclo zeta(std::shared_ptr<const CycloField> f) {
        return Cyclo(std::move(f), upoly::UP{Rat(0), Rat(1)});
    }

    bool is_zero() const { return c_.empty(); }
    Cyclo zero_like() const { return Cyclo(f_, {}); }
    Cyclo one_like() const { return from_rat(need(), Rat(1)); }
    const std::shared_ptr<const CycloField>& field() const { return f_; }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        auto f = join(a, b);
        upoly::UP c = a.c_;
        if (b.c_.size() > c.size()) c.resize(b.c_.size(), Rat(0));
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Cyclo(f, std::move(c));
    }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }
    Cyclo operator-() const {
        upoly::UP c = c_;
        for (auto& x : c) x = -x;
        return Cyclo(f_, std::move(c));
    }
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        auto f = join(a, b);
        if (a.is_zero() || b.is_zero()) return Cyclo(f, {});
        return Cyclo(f, upoly::up_mul(a.c_, b.c_));
    }
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
    Cyclo& operator+=(const Cyclo& o) { *this = *this + o; return *this; }
    Cyclo& operator-=(const Cyclo& o) { *this = *this - o; return *this; }
    Cyclo& operator*=(const Cyclo& o) { *this = *this * o; return *this; }

    // Extended Euclid against the minimal polynomial.
    Cyclo inverse() const {
        if (is_zero()) throw std::domain_error("Cyclo: division by zero");
        auto f = need();
        using namespace upoly;
        UP r0 = f->minpoly, r1 = c_, s0 = {}, s1 = {Rat(1)};
        while (!r1.empty()) {
            UP q, r2;
            up_divmod(r0, r1, q, r2);
            UP s2 = up_sub(s0, up_mul(q, s1));
            r0 = r1; r1 = r2;
            s0 = s1; s1 = s2;
        }
        if (up_deg(r0) != 0) throw std::logic_error("Cyclo: minimal polynomial not irreducible here");
        Rat inv_lead = Rat(1) / r0[0];
        for (auto& x : s0) x *= inv_lead;
        return Cyclo(f, std::move(s0));
    }

    friend bool operator==(const Cyclo& a, const Cyclo& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string sym = "zeta" + std::to_string(f_->order);
        std::string out;
        for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
            if (sgn(c_[i]) == 0) continue;
            Rat c = c_[i];
            bool neg = sgn(c) < 0;
            if (!out.empty()) out += neg ? "-" : "+";
            else if (neg) out += "-";
            Rat a = abs(c);
            if (i == 0 || a != 1) {
                out += rat_str(a);
                if (i > 0) out += "*";
            }
            if (i > 0) {
                out += sym;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void reduce() {
        upoly::up_trim(c_);
        if (!f_) { if (!c_.empty()) throw std::logic_error("Cyclo: coefficients without a field"); return; }
        if (upoly::up_deg(c_) >= f_->deg()) {
            upoly::UP q, r;
            upoly::up_divmod(c_, f_->minpoly, q, r);
            c_ = std::move(r);
        }
    }
    std::shared_ptr<const CycloField> need() const {
        if (!f_) throw std::logic_error("Cyclo: unattached element needs a field");
        return f_;
    }
    static std::shared_ptr<const CycloField> join(const Cyclo& a, const Cyclo& b) {
        if (a.f_ && b.f_ && a.f_->order != b.f_->order) throw std::logic_error("Cyclo: field mismatch");
        return a.f_ ? a.f_ : b.f_;
    }

    std::shared_ptr<const CycloField> f_;
    upoly::UP c_;
};

inline bool is_zero(const Cyclo& c) { return c.is_zero(); }

} // namespace qdr
