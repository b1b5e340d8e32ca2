#pragma once

#include <stdexcept>
#include <string>

#include "qdr/poly.hpp"

namespace qdr {

/// Canonical fraction num/den of sparse polynomials over a coefficient field K.
/// Invariants: den != 0, gcd(num, den) = 1, den monic in descending lex order.
/// Equal field values therefore have identical representations.
template <class K>
class Frac {
public:
    Frac() = default; // zero with denominator 1 (empty num means 0; empty den means 1)

    explicit Frac(Poly<K> n) : num_(std::move(n)) {}
    Frac(Poly<K> n, Poly<K> d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("Frac: zero denominator");
        reduce();
    }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den_or_one() const { return den_; } // empty terms means literal 1
    bool den_is_one() const { return den_.is_zero(); }

    bool is_zero() const { return num_.is_zero(); }

    friend Frac operator+(const Frac& a, const Frac& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        Frac r;
        if (a.den_is_one() && b.den_is_one()) {
            r.num_ = a.num_ + b.num_;
            return r;
        }
        r.num_ = a.num_ * b.eff_den() + b.num_ * a.eff_den();
        r.den_ = a.eff_den() * b.eff_den();
        r.reduce();
        return r;
    }
    friend Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }
    Frac operator-() const {
        Frac r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        Frac r;
        if (a.is_zero() || b.is_zero()) return r;
        r.num_ = a.num_ * b.num_;
        if (!a.den_is_one() || !b.den_is_one()) r.den_ = a.eff_den() * b.eff_den();
        r.reduce();
        return r;
    }
    friend Frac operator/(const Frac& a, const Frac& b) { return a * b.inverse(); }
    Frac& operator+=(const Frac& o) { *this = *this + o; return *this; }
    Frac& operator-=(const Frac& o) { *this = *this - o; return *this; }
    Frac& operator*=(const Frac& o) { *this = *this * o; return *this; }

    Frac inverse() const {
        if (is_zero()) throw std::domain_error("Frac: division by zero");
        Frac r;
        r.num_ = eff_den();
        r.den_ = num_;
        r.reduce();
        return r;
    }

    Frac pow(long e) const {
        if (is_zero()) {
            if (e > 0) return Frac{};
            throw std::domain_error("Frac: zero to a nonpositive power");
        }
        if (e < 0) return inverse().pow(-e);
        Frac r;
        r.num_ = Poly<K>::constant(unit_coeff());
        Frac base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& vars) const {
        if (den_is_one()) return num_.str(vars);
        return wrap(num_.str(vars)) + "/" + wrap(den_.str(vars));
    }

private:
    K unit_coeff() const {
        if (!num_.is_zero()) {
            K c = num_.lead_coeff();
            return c / c;
        }
        if (!den_.is_zero()) {
            K c = den_.lead_coeff();
            return c / c;
        }
        // zero fraction of an unattached coefficient field: fall back to K's own unit
        throw std::logic_error("Frac: cannot mint a unit from the zero element");
    }

    Poly<K> eff_den() const {
        if (!den_.is_zero()) return den_;
        if (!num_.is_zero()) return Poly<K>::constant(unit_coeff());
        throw std::logic_error("Frac: effective denominator of an untyped zero");
    }

    static std::string wrap(const std::string& s) {
        bool needs = s.find_first_of("+-", 1) != std::string::npos ||
                     s.find_first_of("*/") != std::string::npos;
        if (!needs) return s;
        return "(" + s + ")";
    }

    void reduce() {
        if (den_.is_zero()) return; // literal denominator 1
        if (num_.is_zero()) { den_ = Poly<K>{}; return; }
        Poly<K> g = poly_gcd(num_, den_);
        if (!(g.size() == 1 && g.lead_mono() == Mono{0, 0})) {
            num_ = poly_exact_div(num_, g);
            den_ = poly_exact_div(den_, g);
        }
        // normalize the denominator to be monic
        K lc = den_.lead_coeff();
        if (den_.size() == 1 && den_.lead_mono() == Mono{0, 0}) {
            // constant denominator folds into the numerator
            Poly<K> n;
            for (auto& [m, c] : num_.terms()) n.add_term(m, c / lc);
            num_ = std::move(n);
            den_ = Poly<K>{};
            return;
        }
        Poly<K> n, d;
        for (auto& [m, c] : num_.terms()) n.add_term(m, c / lc);
        for (auto& [m, c] : den_.terms()) d.add_term(m, c / lc);
        num_ = std::move(n);
        den_ = std::move(d);
    }

    Poly<K> num_; // empty means 0
    Poly<K> den_; // empty means 1
};

} // namespace qdr
