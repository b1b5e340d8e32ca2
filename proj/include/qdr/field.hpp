#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdr/cyclotomic.hpp"
#include "qdr/fp64.hpp"
#include "qdr/fraction.hpp"
#include "qdr/rat.hpp"

namespace qdr {

/// Thrown when a numeric specialization hits a vanishing denominator and the
/// caller should retry with fresh images.
struct SpecializeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Context for rational-function fields over Q in one or two generators.
/// nv=2 with vars {q,z} is the generic two-parameter field; nv=1 covers the
/// one-generator presentations (w for the determinant-one case, q alone, r
/// for limit computations).
class RatFnCtx {
public:
    using Elem = Frac<Rat>;

    RatFnCtx(int nv, std::vector<std::string> vars) : nv_(nv), vars_(std::move(vars)) {
        if (nv < 1 || nv > 2) throw std::invalid_argument("RatFnCtx: one or two variables");
    }

    int nvars() const { return nv_; }
    const std::vector<std::string>& var_names() const { return vars_; }

    Elem zero() const { return Elem{}; }
    Elem one() const { return from_long(1); }
    Elem from_long(long n) const { return Elem(Poly<Rat>::constant(Rat(n))); }
    Elem from_rat(const Rat& r) const { return Elem(Poly<Rat>::constant(r)); }
    Elem var(int i) const {
        if (i < 0 || i >= nv_) throw std::invalid_argument("RatFnCtx: no such variable");
        Mono m = {0, 0};
        m[i] = 1;
        return Elem(Poly<Rat>::term(m, Rat(1)));
    }

    bool is_zero(const Elem& e) const { return e.is_zero(); }
    std::string str(const Elem& e) const { return e.str(vars_); }

private:
    int nv_;
    std::vector<std::string> vars_;
};

/// Context for rational functions in one generator s over a cyclotomic field.
class CycFnCtx {
public:
    using Elem = Frac<Cyclo>;

    explicit CycFnCtx(int order, std::string var = "s")
        : field_(CycloField::make(order)), var_(std::move(var)) {}

    const std::shared_ptr<const CycloField>& cyclo_field() const { return field_; }

    Elem zero() const { return Elem{}; }
    Elem one() const { return from_long(1); }
    Elem from_long(long n) const {
        return Elem(Poly<Cyclo>::constant(Cyclo::from_rat(field_, Rat(n))));
    }
    Elem zeta() const { return Elem(Poly<Cyclo>::constant(Cyclo::zeta(field_))); }
    Elem var(int i = 0) const {
        if (i != 0) throw std::invalid_argument("CycFnCtx: single variable");
        return Elem(Poly<Cyclo>::term({1, 0}, Cyclo::from_rat(field_, Rat(1))));
    }

    bool is_zero(const Elem& e) const { return e.is_zero(); }
    std::string str(const Elem& e) const { return e.str(std::vector<std::string>{var_}); }

private:
    std::shared_ptr<const CycloField> field_;
    std::string var_;
};

/// Context for a large prime field.
class FpCtx {
public:
    using Elem = Fp;

    explicit FpCtx(uint64_t p) : p_(p) {}
    uint64_t modulus() const { return p_; }

    Elem zero() const { return Fp(0, p_); }
    Elem one() const { return Fp(1, p_); }
    Elem from_long(long n) const {
        long r = n % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        return Fp(static_cast<uint64_t>(r), p_);
    }
    Elem from_rat(const Rat& r) const {
        Int num = r.get_num(), den = r.get_den();
        Int p = Int(int_str_of(p_));
        Int nm = num % p;
        if (nm < 0) nm += p;
        Int dm = den % p;
        if (dm == 0) throw SpecializeError("FpCtx: coefficient denominator divisible by p");
        Fp n(nm.get_ui(), p_), d(dm.get_ui(), p_);
        return n / d;
    }

    bool is_zero(const Elem& e) const { return e.is_zero(); }
    std::string str(const Elem& e) const { return e.str(); }

private:
    static std::string int_str_of(uint64_t v) { return std::to_string(v); }
    uint64_t p_;
};

/// Context for exact rational images (the coefficient field itself).
class QQCtx {
public:
    using Elem = Rat;
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_long(long n) const { return Rat(n); }
    Elem from_rat(const Rat& r) const { return r; }
    bool is_zero(const Elem& e) const { return sgn(e) == 0; }
    std::string str(const Elem& e) const { return rat_str(e); }
};

/// Generic integer power through the context (handles negative exponents).
template <class C>
typename C::Elem cpow(const C& ctx, const typename C::Elem& x, long e) {
    using E = typename C::Elem;
    if (e < 0) return cpow(ctx, ctx.one() / x, -e);
    E r = ctx.one(), b = x;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Field specification shared by the CLI and the verification drivers.

enum class FieldMode { GlSymbolic, SlSymbolic, Numeric, RationalImages };

struct FieldSpec {
    FieldMode mode = FieldMode::GlSymbolic;
    int N = 2;
    uint64_t prime = 0;   // Numeric mode
    Rat q0 = Rat(0), z0 = Rat(0);
    int unity_bound = 64; // reject q0 of multiplicative order <= bound

    void validate() const {
        if (N < 1) throw std::invalid_argument("FieldSpec: N must be positive");
        if (mode == FieldMode::Numeric) {
            if (prime < (1ull << 60)) throw std::invalid_argument("FieldSpec: prime must exceed 2^60");
            FpCtx ctx(prime);
            Fp q = ctx.from_rat(q0), z = ctx.from_rat(z0);
            if (q.is_zero() || z.is_zero())
                throw std::invalid_argument("FieldSpec: numeric images must be nonzero");
            Fp acc = ctx.one();
            for (int k = 1; k <= unity_bound; ++k) {
                acc = acc * q;
                if (acc == ctx.one())
                    throw std::invalid_argument("FieldSpec: q image is a low-order root of unity");
            }
        }
        if (mode == FieldMode::RationalImages) {
            if (sgn(q0) == 0 || sgn(z0) == 0)
                throw std::invalid_argument("FieldSpec: rational images must be nonzero");
        }
    }
};

/// Evaluation homomorphism into a prime field.  Throws SpecializeError when a
/// denominator vanishes at the images.
inline Fp specialize_fp(const Frac<Rat>& x, const FpCtx& ctx, const Fp& q0, const Fp& z0) {
    auto cm = [&](const Rat& c) { return ctx.from_rat(c); };
    Fp den = x.den_is_one() ? ctx.one() : x.den_or_one().eval_mapped(q0, z0, cm);
    if (den.is_zero()) throw SpecializeError("specialize: denominator vanishes at the images");
    Fp num = x.num().eval_mapped(q0, z0, cm);
    return num / den;
}

/// Evaluation homomorphism into the rationals.
inline Rat specialize_rat(const Frac<Rat>& x, const Rat& q0, const Rat& z0) {
    auto cm = [](const Rat& c) { return c; };
    Rat den = x.den_is_one() ? Rat(1) : x.den_or_one().eval_mapped(q0, z0, cm);
    if (sgn(den) == 0) throw SpecializeError("specialize: denominator vanishes at the images");
    Rat num = x.num().eval_mapped(q0, z0, cm);
    return num / den;
}

} // namespace qdr
