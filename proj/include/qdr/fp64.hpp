#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace qdr {

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace detail

/// Element of a prime field F_p with p > 2^60 (p carried by value).
/// A default-constructed element is the context-free zero literal.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(uint64_t v, uint64_t p) : v_(v % p), p_(p) {}

    uint64_t value() const { return v_; }
    uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp zero_like() const { return Fp(0, p_); }
    Fp one_like() const { return Fp(1, need_p()); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        uint64_t p = join(a, b);
        if (!p) return Fp();
        uint64_t s = a.v_ + b.v_;
        if (s >= p) s -= p;
        return Fp(s, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        uint64_t p = join(a, b);
        if (!p) return Fp();
        uint64_t s = a.v_ + p - b.v_;
        if (s >= p) s -= p;
        return Fp(s, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        uint64_t p = join(a, b);
        if (!p) return Fp();
        if (a.v_ == 0 || b.v_ == 0) return Fp(0, p);
        return Fp(detail::mulmod_u64(a.v_, b.v_, p), p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const { return p_ ? Fp(v_ ? p_ - v_ : 0, p_) : Fp(); }

    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        return Fp(detail::powmod_u64(v_, p_ - 2, p_), p_);
    }

    Fp pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        return Fp(detail::powmod_u64(v_, static_cast<uint64_t>(e), need_p()), p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.p_ && b.p_ && a.p_ != b.p_) throw std::logic_error("Fp: modulus mismatch");
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

private:
    uint64_t need_p() const {
        if (!p_) throw std::logic_error("Fp: unattached element needs a modulus");
        return p_;
    }
    static uint64_t join(const Fp& a, const Fp& b) {
        if (a.p_ && b.p_ && a.p_ != b.p_) throw std::logic_error("Fp: modulus mismatch");
        return a.p_ ? a.p_ : b.p_;
    }
    uint64_t v_, p_;
};

/// Draw the next prime above a seeded random 61-bit starting point.
inline uint64_t random_prime_above_2_60(std::mt19937_64& rng) {
    std::uniform_int_distribution<uint64_t> dist(1ull << 60, (1ull << 61) - 1);
    uint64_t n = dist(rng) | 1;
    while (!detail::is_prime_u64(n)) n += 2;
    return n;
}

} // namespace qdr
