#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace qdr {

/// Exact rational scalar, backed by GMP.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_of(long n) { return Rat(n); }
inline Rat rat_of(long n, long d) { Rat r(n, d); r.canonicalize(); return r; }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline std::string int_str(const Int& n) { return n.get_str(); }

} // namespace qdr
