#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace omega {

// Exact rational scalar. GMP keeps values canonical (reduced fraction,
// positive denominator), so equality and ordering are decidable and exact.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat q(mpz_class(num), mpz_class(den));
    q.canonicalize();
    return q;
}

/// Parses "p/q" (or a bare integer "p"); throws std::invalid_argument on garbage.
Rat rat_from_string(const std::string& text);

/// Canonical "p/q" encoding, denominator always explicit.
std::string rat_to_string(const Rat& q);

inline double to_double(const Rat& q) { return q.get_d(); }

// gmpxx expression templates do not mix with std::min/max; force values.
inline const Rat& rat_min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

}  // namespace omega
