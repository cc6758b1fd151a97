#pragma once

#include <gmpxx.h>

#include <string>

namespace recur {

// Exact arithmetic backbone. mpq_class keeps values canonical (reduced,
// positive denominator) under arithmetic, which the rest of the library
// relies on when printing and hashing.
using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Rat& q) { return sgn(q); }
inline int sign(const Int& z) { return sgn(z); }

Rat rat_from_string(const std::string& text); // "7", "-3/4", "1/2"
Int int_from_string(const std::string& text);

std::string to_string(const Rat& q); // canonical "n" or "n/d"
std::string to_string(const Int& z);

// Nearest double; fine for display and for magnitudes within double range.
inline double to_double(const Rat& q) { return q.get_d(); }

} // namespace recur
