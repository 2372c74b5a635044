#pragma once

#include <gmpxx.h>

#include <string>

namespace canstrip {

// Exact arithmetic substrate. GMP does the heavy lifting; these aliases keep
// the domain code readable.
using Int = mpz_class;
using Rat = mpq_class;

/// Parses "num", "-num" or "num/den" (canonicalised, den > 0 enforced).
Rat parse_rational(const std::string& text);

/// Canonical decimal-free form: "7/3", "-2", "0".
std::string to_string(const Rat& q);
std::string to_string(const Int& n);

Int factorial(unsigned long n);

/// Bit length of |n| (0 for n = 0).
size_t bit_length(const Int& n);

}  // namespace canstrip
