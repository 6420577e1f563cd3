#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orbirr {

/// Exact rational number. GMP keeps every arithmetic result canonical
/// (reduced, positive denominator); values built from a raw numerator and
/// denominator must go through make_rat.
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// text or a zero denominator.
Rat parse_rat(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& x);

bool is_integer(const Rat& x);

/// Integer value of x; throws std::domain_error if x is not an integer or
/// does not fit in a long.
long to_long(const Rat& x);

}  // namespace orbirr
