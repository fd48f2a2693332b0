#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace modinv {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "num/den" form; the denominator is always printed, so 3 is "3/1".
std::string to_string(const Rational& r);

/// Accepts "num/den" or a bare integer. Throws std::invalid_argument on junk
/// or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Exact k-th root of a positive rational, if it exists.
bool exact_root(const Rational& value, unsigned k, Rational& root);

/// True when |r| is 2^e for some integer e (positive or negative).
bool is_power_of_two(const Rational& r, long* exponent = nullptr);

Rational pow(const Rational& base, long exponent);

}  // namespace modinv
