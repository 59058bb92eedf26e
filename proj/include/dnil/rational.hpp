#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace dnil {

/// Exact rationals; mpq_class keeps values canonical (reduced, positive
/// denominator) as long as every constructed value is canonicalized.
using Rational = mpq_class;
using Integer = mpz_class;

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

/// Always "n/d", used by the structured report format.
std::string to_fraction_string(const Rational& q);

/// Parses "n", "-n" or "n/d"; throws InvalidInput on malformed text or d = 0.
Rational parse_rational(std::string_view text);

Integer binomial(unsigned long n, unsigned long k);

/// Global cap on intermediate support sizes (0 means unlimited).
void set_term_limit(std::size_t limit) noexcept;
std::size_t term_limit() noexcept;
/// Throws ResourceExhausted if `size` exceeds the current limit.
void check_term_limit(std::size_t size, const char* what);

}  // namespace dnil
