#pragma once

#include <string_view>
#include <vector>

#include "dnil/diffpoly.hpp"

namespace dnil::detail {

struct ParsedTerm {
  Rational coefficient;
  DiffMonomial monomial;
  unsigned partial_power = 0;  // exponent of D, operator grammar only
};

/// Parses `poly := term (('+'|'-') term)*` with an optional leading '-'.
/// When `allow_partial` is set, the factor 'D' ('^' nat)? is accepted.
std::vector<ParsedTerm> parse_terms(std::string_view text, bool allow_partial);

}  // namespace dnil::detail
