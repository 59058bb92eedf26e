#include "dnil/rational.hpp"

#include <atomic>
#include <cctype>

#include "dnil/errors.hpp"

namespace dnil {

namespace {

std::atomic<std::size_t>& limit_slot() {
  static std::atomic<std::size_t> slot{5'000'000};
  return slot;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw InvalidInput("rational with zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void set_term_limit(std::size_t limit) noexcept { limit_slot().store(limit); }

std::size_t term_limit() noexcept { return limit_slot().load(); }

void check_term_limit(std::size_t size, const char* what) {
  std::size_t limit = term_limit();
  if (limit != 0 && size > limit) {
    throw ResourceExhausted(std::string(what) + ": support of " + std::to_string(size) +
                            " terms exceeds --max-terms " + std::to_string(limit));
  }
}

}  // namespace dnil
