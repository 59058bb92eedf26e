#include <cctype>
#include <string>

#include "dnil/detail/term_parser.hpp"
#include "dnil/errors.hpp"

namespace dnil {
namespace detail {

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, bool allow_partial) : text_(text), allow_partial_(allow_partial) {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> terms;
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    terms.push_back(term(negative));
    while (true) {
      skip_space();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  std::string nat(const char* what) {
    skip_space();
    if (peek() == '-') fail(std::string("negative ") + what);
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned small_nat(const char* what) {
    std::size_t start = pos_;
    std::string digits = nat(what);
    if (digits.size() > 6) {
      pos_ = start;
      fail(std::string(what) + " too large");
    }
    return static_cast<unsigned>(std::stoul(digits));
  }

  // Multiplies one factor into `out`.
  void factor(ParsedTerm& out) {
    skip_space();
    char c = peek();
    if (c == 'x') {
      ++pos_;
      Order order = small_nat("derivative order");
      Exponent exp = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        exp = small_nat("exponent");
      }
      out.monomial = out.monomial * DiffMonomial::variable(order, exp);
    } else if (c == 'D' && allow_partial_) {
      ++pos_;
      unsigned exp = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        exp = small_nat("exponent");
      }
      out.partial_power += exp;
    } else {
      fail(allow_partial_ ? "expected factor 'x<n>' or 'D'" : "expected factor 'x<n>'");
    }
  }

  ParsedTerm term(bool negative) {
    ParsedTerm out{Rational(1), DiffMonomial{}, 0};
    skip_space();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      Integer num(nat("coefficient"));
      Integer den(1);
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed rational");
        den = Integer(nat("denominator"));
        if (den == 0) {
          pos_ = start;
          fail("malformed rational: zero denominator");
        }
      }
      out.coefficient = Rational(num, den);
      out.coefficient.canonicalize();
    } else {
      factor(out);
    }
    while (true) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      factor(out);
    }
    if (negative) out.coefficient = -out.coefficient;
    return out;
  }

  std::string_view text_;
  bool allow_partial_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text, bool allow_partial) {
  return TermParser(text, allow_partial).parse();
}

}  // namespace detail

DiffPolynomial parse_polynomial(std::string_view text) {
  DiffPolynomial out;
  for (const auto& t : detail::parse_terms(text, false)) out.add_term(t.monomial, t.coefficient);
  return out;
}

}  // namespace dnil
