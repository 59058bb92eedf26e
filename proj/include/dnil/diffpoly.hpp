#pragma once

// Differential polynomials in one indeterminate: k{x} = Q[x_0, x_1, ...] with
// the derivation x_n' = x_{n+1}.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dnil/rational.hpp"

namespace dnil {

using Order = std::uint32_t;
using Exponent = std::uint32_t;

/// A monomial x_0^{p_0} x_1^{p_1} ... stored sparsely as (order, exponent)
/// pairs with ascending order and positive exponents. The empty monomial is 1.
class DiffMonomial {
 public:
  using Factor = std::pair<Order, Exponent>;

  DiffMonomial() = default;
  /// Merges repeated orders and drops zero exponents.
  explicit DiffMonomial(std::vector<Factor> factors);

  static DiffMonomial variable(Order i, Exponent e = 1);
  /// Monomial x_{k_0} x_{k_1} ... from a multiset of orders.
  static DiffMonomial from_orders(std::span<const Order> orders);

  Exponent exponent(Order i) const noexcept;
  unsigned degree() const noexcept;
  unsigned weight() const noexcept;
  bool is_unit() const noexcept { return factors_.empty(); }
  Order max_order() const noexcept { return factors_.empty() ? 0 : factors_.back().first; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }

  /// Orders with multiplicity in ascending order: k_0 <= k_1 <= ... .
  std::vector<Order> orders() const;

  /// True iff `divisor` divides this monomial.
  bool divisible_by(const DiffMonomial& divisor) const noexcept;
  /// this / divisor; requires divisible_by(divisor).
  DiffMonomial quotient(const DiffMonomial& divisor) const;

  friend DiffMonomial operator*(const DiffMonomial& a, const DiffMonomial& b);
  friend bool operator==(const DiffMonomial&, const DiffMonomial&) = default;
  /// Structural order for use as a container key; unrelated to compare_order.
  friend auto operator<=>(const DiffMonomial&, const DiffMonomial&) = default;

 private:
  std::vector<Factor> factors_;
};

enum class OrderComparison { p_larger, q_larger, equal };

/// The monomial order on k{x}: at the first index j with p_j != q_j, the
/// monomial with the smaller exponent is the larger one. Exponent vectors are
/// compared after padding with zeros.
OrderComparison compare_order(const DiffMonomial& p, const DiffMonomial& q) noexcept;

/// Comparator placing larger monomials (under compare_order) first.
struct DescendingOrder {
  bool operator()(const DiffMonomial& a, const DiffMonomial& b) const noexcept {
    return compare_order(a, b) == OrderComparison::p_larger;
  }
};

/// Levi's alpha_m condition: p_i + p_{i+1} < m for all i.
bool is_alpha(const DiffMonomial& monomial, unsigned m);

/// Sparse Q-linear combination of DiffMonomials.
class DiffPolynomial {
 public:
  using TermMap = std::map<DiffMonomial, Rational>;

  DiffPolynomial() = default;
  DiffPolynomial(const DiffMonomial& monomial, const Rational& coefficient = 1);

  static DiffPolynomial constant(const Rational& c);
  static DiffPolynomial variable(Order i, Exponent e = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  Rational coefficient(const DiffMonomial& monomial) const;
  Rational constant_term() const { return coefficient(DiffMonomial{}); }

  /// Adds c * monomial, erasing the term if it cancels.
  void add_term(const DiffMonomial& monomial, const Rational& c);

  /// Largest total degree / weight over the support (0 for the zero polynomial).
  unsigned max_weight() const noexcept;
  unsigned max_order() const noexcept;

  /// Splits into bihomogeneous parts keyed by (degree, weight).
  std::map<std::pair<unsigned, unsigned>, DiffPolynomial> slices() const;

  DiffPolynomial& operator+=(const DiffPolynomial& other);
  DiffPolynomial& operator-=(const DiffPolynomial& other);
  DiffPolynomial& operator*=(const Rational& c);

  friend DiffPolynomial operator+(DiffPolynomial a, const DiffPolynomial& b) { return a += b; }
  friend DiffPolynomial operator-(DiffPolynomial a, const DiffPolynomial& b) { return a -= b; }
  friend DiffPolynomial operator-(DiffPolynomial a) { return a *= Rational(-1); }
  friend DiffPolynomial operator*(DiffPolynomial a, const Rational& c) { return a *= c; }
  friend DiffPolynomial operator*(const Rational& c, DiffPolynomial a) { return a *= c; }
  friend DiffPolynomial operator*(const DiffPolynomial& a, const DiffPolynomial& b);
  friend bool operator==(const DiffPolynomial&, const DiffPolynomial&) = default;

 private:
  TermMap terms_;
};

DiffPolynomial multiply(const DiffPolynomial& f, const DiffPolynomial& g);

DiffPolynomial derive(const DiffPolynomial& f);
/// k-th derivative.
DiffPolynomial derive(const DiffPolynomial& f, unsigned k);

/// Maximum of the support under compare_order; throws EmptyInput on 0.
DiffMonomial leading_monomial(const DiffPolynomial& f);

/// All monomials of degree d and weight w, descending under compare_order.
std::vector<DiffMonomial> enumerate_monomials(unsigned d, unsigned w);
/// The alpha_m members of enumerate_monomials(d, w), same order.
std::vector<DiffMonomial> enumerate_alpha(unsigned m, unsigned d, unsigned w);

/// Text grammar: terms like "2*x0*x1 - 1/2*x3^2".
DiffPolynomial parse_polynomial(std::string_view text);
std::string to_string(const DiffMonomial& monomial);
/// Terms in descending compare_order, each with an explicit coefficient.
std::string to_string(const DiffPolynomial& f);

}  // namespace dnil
