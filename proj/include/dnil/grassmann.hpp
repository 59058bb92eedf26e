#pragma once

// The Grassmann algebra Lambda(V_m) without unit, over the generators
// xi_i^k, eta_i^k (level k = 0..m-2, order i >= 0), with the even derivation
// that raises the order of one generator at a time.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dnil/rational.hpp"

namespace dnil {

enum class Kind : std::uint8_t { xi = 0, eta = 1 };

struct BasisVector {
  Kind kind = Kind::xi;
  unsigned level = 0;
  unsigned order = 0;

  static BasisVector xi(unsigned level, unsigned order) { return {Kind::xi, level, order}; }
  static BasisVector eta(unsigned level, unsigned order) { return {Kind::eta, level, order}; }

  /// Canonical generator order: (level, order, kind) with xi < eta.
  friend std::strong_ordering operator<=>(const BasisVector& a, const BasisVector& b) noexcept {
    if (auto c = a.level <=> b.level; c != 0) return c;
    if (auto c = a.order <=> b.order; c != 0) return c;
    return a.kind <=> b.kind;
  }
  friend bool operator==(const BasisVector&, const BasisVector&) = default;
};

/// A wedge product of distinct basis vectors kept in ascending canonical order.
/// The empty product is not a valid monomial (the algebra has no unit).
class GrassmannMonomial {
 public:
  GrassmannMonomial() = default;

  /// Sorts `vectors` and returns the monomial together with the sign of the
  /// sorting permutation, or nullopt if a vector repeats.
  static std::optional<std::pair<GrassmannMonomial, int>> canonicalize(std::vector<BasisVector> vectors);

  const std::vector<BasisVector>& vectors() const noexcept { return vectors_; }
  std::size_t degree() const noexcept { return vectors_.size(); }
  unsigned weight() const noexcept;
  bool empty() const noexcept { return vectors_.empty(); }

  friend bool operator==(const GrassmannMonomial&, const GrassmannMonomial&) = default;
  friend auto operator<=>(const GrassmannMonomial&, const GrassmannMonomial&) = default;

 private:
  std::vector<BasisVector> vectors_;
};

/// Product of two monomials: nullopt if they share a vector, otherwise the
/// merged monomial and the sign (-1)^{inversions}.
std::optional<std::pair<GrassmannMonomial, int>> wedge(const GrassmannMonomial& a,
                                                        const GrassmannMonomial& b);

class GrassmannElement {
 public:
  using TermMap = std::map<GrassmannMonomial, Rational>;

  /// The zero element of Lambda(V_m).
  explicit GrassmannElement(unsigned m);

  static GrassmannElement generator(unsigned m, const BasisVector& v);
  /// coefficient * v_1 ^ ... ^ v_d in the given (not necessarily sorted) order.
  static GrassmannElement product(unsigned m, const std::vector<BasisVector>& vectors,
                                  const Rational& coefficient = 1);

  unsigned m() const noexcept { return m_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  /// Stored coefficient of a canonical monomial, 0 if absent.
  Rational coefficient_of(const GrassmannMonomial& monomial) const;
  void add_term(const GrassmannMonomial& monomial, const Rational& c);

  GrassmannElement& operator+=(const GrassmannElement& other);
  GrassmannElement& operator-=(const GrassmannElement& other);
  GrassmannElement& operator*=(const Rational& c);
  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(const Rational& c, GrassmannElement a) { return a *= c; }
  friend bool operator==(const GrassmannElement&, const GrassmannElement&) = default;

 private:
  void check_vector(const BasisVector& v) const;

  unsigned m_;
  TermMap terms_;
};

GrassmannElement wedge(const GrassmannElement& u, const GrassmannElement& v);
/// The derivation raising each generator's order by one (no Koszul sign).
GrassmannElement derive(const GrassmannElement& u);
/// n-fold wedge power, n >= 1; stops as soon as a partial product vanishes.
GrassmannElement power(const GrassmannElement& u, unsigned n);
/// Least N <= cap with u^N = 0, or nullopt.
std::optional<unsigned> nil_index(const GrassmannElement& u, unsigned cap);
bool is_even(const GrassmannElement& u);

/// d(d-1) with d = floor(D/2): lower bound on the weight of a nonzero degree-D
/// monomial of Lambda(V_2). Only m = 2 is supported.
unsigned weight_lower_bound(unsigned degree, unsigned m);

std::string to_string(const BasisVector& v);
std::string to_string(const GrassmannMonomial& monomial);
std::string to_string(const GrassmannElement& u);

}  // namespace dnil
