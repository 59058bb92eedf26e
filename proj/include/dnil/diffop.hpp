#pragma once

// Differential operators sum a_i D^i over (D_2)_id, the algebra D_2 with an
// adjoined unit, with the commutation rule D c = c D + c'.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dnil/diffpoly.hpp"

namespace dnil {

/// scalar * 1 + poly, with poly kept in normal form modulo [x^2].
class OperatorCoefficient {
 public:
  OperatorCoefficient() = default;
  /// Reduces `poly` modulo [x^2]; `poly` must have no constant term.
  OperatorCoefficient(const Rational& scalar, const DiffPolynomial& poly);

  static OperatorCoefficient scalar_only(const Rational& s) { return {s, {}}; }
  static OperatorCoefficient element(const DiffPolynomial& poly) { return {0, poly}; }

  const Rational& scalar() const noexcept { return scalar_; }
  const DiffPolynomial& poly() const noexcept { return poly_; }
  bool is_zero() const noexcept { return scalar_ == 0 && poly_.is_zero(); }
  /// Max weight of the D_2 part.
  unsigned weight() const noexcept { return poly_.max_weight(); }

  OperatorCoefficient& operator+=(const OperatorCoefficient& other);
  OperatorCoefficient& operator-=(const OperatorCoefficient& other);
  OperatorCoefficient& operator*=(const Rational& c);
  friend OperatorCoefficient operator+(OperatorCoefficient a, const OperatorCoefficient& b) { return a += b; }
  friend OperatorCoefficient operator-(OperatorCoefficient a, const OperatorCoefficient& b) { return a -= b; }
  friend OperatorCoefficient operator*(const OperatorCoefficient& a, const OperatorCoefficient& b);
  friend bool operator==(const OperatorCoefficient&, const OperatorCoefficient&) = default;

 private:
  struct Reduced {};
  OperatorCoefficient(Reduced, Rational scalar, DiffPolynomial poly)
      : scalar_(std::move(scalar)), poly_(std::move(poly)) {}

  friend OperatorCoefficient derive(const OperatorCoefficient& c);

  Rational scalar_;
  DiffPolynomial poly_;
};

OperatorCoefficient derive(const OperatorCoefficient& c);

class DiffOperator {
 public:
  using CoefficientMap = std::map<unsigned, OperatorCoefficient>;

  DiffOperator() = default;

  static DiffOperator identity();
  /// coefficient * D^order
  static DiffOperator term(const OperatorCoefficient& coefficient, unsigned order = 0);
  static DiffOperator element(const DiffPolynomial& poly, unsigned order = 0);

  bool is_zero() const noexcept { return coefficients_.empty(); }
  const CoefficientMap& coefficients() const noexcept { return coefficients_; }
  /// Highest D-order; requires a nonzero operator.
  unsigned degree() const;
  OperatorCoefficient coefficient(unsigned order) const;
  /// True iff every scalar part is zero, i.e. the operator lies in D_2[D].
  bool in_d2() const noexcept;
  /// Max weight over the coefficients' D_2 parts.
  unsigned max_weight() const noexcept;

  void add_term(unsigned order, const OperatorCoefficient& c);

  DiffOperator& operator+=(const DiffOperator& other);
  DiffOperator& operator-=(const DiffOperator& other);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
  friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

 private:
  CoefficientMap coefficients_;
};

DiffOperator op_multiply(const DiffOperator& a, const DiffOperator& b);
DiffOperator op_power(const DiffOperator& a, unsigned n);
DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);
/// Coefficient at the highest D-order; throws EmptyInput on 0.
OperatorCoefficient leading_coefficient(const DiffOperator& a);

/// w_a + n_a + 2: a power at which a in D_2[D] is guaranteed to vanish.
unsigned nil_bound(const DiffOperator& a);
/// Least N with a^N = 0.
unsigned nil_index_operator(const DiffOperator& a);

struct CorollaryWitness {
  unsigned k = 0;
  /// Normal form of b^{(k)} a, nonzero.
  DiffPolynomial product;
};

struct Theorem2Witness {
  DiffPolynomial c;  // x_j
  unsigned j = 0;
  unsigned k = 0;
  DiffOperator product;  // [(c D)^k, a] b, nonzero
};

struct WitnessExhausted {
  unsigned k_cap = 0;
  unsigned c_cap = 0;
  std::vector<unsigned> ks_tried;
};

/// Least k in [min_k, cap] with b^{(k)} a != 0 in D_2, or nullopt.
/// Throws InvalidInput if a or b is 0 in D_2.
std::optional<CorollaryWitness> witness_corollary(const DiffPolynomial& a, const DiffPolynomial& b,
                                                  unsigned cap, unsigned min_k = 0);

/// Searches k >= 1 (with (a_n)^{(k)} b_m != 0) and then c = x_j, j <= c_cap,
/// for a nonzero [(c D)^k, a] b. Throws InvalidInput unless a, b are nonzero
/// elements of D_2[D].
std::variant<Theorem2Witness, WitnessExhausted> witness_theorem2(const DiffOperator& a, const DiffOperator& b,
                                                                  unsigned k_cap, unsigned c_cap);

/// True iff the stored product equals the recomputed one and is nonzero.
bool verify_witness(const DiffPolynomial& a, const DiffPolynomial& b, const CorollaryWitness& w);
bool verify_witness(const DiffOperator& a, const DiffOperator& b, const Theorem2Witness& w);

/// Polynomial grammar extended with the factor 'D' ('^' nat)?, e.g.
/// "x0*D^2 + x1*D + 1". Coefficients are reduced modulo [x^2].
DiffOperator parse_operator(std::string_view text);
std::string to_string(const OperatorCoefficient& c);
std::string to_string(const DiffOperator& a);

}  // namespace dnil
