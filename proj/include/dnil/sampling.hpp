#pragma once

// Seeded random elements for the property sweeps. The generator is
// mt19937_64 and draws are reduced with plain modulo, so a seed gives the same
// samples on every platform.

#include <cstdint>
#include <random>

#include "dnil/diffop.hpp"
#include "dnil/diffpoly.hpp"

namespace dnil {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Nonzero element of D_2: 1-3 distinct alpha_2-monomials of degree 1..3 and
  /// weight <= 4, coefficients in {-2, -1, 1, 2}.
  DiffPolynomial d2_element();

  /// Nonzero operator in D_2[D]: 1-2 D-orders in 0..3, each with a d2_element
  /// coefficient.
  DiffOperator d2_operator();

  /// Arbitrary polynomial of k_+{x}: up to `max_terms` monomials with degree
  /// 1..max_degree and weight <= max_weight, coefficients in {-3..3} \ {0}.
  DiffPolynomial polynomial(unsigned max_degree, unsigned max_weight, unsigned max_terms);

 private:
  Rational nonzero_coefficient(int bound);

  std::mt19937_64 rng_;
};

}  // namespace dnil
