#pragma once

// The monomorphism phi_m : D_m -> Lambda_0(V_m), x -> sum_k xi_0^k ^ eta_0^k,
// and the witness monomials that prove it is injective.

#include <cstddef>
#include <vector>

#include "dnil/diffpoly.hpp"
#include "dnil/grassmann.hpp"

namespace dnil {

/// phi_m(x_i) = sum_{l <= m-2} sum_{j <= i} binom(i, j) xi_j^l ^ eta_{i-j}^l.
/// Memoized per (m, i); safe to call concurrently.
GrassmannElement phi_generator(unsigned m, unsigned i);

GrassmannElement phi(unsigned m, const DiffMonomial& monomial);
/// Throws InvalidInput if f has a nonzero constant term.
GrassmannElement phi(unsigned m, const DiffPolynomial& f);

/// The pair assigned to position j of an alpha_m-monomial x_{k_0} ... x_{k_n}
/// (k_0 <= ... <= k_n): xi^r_{k_j - q} ^ eta^r_q with j = q (m-1) + r.
struct WitnessAssignment {
  unsigned position;
  unsigned quotient;
  unsigned remainder;
  BasisVector xi;
  BasisVector eta;
};

std::vector<WitnessAssignment> witness_assignments(unsigned m, const DiffMonomial& monomial);

/// Product of the assigned pairs. Throws InvalidInput if the monomial is not
/// alpha_m, EmptyInput for the unit monomial, InternalError if two assigned
/// vectors coincide.
GrassmannMonomial mu_witness(unsigned m, const DiffMonomial& monomial);

Rational coefficient_of(const GrassmannElement& u, const GrassmannMonomial& monomial);

struct WitnessMatrix {
  /// enumerate_alpha(m, d, w) sorted ascending under compare_order.
  std::vector<DiffMonomial> basis;
  /// entries[r][c] = coefficient of mu_witness(basis[r]) in phi(basis[c]).
  std::vector<std::vector<Rational>> entries;

  /// Zero whenever the column monomial is smaller than the row monomial, and
  /// nonzero on the diagonal.
  bool is_triangular() const;
};

WitnessMatrix witness_matrix(unsigned m, unsigned d, unsigned w);

struct RankResult {
  std::size_t rank = 0;
  std::size_t basis_count = 0;
};

/// Rank of phi on the alpha_m basis of the (d, w) component.
RankResult injectivity_rank(unsigned m, unsigned d, unsigned w);

}  // namespace dnil
