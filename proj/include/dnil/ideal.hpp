#pragma once

// Linear-algebra oracles for the differential ideal [x^m] in k{x} and the
// quotient D_m = k_+{x} / [x^m].
//
// Everything splits along (degree, weight) because x^m and the derivation are
// bihomogeneous. The (d, w) slice of [x^m] is spanned by the products
// M * (x^m)^{(k)} with deg M = d - m and w(M) = w - k.

#include <cstddef>
#include <optional>
#include <vector>

#include "dnil/diffpoly.hpp"

namespace dnil {

/// (x^m)^{(k)}, memoized; the reference stays valid for the program's lifetime.
const DiffPolynomial& generator_derivative(unsigned m, unsigned k);

struct IdealSpanElement {
  DiffMonomial cofactor;
  unsigned k = 0;
  DiffPolynomial value;  // cofactor * (x^m)^{(k)}
};

std::vector<IdealSpanElement> ideal_spanning_set(unsigned m, unsigned d, unsigned w);

struct CertificateTerm {
  DiffMonomial cofactor;
  unsigned k = 0;
  Rational coefficient;
};

/// f = sum coefficient * cofactor * (x^m)^{(k)}.
struct MembershipCertificate {
  unsigned m = 2;
  std::vector<CertificateTerm> terms;

  DiffPolynomial expand() const;
};

struct MembershipResult {
  bool member = false;
  std::optional<MembershipCertificate> certificate;
};

/// Decides f in [x^m] slice by slice. Members come with a certificate that is
/// re-expanded and checked before returning. Throws InvalidInput on a nonzero
/// constant term.
MembershipResult membership(const DiffPolynomial& f, unsigned m);

/// A polynomial supported on alpha_m-monomials.
class NormalForm {
 public:
  /// Throws InvalidInput if some term is not alpha_m.
  NormalForm(unsigned m, DiffPolynomial poly);

  unsigned m() const noexcept { return m_; }
  const DiffPolynomial& poly() const noexcept { return poly_; }
  bool is_zero() const noexcept { return poly_.is_zero(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  unsigned m_;
  DiffPolynomial poly_;
};

/// The alpha_m-combination congruent to f modulo [x^m]. Each non-alpha term,
/// taken largest first under compare_order, is cleared with the spanning row
/// M * (x^m)^{(k)} whose leading monomial it is.
NormalForm normal_form(const DiffPolynomial& f, unsigned m);

/// Normal form computed in Grassmann coordinates: solves
/// sum c_a phi(a) = phi(f) over the alpha_m basis of each slice.
NormalForm normal_form_via_embedding(const DiffPolynomial& f, unsigned m);

/// dim of the (d, w) slice of D_m: #monomials - rank(spanning set).
std::size_t component_dimension(unsigned m, unsigned d, unsigned w);

/// Rank of the full spanning set of the (d, w) slice of [x^m].
std::size_t ideal_slice_rank(unsigned m, unsigned d, unsigned w);

/// Kernel dimension of the derivation D_m(d, w) -> D_m(d, w + 1), d >= 1.
std::size_t derivation_kernel_dimension(unsigned m, unsigned d, unsigned w);

/// Smallest N <= cap with f^N = 0 in D_m, or nullopt if none. Throws
/// InvalidInput when f is already 0 in D_m.
std::optional<unsigned> nil_index_element(const DiffPolynomial& f, unsigned m, unsigned cap);

/// Least weight of an alpha_m-monomial of degree d: sum_j 2 floor(j / (m-1)).
/// Every weight at or above it is attained.
unsigned min_alpha_weight(unsigned m, unsigned d);

}  // namespace dnil
