#pragma once

// Bounded machine checks of the structural theorems about D_m, shared by the
// CLI `verify` command and the acceptance suite. Each suite returns one
// check per slice or sample.

#include <cstdint>
#include <string>
#include <vector>

#include "dnil/report.hpp"

namespace dnil {

struct Check {
  std::string label;
  bool pass = false;
  Json detail = Json::object();
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;

  bool pass() const;
  std::size_t failures() const;
  Json to_json() const;
};

/// Nil index of x_i in D_m, both through wedge powers of phi_m(x_i) and
/// through normal forms of x_i^N, against (i+1)m - i.
SuiteResult verify_ritt(unsigned m, unsigned max_i);
/// Same check for a single i.
Check ritt_check(unsigned m, unsigned i);

/// rank(phi on the alpha basis) == basis size, 1 <= d <= max_d, w <= max_w.
SuiteResult verify_injectivity(unsigned m, unsigned max_d, unsigned max_w);
/// component_dimension == number of alpha_m-monomials.
SuiteResult verify_basis(unsigned m, unsigned max_d, unsigned max_w);
/// derivation_kernel_dimension == 0.
SuiteResult verify_constants(unsigned m, unsigned max_d, unsigned max_w);
/// witness_matrix is triangular with nonzero diagonal.
SuiteResult verify_triangular(unsigned m, unsigned max_d, unsigned max_w);
/// normal_form == normal_form_via_embedding on every monomial of the grid and
/// on `samples` random polynomials.
SuiteResult verify_agreement(unsigned m, unsigned max_d, unsigned max_w, unsigned samples, std::uint64_t seed);
/// Random nonzero elements of D_2 vanish at some N <= nil_bound with the
/// (N-1)-th power nonzero; cross-checked by wedge powers of phi_2.
SuiteResult verify_nilpotent(unsigned samples, std::uint64_t seed);
/// Random nonzero operators of D_2[D], same property.
SuiteResult verify_operator_nil(unsigned samples, std::uint64_t seed);
/// Minimum weight of a nonzero degree-D monomial of Lambda(V_2) equals
/// weight_lower_bound(D) and no monomial goes below it, 1 <= D <= max_degree.
SuiteResult verify_weight_floor(unsigned max_degree);
/// Corollary and Theorem 2 witness searches on random pairs; every witness is
/// recomputed and must be nonzero.
SuiteResult verify_witnesses(unsigned samples, std::uint64_t seed, unsigned k_cap, unsigned c_cap);

}  // namespace dnil
