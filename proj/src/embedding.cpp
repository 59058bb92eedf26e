#include "dnil/embedding.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

#include "dnil/errors.hpp"
#include "dnil/linalg.hpp"

namespace dnil {

namespace {

void require_m(unsigned m) {
  if (m < 2) throw InvalidParameter("m must be at least 2");
}

GrassmannElement compute_generator(unsigned m, unsigned i) {
  GrassmannElement out(m);
  for (unsigned level = 0; level + 2 <= m; ++level) {
    for (unsigned j = 0; j <= i; ++j) {
      out += GrassmannElement::product(m, {BasisVector::xi(level, j), BasisVector::eta(level, i - j)},
                                       Rational(binomial(i, j)));
    }
  }
  return out;
}

}  // namespace

GrassmannElement phi_generator(unsigned m, unsigned i) {
  require_m(m);
  static std::shared_mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, GrassmannElement> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find({m, i}); it != cache.end()) return it->second;
  }
  GrassmannElement value = compute_generator(m, i);
  std::unique_lock lock(mutex);
  return cache.try_emplace({m, i}, std::move(value)).first->second;
}

GrassmannElement phi(unsigned m, const DiffMonomial& monomial) {
  require_m(m);
  if (monomial.is_unit()) throw InvalidInput("phi is defined on k_+{x}: unit monomial");
  std::optional<GrassmannElement> acc;
  for (Order k : monomial.orders()) {
    GrassmannElement g = phi_generator(m, k);
    acc = acc ? wedge(*acc, g) : std::move(g);
    if (acc->is_zero()) break;
  }
  return std::move(*acc);
}

GrassmannElement phi(unsigned m, const DiffPolynomial& f) {
  require_m(m);
  if (f.constant_term() != 0) throw InvalidInput("phi is defined on k_+{x}: nonzero constant term");
  GrassmannElement out(m);
  for (const auto& [mono, c] : f.terms()) out += c * phi(m, mono);
  return out;
}

std::vector<WitnessAssignment> witness_assignments(unsigned m, const DiffMonomial& monomial) {
  require_m(m);
  if (monomial.is_unit()) throw EmptyInput("mu_witness of the unit monomial");
  if (!is_alpha(monomial, m)) throw InvalidInput("mu_witness requires an alpha_m-monomial");
  std::vector<WitnessAssignment> out;
  std::vector<Order> orders = monomial.orders();
  for (unsigned j = 0; j < orders.size(); ++j) {
    unsigned q = j / (m - 1);
    unsigned r = j % (m - 1);
    if (orders[j] < q) throw InternalError("alpha_m lower bound k_j >= 2 floor(j/(m-1)) violated");
    out.push_back({j, q, r, BasisVector::xi(r, orders[j] - q), BasisVector::eta(r, q)});
  }
  return out;
}

GrassmannMonomial mu_witness(unsigned m, const DiffMonomial& monomial) {
  std::vector<BasisVector> vectors;
  for (const auto& a : witness_assignments(m, monomial)) {
    vectors.push_back(a.xi);
    vectors.push_back(a.eta);
  }
  auto canon = GrassmannMonomial::canonicalize(std::move(vectors));
  if (!canon) throw InternalError("mu_witness produced a repeated basis vector");
  return canon->first;
}

Rational coefficient_of(const GrassmannElement& u, const GrassmannMonomial& monomial) {
  return u.coefficient_of(monomial);
}

bool WitnessMatrix::is_triangular() const {
  for (std::size_t r = 0; r < basis.size(); ++r) {
    if (entries[r][r] == 0) return false;
    for (std::size_t c = 0; c < r; ++c) {
      if (entries[r][c] != 0) return false;
    }
  }
  return true;
}

WitnessMatrix witness_matrix(unsigned m, unsigned d, unsigned w) {
  require_m(m);
  WitnessMatrix out;
  if (d == 0) return out;  // D_m has no constants
  out.basis = enumerate_alpha(m, d, w);
  std::reverse(out.basis.begin(), out.basis.end());  // ascending
  std::vector<GrassmannElement> images;
  std::vector<GrassmannMonomial> witnesses;
  for (const auto& mono : out.basis) {
    images.push_back(phi(m, mono));
    witnesses.push_back(mu_witness(m, mono));
  }
  out.entries.assign(out.basis.size(), std::vector<Rational>(out.basis.size()));
  for (std::size_t r = 0; r < out.basis.size(); ++r) {
    for (std::size_t c = 0; c < out.basis.size(); ++c) {
      out.entries[r][c] = images[c].coefficient_of(witnesses[r]);
    }
  }
  return out;
}

RankResult injectivity_rank(unsigned m, unsigned d, unsigned w) {
  require_m(m);
  RankResult out;
  if (d == 0) return out;
  auto basis = enumerate_alpha(m, d, w);
  out.basis_count = basis.size();
  SparseEchelon<GrassmannMonomial> echelon;
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    GrassmannElement image = phi(m, basis[idx]);
    SparseEchelon<GrassmannMonomial>::Vector v(image.terms().begin(), image.terms().end());
    echelon.insert(std::move(v), idx);
  }
  out.rank = echelon.rank();
  return out;
}

}  // namespace dnil
