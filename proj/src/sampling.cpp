#include "dnil/sampling.hpp"

#include <algorithm>
#include <vector>

namespace dnil {

namespace {

const std::vector<DiffMonomial>& alpha2_pool() {
  static const std::vector<DiffMonomial> pool = [] {
    std::vector<DiffMonomial> out;
    for (unsigned d = 1; d <= 3; ++d) {
      for (unsigned w = 0; w <= 4; ++w) {
        for (auto& mono : enumerate_alpha(2, d, w)) out.push_back(std::move(mono));
      }
    }
    return out;
  }();
  return pool;
}

}  // namespace

Rational Sampler::nonzero_coefficient(int bound) {
  std::int64_t v = between(1, bound);
  return Rational(below(2) == 0 ? v : -v);
}

DiffPolynomial Sampler::d2_element() {
  const auto& pool = alpha2_pool();
  std::vector<std::size_t> picks;
  std::size_t count = static_cast<std::size_t>(between(1, 3));
  while (picks.size() < count) {
    std::size_t idx = below(pool.size());
    if (std::find(picks.begin(), picks.end(), idx) == picks.end()) picks.push_back(idx);
  }
  DiffPolynomial out;
  for (std::size_t idx : picks) out.add_term(pool[idx], nonzero_coefficient(2));
  return out;
}

DiffOperator Sampler::d2_operator() {
  DiffOperator out;
  unsigned count = static_cast<unsigned>(between(1, 2));
  std::vector<unsigned> orders;
  while (orders.size() < count) {
    unsigned order = static_cast<unsigned>(below(4));
    if (std::find(orders.begin(), orders.end(), order) == orders.end()) orders.push_back(order);
  }
  for (unsigned order : orders) out.add_term(order, OperatorCoefficient::element(d2_element()));
  return out;
}

DiffPolynomial Sampler::polynomial(unsigned max_degree, unsigned max_weight, unsigned max_terms) {
  DiffPolynomial out;
  unsigned count = static_cast<unsigned>(between(1, max_terms));
  for (unsigned t = 0; t < count; ++t) {
    unsigned d = static_cast<unsigned>(between(1, max_degree));
    unsigned w = static_cast<unsigned>(between(0, max_weight));
    auto monomials = enumerate_monomials(d, w);
    out.add_term(monomials[below(monomials.size())], nonzero_coefficient(3));
  }
  return out;
}

}  // namespace dnil
