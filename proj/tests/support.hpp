#pragma once

// Helpers shared by the unit tests: short constructors and a dense exact
// rank routine that does not go through the library's echelon code.

#include <map>
#include <string>
#include <vector>

#include "dnil/diffpoly.hpp"
#include "dnil/grassmann.hpp"

namespace testing {

inline dnil::DiffPolynomial P(const std::string& text) { return dnil::parse_polynomial(text); }

inline dnil::DiffMonomial M(const std::string& text) {
  auto f = dnil::parse_polynomial(text);
  return f.terms().begin()->first;
}

inline dnil::GrassmannElement xi(unsigned level, unsigned order, unsigned m = 2) {
  return dnil::GrassmannElement::generator(m, dnil::BasisVector::xi(level, order));
}
inline dnil::GrassmannElement eta(unsigned level, unsigned order, unsigned m = 2) {
  return dnil::GrassmannElement::generator(m, dnil::BasisVector::eta(level, order));
}

/// Plain Gauss-Jordan on a dense row list.
inline std::size_t dense_rank(std::vector<std::vector<dnil::Rational>> rows) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      dnil::Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Coordinates of polynomials against a fixed monomial list.
inline std::vector<std::vector<dnil::Rational>> coordinates(const std::vector<dnil::DiffPolynomial>& polys,
                                                            const std::vector<dnil::DiffMonomial>& basis) {
  std::map<dnil::DiffMonomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
  std::vector<std::vector<dnil::Rational>> out;
  for (const auto& p : polys) {
    std::vector<dnil::Rational> row(basis.size());
    for (const auto& [mono, c] : p.terms()) row.at(index.at(mono)) = c;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace testing
