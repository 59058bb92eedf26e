#pragma once

// Exact sparse Gaussian elimination over Q.
//
// Rows are kept in semi-echelon form: every stored row has a distinct leading
// column (its first nonzero under `Less`), normalized to 1. Reducing a vector
// clears every pivot column in ascending column order; the remainder is unique
// for the row space. Optionally each row remembers which inserted vectors it
// is a combination of, so reductions can report explicit coefficients.

#include <cstddef>
#include <functional>
#include <map>
#include <utility>

#include "dnil/rational.hpp"

namespace dnil {

template <class Key, class Less = std::less<Key>>
class SparseEchelon {
 public:
  using Vector = std::map<Key, Rational, Less>;
  using Label = std::size_t;
  using Combination = std::map<Label, Rational>;

  struct Reduction {
    Vector remainder;
    /// input = sum(combination[l] * inserted[l]) + remainder
    Combination combination;
  };

  explicit SparseEchelon(bool track_provenance = false) : track_(track_provenance) {}

  /// Reduces `v` and stores the remainder as a new row if nonzero.
  /// Returns true when the rank increased.
  bool insert(Vector v, Label label) {
    Combination prov;
    if (track_) prov.emplace(label, Rational(1));
    reduce_in_place(v, track_ ? &prov : nullptr, -1);
    if (v.empty()) return false;
    Key pivot = v.begin()->first;
    Rational inv = 1 / Rational(v.begin()->second);
    for (auto& [k, c] : v) c *= inv;
    for (auto& [l, c] : prov) c *= inv;
    rows_.emplace(std::move(pivot), Row{std::move(v), std::move(prov)});
    return true;
  }

  Reduction reduce(Vector v) const {
    Reduction out;
    reduce_in_place(v, track_ ? &out.combination : nullptr, 1);
    out.remainder = std::move(v);
    return out;
  }

  bool in_span(Vector v) const { return reduce(std::move(v)).remainder.empty(); }

  std::size_t rank() const noexcept { return rows_.size(); }

  template <class F>
  void for_each_pivot(F&& f) const {
    for (const auto& [pivot, row] : rows_) f(pivot);
  }

 private:
  struct Row {
    Vector entries;
    Combination provenance;
  };

  // Clears pivot columns of v. `sign` selects whether the accumulated
  // combination describes v in terms of rows (+1) or the negated form used
  // while building a new row's provenance (-1).
  void reduce_in_place(Vector& v, Combination* combination, int sign) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row_it = rows_.find(it->first);
      if (row_it == rows_.end()) {
        ++it;
        continue;
      }
      Key key = it->first;
      Rational factor = it->second;
      for (const auto& [k, c] : row_it->second.entries) {
        auto [slot, inserted] = v.try_emplace(k, 0);
        slot->second -= factor * c;
        if (slot->second == 0) v.erase(slot);
      }
      if (combination != nullptr) {
        for (const auto& [l, c] : row_it->second.provenance) {
          Rational delta = factor * c;
          auto [slot, inserted] = combination->try_emplace(l, 0);
          if (sign > 0) {
            slot->second += delta;
          } else {
            slot->second -= delta;
          }
          if (slot->second == 0) combination->erase(slot);
        }
      }
      it = v.upper_bound(key);
    }
  }

  bool track_;
  std::map<Key, Row, Less> rows_;
};

}  // namespace dnil
