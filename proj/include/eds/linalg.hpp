#pragma once

#include "eds/scalar.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace eds {

// Row echelon basis built incrementally by exact elimination.
template <class S>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  // Returns true when v is independent of the rows added so far.
  bool add(std::vector<S> v) {
    for (auto& [pivot, row] : rows_) {
      if (is_zero(v[pivot])) continue;
      S f = v[pivot];
      for (std::size_t j = pivot; j < dim_; ++j)
        if (!is_zero(row[j])) v[j] -= f * row[j];
    }
    std::size_t p = 0;
    while (p < dim_ && is_zero(v[p])) ++p;
    if (p == dim_) return false;
    S inv = S(1) / v[p];
    for (std::size_t j = p; j < dim_; ++j) v[j] *= inv;
    // keep rows fully reduced against the new pivot
    for (auto& [q, row] : rows_)
      if (!is_zero(row[p])) {
        S f = row[p];
        for (std::size_t j = p; j < dim_; ++j) row[j] -= f * v[j];
      }
    rows_.emplace_back(p, std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
  std::vector<std::pair<std::size_t, std::vector<S>>> rows_;
};

template <class S>
std::size_t rank_of(const std::vector<std::vector<S>>& rows, std::size_t dim) {
  EchelonBasis<S> b(dim);
  for (auto& r : rows) b.add(r);
  return b.rank();
}

}  // namespace eds
