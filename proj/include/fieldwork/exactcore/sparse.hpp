#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/matrix.hpp"
#include "fieldwork/exactcore/rational.hpp"

namespace fieldwork {

/// Coordinates by basis index; absent entries are zero and stored entries
/// are never zero.
using SparseVector = std::map<std::size_t, Rational>;

inline void add_scaled(SparseVector& v, const SparseVector& w, const Rational& s) {
  if (s.is_zero()) return;
  for (const auto& [i, x] : w) {
    auto [it, inserted] = v.emplace(i, s * x);
    if (inserted) continue;
    it->second += s * x;
    if (it->second.is_zero()) v.erase(it);
  }
}

/// Incremental Gaussian elimination over sparse vectors. Each stored pivot
/// row has leading coefficient 1 at its leading index.
class SparseEliminator {
 public:
  /// Returns true when v is independent of the vectors added so far.
  bool add(SparseVector v) {
    while (!v.empty()) {
      const std::size_t lead = v.begin()->first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        const Rational inv = Rational(1) / v.begin()->second;
        for (auto& [i, x] : v) x *= inv;
        pivots_.emplace(lead, std::move(v));
        return true;
      }
      add_scaled(v, it->second, -v.begin()->second);
    }
    return false;
  }

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseVector> pivots_;
};

inline std::size_t sparse_rank(const std::vector<SparseVector>& vectors) {
  SparseEliminator e;
  for (const auto& v : vectors) e.add(v);
  return e.rank();
}

/// Linear map stored column by column: column j is the image of basis vector j.
struct SparseMap {
  std::size_t rows = 0;
  std::vector<SparseVector> columns;

  std::size_t cols() const noexcept { return columns.size(); }

  SparseVector apply(const SparseVector& v) const {
    SparseVector out;
    for (const auto& [j, x] : v) add_scaled(out, columns.at(j), x);
    return out;
  }

  Matrix dense() const {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      for (const auto& [i, x] : columns[j]) m(i, j) = x;
    }
    return m;
  }
};

/// Chain complex C_0 <- C_1 <- ... with sparse differentials; differential(i)
/// maps C_i to C_{i-1}.
class SparseChainComplex {
 public:
  SparseChainComplex(std::vector<std::size_t> dims, std::vector<SparseMap> differentials)
      : dims_(std::move(dims)), d_(std::move(differentials)) {
    if (dims_.empty()) throw ValidationError("chain complex needs at least one group");
    if (d_.size() + 1 != dims_.size()) throw ValidationError("chain complex: wrong number of differentials");
    for (std::size_t i = 1; i < dims_.size(); ++i) {
      if (d_[i - 1].rows != dims_[i - 1] || d_[i - 1].cols() != dims_[i]) {
        throw ValidationError("chain complex: d_" + std::to_string(i) + " has the wrong shape");
      }
    }
  }

  std::size_t length() const noexcept { return dims_.size(); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const SparseMap& differential(std::size_t i) const { return d_.at(i - 1); }

  /// Throws InternalError on the first composite d_i d_{i+1} that is nonzero.
  void check_square_zero() const {
    for (std::size_t i = 1; i + 1 < dims_.size(); ++i) {
      for (const auto& col : d_[i].columns) {
        if (!d_[i - 1].apply(col).empty()) {
          throw InternalError("d_" + std::to_string(i) + " d_" + std::to_string(i + 1) + " != 0");
        }
      }
    }
  }

  std::vector<std::size_t> homology_dims() const {
    std::vector<std::size_t> ranks(dims_.size() + 1, 0);
    for (std::size_t i = 1; i < dims_.size(); ++i) ranks[i] = sparse_rank(d_[i - 1].columns);
    std::vector<std::size_t> out(dims_.size());
    for (std::size_t i = 0; i < dims_.size(); ++i) out[i] = dims_[i] - ranks[i] - ranks[i + 1];
    return out;
  }

 private:
  std::vector<std::size_t> dims_;
  std::vector<SparseMap> d_;
};

}  // namespace fieldwork
