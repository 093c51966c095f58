#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/linalg.hpp"
#include "fieldwork/exactcore/matrix.hpp"

namespace fieldwork {

/// Bounded chain complex C_0 <- C_1 <- ... <- C_top over the rationals.
///
/// `differential(i)` is d_i : C_i -> C_{i-1} for 1 <= i <= top, stored as a
/// dims[i-1] x dims[i] matrix. Construction checks the shapes and that every
/// composite d_{i} d_{i+1} vanishes exactly; a violation is an InternalError
/// because it always means the code that built the complex is wrong.
class ChainComplex {
 public:
  ChainComplex(std::vector<std::size_t> dims, std::vector<Matrix> differentials)
      : dims_(std::move(dims)), differentials_(std::move(differentials)) {
    if (dims_.empty()) throw ValidationError("chain complex needs at least one group");
    if (differentials_.size() + 1 != dims_.size()) {
      throw ValidationError("chain complex: expected " + std::to_string(dims_.size() - 1) + " differentials, got " +
                            std::to_string(differentials_.size()));
    }
    for (std::size_t i = 1; i < dims_.size(); ++i) {
      const Matrix& d = differential(i);
      if (d.rows() != dims_[i - 1] || d.cols() != dims_[i]) {
        throw ValidationError("chain complex: d_" + std::to_string(i) + " has shape " + std::to_string(d.rows()) +
                              "x" + std::to_string(d.cols()));
      }
    }
    for (std::size_t i = 1; i + 1 < dims_.size(); ++i) {
      if (!(differential(i) * differential(i + 1)).is_zero()) {
        throw InternalError("d_" + std::to_string(i) + " d_" + std::to_string(i + 1) + " != 0");
      }
    }
  }

  /// Complex with a single group and no differentials.
  explicit ChainComplex(std::size_t dim0) : dims_{dim0} {}

  std::size_t length() const noexcept { return dims_.size(); }
  std::size_t top_degree() const noexcept { return dims_.size() - 1; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim(std::size_t i) const { return dims_.at(i); }
  const Matrix& differential(std::size_t i) const { return differentials_.at(i - 1); }

 private:
  std::vector<std::size_t> dims_;
  std::vector<Matrix> differentials_;
};

/// dim ker d_i - rank d_{i+1}, for every degree of the complex. The top
/// degree has no incoming differential, so its entry is the dimension of the
/// cycles there.
inline std::vector<std::size_t> homology_dims(const ChainComplex& c) {
  std::vector<std::size_t> ranks(c.length() + 1, 0);  // ranks[i] = rank d_i, 0 outside
  for (std::size_t i = 1; i < c.length(); ++i) ranks[i] = rank(c.differential(i));
  std::vector<std::size_t> out(c.length());
  for (std::size_t i = 0; i < c.length(); ++i) out[i] = c.dim(i) - ranks[i] - ranks[i + 1];
  return out;
}

}  // namespace fieldwork
