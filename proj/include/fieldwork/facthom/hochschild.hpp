#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "fieldwork/algebras/structure_algebra.hpp"
#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/linalg.hpp"
#include "fieldwork/exactcore/sparse.hpp"

namespace fieldwork::facthom {

using algebras::StructureConstantAlgebra;

/// A basis in which every element carries a weight, with products of basis
/// elements expanded in the same basis. product(i, j) may only involve
/// elements of weight <= weight[i] + weight[j]; the cyclic bar complex needs
/// equality.
struct WeightedBasis {
  std::vector<std::size_t> weight;
  std::function<const SparseVector&(std::size_t, std::size_t)> product;

  std::size_t size() const noexcept { return weight.size(); }
};

/// Tuples of basis indices of a fixed length whose weights satisfy a bound,
/// listed lexicographically, with reverse lookup.
class TupleBasis {
 public:
  TupleBasis(const std::vector<std::size_t>& weight, std::size_t length, std::size_t min_total, std::size_t max_total,
             std::size_t limit) {
    std::vector<std::size_t> cur;
    fill(weight, length, min_total, max_total, limit, cur, 0);
  }

  std::size_t size() const noexcept { return tuples_.size(); }
  const std::vector<std::size_t>& operator[](std::size_t k) const { return tuples_[k]; }

  std::size_t index_of(const std::vector<std::size_t>& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) throw InternalError("tuple outside the truncation");
    return it->second;
  }

 private:
  void fill(const std::vector<std::size_t>& weight, std::size_t length, std::size_t lo, std::size_t hi,
            std::size_t limit, std::vector<std::size_t>& cur, std::size_t total) {
    if (cur.size() == length) {
      if (total < lo) return;
      if (tuples_.size() >= limit) throw ScaleError("truncated complex exceeds the desk-scale bound");
      index_.emplace(cur, tuples_.size());
      tuples_.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < weight.size(); ++i) {
      if (total + weight[i] > hi) continue;
      cur.push_back(i);
      fill(weight, length, lo, hi, limit, cur, total + weight[i]);
      cur.pop_back();
    }
  }

  std::vector<std::vector<std::size_t>> tuples_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
};

inline constexpr std::size_t kDeskScale = 100000;

/// Cyclic bar complex C_n = A^{(x)(n+1)} for n = 0..top, restricted to tuples
/// of total weight exactly `weight`, with
///   b(a0|...|an) = sum_{i<n} (-1)^i a0|...|a_i a_{i+1}|...|an + (-1)^n a_n a0|a1|...|a_{n-1}.
inline SparseChainComplex cyclic_bar_complex(const WeightedBasis& basis, std::size_t top, std::size_t weight) {
  std::vector<TupleBasis> groups;
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= top; ++n) {
    groups.emplace_back(basis.weight, n + 1, weight, weight, kDeskScale);
    dims.push_back(groups.back().size());
  }
  std::vector<SparseMap> ds;
  for (std::size_t n = 1; n <= top; ++n) {
    SparseMap d;
    d.rows = dims[n - 1];
    d.columns.reserve(dims[n]);
    for (std::size_t k = 0; k < dims[n]; ++k) {
      const auto& t = groups[n][k];
      SparseVector col;
      auto emit = [&](const std::vector<std::size_t>& prefix, std::size_t slot, const SparseVector& prod,
                      const std::vector<std::size_t>& suffix, const Rational& sign) {
        for (const auto& [m, c] : prod) {
          std::vector<std::size_t> face = prefix;
          face.insert(face.begin() + static_cast<std::ptrdiff_t>(slot), m);
          face.insert(face.end(), suffix.begin(), suffix.end());
          add_scaled(col, SparseVector{{groups[n - 1].index_of(face), c}}, sign);
        }
      };
      for (std::size_t i = 0; i < n; ++i) {
        const std::vector<std::size_t> prefix(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
        const std::vector<std::size_t> suffix(t.begin() + static_cast<std::ptrdiff_t>(i + 2), t.end());
        emit(prefix, i, basis.product(t[i], t[i + 1]), suffix, i % 2 ? Rational(-1) : Rational(1));
      }
      const std::vector<std::size_t> rest(t.begin() + 1, t.end() - 1);
      emit({}, 0, basis.product(t[n], t[0]), rest, n % 2 ? Rational(-1) : Rational(1));
      d.columns.push_back(std::move(col));
    }
    ds.push_back(std::move(d));
  }
  return SparseChainComplex(std::move(dims), std::move(ds));
}

/// Basis products of a structure-constant algebra as sparse vectors, all of
/// weight zero.
class AlgebraBasis {
 public:
  explicit AlgebraBasis(const StructureConstantAlgebra& a) : table_(a.dim() * a.dim()), dim_(a.dim()) {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        for (std::size_t k = 0; k < dim_; ++k) {
          if (!a.constant(i, j, k).is_zero()) table_[i * dim_ + j].emplace(k, a.constant(i, j, k));
        }
      }
    }
  }

  WeightedBasis weighted() const {
    return {std::vector<std::size_t>(dim_, 0),
            [this](std::size_t i, std::size_t j) -> const SparseVector& { return table_[i * dim_ + j]; }};
  }

 private:
  std::vector<SparseVector> table_;
  std::size_t dim_;
};

/// Hochschild chains C_0..C_N of a finite-dimensional algebra.
class HochschildComplexTruncation {
 public:
  HochschildComplexTruncation(const StructureConstantAlgebra& a, std::size_t top)
      : top_(top), basis_(algebras::validated(a)), complex_(build(a, top)) {}

  std::size_t top_degree() const noexcept { return top_; }
  const SparseChainComplex& complex() const noexcept { return complex_; }

  /// Homology in degrees 0..N-1; degree N has no incoming differential and
  /// is left out.
  std::vector<std::size_t> homology() const {
    auto h = complex_.homology_dims();
    h.pop_back();
    return h;
  }

 private:
  SparseChainComplex build(const StructureConstantAlgebra& a, std::size_t top) {
    double size = 1;
    for (std::size_t i = 0; i <= top; ++i) size *= static_cast<double>(a.dim());
    if (size > static_cast<double>(kDeskScale)) throw ScaleError("dim(A)^(N+1) exceeds 10^5");
    return cyclic_bar_complex(basis_.weighted(), top, 0);
  }

  std::size_t top_;
  AlgebraBasis basis_;
  SparseChainComplex complex_;
};

/// Hochschild homology dims in degrees 0..nmax-1.
inline std::vector<std::size_t> hochschild_dims(const StructureConstantAlgebra& a, std::size_t nmax) {
  if (nmax == 0) throw ValidationError("nmax must be positive");
  return HochschildComplexTruncation(a, nmax).homology();
}

/// A (x)_{A (x) A^op} A in degree 0: the quotient of A by the span of all
/// commutators xy - yx, computed on basis pairs.
inline std::size_t hh0_via_excision(const StructureConstantAlgebra& raw) {
  const auto a = algebras::validated(raw);
  const std::size_t d = a.dim();
  std::vector<Vector> commutators;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) commutators.push_back(a.basis_product(i, j) - a.basis_product(j, i));
  }
  if (commutators.empty()) return d;
  return d - rank(Matrix::from_rows(commutators));
}

}  // namespace fieldwork::facthom
