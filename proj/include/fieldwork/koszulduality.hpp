#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fieldwork/algebras/enveloping.hpp"
#include "fieldwork/algebras/lie.hpp"
#include "fieldwork/algebras/structure_algebra.hpp"
#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/linalg.hpp"
#include "fieldwork/exactcore/sparse.hpp"
#include "fieldwork/facthom/hochschild.hpp"

namespace fieldwork::koszul {

using algebras::LieAlgebra;
using algebras::StructureConstantAlgebra;
using facthom::WeightedBasis;

/// An algebra with an algebra map to Q. The augmentation ideal I = ker(eps)
/// gets the basis of kernel vectors of eps, and products in I are expanded
/// in that basis once at construction.
class AugmentedAlgebra {
 public:
  AugmentedAlgebra(StructureConstantAlgebra a, Vector augmentation)
      : a_(algebras::validated(std::move(a))), eps_(std::move(augmentation)) {
    const std::size_t d = a_.dim();
    if (eps_.size() != d) throw ValidationError("augmentation has wrong length");
    if (dot(eps_, a_.unit()) != Rational(1)) throw ValidationError("augmentation must send the unit to 1");
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        if (dot(eps_, a_.basis_product(i, j)) != eps_[i] * eps_[j]) {
          throw ValidationError("augmentation is not multiplicative on (" + a_.basis_names()[i] + ", " +
                                a_.basis_names()[j] + ")");
        }
      }
    }
    ideal_ = rank_and_kernel(Matrix::from_rows(std::vector<Vector>{eps_})).kernel_basis;
    const std::size_t m = ideal_.size();
    const Matrix k = Matrix::from_columns(ideal_, d);
    table_.resize(m * m);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        const auto coords = solve(k, a_.multiply(ideal_[x], ideal_[y]));
        if (!coords) throw InternalError("augmentation ideal not closed under multiplication");
        for (std::size_t z = 0; z < m; ++z) {
          if (!(*coords)[z].is_zero()) table_[x * m + y].emplace(z, (*coords)[z]);
        }
      }
    }
  }

  const StructureConstantAlgebra& algebra() const noexcept { return a_; }
  const Vector& augmentation() const noexcept { return eps_; }
  const std::vector<Vector>& ideal_basis() const noexcept { return ideal_; }

  /// The ideal as a basis with all weights zero (no filtration needed).
  WeightedBasis ideal() const {
    const std::size_t m = ideal_.size();
    return {std::vector<std::size_t>(m, 0),
            [this, m](std::size_t x, std::size_t y) -> const SparseVector& { return table_[x * m + y]; }};
  }

  std::optional<std::size_t> weight_cap() const noexcept { return std::nullopt; }

 private:
  StructureConstantAlgebra a_;
  Vector eps_;
  std::vector<Vector> ideal_;
  std::vector<SparseVector> table_;
};

/// The augmentation ideal of U(g), spanned by PBW monomials of degree
/// 1..W, with PBW degree as weight. Products only lower the PBW degree, so
/// bar chains of total weight <= W form a subcomplex; its homology in
/// degree n agrees with Tor^{U(g)}(Q, Q) once W >= n + 1.
class TruncatedEnveloping {
 public:
  TruncatedEnveloping(const LieAlgebra& g, std::size_t weight)
      : straightener_(g), weight_(weight) {
    if (weight == 0) throw ValidationError("weight truncation must be positive");
    const std::size_t n = straightener_.lie().dim();
    std::vector<std::size_t> word;
    auto extend = [&](auto& self, std::size_t from, std::size_t left) -> void {
      if (!word.empty()) {
        index_.emplace(word, monomials_.size());
        monomials_.push_back(word);
        weights_.push_back(word.size());
      }
      if (left == 0) return;
      for (std::size_t i = from; i < n; ++i) {
        word.push_back(i);
        self(self, i, left - 1);
        word.pop_back();
      }
    };
    extend(extend, 0, weight);
    if (monomials_.size() > facthom::kDeskScale) throw ScaleError("too many PBW monomials");
  }

  const LieAlgebra& lie() const noexcept { return straightener_.lie(); }
  const std::vector<algebras::PBWMonomial>& monomials() const noexcept { return monomials_; }

  WeightedBasis ideal() const {
    return {weights_, [this](std::size_t x, std::size_t y) -> const SparseVector& { return product(x, y); }};
  }

  std::optional<std::size_t> weight_cap() const noexcept { return weight_; }

 private:
  const SparseVector& product(std::size_t x, std::size_t y) const {
    const auto key = std::make_pair(x, y);
    if (auto it = products_.find(key); it != products_.end()) return it->second;
    std::vector<std::size_t> word = monomials_[x];
    word.insert(word.end(), monomials_[y].begin(), monomials_[y].end());
    SparseVector v;
    if (word.size() <= weight_) {
      for (const auto& [m, c] : straightener_.normal_form(word).terms()) {
        if (m.empty()) throw InternalError("product in the augmentation ideal has a constant term");
        v.emplace(index_.at(m), c);
      }
    }
    return products_.emplace(key, std::move(v)).first->second;
  }

  mutable algebras::Straightener straightener_;
  std::size_t weight_;
  std::vector<algebras::PBWMonomial> monomials_;
  std::vector<std::size_t> weights_;
  std::map<algebras::PBWMonomial, std::size_t> index_;
  mutable std::map<std::pair<std::size_t, std::size_t>, SparseVector> products_;
};

/// Reduced bar complex B_n = I^{(x)n}, n = 0..N+1, with
///   d(a1|...|an) = sum_{i=1}^{n-1} (-1)^i a1|...|a_i a_{i+1}|...|an.
/// With a weight cap, only tuples of total weight <= cap are kept.
class BarComplexTruncation {
 public:
  BarComplexTruncation(const WeightedBasis& ideal, std::size_t top, std::optional<std::size_t> cap)
      : top_(top), complex_(build(ideal, top, cap)) {}

  std::size_t top_degree() const noexcept { return top_; }
  const SparseChainComplex& complex() const noexcept { return complex_; }

  /// Homology in degrees 0..N.
  std::vector<std::size_t> homology() const {
    auto h = complex_.homology_dims();
    h.pop_back();
    return h;
  }

 private:
  static SparseChainComplex build(const WeightedBasis& ideal, std::size_t top, std::optional<std::size_t> cap) {
    const std::size_t hi = cap.value_or(0);
    // Uncapped, the top group B_{N+1} may reach dim(I) times the bound on B_N.
    const std::size_t limit = cap ? facthom::kDeskScale : facthom::kDeskScale * std::max<std::size_t>(ideal.size(), 1);
    std::vector<facthom::TupleBasis> groups;
    std::vector<std::size_t> dims;
    for (std::size_t n = 0; n <= top + 1; ++n) {
      groups.emplace_back(ideal.weight, n, 0, hi, limit);
      dims.push_back(groups.back().size());
    }
    std::vector<SparseMap> ds;
    for (std::size_t n = 1; n <= top + 1; ++n) {
      SparseMap d;
      d.rows = dims[n - 1];
      for (std::size_t k = 0; k < dims[n]; ++k) {
        const auto& t = groups[n][k];
        SparseVector col;
        for (std::size_t i = 0; i + 1 < n; ++i) {
          const Rational sign = (i + 1) % 2 ? Rational(-1) : Rational(1);
          for (const auto& [m, c] : ideal.product(t[i], t[i + 1])) {
            std::vector<std::size_t> face(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
            face.push_back(m);
            face.insert(face.end(), t.begin() + static_cast<std::ptrdiff_t>(i + 2), t.end());
            add_scaled(col, SparseVector{{groups[n - 1].index_of(face), c}}, sign);
          }
        }
        d.columns.push_back(std::move(col));
      }
      ds.push_back(std::move(d));
    }
    return SparseChainComplex(std::move(dims), std::move(ds));
  }

  std::size_t top_;
  SparseChainComplex complex_;
};

namespace detail {

template <typename Augmented>
std::vector<std::size_t> bar_tor_dims_impl(const Augmented& a, std::size_t nmax) {
  if (nmax == 0) throw ValidationError("nmax must be positive");
  const WeightedBasis ideal = a.ideal();
  // A weight cap keeps the chain groups far below dim(I)^n; there the bound
  // is enforced on the groups actually built.
  if (!a.weight_cap()) {
    double size = 1;
    for (std::size_t i = 0; i < nmax; ++i) size *= static_cast<double>(ideal.size());
    if (size > static_cast<double>(facthom::kDeskScale)) throw ScaleError("dim(I)^nmax exceeds 10^5");
  }
  return BarComplexTruncation(ideal, nmax, a.weight_cap()).homology();
}

}  // namespace detail

/// dim Tor^A_n(Q, Q) for n = 0..nmax, which are also the dims of the
/// Koszul dual D(A) = (Q (x)_A Q)^dual.
inline std::vector<std::size_t> bar_tor_dims(const AugmentedAlgebra& a, std::size_t nmax) {
  return detail::bar_tor_dims_impl(a, nmax);
}

/// The same for a weight-truncated U(g); only degrees n < W are faithful.
inline std::vector<std::size_t> bar_tor_dims(const TruncatedEnveloping& u, std::size_t nmax) {
  if (*u.weight_cap() < nmax + 1) throw ValidationError("weight truncation too small for the requested degrees");
  return detail::bar_tor_dims_impl(u, nmax);
}

struct KoszulComparison {
  std::vector<std::size_t> bar;       // degrees 0..nmax
  std::vector<std::size_t> cochains;  // degrees 0..dim g
  bool equal = false;
};

/// Tor^{U(g)}(Q, Q) from the bar complex against H^*(Lambda g^dual) from the
/// Chevalley-Eilenberg cochains, compared in degrees <= min(nmax, dim g).
inline KoszulComparison koszul_dual_compare_ce(const LieAlgebra& g, std::size_t nmax) {
  if (nmax == 0) throw ValidationError("nmax must be positive");
  if (g.dim() > 3 || nmax > 4) throw ScaleError("comparison limited to dim g <= 3 and nmax <= 4");
  KoszulComparison out;
  out.bar = bar_tor_dims(TruncatedEnveloping(g, nmax + 1), nmax);
  out.cochains = algebras::ce_cochain_cohomology(g);
  const std::size_t shared = std::min(nmax, g.dim());
  out.equal = std::equal(out.bar.begin(), out.bar.begin() + static_cast<std::ptrdiff_t>(shared + 1),
                         out.cochains.begin());
  return out;
}

}  // namespace fieldwork::koszul
