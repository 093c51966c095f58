#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fieldwork/algebras/lie.hpp"
#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/linalg.hpp"
#include "fieldwork/fieldtheory/polynomial.hpp"

namespace fieldwork::fieldtheory {

class TruncationTooSmall : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// (dS/dx_1, ..., dS/dx_n).
inline std::vector<Polynomial> jacobian_generators(const Polynomial& s) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < s.nvars(); ++i) out.push_back(s.derivative(i));
  return out;
}

struct DcritResult {
  std::size_t nvars = 0;
  std::size_t partial_degree = 0;  // common degree e of the partials
  std::size_t degree_cap = 0;
  std::size_t faithful_max = 0;    // polynomial degrees 0..faithful_max are exact
  bool zero_differential = false;
  // indexed [homological degree j][polynomial degree p], p <= faithful_max
  std::vector<std::vector<std::size_t>> complex_dims;
  std::vector<std::vector<std::size_t>> homology;
};

namespace detail {

inline std::size_t index_in(const std::vector<Exponent>& basis, const Exponent& e) {
  const auto it = std::lower_bound(basis.begin(), basis.end(), e, std::greater<>());
  if (it == basis.end() || *it != e) throw InternalError("monomial outside its degree piece");
  return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace detail

/// Koszul complex on the partials of S, truncated at a polynomial degree cap.
///
/// Component (j, p) is Lambda^j(e_1..e_n) tensored with polynomials of degree
/// p, and d(e_I m) = sum_a (-1)^a f_{I_a} m e_{I minus I_a}. With partials of
/// common degree e the differential maps (j, p) to (j-1, p+e), so the
/// homology at (j, p) needs the pieces up to degree p+e: rows are reported
/// for p <= cap - e.
class KoszulComplexTruncation {
 public:
  KoszulComplexTruncation(const Polynomial& s, std::size_t degree_cap) : n_(s.nvars()), cap_(degree_cap) {
    if (n_ == 0) throw ValidationError("action functional needs at least one variable");
    if (n_ > 4 || degree_cap > 8) throw ScaleError("dcrit limited to 4 variables and degree cap 8");
    if (!s.is_homogeneous()) {
      throw ValidationError("action functional must be homogeneous so the Koszul complex is bigraded");
    }
    partials_ = jacobian_generators(s);
    zero_ = true;
    for (const auto& f : partials_) zero_ = zero_ && f.is_zero();
    e_ = zero_ ? 0 : s.degree() - 1;
    for (std::size_t p = 0; p <= cap_; ++p) monomials_.push_back(monomials_of_degree(n_, p));
    for (std::size_t j = 0; j <= n_; ++j) subsets_.push_back(algebras::sorted_subsets(n_, j));
  }

  std::size_t nvars() const noexcept { return n_; }
  std::size_t partial_degree() const noexcept { return e_; }
  std::size_t degree_cap() const noexcept { return cap_; }
  const std::vector<Polynomial>& generators() const noexcept { return partials_; }

  std::size_t dim(std::size_t j, std::size_t p) const {
    if (j > n_ || p > cap_) return 0;
    return subsets_[j].size() * monomials_[p].size();
  }

  /// d : (j, p) -> (j-1, p+e); requires p + e <= cap.
  Matrix differential(std::size_t j, std::size_t p) const {
    if (j == 0 || j > n_ || p + e_ > cap_) throw ValidationError("differential outside the truncation");
    const auto& src_sub = subsets_[j];
    const auto& dst_sub = subsets_[j - 1];
    const auto& src_mon = monomials_[p];
    const auto& dst_mon = monomials_[p + e_];
    Matrix d(dst_sub.size() * dst_mon.size(), src_sub.size() * src_mon.size());
    for (std::size_t si = 0; si < src_sub.size(); ++si) {
      const auto& subset = src_sub[si];
      for (std::size_t a = 0; a < subset.size(); ++a) {
        std::vector<std::size_t> rest = subset;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(a));
        const std::size_t ri = static_cast<std::size_t>(
            std::lower_bound(dst_sub.begin(), dst_sub.end(), rest) - dst_sub.begin());
        const Rational sign = a % 2 == 0 ? 1 : -1;
        const Polynomial& f = partials_[subset[a]];
        for (std::size_t mi = 0; mi < src_mon.size(); ++mi) {
          for (const auto& [fe, fc] : f.terms()) {
            Exponent prod = src_mon[mi];
            for (std::size_t v = 0; v < n_; ++v) prod[v] += fe[v];
            const std::size_t row = ri * dst_mon.size() + detail::index_in(dst_mon, prod);
            d(row, si * src_mon.size() + mi) += sign * fc;
          }
        }
      }
    }
    return d;
  }

  DcritResult homology() const {
    if (cap_ < e_) throw TruncationTooSmall("degree cap " + std::to_string(cap_) + " below partial degree " +
                                            std::to_string(e_) + ": no faithful bidegree");
    DcritResult r;
    r.nvars = n_;
    r.partial_degree = e_;
    r.degree_cap = cap_;
    r.faithful_max = cap_ - e_;
    r.zero_differential = zero_;
    // rank_[j][p] = rank of d out of (j, p)
    std::vector<std::vector<std::size_t>> ranks(n_ + 1, std::vector<std::size_t>(cap_ + 1, 0));
    for (std::size_t j = 1; j <= n_; ++j) {
      for (std::size_t p = 0; p + e_ <= cap_; ++p) {
        const Matrix d = differential(j, p);
        if (j >= 2 && p + 2 * e_ <= cap_) {
          if (!(differential(j - 1, p + e_) * d).is_zero()) throw InternalError("Koszul differential does not square to zero");
        }
        ranks[j][p] = rank(d);
      }
    }
    r.complex_dims.assign(n_ + 1, {});
    r.homology.assign(n_ + 1, {});
    for (std::size_t j = 0; j <= n_; ++j) {
      for (std::size_t p = 0; p <= r.faithful_max; ++p) {
        const std::size_t in = (j < n_ && p >= e_) ? ranks[j + 1][p - e_] : 0;
        r.complex_dims[j].push_back(dim(j, p));
        r.homology[j].push_back(dim(j, p) - ranks[j][p] - in);
      }
    }
    return r;
  }

 private:
  std::size_t n_;
  std::size_t cap_;
  std::size_t e_ = 0;
  bool zero_ = true;
  std::vector<Polynomial> partials_;
  std::vector<std::vector<Exponent>> monomials_;
  std::vector<std::vector<std::vector<std::size_t>>> subsets_;
};

inline DcritResult dcrit_koszul_dims(const Polynomial& s, std::size_t degree_cap) {
  return KoszulComplexTruncation(s, degree_cap).homology();
}

}  // namespace fieldwork::fieldtheory
