#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/linalg.hpp"
#include "fieldwork/exactcore/matrix.hpp"

namespace fieldwork {

/// Bijection of {0, ..., n-1}, stored as its list of images.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
      if (x >= images_.size() || seen[x]) throw ValidationError("not a permutation");
      seen[x] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    return Permutation(std::move(images));
  }

  /// i -> i + 1 mod n.
  static Permutation cyclic_shift(std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = (i + 1) % n;
    return Permutation(std::move(images));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  Permutation inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  /// Composition (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw ValidationError("composing permutations of different degree");
    std::vector<std::size_t> images(a.degree());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = a.images_[b.images_[i]];
    return Permutation(std::move(images));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// All permutations of n letters in lexicographic order of their image lists.
inline std::vector<Permutation> symmetric_group(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// A finite permutation group together with a linear representation.
///
/// The representation is a function rather than a table of matrices: the
/// representations built by facthom have dimension in the hundreds, and only
/// one matrix at a time is ever needed.
class GroupAction {
 public:
  using Representation = std::function<Matrix(const Permutation&)>;

  GroupAction(std::vector<Permutation> elements, std::size_t dimension, Representation representation)
      : elements_(std::move(elements)), dimension_(dimension), representation_(std::move(representation)) {
    if (elements_.empty()) throw ValidationError("group action with an empty group");
  }

  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::size_t dimension() const noexcept { return dimension_; }
  Matrix matrix(const Permutation& g) const {
    Matrix m = representation_(g);
    if (m.rows() != dimension_ || m.cols() != dimension_) throw ValidationError("representation matrix has wrong shape");
    return m;
  }

  /// Checks that the element list is closed under composition, that the
  /// identity goes to the identity matrix, and that rho(gh) = rho(g) rho(h).
  /// Quadratic in the group order; meant for tests and validation.
  bool is_homomorphism() const {
    const std::size_t n = elements_.front().degree();
    for (const auto& g : elements_) {
      if (g.is_identity() && matrix(g) != Matrix::identity(dimension_)) return false;
      for (const auto& h : elements_) {
        const Permutation gh = g * h;
        if (std::find(elements_.begin(), elements_.end(), gh) == elements_.end()) return false;
        if (matrix(gh) != matrix(g) * matrix(h)) return false;
      }
    }
    return std::find(elements_.begin(), elements_.end(), Permutation::identity(n)) != elements_.end();
  }

 private:
  std::vector<Permutation> elements_;
  std::size_t dimension_;
  Representation representation_;
};

/// (1/|G|) sum_g rho(g); an idempotent whose image is the invariants and whose
/// rank, in characteristic zero, is the dimension of the coinvariants.
inline Matrix averaging_projector(const GroupAction& action) {
  Matrix sum(action.dimension(), action.dimension());
  for (const auto& g : action.elements()) sum += action.matrix(g);
  sum *= Rational(1, static_cast<long>(action.elements().size()));
  return sum;
}

inline std::size_t group_coinvariants(const GroupAction& action) { return rank(averaging_projector(action)); }

/// Matrix of the permutation representation e_i -> e_{g(i)}.
inline Matrix permutation_matrix(const Permutation& g) {
  Matrix m(g.degree(), g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) m(g(i), i) = 1;
  return m;
}

/// Orbit label of each basis vector under an action that permutes the basis.
/// act(g, i) is the index of g e_i. Labels are numbered by smallest member,
/// so label k has a smallest representative below that of label k + 1. The
/// coinvariants of such a representation have the orbits as a basis.
inline std::vector<std::size_t> basis_orbits(std::size_t n, const std::vector<Permutation>& group,
                                             const std::function<std::size_t(const Permutation&, std::size_t)>& act) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, unset);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (label[i] != unset) continue;
    for (const auto& g : group) {
      const std::size_t j = act(g, i);
      if (j >= n) throw ValidationError("group action leaves the basis");
      label[j] = next;
    }
    ++next;
  }
  return label;
}

}  // namespace fieldwork
