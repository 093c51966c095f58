#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/matrix.hpp"

namespace fieldwork::algebras {

/// First failing axiom found while validating structure constants. Indices
/// are 0-based basis positions; unused trailing indices are zero.
struct AxiomFailure {
  enum class Kind { Assoc, Unit, Jacobi, Antisym, Commutative };

  Kind kind;
  std::array<std::size_t, 3> indices{};

  std::string describe(const std::vector<std::string>& names) const {
    auto n = [&](std::size_t i) { return i < names.size() ? names[i] : std::to_string(i); };
    switch (kind) {
      case Kind::Assoc:
        return "AssocFail(" + n(indices[0]) + "," + n(indices[1]) + "," + n(indices[2]) + ")";
      case Kind::Unit:
        return "UnitFail(" + n(indices[0]) + ")";
      case Kind::Jacobi:
        return "JacobiFail(" + n(indices[0]) + "," + n(indices[1]) + "," + n(indices[2]) + ")";
      case Kind::Antisym:
        return "AntisymFail(" + n(indices[0]) + "," + n(indices[1]) + ")";
      case Kind::Commutative:
        return "CommutativeFail(" + n(indices[0]) + "," + n(indices[1]) + ")";
    }
    return "unknown axiom failure";
  }

  friend bool operator==(const AxiomFailure&, const AxiomFailure&) = default;
};

class AxiomError : public ValidationError {
 public:
  AxiomError(AxiomFailure failure, const std::vector<std::string>& names)
      : ValidationError("algebra axiom violated: " + failure.describe(names)), failure_(failure) {}

  const AxiomFailure& failure() const noexcept { return failure_; }

 private:
  AxiomFailure failure_;
};

inline std::vector<std::string> default_basis_names(std::size_t dim, const std::string& stem = "e") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

/// Finite-dimensional algebra e_i e_j = sum_k c[i][j][k] e_k with a unit.
///
/// The constructor only checks shapes; `first_axiom_failure` and `validated`
/// check unit and associativity.
class StructureConstantAlgebra {
 public:
  using Constants = std::vector<std::vector<Vector>>;

  StructureConstantAlgebra(std::vector<std::string> basis_names, const Constants& constants, Vector unit)
      : dim_(basis_names.size()), names_(std::move(basis_names)), unit_(std::move(unit)) {
    if (dim_ == 0) throw ValidationError("algebra dimension must be positive");
    if (unit_.size() != dim_) throw ValidationError("unit vector has wrong length");
    if (constants.size() != dim_) throw ValidationError("structure constants: wrong outer length");
    c_.resize(dim_ * dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (constants[i].size() != dim_) throw ValidationError("structure constants: wrong middle length");
      for (std::size_t j = 0; j < dim_; ++j) {
        if (constants[i][j].size() != dim_) throw ValidationError("structure constants: wrong inner length");
        for (std::size_t k = 0; k < dim_; ++k) c_[index(i, j, k)] = constants[i][j][k];
      }
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  const Vector& unit() const noexcept { return unit_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[index(i, j, k)]; }

  Vector basis_product(std::size_t i, std::size_t j) const {
    Vector v(dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = constant(i, j, k);
    return v;
  }

  Vector multiply(const Vector& a, const Vector& b) const {
    if (a.size() != dim_ || b.size() != dim_) throw ValidationError("element has wrong length");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (b[j].is_zero()) continue;
        const Rational ab = a[i] * b[j];
        for (std::size_t k = 0; k < dim_; ++k) {
          if (!constant(i, j, k).is_zero()) out[k] += ab * constant(i, j, k);
        }
      }
    }
    return out;
  }

  /// Matrix of x -> a x.
  Matrix left_multiplication(const Vector& a) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vector col = multiply(a, unit_vector(dim_, j));
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
    }
    return m;
  }

  /// Matrix of x -> x a.
  Matrix right_multiplication(const Vector& a) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vector col = multiply(unit_vector(dim_, j), a);
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
    }
    return m;
  }

  /// m : A (x) A -> A as a dim x dim^2 matrix; column i*dim + j is e_i e_j.
  Matrix multiplication_matrix() const {
    Matrix m(dim_, dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        for (std::size_t k = 0; k < dim_; ++k) m(k, i * dim_ + j) = constant(i, j, k);
      }
    }
    return m;
  }

  Matrix unit_matrix() const { return Matrix::from_columns({unit_}, dim_); }

  bool is_commutative() const { return !first_commutativity_failure().has_value(); }

  std::optional<AxiomFailure> first_commutativity_failure() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = i + 1; j < dim_; ++j) {
        for (std::size_t k = 0; k < dim_; ++k) {
          if (constant(i, j, k) != constant(j, i, k)) return AxiomFailure{AxiomFailure::Kind::Commutative, {i, j, 0}};
        }
      }
    }
    return std::nullopt;
  }

  friend bool operator==(const StructureConstantAlgebra& a, const StructureConstantAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_ && a.unit_ == b.unit_;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }

  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<Rational> c_;
  Vector unit_;
};

/// Unit axiom on every basis vector, then associativity on every basis triple
/// in lexicographic order.
inline std::optional<AxiomFailure> first_axiom_failure(const StructureConstantAlgebra& a) {
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    const Vector e = unit_vector(d, i);
    if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e) {
      return AxiomFailure{AxiomFailure::Kind::Unit, {i, 0, 0}};
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Vector ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        const Vector left = a.multiply(ij, unit_vector(d, k));
        const Vector right = a.multiply(unit_vector(d, i), a.basis_product(j, k));
        if (left != right) return AxiomFailure{AxiomFailure::Kind::Assoc, {i, j, k}};
      }
    }
  }
  return std::nullopt;
}

/// Returns the algebra unchanged when it is unital and associative; otherwise
/// throws AxiomError naming the first failure.
inline StructureConstantAlgebra validated(StructureConstantAlgebra a) {
  if (auto failure = first_axiom_failure(a)) throw AxiomError(*failure, a.basis_names());
  return a;
}

}  // namespace fieldwork::algebras
