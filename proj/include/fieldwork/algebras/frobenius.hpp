#pragma once

#include <cstddef>
#include <vector>

#include "fieldwork/algebras/structure_algebra.hpp"
#include "fieldwork/error.hpp"
#include "fieldwork/exactcore/linalg.hpp"

namespace fieldwork::algebras {

/// Raised when Tr(ab) is degenerate; carries a nonzero element of the radical.
class DegeneratePairing : public ValidationError {
 public:
  explicit DegeneratePairing(Vector witness)
      : ValidationError("trace pairing is degenerate"), witness_(std::move(witness)) {}

  const Vector& witness() const noexcept { return witness_; }

 private:
  Vector witness_;
};

/// Commutative algebra with a trace covector. Construction validates the
/// algebra and commutativity; nondegeneracy is established by
/// frobenius_check_and_handle.
class FrobeniusAlgebra {
 public:
  FrobeniusAlgebra(StructureConstantAlgebra algebra, Vector trace)
      : algebra_(validated(std::move(algebra))), trace_(std::move(trace)) {
    if (trace_.size() != algebra_.dim()) throw ValidationError("trace covector has wrong length");
    if (auto failure = algebra_.first_commutativity_failure()) throw AxiomError(*failure, algebra_.basis_names());
  }

  const StructureConstantAlgebra& algebra() const noexcept { return algebra_; }
  const Vector& trace() const noexcept { return trace_; }
  std::size_t dim() const noexcept { return algebra_.dim(); }

  Rational trace_of(const Vector& a) const { return dot(trace_, a); }

 private:
  StructureConstantAlgebra algebra_;
  Vector trace_;
};

/// Everything derived from (A, Tr): the pairing matrix, the dual basis, the
/// handle element h = sum_i e_i e^i and the comultiplication.
struct FrobeniusStructure {
  Matrix pairing;                // P(i, j) = Tr(e_i e_j)
  std::vector<Vector> dual_basis;  // Tr(e_i e^j) = delta_ij
  Vector handle;
  Matrix comult;                 // A -> A (x) A, dim^2 x dim; column k is sum_i e_k e_i (x) e^i
};

inline FrobeniusStructure frobenius_check_and_handle(const FrobeniusAlgebra& f) {
  const auto& a = f.algebra();
  const std::size_t d = a.dim();
  FrobeniusStructure out;
  out.pairing = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) out.pairing(i, j) = f.trace_of(a.basis_product(i, j));
  }
  auto inv = inverse(out.pairing);
  if (!inv) {
    auto rk = rank_and_kernel(out.pairing);
    throw DegeneratePairing(rk.kernel_basis.front());
  }
  // e^j = sum_k inv(k, j) e_k, since P * inv = I.
  for (std::size_t j = 0; j < d; ++j) out.dual_basis.push_back(inv->column(j));

  out.handle = Vector(d);
  for (std::size_t i = 0; i < d; ++i) {
    out.handle = out.handle + a.multiply(unit_vector(d, i), out.dual_basis[i]);
  }

  out.comult = Matrix(d * d, d);
  for (std::size_t k = 0; k < d; ++k) {
    Vector column(d * d);
    for (std::size_t i = 0; i < d; ++i) {
      const Vector left = a.basis_product(k, i);
      column = column + kron(left, out.dual_basis[i]);
    }
    for (std::size_t r = 0; r < d * d; ++r) out.comult(r, k) = column[r];
  }
  return out;
}

/// Tr(h^g); the genus-g closed surface value.
inline Rational closed_surface_value(const FrobeniusAlgebra& f, const FrobeniusStructure& s, std::size_t genus) {
  Vector power = f.algebra().unit();
  for (std::size_t i = 0; i < genus; ++i) power = f.algebra().multiply(power, s.handle);
  return f.trace_of(power);
}

}  // namespace fieldwork::algebras
