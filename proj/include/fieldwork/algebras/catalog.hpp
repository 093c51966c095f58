#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fieldwork/algebras/frobenius.hpp"
#include "fieldwork/algebras/lie.hpp"
#include "fieldwork/algebras/structure_algebra.hpp"

// Small algebras used throughout the tests, the acceptance suite and the
// bundled spec files under data/.
namespace fieldwork::algebras::catalog {

namespace detail {

inline StructureConstantAlgebra::Constants zero_constants(std::size_t d) {
  return StructureConstantAlgebra::Constants(d, std::vector<Vector>(d, Vector(d)));
}

}  // namespace detail

/// Q[t]/(t^m), basis 1, t, ..., t^{m-1}.
inline StructureConstantAlgebra truncated_polynomial(std::size_t m, const std::string& var = "t") {
  auto c = detail::zero_constants(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; i + j < m; ++j) c[i][j][i + j] = 1;
  }
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i < m; ++i) names.push_back(i == 1 ? var : var + "^" + std::to_string(i));
  return StructureConstantAlgebra(names, c, unit_vector(m, 0));
}

/// Q[x]/(x^2).
inline StructureConstantAlgebra dual_numbers() { return truncated_polynomial(2, "x"); }

/// Q x Q with orthogonal idempotents.
inline StructureConstantAlgebra split_pair() {
  auto c = detail::zero_constants(2);
  c[0][0][0] = 1;
  c[1][1][1] = 1;
  return StructureConstantAlgebra({"e1", "e2"}, c, Vector{1, 1});
}

/// Q[Z/n], basis g^0, ..., g^{n-1}.
inline StructureConstantAlgebra cyclic_group_algebra(std::size_t n) {
  auto c = detail::zero_constants(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c[i][j][(i + j) % n] = 1;
  }
  std::vector<std::string> names{"1"};
  for (std::size_t i = 1; i < n; ++i) names.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
  return StructureConstantAlgebra(names, c, unit_vector(n, 0));
}

/// M_n(Q) with matrix units E_{ab}, basis index a*n + b.
inline StructureConstantAlgebra matrix_algebra(std::size_t n) {
  const std::size_t d = n * n;
  auto c = detail::zero_constants(d);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t e = 0; e < n; ++e) c[a * n + b][b * n + e][a * n + e] = 1;
    }
  }
  Vector unit(d);
  for (std::size_t a = 0; a < n; ++a) unit[a * n + a] = 1;
  return StructureConstantAlgebra(names, c, unit);
}

/// Upper-triangular 2x2 matrices, basis E11, E12, E22.
inline StructureConstantAlgebra upper_triangular() {
  auto c = detail::zero_constants(3);
  c[0][0][0] = 1;  // E11 E11 = E11
  c[0][1][1] = 1;  // E11 E12 = E12
  c[1][2][1] = 1;  // E12 E22 = E12
  c[2][2][2] = 1;  // E22 E22 = E22
  return StructureConstantAlgebra({"E11", "E12", "E22"}, c, Vector{1, 0, 1});
}

/// Q[x]/(x^2) with Tr(1) = 0, Tr(x) = 1.
inline FrobeniusAlgebra frobenius_dual_numbers() { return FrobeniusAlgebra(dual_numbers(), Vector{0, 1}); }

/// Q x Q with Tr(a, b) = a + b.
inline FrobeniusAlgebra frobenius_split_pair() { return FrobeniusAlgebra(split_pair(), Vector{1, 1}); }

/// Q[Z/3] with Tr(g^k) = delta_{k,0}.
inline FrobeniusAlgebra frobenius_cyclic3() { return FrobeniusAlgebra(cyclic_group_algebra(3), Vector{1, 0, 0}); }

inline std::vector<FrobeniusAlgebra> bundled_frobenius() {
  return {frobenius_dual_numbers(), frobenius_split_pair(), frobenius_cyclic3()};
}

/// sl_2 in the basis (e, f, h): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LieAlgebra sl2() {
  LieAlgebra::Constants f(3, std::vector<Vector>(3, Vector(3)));
  constexpr std::size_t e = 0, ff = 1, h = 2;
  f[h][e][e] = 2;
  f[e][h][e] = -2;
  f[h][ff][ff] = -2;
  f[ff][h][ff] = 2;
  f[e][ff][h] = 1;
  f[ff][e][h] = -1;
  return LieAlgebra({"e", "f", "h"}, f);
}

/// Two-dimensional nonabelian Lie algebra, [x, y] = y.
inline LieAlgebra affine_line() {
  LieAlgebra::Constants f(2, std::vector<Vector>(2, Vector(2)));
  f[0][1][1] = 1;
  f[1][0][1] = -1;
  return LieAlgebra({"x", "y"}, f);
}

/// Heisenberg algebra, [x, y] = z with z central.
inline LieAlgebra heisenberg() {
  LieAlgebra::Constants f(3, std::vector<Vector>(3, Vector(3)));
  f[0][1][2] = 1;
  f[1][0][2] = -1;
  return LieAlgebra({"x", "y", "z"}, f);
}

inline std::vector<LieAlgebra> bundled_lie() {
  return {LieAlgebra::abelian(1), LieAlgebra::abelian(2), LieAlgebra::abelian(3), affine_line(), heisenberg(), sl2()};
}

/// The ground field Q as a one-dimensional algebra.
inline StructureConstantAlgebra rationals() { return truncated_polynomial(1); }

inline std::vector<StructureConstantAlgebra> bundled_associative() {
  return {rationals(),           dual_numbers(),     truncated_polynomial(3), split_pair(),
          cyclic_group_algebra(2), cyclic_group_algebra(3), matrix_algebra(2),     upper_triangular()};
}

}  // namespace fieldwork::algebras::catalog
