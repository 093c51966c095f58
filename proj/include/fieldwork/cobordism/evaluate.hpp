#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "fieldwork/algebras/frobenius.hpp"
#include "fieldwork/cobordism/syntax.hpp"
#include "fieldwork/cobordism/typing.hpp"
#include "fieldwork/exactcore/matrix.hpp"

namespace fieldwork::cobordism {

using algebras::FrobeniusAlgebra;
using algebras::FrobeniusStructure;

/// Z(P) = V with a chosen basis; Z(Q) is the dual with the dual basis.
struct Tft1d {
  std::size_t dim = 1;
};

/// Z(S^1) = A for a Frobenius algebra A.
class Tft2d {
 public:
  explicit Tft2d(FrobeniusAlgebra a) : a_(std::move(a)), s_(algebras::frobenius_check_and_handle(a_)) {}

  const FrobeniusAlgebra& algebra() const noexcept { return a_; }
  const FrobeniusStructure& structure() const noexcept { return s_; }

 private:
  FrobeniusAlgebra a_;
  FrobeniusStructure s_;
};

using TFTData = std::variant<Tft1d, Tft2d>;

inline int tft_dimension(const TFTData& z) { return std::holds_alternative<Tft1d>(z) ? 1 : 2; }

namespace detail {

inline std::size_t state_space_dim(const TFTData& z) {
  return std::holds_alternative<Tft1d>(z) ? std::get<Tft1d>(z).dim : std::get<Tft2d>(z).algebra().dim();
}

inline Matrix identity_power(std::size_t d, std::size_t n) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= d;
    if (size > 4096) throw ScaleError("state space too large to evaluate");
  }
  return Matrix::identity(size);
}

inline Matrix eval(const CobordismExpr& e, const TFTData& z) {
  using K = CobordismExpr::Kind;
  const std::size_t d = state_space_dim(z);
  if (e.kind == K::Compose) {
    Matrix m = eval(e.children.front(), z);
    for (std::size_t i = 1; i < e.children.size(); ++i) m = eval(e.children[i], z) * m;
    return m;
  }
  if (e.kind == K::Tensor) {
    Matrix m = eval(e.children.front(), z);
    for (std::size_t i = 1; i < e.children.size(); ++i) {
      m = kron(m, eval(e.children[i], z));
      if (m.rows() > 4096 || m.cols() > 4096) throw ScaleError("state space too large to evaluate");
    }
    return m;
  }
  const std::string& g = e.name;
  if (g == "swap") return swap_factors(d, d);
  if (const auto* one = std::get_if<Tft1d>(&z)) {
    (void)one;
    if (g == "idP" || g == "idQ") return Matrix::identity(d);
    // V (x) V^dual with e_i (x) e^j at index i*d + j
    Matrix pairing(1, d * d);
    for (std::size_t i = 0; i < d; ++i) pairing(0, i * d + i) = 1;
    if (g == "ev") return pairing;
    if (g == "coev") return pairing.transpose();
  } else {
    const auto& t = std::get<Tft2d>(z);
    const auto& a = t.algebra();
    if (g == "id") return identity_power(d, e.arg);
    if (g == "cup") return a.algebra().unit_matrix();
    if (g == "cap") return Matrix::from_rows(std::vector<Vector>{a.trace()});
    if (g == "pants") return a.algebra().multiplication_matrix();
    if (g == "copants") return t.structure().comult;
  }
  throw InternalError("generator without an evaluation: " + g);
}

}  // namespace detail

/// Checks types, then evaluates: "a ; b" is M_b M_a, "a * b" is the
/// Kronecker product with a as the most significant factor.
inline Matrix evaluate_tft(const CobordismExpr& e, const TFTData& z) {
  (void)typecheck(e, tft_dimension(z));
  return detail::eval(e, z);
}

inline Matrix evaluate_tft(std::string_view text, const TFTData& z) {
  return evaluate_tft(parse_cobordism(text, tft_dimension(z)), z);
}

/// "cup ; (copants ; pants)^g ; cap".
inline std::string genus_normal_form(std::size_t genus) {
  std::string s = "cup";
  for (std::size_t i = 0; i < genus; ++i) s += " ; (copants ; pants)";
  return s + " ; cap";
}

/// Value of the closed genus-g surface, computed by evaluating the normal
/// form; equals Tr(h^g) for the handle element h.
inline Rational closed_surface_invariant(const FrobeniusAlgebra& a, std::size_t genus) {
  if (genus > 64) throw ScaleError("genus too large");
  const Matrix m = evaluate_tft(genus_normal_form(genus), TFTData(Tft2d(a)));
  return m(0, 0);
}

/// Relations between cobordisms that a TFT must respect, as pairs of
/// expressions with equal source and target.
struct RewriteMove {
  std::string name;
  int dim;
  std::string lhs;
  std::string rhs;
};

inline std::vector<RewriteMove> rewrite_moves() {
  return {
      {"associativity", 2, "pants * id(1) ; pants", "id(1) * pants ; pants"},
      {"commutativity", 2, "swap ; pants", "pants"},
      {"unit", 2, "cup * id(1) ; pants", "id(1)"},
      {"coassociativity", 2, "copants ; copants * id(1)", "copants ; id(1) * copants"},
      {"counit", 2, "copants ; cap * id(1)", "id(1)"},
      {"frobenius", 2, "copants * id(1) ; id(1) * pants", "pants ; copants"},
      {"frobenius-mirror", 2, "id(1) * copants ; pants * id(1)", "pants ; copants"},
      {"snake", 1, "idP * coev ; idP * swap ; ev * idP", "idP"},
  };
}

}  // namespace fieldwork::cobordism
