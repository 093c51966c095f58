#pragma once

#include "fieldwork/fieldtheory/polynomial.hpp"
#include "fieldwork/fieldtheory/weyl.hpp"

namespace fieldwork::fieldtheory {

/// Polynomial function on T*R in the variables (p, q).
using PoissonPolynomial = Polynomial;

inline constexpr std::size_t kP = 0;
inline constexpr std::size_t kQ = 1;

inline PoissonPolynomial poisson_p() { return Polynomial::variable(2, kP); }
inline PoissonPolynomial poisson_q() { return Polynomial::variable(2, kQ); }

/// {f, g} = df/dp dg/dq - df/dq dg/dp, so {p, q} = 1.
inline PoissonPolynomial poisson_bracket(const PoissonPolynomial& f, const PoissonPolynomial& g) {
  if (f.nvars() != 2 || g.nvars() != 2) throw ValidationError("Poisson polynomials have two variables p, q");
  return f.derivative(kP) * g.derivative(kQ) - f.derivative(kQ) * g.derivative(kP);
}

struct SemiclassicalReport {
  bool holds = false;
  WeylElement commutator;
  PoissonPolynomial bracket{2};
  WeylElement difference;  // [f, g] - hbar {f, g}
};

/// Checks [f, g] = hbar {f, g} modulo hbar^2 for hbar-free f, g.
inline SemiclassicalReport semiclassical_check(const WeylElement& f, const WeylElement& g) {
  if (!f.is_hbar_free() || !g.is_hbar_free()) throw ValidationError("semiclassical check needs hbar-free symbols");
  SemiclassicalReport r;
  r.commutator = weyl_commutator(f, g);
  r.bracket = poisson_bracket(classical_image(f), classical_image(g));
  r.difference = r.commutator - weyl_product(WeylElement::hbar(), weyl_symbol(r.bracket));
  r.holds = r.difference.is_zero() || r.difference.min_hbar_power() >= 2;
  return r;
}

}  // namespace fieldwork::fieldtheory
