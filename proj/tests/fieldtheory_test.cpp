#include <gtest/gtest.h>

#include "fieldwork/fieldtheory.hpp"
#include "oracles.hpp"

namespace fw = fieldwork;
namespace ft = fieldwork::fieldtheory;
using fw::Rational;
using ft::Polynomial;
using ft::WeylElement;
using ft::WeylLetter;

namespace {

Polynomial poly(std::size_t n, std::initializer_list<std::pair<ft::Exponent, Rational>> terms) {
  Polynomial p(n);
  for (const auto& [e, c] : terms) p.add(e, c);
  return p;
}

std::vector<WeylLetter> word(std::string_view s) { return ft::parse_weyl_word(s); }

}  // namespace

TEST(Jacobian, SumOfSquares) {
  const auto g = ft::jacobian_generators(poly(2, {{{2, 0}, 1}, {{0, 2}, 1}}));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], poly(2, {{{1, 0}, 2}}));
  EXPECT_EQ(g[1], poly(2, {{{0, 1}, 2}}));
}

TEST(Jacobian, ZeroAction) {
  for (const auto& g : ft::jacobian_generators(Polynomial(3))) EXPECT_TRUE(g.is_zero());
}

TEST(Jacobian, CubicMinusSquare) {
  const auto g = ft::jacobian_generators(poly(2, {{{3, 0}, 1}, {{0, 2}, -1}}));
  EXPECT_EQ(g[0], poly(2, {{{2, 0}, 3}}));
  EXPECT_EQ(g[1], poly(2, {{{0, 1}, -2}}));
  EXPECT_EQ(g[0].str({"x", "y"}), "3*x^2");
}

TEST(Dcrit, ZeroActionHasZeroDifferential) {
  const auto r = ft::dcrit_koszul_dims(Polynomial(1), 5);
  EXPECT_TRUE(r.zero_differential);
  EXPECT_EQ(r.faithful_max, 5u);
  EXPECT_EQ(r.homology, r.complex_dims);
  EXPECT_EQ(r.homology[0], std::vector<std::size_t>(6, 1));
  EXPECT_EQ(r.homology[1], std::vector<std::size_t>(6, 1));
}

TEST(Dcrit, ZeroActionTwoVariablesFullDimensions) {
  const auto r = ft::dcrit_koszul_dims(Polynomial(2), 4);
  for (std::size_t j = 0; j <= 2; ++j) {
    for (std::size_t p = 0; p <= 4; ++p) EXPECT_EQ(r.homology[j][p], oracle::binomial(2, j) * (p + 1));
  }
}

TEST(Dcrit, HalfSquareIsAPoint) {
  const auto r = ft::dcrit_koszul_dims(poly(1, {{{2}, Rational(1, 2)}}), 6);
  EXPECT_EQ(r.partial_degree, 1u);
  EXPECT_EQ(r.faithful_max, 5u);
  EXPECT_EQ(r.homology[0], (std::vector<std::size_t>{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(r.homology[1], (std::vector<std::size_t>(6, 0)));
}

TEST(Dcrit, CubeGivesDualNumbers) {
  const auto r = ft::dcrit_koszul_dims(poly(1, {{{3}, Rational(1, 3)}}), 6);
  EXPECT_EQ(r.homology[0], (std::vector<std::size_t>{1, 1, 0, 0, 0}));
  EXPECT_EQ(r.homology[1], (std::vector<std::size_t>(5, 0)));
}

// Partials x^2, y^2 form a regular sequence: H_0 = Q[x,y]/(x^2,y^2).
TEST(Dcrit, RegularSequenceTwoVariables) {
  const auto r = ft::dcrit_koszul_dims(poly(2, {{{3, 0}, Rational(1, 3)}, {{0, 3}, Rational(1, 3)}}), 7);
  EXPECT_EQ(r.homology[0], (std::vector<std::size_t>{1, 2, 1, 0, 0, 0}));
  for (std::size_t j = 1; j <= 2; ++j) EXPECT_EQ(r.homology[j], (std::vector<std::size_t>(6, 0)));
}

// S = x^2 y: partials 2xy, x^2 share the factor x, so H_1 is nonzero.
TEST(Dcrit, NonRegularPartialsHaveHigherHomology) {
  const auto r = ft::dcrit_koszul_dims(poly(2, {{{2, 1}, 1}}), 6);
  std::size_t h1 = 0;
  for (auto x : r.homology[1]) h1 += x;
  EXPECT_GT(h1, 0u);
}

// Euler characteristic of each weight piece matches the complex, for every
// homogeneous S in a small family.
TEST(Dcrit, EulerCharacteristicPerWeight) {
  const std::vector<Polynomial> family{
      poly(2, {{{2, 0}, 1}, {{1, 1}, 3}}),
      poly(2, {{{3, 0}, 1}, {{1, 2}, -1}}),
      poly(3, {{{1, 1, 1}, 1}}),
      poly(3, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}}),
  };
  for (const auto& s : family) {
    const auto r = ft::dcrit_koszul_dims(s, 6);
    const std::size_t e = r.partial_degree;
    for (std::size_t w = 0; w <= r.faithful_max; ++w) {
      long chi_h = 0, chi_c = 0;
      for (std::size_t j = 0; j <= r.nvars && j * e <= w; ++j) {
        const long sign = j % 2 == 0 ? 1 : -1;
        chi_h += sign * static_cast<long>(r.homology[j][w - j * e]);
        chi_c += sign * static_cast<long>(r.complex_dims[j][w - j * e]);
      }
      EXPECT_EQ(chi_h, chi_c) << "weight " << w;
    }
  }
}

TEST(Dcrit, Errors) {
  EXPECT_THROW(ft::dcrit_koszul_dims(poly(1, {{{4}, 1}}), 2), ft::TruncationTooSmall);
  EXPECT_THROW(ft::dcrit_koszul_dims(poly(2, {{{3, 0}, 1}, {{0, 2}, -1}}), 5), fw::ValidationError);
  EXPECT_THROW(ft::dcrit_koszul_dims(Polynomial(5), 2), fw::ScaleError);
  EXPECT_THROW(ft::dcrit_koszul_dims(Polynomial(1), 9), fw::ScaleError);
}

TEST(Poisson, Examples) {
  const auto p = ft::poisson_p(), q = ft::poisson_q();
  EXPECT_EQ(ft::poisson_bracket(p, q), Polynomial::constant(2, 1));
  EXPECT_TRUE(ft::poisson_bracket(p, p).is_zero());
  EXPECT_EQ(ft::poisson_bracket(p, q * q), Rational(2) * q);
}

namespace {

std::vector<Polynomial> pq_monomials(unsigned max_degree) {
  std::vector<Polynomial> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    for (const auto& e : ft::monomials_of_degree(2, d)) out.push_back(Polynomial::monomial(e));
  }
  return out;
}

}  // namespace

TEST(Poisson, JacobiAndLeibnizExhaustive) {
  const auto monos = pq_monomials(3);
  for (const auto& f : monos) {
    for (const auto& g : monos) {
      EXPECT_EQ(ft::poisson_bracket(f, g), Rational(-1) * ft::poisson_bracket(g, f));
      for (const auto& h : monos) {
        const auto jac = ft::poisson_bracket(f, ft::poisson_bracket(g, h)) +
                         ft::poisson_bracket(g, ft::poisson_bracket(h, f)) +
                         ft::poisson_bracket(h, ft::poisson_bracket(f, g));
        EXPECT_TRUE(jac.is_zero());
        EXPECT_EQ(ft::poisson_bracket(f, g * h), ft::poisson_bracket(f, g) * h + g * ft::poisson_bracket(f, h));
      }
    }
  }
}

TEST(Weyl, CanonicalCommutator) {
  EXPECT_EQ(ft::weyl_commutator(WeylElement::p(), WeylElement::q()), WeylElement::hbar());
  EXPECT_EQ(ft::weyl_normal_form(word("p q")) - ft::weyl_normal_form(word("q p")), WeylElement::hbar());
}

TEST(Weyl, NormalWordUnchanged) { EXPECT_EQ(ft::weyl_normal_form(word("q p")), WeylElement::monomial(1, 1)); }

TEST(Weyl, SquaresCommutator) {
  WeylElement expected = WeylElement::monomial(1, 1, 1, 4);
  expected.add({0, 0, 2}, 2);
  const auto rewritten = ft::weyl_normal_form(word("p p q q")) - ft::weyl_normal_form(word("q q p p"));
  EXPECT_EQ(rewritten, expected);
  const auto p2 = WeylElement::monomial(0, 2), q2 = WeylElement::monomial(2, 0);
  EXPECT_EQ(ft::weyl_commutator(p2, q2), expected);
  EXPECT_EQ(expected.str(), "4*hbar*q*p + 2*hbar^2");
}

TEST(Weyl, WordParser) {
  EXPECT_EQ(word("p^2*q hbar"), (std::vector<WeylLetter>{WeylLetter::P, WeylLetter::P, WeylLetter::Q, WeylLetter::Hbar}));
  EXPECT_EQ(word("pqh").size(), 3u);
  EXPECT_THROW(word("p x"), fw::ParseError);
  EXPECT_THROW(word("p^"), fw::ParseError);
}

namespace {

// Words over {p, q} of length <= n, and every normal-ordered monomial
// q^a p^b hbar^c with a + b + c <= n.
std::vector<std::vector<WeylLetter>> all_words(std::size_t n) {
  std::vector<std::vector<WeylLetter>> out{{}};
  std::vector<std::vector<WeylLetter>> layer{{}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<std::vector<WeylLetter>> next;
    for (const auto& w : layer) {
      for (auto l : {WeylLetter::P, WeylLetter::Q, WeylLetter::Hbar}) {
        auto x = w;
        x.push_back(l);
        next.push_back(x);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<WeylElement> weyl_monomials(unsigned n) {
  std::vector<WeylElement> out;
  for (unsigned a = 0; a <= n; ++a) {
    for (unsigned b = 0; a + b <= n; ++b) {
      for (unsigned c = 0; a + b + c <= n; ++c) out.push_back(WeylElement::monomial(a, b, c));
    }
  }
  return out;
}

}  // namespace

// Rewriting and the closed product formula agree on every word of length
// <= 6 split at every point, which also shows the rewrite result does not
// depend on where the word is cut.
TEST(Weyl, RewritingAgreesWithProductFormula) {
  for (const auto& w : all_words(6)) {
    const auto nf = ft::weyl_normal_form(w);
    for (std::size_t cut = 0; cut <= w.size(); ++cut) {
      const std::vector<WeylLetter> a(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
      const std::vector<WeylLetter> b(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
      EXPECT_EQ(ft::weyl_product(ft::weyl_normal_form(a), ft::weyl_normal_form(b)), nf);
    }
  }
}

TEST(Weyl, AssociativityExhaustiveDegreeFour) {
  const auto monos = weyl_monomials(4);
  std::size_t triples = 0;
  for (const auto& x : monos) {
    for (const auto& y : monos) {
      for (const auto& z : monos) {
        const auto deg = [](const WeylElement& e) {
          const auto& m = e.terms().begin()->first;
          return m[0] + m[1] + m[2];
        };
        if (deg(x) + deg(y) + deg(z) > 4) continue;
        ++triples;
        EXPECT_EQ(ft::weyl_product(ft::weyl_product(x, y), z), ft::weyl_product(x, ft::weyl_product(y, z)));
      }
    }
  }
  EXPECT_GT(triples, 0u);
}

TEST(Weyl, HbarCentralAndClassicalLimit) {
  const auto monos = weyl_monomials(3);
  for (const auto& x : monos) {
    EXPECT_EQ(ft::weyl_product(x, WeylElement::hbar()), ft::weyl_product(WeylElement::hbar(), x));
    for (const auto& y : monos) {
      const auto limit = ft::hbar_zero(ft::weyl_product(x, y));
      const auto xs = ft::hbar_zero(x), ys = ft::hbar_zero(y);
      if (xs.is_zero() || ys.is_zero()) {
        EXPECT_TRUE(limit.is_zero());
        continue;
      }
      EXPECT_EQ(ft::classical_image(limit), ft::classical_image(xs) * ft::classical_image(ys));
    }
  }
}

TEST(Semiclassical, Examples) {
  const auto pq = ft::semiclassical_check(WeylElement::p(), WeylElement::q());
  EXPECT_TRUE(pq.holds);
  EXPECT_TRUE(pq.difference.is_zero());

  const auto sq = ft::semiclassical_check(WeylElement::monomial(0, 2), WeylElement::monomial(2, 0));
  EXPECT_TRUE(sq.holds);
  EXPECT_EQ(sq.difference, WeylElement::monomial(0, 0, 2, 2));

  const auto pp = ft::semiclassical_check(WeylElement::p(), WeylElement::p());
  EXPECT_TRUE(pp.holds);
  EXPECT_TRUE(pp.difference.is_zero());

  EXPECT_THROW(ft::semiclassical_check(WeylElement::hbar(), WeylElement::p()), fw::ValidationError);
}

TEST(Semiclassical, ExhaustiveDegreeThree) {
  const auto monos = weyl_monomials(3);
  for (const auto& f : monos) {
    if (!f.is_hbar_free()) continue;
    for (const auto& g : monos) {
      if (!g.is_hbar_free()) continue;
      const auto r = ft::semiclassical_check(f, g);
      EXPECT_TRUE(r.holds) << f.str() << " , " << g.str();
    }
  }
}
