#include <gtest/gtest.h>

#include "fieldwork/algebras.hpp"
#include "oracles.hpp"

namespace fw = fieldwork;
namespace alg = fieldwork::algebras;
namespace cat = fieldwork::algebras::catalog;
using fw::Matrix;
using fw::Rational;
using fw::Vector;

TEST(ValidateAlgebra, DualNumbersAreValid) { EXPECT_FALSE(alg::first_axiom_failure(cat::dual_numbers()).has_value()); }

TEST(ValidateAlgebra, GroupAlgebraOfZ2IsValid) {
  // Same shape as the dual numbers but x*x = 1.
  alg::StructureConstantAlgebra::Constants c(2, std::vector<Vector>(2, Vector(2)));
  c[0][0][0] = 1;
  c[0][1][1] = 1;
  c[1][0][1] = 1;
  c[1][1][0] = 1;
  const alg::StructureConstantAlgebra a({"1", "x"}, c, Vector{1, 0});
  EXPECT_FALSE(alg::first_axiom_failure(a).has_value());
  EXPECT_EQ(a, cat::cyclic_group_algebra(2));
}

TEST(ValidateAlgebra, AllCatalogAlgebrasValid) {
  for (const auto& a : cat::bundled_associative()) EXPECT_NO_THROW(alg::validated(a)) << a.dim();
  for (const auto& g : cat::bundled_lie()) EXPECT_NO_THROW(alg::validated(g)) << g.dim();
}

TEST(ValidateAlgebra, ReportsUnitFailure) {
  const alg::StructureConstantAlgebra a({"1", "x"},
                                        alg::StructureConstantAlgebra::Constants(2, std::vector<Vector>(2, Vector(2))),
                                        Vector{1, 0});
  const auto failure = alg::first_axiom_failure(a);
  ASSERT_TRUE(failure.has_value());
  EXPECT_EQ(failure->kind, alg::AxiomFailure::Kind::Unit);
  EXPECT_EQ(failure->indices[0], 0u);
}

TEST(ValidateAlgebra, ReportsAssociativityFailure) {
  // Unital on basis {1, a, b} but a*a = b, a*b = 0, b*a = 1 breaks (a a) b = a (a b)... and more.
  alg::StructureConstantAlgebra::Constants c(3, std::vector<Vector>(3, Vector(3)));
  for (std::size_t i = 0; i < 3; ++i) {
    c[0][i][i] = 1;
    c[i][0][i] = 1;
  }
  c[1][1][2] = 1;  // a a = b
  c[2][1][0] = 1;  // b a = 1
  const alg::StructureConstantAlgebra a({"1", "a", "b"}, c, Vector{1, 0, 0});
  const auto failure = alg::first_axiom_failure(a);
  ASSERT_TRUE(failure.has_value());
  EXPECT_EQ(failure->kind, alg::AxiomFailure::Kind::Assoc);
  // (a a) a = b a = 1 but a (a a) = a b = 0.
  EXPECT_EQ(failure->indices, (std::array<std::size_t, 3>{1, 1, 1}));
  EXPECT_THROW(alg::validated(a), alg::AxiomError);
}

TEST(ValidateAlgebra, LieAntisymmetryFailure) {
  alg::LieAlgebra::Constants f(2, std::vector<Vector>(2, Vector(2)));
  f[0][1][0] = 1;
  f[1][0][0] = 1;  // symmetric, not antisymmetric
  const alg::LieAlgebra g({"x1", "x2"}, f);
  const auto failure = alg::first_axiom_failure(g);
  ASSERT_TRUE(failure.has_value());
  EXPECT_EQ(failure->kind, alg::AxiomFailure::Kind::Antisym);
  EXPECT_EQ(failure->indices[0], 0u);
  EXPECT_EQ(failure->indices[1], 1u);
  EXPECT_EQ(failure->describe(g.basis_names()), "AntisymFail(x1,x2)");
}

TEST(ValidateAlgebra, LieJacobiFailure) {
  // Antisymmetric but not Jacobi: [x,y] = x, [y,z] = x, [x,z] = y.
  alg::LieAlgebra::Constants f(3, std::vector<Vector>(3, Vector(3)));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
    f[i][j][k] = 1;
    f[j][i][k] = -1;
  };
  set(0, 1, 0);
  set(1, 2, 0);
  set(0, 2, 1);
  const auto failure = alg::first_axiom_failure(alg::LieAlgebra({"x", "y", "z"}, f));
  ASSERT_TRUE(failure.has_value());
  EXPECT_EQ(failure->kind, alg::AxiomFailure::Kind::Jacobi);
}

TEST(Frobenius, DualNumbersPairingDualBasisHandle) {
  const auto s = alg::frobenius_check_and_handle(cat::frobenius_dual_numbers());
  EXPECT_EQ(s.pairing, Matrix::from_rows({{0, 1}, {1, 0}}));
  ASSERT_EQ(s.dual_basis.size(), 2u);
  EXPECT_EQ(s.dual_basis[0], (Vector{0, 1}));  // e^1 = x
  EXPECT_EQ(s.dual_basis[1], (Vector{1, 0}));  // e^2 = 1
  EXPECT_EQ(s.handle, (Vector{0, 2}));         // h = 2x
}

TEST(Frobenius, SplitPairHandleIsUnit) {
  const auto s = alg::frobenius_check_and_handle(cat::frobenius_split_pair());
  EXPECT_EQ(s.handle, (Vector{1, 1}));
}

TEST(Frobenius, DegeneratePairingWitness) {
  const alg::FrobeniusAlgebra f(cat::dual_numbers(), Vector{1, 0});
  try {
    (void)alg::frobenius_check_and_handle(f);
    FAIL() << "expected DegeneratePairing";
  } catch (const alg::DegeneratePairing& e) {
    EXPECT_EQ(e.witness(), (Vector{0, 1}));
  }
}

TEST(Frobenius, RejectsNoncommutative) {
  EXPECT_THROW(alg::FrobeniusAlgebra(cat::matrix_algebra(2), Vector{1, 0, 0, 1}), alg::AxiomError);
}

// Tr(h) = dim A; coassociativity; counit; Frobenius relation; m o Delta = h.
TEST(Frobenius, StructuralIdentitiesOnBundledAlgebras) {
  for (const auto& f : cat::bundled_frobenius()) {
    const auto s = alg::frobenius_check_and_handle(f);
    const std::size_t d = f.dim();
    const Matrix id = Matrix::identity(d);
    const Matrix m = f.algebra().multiplication_matrix();
    const Matrix tr = Matrix::from_rows({f.trace()});

    EXPECT_EQ(f.trace_of(s.handle), Rational(static_cast<long>(d)));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        EXPECT_EQ(f.trace_of(f.algebra().multiply(fw::unit_vector(d, i), s.dual_basis[j])), Rational(i == j ? 1 : 0));
      }
    }
    EXPECT_EQ(fw::kron(s.comult, id) * s.comult, fw::kron(id, s.comult) * s.comult);
    EXPECT_EQ(fw::kron(tr, id) * s.comult, id);
    EXPECT_EQ(fw::kron(id, tr) * s.comult, id);
    EXPECT_EQ(fw::kron(id, m) * fw::kron(s.comult, id), s.comult * m);
    EXPECT_EQ(fw::kron(m, id) * fw::kron(id, s.comult), s.comult * m);
    EXPECT_EQ(m * s.comult, f.algebra().left_multiplication(s.handle));
  }
}

TEST(CeHomology, AbelianGivesBinomialRows) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::size_t> expected;
    for (std::size_t k = 0; k <= n; ++k) expected.push_back(oracle::binomial(n, k));
    EXPECT_EQ(alg::ce_complex_homology(alg::LieAlgebra::abelian(n)), expected);
  }
}

// Oracle: rank the two nonzero CE differentials independently.
TEST(CeHomology, Sl2) {
  const auto c = alg::ce_chain_complex(cat::sl2());
  EXPECT_EQ(oracle::rank(c.differential(2)), 3u);
  EXPECT_EQ(oracle::rank(c.differential(3)), 0u);
  EXPECT_EQ(alg::ce_complex_homology(cat::sl2()), (std::vector<std::size_t>{1, 0, 0, 1}));
}

TEST(CeHomology, AffineLine) {
  // d(x ^ y) = -[x, y] = -y
  const auto c = alg::ce_chain_complex(cat::affine_line());
  EXPECT_EQ(c.differential(2), Matrix::from_rows({{0}, {-1}}));
  EXPECT_EQ(alg::ce_complex_homology(cat::affine_line()), (std::vector<std::size_t>{1, 1, 0}));
}

TEST(CeHomology, DegreeZeroAndOneOnBundled) {
  for (const auto& g : cat::bundled_lie()) {
    const auto h = alg::ce_complex_homology(g);
    EXPECT_EQ(h[0], 1u);
    // dim g/[g,g]: rank of the span of all brackets.
    std::vector<Vector> brackets;
    for (std::size_t i = 0; i < g.dim(); ++i) {
      for (std::size_t j = 0; j < g.dim(); ++j) brackets.push_back(g.bracket(i, j));
    }
    const std::size_t derived = oracle::rank(Matrix::from_columns(brackets, g.dim()));
    EXPECT_EQ(h[1], g.dim() - derived);
    EXPECT_EQ(alg::ce_cochain_cohomology(g), h);
  }
}

TEST(CeHomology, Heisenberg) {
  // Known Betti numbers of the Heisenberg Lie algebra: 1, 2, 2, 1.
  EXPECT_EQ(alg::ce_complex_homology(cat::heisenberg()), (std::vector<std::size_t>{1, 2, 2, 1}));
}

TEST(Enveloping, AbelianSortsWord) {
  const std::vector<std::size_t> word{1, 0};
  EXPECT_EQ(alg::uea_normal_form(alg::LieAlgebra::abelian(2), word, 2), alg::PBWElement::monomial({0, 1}));
}

TEST(Enveloping, Sl2FeStraightening) {
  const auto g = cat::sl2();
  const std::vector<std::size_t> fe{1, 0};
  auto expected = alg::PBWElement::monomial({0, 1});
  expected.add({2}, Rational(-1));
  const auto nf = alg::uea_normal_form(g, fe, 2);
  EXPECT_EQ(nf, expected);
  EXPECT_EQ(nf.str(g.basis_names()), "e*f - h");
}

TEST(Enveloping, OrderedWordUnchanged) {
  const std::vector<std::size_t> ef{0, 1};
  EXPECT_EQ(alg::uea_normal_form(cat::sl2(), ef, 2), alg::PBWElement::monomial({0, 1}));
}

TEST(Enveloping, RejectsWordBeyondTruncation) {
  const std::vector<std::size_t> w{0, 1, 2};
  EXPECT_THROW(alg::uea_normal_form(cat::sl2(), w, 2), fw::ValidationError);
}

namespace {

// Independent straightening: rewrite at the rightmost descent instead of
// the leftmost.
alg::PBWElement rightmost_normal_form(const alg::LieAlgebra& g, const std::vector<std::size_t>& word) {
  std::size_t pos = word.size();
  for (std::size_t i = word.size(); i-- > 1;) {
    if (word[i - 1] > word[i]) {
      pos = i - 1;
      break;
    }
  }
  if (pos == word.size()) return alg::PBWElement::monomial(word);
  alg::PBWElement out;
  auto swapped = word;
  std::swap(swapped[pos], swapped[pos + 1]);
  out.add(rightmost_normal_form(g, swapped));
  for (std::size_t k = 0; k < g.dim(); ++k) {
    const Rational& c = g.constant(word[pos], word[pos + 1], k);
    if (c.is_zero()) continue;
    std::vector<std::size_t> shorter(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pos));
    shorter.push_back(k);
    shorter.insert(shorter.end(), word.begin() + static_cast<std::ptrdiff_t>(pos + 2), word.end());
    out.add(rightmost_normal_form(g, shorter), c);
  }
  return out;
}

void all_words(std::size_t dim, std::size_t len, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    cur.push_back(i);
    all_words(dim, len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

// Confluence and multiplicativity, exhaustive over words of length <= 4 for
// the bundled Lie algebras of dimension <= 3.
TEST(Enveloping, ConfluenceAndMultiplicativityExhaustive) {
  for (const auto& g : cat::bundled_lie()) {
    alg::Straightener s(g);
    for (std::size_t len = 0; len <= 4; ++len) {
      std::vector<std::vector<std::size_t>> words;
      std::vector<std::size_t> cur;
      all_words(g.dim(), len, cur, words);
      for (const auto& w : words) {
        const auto nf = s.normal_form(w);
        EXPECT_EQ(nf, rightmost_normal_form(g, w));
        EXPECT_LE(nf.degree(), w.size());
        for (std::size_t cut = 0; cut <= w.size(); ++cut) {
          const std::vector<std::size_t> a(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
          const std::vector<std::size_t> b(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
          EXPECT_EQ(s.product(s.normal_form(a), s.normal_form(b)), nf);
        }
      }
    }
  }
}
