#include <gtest/gtest.h>

#include <algorithm>

#include "fieldwork/algebras/catalog.hpp"
#include "fieldwork/factline.hpp"
#include "oracles.hpp"

namespace fw = fieldwork;
namespace fl = fieldwork::factline;
namespace cat = fieldwork::algebras::catalog;
using fl::Interval;
using fl::IntervalConfig;
using fw::Matrix;
using fw::Rational;
using fw::Vector;

namespace {

Interval iv(long a, long b) { return Interval(Rational(a), Rational(b)); }
Interval iv(Rational a, Rational b) { return Interval(a, b); }

fl::NestedConfig grouped_example() {
  const IntervalConfig first({iv(0, 1), iv(2, 3)}, iv(0, 4));
  const IntervalConfig second({iv(5, 6)}, iv(Rational(9, 2), Rational(7)));
  const IntervalConfig outer({iv(0, 4), iv(Rational(9, 2), Rational(7))}, iv(0, 8));
  return fl::NestedConfig(outer, {first, second});
}

}  // namespace

TEST(Intervals, Validation) {
  EXPECT_THROW(iv(1, 1), fw::ValidationError);
  EXPECT_THROW(IntervalConfig({iv(0, 2), iv(1, 3)}, iv(0, 4)), fw::ValidationError);
  EXPECT_THROW(IntervalConfig({iv(0, 5)}, iv(0, 4)), fw::ValidationError);
  EXPECT_NO_THROW(IntervalConfig({iv(0, 1), iv(1, 2)}, iv(0, 2)));
}

TEST(LineFactAlg, RationalsAreScalars) {
  const auto f = fl::factalg_from_algebra(cat::rationals());
  const IntervalConfig c({iv(0, 1), iv(2, 3), iv(4, 5)}, iv(0, 6));
  EXPECT_EQ(f.evaluate(c, {Vector{2}, Vector{3}, Vector{Rational(1, 6)}}), (Vector{1}));
}

TEST(LineFactAlg, GroupAlgebraOfZ2) {
  const auto f = fl::factalg_from_algebra(cat::cyclic_group_algebra(2));
  const IntervalConfig c({iv(0, 1), iv(2, 3)}, iv(0, 4));
  const Vector g{0, 1};
  EXPECT_EQ(f.evaluate(c, {g, g}), (Vector{1, 0}));
}

TEST(LineFactAlg, OrderSensitivityUpperTriangular) {
  const auto f = fl::factalg_from_algebra(cat::upper_triangular());
  const Vector x{1, 0, 0};  // E11
  const Vector y{0, 1, 0};  // E12
  const IntervalConfig c({iv(0, 1), iv(2, 3)}, iv(0, 4));
  const Vector xy = f.evaluate(c, {x, y});
  const Vector yx = f.evaluate(c.reflected(), {x, y});
  EXPECT_EQ(xy, (Vector{0, 1, 0}));
  EXPECT_EQ(yx, (Vector{0, 0, 0}));
  EXPECT_NE(xy, yx);
  // listing the parts in the other tensor order does not change spatial order
  EXPECT_EQ(f.evaluate(IntervalConfig({iv(2, 3), iv(0, 1)}, iv(0, 4)), {y, x}), xy);
}

TEST(LineFactAlg, SingleInclusionIsIdentity) {
  for (const auto& a : cat::bundled_associative()) {
    const auto f = fl::factalg_from_algebra(a);
    EXPECT_EQ(f.structure_map(IntervalConfig({iv(1, 2)}, iv(0, 3))), Matrix::identity(a.dim()));
    EXPECT_EQ(f.structure_map(IntervalConfig({iv(0, 3)}, iv(0, 3))), Matrix::identity(a.dim()));
    // U in V in W composes to the identity
    const fl::NestedConfig chain(IntervalConfig({iv(1, 5)}, iv(0, 6)), {IntervalConfig({iv(2, 3)}, iv(1, 5))});
    EXPECT_TRUE(fl::check_prefactorization_axioms(f, chain).compatible);
  }
}

TEST(LineFactAlg, StructureMapMatchesMultiplicationMatrix) {
  for (const auto& a : cat::bundled_associative()) {
    const auto f = fl::factalg_from_algebra(a);
    EXPECT_EQ(f.structure_map(IntervalConfig({iv(0, 1), iv(2, 3)}, iv(0, 4))), a.multiplication_matrix());
  }
}

TEST(Prefactorization, GroupedConfigurationCompatible) {
  const auto f = fl::factalg_from_algebra(cat::cyclic_group_algebra(2));
  const auto r = fl::check_prefactorization_axioms(f, grouped_example());
  EXPECT_TRUE(r.compatible);
  EXPECT_EQ(r.tuples_checked, 8u);
}

TEST(Prefactorization, AllBundledAlgebrasCompatible) {
  for (const auto& a : cat::bundled_associative()) {
    const auto r = fl::check_prefactorization_axioms(fl::factalg_from_algebra(a), grouped_example());
    EXPECT_TRUE(r.compatible);
  }
}

TEST(Prefactorization, SingleLevelTriviallyCompatible) {
  const auto f = fl::factalg_from_algebra(cat::matrix_algebra(2));
  const IntervalConfig c({iv(0, 1), iv(2, 3)}, iv(0, 4));
  std::vector<IntervalConfig> inner;
  for (const auto& p : c.parts()) inner.emplace_back(std::vector<Interval>{p}, p);
  EXPECT_TRUE(fl::check_prefactorization_axioms(f, fl::NestedConfig(c, inner)).compatible);
}

// An evaluator that scales by the number of parts is not compatible with
// regrouping; the checker must name the nesting and tuple.
TEST(Prefactorization, BrokenEvaluatorReported) {
  const auto f = fl::factalg_from_algebra(cat::cyclic_group_algebra(2));
  fl::StructureEvaluator broken = [&f](const IntervalConfig& c, const std::vector<Vector>& xs) {
    return Rational(static_cast<long>(c.size())) * f.evaluate(c, xs);
  };
  const auto r = fl::check_prefactorization_axioms(broken, 2, grouped_example());
  EXPECT_FALSE(r.compatible);
  ASSERT_TRUE(r.failure.has_value());
  EXPECT_EQ(r.failure->tuple.size(), 3u);
  EXPECT_EQ(r.failure->composed, (Vector{4, 0}));
  EXPECT_EQ(r.failure->direct, (Vector{3, 0}));
  EXPECT_NE(r.failure->nesting.find("(0,4)"), std::string::npos);
}

// Commutative algebras: structure maps do not depend on how the parts are
// ordered or on reflecting the line.
TEST(Prefactorization, CommutativeInvariantUnderPermutationAndReflection) {
  const IntervalConfig c({iv(0, 1), iv(2, 3), iv(4, 5)}, iv(0, 6));
  for (const auto& a : cat::bundled_associative()) {
    if (!a.is_commutative()) continue;
    const auto f = fl::factalg_from_algebra(a);
    const auto tuples = fl::basis_tuples(a.dim(), 3);
    std::vector<std::size_t> order{0, 1, 2};
    do {
      const IntervalConfig p = c.permuted(order);
      for (const auto& t : tuples) {
        EXPECT_EQ(f.evaluate(p, t), f.evaluate(c, t));
        EXPECT_EQ(f.evaluate(p.reflected(), t), f.evaluate(c, t));
      }
    } while (std::next_permutation(order.begin(), order.end()));
    const fl::NestedConfig g = grouped_example();
    const fl::NestedConfig mirrored(g.outer.reflected(), {g.inner[0].reflected(), g.inner[1].reflected()});
    EXPECT_TRUE(fl::check_prefactorization_axioms(f, mirrored).compatible);
  }
}

TEST(GlobalSections, RationalsWithTrivialModules) {
  const auto ml = fl::scalar_module(fl::ModuleAction::Side::Right, {1});
  const auto mr = fl::scalar_module(fl::ModuleAction::Side::Left, {1});
  const auto g = fl::interval_global_sections(fl::LineFactAlg(cat::rationals(), ml, mr));
  EXPECT_EQ(g.dimension, 1u);
}

TEST(GlobalSections, SplitPairOppositeFactorsVanish) {
  const auto ml = fl::scalar_module(fl::ModuleAction::Side::Right, {1, 0});
  const auto mr = fl::scalar_module(fl::ModuleAction::Side::Left, {0, 1});
  EXPECT_EQ(fl::interval_global_sections(fl::LineFactAlg(cat::split_pair(), ml, mr)).dimension, 0u);
  const auto same = fl::scalar_module(fl::ModuleAction::Side::Left, {1, 0});
  EXPECT_EQ(fl::interval_global_sections(fl::LineFactAlg(cat::split_pair(), ml, same)).dimension, 1u);
}

TEST(GlobalSections, DualNumbersAugmentation) {
  const auto ml = fl::scalar_module(fl::ModuleAction::Side::Right, {1, 0});
  const auto mr = fl::scalar_module(fl::ModuleAction::Side::Left, {1, 0});
  const auto g = fl::interval_global_sections(fl::LineFactAlg(cat::dual_numbers(), ml, mr));
  EXPECT_EQ(g.dimension, 1u);
  EXPECT_EQ(g.basis, (std::vector<std::string>{"l0⊗r0"}));
}

// A (x)_A A = A for the regular bimodule.
TEST(GlobalSections, RegularModulesGiveTheAlgebra) {
  for (const auto& a : cat::bundled_associative()) {
    fl::ModuleAction ml{fl::ModuleAction::Side::Right, {}}, mr{fl::ModuleAction::Side::Left, {}};
    for (std::size_t i = 0; i < a.dim(); ++i) {
      ml.actions.push_back(a.right_multiplication(fw::unit_vector(a.dim(), i)));
      mr.actions.push_back(a.left_multiplication(fw::unit_vector(a.dim(), i)));
    }
    EXPECT_EQ(fl::interval_global_sections(fl::LineFactAlg(a, ml, mr)).dimension, a.dim());
  }
}

TEST(GlobalSections, Errors) {
  EXPECT_THROW(fl::interval_global_sections(fl::factalg_from_algebra(cat::rationals())), fw::ValidationError);
  const auto bad = fl::scalar_module(fl::ModuleAction::Side::Right, {1, 1});  // x acts by 1 but x^2 = 0
  const auto mr = fl::scalar_module(fl::ModuleAction::Side::Left, {1, 0});
  EXPECT_THROW(fl::LineFactAlg(cat::dual_numbers(), bad, mr), fw::ValidationError);
  EXPECT_THROW(fl::LineFactAlg(cat::dual_numbers(), mr, mr), fw::ValidationError);
}
