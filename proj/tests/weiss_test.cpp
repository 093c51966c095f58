#include <gtest/gtest.h>

#include "fieldwork/weiss.hpp"
#include "oracles.hpp"

namespace fw = fieldwork;
namespace ws = fieldwork::weiss;
using ws::Subset;

namespace {

// Points of the grid with x > -1 and with x < 1.
ws::CoverFamily half_planes(const ws::FinitePointModel& grid) {
  Subset right, left;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid.coordinates[i][0] > -1) right.push_back(i);
    if (grid.coordinates[i][0] < 1) left.push_back(i);
  }
  return ws::CoverFamily(grid, {right, left});
}

Subset members_of_mask(unsigned mask) {
  Subset s;
  for (std::size_t i = 0; i < 32; ++i) {
    if (mask & (1u << i)) s.push_back(i);
  }
  return s;
}

// Antichains of nonempty subsets of an n-set, as lists of bit masks.
void antichains(unsigned n, unsigned next, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (unsigned m = next; m < (1u << n); ++m) {
    bool ok = true;
    for (auto c : cur) {
      if ((c & m) == c || (c & m) == m) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    cur.push_back(m);
    antichains(n, m + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST(Weiss, HalfPlanesOnGridRejected) {
  const auto grid = ws::FinitePointModel::grid(-10, 10, 2);
  ASSERT_EQ(grid.size(), 441u);
  const auto fam = half_planes(grid);
  const auto r = ws::is_weiss_cover(grid, fam, 2);
  EXPECT_FALSE(r.is_weiss);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->size(), 2u);
  EXPECT_EQ(grid.describe(*r.witness), "{(-10,-10),(1,-10)}");
  const Subset far{grid.index_of("(-6,0)"), grid.index_of("(6,0)")};
  EXPECT_FALSE(fam.covering_member(far).has_value());
  // singletons are covered, so the family is an ordinary cover
  EXPECT_TRUE(ws::is_weiss_cover(grid, fam, 1).is_weiss);
}

TEST(Weiss, WholeSpaceIsWeiss) {
  const auto m = ws::FinitePointModel::numbered(6);
  const ws::CoverFamily fam(m, {Subset{0, 1, 2, 3, 4, 5}});
  for (std::size_t k = 1; k <= 7; ++k) EXPECT_TRUE(ws::is_weiss_cover(m, fam, k).is_weiss);
}

TEST(Weiss, DisjointBallUnions) {
  const auto grid = ws::FinitePointModel::grid(0, 3, 2);
  for (long radius : {0L, 1L}) {
    for (std::size_t j = 1; j <= 2; ++j) {
      const ws::CoverFamily fam(grid, ws::disjoint_ball_unions(grid, radius, j));
      for (std::size_t k = 1; k <= j; ++k) EXPECT_TRUE(ws::is_weiss_cover(grid, fam, k).is_weiss) << radius << j << k;
      // with radius 0 the members have at most j points
      if (radius == 0) EXPECT_FALSE(ws::is_weiss_cover(grid, fam, j + 1).is_weiss);
    }
  }
}

TEST(Ran, Counts) {
  EXPECT_EQ(ws::ran_points(ws::FinitePointModel::numbered(3), 3).size(), 7u);
  EXPECT_EQ(ws::ran_points(ws::FinitePointModel::numbered(3), 2).size(), 6u);
  EXPECT_EQ(ws::ran_points(ws::FinitePointModel::numbered(5), 1).size(), 5u);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 1; k <= 4; ++k) {
      std::size_t expected = 0;
      for (std::size_t i = 1; i <= k; ++i) expected += oracle::binomial(n, i);
      EXPECT_EQ(ws::ran_points(ws::FinitePointModel::numbered(n), k).size(), expected);
    }
  }
}

TEST(Ran, PairwiseFamilyOnThreePoints) {
  const auto m = ws::FinitePointModel::numbered(3);
  const ws::CoverFamily fam(m, {Subset{0, 1}, Subset{0, 2}, Subset{1, 2}});
  const auto two = ws::weiss_ran_correspondence(m, fam, 2);
  EXPECT_TRUE(two.weiss);
  EXPECT_TRUE(two.ran_covered);
  EXPECT_TRUE(two.agree);
  const auto three = ws::weiss_ran_correspondence(m, fam, 3);
  EXPECT_FALSE(three.weiss);
  EXPECT_FALSE(three.ran_covered);
  EXPECT_TRUE(three.agree);
  EXPECT_EQ(m.describe(*ws::is_weiss_cover(m, fam, 3).witness), "{1,2,3}");
}

TEST(Ran, WholeSpaceBothSidesTrue) {
  const auto m = ws::FinitePointModel::numbered(4);
  const ws::CoverFamily fam(m, {Subset{0, 1, 2, 3}});
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto r = ws::weiss_ran_correspondence(m, fam, k);
    EXPECT_TRUE(r.weiss && r.ran_covered && r.agree);
  }
}

// Every family over at most four points, every k <= 3.
TEST(Ran, CorrespondenceExhaustiveUpToFourPoints) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto m = ws::FinitePointModel::numbered(n);
    const unsigned nonempty = (1u << n) - 1;
    for (unsigned fam_mask = 1; fam_mask < (1u << nonempty); ++fam_mask) {
      std::vector<Subset> members;
      for (unsigned b = 0; b < nonempty; ++b) {
        if (fam_mask & (1u << b)) members.push_back(members_of_mask(b + 1));
      }
      const ws::CoverFamily fam(m, members);
      bool previous = true;
      for (std::size_t k = 1; k <= 3; ++k) {
        const auto r = ws::weiss_ran_correspondence(m, fam, k);
        ASSERT_TRUE(r.agree);
        // monotone in k
        if (!previous) EXPECT_FALSE(r.weiss);
        previous = r.weiss;
      }
    }
  }
}

// Five points: both sides only see the maximal members, so antichains
// stand for every family.
TEST(Ran, CorrespondenceExhaustiveFivePointsAntichains) {
  const auto m = ws::FinitePointModel::numbered(5);
  std::vector<std::vector<unsigned>> chains;
  std::vector<unsigned> cur;
  antichains(5, 1, cur, chains);
  EXPECT_EQ(chains.size(), 7579u);  // Dedekind number M(5) minus the two trivial antichains
  for (const auto& ch : chains) {
    std::vector<Subset> members;
    for (auto mask : ch) members.push_back(members_of_mask(mask));
    const ws::CoverFamily fam(m, members);
    for (std::size_t k = 1; k <= 3; ++k) ASSERT_TRUE(ws::weiss_ran_correspondence(m, fam, k).agree);
  }
}

TEST(Weiss, Validation) {
  const auto m = ws::FinitePointModel::numbered(3);
  EXPECT_THROW(ws::CoverFamily(m, {}), fw::ValidationError);
  EXPECT_THROW(ws::CoverFamily(m, {Subset{}}), fw::ValidationError);
  EXPECT_THROW(ws::CoverFamily(m, {Subset{3}}), fw::ValidationError);
  EXPECT_THROW(ws::FinitePointModel({"a", "a"}), fw::ValidationError);
}
