#include <sstream>

#include <gtest/gtest.h>

#include <surfwalk/cayley_ball.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace surfwalk;

TEST(BuildBall, RadiusZeroAndOne) {
  auto p  = surface_presentation(2);
  auto b0 = build_ball(p, 0);
  EXPECT_EQ(b0.size(), 1u);
  EXPECT_EQ(sphere_sizes(b0), (std::vector<std::size_t>{1}));
  auto b1 = build_ball(p, 1);
  EXPECT_EQ(b1.size(), 9u);
  EXPECT_EQ(sphere_sizes(b1), (std::vector<std::size_t>{1, 8}));
  for (Letter s = 0; s < 8; ++s) {
    EXPECT_EQ(b1.word(b1.neighbor(0, s)), Word{s});
  }
}

TEST(BuildBall, NegativeRadiusRejected) {
  EXPECT_THROW(build_ball(surface_presentation(2), -1), Error);
}

TEST(BuildBall, VertexCap) {
  BallOptions opts;
  opts.vertex_cap = 100;
  try {
    build_ball(surface_presentation(2), 3, opts);
    FAIL() << "cap not enforced";
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::resource_cap);
    EXPECT_EQ(exit_code(e.kind()), 75);
  }
}

TEST(SphereSizes, MatchPartitionOracle) {
  auto p = surface_presentation(2);
  EXPECT_EQ(sphere_sizes(fixture::ball(2, 4)), oracle::sphere_sizes(p, 4));
  auto p3 = surface_presentation(3);
  EXPECT_EQ(sphere_sizes(build_ball(p3, 2)), oracle::sphere_sizes(p3, 2));
  EXPECT_EQ(sphere_sizes(build_ball(p3, 2)), (std::vector<std::size_t>{1, 12, 132}));
}

TEST(SphereSizes, MatchGrowthSeries) {
  auto sizes  = sphere_sizes(fixture::ball(2, 6));
  auto series = oracle::genus2_growth(6);
  ASSERT_EQ(sizes.size(), series.size());
  for (std::size_t n = 0; n < sizes.size(); ++n) {
    EXPECT_EQ(static_cast<std::int64_t>(sizes[n]), series[n]) << "n = " << n;
  }
}

TEST(SphereSizes, FreeGroupIsTree) {
  auto b = build_ball(free_presentation(2), 5);
  EXPECT_EQ(sphere_sizes(b), (std::vector<std::size_t>{1, 4, 12, 36, 108, 324}));
  EXPECT_FALSE(girth_at_identity(b).has_value());
}

TEST(BallInvariants, GenusTwoRadiusSix) {
  auto const& b = fixture::ball(2, 6);
  auto const& p = b.presentation();
  for (VertexId v = 0; v < b.size(); ++v) {
    Word w = b.word(v);
    ASSERT_EQ(static_cast<int>(w.size()), b.level(v));
    ASSERT_EQ(b.find(w), v);
    int present = 0;
    for (Letter s = 0; s < b.degree(); ++s) {
      VertexId u = b.neighbor(v, s);
      if (u == absent) {
        continue;
      }
      ++present;
      ASSERT_EQ(b.neighbor(u, inverse(s)), v);
      ASSERT_EQ(std::abs(b.level(u) - b.level(v)), 1);
    }
    if (b.interior(v)) {
      ASSERT_EQ(present, 8);
    }
    if (v > 0) {
      ASSERT_GE(b.level(v), b.level(v - 1));
      if (b.level(v) == b.level(v - 1)) {
        ASSERT_LT(b.word(v - 1), w);
      }
    }
    if (v % 997 == 0) {
      EXPECT_EQ(canonical_geodesic(w, p), w);
    }
  }
}

TEST(BallInvariants, LevelsAreGeodesicLengths) {
  // Every in-ball word w·s has canonical length equal to the BFS level of
  // the vertex it lands on.
  auto const& b = fixture::ball(2, 4);
  auto const& p = b.presentation();
  for (VertexId v = 0; v < b.size(); ++v) {
    for (Letter s = 0; s < 8; ++s) {
      VertexId u = b.neighbor(v, s);
      if (u != absent) {
        Word w = b.word(v);
        w.push_back(s);
        EXPECT_EQ(static_cast<int>(canonical_geodesic(w, p).size()), b.level(u));
      }
    }
  }
}

TEST(VertexTypes, Examples) {
  auto const& b     = fixture::ball(2, 5);
  auto        types = vertex_types(b);
  EXPECT_EQ(types.type_of[0], 0);
  EXPECT_TRUE(types.violations.empty());
  for (VertexId v = 1; v < b.size(); ++v) {
    EXPECT_GE(types.type_of[v], 1);
    EXPECT_LE(types.type_of[v], 2);
    if (b.level(v) < 4) {
      EXPECT_EQ(types.type_of[v], 1);
    }
  }
  // The antipode of the identity on a relator octagon has type 2.
  auto half = b.find(canonical_geodesic(Word{0, 2, 1, 3}, b.presentation()));
  ASSERT_TRUE(half.has_value());
  EXPECT_EQ(types.type_of[*half], 2);
}

TEST(GeometricProposition, GenusTwoRadiusSix) {
  auto rep = check_geometric_proposition(fixture::ball(2, 6));
  EXPECT_TRUE(rep.passed());
  EXPECT_GT(rep.type2_checked, 0u);
  EXPECT_GT(rep.type1_checked, 0u);
  EXPECT_GE(rep.min_convenient_neighbours, 1u);
}

TEST(GeometricProposition, GenusThreeRadiusFour) {
  auto b   = build_ball(surface_presentation(3), 4);
  auto rep = check_geometric_proposition(b);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(sphere_sizes(b), (std::vector<std::size_t>{1, 12, 132, 1452, 15972}));
}

TEST(GeometricProposition, SmallRadiusRejected) {
  for (int r : {0, 1, 2}) {
    try {
      check_geometric_proposition(build_ball(surface_presentation(2), r));
      FAIL();
    } catch (Error const& e) {
      EXPECT_EQ(e.kind(), ErrorKind::insufficient_radius);
    }
  }
}

TEST(GeometricProposition, ConvenientNeighboursOfIdentity) {
  auto const& b     = fixture::ball(2, 4);
  auto        types = vertex_types(b);
  // Every generator is convenient for the identity: its neighbours sit at
  // levels 0 and 2 < 2g, all of type <= 1.
  EXPECT_EQ(count_convenient(b, types, 0), 8u);
}

TEST(Girth, EqualsRelatorLength) {
  EXPECT_EQ(girth_at_identity(fixture::ball(2, 4)), 8);
  EXPECT_FALSE(girth_at_identity(fixture::ball(2, 3)).has_value());
  // Genus 3: no cycle fits in radius 5; bipartiteness then forces girth >= 12.
  EXPECT_FALSE(girth_at_identity(fixture::ball(3, 5)).has_value());
}

TEST(EdgeList, Format) {
  auto              b = build_ball(surface_presentation(2), 1);
  std::stringstream ss;
  write_edge_list(ss, b);
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, "vertices 9 radius 1 genus 2");
  std::size_t edges = 0;
  while (std::getline(ss, line)) {
    ++edges;
  }
  EXPECT_EQ(edges, 8u);
}
