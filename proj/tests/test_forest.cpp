#include <sstream>

#include <gtest/gtest.h>

#include <surfwalk/forest.hpp>

#include "fixtures.hpp"

using namespace surfwalk;

namespace {

  struct Built {
    TypeReport types;
    Forest     forest;
  };

  Built const& forest_g2r6() {
    static Built const built = [] {
      auto const& b     = fixture::ball(2, 6);
      auto        types = vertex_types(b);
      auto        f     = build_forest(b, types);
      return Built{std::move(types), std::move(f)};
    }();
    return built;
  }

}  // namespace

TEST(UnionFind, Basics) {
  UnionFind uf(5);
  EXPECT_EQ(uf.components(), 5u);
  EXPECT_TRUE(uf.unite(0, 1));
  EXPECT_TRUE(uf.unite(2, 3));
  EXPECT_FALSE(uf.unite(1, 0));
  EXPECT_TRUE(uf.unite(1, 3));
  EXPECT_FALSE(uf.unite(0, 2));
  EXPECT_EQ(uf.find(0), uf.find(3));
  EXPECT_EQ(uf.components(), 2u);
}

TEST(BuildForest, GenusTwoRadiusSixPasses) {
  auto const& b    = fixture::ball(2, 6);
  auto const& f    = forest_g2r6().forest;
  auto        cert = verify_forest(b, f.mask);
  EXPECT_TRUE(cert.degree_ok());
  EXPECT_TRUE(cert.acyclic());
  EXPECT_TRUE(cert.spanning());
  EXPECT_TRUE(cert.matching());
  EXPECT_TRUE(cert.passed());
  EXPECT_FALSE(cert.inconclusive());
  EXPECT_GT(cert.checked_vertices, 0u);
  EXPECT_GT(count_components(b, f.mask), 1u);
  EXPECT_GE(f.stats.min_phase2_candidates, 1u);
}

TEST(BuildForest, IdentityLosesOneEdgeInPhaseTwo) {
  auto const& b = fixture::ball(2, 6);
  auto const& f = forest_g2r6().forest;
  int removed = 0;
  for (Letter s = 0; s < 8; ++s) {
    auto st = f.mask.state(0, s);
    EXPECT_NE(st, EdgeState::removed_phase1);
    removed += st == EdgeState::removed_phase2 ? 1 : 0;
  }
  EXPECT_EQ(removed, 1);
  EXPECT_EQ(f.mask.state(0, 0), EdgeState::removed_phase2);  // smallest letter
  EXPECT_EQ(f.mask.masked_degree(b, 0), 7);
}

TEST(BuildForest, TypeTwoVerticesOnlyLosePhaseOneEdge) {
  auto const& b     = fixture::ball(2, 6);
  auto const& built = forest_g2r6();
  std::size_t seen  = 0;
  for (VertexId v = 0; v < b.size(); ++v) {
    if (built.types.type_of[v] != 2) {
      continue;
    }
    ++seen;
    int p1 = 0;
    int p2 = 0;
    for (Letter s = 0; s < 8; ++s) {
      if (b.neighbor(v, s) == absent) {
        continue;
      }
      auto st = built.forest.mask.state(v, s);
      p1 += st == EdgeState::removed_phase1 ? 1 : 0;
      p2 += st == EdgeState::removed_phase2 ? 1 : 0;
    }
    EXPECT_EQ(p1, 1);
    EXPECT_EQ(p2, 0);
  }
  EXPECT_EQ(seen, built.forest.stats.phase1_removed);
}

TEST(BuildForest, MaskedDegrees) {
  auto const& b = fixture::ball(2, 6);
  auto const& f = forest_g2r6().forest;
  for (VertexId v = 0; v < b.size(); ++v) {
    if (!b.interior(v)) {
      continue;
    }
    int d = f.mask.masked_degree(b, v);
    if (f.mask.deferred(v)) {
      EXPECT_EQ(d, 8);
    } else {
      EXPECT_EQ(d, 7);
    }
  }
  EXPECT_EQ(f.mask.deferred_count(), f.stats.deferred);
  auto p1 = f.mask.removed(b, EdgeState::removed_phase1);
  auto p2 = f.mask.removed(b, EdgeState::removed_phase2);
  EXPECT_EQ(p1.size(), f.stats.phase1_removed);
  EXPECT_EQ(p2.size(), f.stats.phase2_removed);
}

TEST(BuildForest, GenusThreeRadiusFour) {
  auto b     = build_ball(surface_presentation(3), 4);
  auto types = vertex_types(b);
  auto f     = build_forest(b, types);
  auto cert  = verify_forest(b, f.mask);
  EXPECT_TRUE(cert.passed());
  EXPECT_FALSE(cert.inconclusive());
}

TEST(BuildForest, SmallRadiusRejected) {
  auto b = build_ball(surface_presentation(2), 2);
  try {
    build_forest(b, vertex_types(b));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::insufficient_radius);
  }
}

TEST(VerifyForest, EmptyMaskFailsDegreeAndAcyclicity) {
  auto const& b = fixture::ball(2, 4);
  ForestMask  mask(b);
  auto        cert = verify_forest(b, mask);
  EXPECT_FALSE(cert.degree_ok());
  ASSERT_FALSE(cert.degree_failures.empty());
  EXPECT_EQ(cert.degree_failures.front(), 0u);
  EXPECT_FALSE(cert.acyclic());
  EXPECT_FALSE(cert.passed());
}

TEST(VerifyForest, RestoredOctagonIsACycle) {
  auto const& b    = fixture::ball(2, 6);
  ForestMask  mask = forest_g2r6().forest.mask;
  // Walk the relator from the identity and keep every edge of the octagon.
  VertexId v = 0;
  for (Letter s : b.presentation().relators()[0]) {
    mask.set(b, v, s, EdgeState::kept);
    v = b.neighbor(v, s);
    ASSERT_NE(v, absent);
  }
  EXPECT_EQ(v, 0u);
  auto cert = verify_forest(b, mask);
  EXPECT_FALSE(cert.acyclic());
  EXPECT_FALSE(cert.passed());
}

TEST(VerifyForest, DoubleRemovalBreaksMatching) {
  auto const& b    = fixture::ball(2, 4);
  ForestMask  mask(b);
  mask.set(b, 0, 0, EdgeState::removed_phase2);
  mask.set(b, 0, 2, EdgeState::removed_phase2);
  auto cert = verify_forest(b, mask);
  EXPECT_FALSE(cert.matching());
  ASSERT_FALSE(cert.touched_twice.empty());
  EXPECT_EQ(cert.touched_twice.front(), 0u);
}

TEST(CountComponents, Examples) {
  auto b0 = build_ball(surface_presentation(2), 0);
  EXPECT_EQ(count_components(b0, ForestMask(b0)), 1u);
  auto b2 = build_ball(surface_presentation(2), 2);
  EXPECT_GE(count_components(b2, ForestMask(b2)), 1u);
}

TEST(ForestDump, MarkerColumn) {
  auto const&       b = fixture::ball(2, 6);
  std::stringstream ss;
  write_forest_edge_list(ss, b, forest_g2r6().forest.mask);
  std::string line;
  std::getline(ss, line);
  EXPECT_EQ(line, "vertices " + std::to_string(b.size()) + " radius 6 genus 2");
  std::size_t p1 = 0;
  std::size_t p2 = 0;
  std::size_t kept = 0;
  while (std::getline(ss, line)) {
    auto marker = line.substr(line.rfind(' ') + 1);
    p1 += marker == "removed-p1";
    p2 += marker == "removed-p2";
    kept += marker == "kept";
  }
  EXPECT_EQ(p1, forest_g2r6().forest.stats.phase1_removed);
  EXPECT_EQ(p2, forest_g2r6().forest.stats.phase2_removed);
  EXPECT_GT(kept, 0u);
}
