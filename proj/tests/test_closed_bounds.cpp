#include <cmath>

#include <gtest/gtest.h>

#include <surfwalk/closed_bounds.hpp>

#include "fixtures.hpp"

using namespace surfwalk;

TEST(KestenLower, Examples) {
  EXPECT_NEAR(kesten_lower(8), std::sqrt(7.0) / 4.0, 1e-15);
  EXPECT_NEAR(kesten_lower(8), 0.6614, 5e-5);
  EXPECT_NEAR(kesten_lower(12), std::sqrt(11.0) / 6.0, 1e-15);
  EXPECT_NEAR(kesten_lower(4), std::sqrt(3.0) / 2.0, 1e-15);
  EXPECT_THROW(kesten_lower(2), Error);
}

TEST(KestenGirthLower, CorrectionMatchesDirectFormula) {
  for (int g = 2; g <= 10; ++g) {
    long double k      = 4.0L * g;
    long double direct = (4.0L - 2.0L * std::sqrt(3.0L)) / ((k + 2.0L) * std::pow(k, k + 2.0L));
    auto        b      = kesten_girth_lower(g);
    EXPECT_NEAR(b.correction / static_cast<double>(direct), 1.0, 1e-6) << "g = " << g;
    EXPECT_DOUBLE_EQ(b.base, kesten_lower(4 * g));
    EXPECT_GE(b.value(), kesten_lower(4 * g));
  }
  auto g2 = kesten_girth_lower(2);
  EXPECT_GT(g2.value(), kesten_lower(8));
  EXPECT_NEAR(g2.correction, 5e-11, 2.5e-11);
  EXPECT_NEAR(g2.log10_correction, std::log10(g2.correction), 1e-12);
}

TEST(KestenGirthLower, LargeGenusDoesNotUnderflowToNan) {
  auto b = kesten_girth_lower(100);
  EXPECT_TRUE(std::isfinite(b.log10_correction));
  EXPECT_LT(b.log10_correction, -600.0);
  EXPECT_GE(b.correction, 0.0);
}

TEST(OneForm, Examples) {
  EXPECT_NEAR(one_form_c(8, std::sqrt(3.0)), std::sqrt(3.0) / 2.0, 1e-15);
  EXPECT_DOUBLE_EQ(one_form_c(8, 1.0), 1.0);
  EXPECT_NEAR(one_form_c(12, std::sqrt(5.0)), std::sqrt(5.0) / 3.0, 1e-15);
  EXPECT_THROW(one_form_c(8, 0.5), Error);
  EXPECT_THROW(one_form_c(7, 2.0), Error);
}

TEST(OneForm, OptimumClosedForms) {
  auto o = one_form_bound(8);
  EXPECT_NEAR(o.b, std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(o.c, std::sqrt(3.0) / 2.0, 1e-15);
  EXPECT_NEAR(one_form_bound(8).c, 2.0 * std::sqrt(3.0) / 4.0, 1e-15);  // h = 4
  EXPECT_NEAR(one_form_bound(40).c, 0.4359, 5e-5);
  for (int g = 2; g <= 100; ++g) {
    EXPECT_NEAR(one_form_bound(4 * g).c, std::sqrt(2.0 * g - 1.0) / g, 1e-14);
  }
  for (int h = 2; h <= 50; ++h) {
    EXPECT_NEAR(one_form_bound(2 * h).c, 2.0 * std::sqrt(h - 1.0) / h, 1e-14);
  }
}

TEST(OneForm, StrictlyConvexWithUniqueMinimiser) {
  for (int k : {4, 8, 12, 40}) {
    auto   o  = one_form_bound(k);
    double hs = 1e-3;
    for (double b = 1.0; b < 10.0; b += 0.01) {
      double second = one_form_c(k, b + hs) - 2.0 * one_form_c(k, b) + one_form_c(k, b - hs < 1.0 ? 1.0 : b - hs);
      if (b - hs >= 1.0) {
        EXPECT_GT(second, 0.0);
      }
      EXPECT_GE(one_form_c(k, b), o.c - 1e-15);
    }
  }
}

TEST(TreeBound, Examples) {
  EXPECT_NEAR(tree_bound(8, 7), std::sqrt(6.0) / 4.0 + 0.125, 1e-15);
  EXPECT_NEAR(tree_bound(8, 7), 0.7373, 1e-4);
  EXPECT_NEAR(tree_bound(40, 39), 0.3332, 5e-5);
  EXPECT_THROW(tree_bound(8, 8), Error);
  EXPECT_THROW(tree_bound(8, 1), Error);
  EXPECT_THROW(tree_bound(2, 1), Error);
}

TEST(TreeBound, BeatsOneFormForAllGenera) {
  for (int g = 2; g <= 100; ++g) {
    EXPECT_LT(tree_bound(4 * g, 4 * g - 1), one_form_bound(4 * g).c) << "g = " << g;
    EXPECT_LT(kesten_lower(4 * g), tree_bound(4 * g, 4 * g - 1));
  }
}

TEST(OneRelatorBound, Examples) {
  EXPECT_DOUBLE_EQ(one_relator_bound(2), 1.0);
  EXPECT_NEAR(one_relator_bound(3), (std::sqrt(3.0) + 1.0) / 3.0, 1e-15);
  EXPECT_NEAR(one_relator_bound(3), 0.9107, 5e-5);
  for (int h = 2; h <= 40; ++h) {
    EXPECT_NEAR(one_relator_bound(h), tree_bound(2 * h, 2 * h - 2), 1e-15);
  }
  EXPECT_THROW(one_relator_bound(1), Error);
}

TEST(BoundReport, ValueRange) {
  EXPECT_THROW(make_report(2, BoundMethod::tree, 0.0), Error);
  EXPECT_THROW(make_report(2, BoundMethod::tree, 1.5), Error);
  auto r = make_report(2, BoundMethod::one_form, 0.5, {{"b", 1.0}}, true);
  EXPECT_TRUE(r.certified);
  EXPECT_STREQ(to_string(r.method), "one-form");
  EXPECT_TRUE(is_lower_bound(BoundMethod::kesten_girth_lower));
  EXPECT_FALSE(is_lower_bound(BoundMethod::poisson));
}

TEST(VerifyOneForm, GenusTwoRadiusSixAtOptimum) {
  auto const& b     = fixture::ball(2, 6);
  auto        types = vertex_types(b);
  double      bs    = std::sqrt(3.0);
  auto        cert  = verify_one_form(b, types, bs);
  EXPECT_TRUE(cert.certified);
  EXPECT_NEAR(cert.max_row_sum, 4.0 * bs, 1e-12);
  EXPECT_NEAR(cert.max_row_sum / 8.0, std::sqrt(3.0) / 2.0, 1e-12);
  EXPECT_EQ(types.type_of[cert.argmax], 2);
  EXPECT_NEAR(cert.row_sum_by_type[0], 8.0 / bs, 1e-12);
  EXPECT_NEAR(cert.row_sum_by_type[1], 7.0 / bs + bs, 1e-12);
  EXPECT_NEAR(cert.row_sum_by_type[2], 6.0 / bs + 2.0 * bs, 1e-12);
  EXPECT_EQ(cert.level_preserving_edges, 0u);
}

TEST(VerifyOneForm, UnitWeightGivesDegree) {
  auto const& b    = fixture::ball(2, 4);
  auto        cert = verify_one_form(b, vertex_types(b), 1.0);
  EXPECT_DOUBLE_EQ(cert.max_row_sum, 8.0);
  for (double s : cert.row_sum_by_type) {
    if (s >= 0.0) {
      EXPECT_DOUBLE_EQ(s, 8.0);
    }
  }
}

TEST(VerifyOneForm, GenusThree) {
  auto b    = build_ball(surface_presentation(3), 4);
  auto o    = one_form_bound(12);
  auto cert = verify_one_form(b, vertex_types(b), o.b);
  EXPECT_TRUE(cert.certified);
  // Type-2 vertices first appear at level 6, so the maximum here is type 1.
  EXPECT_NEAR(cert.max_row_sum, 11.0 / o.b + o.b, 1e-12);
}
