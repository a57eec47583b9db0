#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "lgih/error.hpp"
#include "lgih/stratsimplex.hpp"

using namespace lgih;

namespace {

std::vector<int> signs(const std::vector<FacetRef>& fs) {
  std::vector<int> s;
  for (const auto& f : fs) s.push_back(f.sign);
  return s;
}

std::map<std::string, int> child_counts(const std::vector<FacetRef>& fs) {
  std::map<std::string, int> m;
  for (const auto& f : fs) ++m[f.child.to_string()];
  return m;
}

}  // namespace

TEST(StratifiedShape, ParseAndPrint) {
  auto s = StratifiedShape::parse("1,2,3");
  EXPECT_EQ(s.dims(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(s.order(), 2);
  EXPECT_EQ(s.total_dim(), 8);
  EXPECT_EQ(s.to_string(), "1,2,3");
  EXPECT_EQ(StratifiedShape::parse("4").total_dim(), 4);
}

TEST(StratifiedShape, ParseErrorsCarryPosition) {
  for (const char* bad : {"", "1,,2", "a", "-1", "1,2,"}) EXPECT_THROW(StratifiedShape::parse(bad), ParseError) << bad;
  try {
    StratifiedShape::parse("1,,2");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Facets, Simplex) {
  auto f = facets(StratifiedShape({2}));
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(signs(f), (std::vector<int>{1, -1, 1}));
  for (const auto& x : f) EXPECT_EQ(x.child, StratifiedShape({1}));
}

TEST(Facets, ConeHasNoConingFacet) {
  auto f = facets(StratifiedShape({2, 0}));
  ASSERT_EQ(f.size(), 3u);
  for (const auto& x : f) EXPECT_EQ(x.child, StratifiedShape({1, 0}));
}

TEST(Facets, PrismOverCone) {
  auto f = facets(StratifiedShape({2, 1}));
  EXPECT_EQ(child_counts(f), (std::map<std::string, int>{{"2,0", 2}, {"1,1", 3}}));
  // sigma_1 coordinates come first
  EXPECT_EQ(signs(f), (std::vector<int>{1, -1, 1, -1, 1}));
}

TEST(Facets, PointFactorsContributeNothing) {
  EXPECT_TRUE(facets(StratifiedShape({0})).empty());
  EXPECT_TRUE(facets(StratifiedShape({0, 0, 0})).empty());
  EXPECT_EQ(facets(StratifiedShape({0, 1})).size(), 2u);
}

TEST(ApexLoci, Examples) {
  auto a = apex_loci(StratifiedShape({2, 1}));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].index, 1);
  EXPECT_EQ(a[0].dim, 1);
  EXPECT_EQ(a[0].descriptor, "sigma1 x {0}");

  EXPECT_TRUE(apex_loci(StratifiedShape({3})).empty());

  auto b = apex_loci(StratifiedShape({1, 2, 3}));
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].index, 2);
  EXPECT_EQ(b[0].dim, 3);
  EXPECT_EQ(b[1].index, 1);
  EXPECT_EQ(b[1].dim, 6);
  EXPECT_EQ(b[1].descriptor, "sigma3 x C(sigma2 x {0})");
}

TEST(DdCheck, Examples) {
  EXPECT_TRUE(dd_check(StratifiedShape({3})));
  EXPECT_TRUE(dd_check(StratifiedShape({2, 1})));
  for (const auto& s : shapes_up_to(6)) EXPECT_TRUE(dd_check(s)) << s.to_string();
}

// Compositions: shapes of total dimension T correspond to compositions of T + 1.
TEST(ShapesUpTo, CountsCompositions) {
  std::size_t expected = 0;
  for (int t = 0; t <= 6; ++t) {
    expected += std::size_t{1} << t;
    EXPECT_EQ(shapes_up_to(t).size(), expected);
  }
}

TEST(StratsimplexProperty, FacetCountAndDimension) {
  for (const auto& s : shapes_up_to(7)) {
    std::size_t expected = 0;
    for (int i : s.dims())
      if (i > 0) expected += static_cast<std::size_t>(i) + 1;
    auto fs = facets(s);
    EXPECT_EQ(fs.size(), expected) << s.to_string();
    for (const auto& f : fs) {
      EXPECT_EQ(f.child.total_dim(), s.total_dim() - 1);
      EXPECT_EQ(f.parent, s);
    }
  }
}

TEST(StratsimplexProperty, ApexLociDimensionsIncrease) {
  for (const auto& s : shapes_up_to(7)) {
    auto loci = apex_loci(s);
    ASSERT_EQ(loci.size(), static_cast<std::size_t>(s.order()));
    for (std::size_t k = 0; k < loci.size(); ++k) {
      EXPECT_EQ(loci[k].index, s.order() - static_cast<int>(k));
      EXPECT_LT(loci[k].dim, s.total_dim());
      if (k > 0) {
        EXPECT_LT(loci[k - 1].dim, loci[k].dim) << s.to_string();
      }
    }
  }
}
