#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "lgih/error.hpp"
#include "lgih/facelattice.hpp"
#include "oracle.hpp"

using namespace lgih;

namespace {

std::vector<std::size_t> counts(const FaceLattice& l) { return l.face_counts(); }

std::vector<int> dims_of(std::uint32_t mask, int n) {
  std::vector<int> d;
  for (int k = 0; k < n; ++k)
    if (mask & (1u << k)) d.push_back(k);
  return d;
}

FaceLattice bad_triangle() {
  // e0 covers all three vertices
  std::vector<FaceLattice::Face> f{{"0", -1}, {"a", 0}, {"b", 0}, {"c", 0}, {"ab", 1}, {"bc", 1}, {"ca", 1}, {"T", 2}};
  return FaceLattice::from_ids(2, f,
                               {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "ab"}, {"b", "ab"}, {"c", "ab"},
                                {"b", "bc"}, {"c", "bc"}, {"c", "ca"}, {"a", "ca"}, {"ab", "T"}, {"bc", "T"},
                                {"ca", "T"}});
}

}  // namespace

TEST(FaceLattice, PointHasEmptyFaceAndItself) {
  auto p = FaceLattice::point();
  EXPECT_EQ(p.dim(), 0);
  EXPECT_EQ(counts(p), (std::vector<std::size_t>{1, 1}));
}

TEST(Pyramid, OverPointIsSegment) {
  auto s = pyramid(FaceLattice::point());
  EXPECT_EQ(s.dim(), 1);
  EXPECT_EQ(counts(s), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(Pyramid, OverSegmentIsTriangle) {
  auto t = pyramid(pyramid(FaceLattice::point()));
  EXPECT_EQ(counts(t), (std::vector<std::size_t>{1, 3, 3, 1}));
}

TEST(Pyramid, OverSquare) {
  auto sq = prism(prism(FaceLattice::point()));
  auto p = pyramid(sq);
  EXPECT_EQ(counts(p), (std::vector<std::size_t>{1, 5, 8, 5, 1}));
  for (int k = 0; k < 3; ++k) EXPECT_EQ(oracle::count_chains(p, {k}), counts(p)[static_cast<std::size_t>(k) + 1]);
}

TEST(Prism, SmallCases) {
  EXPECT_EQ(counts(prism(FaceLattice::point())), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(counts(prism(from_word("C"))), (std::vector<std::size_t>{1, 4, 4, 1}));
  auto tp = prism(from_word("CC"));
  EXPECT_EQ(counts(tp), (std::vector<std::size_t>{1, 6, 9, 5, 1}));
  EXPECT_EQ(oracle::count_chains(tp, {0}), 6u);
  EXPECT_EQ(oracle::count_chains(tp, {1}), 9u);
  EXPECT_EQ(oracle::count_chains(tp, {2}), 5u);
}

TEST(FromWord, Examples) {
  EXPECT_EQ(counts(from_word("")), counts(FaceLattice::point()));
  EXPECT_EQ(counts(from_word("CC")), (std::vector<std::size_t>{1, 3, 3, 1}));
  auto cube = from_word("III");
  EXPECT_EQ(counts(cube), (std::vector<std::size_t>{1, 8, 12, 6, 1}));
  EXPECT_EQ(oracle::count_chains(cube, {0, 1, 2}), 48u);
  int d[] = {0, 1, 2};
  EXPECT_EQ(flag_vector(cube).entry(d), 48u);
}

TEST(FromWord, RightmostLetterAppliedFirst) {
  // CI: pyramid over a segment (triangle); IC: prism over a segment (square)
  EXPECT_EQ(counts(from_word("CI")), (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_EQ(counts(from_word("IC")), (std::vector<std::size_t>{1, 4, 4, 1}));
}

TEST(FromWord, RejectsBadCharacterWithPosition) {
  try {
    from_word("ICX");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(check_word("i"), ParseError);
  EXPECT_NO_THROW(check_word("CICI"));
}

TEST(IcWords, CountAndOrder) {
  auto w = ic_words(3);
  ASSERT_EQ(w.size(), 8u);
  EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
  EXPECT_EQ(ic_words(0), (std::vector<std::string>{""}));
}

TEST(Validation, RejectsDiamondViolation) {
  try {
    bad_triangle();
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("FaceLattice invariant violated"), std::string::npos);
  }
}

TEST(Validation, RejectsDimensionJumpAndMissingBottom) {
  std::vector<FaceLattice::Face> jump{{"0", -1}, {"a", 0}, {"b", 0}, {"S", 1}, {"X", 2}};
  EXPECT_THROW(FaceLattice::from_ids(2, jump, {{"0", "a"}, {"0", "b"}, {"a", "S"}, {"b", "S"}, {"0", "X"}}),
               ValidationError);
  std::vector<FaceLattice::Face> nobottom{{"a", 0}, {"b", 0}, {"S", 1}};
  EXPECT_THROW(FaceLattice::from_ids(1, nobottom, {{"a", "S"}, {"b", "S"}}), ValidationError);
  std::vector<FaceLattice::Face> dangling{{"0", -1}, {"a", 0}, {"b", 0}, {"S", 1}};
  EXPECT_THROW(FaceLattice::from_ids(1, dangling, {{"0", "a"}, {"0", "b"}, {"a", "S"}}), ValidationError);
  EXPECT_THROW(FaceLattice::from_ids(1, dangling, {{"0", "a"}, {"0", "b"}, {"a", "S"}, {"b", "nope"}}),
               ValidationError);
}

TEST(FlagVector, SmallPolytopes) {
  auto seg = flag_vector(from_word("C"));
  EXPECT_EQ(seg.dim(), 1);
  EXPECT_EQ(seg[0], 1u);
  EXPECT_EQ(seg[1], 2u);
  auto tri = flag_vector(from_word("CC"));
  EXPECT_EQ(std::vector<std::uint64_t>(tri.entries().begin(), tri.entries().end()),
            (std::vector<std::uint64_t>{1, 3, 3, 6}));
  auto sq = flag_vector(from_word("II"));
  EXPECT_EQ(std::vector<std::uint64_t>(sq.entries().begin(), sq.entries().end()),
            (std::vector<std::uint64_t>{1, 4, 4, 8}));
  EXPECT_EQ(FlagVector::mask_key(0), "");
  EXPECT_EQ(FlagVector::mask_key(0b101), "0,2");
}

TEST(FlagVector, PentagonFromCorpus) {
  auto f = flag_vector(corpus::lattice("pentagon"));
  EXPECT_EQ(std::vector<std::uint64_t>(f.entries().begin(), f.entries().end()),
            (std::vector<std::uint64_t>{1, 5, 5, 10}));
}

TEST(FlagRank, Examples) {
  std::vector<FaceLattice> one{from_word("C")};
  EXPECT_EQ(flag_rank(std::span<const FaceLattice>(one)), 1u);
  std::vector<FaceLattice> two{from_word("CC"), from_word("II")};
  EXPECT_EQ(flag_rank(std::span<const FaceLattice>(two)), 2u);
  std::vector<FaceLattice> three;
  for (const auto& w : ic_words(3)) three.push_back(from_word(w));
  EXPECT_EQ(flag_rank(std::span<const FaceLattice>(three)), 3u);
}

TEST(FlagRank, MixedDimensionsThrow) {
  std::vector<FaceLattice> mixed{from_word("C"), from_word("CC")};
  EXPECT_THROW(flag_rank(std::span<const FaceLattice>(mixed)), DomainError);
}

TEST(Fibonacci, FirstTerms) {
  std::vector<std::uint64_t> f;
  for (int k = 1; k <= 8; ++k) f.push_back(fibonacci(k));
  EXPECT_EQ(f, (std::vector<std::uint64_t>{1, 1, 2, 3, 5, 8, 13, 21}));
}

TEST(Dual, CubeToOctahedron) {
  auto oct = dual(from_word("III"));
  EXPECT_EQ(counts(oct), (std::vector<std::size_t>{1, 6, 12, 8, 1}));
  EXPECT_EQ(counts(dual(oct)), counts(from_word("III")));
  EXPECT_EQ(flag_vector(corpus::lattice("octahedron")), flag_vector(oct));
}

// Properties over every word up to length 5.

TEST(FaceLatticeProperty, WordsAreValidAndFlagsMatchChainCount) {
  for (int n = 0; n <= 4; ++n)
    for (const auto& w : ic_words(n)) {
      auto l = from_word(w);  // validated in the constructor
      EXPECT_EQ(l.dim(), n);
      auto f = flag_vector(l);
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        EXPECT_EQ(f[mask], oracle::count_chains(l, dims_of(mask, n))) << w << " mask " << mask;
    }
}

TEST(FaceLatticeProperty, FlagEntriesGrowWhenExtendingChains) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : ic_words(n)) {
      auto f = flag_vector(from_word(w));
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        EXPECT_GE(f[mask], 1u);
        for (int k = 0; k < n; ++k)
          if (!(mask & (1u << k))) {
            EXPECT_GE(f[mask | (1u << k)], f[mask]) << w;
          }
      }
    }
}

TEST(FaceLatticeProperty, ChildrenDependOnlyOnFlagVector) {
  auto a = from_word("IC");
  auto b = from_word("II");
  ASSERT_EQ(flag_vector(a), flag_vector(b));
  EXPECT_EQ(flag_vector(pyramid(a)), flag_vector(pyramid(b)));
  EXPECT_EQ(flag_vector(prism(a)), flag_vector(prism(b)));
  auto c = from_word("CI");
  auto d = from_word("CC");
  ASSERT_EQ(flag_vector(c), flag_vector(d));
  EXPECT_EQ(flag_vector(prism(pyramid(c))), flag_vector(prism(pyramid(d))));
}

TEST(FaceLatticeProperty, FlagRankMonotoneUnderAppending) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<FaceLattice> acc;
    std::size_t prev = 0;
    for (const auto& w : ic_words(n)) {
      acc.push_back(from_word(w));
      auto r = flag_rank(std::span<const FaceLattice>(acc));
      EXPECT_GE(r, prev);
      prev = r;
    }
  }
}

TEST(FaceLatticeProperty, DualIsInvolutionOnFlagVectors) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& w : ic_words(n)) {
      auto l = from_word(w);
      EXPECT_EQ(flag_vector(dual(dual(l))), flag_vector(l)) << w;
    }
}
