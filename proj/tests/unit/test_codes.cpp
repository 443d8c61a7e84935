#include <gtest/gtest.h>

#include <random>
#include <set>

#include "brute.hpp"
#include "kpair/codes.hpp"

using namespace kpair;
using namespace kpair::codes;

namespace {

std::size_t binom(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

// Evaluation vector of prod_{j in s} x_j, built point by point.
BitVec monomial(unsigned s, int m) {
  BitVec v(std::size_t{1} << m);
  for (Label x = 0; x < (Label{1} << m); ++x) v.set(x, (x & s) == s);
  return v;
}

BitMatrix monomial_matrix(int r, int m) {
  BitMatrix g(0, std::size_t{1} << m);
  for (unsigned s = 0; s < (1U << m); ++s) {
    if (__builtin_popcount(s) <= r) g.append_row(monomial(s, m));
  }
  return g;
}

std::size_t brute_distance(const LinearCode& c) {
  std::size_t best = 0;
  for (const auto& w : brute::all_combinations(c.generators())) {
    if (w.weight() > 0 && (best == 0 || w.weight() < best)) best = w.weight();
  }
  return best;
}

BitVec random_codeword(const LinearCode& c, std::mt19937_64& rng) {
  BitVec w(c.length());
  for (const auto& r : c.generators().rows()) {
    if (rng() & 1U) w ^= r;
  }
  return w;
}

AffineMap random_affine(int m, std::mt19937_64& rng) {
  while (true) {
    auto a = brute::random_matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(m), rng);
    if (f2::rank(a) == static_cast<std::size_t>(m)) return {a, brute::random_vec(static_cast<std::size_t>(m), rng)};
  }
}

}  // namespace

TEST(Labels, LowestBitIsFirstCoordinate) {
  EXPECT_EQ(label_from_string("10"), 1U);
  EXPECT_EQ(label_from_string("01"), 2U);
  EXPECT_EQ(label_from_string("000010000000"), 16U);
  EXPECT_EQ(label_to_string(1, 4), "1000");
  EXPECT_THROW(label_from_string("1x"), std::invalid_argument);
}

TEST(LinearCodeTest, DependentGeneratorsAndMembership) {
  LinearCode c(BitMatrix::from_strings({"1100", "0011", "1111"}));
  EXPECT_EQ(c.dimension(), 2U);
  EXPECT_TRUE(c.contains(BitVec::from_string("1111")));
  EXPECT_FALSE(c.contains(BitVec::from_string("1000")));
  EXPECT_TRUE(c.dual_contains(BitVec::from_string("1100")));
  EXPECT_FALSE(c.dual_contains(BitVec::from_string("1010")));
  EXPECT_FALSE(c.dual_contains(BitVec::from_string("1000")));
}

TEST(ReedMuller, RepetitionCode) {
  for (int m = 1; m <= 6; ++m) {
    const auto c = rm_code(0, m);
    EXPECT_EQ(c.dimension(), 1U);
    EXPECT_EQ(brute::span_set(c.generators()),
              (std::set<std::string>{std::string(std::size_t{1} << m, '0'), std::string(std::size_t{1} << m, '1')}));
    EXPECT_EQ(min_distance(c), std::size_t{1} << m);
  }
}

TEST(ReedMuller, FirstOrderFour) {
  const auto c = rm_code(1, 4);
  EXPECT_EQ(c.length(), 16U);
  EXPECT_EQ(c.dimension(), 5U);
  EXPECT_EQ(min_distance(c), 8U);
  EXPECT_EQ(brute_distance(c), 8U);
}

TEST(ReedMuller, SecondOrderFiveIsSelfDual) {
  const auto c = rm_code(2, 5);
  EXPECT_EQ(c.length(), 32U);
  EXPECT_EQ(c.dimension(), 16U);
  EXPECT_TRUE(same_codewords(dual(c), c));
  EXPECT_EQ(min_distance(c), 8U);
  EXPECT_EQ(brute_distance(c), 8U);
}

TEST(ReedMuller, GeneratorOrderIsByDegree) {
  const auto c = rm_code(1, 2);
  EXPECT_EQ(c.generators().to_string(), "1111\n0101\n0011\n");
}

TEST(ReedMuller, InvalidParametersThrow) {
  EXPECT_THROW(rm_code(3, 2), std::invalid_argument);
  EXPECT_THROW(rm_code(-1, 3), std::invalid_argument);
  EXPECT_THROW(rm_code(0, 0), std::invalid_argument);
}

TEST(ReedMuller, DimensionFormulaUpToEight) {
  for (int m = 1; m <= 8; ++m) {
    for (int r = 0; r <= m; ++r) {
      std::size_t expected = 0;
      for (int p = 0; p <= r; ++p) expected += binom(m, p);
      EXPECT_EQ(rm_dimension(r, m), expected);
      EXPECT_EQ(rm_code(r, m).dimension(), expected) << "r=" << r << " m=" << m;
    }
  }
}

TEST(ReedMuller, MatchesPointwiseMonomials) {
  for (int m = 1; m <= 5; ++m) {
    for (int r = 0; r <= m; ++r) {
      EXPECT_TRUE(same_codewords(rm_code(r, m), LinearCode(monomial_matrix(r, m))));
    }
  }
}

TEST(ReedMuller, DistanceAgreesWithEnumerationForSmallCodes) {
  for (int m = 1; m <= 5; ++m) {
    for (int r = 0; r < m; ++r) {
      const auto c = rm_code(r, m);
      if (c.dimension() > 16) continue;
      EXPECT_EQ(min_distance(c), brute_distance(c)) << "r=" << r << " m=" << m;
      EXPECT_EQ(min_distance(c), std::size_t{1} << (m - r));
    }
  }
}

TEST(ReedMuller, SyndromeFallbackBeyondEnumeration) {
  // dim 42 and 57: too large to enumerate, handled by the syndrome search.
  EXPECT_EQ(min_distance(rm_code(3, 6)), 8U);
  EXPECT_EQ(min_distance(rm_code(4, 6)), 4U);
  EXPECT_THROW(min_distance(rm_code(2, 8), 1000), std::length_error);
}

TEST(Duality, ReedMullerDuals) {
  for (int m = 1; m <= 6; ++m) {
    for (int r = 0; r < m; ++r) {
      EXPECT_TRUE(same_codewords(dual(rm_code(r, m)), rm_code(m - r - 1, m))) << "r=" << r << " m=" << m;
    }
  }
}

TEST(Duality, BruteForceOnSmallCodes) {
  for (int m = 2; m <= 3; ++m) {
    for (int r = 0; r < m; ++r) {
      const auto c = rm_code(r, m);
      std::set<std::string> orth;
      const std::size_t n = c.length();
      for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
        BitVec v(n);
        for (std::size_t i = 0; i < n; ++i) v.set(i, (w >> i) & 1U);
        bool ok = true;
        for (const auto& g : c.generators().rows()) ok = ok && !g.dot(v);
        if (ok) orth.insert(v.to_string());
      }
      EXPECT_EQ(brute::span_set(dual(c).generators()), orth);
    }
  }
}

TEST(Duality, FullSpaceAndDoubleDual) {
  EXPECT_EQ(dual(LinearCode(BitMatrix::identity(8))).dimension(), 0U);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    LinearCode c(brute::random_matrix(1 + rng() % 8, 12, rng));
    EXPECT_TRUE(same_codewords(dual(dual(c)), c));
  }
}

TEST(MinDistance, RepetitionAndZeroCode) {
  EXPECT_EQ(min_distance(LinearCode(BitMatrix::from_strings({"1111111"}))), 7U);
  EXPECT_EQ(min_distance(LinearCode(BitMatrix(0, 5))), 0U);
}

TEST(AffineIndicator, Examples) {
  const std::vector<Label> single{5};
  const auto one = affine_indicator(single, 3);
  ASSERT_TRUE(one);
  EXPECT_EQ(one->weight(), 1U);
  EXPECT_TRUE(one->get(5));

  const Label a = 1, b = 2, c = 4;
  const std::vector<Label> plane{a, b, c, static_cast<Label>(a ^ b ^ c)};
  const auto ind = affine_indicator(plane, 4);
  ASSERT_TRUE(ind);
  EXPECT_EQ(ind->weight(), 4U);
  EXPECT_TRUE(f2::in_span(rm_code(2, 4).generators(), *ind));
  EXPECT_TRUE(rm_code(1, 4).dual_contains(*ind));

  const std::vector<Label> three{1, 2, 4};
  EXPECT_FALSE(affine_indicator(three, 3));
}

TEST(AffineIndicator, PowerOfTwoAndClosureCharacterization) {
  std::mt19937_64 rng(22);
  const int m = 4;
  for (int trial = 0; trial < 500; ++trial) {
    std::set<Label> pts;
    const std::size_t size = 1 + rng() % 8;
    while (pts.size() < size) pts.insert(static_cast<Label>(rng() % 16));
    std::vector<Label> v(pts.begin(), pts.end());
    bool closed = true;
    for (auto x : v) {
      for (auto y : v) {
        for (auto z : v) closed = closed && pts.count(x ^ y ^ z);
      }
    }
    const bool pow2 = (size & (size - 1)) == 0;
    const auto ind = affine_indicator(v, m);
    EXPECT_EQ(ind.has_value(), pow2 && closed);
    if (ind) EXPECT_EQ(ind->weight(), size);
  }
}

TEST(Affine, ConstructionValidatesInvertibility) {
  EXPECT_THROW(AffineMap(BitMatrix(3, 3), BitVec(3)), std::invalid_argument);
  EXPECT_THROW(AffineMap(BitMatrix::identity(3), BitVec(2)), std::invalid_argument);
}

TEST(Affine, IdentityLeavesVectorsUnchanged) {
  std::mt19937_64 rng(23);
  const auto v = brute::random_vec(32, rng);
  EXPECT_EQ(apply_affine_permutation(AffineMap::identity(5), v), v);
}

TEST(Affine, TranslationMovesPointIndicator) {
  // v'(x) = v(x + b), so the indicator of {p} becomes the indicator of {p + b}.
  const int m = 4;
  for (Label p = 0; p < 16; ++p) {
    for (Label b = 0; b < 16; ++b) {
      const auto moved = apply_affine_permutation(AffineMap::translation(m, b), BitVec::unit(16, p));
      for (Label x = 0; x < 16; ++x) EXPECT_EQ(moved.get(x), x == (p ^ b));
    }
  }
}

TEST(Affine, ComposeInverseAndSending) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_affine(6, rng);
    const auto g = random_affine(6, rng);
    const auto inv = f.inverse();
    for (Label x = 0; x < 64; ++x) {
      EXPECT_EQ(inv(f(x)), x);
      EXPECT_EQ(f.compose(g)(x), f(g(x)));
    }
  }
  const std::vector<Label> from{3, 5};
  const std::vector<Label> to{1, 2};
  const auto s = AffineMap::linear_sending(from, to, 4);
  EXPECT_EQ(s(3), 1U);
  EXPECT_EQ(s(5), 2U);
  EXPECT_EQ(s(0), 0U);
}

TEST(Affine, PermutationPreservesReedMuller) {
  std::mt19937_64 rng(25);
  for (int m = 1; m <= 6; ++m) {
    for (int r = 0; r <= std::min(3, m); ++r) {
      const auto c = rm_code(r, m);
      for (int trial = 0; trial < 200; ++trial) {
        const auto map = random_affine(m, rng);
        EXPECT_TRUE(c.contains(apply_affine_permutation(map, random_codeword(c, rng))));
      }
    }
  }
}
