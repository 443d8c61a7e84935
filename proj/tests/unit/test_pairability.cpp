#include <gtest/gtest.h>

#include <random>
#include <set>

#include "kpair/codes.hpp"
#include "kpair/locc.hpp"
#include "kpair/pairability.hpp"

using namespace kpair;
using namespace kpair::pairability;

namespace {

PairList random_pairs(std::size_t k, int m, std::mt19937_64& rng) {
  std::set<Label> used;
  PairList out;
  auto draw = [&] {
    while (true) {
      const Label v = static_cast<Label>(rng() % (std::uint64_t{1} << m));
      if (used.insert(v).second) return v;
    }
  };
  for (std::size_t i = 0; i < k; ++i) {
    const Label a = draw();
    out.push_back({a, draw()});
  }
  return out;
}

// Brute-force affine span: close under x + y + z until stable.
std::set<Label> closure(std::vector<Label> pts) {
  std::set<Label> s(pts.begin(), pts.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Label> cur(s.begin(), s.end());
    for (auto x : cur) {
      for (auto y : cur) {
        for (auto z : cur) grew = s.insert(x ^ y ^ z).second || grew;
      }
    }
  }
  return s;
}

void expect_partition(const MeasurementPattern& p) {
  std::vector<int> seen(p.n, 0);
  for (auto q : p.e_set) ++seen[q];
  for (auto q : p.x_set) ++seen[q];
  for (auto q : p.z_set) ++seen[q];
  for (Qubit q = 0; q < p.n; ++q) EXPECT_EQ(seen[q], 1) << "qubit " << q;
}

}  // namespace

TEST(AffSpan, Examples) {
  const std::vector<Label> one{7};
  EXPECT_EQ(aff_span(one), std::vector<Label>{7});
  const Label a = 3, b = 5, c = 9;
  const std::vector<Label> three{a, b, c};
  std::vector<Label> expected{a, b, c, static_cast<Label>(a ^ b ^ c)};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(aff_span(three), expected);
  const std::vector<Label> dup{6, 6};
  EXPECT_EQ(aff_span(dup), std::vector<Label>{6});
}

TEST(AffSpan, MatchesClosure) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Label> pts;
    for (std::size_t i = 0, sz = 1 + rng() % 5; i < sz; ++i) pts.push_back(static_cast<Label>(rng() % 64));
    const auto s = closure(pts);
    EXPECT_EQ(aff_span(pts), std::vector<Label>(s.begin(), s.end()));
  }
}

TEST(BuildPattern, SinglePair) {
  const PairList pairs{{2, 13}};
  const auto p = build_pattern(pairs, CVectors{{1}}, 4);
  EXPECT_EQ(p.e_set, (std::vector<Qubit>{2, 13}));
  EXPECT_TRUE(p.z_set.empty());
  EXPECT_EQ(p.x_set.size(), 14U);
  ASSERT_EQ(p.subspaces.size(), 1U);
  EXPECT_EQ(p.subspaces[0], (std::vector<Label>{2, 13}));
  expect_partition(p);
}

TEST(BuildPattern, TwoPairsGiveFourPointSubspaces) {
  const PairList pairs{{0, 1}, {2, 3}};
  const auto c = choose_c_vectors(pairs, 4);
  ASSERT_EQ(c.c.size(), 2U);
  EXPECT_EQ(c.c[0], c.c[1]);
  const auto p = build_pattern(pairs, c, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    const Label cc = c.c[0];
    std::vector<Label> expected{pairs[i].a, pairs[i].b, cc, static_cast<Label>(pairs[i].a ^ pairs[i].b ^ cc)};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(p.subspaces[i], expected);
  }
  std::set<Label> z(p.subspaces[0].begin(), p.subspaces[0].end());
  z.insert(p.subspaces[1].begin(), p.subspaces[1].end());
  for (auto q : p.e_set) z.erase(q);
  EXPECT_EQ(p.z_set, std::vector<Qubit>(z.begin(), z.end()));
  expect_partition(p);
}

TEST(BuildPattern, CollidingSubspaceNamesPairAndQubit) {
  const PairList pairs{{0, 1}, {2, 3}};
  // c = a_1 puts a_1 in S_2.
  try {
    build_pattern(pairs, CVectors{{0, 0}}, 4);
    FAIL() << "expected PatternError";
  } catch (const PatternError& e) {
    EXPECT_EQ(e.pair_index(), 1U);
    EXPECT_EQ(e.qubit(), 0U);
  }
}

TEST(BuildPattern, GeneralKPartitionAndSubspaceSize) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto frame = canonicalize(random_pairs(4, 12, rng), 12);
    const auto p = build_pattern(frame.pairs, choose_c_vectors(frame.pairs, 12), 12);
    expect_partition(p);
    for (const auto& s : p.subspaces) EXPECT_EQ(s.size(), 16U);
  }
}

TEST(PolyRegression, Examples) {
  const std::vector<Label> one{5};
  const auto f = poly_regression(one, {true}, 0, 3);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->weight(), 8U);

  const std::vector<Label> four{0, 1, 2, 3};
  const auto g = poly_regression(four, {true, true, false, false}, 1, 4);
  ASSERT_TRUE(g);
  EXPECT_TRUE(g->get(0) && g->get(1) && !g->get(2) && !g->get(3));

  const std::vector<Label> two{0, 1};
  EXPECT_FALSE(poly_regression(two, {true, false}, 0, 3));
  const std::vector<Label> rep{1, 1};
  EXPECT_THROW(poly_regression(rep, {true, true}, 1, 3), std::invalid_argument);
}

TEST(PolyRegression, SolvableRegimes) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const int r = static_cast<int>(rng() % std::min(4, m));
    const std::size_t limit = std::size_t{1} << (r + 1);
    const bool boundary = (trial % 2) == 1;
    const std::size_t s = boundary ? limit : 1 + rng() % (limit - 1);
    std::set<Label> chosen;
    while (chosen.size() < s) chosen.insert(static_cast<Label>(rng() % (std::uint64_t{1} << m)));
    std::vector<Label> pts(chosen.begin(), chosen.end());
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<bool> vals(s);
    bool parity = false;
    for (std::size_t i = 0; i < s; ++i) {
      vals[i] = rng() & 1U;
      parity ^= vals[i];
    }
    if (boundary && parity) vals[0] = !vals[0];
    const auto f = poly_regression(pts, vals, r, m);
    ASSERT_TRUE(f) << "m=" << m << " r=" << r << " s=" << s;
    EXPECT_TRUE(codes::rm_code(r, m).contains(*f));
    for (std::size_t i = 0; i < s; ++i) EXPECT_EQ(f->get(pts[i]), vals[i]);
  }
}

TEST(ChooseC, KTwoLeastLabelOutsideAffineHull) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pairs = random_pairs(2, 4, rng);
    const auto c = choose_c_vectors(pairs, 4);
    const auto hull = closure({pairs[0].a, pairs[0].b, pairs[1].a, pairs[1].b});
    EXPECT_LE(hull.size(), 8U);
    EXPECT_EQ(hull.count(c.c[0]), 0U);
    for (Label v = 0; v < c.c[0]; ++v) EXPECT_EQ(hull.count(v), 1U);
  }
}

TEST(ChooseC, KFourUnitVectors) {
  const PairList pairs{{16, 32}, {64, 128}, {256, 512}, {1024, 2048}};
  EXPECT_EQ(choose_c_vectors(pairs, 12).c, (std::vector<Label>{1, 2, 4, 8}));
  EXPECT_THROW(choose_c_vectors(PairList{{1, 32}, {64, 128}, {256, 512}, {1024, 2048}}, 12), std::invalid_argument);
  EXPECT_THROW(choose_c_vectors(pairs, 11), std::invalid_argument);
}

TEST(ChooseC, KThreeSearchMatchesExhaustiveOracle) {
  const auto code = codes::rm_code(2, 5);
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 5; ++trial) {
    auto pairs = random_pairs(3, 5, rng);
    pairs = canonicalize_first_pair(pairs, 5).pairs;
    const auto c = choose_c_vectors(pairs, 5);
    ASSERT_EQ(c.c.size(), 3U);
    EXPECT_EQ(c.c[0] ^ c.c[1] ^ c.c[2], 0U);
    const auto p = build_pattern(pairs, c, 5);
    const auto cert = verify_css_conditions(code, p, pairs);
    ASSERT_TRUE(cert);
    EXPECT_TRUE(check_certificate(code, p, pairs, *cert));
    // No earlier (c1, c2) in the same order works.
    bool earlier = false;
    for (Label c1 = 1; c1 < 32 && !earlier; ++c1) {
      for (Label c2 = 1; c2 < 32; ++c2) {
        if (c1 == c.c[0] && c2 == c.c[1]) {
          c1 = 32;
          break;
        }
        if ((c1 ^ c2) == 0) continue;
        try {
          const auto q = build_pattern(pairs, CVectors{{c1, c2, static_cast<Label>(c1 ^ c2)}}, 5);
          if (verify_css_conditions(code, q, pairs)) earlier = true;
        } catch (const PatternError&) {
        }
        if (earlier) break;
      }
    }
    EXPECT_FALSE(earlier);
  }
}

TEST(Canonicalize, FirstPairGoesToZeroAndUnit) {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pairs = random_pairs(3, 5, rng);
    const auto frame = canonicalize_first_pair(pairs, 5);
    EXPECT_EQ(frame.pairs[0].a, 0U);
    EXPECT_EQ(frame.pairs[0].b, 1U);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      EXPECT_EQ(frame.map(pairs[i].a), frame.pairs[i].a);
      EXPECT_EQ(frame.map(pairs[i].b), frame.pairs[i].b);
    }
  }
}

TEST(Canonicalize, PostconditionsOnRandomInstances) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pairs = random_pairs(4, 12, rng);
    const auto frame = canonicalize(pairs, 12);
    EXPECT_TRUE(is_canonical(frame.pairs));
    std::set<Label> bad{0};
    for (const auto& p : frame.pairs) bad.insert(p.a ^ p.b);
    for (const auto& p : frame.pairs) {
      EXPECT_EQ(p.a & 0xFU, 0U);
      EXPECT_EQ(p.b & 0xFU, 0U);
      EXPECT_EQ(bad.count(p.a) + bad.count(p.b), 0U);
    }
  }
  EXPECT_THROW(canonicalize(random_pairs(4, 11, rng), 11), std::invalid_argument);
}

TEST(Canonicalize, AlreadyCanonicalPairsStayCanonical) {
  const PairList pairs{{16, 32}, {64, 128}, {256, 512}, {1024, 2048}};
  ASSERT_TRUE(is_canonical(pairs));
  const auto frame = canonicalize(pairs, 12);
  EXPECT_TRUE(is_canonical(frame.pairs));
}

TEST(Certificate, GhzSinglePair) {
  const auto code = codes::rm_code(0, 3);
  const PairList pairs{{0, 7}};
  const auto p = build_pattern(pairs, choose_c_vectors(pairs, 3), 3);
  const auto cert = verify_css_conditions(code, p, pairs);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->f[0], BitVec::ones(8));
  BitVec ind(8);
  ind.set(0);
  ind.set(7);
  EXPECT_EQ(cert->fbar[0], ind);
}

TEST(Certificate, FirstOrderReedMullerTwoPairs) {
  const auto code = codes::rm_code(1, 4);
  std::mt19937_64 rng(48);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pairs = random_pairs(2, 4, rng);
    const auto p = build_pattern(pairs, choose_c_vectors(pairs, 4), 4);
    const auto cert = verify_css_conditions(code, p, pairs);
    ASSERT_TRUE(cert);
    EXPECT_TRUE(check_certificate(code, p, pairs, *cert));
  }
}

TEST(Certificate, RepetitionCodeCannotPairTwo) {
  const auto code = codes::rm_code(0, 4);
  const PairList pairs{{0, 1}, {2, 3}};
  const auto p = build_pattern(pairs, choose_c_vectors(pairs, 4), 4);
  EXPECT_FALSE(verify_css_conditions(code, p, pairs));
}

TEST(Certificate, CorruptedWitnessIsRejected) {
  const auto code = codes::rm_code(1, 4);
  const PairList pairs{{0, 1}, {2, 3}};
  const auto p = build_pattern(pairs, choose_c_vectors(pairs, 4), 4);
  auto cert = *verify_css_conditions(code, p, pairs);
  cert.f[0].flip(p.z_set[0]);
  EXPECT_FALSE(check_certificate(code, p, pairs, cert));
}

TEST(Certificate, ImpliesProtocolSuccessOnEveryBranch) {
  std::mt19937_64 rng(49);
  for (int m : {3, 4}) {
    for (int r = 0; r < m; ++r) {
      const auto code = codes::rm_code(r, m);
      for (std::size_t k = 1; k <= 2; ++k) {
        if (k == 2 && m < 4) continue;
        for (int trial = 0; trial < 4; ++trial) {
          const auto pairs = random_pairs(k, m, rng);
          const auto p = build_pattern(pairs, choose_c_vectors(pairs, m), m);
          const auto cert = verify_css_conditions(code, p, pairs);
          if (!cert) continue;
          const auto summary = locc::run_protocol_all_branches(code, p, pairs, *cert);
          EXPECT_TRUE(summary.all_succeeded()) << "r=" << r << " m=" << m << " k=" << k;
        }
      }
    }
  }
}

TEST(ClosedFormPolynomial, ClosedFormAgreesWithSolverOnEz) {
  std::mt19937_64 rng(50);
  const int m = 12;
  const auto code = codes::rm_code(3, m);
  int tested = 0;
  while (tested < 3) {
    const auto frame = canonicalize(random_pairs(4, m, rng), m);
    BitVec f;
    try {
      f = appendix_a_polynomial(frame.pairs, m);
    } catch (const std::invalid_argument&) {
      continue;  // dependent instance
    }
    const auto p = build_pattern(frame.pairs, choose_c_vectors(frame.pairs, m), m);
    const auto cert = verify_css_conditions(code, p, frame.pairs);
    ASSERT_TRUE(cert);
    for (auto q : p.e_set) EXPECT_EQ(f.get(q), cert->f[0].get(q));
    for (auto q : p.z_set) EXPECT_EQ(f.get(q), cert->f[0].get(q));
    ++tested;
  }
}

TEST(ClosedFormPolynomial, DependentVectorsThrow) {
  const PairList pairs{{16, 32}, {48, 128}, {256, 512}, {1024, 2048}};
  EXPECT_THROW(appendix_a_polynomial(pairs, 12), std::invalid_argument);
}

TEST(Plan, GeneralKPullsBackToOriginalLabels) {
  const auto code = codes::rm_code(3, 12);
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 3; ++trial) {
    const auto pairs = random_pairs(4, 12, rng);
    const auto plan = plan_rm_pairing(code, pairs, 12);
    ASSERT_TRUE(plan.certificate);
    ASSERT_TRUE(plan.frame);
    EXPECT_TRUE(check_certificate(code, plan.pattern, pairs, *plan.certificate));
    expect_partition(plan.pattern);
  }
}

TEST(Pattern, ValidationAndOrder) {
  EXPECT_THROW(MeasurementPattern::css(4, {0, 1}, {1}, {2, 3}), std::invalid_argument);
  EXPECT_THROW(MeasurementPattern::css(4, {0, 1}, {2}, {}), std::invalid_argument);
  const auto p = MeasurementPattern::css(5, {0, 4}, {3, 1}, {2});
  EXPECT_EQ(p.measurement_order(), (std::vector<Qubit>{2, 1, 3}));
  EXPECT_EQ(p.to_string(), ".XZX.");
  std::vector<std::optional<Basis>> b{std::nullopt, Basis::Y, Basis::X, std::nullopt};
  const auto y = MeasurementPattern::with_bases(b, {0, 3});
  EXPECT_EQ(y.measurement_order(), (std::vector<Qubit>{2, 1}));
  EXPECT_EQ(y.to_string(), ".YX.");
}
