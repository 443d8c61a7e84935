#include <gtest/gtest.h>

#include "kpair/codes.hpp"
#include "kpair/locc.hpp"
#include "kpair/pairability.hpp"

using namespace kpair;
using namespace kpair::locc;
using pairability::build_pattern;
using pairability::choose_c_vectors;
using pairability::verify_css_conditions;

namespace {

struct Setup {
  codes::LinearCode code;
  PairList pairs;
  MeasurementPattern pattern;
  CssCertificate cert;
};

Setup make(int r, int m, PairList pairs) {
  Setup s{codes::rm_code(r, m), pairs, {}, {}};
  s.pattern = build_pattern(pairs, choose_c_vectors(pairs, m), m);
  s.cert = *verify_css_conditions(s.code, s.pattern, pairs);
  return s;
}

codes::LinearCode repetition(std::size_t n) {
  return codes::LinearCode(f2::BitMatrix::from_rows({f2::BitVec::ones(n)}));
}

}  // namespace

TEST(Ghz, FourQubitsPairOneThree) {
  // GHZ on 4 qubits is RM(0, 2); labels 0 and 2 are qubits 1 and 3 in 1-based numbering.
  const auto s = make(0, 2, {{0, 2}});
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto t = run_protocol(s.code, s.pattern, s.pairs, s.cert, seed);
    EXPECT_TRUE(t.success());
    EXPECT_EQ(t.measurements.size(), 2U);
    EXPECT_EQ(*t.seed, seed);
  }
}

TEST(Ghz, EveryPairEveryBranch) {
  for (int m = 1; m <= 3; ++m) {
    const std::size_t n = std::size_t{1} << m;
    for (Qubit a = 0; a < n; ++a) {
      for (Qubit b = a + 1; b < n; ++b) {
        const auto s = make(0, m, {{a, b}});
        const auto summary = run_protocol_all_branches(s.code, s.pattern, s.pairs, s.cert);
        EXPECT_TRUE(summary.all_succeeded());
        EXPECT_EQ(summary.random_outcomes, n - 2);
      }
    }
  }
}

TEST(Ghz, ArbitraryLengthRepetitionCode) {
  const auto code = repetition(5);
  const PairList pairs{{1, 4}};
  const auto pattern = MeasurementPattern::css(5, {1, 4}, {0, 2, 3}, {});
  const auto cert = verify_css_conditions(code, pattern, pairs);
  ASSERT_TRUE(cert);
  EXPECT_TRUE(run_protocol_all_branches(code, pattern, pairs, *cert).all_succeeded());
}

TEST(ReedMuller, TwoPairsOverSeeds) {
  const auto s = make(1, 4, {{0, 8}, {4, 12}});  // 0000,0001 and 0010,0011
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto t = run_protocol(s.code, s.pattern, s.pairs, s.cert, seed);
    ASSERT_EQ(t.verdict.size(), 2U);
    EXPECT_TRUE(t.verdict[0] && t.verdict[1]);
  }
  EXPECT_TRUE(run_protocol_all_branches(s.code, s.pattern, s.pairs, s.cert).all_succeeded());
}

TEST(ReedMuller, TranscriptShape) {
  const auto s = make(1, 4, {{3, 5}, {6, 9}});
  const auto t = run_protocol(s.code, s.pattern, s.pairs, s.cert, 7);
  std::vector<Qubit> measured;
  for (const auto& m : t.measurements) {
    ASSERT_EQ(m.qubits.size(), 1U);
    measured.push_back(m.qubits[0]);
    EXPECT_TRUE(m.outcome == 1 || m.outcome == -1);
  }
  EXPECT_EQ(measured, s.pattern.measurement_order());
  for (auto q : s.pattern.e_set) EXPECT_FALSE(t.outcome_of(q));
  for (const auto& c : t.corrections) {
    EXPECT_EQ(c.qubit, s.pairs[c.pair].a);
    EXPECT_TRUE(c.pauli == 'X' || c.pauli == 'Z');
  }
  std::size_t random = 0;
  for (const auto& m : t.measurements) random += m.random ? 1 : 0;
  EXPECT_EQ(random, t.random_outcomes);
}

TEST(ReedMuller, CorrectionsDependOnlyOnBroadcastOutcomes) {
  // Recompute each correction from the transcript and the certificate alone.
  const auto s = make(1, 4, {{1, 2}, {7, 12}});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto t = run_protocol(s.code, s.pattern, s.pairs, s.cert, seed);
    std::vector<CorrectionRecord> expected;
    for (std::size_t i = 0; i < s.pairs.size(); ++i) {
      int sx = 1;
      for (auto q : s.pattern.x_set) {
        if (s.cert.f[i].get(q)) sx *= *t.outcome_of(q);
      }
      int sz = 1;
      for (auto q : s.pattern.z_set) {
        if (s.cert.fbar[i].get(q)) sz *= *t.outcome_of(q);
      }
      if (sx < 0) expected.push_back({i, s.pairs[i].a, 'Z'});
      if (sz < 0) expected.push_back({i, s.pairs[i].a, 'X'});
    }
    ASSERT_EQ(t.corrections.size(), expected.size());
    for (std::size_t j = 0; j < expected.size(); ++j) {
      EXPECT_EQ(t.corrections[j].pair, expected[j].pair);
      EXPECT_EQ(t.corrections[j].pauli, expected[j].pauli);
    }
  }
}

TEST(ReedMuller, CorruptedWitnessFailsForSomeSeed) {
  auto s = make(1, 4, {{0, 8}, {4, 12}});
  // An f flipped on an X-set qubit is no longer a codeword, so the Z
  // correction reads the wrong parity on about half of the branches.
  s.cert.f[0].flip(s.pattern.x_set[0]);
  bool failed = false;
  for (std::uint64_t seed = 0; seed < 100 && !failed; ++seed) {
    failed = !run_protocol(s.code, s.pattern, s.pairs, s.cert, seed).success();
  }
  EXPECT_TRUE(failed);
}

TEST(Protocol, ShapeErrorsBeforeMeasuring) {
  auto s = make(1, 4, {{0, 8}, {4, 12}});
  auto bad = s.cert;
  bad.f.pop_back();
  EXPECT_THROW(run_protocol(s.code, s.pattern, s.pairs, bad, 0), std::invalid_argument);
  EXPECT_THROW(run_protocol(s.code, s.pattern, PairList{{0, 8}, {4, 13}}, s.cert, 0), std::invalid_argument);
  EXPECT_THROW(run_protocol(codes::rm_code(1, 3), s.pattern, s.pairs, s.cert, 0), std::invalid_argument);
}

TEST(Protocol, SeedsAreReproducible) {
  const auto s = make(1, 4, {{2, 11}, {5, 14}});
  const auto a = run_protocol(s.code, s.pattern, s.pairs, s.cert, 99);
  const auto b = run_protocol(s.code, s.pattern, s.pairs, s.cert, 99);
  ASSERT_EQ(a.measurements.size(), b.measurements.size());
  for (std::size_t i = 0; i < a.measurements.size(); ++i) EXPECT_EQ(a.measurements[i].outcome, b.measurements[i].outcome);
}

TEST(PauliPattern, EprWithNothingToMeasure) {
  const auto state = stabsim::epr_product_state(std::vector<QubitPair>{{0, 1}}, 2);
  const auto p = MeasurementPattern::with_bases({std::nullopt, std::nullopt}, {0, 1});
  const auto t = run_pauli_pattern(state, p, PairList{{0, 1}}, 0);
  EXPECT_TRUE(t.success());
  EXPECT_TRUE(t.measurements.empty());
}

TEST(PauliPattern, AllZOnCycleGraphFails) {
  std::vector<std::pair<Qubit, Qubit>> edges;
  for (Qubit j = 0; j < 6; ++j) edges.emplace_back(j, (j + 1) % 6);
  const auto state = stabsim::graph_state(edges, 6);
  std::vector<std::optional<Basis>> b(6, Basis::Z);
  b[0] = b[3] = std::nullopt;
  const auto p = MeasurementPattern::with_bases(b, {0, 3});
  EXPECT_FALSE(pauli_pattern_succeeds_always(state, p, PairList{{0, 3}}));
  // Measuring the path 1-2 in X and 4-5 in X leaves 0 and 3 entangled.
  std::vector<std::optional<Basis>> good(6, Basis::X);
  good[0] = good[3] = std::nullopt;
  good[2] = good[5] = Basis::Z;
  const auto q = MeasurementPattern::with_bases(good, {0, 3});
  EXPECT_EQ(run_pauli_pattern(state, q, PairList{{0, 3}}, 1).success(), pauli_pattern_succeeds_always(state, q, PairList{{0, 3}}));
}

TEST(PauliPattern, RejectsMeasuredTargets) {
  const auto state = stabsim::epr_product_state(std::vector<QubitPair>{{0, 1}}, 3);
  const auto p = MeasurementPattern::with_bases({std::nullopt, std::nullopt, Basis::Z}, {0, 1});
  EXPECT_THROW(run_pauli_pattern(state, p, PairList{{0, 2}}, 0), std::invalid_argument);
}
