// Measure-and-correct protocols that turn a resource state into EPR pairs.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kpair/codes.hpp"
#include "kpair/pairability.hpp"
#include "kpair/stabsim.hpp"
#include "kpair/types.hpp"

namespace kpair::locc {

using pairability::CssCertificate;
using pairability::MeasurementPattern;
using stabsim::OutcomeSource;
using stabsim::StabilizerTableau;

/// One broadcast outcome: a single-qubit measurement ("X" on {q}) or a
/// multi-qubit parity ("ZZ" on {q1, q2}).
struct MeasurementRecord {
  std::vector<Qubit> qubits;
  std::string pauli;
  int outcome = +1;
  bool random = false;
};

struct CorrectionRecord {
  std::size_t pair = 0;
  Qubit qubit = 0;
  char pauli = 'X';
};

struct ProtocolTranscript {
  std::optional<std::uint64_t> seed;    // absent when run on a fixed branch
  std::optional<std::uint64_t> branch;  // branch mask, if any
  std::vector<MeasurementRecord> measurements;
  std::vector<CorrectionRecord> corrections;
  std::vector<bool> verdict;  // per pair
  std::size_t random_outcomes = 0;

  bool success() const;
  /// Outcome of the single-qubit measurement on q, if there was one.
  std::optional<int> outcome_of(Qubit q) const;
};

/// Prepares |C>, measures Z on z_set then X on x_set (ascending), and for
/// each pair applies Z on a_i when prod_{p in X, f_i(p)=1} m_p = -1 and X on
/// a_i when prod_{p in Z, fbar_i(p)=1} m_p = -1. Corrections depend only on
/// the broadcast outcomes and the certificate. Pair i succeeds when the final
/// state has +X_aX_b and +Z_aZ_b in its stabilizer group.
///
/// Throws std::invalid_argument if the pattern, pairs or certificate shapes
/// disagree; the certificate's contents are not re-verified.
ProtocolTranscript run_protocol(const codes::LinearCode& code, const MeasurementPattern& pattern,
                                const PairList& pairs, const CssCertificate& cert, std::uint64_t seed);

/// Same, starting from an already prepared |C> and drawing outcomes from
/// `source`. The tableau is consumed.
ProtocolTranscript run_protocol_on(StabilizerTableau state, const MeasurementPattern& pattern, const PairList& pairs,
                                   const CssCertificate& cert, OutcomeSource& source);

/// Runs the protocol on every outcome branch (state prepared once).
stabsim::BranchSummary run_protocol_all_branches(const codes::LinearCode& code, const MeasurementPattern& pattern,
                                                 const PairList& pairs, const CssCertificate& cert,
                                                 std::size_t max_random = 24);

/// Measures every qubit outside E in its pattern basis and judges each pair
/// by entropies only (S(a) = S(b) = 1, S(ab) = 0); no corrections.
ProtocolTranscript run_pauli_pattern(StabilizerTableau state, const MeasurementPattern& pattern,
                                     const PairList& pairs, OutcomeSource& source);

ProtocolTranscript run_pauli_pattern(const StabilizerTableau& state, const MeasurementPattern& pattern,
                                     const PairList& pairs, std::uint64_t seed);

/// True iff run_pauli_pattern succeeds on every outcome branch.
bool pauli_pattern_succeeds_always(const StabilizerTableau& state, const MeasurementPattern& pattern,
                                   const PairList& pairs);

}  // namespace kpair::locc
