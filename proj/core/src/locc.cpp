#include "kpair/locc.hpp"

#include <algorithm>
#include <stdexcept>

namespace kpair::locc {

using stabsim::PauliString;

bool ProtocolTranscript::success() const {
  return !verdict.empty() && std::all_of(verdict.begin(), verdict.end(), [](bool v) { return v; });
}

std::optional<int> ProtocolTranscript::outcome_of(Qubit q) const {
  for (const auto& m : measurements) {
    if (m.qubits.size() == 1 && m.qubits[0] == q) return m.outcome;
  }
  return std::nullopt;
}

namespace {

// Which measured qubits feed each pair's two correction bits.
struct CorrectionPlan {
  std::vector<std::vector<Qubit>> x_parity;  // X-set qubits with f_i = 1
  std::vector<std::vector<Qubit>> z_parity;  // Z-set qubits with fbar_i = 1
};

CorrectionPlan plan_corrections(const MeasurementPattern& pattern, const PairList& pairs, const CssCertificate& cert) {
  pattern.validate();
  validate_pairs(pairs, pattern.n);
  std::vector<Qubit> e;
  for (const auto& p : pairs) {
    e.push_back(p.a);
    e.push_back(p.b);
  }
  std::sort(e.begin(), e.end());
  if (e != pattern.e_set) throw std::invalid_argument("run_protocol: pattern target set differs from the pairs");
  if (cert.f.size() != pairs.size() || cert.fbar.size() != pairs.size()) {
    throw std::invalid_argument("run_protocol: certificate has " + std::to_string(cert.f.size()) + "/" +
                                std::to_string(cert.fbar.size()) + " witnesses for " + std::to_string(pairs.size()) +
                                " pairs");
  }
  CorrectionPlan plan;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (cert.f[i].size() != pattern.n || cert.fbar[i].size() != pattern.n) {
      throw std::invalid_argument("run_protocol: witness " + std::to_string(i) + " has the wrong length");
    }
    std::vector<Qubit> xs;
    for (auto q : pattern.x_set) {
      if (cert.f[i].get(q)) xs.push_back(q);
    }
    std::vector<Qubit> zs;
    for (auto q : pattern.z_set) {
      if (cert.fbar[i].get(q)) zs.push_back(q);
    }
    plan.x_parity.push_back(std::move(xs));
    plan.z_parity.push_back(std::move(zs));
  }
  return plan;
}

// Runs the measurements and corrections; `out` may be null on hot paths.
bool execute(StabilizerTableau& state, const MeasurementPattern& pattern, const PairList& pairs,
             const CorrectionPlan& plan, OutcomeSource& source, ProtocolTranscript* out) {
  if (state.num_qubits() != pattern.n) throw std::invalid_argument("run_protocol: state size differs from pattern");
  std::vector<signed char> outcome(pattern.n, 0);
  for (auto q : pattern.measurement_order()) {
    const Basis b = *pattern.basis[q];
    const auto r = state.measure(q, b, source);
    outcome[q] = static_cast<signed char>(r.outcome);
    if (out) out->measurements.push_back({{q}, std::string(1, to_char(b)), r.outcome, r.random});
  }
  bool all = true;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    int sx = 1;
    for (auto q : plan.x_parity[i]) sx *= outcome[q];
    int sz = 1;
    for (auto q : plan.z_parity[i]) sz *= outcome[q];
    // X_a X_b carries sign sx and Z_a Z_b carries sign sz.
    if (sx < 0) {
      state.z(pairs[i].a);
      if (out) out->corrections.push_back({i, pairs[i].a, 'Z'});
    }
    if (sz < 0) {
      state.x(pairs[i].a);
      if (out) out->corrections.push_back({i, pairs[i].a, 'X'});
    }
  }
  for (const auto& p : pairs) {
    const bool ok = stabsim::is_exact_epr_pair(state, p.a, p.b) && stabsim::is_epr_pair(state, p.a, p.b);
    if (out) out->verdict.push_back(ok);
    all = all && ok;
  }
  if (out) out->random_outcomes = source.draws();
  return all;
}

}  // namespace

ProtocolTranscript run_protocol_on(StabilizerTableau state, const MeasurementPattern& pattern, const PairList& pairs,
                                   const CssCertificate& cert, OutcomeSource& source) {
  const auto plan = plan_corrections(pattern, pairs, cert);
  ProtocolTranscript t;
  execute(state, pattern, pairs, plan, source, &t);
  return t;
}

ProtocolTranscript run_protocol(const codes::LinearCode& code, const MeasurementPattern& pattern,
                                const PairList& pairs, const CssCertificate& cert, std::uint64_t seed) {
  if (code.length() != pattern.n) throw std::invalid_argument("run_protocol: code length differs from pattern");
  const auto plan = plan_corrections(pattern, pairs, cert);
  auto state = stabsim::css_state(code);
  auto source = OutcomeSource::seeded(seed);
  ProtocolTranscript t;
  t.seed = seed;
  execute(state, pattern, pairs, plan, source, &t);
  return t;
}

stabsim::BranchSummary run_protocol_all_branches(const codes::LinearCode& code, const MeasurementPattern& pattern,
                                                 const PairList& pairs, const CssCertificate& cert,
                                                 std::size_t max_random) {
  if (code.length() != pattern.n) throw std::invalid_argument("run_protocol: code length differs from pattern");
  const auto plan = plan_corrections(pattern, pairs, cert);
  const auto prepared = stabsim::css_state(code);
  return stabsim::exhaust_branches(
      [&](OutcomeSource& source) {
        auto state = prepared;
        return execute(state, pattern, pairs, plan, source, nullptr);
      },
      max_random);
}

// ---------------------------------------------------------------------------

namespace {

bool execute_pauli(StabilizerTableau& state, const MeasurementPattern& pattern, const PairList& pairs,
                   OutcomeSource& source, ProtocolTranscript* out) {
  if (state.num_qubits() != pattern.n) throw std::invalid_argument("run_pauli_pattern: state size differs from pattern");
  for (Qubit q = 0; q < pattern.n; ++q) {
    if (!pattern.basis[q]) continue;
    const auto r = state.measure(q, *pattern.basis[q], source);
    if (out) out->measurements.push_back({{q}, std::string(1, to_char(*pattern.basis[q])), r.outcome, r.random});
  }
  bool all = true;
  for (const auto& p : pairs) {
    const bool ok = stabsim::is_epr_pair(state, p.a, p.b);
    if (out) out->verdict.push_back(ok);
    all = all && ok;
  }
  if (out) out->random_outcomes = source.draws();
  return all;
}

void check_pauli_inputs(const MeasurementPattern& pattern, const PairList& pairs) {
  validate_pairs(pairs, pattern.n);
  for (const auto& p : pairs) {
    if (pattern.basis[p.a] || pattern.basis[p.b]) {
      throw std::invalid_argument("run_pauli_pattern: a target qubit is scheduled for measurement");
    }
  }
}

}  // namespace

ProtocolTranscript run_pauli_pattern(StabilizerTableau state, const MeasurementPattern& pattern,
                                     const PairList& pairs, OutcomeSource& source) {
  check_pauli_inputs(pattern, pairs);
  ProtocolTranscript t;
  execute_pauli(state, pattern, pairs, source, &t);
  return t;
}

ProtocolTranscript run_pauli_pattern(const StabilizerTableau& state, const MeasurementPattern& pattern,
                                     const PairList& pairs, std::uint64_t seed) {
  auto source = OutcomeSource::seeded(seed);
  auto t = run_pauli_pattern(state, pattern, pairs, source);
  t.seed = seed;
  return t;
}

bool pauli_pattern_succeeds_always(const StabilizerTableau& state, const MeasurementPattern& pattern,
                                   const PairList& pairs) {
  check_pauli_inputs(pattern, pairs);
  const auto summary = stabsim::exhaust_branches(
      [&](OutcomeSource& source) {
        auto copy = state;
        return execute_pauli(copy, pattern, pairs, source, nullptr);
      });
  return summary.all_succeeded();
}

}  // namespace kpair::locc
