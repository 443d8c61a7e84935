// Stabilizer-tableau simulator.
//
// The tableau keeps n destabilizer rows alongside the n stabilizer
// generators (the CHP layout), which makes both random and deterministic
// Pauli measurements O(n^2 / 64). Only the stabilizer half is part of the
// observable state; destabilizer signs are never meaningful.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpair/codes.hpp"
#include "kpair/f2.hpp"
#include "kpair/types.hpp"

namespace kpair::stabsim {

using f2::BitMatrix;
using f2::BitVec;

/// Signed Hermitian Pauli operator on n qubits. Per qubit, (x, z) = (1, 0) is
/// X, (0, 1) is Z and (1, 1) is Y.
struct PauliString {
  BitVec x;
  BitVec z;
  bool negative = false;

  PauliString() = default;
  explicit PauliString(std::size_t n) : x(n), z(n) {}

  /// Parses an optional sign followed by {I,X,Y,Z}^n, e.g. "-XZZI".
  static PauliString parse(std::string_view text);
  static PauliString single(std::size_t n, Qubit q, Basis b, bool negative = false);

  std::size_t size() const { return x.size(); }
  char at(std::size_t q) const;
  bool commutes_with(const PauliString& other) const;
  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// Source of the random bits consumed by non-deterministic measurements:
/// either a seeded std::mt19937_64 or a fixed branch mask whose bit j is the
/// outcome of the j-th random measurement (1 means outcome -1).
class OutcomeSource {
 public:
  static OutcomeSource seeded(std::uint64_t seed);
  static OutcomeSource branch(std::uint64_t mask);

  bool draw();
  std::size_t draws() const { return draws_; }
  bool is_branch() const { return forced_; }

 private:
  OutcomeSource() = default;
  std::mt19937_64 rng_;
  std::uint64_t mask_ = 0;
  std::size_t draws_ = 0;
  bool forced_ = false;
};

struct MeasureResult {
  int outcome = +1;  // +1 or -1
  bool random = false;
};

enum class GateKind { H, S, X, Y, Z, CZ, CX, PERM };

struct Gate {
  GateKind kind = GateKind::H;
  Qubit a = 0;
  Qubit b = 0;
  /// For PERM: qubit j moves to position perm[j].
  std::vector<Qubit> perm;

  static Gate h(Qubit q) { return {GateKind::H, q, 0, {}}; }
  static Gate s(Qubit q) { return {GateKind::S, q, 0, {}}; }
  static Gate x(Qubit q) { return {GateKind::X, q, 0, {}}; }
  static Gate y(Qubit q) { return {GateKind::Y, q, 0, {}}; }
  static Gate z(Qubit q) { return {GateKind::Z, q, 0, {}}; }
  static Gate cz(Qubit p, Qubit q) { return {GateKind::CZ, p, q, {}}; }
  static Gate cx(Qubit control, Qubit target) { return {GateKind::CX, control, target, {}}; }
  static Gate permutation(std::vector<Qubit> perm) { return {GateKind::PERM, 0, 0, std::move(perm)}; }
};

class StabilizerTableau {
 public:
  /// |0^n>
  explicit StabilizerTableau(std::size_t n = 0);

  /// Builds the state stabilized by `generators`. Throws std::invalid_argument
  /// unless there are n independent, pairwise commuting generators on n
  /// qubits. Destabilizers are found by symplectic Gram-Schmidt, O(n^3).
  static StabilizerTableau from_generators(const std::vector<PauliString>& generators);

  /// Takes a full tableau whose destabilizer i anticommutes with stabilizer i
  /// and commutes with every other row. Only the shapes are checked; debug
  /// builds also check the symplectic structure for n <= 64.
  static StabilizerTableau from_rows(const std::vector<PauliString>& destabilizers,
                                     const std::vector<PauliString>& stabilizers);

  std::size_t num_qubits() const { return n_; }

  PauliString stabilizer(std::size_t i) const { return row(n_ + i); }
  PauliString destabilizer(std::size_t i) const { return row(i); }
  std::vector<PauliString> stabilizers() const;
  /// Single bits of stabilizer generator i, without copying the row.
  bool stabilizer_x(std::size_t i, Qubit q) const { return xbit(n_ + i, q); }
  bool stabilizer_z(std::size_t i, Qubit q) const { return zbit(n_ + i, q); }
  BitMatrix xpart() const;
  BitMatrix zpart() const;
  std::vector<bool> phases() const;

  void h(Qubit q);
  void s(Qubit q);
  void x(Qubit q);
  void y(Qubit q);
  void z(Qubit q);
  void cz(Qubit p, Qubit q);
  void cx(Qubit control, Qubit target);
  /// Relabels qubits: the content of qubit j moves to perm[j].
  void permute(std::span<const Qubit> perm);
  void apply(const Gate& g);

  MeasureResult measure(Qubit q, Basis basis, OutcomeSource& source);
  /// Measures an arbitrary Hermitian Pauli product (e.g. a two-qubit parity).
  /// The outcome is relative to the given sign.
  MeasureResult measure(const PauliString& p, OutcomeSource& source);

  /// +1 / -1 if +-p belongs to the stabilizer group, 0 if neither does.
  int expectation(const PauliString& p) const;
  bool contains(const PauliString& p) const;

  /// Generators commute pairwise and are independent (symplectic rank n).
  bool is_valid() const;

  /// One line per stabilizer generator: sign then {I,X,Y,Z}^n.
  std::string dump() const;

 private:
  PauliString row(std::size_t r) const;
  void set_row(std::size_t r, const PauliString& p);
  std::uint64_t* xrow(std::size_t r) { return xs_.data() + r * words_; }
  std::uint64_t* zrow(std::size_t r) { return zs_.data() + r * words_; }
  const std::uint64_t* xrow(std::size_t r) const { return xs_.data() + r * words_; }
  const std::uint64_t* zrow(std::size_t r) const { return zs_.data() + r * words_; }
  bool xbit(std::size_t r, Qubit q) const { return (xrow(r)[q / 64] >> (q % 64)) & 1U; }
  bool zbit(std::size_t r, Qubit q) const { return (zrow(r)[q / 64] >> (q % 64)) & 1U; }
  bool anticommutes(std::size_t r, const PauliString& p) const;
  /// row[target] *= row[source]; sign tracked only when meaningful.
  void multiply_rows(std::size_t target, std::size_t source);
  void check_qubit(Qubit q) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> xs_;  // 2n rows: [0, n) destabilizers, [n, 2n) stabilizers
  std::vector<std::uint64_t> zs_;
  std::vector<std::uint8_t> signs_;
};

StabilizerTableau apply_gate(StabilizerTableau t, const Gate& g);

/// |C>: stabilized by X(f) for f in C and Z(g) for g in the dual code.
StabilizerTableau css_state(const codes::LinearCode& c);

/// prod_{(i,j) in E} CZ_ij |+>^n, with generators X_j prod_{i ~ j} Z_i.
StabilizerTableau graph_state(std::span<const std::pair<Qubit, Qubit>> edges, std::size_t n);

/// Tensor product of EPR pairs (|00> + |11>)/sqrt2 on the given qubit pairs;
/// every other qubit is |0>.
StabilizerTableau epr_product_state(std::span<const QubitPair> pairs, std::size_t n);

/// Entanglement entropy (bits) of `subset` against its complement: the rank
/// of the generator matrix restricted to the subset's columns minus |subset|.
std::size_t entanglement_entropy(const StabilizerTableau& t, std::span<const Qubit> subset);

/// S(a) = S(b) = 1 and S(ab) = 0: a maximally entangled pair, equal to an
/// EPR pair up to single-qubit Cliffords.
bool is_epr_pair(const StabilizerTableau& t, Qubit a, Qubit b);

/// +X_a X_b and +Z_a Z_b are both stabilizers: exactly (|00> + |11>)/sqrt2.
bool is_exact_epr_pair(const StabilizerTableau& t, Qubit a, Qubit b);

/// Signed stabilizer groups coincide.
bool stabilizer_equal(const StabilizerTableau& t1, const StabilizerTableau& t2);

/// Runs `trial` once per outcome branch. The first call uses a seeded source
/// to count the random measurements R; the trial is then repeated for all
/// 2^R branch masks. Throws std::length_error if R > max_random, and
/// std::logic_error if the number of draws differs between branches.
struct BranchSummary {
  std::size_t random_outcomes = 0;
  std::uint64_t branches = 0;
  std::uint64_t successes = 0;
  std::optional<std::uint64_t> first_failure;
  bool all_succeeded() const { return successes == branches; }
};

template <class Trial>
BranchSummary exhaust_branches(Trial&& trial, std::size_t max_random = 24) {
  BranchSummary summary;
  auto probe = OutcomeSource::seeded(0);
  (void)trial(probe);
  summary.random_outcomes = probe.draws();
  if (summary.random_outcomes > max_random) {
    throw std::length_error("exhaust_branches: " + std::to_string(summary.random_outcomes) +
                            " random outcomes exceed the branch budget");
  }
  summary.branches = std::uint64_t{1} << summary.random_outcomes;
  for (std::uint64_t mask = 0; mask < summary.branches; ++mask) {
    auto source = OutcomeSource::branch(mask);
    const bool ok = trial(source);
    if (source.draws() != summary.random_outcomes) {
      throw std::logic_error("exhaust_branches: random outcome count depends on the branch");
    }
    if (ok) {
      ++summary.successes;
    } else if (!summary.first_failure) {
      summary.first_failure = mask;
    }
  }
  return summary;
}

// ---------------------------------------------------------------------------
// Pairing overlaps <pi|rho> between products of EPR pairs.

/// Exact value numerator / 2^log2_denominator, kept in lowest terms.
struct DyadicRational {
  std::int64_t numerator = 0;
  unsigned log2_denominator = 0;

  static DyadicRational make(std::int64_t numerator, unsigned log2_denominator);
  double to_double() const;
  std::string to_string() const;
  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
};

struct Pairing {
  PairList pairs;
  /// 2k == n
  bool complete(std::size_t n) const { return 2 * pairs.size() == n; }
};

/// Number of cycles in the multigraph pi u rho on [n]; a pair shared by both
/// pairings is a 2-cycle.
std::size_t count_cycles(const Pairing& p, const Pairing& q, std::size_t n);

/// 2^{mu - k}: the overlap of the two EPR products, with qubits outside a
/// partial pairing fixed to |0>. Throws std::invalid_argument if the
/// pairings have different sizes or are malformed.
DyadicRational pairing_overlap(const Pairing& p, const Pairing& q, std::size_t n);

}  // namespace kpair::stabsim
