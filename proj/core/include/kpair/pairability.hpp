// Measurement patterns for CSS resource states and their certificates.
//
// For target pairs {a_i, b_i} labelled by points of F2^m and vectors
// c_1..c_k, the subspaces S_i = Aff({a_i, b_i} + {c_j : j != i}) fix the
// pattern: Z = (S_1 u ... u S_k) \ E is measured in the standard basis and
// X = everything else outside E in the Hadamard basis. A certificate holds,
// for each pair, a codeword f of C equal to 1 on a_i, b_i and 0 on the rest
// of E u Z, and a codeword fbar of the dual equal to 1 on a_i, b_i and 0 on
// the rest of E u X.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kpair/codes.hpp"
#include "kpair/f2.hpp"
#include "kpair/types.hpp"

namespace kpair::pairability {

using codes::AffineMap;
using codes::Label;
using codes::LinearCode;
using f2::BitVec;

/// All sums of an odd number of elements of `points`, sorted ascending.
std::vector<Label> aff_span(std::span<const Label> points);

struct MeasurementPattern {
  std::size_t n = 0;
  std::vector<Qubit> e_set;  // target qubits, ascending
  std::vector<Qubit> x_set;  // ascending
  std::vector<Qubit> z_set;  // ascending
  /// Measurement basis per qubit; empty for E.
  std::vector<std::optional<Basis>> basis;
  /// S_i per pair when the pattern came from build_pattern (may be empty).
  std::vector<std::vector<Label>> subspaces;

  /// CSS pattern with X on x_set and Z on z_set.
  static MeasurementPattern css(std::size_t n, std::vector<Qubit> e, std::vector<Qubit> x, std::vector<Qubit> z);
  /// Arbitrary bases on every qubit outside `e`; x_set/z_set are filled from
  /// the X and Z entries.
  static MeasurementPattern with_bases(std::vector<std::optional<Basis>> basis, std::vector<Qubit> e);

  /// Throws std::invalid_argument unless E, X, Z are disjoint, cover [n], and
  /// `basis` is defined exactly outside E.
  void validate() const;
  /// The measured qubits in protocol order: z_set then x_set, then any
  /// Y-basis qubits, each ascending.
  std::vector<Qubit> measurement_order() const;
  /// Letters per qubit, '.' for E (e.g. "Z.XX..YZ").
  std::string to_string() const;
};

/// build_pattern found a subspace S_i meeting E outside {a_i, b_i}.
class PatternError : public std::runtime_error {
 public:
  PatternError(std::size_t pair_index, Qubit qubit);
  std::size_t pair_index() const { return pair_; }
  Qubit qubit() const { return qubit_; }

 private:
  std::size_t pair_;
  Qubit qubit_;
};

struct CVectors {
  std::vector<Label> c;
};

MeasurementPattern build_pattern(const PairList& pairs, const CVectors& c, int m);

/// A codeword of RM(r, m) taking `values[i]` at `points[i]`, or nullopt when
/// no such polynomial exists. Throws std::invalid_argument on repeated points
/// or mismatched lengths.
std::optional<BitVec> poly_regression(std::span<const Label> points, const std::vector<bool>& values, int r, int m);

/// No c-triple with c_1 + c_2 + c_3 = 0 gives a certified pattern.
class SearchExhausted : public std::runtime_error {
 public:
  explicit SearchExhausted(PairList pairs);
  const PairList& pairs() const { return pairs_; }

 private:
  PairList pairs_;
};

/// k = 1: c_1 = e_1 (unused by the pattern).
/// k = 2: the least label outside Aff(E), used twice; needs m >= 4.
/// k = 3: the first (c_1, c_2) in ascending order with c_3 = c_1 + c_2, all
///        three distinct and nonzero, whose pattern is certified for `code`
///        (default RM(2, m)); needs m >= 5. Throws SearchExhausted.
/// k >= 4: the unit vectors e_1..e_k; needs m >= 3k and canonical pairs.
CVectors choose_c_vectors(const PairList& pairs, int m, const LinearCode* code = nullptr);

struct CanonicalFrame {
  AffineMap map;       // original label -> canonical label
  PairList pairs;      // images of the input pairs
};

/// Affine relabeling after which every a_i, b_i vanishes on x_1..x_k and
/// {a_i, b_i} avoids {0, a_j + b_j} for all i, j. Needs m >= 3k.
CanonicalFrame canonicalize(const PairList& pairs, int m);

/// Affine relabeling with a_1 -> 0 and b_1 -> e_1.
CanonicalFrame canonicalize_first_pair(const PairList& pairs, int m);

/// True iff the pairs vanish on the first k coordinates and avoid
/// {0, a_j + b_j}.
bool is_canonical(const PairList& pairs);

struct CssCertificate {
  std::vector<BitVec> f;     // per pair, codeword of C
  std::vector<BitVec> fbar;  // per pair, codeword of the dual of C
};

/// Finds witnesses for every pair, or nullopt if some pair has none. CSS1 is
/// solved over the code's generator coefficients; CSS2 first tries the
/// indicator of S_i and otherwise solves for a dual codeword supported on
/// Z u {a_i, b_i}.
std::optional<CssCertificate> verify_css_conditions(const LinearCode& code, const MeasurementPattern& pattern,
                                                    const PairList& pairs);

/// Re-checks every witness condition and code membership.
bool check_certificate(const LinearCode& code, const MeasurementPattern& pattern, const PairList& pairs,
                       const CssCertificate& cert);

/// (alpha_1 + beta_1) * sum_{M proper subset of [k]} prod_{j in M} gamma_j,
/// where alpha, beta, gamma are the coordinates in the basis
/// a_1, b_1, ..., a_k, b_k, c_1, ..., c_k of F2^m (m = 3k, c_j = e_j).
/// Throws std::invalid_argument if the 3k vectors are dependent.
BitVec appendix_a_polynomial(const PairList& pairs, int m);

/// Pattern plus certificate for a pairing on RM(r, m), in the original
/// labels. For k >= 4 the pattern is built in the canonical frame and
/// pulled back.
struct PairingPlan {
  CVectors c;
  MeasurementPattern pattern;
  std::optional<CssCertificate> certificate;
  std::optional<AffineMap> frame;
};

PairingPlan plan_rm_pairing(const LinearCode& code, const PairList& pairs, int m);

}  // namespace kpair::pairability
