// Exhaustive search for single-qubit Pauli measurement patterns that leave
// two target pairs maximally entangled, and the 10-vertex wheel graph state.
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kpair/netroute.hpp"
#include "kpair/pairability.hpp"
#include "kpair/stabsim.hpp"
#include "kpair/types.hpp"

namespace kpair::search {

using netroute::GraphNetwork;
using pairability::MeasurementPattern;
using stabsim::StabilizerTableau;

/// Vertices 0..9, edges (j, j+1) and (j, j+5) mod 10.
GraphNetwork wheel_graph();

/// Cycle 0..n-1.
GraphNetwork cycle_graph(std::size_t n);

/// prod CZ |+>^n over the graph's edges (multiplicity ignored).
StabilizerTableau graph_state_of(const GraphNetwork& g);

/// W |psi> == H^n |psi> (when `hadamard`) or W |psi> == |psi>, where W moves
/// qubit j to perm[j].
bool verify_symmetry(const StabilizerTableau& t, const std::vector<Qubit>& perm, bool hadamard);

/// Wheel state: invariant under j -> 3j combined with H on every qubit, and
/// Z_j X_{j-3} X_{j+3} X_{j+5} stabilizes it for every j.
bool verify_wheel_symmetry();

/// Parses a basis set such as "XYZ" or "XZ" (order and case ignored).
std::vector<Basis> parse_bases(std::string_view text);

/// First assignment of `bases` to the qubits outside the two pairs (ascending
/// qubit order, earlier qubits varying slowest, X < Y < Z) after which both
/// pairs are maximally entangled on every outcome branch.
std::optional<MeasurementPattern> search_pauli_pattern(const StabilizerTableau& t, const PairList& pairs,
                                                       const std::vector<Basis>& bases);

struct TupleResult {
  PairList pairs;
  std::optional<MeasurementPattern> pattern;
};

struct PairabilityReport {
  std::vector<TupleResult> tuples;
  std::size_t successes = 0;
  bool all_succeeded() const { return successes == tuples.size(); }
  const TupleResult* first_failure() const;
};

/// Every unordered choice of two disjoint pairs, ordered by (a1, b1, a2, b2)
/// with a1 < b1, a2 < b2, a1 < a2.
std::vector<PairList> all_pair_tuples(std::size_t n);

/// With `use_symmetry`, only a1 = 0, b1 in {1, 2, 5} are swept; this needs a
/// 10-qubit state with the wheel's rotation, reflection and j -> 3j (with H)
/// symmetries and a basis set closed under H, and throws
/// std::invalid_argument otherwise. Requires n <= 12.
PairabilityReport verify_2_pairable(const StabilizerTableau& t, const std::vector<Basis>& bases, bool use_symmetry,
                                    std::size_t threads = 1);

/// One graph per line: "n i-j i-j ..."; blank lines and '#' comments skipped.
std::vector<GraphNetwork> parse_graph_list(std::string_view text);

/// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace kpair::search
