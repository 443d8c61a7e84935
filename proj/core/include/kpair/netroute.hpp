// EPR pairs on the edges of a graph, joined into end-to-end pairs by
// entanglement swapping along routed paths.
//
// Vertices are 0-based. Copy c of edge e = (u, v), u < v, is the EPR pair on
// qubits 2(c|E| + e) (held by u) and 2(c|E| + e) + 1 (held by v).
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kpair/locc.hpp"
#include "kpair/stabsim.hpp"
#include "kpair/types.hpp"

namespace kpair::netroute {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Path = std::vector<Vertex>;

class GraphNetwork {
 public:
  GraphNetwork() = default;
  /// Edges are normalized to (min, max); self-loops, repeats and
  /// out-of-range endpoints throw std::invalid_argument. p >= 1.
  GraphNetwork(std::size_t n, std::vector<Edge> edges, std::size_t p = 1);

  /// "n p" on the first line, then one "i j" per line; '#' starts a comment.
  static GraphNetwork parse(std::string_view text);
  std::string to_string() const;

  std::size_t num_vertices() const { return n_; }
  std::size_t multiplicity() const { return p_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;
  const std::vector<std::pair<Vertex, std::size_t>>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  GraphNetwork with_multiplicity(std::size_t p) const { return {n_, edges_, p}; }

  std::size_t num_qubits() const { return 2 * p_ * edges_.size(); }
  /// Qubit of copy `copy` of edge `e` held by vertex `holder` (an endpoint).
  Qubit qubit(std::size_t copy, std::size_t e, Vertex holder) const;

 private:
  std::size_t n_ = 0;
  std::size_t p_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj_;  // (neighbor, edge index)
};

struct RoutePlan {
  std::vector<Path> paths;   // paths[i] runs from a_i to b_i
  std::size_t congestion = 0;  // max number of paths through one edge
};

/// Every EPR copy of every edge.
stabsim::StabilizerTableau network_state(const GraphNetwork& g);

/// Swaps along `links`, where links[j] = (left qubit, right qubit) is an EPR
/// pair and links[j].b and links[j+1].a belong to the same party. Left to
/// right, each interior party measures the ZZ parity of its two qubits, flips
/// its second qubit and the far end on -1, measures both qubits in X and the
/// far end applies Z when the X parity is -1. Afterwards links.front().a and
/// links.back().b hold an EPR pair. Throws std::invalid_argument if a link
/// is not an EPR pair in `t`.
void swap_chain(stabsim::StabilizerTableau& t, const std::vector<QubitPair>& links, stabsim::OutcomeSource& source,
                locc::ProtocolTranscript* transcript = nullptr);

/// Exact search for paths a_i -> b_i using every edge at most p times.
/// Paths are simple. Returns nullopt when no plan exists.
std::optional<RoutePlan> find_paths(const GraphNetwork& g, const PairList& pairs, std::size_t p);

class RoutingInfeasible : public std::runtime_error {
 public:
  explicit RoutingInfeasible(const std::string& what) : std::runtime_error(what) {}
};

struct NetworkRun {
  RoutePlan plan;
  locc::ProtocolTranscript transcript;
  /// copies_used[e] = number of EPR copies of edge e consumed.
  std::vector<std::size_t> copies_used;
};

/// Routes with congestion <= g.multiplicity(), swaps along every path (copies
/// consumed in path order) and judges each pair with the exact EPR check.
NetworkRun pair_over_network(const GraphNetwork& g, const PairList& pairs, stabsim::OutcomeSource& source);
NetworkRun pair_over_network(const GraphNetwork& g, const PairList& pairs, std::uint64_t seed);

/// Every complete pairing of the vertices admits edge-disjoint paths.
/// Requires an even vertex count n <= 12.
bool is_path_pairable(const GraphNetwork& g);

}  // namespace kpair::netroute
