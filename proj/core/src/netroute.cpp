#include "kpair/netroute.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace kpair::netroute {

using stabsim::OutcomeSource;
using stabsim::PauliString;
using stabsim::StabilizerTableau;

GraphNetwork::GraphNetwork(std::size_t n, std::vector<Edge> edges, std::size_t p) : n_(n), p_(p), adj_(n) {
  if (p == 0) throw std::invalid_argument("graph: multiplicity p must be at least 1");
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("graph: edge " + std::to_string(u) + "-" + std::to_string(v) + " has an endpoint >= n=" +
                                  std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (edges[i] == edges[j]) {
        throw std::invalid_argument("graph: repeated edge " + std::to_string(edges[i].first) + "-" +
                                    std::to_string(edges[i].second));
      }
    }
  }
  edges_ = std::move(edges);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    adj_[edges_[e].first].emplace_back(edges_[e].second, e);
    adj_[edges_[e].second].emplace_back(edges_[e].first, e);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

GraphNetwork GraphNetwork::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::size_t n = 0;
  std::size_t p = 1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("graph line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    if (!(fields >> a)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      fail("expected integers");
    }
    if (!(fields >> b)) fail(header ? "edge needs two endpoints" : "header needs \"n p\"");
    std::string rest;
    if (fields >> rest) fail("unexpected token '" + rest + "'");
    if (a < 0 || b < 0) fail("negative value");
    if (!header) {
      n = static_cast<std::size_t>(a);
      p = static_cast<std::size_t>(b);
      if (p == 0) fail("multiplicity p must be at least 1");
      header = true;
    } else {
      if (static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) fail("vertex out of range");
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  if (!header) throw std::invalid_argument("graph: missing \"n p\" header");
  return {n, std::move(edges), p};
}

std::string GraphNetwork::to_string() const {
  std::string s = std::to_string(n_) + " " + std::to_string(p_) + "\n";
  for (auto [u, v] : edges_) s += std::to_string(u) + " " + std::to_string(v) + "\n";
  return s;
}

std::optional<std::size_t> GraphNetwork::edge_index(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return std::nullopt;
  for (auto [w, e] : adj_[u]) {
    if (w == v) return e;
  }
  return std::nullopt;
}

Qubit GraphNetwork::qubit(std::size_t copy, std::size_t e, Vertex holder) const {
  if (copy >= p_ || e >= edges_.size()) throw std::out_of_range("graph: edge copy out of range");
  const auto [u, v] = edges_[e];
  if (holder != u && holder != v) throw std::invalid_argument("graph: vertex does not hold this edge");
  return static_cast<Qubit>(2 * (copy * edges_.size() + e) + (holder == u ? 0 : 1));
}

StabilizerTableau network_state(const GraphNetwork& g) {
  PairList pairs;
  for (std::size_t c = 0; c < g.multiplicity(); ++c) {
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      pairs.push_back({g.qubit(c, e, g.edges()[e].first), g.qubit(c, e, g.edges()[e].second)});
    }
  }
  return stabsim::epr_product_state(pairs, g.num_qubits());
}

// ---------------------------------------------------------------------------

void swap_chain(StabilizerTableau& t, const std::vector<QubitPair>& links, OutcomeSource& source,
                locc::ProtocolTranscript* transcript) {
  if (links.empty()) throw std::invalid_argument("swap_chain: empty chain");
  for (std::size_t j = 0; j < links.size(); ++j) {
    if (!stabsim::is_exact_epr_pair(t, links[j].a, links[j].b)) {
      throw std::invalid_argument("swap_chain: link " + std::to_string(j) + " is not an EPR pair");
    }
  }
  const std::size_t n = t.num_qubits();
  for (std::size_t j = 1; j < links.size(); ++j) {
    const Qubit c1 = links[j - 1].b;
    const Qubit c2 = links[j].a;
    const Qubit bob = links[j].b;
    PauliString zz(n);
    zz.z.set(c1);
    zz.z.set(c2);
    const auto parity = t.measure(zz, source);
    if (transcript) transcript->measurements.push_back({{c1, c2}, "ZZ", parity.outcome, parity.random});
    if (parity.outcome < 0) {
      t.x(c2);
      t.x(bob);
      if (transcript) {
        transcript->corrections.push_back({j, c2, 'X'});
        transcript->corrections.push_back({j, bob, 'X'});
      }
    }
    const auto m1 = t.measure(c1, Basis::X, source);
    const auto m2 = t.measure(c2, Basis::X, source);
    if (transcript) {
      transcript->measurements.push_back({{c1}, "X", m1.outcome, m1.random});
      transcript->measurements.push_back({{c2}, "X", m2.outcome, m2.random});
    }
    if (m1.outcome * m2.outcome < 0) {
      t.z(bob);
      if (transcript) transcript->corrections.push_back({j, bob, 'Z'});
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

class PathSearch {
 public:
  PathSearch(const GraphNetwork& g, const PairList& pairs, std::size_t p)
      : g_(g), pairs_(pairs), capacity_(g.edges().size(), p), paths_(pairs.size()), on_path_(pairs.size(), std::vector<char>(g.num_vertices(), 0)) {}

  bool run() { return route(0); }
  std::vector<Path> paths() const { return paths_; }

 private:
  // Remaining pairs must stay connected in the residual graph.
  bool feasible(std::size_t from) const {
    std::vector<int> comp(g_.num_vertices(), -1);
    int label = 0;
    for (Vertex s = 0; s < g_.num_vertices(); ++s) {
      if (comp[s] >= 0) continue;
      std::vector<Vertex> stack{s};
      comp[s] = label;
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (auto [w, e] : g_.neighbors(v)) {
          if (capacity_[e] > 0 && comp[w] < 0) {
            comp[w] = label;
            stack.push_back(w);
          }
        }
      }
      ++label;
    }
    for (std::size_t i = from; i < pairs_.size(); ++i) {
      if (comp[pairs_[i].a] != comp[pairs_[i].b]) return false;
    }
    return true;
  }

  bool route(std::size_t i) {
    if (i == pairs_.size()) return true;
    if (!feasible(i)) return false;
    // Shorter paths first: iterative deepening on the edge count.
    for (std::size_t len = 1; len < g_.num_vertices(); ++len) {
      Path path{pairs_[i].a};
      on_path_[i][pairs_[i].a] = 1;
      const bool ok = extend(i, path, len);
      on_path_[i][pairs_[i].a] = 0;
      if (ok) return true;
    }
    return false;
  }

  bool extend(std::size_t i, Path& path, std::size_t remaining) {
    const Vertex v = path.back();
    if (remaining == 0) {
      if (v != pairs_[i].b) return false;
      paths_[i] = path;
      return route(i + 1);
    }
    if (v == pairs_[i].b) return false;
    for (auto [w, e] : g_.neighbors(v)) {
      if (capacity_[e] == 0 || on_path_[i][w]) continue;
      --capacity_[e];
      on_path_[i][w] = 1;
      path.push_back(w);
      const bool ok = extend(i, path, remaining - 1);
      path.pop_back();
      on_path_[i][w] = 0;
      ++capacity_[e];
      if (ok) return true;
    }
    return false;
  }

  const GraphNetwork& g_;
  const PairList& pairs_;
  std::vector<std::size_t> capacity_;
  std::vector<Path> paths_;
  std::vector<std::vector<char>> on_path_;  // per pair, vertices on its partial path
};

}  // namespace

std::optional<RoutePlan> find_paths(const GraphNetwork& g, const PairList& pairs, std::size_t p) {
  validate_pairs(pairs, g.num_vertices());
  if (p == 0) throw std::invalid_argument("find_paths: congestion budget must be at least 1");
  PathSearch search(g, pairs, p);
  if (!search.run()) return std::nullopt;
  RoutePlan plan;
  plan.paths = search.paths();
  std::vector<std::size_t> use(g.edges().size(), 0);
  for (const auto& path : plan.paths) {
    for (std::size_t j = 1; j < path.size(); ++j) ++use[*g.edge_index(path[j - 1], path[j])];
  }
  plan.congestion = use.empty() ? 0 : *std::max_element(use.begin(), use.end());
  return plan;
}

// ---------------------------------------------------------------------------

NetworkRun pair_over_network(const GraphNetwork& g, const PairList& pairs, OutcomeSource& source) {
  auto plan = find_paths(g, pairs, g.multiplicity());
  if (!plan) {
    throw RoutingInfeasible("no routing with congestion <= " + std::to_string(g.multiplicity()) + " for " +
                            std::to_string(pairs.size()) + " pairs");
  }
  NetworkRun run;
  run.plan = std::move(*plan);
  run.copies_used.assign(g.edges().size(), 0);
  auto state = network_state(g);
  std::vector<QubitPair> ends;
  for (const auto& path : run.plan.paths) {
    std::vector<QubitPair> links;
    for (std::size_t j = 1; j < path.size(); ++j) {
      const auto e = *g.edge_index(path[j - 1], path[j]);
      const auto copy = run.copies_used[e]++;
      if (copy >= g.multiplicity()) throw std::logic_error("pair_over_network: edge copies exhausted");
      links.push_back({g.qubit(copy, e, path[j - 1]), g.qubit(copy, e, path[j])});
    }
    swap_chain(state, links, source, &run.transcript);
    ends.push_back({links.front().a, links.back().b});
  }
  for (const auto& e : ends) {
    run.transcript.verdict.push_back(stabsim::is_exact_epr_pair(state, e.a, e.b) && stabsim::is_epr_pair(state, e.a, e.b));
  }
  run.transcript.random_outcomes = source.draws();
  return run;
}

NetworkRun pair_over_network(const GraphNetwork& g, const PairList& pairs, std::uint64_t seed) {
  auto source = OutcomeSource::seeded(seed);
  auto run = pair_over_network(g, pairs, source);
  run.transcript.seed = seed;
  return run;
}

// ---------------------------------------------------------------------------

bool is_path_pairable(const GraphNetwork& g) {
  const std::size_t n = g.num_vertices();
  if (n % 2 != 0) throw std::invalid_argument("is_path_pairable: vertex count must be even");
  if (n > 12) throw std::length_error("is_path_pairable: n=" + std::to_string(n) + " exceeds the enumeration budget of 12");
  std::vector<char> used(n, 0);
  PairList pairs;
  std::function<bool()> all = [&]() -> bool {
    Vertex first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) return find_paths(g, pairs, 1).has_value();
    used[first] = 1;
    for (Vertex other = first + 1; other < n; ++other) {
      if (used[other]) continue;
      used[other] = 1;
      pairs.push_back({first, other});
      const bool ok = all();
      pairs.pop_back();
      used[other] = 0;
      if (!ok) {
        used[first] = 0;
        return false;
      }
    }
    used[first] = 0;
    return true;
  };
  return all();
}

}  // namespace kpair::netroute
