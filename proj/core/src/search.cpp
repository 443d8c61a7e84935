#include "kpair/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "kpair/locc.hpp"

namespace kpair::search {

using stabsim::PauliString;

GraphNetwork wheel_graph() {
  std::vector<netroute::Edge> edges;
  for (netroute::Vertex j = 0; j < 10; ++j) edges.emplace_back(j, (j + 1) % 10);
  for (netroute::Vertex j = 0; j < 5; ++j) edges.emplace_back(j, j + 5);
  return {10, std::move(edges), 1};
}

GraphNetwork cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  std::vector<netroute::Edge> edges;
  for (netroute::Vertex j = 0; j < n; ++j) edges.emplace_back(j, static_cast<netroute::Vertex>((j + 1) % n));
  return {n, std::move(edges), 1};
}

StabilizerTableau graph_state_of(const GraphNetwork& g) {
  std::vector<std::pair<Qubit, Qubit>> edges(g.edges().begin(), g.edges().end());
  return stabsim::graph_state(edges, g.num_vertices());
}

bool verify_symmetry(const StabilizerTableau& t, const std::vector<Qubit>& perm, bool hadamard) {
  auto moved = t;
  moved.permute(perm);
  auto target = t;
  if (hadamard) {
    for (Qubit q = 0; q < t.num_qubits(); ++q) target.h(q);
  }
  return stabsim::stabilizer_equal(moved, target);
}

namespace {

std::vector<Qubit> affine_perm(std::size_t n, std::size_t scale, std::size_t shift) {
  std::vector<Qubit> perm(n);
  for (std::size_t j = 0; j < n; ++j) perm[j] = static_cast<Qubit>((scale * j + shift) % n);
  return perm;
}

}  // namespace

bool verify_wheel_symmetry() {
  const auto t = graph_state_of(wheel_graph());
  if (!verify_symmetry(t, affine_perm(10, 3, 0), true)) return false;
  for (std::size_t j = 0; j < 10; ++j) {
    PauliString s(10);
    s.z.set(j);
    s.x.set((j + 7) % 10);
    s.x.set((j + 3) % 10);
    s.x.set((j + 5) % 10);
    if (!t.contains(s)) return false;
  }
  return true;
}

std::vector<Basis> parse_bases(std::string_view text) {
  std::vector<Basis> out;
  for (char c : text) {
    const auto b = basis_from_char(c);
    if (!b) throw std::invalid_argument("bases: unknown letter '" + std::string(1, c) + "'");
    if (std::find(out.begin(), out.end(), *b) == out.end()) out.push_back(*b);
  }
  if (out.empty()) throw std::invalid_argument("bases: empty set");
  std::sort(out.begin(), out.end(), [](Basis a, Basis b) { return to_char(a) < to_char(b); });
  return out;
}

std::optional<MeasurementPattern> search_pauli_pattern(const StabilizerTableau& t, const PairList& pairs,
                                                       const std::vector<Basis>& bases) {
  const std::size_t n = t.num_qubits();
  validate_pairs(pairs, n);
  if (bases.empty()) throw std::invalid_argument("search_pauli_pattern: no bases allowed");
  std::vector<Qubit> e;
  std::vector<char> target(n, 0);
  for (const auto& p : pairs) {
    e.push_back(p.a);
    e.push_back(p.b);
    target[p.a] = target[p.b] = 1;
  }
  std::vector<Qubit> free;
  for (Qubit q = 0; q < n; ++q) {
    if (!target[q]) free.push_back(q);
  }
  std::vector<std::size_t> digit(free.size(), 0);
  while (true) {
    std::vector<std::optional<Basis>> basis(n);
    for (std::size_t j = 0; j < free.size(); ++j) basis[free[j]] = bases[digit[j]];
    auto pattern = MeasurementPattern::with_bases(std::move(basis), e);
    // Entropies do not depend on the outcomes, so one branch screens cheaply.
    auto source = stabsim::OutcomeSource::branch(0);
    if (locc::run_pauli_pattern(t, pattern, pairs, source).success() &&
        locc::pauli_pattern_succeeds_always(t, pattern, pairs)) {
      return pattern;
    }
    std::size_t pos = free.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < bases.size()) break;
      digit[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    if (free.empty()) return std::nullopt;
  }
}

const TupleResult* PairabilityReport::first_failure() const {
  for (const auto& t : tuples) {
    if (!t.pattern) return &t;
  }
  return nullptr;
}

std::vector<PairList> all_pair_tuples(std::size_t n) {
  std::vector<PairList> out;
  for (Qubit a1 = 0; a1 < n; ++a1) {
    for (Qubit b1 = a1 + 1; b1 < n; ++b1) {
      for (Qubit a2 = a1 + 1; a2 < n; ++a2) {
        if (a2 == b1) continue;
        for (Qubit b2 = a2 + 1; b2 < n; ++b2) {
          if (b2 == b1) continue;
          out.push_back({{a1, b1}, {a2, b2}});
        }
      }
    }
  }
  return out;
}

PairabilityReport verify_2_pairable(const StabilizerTableau& t, const std::vector<Basis>& bases, bool use_symmetry,
                                    std::size_t threads) {
  const std::size_t n = t.num_qubits();
  if (n < 4) throw std::invalid_argument("verify_2_pairable: need at least 4 qubits");
  if (n > 12) throw std::length_error("verify_2_pairable: n=" + std::to_string(n) + " exceeds the budget of 12 qubits");
  std::vector<PairList> tuples;
  if (use_symmetry) {
    if (n != 10) throw std::invalid_argument("verify_2_pairable: symmetry reduction needs 10 qubits");
    const bool closed_under_h = std::count(bases.begin(), bases.end(), Basis::X) ==
                                std::count(bases.begin(), bases.end(), Basis::Z);
    if (!closed_under_h) throw std::invalid_argument("verify_2_pairable: basis set is not closed under H");
    if (!verify_symmetry(t, affine_perm(10, 1, 1), false) || !verify_symmetry(t, affine_perm(10, 9, 0), false) ||
        !verify_symmetry(t, affine_perm(10, 3, 0), true)) {
      throw std::invalid_argument("verify_2_pairable: state lacks the wheel symmetries");
    }
    for (Qubit b1 : {1U, 2U, 5U}) {
      for (Qubit a2 = 1; a2 < n; ++a2) {
        for (Qubit b2 = a2 + 1; b2 < n; ++b2) {
          if (a2 != b1 && b2 != b1) tuples.push_back({{0, b1}, {a2, b2}});
        }
      }
    }
  } else {
    tuples = all_pair_tuples(n);
  }
  PairabilityReport report;
  report.tuples.resize(tuples.size());
  parallel_for(tuples.size(), threads, [&](std::size_t i) {
    report.tuples[i] = {tuples[i], search_pauli_pattern(t, tuples[i], bases)};
  });
  for (const auto& r : report.tuples) report.successes += r.pattern ? 1 : 0;
  return report;
}

namespace {

std::optional<std::size_t> parse_count(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

std::vector<GraphNetwork> parse_graph_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::vector<GraphNetwork> out;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string tok;
    if (!(fields >> tok)) continue;
    auto fail = [&](const std::string& what) {
      throw std::invalid_argument("graph list line " + std::to_string(lineno) + ": " + what);
    };
    const auto n = parse_count(tok);
    if (!n) fail("bad vertex count '" + tok + "'");
    std::vector<netroute::Edge> edges;
    while (fields >> tok) {
      const auto dash = tok.find('-');
      const auto u = dash == std::string::npos ? std::nullopt : parse_count(std::string_view(tok).substr(0, dash));
      const auto v = dash == std::string::npos ? std::nullopt : parse_count(std::string_view(tok).substr(dash + 1));
      if (!u || !v) fail("edge '" + tok + "' is not of the form i-j");
      edges.emplace_back(static_cast<netroute::Vertex>(*u), static_cast<netroute::Vertex>(*v));
    }
    try {
      out.emplace_back(*n, std::move(edges), 1);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  return out;
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace kpair::search
