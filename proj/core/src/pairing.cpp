#include <cmath>
#include <stdexcept>

#include "kpair/stabsim.hpp"

namespace kpair::stabsim {

DyadicRational DyadicRational::make(std::int64_t numerator, unsigned log2_denominator) {
  while (log2_denominator > 0 && numerator % 2 == 0) {
    numerator /= 2;
    --log2_denominator;
  }
  if (numerator == 0) log2_denominator = 0;
  return {numerator, log2_denominator};
}

double DyadicRational::to_double() const { return std::ldexp(static_cast<double>(numerator), -static_cast<int>(log2_denominator)); }

std::string DyadicRational::to_string() const {
  if (log2_denominator == 0) return std::to_string(numerator);
  return std::to_string(numerator) + "/" + std::to_string(std::uint64_t{1} << log2_denominator);
}

std::size_t count_cycles(const Pairing& p, const Pairing& q, std::size_t n) {
  validate_pairs(p.pairs, n);
  validate_pairs(q.pairs, n);
  constexpr Qubit kNone = ~Qubit{0};
  std::vector<Qubit> mate_p(n, kNone);
  std::vector<Qubit> mate_q(n, kNone);
  for (const auto& e : p.pairs) {
    mate_p[e.a] = e.b;
    mate_p[e.b] = e.a;
  }
  for (const auto& e : q.pairs) {
    mate_q[e.a] = e.b;
    mate_q[e.b] = e.a;
  }
  // Components of the union are alternating paths or cycles; a component is
  // a cycle iff every vertex on it has degree two.
  std::vector<bool> seen(n, false);
  std::size_t cycles = 0;
  for (Qubit start = 0; start < n; ++start) {
    if (seen[start] || mate_p[start] == kNone || mate_q[start] == kNone) continue;
    Qubit v = start;
    bool use_p = true;
    bool closed = false;
    while (true) {
      seen[v] = true;
      const Qubit next = use_p ? mate_p[v] : mate_q[v];
      if (next == kNone) break;
      use_p = !use_p;
      if (next == start) {
        closed = true;
        break;
      }
      v = next;
    }
    if (closed) {
      ++cycles;
    } else {
      // Open path: mark the rest of it from the other direction.
      v = start;
      use_p = false;
      while (true) {
        seen[v] = true;
        const Qubit next = use_p ? mate_p[v] : mate_q[v];
        if (next == kNone || seen[next]) break;
        use_p = !use_p;
        v = next;
      }
    }
  }
  return cycles;
}

DyadicRational pairing_overlap(const Pairing& p, const Pairing& q, std::size_t n) {
  if (p.pairs.size() != q.pairs.size()) {
    throw std::invalid_argument("pairing_overlap: pairings have " + std::to_string(p.pairs.size()) + " and " +
                                std::to_string(q.pairs.size()) + " pairs");
  }
  if (p.pairs.empty()) throw std::invalid_argument("pairing_overlap: empty pairing");
  const std::size_t k = p.pairs.size();
  const std::size_t mu = count_cycles(p, q, n);
  return DyadicRational::make(1, static_cast<unsigned>(k - mu));
}

}  // namespace kpair::stabsim
