// Vocabulary shared by every module.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kpair {

/// Index of a qubit (or party holding one qubit). For code-based states the
/// index doubles as an m-bit label x in F2^m with x_1 in the lowest bit.
using Qubit = std::uint32_t;

struct QubitPair {
  Qubit a = 0;
  Qubit b = 0;
  friend bool operator==(const QubitPair&, const QubitPair&) = default;
};

/// Ordered list of disjoint pairs {a_i, b_i}: the target of every protocol.
using PairList = std::vector<QubitPair>;

/// Single-qubit Pauli measurement basis.
enum class Basis : char { X = 'X', Y = 'Y', Z = 'Z' };

inline char to_char(Basis b) { return static_cast<char>(b); }

inline std::optional<Basis> basis_from_char(char c) {
  switch (c) {
    case 'X': case 'x': return Basis::X;
    case 'Y': case 'y': return Basis::Y;
    case 'Z': case 'z': return Basis::Z;
    default: return std::nullopt;
  }
}

/// Throws std::invalid_argument unless all 2k indices are distinct and < n
/// (pass n = 0 to skip the range check).
void validate_pairs(const PairList& pairs, std::size_t n = 0);

}  // namespace kpair
