// Linear codes, Reed-Muller codes and affine relabelings of F2^m.
//
// A length-2^m vector is read as a Boolean function on F2^m: entry x is the
// value at the point whose binary expansion is x, with coordinate x_1 in the
// least significant bit. For m = 2 the order is f(00), f(10), f(01), f(11).
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kpair/f2.hpp"
#include "kpair/types.hpp"

namespace kpair::codes {

using f2::BitMatrix;
using f2::BitVec;

/// A point of F2^m stored as an integer label; bit j-1 holds coordinate x_j.
using Label = Qubit;

/// Parses "x_1 x_2 ... x_m" written as a '0'/'1' string (e.g. "10" is label 1).
Label label_from_string(std::string_view bits);
std::string label_to_string(Label x, int m);

class LinearCode {
 public:
  LinearCode() = default;
  /// Rows may be dependent; dimension() is their rank.
  explicit LinearCode(BitMatrix generators);

  const BitMatrix& generators() const { return gen_; }
  std::size_t length() const { return gen_.ncols(); }
  std::size_t dimension() const { return dim_; }

  /// Independent rows spanning the code (reduced echelon form).
  BitMatrix basis() const;
  bool contains(const BitVec& word) const;
  /// True iff `word` is orthogonal to every generator.
  bool dual_contains(const BitVec& word) const;

 private:
  BitMatrix gen_;
  std::size_t dim_ = 0;
};

/// RM(r, m): evaluation vectors of the monomials prod_{j in S} x_j over all
/// S with |S| <= r, listed by degree and then lexicographically by S.
/// Throws std::invalid_argument unless 0 <= r <= m and 1 <= m <= 20.
LinearCode rm_code(int r, int m);

/// sum_{p <= r} C(m, p)
std::size_t rm_dimension(int r, int m);

LinearCode dual(const LinearCode& c);

bool same_codewords(const LinearCode& a, const LinearCode& b);

/// Minimum weight over nonzero codewords by exhaustive search. Codes of
/// dimension <= 24 enumerate all codewords; larger codes fall back to
/// enumerating low-weight error patterns and pairing equal syndromes. Throws
/// std::length_error when both searches exceed `budget` candidate vectors.
/// The zero code has no nonzero codeword and reports 0.
std::size_t min_distance(const LinearCode& c, std::size_t budget = std::size_t{1} << 24);

/// Characteristic vector (length 2^m) of the point set when it is an affine
/// subspace of F2^m, otherwise nullopt. Duplicates are ignored.
std::optional<BitVec> affine_indicator(std::span<const Label> points, int m);

/// x -> A x + b on F2^m with A invertible.
class AffineMap {
 public:
  /// Throws std::invalid_argument if A is not m x m invertible or b has the
  /// wrong length.
  AffineMap(BitMatrix a, BitVec b);

  static AffineMap identity(int m);
  static AffineMap translation(int m, Label shift);
  /// Linear map sending from[i] -> to[i]. Both lists must be linearly
  /// independent and of equal size; the remaining basis directions are
  /// completed with unit vectors.
  static AffineMap linear_sending(std::span<const Label> from, std::span<const Label> to, int m);

  int dimension() const { return m_; }
  const BitMatrix& linear() const { return a_; }
  const BitVec& shift() const { return b_; }

  Label operator()(Label x) const;
  AffineMap inverse() const;
  /// (this o inner)(x) = this(inner(x))
  AffineMap compose(const AffineMap& inner) const;

 private:
  BitMatrix a_;
  BitVec b_;
  int m_ = 0;
  std::vector<Label> columns_;
  Label shift_label_ = 0;
};

/// v'(x) = v(A x + b) for every x in F2^m. By affine invariance this maps
/// RM(r, m) onto itself.
BitVec apply_affine_permutation(const AffineMap& map, const BitVec& v);

}  // namespace kpair::codes
