// Dense linear algebra over F2 with 64-bit word packing.
//
// Bit i of a BitVec lives in word i / 64 at position i % 64. Bits beyond
// size() in the last word are always zero, so word-level comparisons and
// popcounts need no masking.
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kpair::f2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t len) : words_(words_for(len), 0), len_(len) {}

  /// Parses a string of '0'/'1' characters; character i becomes bit i.
  static BitVec from_string(std::string_view bits);
  static BitVec unit(std::size_t len, std::size_t index);
  static BitVec ones(std::size_t len);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i, bool value = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::size_t weight() const;
  bool any() const;
  bool none() const { return !any(); }

  /// Parity of the bitwise AND, i.e. the F2 dot product.
  bool dot(const BitVec& other) const;

  /// Index of the lowest set bit at or after `from`, if any.
  std::optional<std::size_t> find_next(std::size_t from = 0) const;

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  BitVec& operator|=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  /// Orders by length, then by the bit string read from index 0.
  friend bool operator<(const BitVec& a, const BitVec& b);

  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  std::string to_string() const;

 private:
  void check_same_size(const BitVec& other) const;

  std::vector<Word> words_;
  std::size_t len_ = 0;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t nrows, std::size_t ncols);

  static BitMatrix identity(std::size_t n);
  /// All rows must share one length; an empty list yields a 0 x ncols matrix.
  static BitMatrix from_rows(std::vector<BitVec> rows, std::size_t ncols = 0);
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

  /// Reads the text format: one row per line of '0'/'1' characters. Blank
  /// lines and lines starting with '#' are skipped. `expected_cols` of 0 means
  /// "take the width of the first row".
  static BitMatrix parse(std::string_view text, std::size_t expected_cols = 0);
  std::string to_string() const;

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }

  const BitVec& row(std::size_t i) const { return rows_[i]; }
  BitVec& row(std::size_t i) { return rows_[i]; }
  const std::vector<BitVec>& rows() const { return rows_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

  void append_row(BitVec row);

  BitMatrix transpose() const;
  /// Returns a * x for a column vector x of length ncols.
  BitVec multiply(const BitVec& x) const;
  /// Returns the sum of rows selected by y (length nrows), i.e. y^T * a.
  BitVec combine_rows(const BitVec& y) const;
  BitMatrix multiply(const BitMatrix& other) const;
  BitMatrix select_columns(std::span<const std::size_t> cols) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::vector<BitVec> rows_;
  std::size_t ncols_ = 0;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
  BitMatrix reduced;                 // only the nonzero rows
  std::vector<std::size_t> pivots;   // pivots[i] is the pivot column of row i
};

RowEchelon row_reduce(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

/// Solves a * x = b. Free variables are set to 0, so the result is the one
/// produced by back-substitution on the reduced echelon form.
/// Throws std::invalid_argument if b.size() != a.nrows().
std::optional<BitVec> solve(const BitMatrix& a, const BitVec& b);

/// Basis of {x : a * x = 0}, one vector per free column in ascending order.
BitMatrix nullspace(const BitMatrix& a);

bool in_span(const BitMatrix& rows, const BitVec& v);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<BitMatrix> inverse(const BitMatrix& m);

}  // namespace kpair::f2
