#include "kpair/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace kpair::f2 {

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string contains '" + std::string(1, bits[i]) +
                                  "'; expected only '0' and '1'");
    }
  }
  return v;
}

BitVec BitVec::unit(std::size_t len, std::size_t index) {
  if (index >= len) throw std::out_of_range("unit vector index out of range");
  BitVec v(len);
  v.set(index);
  return v;
}

BitVec BitVec::ones(std::size_t len) {
  BitVec v(len);
  for (auto& w : v.words_) w = ~Word{0};
  if (len % kWordBits != 0) v.words_.back() &= (Word{1} << (len % kWordBits)) - 1;
  return v;
}

std::size_t BitVec::weight() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVec::any() const {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

bool BitVec::dot(const BitVec& other) const {
  check_same_size(other);
  Word acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

std::optional<std::size_t> BitVec::find_next(std::size_t from) const {
  if (from >= len_) return std::nullopt;
  std::size_t wi = from / kWordBits;
  Word w = words_[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == words_.size()) return std::nullopt;
    w = words_[wi];
  }
}

BitVec& BitVec::operator^=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

bool operator<(const BitVec& a, const BitVec& b) {
  if (a.len_ != b.len_) return a.len_ < b.len_;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if (a.words_[i] == b.words_[i]) continue;
    // The lowest differing bit decides, matching string order from index 0:
    // a "0" there sorts before a "1".
    const Word diff = a.words_[i] ^ b.words_[i];
    const Word low = diff & (~diff + 1);
    return (b.words_[i] & low) != 0;
  }
  return false;
}

std::string BitVec::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

void BitVec::check_same_size(const BitVec& other) const {
  if (len_ != other.len_) {
    throw std::invalid_argument("BitVec length mismatch: " + std::to_string(len_) + " vs " +
                                std::to_string(other.len_));
  }
}

// ---------------------------------------------------------------------------

BitMatrix::BitMatrix(std::size_t nrows, std::size_t ncols)
    : rows_(nrows, BitVec(ncols)), ncols_(ncols) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVec> rows, std::size_t ncols) {
  BitMatrix m;
  m.ncols_ = rows.empty() ? ncols : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != m.ncols_) throw std::invalid_argument("BitMatrix rows have unequal lengths");
  }
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<BitVec> v;
  v.reserve(rows.size());
  for (auto r : rows) v.push_back(BitVec::from_string(r));
  return from_rows(std::move(v));
}

BitMatrix BitMatrix::parse(std::string_view text, std::size_t expected_cols) {
  std::vector<BitVec> rows;
  std::size_t line_no = 0;
  std::size_t width = expected_cols;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    BitVec row;
    try {
      row = BitVec::from_string(line);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("matrix line " + std::to_string(line_no) + ": " + e.what());
    }
    if (width == 0) width = row.size();
    if (row.size() != width) {
      throw std::invalid_argument("matrix line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(width) + " columns, got " +
                                  std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  return from_rows(std::move(rows), width);
}

std::string BitMatrix::to_string() const {
  std::string out;
  out.reserve(rows_.size() * (ncols_ + 1));
  for (const auto& r : rows_) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

void BitMatrix::append_row(BitVec row) {
  if (rows_.empty() && ncols_ == 0) ncols_ = row.size();
  if (row.size() != ncols_) throw std::invalid_argument("appended row has wrong length");
  rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(ncols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (auto c = rows_[r].find_next(0); c; c = rows_[r].find_next(*c + 1)) t.set(*c, r);
  }
  return t;
}

BitVec BitMatrix::multiply(const BitVec& x) const {
  if (x.size() != ncols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  BitVec y(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].dot(x)) y.set(r);
  }
  return y;
}

BitVec BitMatrix::combine_rows(const BitVec& y) const {
  if (y.size() != rows_.size()) throw std::invalid_argument("row-combination dimension mismatch");
  BitVec out(ncols_);
  for (auto r = y.find_next(0); r; r = y.find_next(*r + 1)) out ^= rows_[*r];
  return out;
}

BitMatrix BitMatrix::multiply(const BitMatrix& other) const {
  if (ncols_ != other.nrows()) throw std::invalid_argument("matrix-matrix dimension mismatch");
  BitMatrix out(rows_.size(), other.ncols());
  for (std::size_t r = 0; r < rows_.size(); ++r) out.rows_[r] = other.combine_rows(rows_[r]);
  return out;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> cols) const {
  BitMatrix out(rows_.size(), cols.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows_[r].get(cols[j])) out.set(r, j);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

RowEchelon row_reduce(const BitMatrix& m) {
  std::vector<BitVec> rows = m.rows();
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.ncols() && next < rows.size(); ++col) {
    std::size_t sel = next;
    while (sel < rows.size() && !rows[sel].get(col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  return {BitMatrix::from_rows(std::move(rows), m.ncols()), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) {
  // Forward elimination only; cheaper than the full reduced form.
  std::vector<BitVec> rows = m.rows();
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.ncols() && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && !rows[sel].get(col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i].get(col)) rows[i] ^= rows[r];
    }
    ++r;
  }
  return r;
}

std::optional<BitVec> solve(const BitMatrix& a, const BitVec& b) {
  if (b.size() != a.nrows()) {
    throw std::invalid_argument("solve: rhs length " + std::to_string(b.size()) +
                                " does not match row count " + std::to_string(a.nrows()));
  }
  const std::size_t n = a.ncols();
  std::vector<BitVec> aug;
  aug.reserve(a.nrows());
  for (std::size_t r = 0; r < a.nrows(); ++r) {
    BitVec row(n + 1);
    const auto src = a.row(r).words();
    auto dst = row.words();
    std::copy(src.begin(), src.end(), dst.begin());
    if (b.get(r)) row.set(n);
    aug.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < n && next < aug.size(); ++col) {
    std::size_t sel = next;
    while (sel < aug.size() && !aug[sel].get(col)) ++sel;
    if (sel == aug.size()) continue;
    std::swap(aug[sel], aug[next]);
    for (std::size_t r = 0; r < aug.size(); ++r) {
      if (r != next && aug[r].get(col)) aug[r] ^= aug[next];
    }
    pivots.push_back(col);
    ++next;
  }
  for (std::size_t r = next; r < aug.size(); ++r) {
    if (aug[r].get(n)) return std::nullopt;
  }
  BitVec x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (aug[i].get(n)) x.set(pivots[i]);
  }
  return x;
}

BitMatrix nullspace(const BitMatrix& a) {
  const auto ech = row_reduce(a);
  const std::size_t n = a.ncols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  BitMatrix basis(0, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    BitVec v(n);
    v.set(j);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      if (ech.reduced.get(i, j)) v.set(ech.pivots[i]);
    }
    basis.append_row(std::move(v));
  }
  return basis;
}

bool in_span(const BitMatrix& rows, const BitVec& v) {
  if (v.size() != rows.ncols()) throw std::invalid_argument("in_span: length mismatch");
  if (v.none()) return true;
  BitMatrix stacked = rows;
  stacked.append_row(v);
  return rank(stacked) == rank(rows);
}

std::optional<BitMatrix> inverse(const BitMatrix& m) {
  const std::size_t n = m.nrows();
  if (m.ncols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  std::vector<BitVec> left = m.rows();
  std::vector<BitVec> right = BitMatrix::identity(n).rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && !left[sel].get(col)) ++sel;
    if (sel == n) return std::nullopt;
    std::swap(left[sel], left[col]);
    std::swap(right[sel], right[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && left[r].get(col)) {
        left[r] ^= left[col];
        right[r] ^= right[col];
      }
    }
  }
  return BitMatrix::from_rows(std::move(right), n);
}

}  // namespace kpair::f2
