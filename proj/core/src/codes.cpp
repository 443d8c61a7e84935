#include "kpair/codes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace kpair {

void validate_pairs(const PairList& pairs, std::size_t n) {
  if (pairs.empty()) throw std::invalid_argument("pair list is empty");
  std::vector<Qubit> seen;
  seen.reserve(2 * pairs.size());
  for (const auto& p : pairs) {
    for (Qubit q : {p.a, p.b}) {
      if (n != 0 && q >= n) {
        throw std::invalid_argument("qubit " + std::to_string(q) + " out of range for n=" +
                                    std::to_string(n));
      }
      if (std::find(seen.begin(), seen.end(), q) != seen.end()) {
        throw std::invalid_argument("qubit " + std::to_string(q) + " appears in more than one pair slot");
      }
      seen.push_back(q);
    }
  }
}

}  // namespace kpair

namespace kpair::codes {

Label label_from_string(std::string_view bits) {
  if (bits.empty() || bits.size() > 31) throw std::invalid_argument("label must have 1..31 bits");
  Label x = 0;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j] == '1') {
      x |= Label{1} << j;
    } else if (bits[j] != '0') {
      throw std::invalid_argument("label '" + std::string(bits) + "' is not a 0/1 string");
    }
  }
  return x;
}

std::string label_to_string(Label x, int m) {
  std::string s(static_cast<std::size_t>(m), '0');
  for (int j = 0; j < m; ++j) {
    if ((x >> j) & 1U) s[static_cast<std::size_t>(j)] = '1';
  }
  return s;
}

LinearCode::LinearCode(BitMatrix generators) : gen_(std::move(generators)), dim_(f2::rank(gen_)) {}

BitMatrix LinearCode::basis() const { return f2::row_reduce(gen_).reduced; }

bool LinearCode::contains(const BitVec& word) const { return f2::in_span(gen_, word); }

bool LinearCode::dual_contains(const BitVec& word) const {
  for (const auto& g : gen_.rows()) {
    if (g.dot(word)) return false;
  }
  return true;
}

namespace {

void for_each_subset_of_size(int m, int size, std::vector<int>& current, int start,
                             std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == size) {
    out.push_back(current);
    return;
  }
  for (int j = start; j < m; ++j) {
    current.push_back(j);
    for_each_subset_of_size(m, size, current, j + 1, out);
    current.pop_back();
  }
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

std::size_t rm_dimension(int r, int m) {
  std::size_t d = 0;
  for (int p = 0; p <= r; ++p) d += binomial(m, p);
  return d;
}

LinearCode rm_code(int r, int m) {
  if (m < 1 || m > 20) throw std::invalid_argument("rm_code: m must be in [1, 20]");
  if (r < 0 || r > m) throw std::invalid_argument("rm_code: r must satisfy 0 <= r <= m");
  const std::size_t n = std::size_t{1} << m;
  BitMatrix gen(0, n);
  for (int deg = 0; deg <= r; ++deg) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    for_each_subset_of_size(m, deg, cur, 0, subsets);
    for (const auto& s : subsets) {
      Label mask = 0;
      for (int j : s) mask |= Label{1} << j;
      BitVec row(n);
      for (std::size_t x = 0; x < n; ++x) {
        if ((static_cast<Label>(x) & mask) == mask) row.set(x);
      }
      gen.append_row(std::move(row));
    }
  }
  return LinearCode(std::move(gen));
}

LinearCode dual(const LinearCode& c) { return LinearCode(f2::nullspace(c.generators())); }

bool same_codewords(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length() || a.dimension() != b.dimension()) return false;
  // Equal dimensions, so one inclusion suffices.
  for (const auto& row : a.generators().rows()) {
    if (!b.contains(row)) return false;
  }
  return true;
}

namespace {

std::size_t distance_by_codewords(const BitMatrix& basis) {
  // Gray-code walk visits every nonzero combination once.
  const std::size_t d = basis.nrows();
  BitVec word(basis.ncols());
  std::size_t best = basis.ncols() + 1;
  const std::uint64_t total = std::uint64_t{1} << d;
  for (std::uint64_t i = 1; i < total; ++i) {
    word ^= basis.row(static_cast<std::size_t>(std::countr_zero(i)));
    best = std::min(best, word.weight());
  }
  return best;
}

// Syndromes of weight-<=t error patterns; two patterns with equal syndrome
// differ by a codeword. Every codeword of weight <= 2t splits into two such
// patterns, so once the best collision has weight <= 2t it is the distance.
std::optional<std::size_t> distance_by_syndromes(const BitMatrix& parity, std::size_t budget) {
  const std::size_t n = parity.ncols();
  const std::size_t r = parity.nrows();
  if (r > 64) return std::nullopt;
  std::vector<std::uint64_t> column(n, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (parity.get(i, j)) column[j] |= std::uint64_t{1} << i;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (column[j] == 0) return 1;  // a unit vector is a codeword
  }
  std::unordered_map<std::uint64_t, std::vector<BitVec>> groups;
  groups[0].push_back(BitVec(n));
  std::size_t generated = 1;
  std::size_t best = n + 1;
  // patterns of exactly weight t, extended one weight at a time
  std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> frontier{{{}, 0}};
  for (std::size_t t = 1; t <= n; ++t) {
    std::vector<std::pair<std::vector<std::uint32_t>, std::uint64_t>> next;
    for (const auto& [support, syn] : frontier) {
      const std::uint32_t start = support.empty() ? 0 : support.back() + 1;
      for (std::uint32_t j = start; j < n; ++j) {
        auto s = support;
        s.push_back(j);
        next.emplace_back(std::move(s), syn ^ column[j]);
      }
    }
    generated += next.size();
    if (generated > budget) return std::nullopt;
    for (const auto& [support, syn] : next) {
      BitVec v(n);
      for (auto j : support) v.set(j);
      auto& bucket = groups[syn];
      for (const auto& other : bucket) best = std::min(best, (v ^ other).weight());
      bucket.push_back(std::move(v));
    }
    if (best <= 2 * t) return best;
    frontier = std::move(next);
  }
  return best;
}

}  // namespace

std::size_t min_distance(const LinearCode& c, std::size_t budget) {
  if (c.dimension() == 0) return 0;
  const auto basis = c.basis();
  if (c.dimension() <= 24 && (std::size_t{1} << c.dimension()) <= budget) {
    return distance_by_codewords(basis);
  }
  const auto parity = f2::nullspace(c.generators());
  if (auto d = distance_by_syndromes(parity, budget)) return *d;
  throw std::length_error("min_distance: code of dimension " + std::to_string(c.dimension()) +
                          " and length " + std::to_string(c.length()) +
                          " exceeds the enumeration budget of " + std::to_string(budget) +
                          " candidate vectors");
}

std::optional<BitVec> affine_indicator(std::span<const Label> points, int m) {
  if (points.empty()) throw std::invalid_argument("affine_indicator: empty point set");
  if (m < 1 || m > 24) throw std::invalid_argument("affine_indicator: m out of range");
  const std::size_t n = std::size_t{1} << m;
  std::vector<Label> unique(points.begin(), points.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  for (Label p : unique) {
    if (p >= n) throw std::invalid_argument("affine_indicator: point outside F2^m");
  }
  // Span of differences from the first point, kept in echelon form by
  // leading bit.
  const Label origin = unique.front();
  std::vector<Label> basis;
  for (Label p : unique) {
    Label v = p ^ origin;
    for (Label b : basis) v = std::min(v, v ^ b);
    if (v != 0) {
      basis.push_back(v);
      std::sort(basis.begin(), basis.end(), std::greater<>());
    }
  }
  if ((std::size_t{1} << basis.size()) != unique.size()) return std::nullopt;
  BitVec indicator(n);
  for (Label p : unique) indicator.set(p);
  return indicator;
}

// ---------------------------------------------------------------------------

AffineMap::AffineMap(BitMatrix a, BitVec b) : a_(std::move(a)), b_(std::move(b)) {
  m_ = static_cast<int>(a_.nrows());
  if (a_.ncols() != a_.nrows()) throw std::invalid_argument("AffineMap: A must be square");
  if (b_.size() != a_.nrows()) throw std::invalid_argument("AffineMap: b has wrong length");
  if (m_ > 31) throw std::invalid_argument("AffineMap: dimension above 31 unsupported");
  if (f2::rank(a_) != a_.nrows()) throw std::invalid_argument("AffineMap: A is not invertible over F2");
  columns_.assign(static_cast<std::size_t>(m_), 0);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) {
      if (a_.get(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) {
        columns_[static_cast<std::size_t>(j)] |= Label{1} << i;
      }
    }
    if (b_.get(static_cast<std::size_t>(i))) shift_label_ |= Label{1} << i;
  }
}

AffineMap AffineMap::identity(int m) {
  return AffineMap(BitMatrix::identity(static_cast<std::size_t>(m)), BitVec(static_cast<std::size_t>(m)));
}

AffineMap AffineMap::translation(int m, Label shift) {
  BitVec b(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if ((shift >> i) & 1U) b.set(static_cast<std::size_t>(i));
  }
  return AffineMap(BitMatrix::identity(static_cast<std::size_t>(m)), std::move(b));
}

namespace {

// Extends independent vectors to a basis of F2^m with unit vectors; returns
// the basis as matrix columns.
BitMatrix complete_basis(std::span<const Label> vectors, int m) {
  std::vector<Label> basis(vectors.begin(), vectors.end());
  std::vector<Label> echelon;
  auto reduce = [&](Label v) {
    for (Label e : echelon) v = std::min(v, v ^ e);
    return v;
  };
  auto insert = [&](Label v) {
    echelon.push_back(v);
    std::sort(echelon.begin(), echelon.end(), std::greater<>());
  };
  for (Label v : basis) {
    const Label r = reduce(v);
    if (r == 0) throw std::invalid_argument("AffineMap::linear_sending: vectors are dependent");
    insert(r);
  }
  for (int j = 0; j < m && static_cast<int>(basis.size()) < m; ++j) {
    const Label r = reduce(Label{1} << j);
    if (r != 0) {
      insert(r);
      basis.push_back(Label{1} << j);
    }
  }
  BitMatrix cols(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      if ((basis[static_cast<std::size_t>(j)] >> i) & 1U) cols.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  return cols;
}

}  // namespace

AffineMap AffineMap::linear_sending(std::span<const Label> from, std::span<const Label> to, int m) {
  if (from.size() != to.size()) throw std::invalid_argument("AffineMap::linear_sending: size mismatch");
  const BitMatrix source = complete_basis(from, m);
  const BitMatrix target = complete_basis(to, m);
  const auto source_inv = f2::inverse(source);
  return AffineMap(target.multiply(*source_inv), BitVec(static_cast<std::size_t>(m)));
}

Label AffineMap::operator()(Label x) const {
  Label y = shift_label_;
  while (x != 0) {
    y ^= columns_[static_cast<std::size_t>(std::countr_zero(x))];
    x &= x - 1;
  }
  return y;
}

AffineMap AffineMap::inverse() const {
  // x = A^{-1} (y + b) = A^{-1} y + A^{-1} b
  BitMatrix inv = *f2::inverse(a_);
  BitVec shift = inv.multiply(b_);
  return AffineMap(std::move(inv), std::move(shift));
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  if (inner.m_ != m_) throw std::invalid_argument("AffineMap::compose: dimension mismatch");
  // A (A' x + b') + b
  BitVec shift = a_.multiply(inner.b_) ^ b_;
  return AffineMap(a_.multiply(inner.a_), std::move(shift));
}

BitVec apply_affine_permutation(const AffineMap& map, const BitVec& v) {
  const std::size_t n = std::size_t{1} << map.dimension();
  if (v.size() != n) throw std::invalid_argument("apply_affine_permutation: vector length is not 2^m");
  BitVec out(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (v.get(map(static_cast<Label>(x)))) out.set(x);
  }
  return out;
}

}  // namespace kpair::codes
