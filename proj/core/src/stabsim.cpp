#include "kpair/stabsim.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace kpair::stabsim {

namespace {

using Word = std::uint64_t;

// In-place lhs *= rhs on packed Pauli rows. Returns log_i of the scalar
// picked up from the single-qubit products (signs excluded): each
// anticommuting position contributes +i (cnt2 = 0) or -i (cnt2 = 1).
std::uint8_t multiply_paulis(Word* x1, Word* z1, const Word* x2, const Word* z2, std::size_t words) {
  unsigned low = 0;
  unsigned high = 0;
  for (std::size_t w = 0; w < words; ++w) {
    const Word old_x1 = x1[w];
    const Word old_z1 = z1[w];
    x1[w] ^= x2[w];
    z1[w] ^= z2[w];
    const Word x1z2 = old_x1 & z2[w];
    const Word anti = (x2[w] & old_z1) ^ x1z2;
    const Word cnt1 = anti;
    const Word cnt2 = (x1[w] ^ z1[w] ^ x1z2) & anti;
    low += static_cast<unsigned>(std::popcount(cnt1));
    high += static_cast<unsigned>(std::popcount(cnt2));
  }
  return static_cast<std::uint8_t>((low + 2 * high) & 3U);
}

}  // namespace

// ---------------------------------------------------------------------------

PauliString PauliString::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  PauliString p(text.size());
  p.negative = negative;
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I': case '_': break;
      case 'X': p.x.set(q); break;
      case 'Z': p.z.set(q); break;
      case 'Y': p.x.set(q); p.z.set(q); break;
      default:
        throw std::invalid_argument("Pauli string contains '" + std::string(1, text[q]) + "'");
    }
  }
  return p;
}

PauliString PauliString::single(std::size_t n, Qubit q, Basis b, bool negative) {
  if (q >= n) throw std::out_of_range("PauliString::single: qubit out of range");
  PauliString p(n);
  p.negative = negative;
  if (b != Basis::Z) p.x.set(q);
  if (b != Basis::X) p.z.set(q);
  return p;
}

char PauliString::at(std::size_t q) const {
  const bool xb = x.get(q);
  const bool zb = z.get(q);
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

bool PauliString::commutes_with(const PauliString& other) const {
  return x.dot(other.z) == z.dot(other.x);
}

std::string PauliString::to_string() const {
  std::string s(1, negative ? '-' : '+');
  for (std::size_t q = 0; q < size(); ++q) s += at(q);
  return s;
}

// ---------------------------------------------------------------------------

OutcomeSource OutcomeSource::seeded(std::uint64_t seed) {
  OutcomeSource s;
  s.rng_.seed(seed);
  return s;
}

OutcomeSource OutcomeSource::branch(std::uint64_t mask) {
  OutcomeSource s;
  s.forced_ = true;
  s.mask_ = mask;
  return s;
}

bool OutcomeSource::draw() {
  bool bit;
  if (forced_) {
    if (draws_ >= 64) throw std::length_error("OutcomeSource: branch mask exhausted");
    bit = (mask_ >> draws_) & 1U;
  } else {
    bit = (rng_() >> 63) != 0;
  }
  ++draws_;
  return bit;
}

// ---------------------------------------------------------------------------

StabilizerTableau::StabilizerTableau(std::size_t n)
    : n_(n), words_(f2::words_for(n)), xs_(2 * n * words_, 0), zs_(2 * n * words_, 0), signs_(2 * n, 0) {
  for (std::size_t q = 0; q < n; ++q) {
    xrow(q)[q / 64] |= Word{1} << (q % 64);       // destabilizer X_q
    zrow(n + q)[q / 64] |= Word{1} << (q % 64);   // stabilizer Z_q
  }
}

PauliString StabilizerTableau::row(std::size_t r) const {
  PauliString p(n_);
  std::copy(xrow(r), xrow(r) + words_, p.x.words().begin());
  std::copy(zrow(r), zrow(r) + words_, p.z.words().begin());
  p.negative = signs_[r] != 0;
  return p;
}

void StabilizerTableau::set_row(std::size_t r, const PauliString& p) {
  std::copy(p.x.words().begin(), p.x.words().end(), xrow(r));
  std::copy(p.z.words().begin(), p.z.words().end(), zrow(r));
  signs_[r] = p.negative ? 1 : 0;
}

StabilizerTableau StabilizerTableau::from_generators(const std::vector<PauliString>& generators) {
  const std::size_t n = generators.size();
  for (const auto& g : generators) {
    if (g.size() != n) {
      throw std::invalid_argument("from_generators: need n generators on n qubits, got " +
                                  std::to_string(n) + " generators on " + std::to_string(g.size()));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!generators[i].commutes_with(generators[j])) {
        throw std::invalid_argument("from_generators: generators " + std::to_string(i) + " and " +
                                    std::to_string(j) + " anticommute");
      }
    }
  }
  // Symplectic vectors [x | z]; <u, v> = u_x . v_z + u_z . v_x.
  auto symplectic = [n](const BitVec& xs, const BitVec& zs) {
    BitVec v(2 * n);
    for (auto q = xs.find_next(0); q; q = xs.find_next(*q + 1)) v.set(*q);
    for (auto q = zs.find_next(0); q; q = zs.find_next(*q + 1)) v.set(n + *q);
    return v;
  };
  auto swap_halves = [n](const BitVec& v) {
    BitVec w(2 * n);
    for (auto q = v.find_next(0); q; q = v.find_next(*q + 1)) w.set(*q < n ? *q + n : *q - n);
    return w;
  };
  std::vector<BitVec> stab;
  for (const auto& g : generators) stab.push_back(symplectic(g.x, g.z));

  // Right inverse of the matrix whose rows are the stabilizers with halves
  // swapped: reduce [M' | I] to [R | E]; the destabilizer j has bit p_i equal
  // to E[i][j] at each pivot column p_i.
  std::vector<BitVec> left;
  std::vector<BitVec> track;
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back(swap_halves(stab[i]));
    track.push_back(BitVec::unit(n, i));
  }
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < 2 * n && next < n; ++col) {
    std::size_t sel = next;
    while (sel < n && !left[sel].get(col)) ++sel;
    if (sel == n) continue;
    std::swap(left[sel], left[next]);
    std::swap(track[sel], track[next]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != next && left[r].get(col)) {
        left[r] ^= left[next];
        track[r] ^= track[next];
      }
    }
    pivots.push_back(col);
    ++next;
  }
  if (next != n) throw std::invalid_argument("from_generators: generators are not independent");

  std::vector<BitVec> destab(n, BitVec(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j = track[i].find_next(0); j; j = track[i].find_next(*j + 1)) destab[*j].set(pivots[i]);
  }
  auto product = [&](const BitVec& u, const BitVec& v) { return u.dot(swap_halves(v)); };
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < j; ++l) {
      if (product(destab[j], destab[l])) destab[j] ^= stab[l];
    }
  }

  StabilizerTableau t(n);
  for (std::size_t i = 0; i < n; ++i) {
    PauliString d(n);
    PauliString s = generators[i];
    for (std::size_t q = 0; q < n; ++q) {
      if (destab[i].get(q)) d.x.set(q);
      if (destab[i].get(n + q)) d.z.set(q);
    }
    t.set_row(i, d);
    t.set_row(n + i, s);
  }
  return t;
}

std::vector<PauliString> StabilizerTableau::stabilizers() const {
  std::vector<PauliString> out;
  out.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) out.push_back(stabilizer(i));
  return out;
}

BitMatrix StabilizerTableau::xpart() const {
  BitMatrix m(0, n_);
  for (std::size_t i = 0; i < n_; ++i) m.append_row(stabilizer(i).x);
  return m;
}

BitMatrix StabilizerTableau::zpart() const {
  BitMatrix m(0, n_);
  for (std::size_t i = 0; i < n_; ++i) m.append_row(stabilizer(i).z);
  return m;
}

std::vector<bool> StabilizerTableau::phases() const {
  std::vector<bool> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = signs_[n_ + i] != 0;
  return out;
}

void StabilizerTableau::check_qubit(Qubit q) const {
  if (q >= n_) {
    throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) +
                            "-qubit tableau");
  }
}

#ifdef NDEBUG
#define KPAIR_CHECK_TABLEAU() ((void)0)
#else
#define KPAIR_CHECK_TABLEAU() assert(n_ > 64 || is_valid())
#endif

void StabilizerTableau::h(Qubit q) {
  check_qubit(q);
  const std::size_t w = q / 64;
  const Word m = Word{1} << (q % 64);
  for (std::size_t r = 0; r < 2 * n_; ++r) {
    Word& xw = xrow(r)[w];
    Word& zw = zrow(r)[w];
    const bool xb = xw & m;
    const bool zb = zw & m;
    signs_[r] ^= static_cast<std::uint8_t>(xb && zb);
    if (xb != zb) {
      xw ^= m;
      zw ^= m;
    }
  }
  KPAIR_CHECK_TABLEAU();
}

void StabilizerTableau::s(Qubit q) {
  check_qubit(q);
  const std::size_t w = q / 64;
  const Word m = Word{1} << (q % 64);
  for (std::size_t r = 0; r < 2 * n_; ++r) {
    const bool xb = xrow(r)[w] & m;
    const bool zb = zrow(r)[w] & m;
    signs_[r] ^= static_cast<std::uint8_t>(xb && zb);
    if (xb) zrow(r)[w] ^= m;
  }
  KPAIR_CHECK_TABLEAU();
}

void StabilizerTableau::x(Qubit q) {
  check_qubit(q);
  for (std::size_t r = 0; r < 2 * n_; ++r) signs_[r] ^= static_cast<std::uint8_t>(zbit(r, q));
}

void StabilizerTableau::y(Qubit q) {
  check_qubit(q);
  for (std::size_t r = 0; r < 2 * n_; ++r) signs_[r] ^= static_cast<std::uint8_t>(xbit(r, q) != zbit(r, q));
}

void StabilizerTableau::z(Qubit q) {
  check_qubit(q);
  for (std::size_t r = 0; r < 2 * n_; ++r) signs_[r] ^= static_cast<std::uint8_t>(xbit(r, q));
}

void StabilizerTableau::cx(Qubit control, Qubit target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw std::invalid_argument("cx: control equals target");
  const std::size_t wc = control / 64;
  const std::size_t wt = target / 64;
  const Word mc = Word{1} << (control % 64);
  const Word mt = Word{1} << (target % 64);
  for (std::size_t r = 0; r < 2 * n_; ++r) {
    const bool xc = xrow(r)[wc] & mc;
    const bool zc = zrow(r)[wc] & mc;
    const bool xt = xrow(r)[wt] & mt;
    const bool zt = zrow(r)[wt] & mt;
    signs_[r] ^= static_cast<std::uint8_t>(xc && zt && (xt == zc));
    if (xc) xrow(r)[wt] ^= mt;
    if (zt) zrow(r)[wc] ^= mc;
  }
  KPAIR_CHECK_TABLEAU();
}

void StabilizerTableau::cz(Qubit p, Qubit q) {
  if (p == q) throw std::invalid_argument("cz: both operands are the same qubit");
  h(q);
  cx(p, q);
  h(q);
}

void StabilizerTableau::permute(std::span<const Qubit> perm) {
  if (perm.size() != n_) throw std::invalid_argument("permute: permutation has wrong size");
  std::vector<bool> hit(n_, false);
  for (Qubit target : perm) {
    if (target >= n_ || hit[target]) throw std::invalid_argument("permute: not a permutation");
    hit[target] = true;
  }
  std::vector<Word> nx(xs_.size(), 0);
  std::vector<Word> nz(zs_.size(), 0);
  for (std::size_t r = 0; r < 2 * n_; ++r) {
    for (Qubit q = 0; q < n_; ++q) {
      const Qubit t = perm[q];
      if (xbit(r, q)) nx[r * words_ + t / 64] |= Word{1} << (t % 64);
      if (zbit(r, q)) nz[r * words_ + t / 64] |= Word{1} << (t % 64);
    }
  }
  xs_ = std::move(nx);
  zs_ = std::move(nz);
}

void StabilizerTableau::apply(const Gate& g) {
  switch (g.kind) {
    case GateKind::H: h(g.a); break;
    case GateKind::S: s(g.a); break;
    case GateKind::X: x(g.a); break;
    case GateKind::Y: y(g.a); break;
    case GateKind::Z: z(g.a); break;
    case GateKind::CZ: cz(g.a, g.b); break;
    case GateKind::CX: cx(g.a, g.b); break;
    case GateKind::PERM: permute(g.perm); break;
  }
}

bool StabilizerTableau::anticommutes(std::size_t r, const PauliString& p) const {
  const auto px = p.x.words();
  const auto pz = p.z.words();
  const Word* rx = xrow(r);
  const Word* rz = zrow(r);
  Word acc = 0;
  for (std::size_t w = 0; w < words_; ++w) acc ^= (rx[w] & pz[w]) ^ (rz[w] & px[w]);
  return std::popcount(acc) & 1;
}

void StabilizerTableau::multiply_rows(std::size_t target, std::size_t source) {
  const std::uint8_t log_i = static_cast<std::uint8_t>(
      multiply_paulis(xrow(target), zrow(target), xrow(source), zrow(source), words_) + 2 * signs_[source]);
  signs_[target] ^= static_cast<std::uint8_t>((log_i & 2U) >> 1);
}

MeasureResult StabilizerTableau::measure(Qubit q, Basis basis, OutcomeSource& source) {
  check_qubit(q);
  return measure(PauliString::single(n_, q, basis), source);
}

MeasureResult StabilizerTableau::measure(const PauliString& p, OutcomeSource& source) {
  if (p.size() != n_) throw std::invalid_argument("measure: Pauli string has wrong length");
  if (p.x.none() && p.z.none()) throw std::invalid_argument("measure: identity observable");
  // Restrict the commutation test to the words where p has support.
  std::vector<std::size_t> support;
  for (std::size_t w = 0; w < words_; ++w) {
    if (p.x.words()[w] != 0 || p.z.words()[w] != 0) support.push_back(w);
  }
  auto anti = [&](std::size_t r) {
    Word acc = 0;
    for (auto w : support) acc ^= (xrow(r)[w] & p.z.words()[w]) ^ (zrow(r)[w] & p.x.words()[w]);
    return (std::popcount(acc) & 1) != 0;
  };

  std::size_t pivot = 2 * n_;
  for (std::size_t r = n_; r < 2 * n_; ++r) {
    if (anti(r)) {
      pivot = r;
      break;
    }
  }
  if (pivot < 2 * n_) {
    for (std::size_t r = 0; r < 2 * n_; ++r) {
      if (r != pivot && anti(r)) multiply_rows(r, pivot);
    }
    std::copy(xrow(pivot), xrow(pivot) + words_, xrow(pivot - n_));
    std::copy(zrow(pivot), zrow(pivot) + words_, zrow(pivot - n_));
    signs_[pivot - n_] = signs_[pivot];
    const bool minus = source.draw();
    PauliString post = p;
    post.negative = p.negative != minus;
    set_row(pivot, post);
    KPAIR_CHECK_TABLEAU();
    return {minus ? -1 : +1, true};
  }
  const int e = expectation(p);
  assert(e != 0);
  return {e, false};
}

int StabilizerTableau::expectation(const PauliString& p) const {
  if (p.size() != n_) throw std::invalid_argument("expectation: Pauli string has wrong length");
  for (std::size_t r = n_; r < 2 * n_; ++r) {
    if (anticommutes(r, p)) return 0;
  }
  // p commutes with the whole group, so it is +-(product of the stabilizers
  // whose destabilizers anticommute with it).
  std::vector<Word> sx(words_, 0);
  std::vector<Word> sz(words_, 0);
  std::uint8_t log_i = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!anticommutes(i, p)) continue;
    log_i = static_cast<std::uint8_t>(log_i + multiply_paulis(sx.data(), sz.data(), xrow(n_ + i), zrow(n_ + i), words_) +
                                      2 * signs_[n_ + i]);
  }
  assert((log_i & 1U) == 0);
  const bool negative = (log_i & 2U) != 0;
  return negative == p.negative ? +1 : -1;
}

bool StabilizerTableau::contains(const PauliString& p) const { return expectation(p) == +1; }

bool StabilizerTableau::is_valid() const {
  for (std::size_t i = n_; i < 2 * n_; ++i) {
    for (std::size_t j = i + 1; j < 2 * n_; ++j) {
      Word acc = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        acc ^= (xrow(i)[w] & zrow(j)[w]) ^ (zrow(i)[w] & xrow(j)[w]);
      }
      if (std::popcount(acc) & 1) return false;
    }
  }
  BitMatrix sym(0, 2 * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const auto s = stabilizer(i);
    BitVec v(2 * n_);
    for (std::size_t q = 0; q < n_; ++q) {
      if (s.x.get(q)) v.set(q);
      if (s.z.get(q)) v.set(n_ + q);
    }
    sym.append_row(std::move(v));
  }
  return f2::rank(sym) == n_;
}

std::string StabilizerTableau::dump() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    out += stabilizer(i).to_string();
    out += '\n';
  }
  return out;
}

StabilizerTableau apply_gate(StabilizerTableau t, const Gate& g) {
  t.apply(g);
  return t;
}

// ---------------------------------------------------------------------------

StabilizerTableau css_state(const codes::LinearCode& c) {
  const std::size_t n = c.length();
  const auto ech = f2::row_reduce(c.generators());
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  // X(f) for each reduced row has destabilizer Z at its pivot; Z(g) for the
  // nullspace vector of free column j has destabilizer X_j.
  std::vector<PauliString> destab;
  std::vector<PauliString> stab;
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    PauliString s(n);
    s.x = ech.reduced.row(i);
    stab.push_back(std::move(s));
    destab.push_back(PauliString::single(n, static_cast<Qubit>(ech.pivots[i]), Basis::Z));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    PauliString s(n);
    s.z.set(j);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      if (ech.reduced.get(i, j)) s.z.set(ech.pivots[i]);
    }
    stab.push_back(std::move(s));
    destab.push_back(PauliString::single(n, static_cast<Qubit>(j), Basis::X));
  }
  return StabilizerTableau::from_rows(destab, stab);
}

StabilizerTableau StabilizerTableau::from_rows(const std::vector<PauliString>& destabilizers,
                                               const std::vector<PauliString>& stabilizers) {
  const std::size_t n = stabilizers.size();
  if (destabilizers.size() != n) throw std::invalid_argument("from_rows: row counts differ");
  StabilizerTableau t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (destabilizers[i].size() != n || stabilizers[i].size() != n) {
      throw std::invalid_argument("from_rows: row " + std::to_string(i) + " has the wrong length");
    }
    t.set_row(i, destabilizers[i]);
    t.set_row(n + i, stabilizers[i]);
  }
#ifndef NDEBUG
  if (n <= 64) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        assert(destabilizers[i].commutes_with(stabilizers[j]) == (i != j));
      }
    }
    assert(t.is_valid());
  }
#endif
  return t;
}

StabilizerTableau graph_state(std::span<const std::pair<Qubit, Qubit>> edges, std::size_t n) {
  std::vector<PauliString> destab;
  std::vector<PauliString> stab;
  for (std::size_t j = 0; j < n; ++j) {
    stab.push_back(PauliString::single(n, static_cast<Qubit>(j), Basis::X));
    destab.push_back(PauliString::single(n, static_cast<Qubit>(j), Basis::Z));
  }
  std::vector<std::pair<Qubit, Qubit>> seen;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("graph_state: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph_state: self-loop at " + std::to_string(u));
    const auto key = std::minmax(u, v);
    if (std::find(seen.begin(), seen.end(), std::pair<Qubit, Qubit>(key)) != seen.end()) {
      throw std::invalid_argument("graph_state: repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    seen.emplace_back(key);
    stab[u].z.set(v);
    stab[v].z.set(u);
  }
  return StabilizerTableau::from_rows(destab, stab);
}

StabilizerTableau epr_product_state(std::span<const QubitPair> pairs, std::size_t n) {
  validate_pairs(PairList(pairs.begin(), pairs.end()), n);
  std::vector<PauliString> destab(n, PauliString(n));
  std::vector<PauliString> stab(n, PauliString(n));
  std::vector<bool> used(n, false);
  std::size_t row = 0;
  for (const auto& p : pairs) {
    stab[row].x.set(p.a);
    stab[row].x.set(p.b);
    destab[row].z.set(p.a);
    ++row;
    stab[row].z.set(p.a);
    stab[row].z.set(p.b);
    destab[row].x.set(p.b);
    ++row;
    used[p.a] = used[p.b] = true;
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (used[q]) continue;
    stab[row].z.set(q);
    destab[row].x.set(q);
    ++row;
  }
  return StabilizerTableau::from_rows(destab, stab);
}

std::size_t entanglement_entropy(const StabilizerTableau& t, std::span<const Qubit> subset) {
  const std::size_t n = t.num_qubits();
  std::vector<Qubit> cols(subset.begin(), subset.end());
  std::sort(cols.begin(), cols.end());
  if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) {
    throw std::invalid_argument("entanglement_entropy: repeated qubit in subset");
  }
  for (auto q : cols) {
    if (q >= n) throw std::out_of_range("entanglement_entropy: qubit out of range");
  }
  const std::size_t a = cols.size();
  BitMatrix restricted(0, 2 * a);
  for (std::size_t i = 0; i < n; ++i) {
    BitVec v(2 * a);
    for (std::size_t c = 0; c < a; ++c) {
      if (t.stabilizer_x(i, cols[c])) v.set(c);
      if (t.stabilizer_z(i, cols[c])) v.set(a + c);
    }
    if (v.any()) restricted.append_row(std::move(v));
  }
  return f2::rank(restricted) - a;
}

bool is_epr_pair(const StabilizerTableau& t, Qubit a, Qubit b) {
  if (a == b) throw std::invalid_argument("is_epr_pair: a == b");
  const Qubit qa[] = {a};
  const Qubit qb[] = {b};
  const Qubit qab[] = {a, b};
  return entanglement_entropy(t, qa) == 1 && entanglement_entropy(t, qb) == 1 && entanglement_entropy(t, qab) == 0;
}

bool is_exact_epr_pair(const StabilizerTableau& t, Qubit a, Qubit b) {
  if (a == b) throw std::invalid_argument("is_exact_epr_pair: a == b");
  const std::size_t n = t.num_qubits();
  PauliString xx(n);
  xx.x.set(a);
  xx.x.set(b);
  PauliString zz(n);
  zz.z.set(a);
  zz.z.set(b);
  return t.contains(xx) && t.contains(zz);
}

bool stabilizer_equal(const StabilizerTableau& t1, const StabilizerTableau& t2) {
  if (t1.num_qubits() != t2.num_qubits()) throw std::invalid_argument("stabilizer_equal: qubit counts differ");
  for (std::size_t i = 0; i < t1.num_qubits(); ++i) {
    if (!t2.contains(t1.stabilizer(i))) return false;
  }
  return true;
}

}  // namespace kpair::stabsim
