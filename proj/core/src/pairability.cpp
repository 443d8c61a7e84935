#include "kpair/pairability.hpp"

#include <algorithm>
#include <functional>

namespace kpair::pairability {

namespace {

std::size_t checked_size(int m) {
  if (m < 1 || m > 24) throw std::invalid_argument("label dimension m=" + std::to_string(m) + " out of range");
  return std::size_t{1} << m;
}

Label unit_label(int j) { return Label{1} << j; }

std::vector<Qubit> flatten(const PairList& pairs) {
  std::vector<Qubit> e;
  for (const auto& p : pairs) {
    e.push_back(p.a);
    e.push_back(p.b);
  }
  return e;
}

// Greedy basis of the span of `points`. `reduced` is kept in descending
// order so each entry has a distinct leading bit.
struct XorBasis {
  std::vector<Label> reduced;
  std::vector<Label> original;  // the inputs that enlarged the span

  Label reduce(Label v) const {
    for (Label r : reduced) v = std::min(v, static_cast<Label>(v ^ r));
    return v;
  }
  bool insert(Label v) {
    const Label w = reduce(v);
    if (w == 0) return false;
    reduced.insert(std::upper_bound(reduced.begin(), reduced.end(), w, std::greater<>()), w);
    original.push_back(v);
    return true;
  }
};

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Label> aff_span(std::span<const Label> points) {
  if (points.empty()) throw std::invalid_argument("aff_span: empty point set");
  const Label base = points.front();
  XorBasis basis;
  for (Label p : points) basis.insert(p ^ base);
  std::vector<Label> out{base};
  for (Label d : basis.reduced) {
    const std::size_t sz = out.size();
    for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] ^ d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

MeasurementPattern MeasurementPattern::css(std::size_t n, std::vector<Qubit> e, std::vector<Qubit> x,
                                           std::vector<Qubit> z) {
  MeasurementPattern p;
  p.n = n;
  std::sort(e.begin(), e.end());
  std::sort(x.begin(), x.end());
  std::sort(z.begin(), z.end());
  p.basis.assign(n, std::nullopt);
  for (auto q : x) {
    if (q >= n) throw std::invalid_argument("pattern: X qubit " + std::to_string(q) + " out of range");
    p.basis[q] = Basis::X;
  }
  for (auto q : z) {
    if (q >= n) throw std::invalid_argument("pattern: Z qubit " + std::to_string(q) + " out of range");
    p.basis[q] = Basis::Z;
  }
  p.e_set = std::move(e);
  p.x_set = std::move(x);
  p.z_set = std::move(z);
  p.validate();
  return p;
}

MeasurementPattern MeasurementPattern::with_bases(std::vector<std::optional<Basis>> basis, std::vector<Qubit> e) {
  MeasurementPattern p;
  p.n = basis.size();
  std::sort(e.begin(), e.end());
  for (Qubit q = 0; q < p.n; ++q) {
    if (!basis[q]) continue;
    if (*basis[q] == Basis::X) p.x_set.push_back(q);
    if (*basis[q] == Basis::Z) p.z_set.push_back(q);
  }
  p.basis = std::move(basis);
  p.e_set = std::move(e);
  p.validate();
  return p;
}

void MeasurementPattern::validate() const {
  if (basis.size() != n) throw std::invalid_argument("pattern: basis table has the wrong size");
  std::vector<char> role(n, 0);
  auto mark = [&](const std::vector<Qubit>& set, char tag, const char* name) {
    for (auto q : set) {
      if (q >= n) throw std::invalid_argument(std::string("pattern: ") + name + " qubit " + std::to_string(q) + " out of range");
      if (role[q] != 0) throw std::invalid_argument("pattern: qubit " + std::to_string(q) + " appears in two sets");
      role[q] = tag;
    }
  };
  mark(e_set, 'E', "E");
  mark(x_set, 'X', "X");
  mark(z_set, 'Z', "Z");
  for (Qubit q = 0; q < n; ++q) {
    const bool target = role[q] == 'E';
    if (target == basis[q].has_value()) {
      throw std::invalid_argument("pattern: qubit " + std::to_string(q) +
                                  (target ? " is a target but has a basis" : " has no basis"));
    }
    if (role[q] == 'X' && *basis[q] != Basis::X) throw std::invalid_argument("pattern: X-set qubit with other basis");
    if (role[q] == 'Z' && *basis[q] != Basis::Z) throw std::invalid_argument("pattern: Z-set qubit with other basis");
  }
}

std::vector<Qubit> MeasurementPattern::measurement_order() const {
  std::vector<Qubit> order = z_set;
  order.insert(order.end(), x_set.begin(), x_set.end());
  for (Qubit q = 0; q < n; ++q) {
    if (basis[q] == Basis::Y) order.push_back(q);
  }
  return order;
}

std::string MeasurementPattern::to_string() const {
  std::string s(n, '.');
  for (Qubit q = 0; q < n; ++q) {
    if (basis[q]) s[q] = to_char(*basis[q]);
  }
  return s;
}

PatternError::PatternError(std::size_t pair_index, Qubit qubit)
    : std::runtime_error("subspace S_" + std::to_string(pair_index) + " contains target qubit " +
                         std::to_string(qubit) + " of another pair"),
      pair_(pair_index),
      qubit_(qubit) {}

SearchExhausted::SearchExhausted(PairList pairs)
    : std::runtime_error("no c-vector triple with c1+c2+c3=0 certifies this pairing"), pairs_(std::move(pairs)) {}

// ---------------------------------------------------------------------------

MeasurementPattern build_pattern(const PairList& pairs, const CVectors& c, int m) {
  const std::size_t n = checked_size(m);
  validate_pairs(pairs, n);
  const std::size_t k = pairs.size();
  if (k == 0) throw std::invalid_argument("build_pattern: no pairs");
  if (c.c.size() != k) throw std::invalid_argument("build_pattern: need one c-vector per pair");
  for (auto v : c.c) {
    if (v >= n) throw std::invalid_argument("build_pattern: c-vector out of range");
  }

  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < k; ++i) {
    owner[pairs[i].a] = static_cast<int>(i);
    owner[pairs[i].b] = static_cast<int>(i);
  }
  std::vector<char> in_union(n, 0);
  std::vector<std::vector<Label>> subspaces;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Label> gens{pairs[i].a, pairs[i].b};
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) gens.push_back(c.c[j]);
    }
    auto s = aff_span(gens);
    for (Label x : s) {
      if (owner[x] >= 0 && owner[x] != static_cast<int>(i)) throw PatternError(i, x);
      in_union[x] = 1;
    }
    subspaces.push_back(std::move(s));
  }
  std::vector<Qubit> e = flatten(pairs);
  std::vector<Qubit> x;
  std::vector<Qubit> z;
  for (Qubit q = 0; q < n; ++q) {
    if (owner[q] >= 0) continue;
    (in_union[q] ? z : x).push_back(q);
  }
  auto pattern = MeasurementPattern::css(n, std::move(e), std::move(x), std::move(z));
  pattern.subspaces = std::move(subspaces);
  return pattern;
}

// ---------------------------------------------------------------------------

std::optional<BitVec> poly_regression(std::span<const Label> points, const std::vector<bool>& values, int r, int m) {
  if (points.size() != values.size()) throw std::invalid_argument("poly_regression: points and values differ in length");
  const std::size_t n = checked_size(m);
  std::vector<Label> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("poly_regression: repeated point");
  }
  if (!sorted.empty() && sorted.back() >= n) throw std::invalid_argument("poly_regression: point out of range");
  const auto code = codes::rm_code(r, m);
  std::vector<std::size_t> cols(points.begin(), points.end());
  const auto a = code.generators().select_columns(cols).transpose();
  BitVec rhs(points.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i]) rhs.set(i);
  }
  auto y = f2::solve(a, rhs);
  if (!y) return std::nullopt;
  return code.generators().combine_rows(*y);
}

// ---------------------------------------------------------------------------

bool is_canonical(const PairList& pairs) {
  const std::size_t k = pairs.size();
  const Label low = static_cast<Label>((std::uint64_t{1} << k) - 1);
  std::vector<Label> bad{0};
  for (const auto& p : pairs) bad.push_back(p.a ^ p.b);
  for (const auto& p : pairs) {
    for (Label v : {p.a, p.b}) {
      if (v & low) return false;
      if (std::find(bad.begin(), bad.end(), v) != bad.end()) return false;
    }
  }
  return true;
}

CVectors choose_c_vectors(const PairList& pairs, int m, const LinearCode* code) {
  const std::size_t n = checked_size(m);
  validate_pairs(pairs, n);
  const std::size_t k = pairs.size();
  if (k == 0) throw std::invalid_argument("choose_c_vectors: no pairs");
  if (k == 1) return {{unit_label(0)}};
  if (k == 2) {
    if (m < 4) throw std::invalid_argument("choose_c_vectors: k=2 needs m >= 4");
    const auto e = flatten(pairs);
    const auto aff = aff_span(e);
    for (Label c = 0; c < n; ++c) {
      if (!std::binary_search(aff.begin(), aff.end(), c)) return {{c, c}};
    }
    throw std::logic_error("choose_c_vectors: Aff(E) covers F2^m");
  }
  if (k == 3) {
    if (m < 5) throw std::invalid_argument("choose_c_vectors: k=3 needs m >= 5");
    std::optional<LinearCode> own;
    if (code == nullptr) {
      own = codes::rm_code(2, m);
      code = &*own;
    }
    for (Label c1 = 1; c1 < n; ++c1) {
      for (Label c2 = 1; c2 < n; ++c2) {
        const Label c3 = c1 ^ c2;
        if (c3 == 0) continue;
        CVectors cv{{c1, c2, c3}};
        MeasurementPattern pattern;
        try {
          pattern = build_pattern(pairs, cv, m);
        } catch (const PatternError&) {
          continue;
        }
        if (verify_css_conditions(*code, pattern, pairs)) return cv;
      }
    }
    throw SearchExhausted(pairs);
  }
  if (static_cast<std::size_t>(m) < 3 * k) {
    throw std::invalid_argument("choose_c_vectors: k=" + std::to_string(k) + " needs m >= " + std::to_string(3 * k));
  }
  if (!is_canonical(pairs)) throw std::invalid_argument("choose_c_vectors: pairs are not in canonical form");
  CVectors cv;
  for (std::size_t j = 0; j < k; ++j) cv.c.push_back(unit_label(static_cast<int>(j)));
  return cv;
}

// ---------------------------------------------------------------------------

CanonicalFrame canonicalize(const PairList& pairs, int m) {
  const std::size_t n = checked_size(m);
  validate_pairs(pairs, n);
  const std::size_t k = pairs.size();
  if (k == 0) throw std::invalid_argument("canonicalize: no pairs");
  if (static_cast<std::size_t>(m) < 3 * k) {
    throw std::invalid_argument("canonicalize: m=" + std::to_string(m) + " < 3k=" + std::to_string(3 * k));
  }
  XorBasis basis;
  for (auto v : flatten(pairs)) basis.insert(v);
  std::vector<Label> to;
  for (std::size_t j = 0; j < basis.original.size(); ++j) to.push_back(unit_label(static_cast<int>(k + j)));
  const auto linear = AffineMap::linear_sending(basis.original, to, m);

  PairList moved;
  for (const auto& p : pairs) moved.push_back({linear(p.a), linear(p.b)});
  std::vector<Label> bad{0};
  for (const auto& p : moved) bad.push_back(p.a ^ p.b);
  for (Label t = 0; (static_cast<std::size_t>(t) << k) < n; ++t) {
    const Label h = t << k;
    bool ok = true;
    for (const auto& p : moved) {
      for (Label v : {p.a ^ h, p.b ^ h}) {
        if (std::find(bad.begin(), bad.end(), v) != bad.end()) ok = false;
      }
    }
    if (!ok) continue;
    const auto map = AffineMap::translation(m, h).compose(linear);
    PairList out;
    for (const auto& p : pairs) out.push_back({map(p.a), map(p.b)});
    return {map, out};
  }
  throw std::logic_error("canonicalize: no admissible shift");
}

CanonicalFrame canonicalize_first_pair(const PairList& pairs, int m) {
  const std::size_t n = checked_size(m);
  validate_pairs(pairs, n);
  if (pairs.empty()) throw std::invalid_argument("canonicalize_first_pair: no pairs");
  const Label a = pairs[0].a;
  const Label d = pairs[0].a ^ pairs[0].b;
  const Label from[] = {d};
  const Label to[] = {unit_label(0)};
  const auto linear = AffineMap::linear_sending(from, to, m);
  // x -> L(x + a) = L x + L a
  const auto map = AffineMap::translation(m, linear(a)).compose(linear);
  PairList out;
  for (const auto& p : pairs) out.push_back({map(p.a), map(p.b)});
  return {map, out};
}

// ---------------------------------------------------------------------------

namespace {

std::optional<BitVec> css1_witness(const LinearCode& code, const MeasurementPattern& pattern, const QubitPair& pair) {
  std::vector<std::size_t> ez(pattern.e_set.begin(), pattern.e_set.end());
  ez.insert(ez.end(), pattern.z_set.begin(), pattern.z_set.end());
  const auto a = code.generators().select_columns(ez).transpose();
  BitVec rhs(ez.size());
  for (std::size_t i = 0; i < ez.size(); ++i) {
    if (ez[i] == pair.a || ez[i] == pair.b) rhs.set(i);
  }
  auto y = f2::solve(a, rhs);
  if (!y) return std::nullopt;
  return code.generators().combine_rows(*y);
}

bool css2_holds(const LinearCode& code, const MeasurementPattern& pattern, const QubitPair& pair, const BitVec& fbar) {
  if (fbar.size() != pattern.n || !fbar.get(pair.a) || !fbar.get(pair.b)) return false;
  for (auto q : pattern.e_set) {
    if (q != pair.a && q != pair.b && fbar.get(q)) return false;
  }
  for (auto q : pattern.x_set) {
    if (fbar.get(q)) return false;
  }
  return code.dual_contains(fbar);
}

std::optional<BitVec> css2_witness(const LinearCode& code, const MeasurementPattern& pattern, std::size_t i,
                                   const QubitPair& pair) {
  if (i < pattern.subspaces.size()) {
    BitVec ind(pattern.n);
    for (auto x : pattern.subspaces[i]) ind.set(x);
    if (css2_holds(code, pattern, pair, ind)) return ind;
  }
  // fbar = e_a + e_b + (free part on Z), orthogonal to every generator:
  // G_Z * u = G_a + G_b.
  std::vector<std::size_t> zcols(pattern.z_set.begin(), pattern.z_set.end());
  const auto& g = code.generators();
  const auto gz = g.select_columns(zcols);
  BitVec rhs(g.nrows());
  for (std::size_t r = 0; r < g.nrows(); ++r) {
    if (g.get(r, pair.a) != g.get(r, pair.b)) rhs.set(r);
  }
  auto u = f2::solve(gz, rhs);
  if (!u) return std::nullopt;
  BitVec fbar(pattern.n);
  fbar.set(pair.a);
  fbar.set(pair.b);
  for (std::size_t j = 0; j < zcols.size(); ++j) {
    if (u->get(j)) fbar.set(zcols[j]);
  }
  return fbar;
}

void check_inputs(const LinearCode& code, const MeasurementPattern& pattern, const PairList& pairs) {
  if (code.length() != pattern.n) throw std::invalid_argument("pattern size differs from code length");
  pattern.validate();
  validate_pairs(pairs, pattern.n);
  auto e = flatten(pairs);
  std::sort(e.begin(), e.end());
  if (e != pattern.e_set) throw std::invalid_argument("pattern target set differs from the pairs");
}

}  // namespace

std::optional<CssCertificate> verify_css_conditions(const LinearCode& code, const MeasurementPattern& pattern,
                                                    const PairList& pairs) {
  check_inputs(code, pattern, pairs);
  CssCertificate cert;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto f = css1_witness(code, pattern, pairs[i]);
    if (!f) return std::nullopt;
    auto fbar = css2_witness(code, pattern, i, pairs[i]);
    if (!fbar) return std::nullopt;
    cert.f.push_back(std::move(*f));
    cert.fbar.push_back(std::move(*fbar));
  }
  return cert;
}

bool check_certificate(const LinearCode& code, const MeasurementPattern& pattern, const PairList& pairs,
                       const CssCertificate& cert) {
  check_inputs(code, pattern, pairs);
  if (cert.f.size() != pairs.size() || cert.fbar.size() != pairs.size()) return false;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& f = cert.f[i];
    const auto& pair = pairs[i];
    if (f.size() != pattern.n || !f.get(pair.a) || !f.get(pair.b)) return false;
    for (auto q : pattern.e_set) {
      if (q != pair.a && q != pair.b && f.get(q)) return false;
    }
    for (auto q : pattern.z_set) {
      if (f.get(q)) return false;
    }
    if (!code.contains(f)) return false;
    if (!css2_holds(code, pattern, pair, cert.fbar[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

BitVec appendix_a_polynomial(const PairList& pairs, int m) {
  const std::size_t n = checked_size(m);
  validate_pairs(pairs, n);
  const std::size_t k = pairs.size();
  if (static_cast<std::size_t>(m) != 3 * k) throw std::invalid_argument("appendix_a_polynomial: needs m = 3k");
  std::vector<Label> basis = flatten(pairs);
  for (std::size_t j = 0; j < k; ++j) basis.push_back(unit_label(static_cast<int>(j)));
  XorBasis check;
  for (auto v : basis) {
    if (!check.insert(v)) throw std::invalid_argument("appendix_a_polynomial: vectors are linearly dependent");
  }
  std::vector<Label> coords;
  for (std::size_t j = 0; j < basis.size(); ++j) coords.push_back(unit_label(static_cast<int>(j)));
  // Coordinate map: bit 2i is alpha_{i+1}, bit 2i+1 is beta_{i+1}, bit 2k+j is gamma_{j+1}.
  const auto to_coords = AffineMap::linear_sending(basis, coords, m);
  const Label gamma_mask = static_cast<Label>(((std::uint64_t{1} << k) - 1) << (2 * k));
  BitVec f(n);
  for (Label x = 0; x < n; ++x) {
    const Label y = to_coords(x);
    const bool lead = ((y & 1U) != 0) != ((y & 2U) != 0);
    // sum over proper subsets M of prod gamma_j is 1 iff all gamma_j agree.
    const Label g = y & gamma_mask;
    const bool tail = g == 0 || g == gamma_mask;
    if (lead && tail) f.set(x);
  }
  return f;
}

// ---------------------------------------------------------------------------

PairingPlan plan_rm_pairing(const LinearCode& code, const PairList& pairs, int m) {
  const std::size_t n = checked_size(m);
  if (code.length() != n) throw std::invalid_argument("plan_rm_pairing: code length is not 2^m");
  validate_pairs(pairs, n);
  const std::size_t k = pairs.size();
  PairingPlan plan;
  if (k < 4) {
    plan.c = choose_c_vectors(pairs, m, &code);
    plan.pattern = build_pattern(pairs, plan.c, m);
    plan.certificate = verify_css_conditions(code, plan.pattern, pairs);
    return plan;
  }
  const auto frame = canonicalize(pairs, m);
  plan.c = choose_c_vectors(frame.pairs, m, &code);
  const auto local = build_pattern(frame.pairs, plan.c, m);
  const auto cert = verify_css_conditions(code, local, frame.pairs);
  plan.frame = frame.map;

  // Original qubit x plays the role of frame.map(x).
  const auto& phi = frame.map;
  const auto inv = phi.inverse();
  std::vector<Qubit> e;
  std::vector<Qubit> xs;
  std::vector<Qubit> zs;
  for (Qubit x = 0; x < n; ++x) {
    const auto& b = local.basis[phi(x)];
    if (!b) {
      e.push_back(x);
    } else {
      (*b == Basis::X ? xs : zs).push_back(x);
    }
  }
  plan.pattern = MeasurementPattern::css(n, std::move(e), std::move(xs), std::move(zs));
  for (const auto& s : local.subspaces) {
    std::vector<Label> back;
    for (auto v : s) back.push_back(inv(v));
    std::sort(back.begin(), back.end());
    plan.pattern.subspaces.push_back(std::move(back));
  }
  if (cert) {
    CssCertificate pulled;
    for (const auto& f : cert->f) pulled.f.push_back(codes::apply_affine_permutation(phi, f));
    for (const auto& f : cert->fbar) pulled.fbar.push_back(codes::apply_affine_permutation(phi, f));
    if (!check_certificate(code, plan.pattern, pairs, pulled)) {
      throw std::logic_error("plan_rm_pairing: pulled-back certificate failed re-verification");
    }
    plan.certificate = std::move(pulled);
  }
  return plan;
}

}  // namespace kpair::pairability
