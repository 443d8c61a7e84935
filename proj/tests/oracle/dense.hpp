// Dense state-vector reference simulator for small qubit counts. Amplitude
// index bit q is the value of qubit q. Used only as an independent check of
// the tableau simulator.
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using Amplitude = std::complex<double>;

class DenseState {
 public:
  explicit DenseState(std::size_t n);  // |0^n>

  /// The unique state stabilized by the signed Pauli strings ("+XZI", ...),
  /// obtained by projecting basis states with prod (I + g) / 2.
  static DenseState from_stabilizers(const std::vector<std::string>& generators);

  std::size_t num_qubits() const { return n_; }
  const std::vector<Amplitude>& amplitudes() const { return amp_; }

  void h(std::size_t q);
  void s(std::size_t q);
  void x(std::size_t q);
  void y(std::size_t q);
  void z(std::size_t q);
  void cx(std::size_t c, std::size_t t);
  void cz(std::size_t a, std::size_t b);
  /// Content of qubit j moves to perm[j].
  void permute(const std::vector<std::size_t>& perm);

  /// P |psi> for a signed Pauli string.
  std::vector<Amplitude> apply_pauli(const std::string& pauli) const;
  /// <psi| P |psi>
  double expectation(const std::string& pauli) const;
  /// Probability of outcome +1 when measuring P.
  double probability_plus(const std::string& pauli) const;
  /// Projects onto outcome (+1 or -1) of P and renormalizes.
  void project(const std::string& pauli, int outcome);

  /// P |psi> == |psi> up to 1e-9.
  bool stabilized_by(const std::string& pauli) const;

  /// Von Neumann entropy (bits) of the reduced state on `subset`.
  double entropy(const std::vector<std::size_t>& subset) const;

  double norm() const;

 private:
  std::size_t n_;
  std::vector<Amplitude> amp_;
};

/// <a|b>
Amplitude inner(const DenseState& a, const DenseState& b);

/// Tensor product of (|00> + |11>)/sqrt2 over the given pairs, other qubits |0>.
DenseState epr_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

}  // namespace oracle
