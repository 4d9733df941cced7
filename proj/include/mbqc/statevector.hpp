// Copyright 2026 The mbqc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <vector>

#include "mbqc/pauli.hpp"
#include "mbqc/policy.hpp"

namespace mbqc {

using Complex = std::complex<double>;

// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

Mat2 mat2_h();
Mat2 mat2_ux(double phi);    // exp(-i phi X / 2)
Mat2 mat2_uz(double theta);  // exp(-i theta Z / 2)
Mat2 mat2_mul(const Mat2& a, const Mat2& b);
Mat2 mat2_dagger(const Mat2& m);

// States two amplitudes agree up to; norms are held an order tighter.
constexpr double kAmpTol = 1e-10;
constexpr double kDetTol = 1e-12;

// Maximum qubit count, 14 unless overridden by MBQC_MAX_QUBITS.
unsigned max_qubits();

// Dense state. Qubit 0 owns the most significant bit of the basis index,
// so |q0 q1 q2> reads left to right. Measurement outcome 0 means the +1
// eigenvalue was observed.
class StateVector {
 public:
  explicit StateVector(unsigned n);  // |0...0>
  static StateVector from_amplitudes(unsigned n, std::vector<Complex> amps);

  unsigned num_qubits() const { return n_; }
  size_t dim() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(size_t idx) const { return amps_[idx]; }

  void prep_plus(unsigned q);   // |0> at q must be fresh; maps it to |+>
  void apply_h(unsigned q);
  void apply_x(unsigned q);
  void apply_y(unsigned q);
  void apply_z(unsigned q);
  void apply_s(unsigned q);
  void apply_ux(unsigned q, double phi);
  void apply_uz(unsigned q, double theta);
  void apply_mat2(unsigned q, const Mat2& m);
  void apply_cz(unsigned a, unsigned b);
  void apply_cnot(unsigned control, unsigned target);
  void apply_clifford(const CliffordGate& g);
  void apply_pauli_string(const PauliString& p);

  double norm() const;
  void normalize();
  Complex inner_product(const StateVector& other) const;  // <this|other>
  double fidelity(const StateVector& other) const;

  // Measures a Hermitian Pauli product (even phase). Consumes a policy bit
  // only when the outcome is genuinely random; collapses and renormalizes.
  int measure_pauli_product(const PauliString& obs, OutcomePolicy& policy);
  int measure_z(unsigned q, OutcomePolicy& policy);
  int measure_x(unsigned q, OutcomePolicy& policy);

  // Measures cos(omega) X + sin(omega) Y on q. Outcome 0 projects onto
  // (|0> + e^{i omega}|1>)/sqrt(2).
  int measure_equatorial(unsigned q, double omega, OutcomePolicy& policy);

  // Applies the +1/-1 projector of obs without renormalizing and returns
  // the surviving squared norm. Used when outcomes are fixed up front and
  // branch probabilities are read off at the end.
  double project_unnormalized(const PauliString& obs, int outcome);

  // Extracts the state of the kept qubits, in the order given, assuming the
  // full state is a product across the kept/complement cut. Throws if the
  // residual from the best product approximation exceeds kAmpTol.
  StateVector factor_keep(const std::vector<unsigned>& keep) const;

  static StateVector kron(const StateVector& a, const StateVector& b);

  // True within kAmpTol, ignoring global phase.
  bool approx_equal(const StateVector& other) const;

 private:
  size_t bit(unsigned q) const { return size_t{1} << (n_ - 1 - q); }

  unsigned n_;
  std::vector<Complex> amps_;
};

}  // namespace mbqc
