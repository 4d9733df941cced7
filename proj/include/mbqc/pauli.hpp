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

#include <cstdint>
#include <string>
#include <vector>

namespace mbqc {

// Single-qubit Pauli letters. The numeric values are load-bearing: letter
// products and commutation checks are table lookups indexed by these codes.
enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_to_char(Pauli p);
Pauli pauli_from_char(char c);

// An n-qubit Pauli operator i^phase_exp * P_0 o ... o P_{n-1}, with the
// global phase tracked exactly as a power of i. Hermitian operators have
// phase_exp 0 or 2 (sign +1 or -1); phases 1 and 3 arise transiently
// during products and Y = iXZ expansions.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(unsigned n) : letters_(n, Pauli::I) {}
  PauliString(unsigned n, unsigned qubit, Pauli p) : letters_(n, Pauli::I) {
    letters_.at(qubit) = p;
  }

  // Accepts an optional leading sign ("+", "-", "+i", "-i") followed by one
  // letter from {I,X,Y,Z} per qubit, e.g. "-IXZ".
  static PauliString parse(const std::string& s);

  unsigned size() const { return static_cast<unsigned>(letters_.size()); }
  Pauli letter(unsigned q) const { return letters_.at(q); }
  void set_letter(unsigned q, Pauli p) { letters_.at(q) = p; }
  uint8_t phase_exp() const { return phase_exp_; }
  void set_phase_exp(uint8_t e) { phase_exp_ = e & 3u; }

  // Sign as +1/-1. Requires a Hermitian phase (exponent 0 or 2).
  int sign() const;
  bool is_identity_letters() const;
  unsigned weight() const;

  // String form with an explicit sign prefix: "+XZI", "-YII", "+iXY", "-iZ".
  std::string str() const;

  bool commutes_with(const PauliString& other) const;
  bool equal_letters(const PauliString& other) const;
  bool operator==(const PauliString& other) const = default;

  // In-place right-multiplication: *this <- (*this) * other, phases exact.
  void multiply_right(const PauliString& other);

  friend PauliString operator*(PauliString a, const PauliString& b) {
    a.multiply_right(b);
    return a;
  }

 private:
  std::vector<Pauli> letters_;
  uint8_t phase_exp_ = 0;
};

// Clifford generators used for operator conjugation. Single-qubit kinds use
// q0 only; CNOT is control q0, target q1; CZ is symmetric in q0, q1.
enum class CliffordKind : uint8_t { H, S, X, Y, Z, CNOT, CZ };

struct CliffordGate {
  CliffordKind kind;
  unsigned q0;
  unsigned q1 = 0;
};

// Returns U P U^dagger with the phase tracked exactly. Y letters are
// expanded as iXZ so only the generator images of X and Z are tabulated.
PauliString conjugate_by_clifford(const PauliString& p, const CliffordGate& g);

// Conjugates by a gate sequence applied left to right: for U = g_k ... g_1
// (g_1 first), returns U P U^dagger by folding over the gates in order.
PauliString conjugate_by_circuit(const PauliString& p,
                                 const std::vector<CliffordGate>& gates);

}  // namespace mbqc
