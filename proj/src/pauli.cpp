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

#include "mbqc/pauli.hpp"

#include <array>
#include <stdexcept>

namespace mbqc {

namespace {

// letter_product[a][b] is the letter of a*b; phase_delta[a][b] the exponent
// of i contributed, following XY = iZ, YZ = iX, ZX = iY and their reverses.
constexpr std::array<std::array<uint8_t, 4>, 4> kLetterProduct = {{
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
}};

constexpr std::array<std::array<uint8_t, 4>, 4> kPhaseDelta = {{
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
}};

}  // namespace

char pauli_to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  throw std::logic_error("invalid Pauli letter");
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") + c +
                                  "'");
  }
}

PauliString PauliString::parse(const std::string& s) {
  size_t pos = 0;
  uint8_t phase = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') phase = 2;
    ++pos;
    if (pos < s.size() && s[pos] == 'i') {
      phase = (phase + 1) & 3u;
      ++pos;
    }
  }
  PauliString out(static_cast<unsigned>(s.size() - pos));
  out.phase_exp_ = phase;
  for (unsigned q = 0; pos < s.size(); ++pos, ++q) {
    out.letters_[q] = pauli_from_char(s[pos]);
  }
  return out;
}

int PauliString::sign() const {
  if (phase_exp_ == 0) return 1;
  if (phase_exp_ == 2) return -1;
  throw std::logic_error("operator has a non-Hermitian phase");
}

bool PauliString::is_identity_letters() const {
  for (Pauli p : letters_) {
    if (p != Pauli::I) return false;
  }
  return true;
}

unsigned PauliString::weight() const {
  unsigned w = 0;
  for (Pauli p : letters_) {
    if (p != Pauli::I) ++w;
  }
  return w;
}

std::string PauliString::str() const {
  std::string out;
  switch (phase_exp_) {
    case 0: out = "+"; break;
    case 1: out = "+i"; break;
    case 2: out = "-"; break;
    case 3: out = "-i"; break;
  }
  for (Pauli p : letters_) out += pauli_to_char(p);
  return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (size() != other.size()) {
    throw std::invalid_argument("operator sizes differ");
  }
  unsigned clashes = 0;
  for (unsigned q = 0; q < size(); ++q) {
    Pauli a = letters_[q];
    Pauli b = other.letters_[q];
    if (a != Pauli::I && b != Pauli::I && a != b) ++clashes;
  }
  return (clashes & 1u) == 0;
}

bool PauliString::equal_letters(const PauliString& other) const {
  return letters_ == other.letters_;
}

void PauliString::multiply_right(const PauliString& other) {
  if (size() != other.size()) {
    throw std::invalid_argument("operator sizes differ");
  }
  unsigned phase = phase_exp_ + other.phase_exp_;
  for (unsigned q = 0; q < size(); ++q) {
    auto a = static_cast<uint8_t>(letters_[q]);
    auto b = static_cast<uint8_t>(other.letters_[q]);
    phase += kPhaseDelta[a][b];
    letters_[q] = static_cast<Pauli>(kLetterProduct[a][b]);
  }
  phase_exp_ = static_cast<uint8_t>(phase & 3u);
}

namespace {

// Images of the X and Z generators on the gate's qubits, with exact signs.
// Everything else follows from linearity and Y = iXZ.
void generator_image(const CliffordGate& g, unsigned q, bool want_x,
                     unsigned n, PauliString* out) {
  *out = PauliString(n);
  switch (g.kind) {
    case CliffordKind::H:
      // X <-> Z.
      out->set_letter(q, want_x ? Pauli::Z : Pauli::X);
      return;
    case CliffordKind::S:
      // X -> Y, Z -> Z.
      out->set_letter(q, want_x ? Pauli::Y : Pauli::Z);
      return;
    case CliffordKind::X:
      out->set_letter(q, want_x ? Pauli::X : Pauli::Z);
      if (!want_x) out->set_phase_exp(2);
      return;
    case CliffordKind::Y:
      out->set_letter(q, want_x ? Pauli::X : Pauli::Z);
      out->set_phase_exp(2);
      return;
    case CliffordKind::Z:
      out->set_letter(q, want_x ? Pauli::X : Pauli::Z);
      if (want_x) out->set_phase_exp(2);
      return;
    case CliffordKind::CNOT: {
      // X_c -> X_c X_t, Z_t -> Z_c Z_t; X_t and Z_c are untouched.
      if (want_x) {
        out->set_letter(q, Pauli::X);
        if (q == g.q0) out->set_letter(g.q1, Pauli::X);
      } else {
        out->set_letter(q, Pauli::Z);
        if (q == g.q1) out->set_letter(g.q0, Pauli::Z);
      }
      return;
    }
    case CliffordKind::CZ: {
      // X on either qubit picks up Z on the other; Z is untouched.
      out->set_letter(q, want_x ? Pauli::X : Pauli::Z);
      if (want_x) out->set_letter(q == g.q0 ? g.q1 : g.q0, Pauli::Z);
      return;
    }
  }
  throw std::logic_error("invalid Clifford kind");
}

}  // namespace

PauliString conjugate_by_clifford(const PauliString& p,
                                  const CliffordGate& g) {
  const unsigned n = p.size();
  std::vector<unsigned> targets = {g.q0};
  if (g.kind == CliffordKind::CNOT || g.kind == CliffordKind::CZ) {
    targets.push_back(g.q1);
  }

  // Split off the letters on the gate's qubits, expanding Y as iXZ so the
  // remainder is a product of plain X and Z generators in a fixed order.
  PauliString result = p;
  std::vector<bool> xbit(targets.size()), zbit(targets.size());
  for (size_t k = 0; k < targets.size(); ++k) {
    Pauli l = p.letter(targets[k]);
    result.set_letter(targets[k], Pauli::I);
    xbit[k] = (l == Pauli::X || l == Pauli::Y);
    zbit[k] = (l == Pauli::Z || l == Pauli::Y);
    if (l == Pauli::Y) result.set_phase_exp((result.phase_exp() + 1) & 3u);
  }
  PauliString img;
  for (size_t k = 0; k < targets.size(); ++k) {
    if (xbit[k]) {
      generator_image(g, targets[k], true, n, &img);
      result.multiply_right(img);
    }
    if (zbit[k]) {
      generator_image(g, targets[k], false, n, &img);
      result.multiply_right(img);
    }
  }
  return result;
}

PauliString conjugate_by_circuit(const PauliString& p,
                                 const std::vector<CliffordGate>& gates) {
  // U = g_k ... g_1, so images are taken innermost-first.
  PauliString out = p;
  for (const CliffordGate& g : gates) {
    out = conjugate_by_clifford(out, g);
  }
  return out;
}

}  // namespace mbqc
