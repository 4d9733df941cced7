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

#include "mbqc/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace mbqc {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Mat2 mat2_h() {
  const double s = 1.0 / std::sqrt(2.0);
  return {Complex{s}, Complex{s}, Complex{s}, Complex{-s}};
}

Mat2 mat2_ux(double phi) {
  const double c = std::cos(phi / 2);
  const double s = std::sin(phi / 2);
  return {Complex{c}, -kI * s, -kI * s, Complex{c}};
}

Mat2 mat2_uz(double theta) {
  return {std::exp(-kI * (theta / 2)), Complex{0},
          Complex{0}, std::exp(kI * (theta / 2))};
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 mat2_dagger(const Mat2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

unsigned max_qubits() {
  static const unsigned cap = [] {
    if (const char* env = std::getenv("MBQC_MAX_QUBITS")) {
      long v = std::strtol(env, nullptr, 10);
      if (v >= 1 && v <= 30) return static_cast<unsigned>(v);
      throw std::runtime_error("MBQC_MAX_QUBITS must be between 1 and 30");
    }
    return 14u;
  }();
  return cap;
}

StateVector::StateVector(unsigned n) : n_(n) {
  if (n == 0 || n > max_qubits()) {
    throw std::invalid_argument("qubit count exceeds the configured cap");
  }
  amps_.assign(size_t{1} << n, Complex{0});
  amps_[0] = Complex{1};
}

StateVector StateVector::from_amplitudes(unsigned n,
                                         std::vector<Complex> amps) {
  StateVector s(n);
  if (amps.size() != s.amps_.size()) {
    throw std::invalid_argument("amplitude count does not match qubit count");
  }
  s.amps_ = std::move(amps);
  return s;
}

void StateVector::prep_plus(unsigned q) { apply_h(q); }

void StateVector::apply_h(unsigned q) { apply_mat2(q, mat2_h()); }

void StateVector::apply_x(unsigned q) {
  const size_t b = bit(q);
  for (size_t i = 0; i < amps_.size(); ++i) {
    if (!(i & b)) std::swap(amps_[i], amps_[i | b]);
  }
}

void StateVector::apply_y(unsigned q) {
  const size_t b = bit(q);
  for (size_t i = 0; i < amps_.size(); ++i) {
    if (!(i & b)) {
      Complex lo = amps_[i];
      amps_[i] = -kI * amps_[i | b];
      amps_[i | b] = kI * lo;
    }
  }
}

void StateVector::apply_z(unsigned q) {
  const size_t b = bit(q);
  for (size_t i = 0; i < amps_.size(); ++i) {
    if (i & b) amps_[i] = -amps_[i];
  }
}

void StateVector::apply_s(unsigned q) {
  const size_t b = bit(q);
  for (size_t i = 0; i < amps_.size(); ++i) {
    if (i & b) amps_[i] *= kI;
  }
}

void StateVector::apply_ux(unsigned q, double phi) {
  apply_mat2(q, mat2_ux(phi));
}

void StateVector::apply_uz(unsigned q, double theta) {
  apply_mat2(q, mat2_uz(theta));
}

void StateVector::apply_mat2(unsigned q, const Mat2& m) {
  const size_t b = bit(q);
  for (size_t i = 0; i < amps_.size(); ++i) {
    if (!(i & b)) {
      Complex lo = amps_[i];
      Complex hi = amps_[i | b];
      amps_[i] = m[0] * lo + m[1] * hi;
      amps_[i | b] = m[2] * lo + m[3] * hi;
    }
  }
}

void StateVector::apply_cz(unsigned a, unsigned b) {
  const size_t ba = bit(a), bb = bit(b);
  for (size_t i = 0; i < amps_.size(); ++i) {
    if ((i & ba) && (i & bb)) amps_[i] = -amps_[i];
  }
}

void StateVector::apply_cnot(unsigned control, unsigned target) {
  const size_t bc = bit(control), bt = bit(target);
  for (size_t i = 0; i < amps_.size(); ++i) {
    if ((i & bc) && !(i & bt)) std::swap(amps_[i], amps_[i | bt]);
  }
}

void StateVector::apply_clifford(const CliffordGate& g) {
  switch (g.kind) {
    case CliffordKind::H: apply_h(g.q0); return;
    case CliffordKind::S: apply_s(g.q0); return;
    case CliffordKind::X: apply_x(g.q0); return;
    case CliffordKind::Y: apply_y(g.q0); return;
    case CliffordKind::Z: apply_z(g.q0); return;
    case CliffordKind::CNOT: apply_cnot(g.q0, g.q1); return;
    case CliffordKind::CZ: apply_cz(g.q0, g.q1); return;
  }
  throw std::logic_error("invalid Clifford kind");
}

void StateVector::apply_pauli_string(const PauliString& p) {
  if (p.size() != n_) throw std::invalid_argument("operator size mismatch");
  for (unsigned q = 0; q < n_; ++q) {
    switch (p.letter(q)) {
      case Pauli::I: break;
      case Pauli::X: apply_x(q); break;
      case Pauli::Y: apply_y(q); break;
      case Pauli::Z: apply_z(q); break;
    }
  }
  if (p.phase_exp()) {
    Complex ph = std::pow(kI, static_cast<double>(p.phase_exp()));
    for (Complex& a : amps_) a *= ph;
  }
}

double StateVector::norm() const {
  double s = 0;
  for (const Complex& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  double nr = norm();
  if (nr < kDetTol) throw std::logic_error("cannot normalize a null state");
  for (Complex& a : amps_) a /= nr;
}

Complex StateVector::inner_product(const StateVector& other) const {
  if (other.n_ != n_) throw std::invalid_argument("qubit count mismatch");
  Complex s{0};
  for (size_t i = 0; i < amps_.size(); ++i) {
    s += std::conj(amps_[i]) * other.amps_[i];
  }
  return s;
}

double StateVector::fidelity(const StateVector& other) const {
  return std::norm(inner_product(other));
}

int StateVector::measure_pauli_product(const PauliString& obs,
                                       OutcomePolicy& policy) {
  if (obs.phase_exp() & 1u) {
    throw std::invalid_argument("observable must be Hermitian");
  }
  StateVector applied = *this;
  applied.apply_pauli_string(obs);
  double expectation = std::real(inner_product(applied));
  double p0 = std::clamp((1.0 + expectation) / 2.0, 0.0, 1.0);

  int outcome;
  if (p0 > 1.0 - kDetTol) {
    outcome = 0;
  } else if (p0 < kDetTol) {
    outcome = 1;
  } else {
    outcome = policy.next_bit(1.0 - p0);
  }

  const double sign = outcome == 0 ? 1.0 : -1.0;
  for (size_t i = 0; i < amps_.size(); ++i) {
    amps_[i] = 0.5 * (amps_[i] + sign * applied.amps_[i]);
  }
  normalize();
  return outcome;
}

int StateVector::measure_z(unsigned q, OutcomePolicy& policy) {
  return measure_pauli_product(PauliString(n_, q, Pauli::Z), policy);
}

int StateVector::measure_x(unsigned q, OutcomePolicy& policy) {
  return measure_pauli_product(PauliString(n_, q, Pauli::X), policy);
}

int StateVector::measure_equatorial(unsigned q, double omega,
                                    OutcomePolicy& policy) {
  // cos(w) X + sin(w) Y = Uz(w) X Uz(w)^dagger, so rotate the observable's
  // frame onto X, measure, and rotate back.
  apply_uz(q, -omega);
  int outcome = measure_x(q, policy);
  apply_uz(q, omega);
  return outcome;
}

double StateVector::project_unnormalized(const PauliString& obs,
                                         int outcome) {
  if (obs.phase_exp() & 1u) {
    throw std::invalid_argument("observable must be Hermitian");
  }
  StateVector applied = *this;
  applied.apply_pauli_string(obs);
  const double sign = outcome == 0 ? 1.0 : -1.0;
  for (size_t i = 0; i < amps_.size(); ++i) {
    amps_[i] = 0.5 * (amps_[i] + sign * applied.amps_[i]);
  }
  double nr = norm();
  return nr * nr;
}

StateVector StateVector::factor_keep(const std::vector<unsigned>& keep) const {
  std::vector<bool> kept(n_, false);
  for (unsigned q : keep) {
    if (q >= n_ || kept[q]) throw std::invalid_argument("bad keep list");
    kept[q] = true;
  }
  std::vector<unsigned> rest;
  for (unsigned q = 0; q < n_; ++q) {
    if (!kept[q]) rest.push_back(q);
  }
  const unsigned nk = static_cast<unsigned>(keep.size());
  const unsigned nr = static_cast<unsigned>(rest.size());
  const size_t dk = size_t{1} << nk;
  const size_t dr = size_t{1} << nr;

  // Full index for kept-assignment a and complement-assignment c, with bit
  // j of each ranging over the respective qubit lists in order.
  auto full_index = [&](size_t a, size_t c) {
    size_t idx = 0;
    for (unsigned j = 0; j < nk; ++j) {
      if ((a >> (nk - 1 - j)) & 1) idx |= bit(keep[j]);
    }
    for (unsigned j = 0; j < nr; ++j) {
      if ((c >> (nr - 1 - j)) & 1) idx |= bit(rest[j]);
    }
    return idx;
  };

  size_t best_a = 0, best_c = 0;
  double best = -1;
  for (size_t a = 0; a < dk; ++a) {
    for (size_t c = 0; c < dr; ++c) {
      double w = std::norm(amps_[full_index(a, c)]);
      if (w > best) {
        best = w;
        best_a = a;
        best_c = c;
      }
    }
  }
  if (best < kDetTol) throw std::logic_error("cannot factor a null state");

  std::vector<Complex> phi(dk), chi(dr);
  for (size_t a = 0; a < dk; ++a) phi[a] = amps_[full_index(a, best_c)];
  for (size_t c = 0; c < dr; ++c) chi[c] = amps_[full_index(best_a, c)];
  double phi_norm = 0, chi_norm = 0;
  for (const Complex& v : phi) phi_norm += std::norm(v);
  for (const Complex& v : chi) chi_norm += std::norm(v);
  phi_norm = std::sqrt(phi_norm);
  chi_norm = std::sqrt(chi_norm);
  for (Complex& v : phi) v /= phi_norm;
  for (Complex& v : chi) v /= chi_norm;

  // Align the product's phase with the anchor amplitude, then insist the
  // reconstruction matches everywhere.
  Complex anchor = amps_[full_index(best_a, best_c)];
  Complex recon_anchor = phi[best_a] * chi[best_c];
  Complex align = anchor / recon_anchor;
  align /= std::abs(align);
  for (Complex& v : phi) v *= align;

  double residual = 0;
  for (size_t a = 0; a < dk; ++a) {
    for (size_t c = 0; c < dr; ++c) {
      residual += std::norm(amps_[full_index(a, c)] - phi[a] * chi[c]);
    }
  }
  if (std::sqrt(residual) > kAmpTol * 10) {
    throw std::logic_error("state does not factor across the requested cut");
  }
  return from_amplitudes(nk, std::move(phi));
}

StateVector StateVector::kron(const StateVector& a, const StateVector& b) {
  StateVector out(a.n_ + b.n_);
  for (size_t i = 0; i < a.amps_.size(); ++i) {
    for (size_t j = 0; j < b.amps_.size(); ++j) {
      out.amps_[(i << b.n_) | j] = a.amps_[i] * b.amps_[j];
    }
  }
  return out;
}

bool StateVector::approx_equal(const StateVector& other) const {
  if (other.n_ != n_) return false;
  // Global-phase alignment on the largest amplitude.
  size_t anchor = 0;
  double best = -1;
  for (size_t i = 0; i < amps_.size(); ++i) {
    if (std::norm(amps_[i]) > best) {
      best = std::norm(amps_[i]);
      anchor = i;
    }
  }
  if (best < kDetTol) return false;
  if (std::norm(other.amps_[anchor]) < kDetTol) return false;
  Complex align = amps_[anchor] / other.amps_[anchor];
  align /= std::abs(align);
  double residual = 0;
  for (size_t i = 0; i < amps_.size(); ++i) {
    residual += std::norm(amps_[i] - align * other.amps_[i]);
  }
  return std::sqrt(residual) <= kAmpTol * 10;
}

}  // namespace mbqc
