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

#include <cmath>
#include <complex>

#include "doctest.h"
#include "mbqc/pauli.hpp"
#include "mbqc/statevector.hpp"

using mbqc::Complex;
using mbqc::OutcomePolicy;
using mbqc::PauliString;
using mbqc::StateVector;

namespace {
const double kR = 1.0 / std::sqrt(2.0);
const Complex kI{0, 1};
}  // namespace

TEST_CASE("qubit zero owns the most significant index bit") {
  StateVector s(2);
  s.apply_x(0);
  CHECK(std::abs(s.amplitude(0b10) - Complex{1}) < 1e-15);
  s.apply_x(1);
  CHECK(std::abs(s.amplitude(0b11) - Complex{1}) < 1e-15);
}

TEST_CASE("basic gate actions") {
  StateVector s(1);
  s.apply_h(0);
  CHECK(std::abs(s.amplitude(0) - kR) < 1e-15);
  CHECK(std::abs(s.amplitude(1) - kR) < 1e-15);
  s.apply_s(0);
  CHECK(std::abs(s.amplitude(1) - kR * kI) < 1e-15);

  StateVector t(2);
  t.apply_x(0);
  t.apply_cnot(0, 1);
  CHECK(std::abs(t.amplitude(0b11) - Complex{1}) < 1e-15);
  t.apply_h(0);
  t.apply_h(1);
  t.apply_cz(0, 1);
  // CZ on |--> flips the |11> corner from +1/2 to -1/2.
  CHECK(std::abs(t.amplitude(0b00) - Complex{0.5}) < 1e-15);
  CHECK(std::abs(t.amplitude(0b01) + Complex{0.5}) < 1e-15);
  CHECK(std::abs(t.amplitude(0b11) + Complex{0.5}) < 1e-15);
}

TEST_CASE("axis rotations agree with their closed forms") {
  const double theta = 0.7123;
  StateVector s(1);
  s.apply_h(0);
  s.apply_uz(0, theta);
  CHECK(std::abs(s.amplitude(0) - kR * std::exp(-kI * (theta / 2))) < 1e-12);
  CHECK(std::abs(s.amplitude(1) - kR * std::exp(kI * (theta / 2))) < 1e-12);

  // Ux = H Uz H.
  StateVector a(1);
  a.apply_ux(0, theta);
  StateVector b(1);
  b.apply_h(0);
  b.apply_uz(0, theta);
  b.apply_h(0);
  CHECK(a.approx_equal(b));
}

TEST_CASE("pauli string application tracks the exact phase") {
  StateVector a(1);
  a.apply_pauli_string(PauliString::parse("+Y"));
  StateVector b(1);
  b.apply_pauli_string(PauliString::parse("+iZ"));
  b.apply_pauli_string(PauliString::parse("+X"));
  // Y = i X Z, applied right to left.
  for (size_t i = 0; i < 2; ++i) {
    CHECK(std::abs(a.amplitude(i) - b.amplitude(i)) < 1e-15);
  }
}

TEST_CASE("deterministic measurements consume no randomness") {
  StateVector s(1);
  s.apply_h(0);
  OutcomePolicy pol = OutcomePolicy::force({});
  CHECK(s.measure_x(0, pol) == 0);
  s.apply_z(0);
  CHECK(s.measure_x(0, pol) == 1);
  CHECK(pol.consumed().empty());
}

TEST_CASE("random measurements replay bit-for-bit") {
  auto build = [] {
    StateVector s(2);
    s.apply_h(0);
    s.apply_cnot(0, 1);
    s.apply_ux(0, 0.3);
    return s;
  };
  StateVector sampled = build();
  OutcomePolicy sample = OutcomePolicy::sample(7);
  int s0 = sampled.measure_z(0, sample);
  int s1 = sampled.measure_x(1, sample);

  StateVector forced = build();
  OutcomePolicy replay = OutcomePolicy::force(sample.consumed());
  CHECK(forced.measure_z(0, replay) == s0);
  CHECK(forced.measure_x(1, replay) == s1);
  for (size_t i = 0; i < forced.dim(); ++i) {
    CHECK(std::abs(forced.amplitude(i) - sampled.amplitude(i)) == 0.0);
  }
}

TEST_CASE("equatorial measurement projects onto its own eigenstate") {
  const double omega = 1.234;
  StateVector s = StateVector::from_amplitudes(
      1, {kR, kR * std::exp(kI * omega)});
  OutcomePolicy pol = OutcomePolicy::force({});
  CHECK(s.measure_equatorial(0, omega, pol) == 0);
  CHECK(pol.consumed().empty());

  // The orthogonal equatorial state lands on outcome 1.
  StateVector t = StateVector::from_amplitudes(
      1, {kR, -kR * std::exp(kI * omega)});
  CHECK(t.measure_equatorial(0, omega, pol) == 1);
}

TEST_CASE("projector norms recover branch probabilities") {
  const double theta = 0.9;
  StateVector s(1);
  s.apply_h(0);
  s.apply_uz(0, theta);  // equatorial state at angle theta
  StateVector plus = s, minus = s;
  double p0 = plus.project_unnormalized(PauliString::parse("+X"), 0);
  double p1 = minus.project_unnormalized(PauliString::parse("+X"), 1);
  CHECK(std::abs(p0 - std::cos(theta / 2) * std::cos(theta / 2)) < 1e-12);
  CHECK(std::abs(p0 + p1 - 1.0) < 1e-12);
}

TEST_CASE("factoring splits product states and respects order") {
  StateVector a = StateVector::from_amplitudes(1, {0.6, 0.8});
  StateVector b = StateVector::from_amplitudes(
      1, {kR, kR * std::exp(kI * 0.25)});
  StateVector ab = StateVector::kron(a, b);
  CHECK(ab.factor_keep({0}).approx_equal(a));
  CHECK(ab.factor_keep({1}).approx_equal(b));
  // Swapped keep order transposes the two qubits.
  StateVector ba = ab.factor_keep({1, 0});
  CHECK(ba.approx_equal(StateVector::kron(b, a)));
}

TEST_CASE("factoring rejects an entangled cut") {
  StateVector bell(2);
  bell.apply_h(0);
  bell.apply_cnot(0, 1);
  CHECK_THROWS_AS(bell.factor_keep({0}), std::logic_error);
}

TEST_CASE("global phase is ignored by approximate equality") {
  StateVector a(1);
  a.apply_h(0);
  StateVector b = a;
  b.apply_pauli_string(PauliString::parse("+iI"));
  CHECK(a.approx_equal(b));
  StateVector c = a;
  c.apply_z(0);
  CHECK(!a.approx_equal(c));
}
