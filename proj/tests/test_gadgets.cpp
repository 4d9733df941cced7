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

#include "doctest.h"

#include <cmath>
#include <random>

#include "mbqc/gadgets.hpp"
#include "mbqc/pattern.hpp"

using namespace mbqc;

namespace {

StateVector random_one_qubit(uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> amps = {{dist(gen), dist(gen)}, {dist(gen), dist(gen)}};
  double norm = std::sqrt(std::norm(amps[0]) + std::norm(amps[1]));
  for (auto& a : amps) a /= norm;
  return StateVector::from_amplitudes(1, amps);
}

Mat2 test_unitary() {
  // A generic (non-Clifford) rotation.
  return mat2_mul(mat2_uz(0.4), mat2_ux(0.9));
}

}  // namespace

TEST_CASE("bell measurement labels the four bell states") {
  for (int idx = 0; idx < 4; ++idx) {
    StateVector s = bell_pair();
    apply_sigma(s, 0, idx);
    OutcomePolicy pol = OutcomePolicy::force({});
    BellIndex j = bell_measure(s, 0, 1, pol);
    CHECK(j.index() == idx);  // both outcomes are deterministic
  }
}

TEST_CASE("generalized bell measurement recognizes its own basis") {
  Mat2 u = test_unitary();
  Mat2 udag = mat2_dagger(u);
  for (int idx = 0; idx < 4; ++idx) {
    StateVector s = bell_pair();
    apply_sigma(s, 0, idx);
    s.apply_mat2(0, udag);  // (u^dagger o I)|B_idx>
    OutcomePolicy pol = OutcomePolicy::force({});
    BellIndex j = gen_bell_measure(s, 0, 1, u, pol);
    CHECK(j.index() == idx);
  }
}

TEST_CASE("teleportation applies the unitary on every branch") {
  Mat2 u = test_unitary();
  for (uint64_t seed : {11u, 12u}) {
    StateVector psi = random_one_qubit(seed);
    for (bool rotate_ancilla : {true, false}) {
      auto leaves = enumerate_branches([&](OutcomePolicy& pol) {
        teleport_apply(psi, u, rotate_ancilla, pol);
      });
      REQUIRE(leaves.size() == 4);
      for (const auto& bits : leaves) {
        OutcomePolicy pol = OutcomePolicy::force(bits);
        TeleportResult t = teleport_apply(psi, u, rotate_ancilla, pol);
        StateVector expect = psi;
        if (rotate_ancilla) {
          // Rotated pair: u sigma_j |psi>.
          apply_sigma(expect, 0, t.j.index());
          expect.apply_mat2(0, u);
        } else {
          // Rotated basis: sigma_j u |psi>.
          expect.apply_mat2(0, u);
          apply_sigma(expect, 0, t.j.index());
        }
        CHECK(t.out.approx_equal(expect));
      }
    }
  }
}

TEST_CASE("repeat until success lands the unitary after failed rounds") {
  Mat2 u = test_unitary();
  StateVector psi = random_one_qubit(5);
  StateVector expect = psi;
  expect.apply_mat2(0, u);

  OutcomePolicy first = OutcomePolicy::force({0, 0});
  RusResult r1 = repeat_until_success(psi, u, first);
  CHECK(r1.attempts == 1);
  CHECK(r1.out.approx_equal(expect));

  // Two failures (indices 3 then 1), then the trivial outcome.
  OutcomePolicy third = OutcomePolicy::force({1, 0, 0, 1, 0, 0});
  RusResult r3 = repeat_until_success(psi, u, third);
  CHECK(r3.attempts == 3);
  CHECK(r3.out.approx_equal(expect));

  // The cap aborts a run that never succeeds.
  OutcomePolicy stuck = OutcomePolicy::force(std::vector<int>(8, 1));
  CHECK_THROWS_AS(repeat_until_success(psi, u, stuck, 4), std::runtime_error);
}

TEST_CASE("repeat until success takes four attempts on average") {
  Mat2 u = test_unitary();
  StateVector psi = random_one_qubit(7);
  double total = 0;
  const int runs = 400;
  for (int i = 0; i < runs; ++i) {
    OutcomePolicy pol = OutcomePolicy::sample(0x52555300u + i);
    total += repeat_until_success(psi, u, pol).attempts;
  }
  double mean = total / runs;
  CHECK(mean > 3.0);  // loose band; the acceptance run uses 10^4 samples
  CHECK(mean < 5.0);
}

TEST_CASE("the entangler resource has the expected amplitudes") {
  StateVector a = cnot_ancilla();
  for (size_t idx = 0; idx < 16; ++idx) {
    unsigned b0 = (idx >> 3) & 1, b1 = (idx >> 2) & 1;
    unsigned b2 = (idx >> 1) & 1, b3 = idx & 1;
    double expect = (b0 == b1 && b3 == (b0 ^ b2)) ? 0.5 : 0.0;
    CHECK(std::abs(a.amplitude(idx) - Complex(expect, 0)) < kAmpTol);
  }
  // Stabilized by XXIX, ZZII, IIXX, IZZZ: the +1 projectors keep the norm.
  for (const char* gen : {"+XXIX", "+ZZII", "+IIXX", "+IZZZ"}) {
    StateVector copy = a;
    CHECK(copy.project_unnormalized(PauliString::parse(gen), 0) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("three weight-2 measurements prepare the entangler resource") {
  StateVector target = cnot_ancilla();
  auto leaves = enumerate_branches(
      [](OutcomePolicy& pol) { cnot_ancilla_by_measurement(pol); });
  REQUIRE(leaves.size() == 8);  // three genuinely random outcomes
  for (const auto& bits : leaves) {
    OutcomePolicy pol = OutcomePolicy::force(bits);
    MeasuredPrep prep = cnot_ancilla_by_measurement(pol);
    REQUIRE(prep.transcript.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
      CHECK(prep.transcript[i].outcome == bits[i]);
      CHECK(!prep.transcript[i].deterministic);
      CHECK(prep.transcript[i].observable.weight() == 2);
    }
    CHECK(prep.state.approx_equal(target));
  }
  // The all-plus branch needs no correction.
  OutcomePolicy pol = OutcomePolicy::force({0, 0, 0});
  CHECK(cnot_ancilla_by_measurement(pol).correction.is_identity_letters());
}

TEST_CASE("the measurement gadget enacts a controlled-NOT on every branch") {
  for (const StateVector& psi : spanning_states(2)) {
    StateVector expect = psi;
    expect.apply_cnot(0, 1);
    auto leaves = enumerate_branches(
        [&](OutcomePolicy& pol) { cnot_via_ancilla(psi, pol); });
    REQUIRE(leaves.size() == 16);
    for (const auto& bits : leaves) {
      OutcomePolicy pol = OutcomePolicy::force(bits);
      CnotGadgetResult r = cnot_via_ancilla(psi, pol);
      CHECK(r.out.approx_equal(expect));
    }
  }
}

TEST_CASE("gadget corrections push the byproduct through the gate") {
  StateVector psi = spanning_states(2).front();
  // A lone Z on the control side commutes with the gate unchanged.
  OutcomePolicy pol = OutcomePolicy::force({1, 0, 0, 0});
  CnotGadgetResult r = cnot_via_ancilla(psi, pol);
  CHECK(r.i1.index() == 3);
  CHECK(r.i2.index() == 0);
  CHECK(r.correction.str() == "+ZI");
  // An X on the control side copies onto the target.
  OutcomePolicy pol2 = OutcomePolicy::force({0, 1, 0, 0});
  CnotGadgetResult r2 = cnot_via_ancilla(psi, pol2);
  CHECK(r2.i1.index() == 1);
  CHECK(r2.correction.str() == "+XX");
}

TEST_CASE("the shared-pair circuit performs a remote controlled-NOT") {
  for (const StateVector& psi : spanning_states(2)) {
    StateVector expect = psi;
    expect.apply_cnot(0, 1);
    auto leaves = enumerate_branches(
        [&](OutcomePolicy& pol) { remote_cnot_circuit(psi, pol); });
    REQUIRE(leaves.size() == 4);
    for (const auto& bits : leaves) {
      OutcomePolicy pol = OutcomePolicy::force(bits);
      CHECK(remote_cnot_circuit(psi, pol).approx_equal(expect));
    }
  }
}

TEST_CASE("every remote procedure matches its intended gate on all branches") {
  struct Row {
    CzProcedure proc;
    bool is_cnot;
    size_t branches;
  };
  const Row rows[] = {
      {CzProcedure::TwoAncilla, false, 16},
      {CzProcedure::OneAncillaPlus, false, 8},
      {CzProcedure::OneAncillaZero, false, 8},
      {CzProcedure::OneAncillaCnot, true, 8},
  };
  for (const Row& row : rows) {
    for (const StateVector& psi : spanning_states(2)) {
      StateVector expect = psi;
      if (row.is_cnot)
        expect.apply_cnot(0, 1);
      else
        expect.apply_cz(0, 1);
      auto leaves = enumerate_branches(
          [&](OutcomePolicy& pol) { run_cz_procedure(row.proc, psi, pol); });
      REQUIRE(leaves.size() == row.branches);
      for (const auto& bits : leaves) {
        OutcomePolicy pol = OutcomePolicy::force(bits);
        FrameResult r = run_cz_procedure(row.proc, psi, pol);
        CHECK(r.out.approx_equal(expect));
        for (const FrameStep& step : r.transcript)
          CHECK(!step.deterministic);
      }
    }
  }
}

TEST_CASE("the trivial-outcome frame needs no correction") {
  StateVector psi = spanning_states(2).front();
  OutcomePolicy pol = OutcomePolicy::force({0, 0, 0, 0});
  FrameResult r = run_cz_procedure(CzProcedure::TwoAncilla, psi, pol);
  CHECK(r.correction.is_identity_letters());
  REQUIRE(r.transcript.size() == 4);
  CHECK(r.transcript[0].observable.str() == "+ZXII");
  CHECK(r.transcript[3].observable.str() == "+IIZI");
}

TEST_CASE("walkthrough blocks replay the pinned golden frame") {
  auto blocks = frame_walkthrough_blocks();
  REQUIRE(blocks.size() == 5);
  CHECK(blocks[0] ==
        "At start\n"
        "S:\n"
        "  +IXZI\n"
        "  +IZXI\n"
        "tracked:\n"
        "  X_1: +XIII\n"
        "  Z_1: +ZIII\n"
        "  X_4: +IIIX\n"
        "  Z_4: +IIIZ\n");
  CHECK(blocks[1] ==
        "1a) Measure ZXII\n"
        "S:\n"
        "  +IXZI\n"
        "  +ZXII\n"
        "tracked:\n"
        "  X_1: +XZXI\n"
        "  Z_1: +ZIII\n"
        "  X_4: +IIIX\n"
        "  Z_4: +IIIZ\n");
  CHECK(blocks[2] ==
        "1b) Measure IIXZ\n"
        "S:\n"
        "  +IIXZ\n"
        "  +ZXII\n"
        "tracked:\n"
        "  X_1: +XZXI\n"
        "  Z_1: +ZIII\n"
        "  X_4: +IXZX\n"
        "  Z_4: +IIIZ\n");
  CHECK(blocks[3] ==
        "2a) Measure IZII\n"
        "S:\n"
        "  +IIXZ\n"
        "  +IZII\n"
        "tracked:\n"
        "  X_1: +XZXI\n"
        "  Z_1: +ZIII\n"
        "  X_4: +ZIZX\n"
        "  Z_4: +IIIZ\n");
  CHECK(blocks[4] ==
        "2b) Measure IIZI\n"
        "S:\n"
        "  +IIZI\n"
        "  +IZII\n"
        "tracked:\n"
        "  X_1: +XIIZ\n"
        "  Z_1: +ZIII\n"
        "  X_4: +ZIIX\n"
        "  Z_4: +IIIZ\n");
}
