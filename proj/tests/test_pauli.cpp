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

#include <vector>

#include "doctest.h"
#include "mbqc/gf2.hpp"
#include "mbqc/pauli.hpp"
#include "mbqc/policy.hpp"
#include "oracles.hpp"

using mbqc::CliffordGate;
using mbqc::CliffordKind;
using mbqc::Pauli;
using mbqc::PauliString;

TEST_CASE("parse and print round trip") {
  for (const char* s : {"+IXYZ", "-XZ", "+iY", "-iZZX", "+I"}) {
    CHECK(PauliString::parse(s).str() == s);
  }
  CHECK(PauliString::parse("XYZ").str() == "+XYZ");
  CHECK_THROWS(PauliString::parse("+AB"));
}

TEST_CASE("single-letter products carry the cyclic phases") {
  auto prod = [](const char* a, const char* b) {
    return (PauliString::parse(a) * PauliString::parse(b)).str();
  };
  CHECK(prod("+X", "+Y") == "+iZ");
  CHECK(prod("+Y", "+Z") == "+iX");
  CHECK(prod("+Z", "+X") == "+iY");
  CHECK(prod("+Y", "+X") == "-iZ");
  CHECK(prod("+Z", "+Y") == "-iX");
  CHECK(prod("+X", "+Z") == "-iY");
  CHECK(prod("+X", "+X") == "+I");
  CHECK(prod("-Y", "+Y") == "-I");
}

TEST_CASE("every two-letter product matches the matrix oracle") {
  const Pauli letters[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  for (Pauli a0 : letters) {
    for (Pauli a1 : letters) {
      for (Pauli b0 : letters) {
        for (Pauli b1 : letters) {
          PauliString a(2);
          a.set_letter(0, a0);
          a.set_letter(1, a1);
          PauliString b(2);
          b.set_letter(0, b0);
          b.set_letter(1, b1);
          PauliString c = a * b;
          oracle::Mat expect =
              oracle::mul(oracle::pauli_matrix(a), oracle::pauli_matrix(b));
          CHECK(oracle::approx(oracle::pauli_matrix(c), expect));
          CHECK(a.commutes_with(b) ==
                oracle::approx(expect, oracle::mul(oracle::pauli_matrix(b),
                                                   oracle::pauli_matrix(a))));
        }
      }
    }
  }
}

TEST_CASE("known multi-qubit products") {
  CHECK((PauliString::parse("+XX") * PauliString::parse("+ZZ")).str() ==
        "-YY");
  CHECK((PauliString::parse("+XZ") * PauliString::parse("+ZX")).str() ==
        "+YY");
  CHECK(PauliString::parse("+XX").commutes_with(PauliString::parse("+ZZ")));
  CHECK(!PauliString::parse("+XI").commutes_with(PauliString::parse("+ZI")));
}

TEST_CASE("conjugation by each generator matches U P U^dagger") {
  const Pauli letters[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  std::vector<CliffordGate> gates = {
      {CliffordKind::H, 0},       {CliffordKind::S, 0},
      {CliffordKind::X, 0},       {CliffordKind::Y, 0},
      {CliffordKind::Z, 0},       {CliffordKind::H, 1},
      {CliffordKind::S, 1},       {CliffordKind::CNOT, 0, 1},
      {CliffordKind::CNOT, 1, 0}, {CliffordKind::CZ, 0, 1},
  };
  for (const CliffordGate& g : gates) {
    oracle::Mat u = oracle::clifford_matrix(g, 2);
    oracle::Mat udag = oracle::dagger(u);
    for (Pauli p0 : letters) {
      for (Pauli p1 : letters) {
        for (uint8_t phase : {0, 1, 2, 3}) {
          PauliString p(2);
          p.set_letter(0, p0);
          p.set_letter(1, p1);
          p.set_phase_exp(phase);
          PauliString q = conjugate_by_clifford(p, g);
          oracle::Mat expect =
              oracle::mul(u, oracle::mul(oracle::pauli_matrix(p), udag));
          CHECK(oracle::approx(oracle::pauli_matrix(q), expect));
        }
      }
    }
  }
}

TEST_CASE("spot images used throughout the codebase") {
  auto img = [](const char* p, const CliffordGate& g) {
    return conjugate_by_clifford(PauliString::parse(p), g).str();
  };
  CHECK(img("+X", {CliffordKind::H, 0}) == "+Z");
  CHECK(img("+Y", {CliffordKind::H, 0}) == "-Y");
  CHECK(img("+X", {CliffordKind::S, 0}) == "+Y");
  CHECK(img("+Y", {CliffordKind::S, 0}) == "-X");
  CHECK(img("+XI", {CliffordKind::CNOT, 0, 1}) == "+XX");
  CHECK(img("+IZ", {CliffordKind::CNOT, 0, 1}) == "+ZZ");
  CHECK(img("+IX", {CliffordKind::CNOT, 0, 1}) == "+IX");
  CHECK(img("+ZI", {CliffordKind::CNOT, 0, 1}) == "+ZI");
  CHECK(img("+XI", {CliffordKind::CZ, 0, 1}) == "+XZ");
  CHECK(img("+IX", {CliffordKind::CZ, 0, 1}) == "+ZX");
}

TEST_CASE("circuit conjugation folds gates innermost first") {
  // H then S sends X to H:Z, then S leaves Z fixed.
  std::vector<CliffordGate> hs = {{CliffordKind::H, 0}, {CliffordKind::S, 0}};
  CHECK(conjugate_by_circuit(PauliString::parse("+X"), hs).str() == "+Z");
  // S then H sends X to Y to -Y.
  std::vector<CliffordGate> sh = {{CliffordKind::S, 0}, {CliffordKind::H, 0}};
  CHECK(conjugate_by_circuit(PauliString::parse("+X"), sh).str() == "-Y");
}

TEST_CASE("gf2 solve finds the unique affine fit") {
  // y = 1 + s0 + s2 over all eight inputs.
  mbqc::gf2::Matrix a(8, 4);
  std::vector<uint8_t> b(8);
  for (unsigned r = 0; r < 8; ++r) {
    unsigned s0 = r & 1, s1 = (r >> 1) & 1, s2 = (r >> 2) & 1;
    a.at(r, 0) = 1;
    a.at(r, 1) = static_cast<uint8_t>(s0);
    a.at(r, 2) = static_cast<uint8_t>(s1);
    a.at(r, 3) = static_cast<uint8_t>(s2);
    b[r] = static_cast<uint8_t>(1 ^ s0 ^ s2);
  }
  auto x = mbqc::gf2::solve(a, b);
  REQUIRE(x.has_value());
  CHECK(*x == std::vector<uint8_t>{1, 1, 0, 1});
  CHECK(mbqc::gf2::solution_is_unique(a, b));

  // An inconsistent right-hand side (XOR of two bits is not affine-free).
  b[3] ^= 1;
  CHECK(!mbqc::gf2::solve(a, b).has_value());
}

TEST_CASE("gf2 rank") {
  mbqc::gf2::Matrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(2, 0) = 1;
  m.at(2, 1) = 1;
  CHECK(mbqc::gf2::rank(m) == 2);
}

TEST_CASE("forced outcome policies replay and guard exhaustion") {
  mbqc::OutcomePolicy p = mbqc::OutcomePolicy::force({1, 0, 1});
  CHECK(p.next_bit() == 1);
  CHECK(p.next_bit() == 0);
  CHECK(p.next_bit() == 1);
  CHECK_THROWS_AS(p.next_bit(), std::out_of_range);

  mbqc::OutcomePolicy q = mbqc::OutcomePolicy::force_extended({1});
  CHECK(q.next_bit() == 1);
  CHECK(q.next_bit() == 0);
  CHECK(q.next_bit() == 0);
  CHECK(q.consumed() == std::vector<int>{1, 0, 0});
}

TEST_CASE("sampling is reproducible per seed") {
  mbqc::OutcomePolicy a = mbqc::OutcomePolicy::sample(12345);
  mbqc::OutcomePolicy b = mbqc::OutcomePolicy::sample(12345);
  for (int i = 0; i < 64; ++i) CHECK(a.next_bit() == b.next_bit());
  mbqc::OutcomePolicy c = mbqc::OutcomePolicy::sample(54321);
  bool differs = false;
  for (int i = 0; i < 64; ++i) {
    if (c.next_bit() != a.consumed()[static_cast<size_t>(i)]) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("branch enumeration walks the whole outcome tree") {
  // Two coin flips, but the second only happens when the first lands 1.
  auto runs = mbqc::enumerate_branches([](mbqc::OutcomePolicy& p) {
    if (p.next_bit() == 1) p.next_bit();
  });
  REQUIRE(runs.size() == 3);
  CHECK(runs[0] == std::vector<int>{0});
  CHECK(runs[1] == std::vector<int>{1, 0});
  CHECK(runs[2] == std::vector<int>{1, 1});
}
