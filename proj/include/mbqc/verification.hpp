// Copyright 2026 The mbqc Authors
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

// One named check inside a verification suite. A failing check does not
// abort its siblings, so a report always covers the whole suite.
struct VerifyCheck {
  std::string name;
  bool pass = false;
  unsigned branches = 0;              // outcome branches enumerated, 0 if n/a
  double worst_fidelity_deficit = 0;  // 1 - F against the intended map
  std::string detail;                 // counterexample or summary text
};

struct VerifySuite {
  std::string name;
  std::vector<VerifyCheck> checks;
  bool pass() const;
};

// Replays the cluster patterns (wire, both rotations, the six-qubit CNOT,
// the remote CZ) over every outcome branch and a spanning set of inputs,
// at several angles where the pattern takes one.
VerifySuite verify_patterns(double tol = 1e-10);

// Exercises the teleportation gadgets on all outcome branches: both
// teleport variants, the measured entangler resource, the CNOT and CZ
// procedures, and seeded repeat-until-success statistics.
VerifySuite verify_gadgets(double tol = 1e-10, uint64_t seed = 0);

// Validates the shipped rewrite traces step by step and checks that the
// CNOT trace toward the one-way model really ends on the six-qubit
// cluster pattern.
VerifySuite verify_mapping(double tol = 1e-10);

// Builds and executes measurement schedules for random graphs under both
// procedures, checking round disjointness, the depth bounds, and that the
// corrected execution reproduces the graph-state tableau.
VerifySuite verify_scheduler(uint64_t seed = 0, unsigned num_graphs = 50,
                             unsigned seeds_per_graph = 3);

std::vector<VerifySuite> verify_all(double tol = 1e-10, uint64_t seed = 0);

struct RusReport {
  unsigned runs = 0;
  double mean_attempts = 0;
  unsigned max_attempts = 0;
  double worst_fidelity_deficit = 0;
};

// Seeded repeat-until-success statistics for a fixed non-Clifford gate on
// random one-qubit inputs. Each attempt succeeds with probability 1/4, so
// the mean attempt count concentrates near 4.
RusReport rus_statistics(unsigned runs, uint64_t seed);

struct CrossEngineReport {
  bool pass = false;
  unsigned circuits = 0;
  unsigned measurements = 0;
  double worst_probability_gap = 0;
  std::string detail;  // first disagreement, empty while passing
};

// Runs random Clifford circuits with interleaved Pauli measurements on the
// dense and stabilizer engines. The tableau side never evolves: it measures
// the Heisenberg image of each observable instead, and its outcome is then
// forced onto the dense state so both engines walk the same branch. Every
// outcome probability must be 0, 1/2, or 1 and agree within tol.
CrossEngineReport cross_engine_agreement(unsigned circuits, uint64_t seed,
                                         double tol = 1e-10);

}  // namespace mbqc
