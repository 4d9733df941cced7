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

#include "mbqc/verification.hpp"

#include <map>
#include <string>

#include "doctest.h"

using namespace mbqc;

namespace {

std::map<std::string, VerifyCheck> by_name(const VerifySuite& s) {
  std::map<std::string, VerifyCheck> m;
  for (const VerifyCheck& c : s.checks) m[c.name] = c;
  return m;
}

}  // namespace

TEST_CASE("the pattern suite replays every branch of the shipped patterns") {
  VerifySuite s = verify_patterns();
  REQUIRE(s.pass());
  auto m = by_name(s);
  REQUIRE(m.size() == 5);
  CHECK(m.at("wire").branches == 4);
  CHECK(m.at("xrot").branches == 4);
  CHECK(m.at("zrot").branches == 4);
  CHECK(m.at("cnot6").branches == 16);
  CHECK(m.at("remote_cz").branches == 4);
  for (const auto& [name, c] : m) {
    CHECK(c.worst_fidelity_deficit <= 1e-10);
  }
}

TEST_CASE("the gadget suite covers teleportation and the remote procedures") {
  VerifySuite s = verify_gadgets(1e-10, 5);
  for (const VerifyCheck& c : s.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
  auto m = by_name(s);
  CHECK(m.at("teleport_rotated_pair").branches == 4);
  CHECK(m.at("cnot_gadget").branches == 16);
  CHECK(m.at("cz_two_ancilla").branches == 16);
  CHECK(m.at("cz_one_ancilla_plus").branches == 8);
  CHECK(m.at("cnot_route_cost").detail ==
        "3 resource measurements + 2 Bell measurements = 5");
}

TEST_CASE("the mapping suite validates the shipped traces end to end") {
  VerifySuite s = verify_mapping();
  for (const VerifyCheck& c : s.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
  auto m = by_name(s);
  REQUIRE(m.size() == 5);
  CHECK(m.at("cnot_tqc_to_1wqc").detail ==
        "9 steps, ends on the six-qubit cluster pattern");
}

TEST_CASE("the scheduler suite executes random graphs under both procedures") {
  VerifySuite s = verify_scheduler(3, 8, 2);
  for (const VerifyCheck& c : s.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("suite aggregation reports any failing member") {
  VerifySuite s;
  s.name = "synthetic";
  s.checks.push_back({"good", true, 0, 0.0, ""});
  CHECK(s.pass());
  s.checks.push_back({"bad", false, 0, 0.5, "planted"});
  CHECK(!s.pass());
}

TEST_CASE("repeat-until-success statistics concentrate near four attempts") {
  RusReport r = rus_statistics(800, 11);
  CHECK(r.runs == 800);
  CHECK(r.mean_attempts > 3.0);
  CHECK(r.mean_attempts < 5.0);
  CHECK(r.max_attempts >= 2);
  CHECK(r.worst_fidelity_deficit <= 1e-10);
}

TEST_CASE("the two engines agree branch by branch on random circuits") {
  CrossEngineReport r = cross_engine_agreement(60, 17);
  CAPTURE(r.detail);
  REQUIRE(r.pass);
  CHECK(r.circuits == 60);
  CHECK(r.measurements >= 60);
  CHECK(r.worst_probability_gap <= 1e-10);
}

TEST_CASE("the cross-engine harness can fail and names the counterexample") {
  // An impossible tolerance forces the first measurement to be reported.
  CrossEngineReport r = cross_engine_agreement(3, 1, -1.0);
  CHECK(!r.pass);
  CHECK(r.circuits == 0);
  CHECK(r.measurements == 1);
  CHECK(!r.detail.empty());
}
