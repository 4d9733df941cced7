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

#include "doctest.h"
#include "mbqc/pattern.hpp"
#include "mbqc/statevector.hpp"

using mbqc::BitExpr;
using mbqc::OutcomePolicy;
using mbqc::Pattern;
using mbqc::StateVector;

namespace {

// Independent check of the single teleport step: measuring the head of an
// entangled pair at angle w with outcome s leaves X^s H Uz(-w) applied.
void check_single_step(double omega, int s) {
  StateVector psi = mbqc::spanning_states(1).back();
  StateVector full = StateVector::kron(psi, StateVector(1));
  full.prep_plus(1);
  full.apply_cz(0, 1);
  OutcomePolicy pol = OutcomePolicy::force({s});
  full.measure_equatorial(0, omega, pol);
  StateVector got = full.factor_keep({1});

  StateVector expect = psi;
  expect.apply_uz(0, -omega);
  expect.apply_h(0);
  if (s) expect.apply_x(0);
  CHECK(got.approx_equal(expect));
}

}  // namespace

TEST_CASE("one teleport step applies X^s H Uz(-w)") {
  for (double omega : {0.0, 0.8, -1.9}) {
    check_single_step(omega, 0);
    check_single_step(omega, 1);
  }
}

TEST_CASE("derived byproducts match the hand-computed chain rules") {
  Pattern wire = mbqc::pattern_wire();
  CHECK(wire.byproduct.x == std::vector<BitExpr>{{0, {1}}});
  CHECK(wire.byproduct.z == std::vector<BitExpr>{{0, {0}}});

  Pattern xr = mbqc::pattern_xrot(0.4);
  CHECK(xr.byproduct.x == std::vector<BitExpr>{{0, {1}}});
  CHECK(xr.byproduct.z == std::vector<BitExpr>{{0, {0}}});

  Pattern zr = mbqc::pattern_zrot(1.1);
  CHECK(zr.byproduct.x == std::vector<BitExpr>{{0, {1}}});
  CHECK(zr.byproduct.z == std::vector<BitExpr>{{0, {0}}});

  Pattern eu = mbqc::pattern_euler(0.3, 0.9, -0.7);
  CHECK(eu.byproduct.x == std::vector<BitExpr>{{0, {1, 3}}});
  CHECK(eu.byproduct.z == std::vector<BitExpr>{{0, {0, 2}}});
}

TEST_CASE("every built-in pattern validates on all branches") {
  auto report = [](const Pattern& p, const mbqc::WireUnitary& u) {
    return mbqc::validate_pattern(p, u);
  };
  CHECK(report(mbqc::pattern_wire(), mbqc::unitary_identity(1)).branches ==
        4);
  CHECK(report(mbqc::pattern_xrot(0.4), mbqc::unitary_xrot(0.4)).branches ==
        4);
  CHECK(report(mbqc::pattern_zrot(-0.2), mbqc::unitary_zrot(-0.2)).branches ==
        4);
  CHECK(report(mbqc::pattern_euler(0.5, 1.2, -0.8),
               mbqc::unitary_euler(0.5, 1.2, -0.8))
            .branches == 16);
  CHECK(report(mbqc::pattern_cnot6(), mbqc::unitary_cnot()).branches == 16);
  CHECK(report(mbqc::pattern_remote_cz(), mbqc::unitary_cz()).branches == 4);
  CHECK(report(mbqc::pattern_cnot_square(), mbqc::unitary_cnot()).branches ==
        256);
}

TEST_CASE("a wrong byproduct rule is caught") {
  Pattern wire = mbqc::pattern_wire();
  wire.byproduct.x[0].deps = {0};  // swap the roles
  wire.byproduct.z[0].deps = {1};
  CHECK_THROWS_AS(mbqc::validate_pattern(wire, mbqc::unitary_identity(1)),
                  std::logic_error);
}

TEST_CASE("sampled runs are reproducible per seed") {
  Pattern p = mbqc::pattern_euler(0.5, 1.2, -0.8);
  StateVector in = mbqc::spanning_states(1).back();
  OutcomePolicy a = OutcomePolicy::sample(99);
  OutcomePolicy b = OutcomePolicy::sample(99);
  auto ra = run_pattern(p, in, a);
  auto rb = run_pattern(p, in, b);
  CHECK(ra.outcomes == rb.outcomes);
  for (size_t i = 0; i < ra.output.dim(); ++i) {
    CHECK(std::abs(ra.output.amplitude(i) - rb.output.amplitude(i)) == 0.0);
  }
}

TEST_CASE("zero-angle rotation behaves as a wire") {
  Pattern zr = mbqc::pattern_zrot(0.0);
  mbqc::ValidationReport r =
      mbqc::validate_pattern(zr, mbqc::unitary_identity(1));
  CHECK(r.branches == 4);
  CHECK(r.worst_fidelity_deficit <= 1e-10);
}

TEST_CASE("composing rotations forms the two-angle unit") {
  const double phi = 0.85, theta = -0.35;
  auto u_total = [&](StateVector& s) {
    s.apply_uz(0, phi);
    s.apply_ux(0, theta);
  };
  Pattern joined =
      mbqc::compose_patterns(mbqc::pattern_zrot(phi), mbqc::pattern_xrot(theta));
  CHECK(joined.graph.n == 5);
  CHECK(joined.measured_count() == 4);
  mbqc::validate_pattern(joined, u_total);

  Pattern unit = mbqc::eliminate_redundant_wires(joined);
  CHECK(unit.graph.n == 3);
  CHECK(unit.measured_count() == 2);
  mbqc::ValidationReport r = mbqc::validate_pattern(unit, u_total);
  CHECK(r.branches == 4);

  // The unit is the two-angle chain: measure the input at -phi, then the
  // middle qubit at theta with the first outcome steering the sign.
  REQUIRE(unit.plan.size() == 2);
  CHECK(unit.plan[0].qubit == 0);
  CHECK(unit.plan[0].angle.base == doctest::Approx(-phi));
  CHECK(unit.plan[0].angle.deps.empty());
  CHECK(unit.plan[1].angle.base == doctest::Approx(-theta));
  CHECK(unit.plan[1].angle.deps == std::vector<unsigned>{0});
  CHECK(unit.byproduct.x == std::vector<BitExpr>{{0, {unit.plan[1].qubit}}});
  CHECK(unit.byproduct.z == std::vector<BitExpr>{{0, {0}}});

  mbqc::ResourceCount rc = mbqc::resources(unit);
  CHECK(rc.total == 3);
  CHECK(rc.measured == 2);
  CHECK(rc.rows == 1);
  CHECK(rc.cols == 3);
}

TEST_CASE("composing wires stays a wire after cleanup") {
  Pattern two = mbqc::compose_patterns(mbqc::pattern_wire(),
                                       mbqc::pattern_wire());
  mbqc::validate_pattern(two, mbqc::unitary_identity(1));
  Pattern clean = mbqc::eliminate_redundant_wires(two);
  CHECK(clean.graph.n == 3);
  mbqc::validate_pattern(clean, mbqc::unitary_identity(1));
}

TEST_CASE("clifford composition conjugates the incoming byproduct") {
  Pattern twice =
      mbqc::compose_patterns(mbqc::pattern_cnot6(), mbqc::pattern_cnot6());
  mbqc::ValidationReport r =
      mbqc::validate_pattern(twice, mbqc::unitary_identity(2));
  CHECK(r.branches == 256);
}

TEST_CASE("pattern json round trip preserves behavior") {
  Pattern p = mbqc::pattern_euler(0.5, 1.2, -0.8);
  Pattern q = Pattern::from_json(p.to_json());
  CHECK(q.graph.edges == p.graph.edges);
  CHECK(q.inputs == p.inputs);
  CHECK(q.outputs == p.outputs);
  CHECK(q.byproduct.x == p.byproduct.x);
  CHECK(q.byproduct.z == p.byproduct.z);
  StateVector in = mbqc::spanning_states(1).back();
  OutcomePolicy a = OutcomePolicy::force({1, 0, 1, 1});
  OutcomePolicy b = OutcomePolicy::force({1, 0, 1, 1});
  auto ra = run_pattern(p, in, a);
  auto rb = run_pattern(q, in, b);
  CHECK(ra.outcomes == rb.outcomes);
  CHECK(ra.output.approx_equal(rb.output));
}

TEST_CASE("resource footprints of the built-in patterns") {
  auto rc = [](const Pattern& p) { return mbqc::resources(p); };
  CHECK(rc(mbqc::pattern_wire()).cols == 3);
  CHECK(rc(mbqc::pattern_wire()).rows == 1);
  CHECK(rc(mbqc::pattern_euler(1, 2, 3)).cols == 5);
  CHECK(rc(mbqc::pattern_euler(1, 2, 3)).total == 5);
  CHECK(rc(mbqc::pattern_euler(1, 2, 3)).measured == 4);
  CHECK(rc(mbqc::pattern_cnot6()).rows == 2);
  CHECK(rc(mbqc::pattern_cnot6()).cols == 3);
  CHECK(rc(mbqc::pattern_cnot_square()).rows == 5);
  CHECK(rc(mbqc::pattern_cnot_square()).cols == 3);
  CHECK(rc(mbqc::pattern_remote_cz()).rows == 4);
  CHECK(rc(mbqc::pattern_remote_cz()).cols == 1);
  CHECK(rc(mbqc::pattern_remote_cz()).measured == 2);
}
