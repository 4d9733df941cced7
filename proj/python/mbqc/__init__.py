# Copyright 2026 The mbqc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""One-way and teleportation-based measurement computing.

Measurement patterns on graph states, teleportation gadgets, rewrite
traces between the two models, and minimal-depth schedules that prepare
graph states with two-qubit measurements.
"""

from ._core import (
    Graph,
    MeasurementSchedule,
    Pattern,
    ResourceCount,
    build_schedule,
    compose_patterns,
    cross_engine_agreement,
    eliminate_redundant_wires,
    execute_schedule,
    frame_walkthrough_blocks,
    map_trace,
    pattern_cnot6,
    pattern_cnot_square,
    pattern_euler,
    pattern_remote_cz,
    pattern_wire,
    pattern_xrot,
    pattern_zrot,
    rus_statistics,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "MeasurementSchedule",
    "Pattern",
    "ResourceCount",
    "build_schedule",
    "compose_patterns",
    "cross_engine_agreement",
    "eliminate_redundant_wires",
    "execute_schedule",
    "frame_walkthrough_blocks",
    "map_trace",
    "pattern_cnot6",
    "pattern_cnot_square",
    "pattern_euler",
    "pattern_remote_cz",
    "pattern_wire",
    "pattern_xrot",
    "pattern_zrot",
    "rus_statistics",
    "verify",
]
