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
#include <optional>
#include <vector>

namespace mbqc::gf2 {

// Dense GF(2) matrix, row-major, one byte per entry (values 0/1). Sizes in
// this library stay small (tens of rows), so no bit packing is needed.
struct Matrix {
  unsigned rows = 0;
  unsigned cols = 0;
  std::vector<uint8_t> data;

  Matrix() = default;
  Matrix(unsigned r, unsigned c) : rows(r), cols(c), data(r * c, 0) {}

  uint8_t& at(unsigned r, unsigned c) { return data[r * cols + c]; }
  uint8_t at(unsigned r, unsigned c) const { return data[r * cols + c]; }

  void xor_row(unsigned dst, unsigned src) {
    for (unsigned c = 0; c < cols; ++c) at(dst, c) ^= at(src, c);
  }
};

unsigned rank(Matrix m);

// Solves A x = b. Returns one solution (free variables set to 0), or
// nullopt if the system is inconsistent.
std::optional<std::vector<uint8_t>> solve(Matrix a, std::vector<uint8_t> b);

// True if A x = b has exactly one solution (consistent and full column rank).
bool solution_is_unique(const Matrix& a, const std::vector<uint8_t>& b);

}  // namespace mbqc::gf2
