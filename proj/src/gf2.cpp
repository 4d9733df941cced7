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

#include "mbqc/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace mbqc::gf2 {

namespace {

// Reduces [A | b] to row echelon form in place; returns the pivot column of
// each eliminated row. b may be empty (pure rank computation).
std::vector<unsigned> eliminate(Matrix& a, std::vector<uint8_t>* b) {
  std::vector<unsigned> pivot_cols;
  unsigned row = 0;
  for (unsigned col = 0; col < a.cols && row < a.rows; ++col) {
    unsigned pivot = row;
    while (pivot < a.rows && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows) continue;
    if (pivot != row) {
      for (unsigned c = 0; c < a.cols; ++c) {
        std::swap(a.at(row, c), a.at(pivot, c));
      }
      if (b) std::swap((*b)[row], (*b)[pivot]);
    }
    for (unsigned r = 0; r < a.rows; ++r) {
      if (r != row && a.at(r, col)) {
        a.xor_row(r, row);
        if (b) (*b)[r] ^= (*b)[row];
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

unsigned rank(Matrix m) {
  return static_cast<unsigned>(eliminate(m, nullptr).size());
}

std::optional<std::vector<uint8_t>> solve(Matrix a, std::vector<uint8_t> b) {
  if (b.size() != a.rows) throw std::invalid_argument("rhs size mismatch");
  std::vector<unsigned> pivot_cols = eliminate(a, &b);
  for (unsigned r = static_cast<unsigned>(pivot_cols.size()); r < a.rows;
       ++r) {
    if (b[r]) return std::nullopt;
  }
  std::vector<uint8_t> x(a.cols, 0);
  for (unsigned r = 0; r < pivot_cols.size(); ++r) {
    x[pivot_cols[r]] = b[r];
  }
  return x;
}

bool solution_is_unique(const Matrix& a, const std::vector<uint8_t>& b) {
  Matrix m = a;
  std::vector<uint8_t> rhs = b;
  std::vector<unsigned> pivot_cols = eliminate(m, &rhs);
  for (unsigned r = static_cast<unsigned>(pivot_cols.size()); r < m.rows;
       ++r) {
    if (rhs[r]) return false;
  }
  return pivot_cols.size() == m.cols;
}

}  // namespace mbqc::gf2
