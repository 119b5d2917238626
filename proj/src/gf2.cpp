// Copyright 2026 The gapdecomp Authors
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

#include "gapdecomp/gf2.hpp"

#include <utility>

#include "gapdecomp/errors.hpp"

namespace gapdecomp {

Gf2System::Gf2System(std::size_t equations, std::size_t unknowns,
                     std::size_t rhs_columns)
    : unknowns_(unknowns),
      rhs_columns_(rhs_columns),
      coeffs_(equations, Gf2Vector(unknowns)),
      rhs_(equations, Gf2Vector(rhs_columns)) {}

void Gf2System::set_coefficient(std::size_t row, std::size_t col, bool value) {
  coeffs_.at(row).set(col, value);
}

void Gf2System::flip_coefficient(std::size_t row, std::size_t col) {
  coeffs_.at(row).flip(col);
}

bool Gf2System::coefficient(std::size_t row, std::size_t col) const {
  return coeffs_.at(row).test(col);
}

void Gf2System::set_rhs(std::size_t row, std::size_t column, bool value) {
  rhs_.at(row).set(column, value);
}

Gf2System::Solution Gf2System::solve() const {
  auto a = coeffs_;
  auto b = rhs_;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < unknowns_ && row < a.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.size() && !a[pivot].test(col)) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[row]);
    std::swap(b[pivot], b[row]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r != row && a[r].test(col)) {
        a[r] ^= a[row];
        b[r] ^= b[row];
      }
    }
    pivot_col.push_back(col);
    ++row;
  }

  Solution out;
  out.rank = row;
  for (std::size_t r = row; r < a.size(); ++r) {
    if (b[r].any()) out.consistent = false;
  }
  out.columns.assign(rhs_columns_, Gf2Vector(unknowns_));
  for (std::size_t r = 0; r < row; ++r) {
    for (std::size_t c = 0; c < rhs_columns_; ++c) {
      out.columns[c].set(pivot_col[r], b[r].test(c));
    }
  }
  return out;
}

}  // namespace gapdecomp
