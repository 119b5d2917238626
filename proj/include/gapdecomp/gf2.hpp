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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace gapdecomp {

using Gf2Vector = boost::dynamic_bitset<std::uint64_t>;

// M x = b over GF(2) with several right-hand sides solved together.
class Gf2System {
 public:
  Gf2System(std::size_t equations, std::size_t unknowns, std::size_t rhs_columns);

  std::size_t equations() const noexcept { return coeffs_.size(); }
  std::size_t unknowns() const noexcept { return unknowns_; }
  std::size_t rhs_columns() const noexcept { return rhs_columns_; }

  void set_coefficient(std::size_t row, std::size_t col, bool value);
  void flip_coefficient(std::size_t row, std::size_t col);
  bool coefficient(std::size_t row, std::size_t col) const;
  void set_rhs(std::size_t row, std::size_t column, bool value);

  struct Solution {
    std::size_t rank = 0;
    // Every column consistent.
    bool consistent = true;
    // One vector of unknowns per right-hand side; free unknowns are 0.
    std::vector<Gf2Vector> columns;
  };

  // Gauss-Jordan elimination on a copy of the system.
  Solution solve() const;

 private:
  std::size_t unknowns_;
  std::size_t rhs_columns_;
  std::vector<Gf2Vector> coeffs_;
  std::vector<Gf2Vector> rhs_;
};

}  // namespace gapdecomp
