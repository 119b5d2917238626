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
#include <string>

#include "gapdecomp/funcspace.hpp"
#include "gapdecomp/group.hpp"
#include "gapdecomp/oddsupp.hpp"

namespace gapdecomp {

enum class WitnessKind { kTightness, kHamming, kLargeAlphabet };

const char* to_string(WitnessKind kind);

// An oddsupp-determined function bundled with a derivative Delta_I^a f(0)
// that certifies it is not `refuted_k`-decomposable.
struct WitnessBundle {
  WitnessKind kind;
  PhiMap phi;  // on P'_n(A); table == theta_table(phi, n)
  FnTable table;
  VarSubset vars;
  Tuple params;
  GroupElement expected;
  std::size_t refuted_k;
};

// Recomputes the derivative and the decomposability verdict. True when the
// derivative equals `expected`, is nonzero, and the table is not
// refuted_k-decomposable.
bool verify(const WitnessBundle& w);

// A = {0..ell}, B of exponent 2^e, b of order 2^e, n >= ell + e - 1.
// phi(T) = b iff T contains A \ {0}. Not (|A| + e - 3)-decomposable, with
// derivative (-1)^{e-1} 2^{e-1} b.
WitnessBundle tightness_witness(std::uint32_t ell, unsigned e,
                                const AbelianGroup& group,
                                const GroupElement& b, std::size_t n);

// b of order not a power of 2. On {0,1}^n: b at even Hamming weight, 0
// otherwise; not (n-1)-decomposable, derivative (-1)^n 2^{n-1} b at a = 1.
// For a_size > 2 the function extends via phi(S) = b iff 1 is not in S.
WitnessBundle hamming_witness(std::size_t n, const AbelianGroup& group,
                              const GroupElement& b, std::uint32_t a_size = 2);

// a_size >= n + 1, b != 0: f(x) = b iff {x_1..x_n} = {1..n}. Not
// (n-1)-decomposable, derivative b at a = (1, ..., n).
WitnessBundle large_alphabet_witness(std::size_t n, std::uint32_t a_size,
                                     const AbelianGroup& group,
                                     const GroupElement& b);

}  // namespace gapdecomp
