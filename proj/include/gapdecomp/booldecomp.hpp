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
#include <vector>

#include "gapdecomp/funcspace.hpp"
#include "gapdecomp/identities.hpp"
#include "gapdecomp/oddsupp.hpp"

namespace gapdecomp {

// Canonical decompositions of oddsupp-determined functions into a Boolean
// group B = Z2^k. Each decomposition is a sum of layers; a layer adds
// coefficient * Theta_phi(x|_I) for every I subset of [n] with |I| = size.
// Over a Boolean group only the coefficient's parity matters.
struct Layer {
  std::size_t subset_size;
  BigInt coefficient;
  bool odd() const { return (coefficient & 1) != 0; }
};

enum class BoolForm {
  kOdd,      // n - |A| = 2t + 1 > 0, phi on P'_n(A)
  kEven,     // n - |A| = 2t > 0, phi on P(A) paired under S xor {0}
  kFitilde,  // all coefficients 1, sizes n-2, n-4, ..., phi on P'_n(A)
};

const char* to_string(BoolForm form);

std::vector<Layer> decomposition_layers(BoolForm form, std::uint32_t a_size,
                                        std::size_t n);

// x -> Theta_phi(x|_I) as an n-ary table.
FnTable theta_on_subset(const PhiMap& phi, std::size_t n, VarSubset vars);

// Right-hand sides of the canonical decompositions.
FnTable reconstruct_odd(const PhiMap& phi, std::size_t n);
FnTable reconstruct_even(const PhiMap& phi, std::size_t n);
FnTable reconstruct_fitilde(const PhiMap& phi, std::size_t n);

// The unique phi with reconstruct_odd(phi, n) == f.
PhiMap decompose_odd(const FnTable& f);
// The unique paired phi with reconstruct_even(phi, n) == f.
PhiMap decompose_even(const FnTable& f);

struct FitildeDecomposition {
  PhiMap phi;
  std::size_t rank;      // rank of the GF(2) system
  std::size_t unknowns;  // |P'_n(A)|
};

// Some phi with reconstruct_fitilde(phi, n) == f; free unknowns are set to
// zero. Requires n > max(|A|, 3).
FitildeDecomposition fitilde_decompose(const FnTable& f);

// Checks the preconditions of a form without solving. Throws
// PreconditionError naming the failed predicate.
void check_bool_form_applicable(BoolForm form, const FnTable& f);

}  // namespace gapdecomp
