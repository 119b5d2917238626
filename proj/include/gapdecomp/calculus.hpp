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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gapdecomp/errors.hpp"
#include "gapdecomp/funcspace.hpp"

namespace gapdecomp {

// Differentiation variables I and parameter tuple a. Components of `params`
// outside `vars` are ignored.
struct DerivativeSpec {
  VarSubset vars;
  Tuple params;
};

// x -> f(x with x_i := a) - f(x).
FnTable partial_derivative(const FnTable& f, std::size_t i, Letter a);

// Delta_I^a f as iterated single derivatives in ascending variable order.
FnTable higher_derivative_iterated(const FnTable& f, const DerivativeSpec& spec);
// Delta_I^a f as sum over J subset of I of (-1)^{|I \ J|} f(x_J^a).
FnTable higher_derivative_alternating(const FnTable& f,
                                      const DerivativeSpec& spec);
// Both of the above; InternalConsistencyError if they differ.
FnTable higher_derivative(const FnTable& f, const DerivativeSpec& spec);

// Delta_I^a f evaluated at `base` (all zeros when empty), streaming the
// alternating sum over the 2^|I| subsets of I.
GroupElement derivative_at(const FnTable& f, const DerivativeSpec& spec,
                           std::span<const Letter> base = {});
GroupElement derivative_at_zero(const FnTable& f, const DerivativeSpec& spec);

struct TaylorTerm {
  VarSubset vars;
  FnTable table;
};

// Largest arity for which all 2^n Taylor terms are materialized.
inline constexpr std::size_t kMaxTaylorArity = 16;

// For every I (ascending mask), the table x -> Delta_I^x f(base).
// Their sum is f.
std::vector<TaylorTerm> taylor_terms(const FnTable& f,
                                     std::span<const Letter> base = {});

// A nonvanishing derivative Delta_I^a f(base) with |I| > k.
struct Violation {
  VarSubset vars;
  Tuple params;  // zeros outside vars
  GroupElement value;
};

struct Decomposability {
  bool decomposable = true;
  std::optional<Violation> witness;
};

// Decides k-decomposability by the vanishing-derivative criterion. Subsets I
// are searched by decreasing size then ascending mask, parameters in
// mixed-radix order over A^I; the first nonzero derivative is the witness.
Decomposability is_k_decomposable(const FnTable& f, std::size_t k,
                                  std::span<const Letter> base = {});

// max |I| with some Delta_I^a f(base) != 0; 0 when there is none.
std::size_t min_decomposition_arity(const FnTable& f,
                                    std::span<const Letter> base = {});

class NotDecomposableError : public PreconditionError {
 public:
  NotDecomposableError(const std::string& message, Violation witness)
      : PreconditionError(message), witness_(std::move(witness)) {}
  const Violation& witness() const noexcept { return witness_; }

 private:
  Violation witness_;
};

// The Taylor terms with |I| <= k, zero terms dropped (the I = {} term is
// always kept). Throws NotDecomposableError when f is not k-decomposable.
std::vector<TaylorTerm> decompose_via_taylor(const FnTable& f, std::size_t k);

}  // namespace gapdecomp
