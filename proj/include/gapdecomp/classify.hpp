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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "gapdecomp/funcspace.hpp"
#include "gapdecomp/oddsupp.hpp"

namespace gapdecomp {

// Normal forms of Boolean functions with arity gap 2, up to equivalence.
enum class BooleanGapKind {
  kParitySum,            // x1 + ... + xm + c, m >= 2
  kXYplusX,              // x1 x2 + x1 + c
  kMajority3,            // x1 x2 + x1 x3 + x2 x3 + c
  kMajority3PlusLinear,  // x1 x2 + x1 x3 + x2 x3 + x1 + x2 + c
};

const char* to_string(BooleanGapKind kind);

struct BooleanGapForm {
  BooleanGapKind kind;
  std::size_t m;  // number of essential variables
  std::uint32_t c;

  std::string to_string() const;
  // The form as an m-ary table over {0,1} -> Z2.
  FnTable table() const;
  bool operator==(const BooleanGapForm&) const = default;
};

struct BooleanClassification {
  std::size_t gap;                     // 1 or 2
  std::optional<BooleanGapForm> form;  // present iff gap == 2
};

// True when f, restricted to its essential variables, equals `form` up to a
// permutation of variables.
bool matches_boolean_form(const FnTable& f, const BooleanGapForm& form);

// Gap of a Boolean function {0,1}^n -> Z2 with at least two essential
// variables, with its normal form when the gap is 2. The verdict is
// cross-checked against arity_gap().
BooleanClassification classify_boolean(const FnTable& f);

// p(x) = a x^2 + b x + c over Z3, together with the constant d.
struct Z3Params {
  std::uint32_t a = 0, b = 0, c = 0, d = 0;

  // Position in the 81 parameter tuples, a most significant.
  std::uint32_t index() const { return ((a * 3 + b) * 3 + c) * 3 + d; }
  static Z3Params from_index(std::uint32_t index);
  std::string to_string() const;
  bool operator==(const Z3Params&) const = default;
};

inline constexpr std::uint32_t kZ3ParamCount = 81;

// A subset of Z3 under symmetric difference; letters embed as singletons.
class PowersetZ3 {
 public:
  constexpr PowersetZ3() = default;
  static constexpr PowersetZ3 singleton(std::uint32_t a) {
    return PowersetZ3(1u << (a % 3));
  }
  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr PowersetZ3 operator^(PowersetZ3 o) const {
    return PowersetZ3(mask_ ^ o.mask_);
  }
  constexpr PowersetZ3& operator^=(PowersetZ3 o) {
    mask_ ^= o.mask_;
    return *this;
  }
  constexpr bool is_singleton() const noexcept {
    return mask_ == 1 || mask_ == 2 || mask_ == 4;
  }
  // The letter of a singleton; InternalConsistencyError otherwise.
  std::uint32_t letter() const;
  constexpr bool operator==(const PowersetZ3&) const = default;

 private:
  constexpr explicit PowersetZ3(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

// f(x) evaluated from the residue-class formula for n mod 4, entirely in the
// symmetric-difference group over singletons of Z3.
std::uint32_t z3_eval(std::span<const Letter> x, const Z3Params& params);
// The table of z3_eval on Z3^n, n >= 4.
FnTable z3_build(std::size_t n, const Z3Params& params);

enum class Z3Verdict { kGap2, kGap1, kDegenerate };
const char* to_string(Z3Verdict verdict);

struct Z3Classification {
  Z3Verdict verdict;
  // Present for kGap2, and for constant tables (which belong to the family).
  std::optional<Z3Params> params;
  std::optional<std::size_t> gap;  // present iff essential_arity >= 2
  std::size_t essential_arity = 0;
};

// Classifies f: Z3^n -> Z3 for n >= 4 through its restriction to essential
// variables. Fewer than 4 essential variables is kDegenerate. Gap-2
// functions are matched against all 81 parameter tuples (for arity
// essential_arity); exactly one must match.
Z3Classification z3_classify(const FnTable& f);

// (a,b,c,d) -> (c+d, a+b+c+d, a+2b+c+d, d): phi at {0},{1},{2},{0,1,2} of
// the function built for n = 3 mod 4.
std::array<std::uint32_t, 4> z3_phi_of_params(const Z3Params& params);
Z3Params z3_params_of_phi(const std::array<std::uint32_t, 4>& phi);

}  // namespace gapdecomp
