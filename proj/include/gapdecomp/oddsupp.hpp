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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gapdecomp/funcspace.hpp"
#include "gapdecomp/group.hpp"

namespace gapdecomp {

using BigInt = boost::multiprecision::cpp_int;

// Largest alphabet for which maps on the power set P(A) are materialized.
inline constexpr std::uint32_t kMaxPhiAlphabet = 16;

// A subset of the alphabet as a bitmask (bit a <=> letter a).
//
// Subsets order by (cardinality, mask); this is the key order used by phi
// files and by every linear system built over phi's domain.
class SubsetA {
 public:
  constexpr SubsetA() = default;
  constexpr explicit SubsetA(std::uint32_t mask) : mask_(mask) {}
  static SubsetA of(std::initializer_list<Letter> letters);

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(mask_));
  }
  constexpr bool contains(Letter a) const noexcept {
    return a < 32 && ((mask_ >> a) & 1u) != 0;
  }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  std::vector<Letter> letters() const;
  // "{0,2}", "{}" for the empty set.
  std::string to_string() const;

  constexpr bool operator==(const SubsetA&) const = default;
  constexpr std::strong_ordering operator<=>(const SubsetA& o) const noexcept {
    if (auto c = size() <=> o.size(); c != 0) return c;
    return mask_ <=> o.mask_;
  }

 private:
  std::uint32_t mask_ = 0;
};

// Letters occurring an odd number of times in x.
SubsetA oddsupp(std::uint32_t a_size, std::span<const Letter> x);

// Subsets of A whose size lies in {n, n-2, n-4, ...}, sorted.
std::vector<SubsetA> pn_prime(std::uint32_t a_size, std::size_t n);
bool in_pn_prime(SubsetA s, std::size_t n);

enum class PhiDomain {
  kPnPrime,     // keys: P'_n(A)
  kFullPaired,  // keys: P(A), with phi(S) = phi(S xor {0})
};

// A map phi from subsets of A into B, stored only on the keys its domain
// mandates. Reading outside those keys raises CoverageError.
class PhiMap {
 public:
  // All keys initialized to zero.
  static PhiMap pn_prime(std::uint32_t a_size, std::size_t n,
                         const AbelianGroup& group);
  static PhiMap full_paired(std::uint32_t a_size, const AbelianGroup& group);

  PhiDomain domain() const noexcept { return domain_; }
  // n for kPnPrime maps, 0 otherwise.
  std::size_t arity() const noexcept { return arity_; }
  std::uint32_t a_size() const noexcept { return a_size_; }
  const AbelianGroup& group() const noexcept { return group_; }

  std::vector<SubsetA> keys() const;
  bool has(SubsetA s) const noexcept;
  const GroupElement& at(SubsetA s) const;
  // For kFullPaired maps this also sets S xor {0}.
  void set(SubsetA s, const GroupElement& value);

  // The kPnPrime(n) map agreeing with this one on P'_n(A).
  PhiMap restrict_to_pn_prime(std::size_t n) const;
  // The kFullPaired extension of a kPnPrime map with n > a_size, using
  // phi(S) = phi(S xor {0}) for S outside P'_n(A).
  PhiMap pair_extension() const;

  PhiMap operator+(const PhiMap& other) const;
  bool operator==(const PhiMap& other) const;

 private:
  PhiMap(PhiDomain domain, std::size_t arity, std::uint32_t a_size,
         AbelianGroup group);

  PhiDomain domain_;
  std::size_t arity_;
  std::uint32_t a_size_;
  AbelianGroup group_;
  std::vector<std::optional<GroupElement>> entries_;
};

// The table x -> phi(oddsupp(x)) on A^n.
FnTable theta_table(const PhiMap& phi, std::size_t n);

// phi on P'_n(A) with theta_table(phi, n) == f, when f depends only on
// oddsupp. Decided by grouping tuples by oddsupp and, independently, by the
// symmetry criterion (totally symmetric and f(x1, x1, x3, ...) free of x1);
// disagreement raises InternalConsistencyError.
std::optional<PhiMap> is_determined_by_oddsupp(const FnTable& f);

// The symmetry-criterion route alone.
bool determined_by_symmetry_test(const FnTable& f);

// (s1 repeated 2r+1 times, s2, ..., s_{n-2r}) for S = {s1 < ... < s_{n-2r}};
// all zeros for S empty. oddsupp of the result is S.
Tuple canonical_representative(SubsetA s, std::size_t n);

// |B|^|P'_n(A)|.
BigInt count_determined(std::uint32_t a_size, std::size_t n,
                        const AbelianGroup& group);

}  // namespace gapdecomp
