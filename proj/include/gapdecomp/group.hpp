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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gapdecomp {

// Upper bound on the number of cyclic factors of a group presentation.
inline constexpr std::size_t kMaxFactors = 8;

// An element of Z_{m1} x ... x Z_{mk}, stored inline as its residue vector.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(std::initializer_list<std::uint32_t> residues);
  explicit GroupElement(const std::vector<std::uint32_t>& residues);

  std::size_t size() const noexcept { return size_; }
  std::uint32_t operator[](std::size_t i) const { return residues_[i]; }
  std::uint32_t& operator[](std::size_t i) { return residues_[i]; }
  std::vector<std::uint32_t> residues() const;

  bool operator==(const GroupElement& other) const noexcept;
  std::strong_ordering operator<=>(const GroupElement& other) const noexcept;

 private:
  std::array<std::uint32_t, kMaxFactors> residues_{};
  std::uint8_t size_ = 0;
};

// A finite abelian group presented as a direct product of cyclic groups.
// The empty presentation is the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<std::uint32_t> moduli);

  // Parses "Z2", "Z2xZ4", ... (case-insensitive). "trivial" and "1" give the
  // trivial group.
  static AbelianGroup parse(std::string_view text);

  const std::vector<std::uint32_t>& moduli() const noexcept { return moduli_; }
  std::size_t factors() const noexcept { return moduli_.size(); }
  // Number of elements. Throws ResourceError if it does not fit in 64 bits.
  std::uint64_t order() const;

  GroupElement zero() const;
  bool contains(const GroupElement& x) const noexcept;

  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement sub(const GroupElement& x, const GroupElement& y) const;
  GroupElement neg(const GroupElement& x) const;
  GroupElement scalar_mul(std::int64_t k, const GroupElement& x) const;
  bool is_zero(const GroupElement& x) const;

  std::uint64_t order_of(const GroupElement& x) const;
  std::uint64_t exponent() const;
  // e with exponent() == 2^e, if any.
  std::optional<unsigned> exponent_pow2() const;
  // Exponent divides 2.
  bool is_boolean() const;
  // Boolean and presented as Z2^k, the form GF(2) solving relies on.
  bool is_elementary_2() const noexcept;

  // All elements in mixed-radix order (first factor least significant).
  std::vector<GroupElement> elements() const;
  // Position of x in elements().
  std::uint64_t index_of(const GroupElement& x) const;
  GroupElement element_at(std::uint64_t index) const;

  // "1,2" for multi-factor groups, "3" for cyclic ones, "0" for trivial.
  std::string format(const GroupElement& x) const;
  GroupElement parse_element(std::string_view text) const;

  // Canonical presentation text, e.g. "Z2xZ4"; the trivial group prints "trivial".
  std::string to_string() const;

  bool operator==(const AbelianGroup& other) const = default;

 private:
  void check(const GroupElement& x) const;

  std::vector<std::uint32_t> moduli_;
};

}  // namespace gapdecomp
