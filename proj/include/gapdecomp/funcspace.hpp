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
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gapdecomp/group.hpp"

namespace gapdecomp {

// A letter of the alphabet A = {0, ..., a_size - 1}. Letter 0 is the
// distinguished element 0_A.
using Letter = std::uint32_t;
using Tuple = std::vector<Letter>;

// Largest number of variables a VarSubset can address.
inline constexpr std::size_t kMaxArity = 31;

// A set of variable positions. Positions are 0-based in the API; the text
// form is 1-based, e.g. "{1,3}".
class VarSubset {
 public:
  constexpr VarSubset() = default;
  constexpr explicit VarSubset(std::uint32_t mask) : mask_(mask) {}

  static VarSubset of(std::initializer_list<std::size_t> positions);
  static VarSubset all(std::size_t n);

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr bool contains(std::size_t i) const noexcept {
    return i < 32 && ((mask_ >> i) & 1u) != 0;
  }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(mask_));
  }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr bool is_subset_of(VarSubset other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }
  std::vector<std::size_t> positions() const;
  std::string to_string() const;

  constexpr bool operator==(const VarSubset&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

// Dense value table of f: A^n -> B. Tuples are indexed little-endian in
// mixed radix: index(x) = sum_i x_i * a_size^i (x_1 least significant).
class FnTable {
 public:
  FnTable(std::uint32_t a_size, std::size_t arity, AbelianGroup group,
          std::vector<GroupElement> values);

  static FnTable constant(std::uint32_t a_size, std::size_t arity,
                          const AbelianGroup& group, const GroupElement& c);

  // Tabulates fn(x) for every x in A^n.
  template <class Fn>
  static FnTable tabulate(std::uint32_t a_size, std::size_t arity,
                          const AbelianGroup& group, Fn&& fn) {
    const std::size_t n = table_size(a_size, arity);
    std::vector<GroupElement> values;
    values.reserve(n);
    Tuple x(arity, 0);
    for (std::size_t idx = 0; idx < n; ++idx) {
      values.push_back(fn(std::as_const(x)));
      advance(x, a_size);
    }
    return FnTable(a_size, arity, group, std::move(values));
  }

  // a_size^arity, or ResourceError past the supported table size.
  static std::size_t table_size(std::uint32_t a_size, std::size_t arity);
  // Odometer step in index order; returns false after the last tuple.
  static bool advance(Tuple& x, std::uint32_t a_size);

  std::uint32_t a_size() const noexcept { return a_size_; }
  std::size_t arity() const noexcept { return arity_; }
  const AbelianGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<GroupElement>& values() const noexcept { return values_; }

  // a_size^i.
  std::size_t stride(std::size_t i) const { return strides_.at(i); }
  std::size_t index_of(std::span<const Letter> x) const;
  Tuple tuple_at(std::size_t index) const;
  // Letter at position i of the tuple with the given index.
  Letter letter_at(std::size_t index, std::size_t i) const {
    return static_cast<Letter>((index / strides_[i]) % a_size_);
  }

  const GroupElement& at(std::size_t index) const { return values_.at(index); }
  GroupElement eval(std::span<const Letter> x) const;
  GroupElement eval(std::initializer_list<Letter> x) const {
    return eval(std::span<const Letter>(x.begin(), x.size()));
  }

  bool is_zero() const;
  bool same_shape(const FnTable& other) const noexcept;

  bool operator==(const FnTable& other) const;

 private:
  std::uint32_t a_size_;
  std::size_t arity_;
  AbelianGroup group_;
  std::vector<std::size_t> strides_;
  std::vector<GroupElement> values_;
};

// Pointwise sum and difference of same-shape tables.
FnTable operator+(const FnTable& f, const FnTable& g);
FnTable operator-(const FnTable& f, const FnTable& g);

// g(x_1..x_m) = f(x_{sigma(1)}, ..., x_{sigma(n)}), sigma 0-based.
FnTable simple_minor(const FnTable& f, std::span<const std::size_t> sigma,
                     std::size_t m);

// f with its i-th argument replaced by its j-th (0-based, i != j).
FnTable identification_minor(const FnTable& f, std::size_t i, std::size_t j);

VarSubset essential_variables(const FnTable& f);
std::size_t essential_arity(const FnTable& f);
bool is_essential(const FnTable& f, std::size_t i);

// Minimum drop in essential arity over identifications of two essential
// variables. PreconditionError when fewer than two variables are essential.
std::size_t arity_gap(const FnTable& f);

bool is_totally_symmetric(const FnTable& f);

// The table restricted to its essential coordinates, in increasing order.
FnTable reduce_to_essential(const FnTable& f);

}  // namespace gapdecomp
