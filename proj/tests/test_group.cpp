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

#include <gtest/gtest.h>

#include <numeric>

#include "gapdecomp/errors.hpp"
#include "gapdecomp/group.hpp"
#include "oracles.hpp"

namespace gapdecomp {
namespace {

TEST(Group, ParseAndPrint) {
  EXPECT_EQ(AbelianGroup::parse("Z2xZ4").moduli(), (std::vector<std::uint32_t>{2, 4}));
  EXPECT_EQ(AbelianGroup::parse("z2XZ2xz2").to_string(), "Z2xZ2xZ2");
  EXPECT_EQ(AbelianGroup::parse("trivial").order(), 1u);
  EXPECT_THROW(AbelianGroup::parse("Z1"), Error);
  EXPECT_THROW(AbelianGroup::parse("Z2x"), Error);
  EXPECT_THROW(AbelianGroup::parse("Q8"), Error);
}

TEST(Group, ElementText) {
  const auto g = AbelianGroup::parse("Z2xZ4");
  EXPECT_EQ(g.format(GroupElement{1, 2}), "1,2");
  EXPECT_EQ(g.parse_element("1,3"), (GroupElement{1, 3}));
  EXPECT_THROW(g.parse_element("1,4"), Error);
  EXPECT_THROW(g.parse_element("1"), Error);
  EXPECT_EQ(AbelianGroup::parse("Z5").format(GroupElement{3}), "3");
}

TEST(Group, Add) {
  const auto z4 = AbelianGroup::parse("Z4");
  EXPECT_EQ(z4.add(GroupElement{3}, GroupElement{3}), GroupElement{2});
  const auto g = AbelianGroup::parse("Z2xZ4");
  EXPECT_EQ(g.add(GroupElement{1, 2}, GroupElement{1, 2}), g.zero());
  for (const auto& x : g.elements()) EXPECT_EQ(g.add(x, g.zero()), x);
  EXPECT_THROW(g.add(GroupElement{1}, GroupElement{1, 2}), ShapeError);
}

TEST(Group, NegAndScalar) {
  const auto z3 = AbelianGroup::parse("Z3");
  EXPECT_EQ(z3.neg(GroupElement{1}), GroupElement{2});
  const auto z4 = AbelianGroup::parse("Z4");
  EXPECT_EQ(z4.scalar_mul(2, GroupElement{1}), GroupElement{2});
  // Oracle: -4 * 3 is the inverse of 3+3+3+3.
  GroupElement four_fold = z4.zero();
  for (int i = 0; i < 4; ++i) four_fold = z4.add(four_fold, GroupElement{3});
  EXPECT_EQ(z4.scalar_mul(-4, GroupElement{3}), z4.neg(four_fold));
  EXPECT_EQ(z4.scalar_mul(-4, GroupElement{3}), GroupElement{0});
  const auto g = AbelianGroup::parse("Z3xZ4");
  for (const auto& x : g.elements()) {
    EXPECT_EQ(g.scalar_mul(-1, x), g.neg(x));
    EXPECT_EQ(g.add(g.neg(x), x), g.zero());
    GroupElement acc = g.zero();
    for (int k = 0; k <= 7; ++k) {
      EXPECT_EQ(g.scalar_mul(k, x), acc);
      acc = g.add(acc, x);
    }
  }
}

TEST(Group, Orders) {
  const auto z4 = AbelianGroup::parse("Z4");
  EXPECT_EQ(z4.order_of(GroupElement{1}), 4u);
  const auto g = AbelianGroup::parse("Z2xZ4");
  EXPECT_EQ(g.order_of(GroupElement{1, 2}), 2u);
  EXPECT_EQ(oracle::order_by_iteration(g, GroupElement{1, 2}), 2u);
  EXPECT_EQ(g.order_of(g.zero()), 1u);
}

TEST(Group, Exponent) {
  const auto g = AbelianGroup::parse("Z2xZ4");
  EXPECT_EQ(g.exponent(), 4u);
  EXPECT_EQ(g.exponent_pow2(), 2u);
  const auto z3 = AbelianGroup::parse("Z3");
  EXPECT_EQ(z3.exponent(), 3u);
  EXPECT_FALSE(z3.exponent_pow2().has_value());
  const auto v4 = AbelianGroup::parse("Z2xZ2");
  EXPECT_EQ(v4.exponent(), 2u);
  EXPECT_EQ(v4.exponent_pow2(), 1u);
  EXPECT_TRUE(v4.is_boolean());
  EXPECT_TRUE(v4.is_elementary_2());
  EXPECT_FALSE(g.is_boolean());
  EXPECT_EQ(AbelianGroup().exponent(), 1u);
  EXPECT_TRUE(AbelianGroup().is_boolean());
}

TEST(Group, IndexRoundTrip) {
  const auto g = AbelianGroup::parse("Z3xZ2xZ5");
  const auto all = g.elements();
  ASSERT_EQ(all.size(), 30u);
  for (std::uint64_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(g.index_of(all[i]), i);
    EXPECT_EQ(g.element_at(i), all[i]);
  }
}

// Orders agree with iterated addition, and the exponent is the largest
// element order, for every group with at most 64 elements built from small
// cyclic factors.
TEST(GroupProperty, OrderAndExponentExhaustive) {
  const std::vector<std::vector<std::uint32_t>> presentations = {
      {2}, {3}, {4}, {6}, {8}, {2, 2}, {2, 4}, {3, 3}, {2, 3},
      {4, 4}, {2, 2, 2}, {2, 6}, {3, 6}, {2, 2, 4}, {2, 2, 2, 2}, {8, 8}, {64}};
  for (const auto& moduli : presentations) {
    const AbelianGroup g(moduli);
    ASSERT_LE(g.order(), 64u);
    std::uint64_t max_order = 1;
    for (const auto& x : g.elements()) {
      const auto ord = g.order_of(x);
      EXPECT_EQ(ord, oracle::order_by_iteration(g, x)) << g.to_string();
      EXPECT_TRUE(g.is_zero(g.scalar_mul(static_cast<std::int64_t>(ord), x)));
      for (std::uint64_t d = 1; d < ord; ++d) {
        EXPECT_FALSE(g.is_zero(g.scalar_mul(static_cast<std::int64_t>(d), x)));
      }
      max_order = std::max(max_order, ord);
    }
    EXPECT_EQ(g.exponent(), max_order) << g.to_string();
  }
}

TEST(GroupProperty, AddLawsExhaustive) {
  for (const auto* text : {"Z2xZ2", "Z4", "Z2xZ4", "Z3xZ3", "Z2xZ2xZ2xZ2", "Z16"}) {
    const auto g = AbelianGroup::parse(text);
    ASSERT_LE(g.order(), 16u);
    const auto all = g.elements();
    for (const auto& x : all) {
      for (const auto& y : all) {
        EXPECT_EQ(g.add(x, y), g.add(y, x));
        for (const auto& z : all) {
          EXPECT_EQ(g.add(g.add(x, y), z), g.add(x, g.add(y, z)));
        }
      }
    }
  }
}

}  // namespace
}  // namespace gapdecomp
