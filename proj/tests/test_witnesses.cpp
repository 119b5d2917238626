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

#include "gapdecomp/calculus.hpp"
#include "gapdecomp/errors.hpp"
#include "gapdecomp/oddsupp.hpp"
#include "gapdecomp/witnesses.hpp"
#include "oracles.hpp"

namespace gapdecomp {
namespace {

const AbelianGroup kZ2({2});

TEST(Tightness, E1) {
  const auto w = tightness_witness(2, 1, kZ2, GroupElement{1}, 4);
  EXPECT_EQ(w.vars.size(), 2u);
  EXPECT_EQ(w.expected, GroupElement{1});
  EXPECT_EQ(w.refuted_k, 1u);
  EXPECT_TRUE(verify(w));
  EXPECT_TRUE(is_k_decomposable(w.table, 2).decomposable);
}

TEST(Tightness, E2) {
  const AbelianGroup z4({4});
  const auto w = tightness_witness(2, 2, z4, GroupElement{1}, 5);
  EXPECT_EQ(w.vars.size(), 3u);
  EXPECT_EQ(w.params, (Tuple{1, 2, 2, 0, 0}));
  EXPECT_EQ(w.expected, GroupElement{2});
  EXPECT_EQ(w.refuted_k, 2u);
  EXPECT_TRUE(verify(w));
  EXPECT_TRUE(is_k_decomposable(w.table, 3).decomposable);
  // #{J subset I : f(0_J^a) = b} = 2^{e-1}.
  int hits = 0;
  for (std::uint32_t j = 0; j < 8; ++j) {
    Tuple x(5, 0);
    for (std::size_t i = 0; i < 3; ++i) {
      if ((j >> i) & 1u) x[i] = w.params[i];
    }
    if (w.table.eval(x) == GroupElement{1}) ++hits;
  }
  EXPECT_EQ(hits, 2);
}

TEST(Tightness, Preconditions) {
  EXPECT_THROW(tightness_witness(2, 2, kZ2, GroupElement{1}, 5), ArgumentError);
  EXPECT_THROW(tightness_witness(2, 2, AbelianGroup({4}), GroupElement{2}, 5), ArgumentError);
  EXPECT_THROW(tightness_witness(2, 1, AbelianGroup({3}), GroupElement{1}, 4), ArgumentError);
  EXPECT_THROW(tightness_witness(0, 1, kZ2, GroupElement{1}, 4), ArgumentError);
  EXPECT_THROW(tightness_witness(3, 2, AbelianGroup({4}), GroupElement{1}, 3), ArgumentError);
}

TEST(Tightness, MixedGroup) {
  const AbelianGroup g({2, 4});
  const auto w = tightness_witness(1, 2, g, GroupElement{1, 1}, 3);
  EXPECT_TRUE(verify(w));
  EXPECT_EQ(w.expected, g.scalar_mul(-2, GroupElement{1, 1}));
}

TEST(Hamming, Examples) {
  const AbelianGroup z3({3});
  const auto w = hamming_witness(3, z3, GroupElement{1});
  EXPECT_EQ(w.expected, GroupElement{2});
  EXPECT_EQ(w.refuted_k, 2u);
  EXPECT_TRUE(verify(w));
  for (const auto& x : oracle::all_tuples(2, 3)) {
    const auto weight = x[0] + x[1] + x[2];
    EXPECT_EQ(w.table.eval(x), GroupElement{weight % 2 == 0 ? 1u : 0u});
  }
  const AbelianGroup z6({6});
  const auto w6 = hamming_witness(4, z6, GroupElement{1});
  EXPECT_EQ(w6.expected, GroupElement{2});
  EXPECT_TRUE(verify(w6));
}

TEST(Hamming, Extension) {
  const AbelianGroup z3({3});
  const auto base = hamming_witness(3, z3, GroupElement{1});
  const auto ext = hamming_witness(3, z3, GroupElement{1}, 3);
  EXPECT_TRUE(is_determined_by_oddsupp(ext.table).has_value());
  for (const auto& x : oracle::all_tuples(2, 3)) {
    EXPECT_EQ(ext.table.eval(x), base.table.eval(x));
  }
  EXPECT_TRUE(verify(ext));
}

TEST(Hamming, RejectsTwoPowerOrders) {
  EXPECT_THROW(hamming_witness(3, AbelianGroup({4}), GroupElement{1}), ArgumentError);
  EXPECT_THROW(hamming_witness(3, AbelianGroup({6}), GroupElement{3}), ArgumentError);
  EXPECT_THROW(hamming_witness(3, AbelianGroup({3}), GroupElement{0}), ArgumentError);
}

TEST(LargeAlphabet, Examples) {
  const auto w2 = large_alphabet_witness(2, 3, kZ2, GroupElement{1});
  EXPECT_EQ(w2.expected, GroupElement{1});
  EXPECT_EQ(w2.refuted_k, 1u);
  EXPECT_TRUE(verify(w2));
  const auto w3 = large_alphabet_witness(3, 4, kZ2, GroupElement{1});
  EXPECT_EQ(w3.params, (Tuple{1, 2, 3}));
  EXPECT_TRUE(verify(w3));
  EXPECT_TRUE(is_determined_by_oddsupp(w3.table).has_value());
  EXPECT_THROW(large_alphabet_witness(3, 3, kZ2, GroupElement{1}), ArgumentError);
  EXPECT_THROW(large_alphabet_witness(3, 4, kZ2, GroupElement{0}), ArgumentError);
}

TEST(Verify, RejectsTamperedBundles) {
  auto w = hamming_witness(3, AbelianGroup({3}), GroupElement{1});
  auto bad = w;
  bad.expected = GroupElement{1};
  EXPECT_FALSE(verify(bad));
  bad = w;
  bad.refuted_k = 3;
  EXPECT_FALSE(verify(bad));
}

}  // namespace
}  // namespace gapdecomp
