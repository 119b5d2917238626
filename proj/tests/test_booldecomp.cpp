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

#include <random>

#include "gapdecomp/booldecomp.hpp"
#include "gapdecomp/errors.hpp"
#include "gapdecomp/gf2.hpp"
#include "gapdecomp/identities.hpp"
#include "oracles.hpp"

namespace gapdecomp {
namespace {

const AbelianGroup kZ2({2});
const AbelianGroup kV4({2, 2});

FnTable parity(std::size_t n) {
  return FnTable::tabulate(2, n, kZ2, [](const Tuple& x) {
    std::uint32_t v = 0;
    for (auto xi : x) v ^= xi;
    return GroupElement{v};
  });
}

PhiMap phi_from(const std::map<std::uint32_t, GroupElement>& entries, std::uint32_t a,
                std::size_t n, const AbelianGroup& g) {
  auto phi = PhiMap::pn_prime(a, n, g);
  for (auto [mask, v] : entries) phi.set(SubsetA(mask), v);
  return phi;
}

GroupElement paired_value(const PhiMap& phi, std::uint32_t mask) {
  const SubsetA s(mask);
  return phi.has(s) ? phi.at(s) : phi.at(SubsetA(mask ^ 1u));
}

TEST(Gf2, SolvesAndReportsRank) {
  // x0 + x1 = 1, x1 + x2 = 0, x0 + x2 = 1 (rank 2, consistent).
  Gf2System sys(3, 3, 1);
  sys.set_coefficient(0, 0, true);
  sys.set_coefficient(0, 1, true);
  sys.set_coefficient(1, 1, true);
  sys.set_coefficient(1, 2, true);
  sys.set_coefficient(2, 0, true);
  sys.set_coefficient(2, 2, true);
  sys.set_rhs(0, 0, true);
  sys.set_rhs(2, 0, true);
  const auto sol = sys.solve();
  EXPECT_EQ(sol.rank, 2u);
  EXPECT_TRUE(sol.consistent);
  const auto& x = sol.columns[0];
  EXPECT_EQ(x[0] ^ x[1], true);
  EXPECT_EQ(x[1] ^ x[2], false);
  EXPECT_FALSE(x[2]);  // free unknown pinned to 0
  sys.set_rhs(1, 0, true);
  EXPECT_FALSE(sys.solve().consistent);
}

TEST(Gf2, RandomFullRankSystems) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 20;
    Gf2System sys(n, n, 2);
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] = (rng() & 1) != 0;
        sys.set_coefficient(r, c, m[r][c]);
      }
    }
    std::vector<std::vector<bool>> x(2, std::vector<bool>(n));
    for (auto& col : x) {
      for (std::size_t c = 0; c < n; ++c) col[c] = (rng() & 1) != 0;
    }
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < 2; ++k) {
        bool v = false;
        for (std::size_t c = 0; c < n; ++c) v ^= m[r][c] && x[k][c];
        sys.set_rhs(r, k, v);
      }
    }
    const auto sol = sys.solve();
    ASSERT_TRUE(sol.consistent);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < 2; ++k) {
        bool v = false;
        for (std::size_t c = 0; c < n; ++c) v ^= m[r][c] && sol.columns[k][c];
        bool want = false;
        for (std::size_t c = 0; c < n; ++c) want ^= m[r][c] && x[k][c];
        EXPECT_EQ(v, want);
      }
    }
  }
}

TEST(Layers, CoefficientParitiesFromExactBinomials) {
  // a_size=2, n=5: t = 1, so i runs over {2} only: one layer of size 1
  // with coefficient C(1,1) = 1.
  const auto odd = decomposition_layers(BoolForm::kOdd, 2, 5);
  ASSERT_EQ(odd.size(), 1u);
  EXPECT_EQ(odd[0].subset_size, 1u);
  EXPECT_EQ(odd[0].coefficient, 1);
  EXPECT_TRUE(odd[0].odd());
  // a_size=3, n=8: t = 2, i in {3, 4}: sizes 2, 0 with C(2,2) = 1, C(3,2) = 3.
  const auto odd3 = decomposition_layers(BoolForm::kOdd, 3, 8);
  ASSERT_EQ(odd3.size(), 2u);
  EXPECT_EQ(odd3[0].subset_size, 2u);
  EXPECT_EQ(odd3[0].coefficient, 1);
  EXPECT_EQ(odd3[1].subset_size, 0u);
  EXPECT_EQ(odd3[1].coefficient, 3);
  // Even case a_size=2, n=6, t = 2: first sum i in {3}: size 0, C(2,2) = 1;
  // second sum k in {3}: size 1, C(5,4) = 5.
  const auto even = decomposition_layers(BoolForm::kEven, 2, 6);
  ASSERT_EQ(even.size(), 2u);
  EXPECT_EQ(even[0].subset_size, 0u);
  EXPECT_EQ(even[0].coefficient, 1);
  EXPECT_EQ(even[1].subset_size, 1u);
  EXPECT_EQ(even[1].coefficient, 5);
  // a_size=3, n=4: t = 0, every coefficient 1, sizes 2 and 0.
  const auto odd2 = decomposition_layers(BoolForm::kOdd, 3, 4);
  ASSERT_EQ(odd2.size(), 2u);
  EXPECT_EQ(odd2[0].subset_size, 2u);
  EXPECT_EQ(odd2[1].subset_size, 0u);
  for (const auto& l : odd2) EXPECT_EQ(l.coefficient, 1);
  for (auto form : {BoolForm::kOdd, BoolForm::kEven}) {
    for (std::uint32_t a = 2; a <= 5; ++a) {
      for (std::size_t n = a + 1; n <= 14; ++n) {
        if ((n - a) % 2 != (form == BoolForm::kOdd ? 1u : 0u)) continue;
        for (const auto& l : decomposition_layers(form, a, n)) {
          EXPECT_LE(l.subset_size, a - 1);
        }
      }
    }
  }
}

TEST(Lucas, MatchesExactParity) {
  for (std::int64_t n = 0; n <= 60; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      EXPECT_EQ(binomial_is_odd(n, k), (binomial(n, k) & 1) != 0);
    }
  }
}

TEST(ReconstructOdd, ZeroAndOracle) {
  const auto zero = PhiMap::pn_prime(2, 5, kZ2);
  EXPECT_TRUE(reconstruct_odd(zero, 5).is_zero());
  for (const auto& ophi : oracle::all_phis(3, 4, kV4)) {
    const auto phi = phi_from(ophi, 3, 4, kV4);
    const auto expected = oracle::reconstruct(BoolForm::kOdd, 3, 4, kV4,
                                              [&](std::uint32_t m) { return ophi.at(m); });
    EXPECT_EQ(reconstruct_odd(phi, 4), expected);
  }
}

TEST(DecomposeOdd, Examples) {
  const auto z = FnTable::constant(2, 5, kZ2, GroupElement{0});
  EXPECT_EQ(decompose_odd(z), PhiMap::pn_prime(2, 5, kZ2));
  const auto p5 = parity(5);
  const auto phi = decompose_odd(p5);
  EXPECT_EQ(reconstruct_odd(phi, 5), p5);
  // Brute force over all four phi confirms uniqueness.
  int matches = 0;
  for (const auto& ophi : oracle::all_phis(2, 5, kZ2)) {
    if (reconstruct_odd(phi_from(ophi, 2, 5, kZ2), 5) == p5) ++matches;
  }
  EXPECT_EQ(matches, 1);
}

TEST(DecomposeOdd, Preconditions) {
  EXPECT_THROW(decompose_odd(parity(4)), PreconditionError);
  const auto z3 = FnTable::constant(2, 5, AbelianGroup({3}), GroupElement{0});
  EXPECT_THROW(decompose_odd(z3), PreconditionError);
  const auto z4 = FnTable::constant(2, 5, AbelianGroup({4}), GroupElement{0});
  EXPECT_THROW(decompose_odd(z4), PreconditionError);
  const auto proj = FnTable::tabulate(2, 5, kZ2, [](const Tuple& x) { return GroupElement{x[0]}; });
  EXPECT_THROW(decompose_odd(proj), PreconditionError);
  // n - |A| must be positive.
  EXPECT_THROW(decompose_odd(FnTable::constant(4, 3, kZ2, GroupElement{0})), PreconditionError);
  try {
    check_bool_form_applicable(BoolForm::kOdd, parity(4));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "parity mismatch: n-|A| even");
  }
}

TEST(DecomposeEven, Examples) {
  auto zero_phi = PhiMap::full_paired(2, kZ2);
  EXPECT_TRUE(reconstruct_even(zero_phi, 4).is_zero());
  const auto p4 = parity(4);
  const auto phi = decompose_even(p4);
  EXPECT_EQ(phi.domain(), PhiDomain::kFullPaired);
  EXPECT_EQ(reconstruct_even(phi, 4), p4);
  for (auto s : phi.keys()) {
    EXPECT_EQ(phi.at(s), phi.at(SubsetA(s.mask() ^ 1u)));
  }
  EXPECT_THROW(decompose_even(parity(5)), PreconditionError);
}

TEST(DecomposeEven, RoundTripAndOracle) {
  for (const auto& f : oracle::determined_tables(3, 5, kZ2)) {
    const auto phi = decompose_even(f);
    EXPECT_EQ(reconstruct_even(phi, 5), f);
    const auto restricted = phi.restrict_to_pn_prime(5);
    EXPECT_EQ(oracle::reconstruct(BoolForm::kEven, 3, 5, kZ2,
                                  [&](std::uint32_t m) { return paired_value(restricted, m); }),
              f);
  }
}

TEST(Fitilde, Examples) {
  const auto z = FnTable::constant(2, 4, kZ2, GroupElement{0});
  const auto dz = fitilde_decompose(z);
  EXPECT_TRUE(reconstruct_fitilde(dz.phi, 4).is_zero());
  const auto p4 = parity(4);
  const auto d = fitilde_decompose(p4);
  EXPECT_EQ(reconstruct_fitilde(d.phi, 4), p4);
  EXPECT_LE(d.rank, d.unknowns);
  for (const auto& f : oracle::determined_tables(2, 5, kZ2)) {
    const auto r = fitilde_decompose(f);
    EXPECT_EQ(reconstruct_fitilde(r.phi, 5), f);
    EXPECT_EQ(oracle::reconstruct(BoolForm::kFitilde, 2, 5, kZ2,
                                  [&](std::uint32_t m) { return r.phi.at(SubsetA(m)); }),
              f);
  }
  // Regime n > max(|A|, 3).
  EXPECT_THROW(fitilde_decompose(parity(3)), PreconditionError);
}

TEST(BooldecompProperty, ReconstructionsAreDeterminedAndLowArity) {
  for (const auto& ophi : oracle::all_phis(3, 5, kZ2)) {
    const auto phi = phi_from(ophi, 3, 5, kZ2);
    const auto paired = phi.pair_extension();
    for (const auto& layer : decomposition_layers(BoolForm::kEven, 3, 5)) {
      for (std::uint32_t mask = 0; mask < 32; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != layer.subset_size) continue;
        EXPECT_LE(essential_arity(theta_on_subset(paired, 5, VarSubset(mask))), 2u);
      }
    }
    EXPECT_TRUE(is_determined_by_oddsupp(reconstruct_even(paired, 5)).has_value());
  }
  for (const auto& ophi : oracle::all_phis(2, 5, kV4)) {
    const auto g = reconstruct_odd(phi_from(ophi, 2, 5, kV4), 5);
    EXPECT_TRUE(is_determined_by_oddsupp(g).has_value());
  }
}

TEST(BooldecompProperty, InverseOnSizes) {
  for (std::uint32_t a = 2; a <= 3; ++a) {
    for (std::size_t n = 4; n <= 6; ++n) {
      if (n <= a) continue;
      for (const auto* gtext : {"Z2", "Z2xZ2"}) {
        const auto g = AbelianGroup::parse(gtext);
        for (const auto& ophi : oracle::all_phis(a, n, g)) {
          const auto phi = phi_from(ophi, a, n, g);
          if ((n - a) % 2 == 1) {
            EXPECT_EQ(decompose_odd(reconstruct_odd(phi, n)), phi);
          } else {
            const auto paired = phi.pair_extension();
            EXPECT_EQ(decompose_even(reconstruct_even(paired, n)), paired);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace gapdecomp
