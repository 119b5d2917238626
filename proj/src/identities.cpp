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

#include "gapdecomp/identities.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "gapdecomp/errors.hpp"

namespace gapdecomp {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  if (n < 0) {
    // C(n, k) = (-1)^k C(k - n - 1, k)
    BigInt c = binomial(k - n - 1, k);
    return (k % 2 == 0) ? c : BigInt(-c);
  }
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

bool binomial_is_odd(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) {
    throw ArgumentError("Lucas parity needs nonnegative arguments");
  }
  if (k > n) return false;
  return (static_cast<std::uint64_t>(k) & ~static_cast<std::uint64_t>(n)) == 0;
}

namespace {

BigInt pow2(std::int64_t e) {
  return BigInt(1) << static_cast<unsigned>(e);
}

void check_sw_range(std::int64_t m, std::int64_t t) {
  if (t < 0 || 2 * t > m - 2) {
    throw ArgumentError("sw identity needs 0 <= t <= m/2 - 1 "
                        "(m=" + std::to_string(m) + ", t=" +
                        std::to_string(t) + ")");
  }
}

void check_pairs_range(std::int64_t m, std::int64_t t) {
  if (t < 0 || 2 * t > m - 1) {
    throw ArgumentError("pair identity needs 0 <= t <= (m-1)/2 (m=" +
                        std::to_string(m) + ", t=" + std::to_string(t) + ")");
  }
}

}  // namespace

BigInt sw_lhs(std::int64_t m, std::int64_t t) {
  check_sw_range(m, t);
  BigInt sum = 0;
  for (std::int64_t i = t + 1; i <= m / 2; ++i) {
    sum += binomial(m, 2 * i) * binomial(i - 1, t);
  }
  return sum;
}

BigInt sw_rhs(std::int64_t m, std::int64_t t) {
  check_sw_range(m, t);
  BigInt inner = 0;
  for (std::int64_t k = 0; k <= t / 2; ++k) {
    inner += binomial(m - 3 - t - 2 * k, t - 2 * k);
  }
  const BigInt sign = (t % 2 == 0) ? -1 : 1;
  return pow2(m - 2 * t - 1) * inner + sign;
}

BigInt pairs_lhs(std::int64_t m, std::int64_t t) {
  check_pairs_range(m, t);
  BigInt sum = 0;
  for (std::int64_t k = t + 1; k <= (m + 1) / 2; ++k) {
    sum += binomial(m, 2 * k - 1) * binomial(2 * k - 1, 2 * t);
  }
  return sum;
}

BigInt pairs_rhs(std::int64_t m, std::int64_t t) {
  check_pairs_range(m, t);
  return binomial(m, 2 * t) * pow2(m - 2 * t - 1);
}

std::vector<std::uint64_t> pairs_count_histogram(std::int64_t m) {
  if (m < 1 || m > kMaxPairsOracle) {
    throw ResourceError("pair enumeration supports 1 <= m <= " +
                        std::to_string(kMaxPairsOracle));
  }
  // Outer sets are split into a low and a high half; inner subsets of each
  // half are enumerated once per half-mask and the two size histograms
  // are combined per outer set.
  const int low_bits = static_cast<int>(std::min<std::int64_t>(m, 11));
  const std::uint32_t low_mask = (1u << low_bits) - 1;
  const std::size_t width = static_cast<std::size_t>(low_bits) + 1;
  std::vector<std::uint64_t> half((std::size_t{1} << low_bits) * width, 0);
  for (std::uint32_t h = 0; h <= low_mask; ++h) {
    std::uint32_t inner = h;
    while (true) {
      ++half[h * width + static_cast<std::size_t>(std::popcount(inner))];
      if (inner == 0) break;
      inner = (inner - 1) & h;
    }
  }
  std::vector<std::uint64_t> by_size(static_cast<std::size_t>(m) + 1, 0);
  for (std::uint32_t outer = 0; outer < (1u << m); ++outer) {
    if ((std::popcount(outer) & 1) == 0) continue;
    const std::uint32_t lo = outer & low_mask;
    const std::uint32_t hi = outer >> low_bits;
    const auto lo_n = static_cast<std::size_t>(std::popcount(lo));
    const auto hi_n = static_cast<std::size_t>(std::popcount(hi));
    for (std::size_t i = 0; i <= lo_n; ++i) {
      for (std::size_t j = 0; j <= hi_n; ++j) {
        by_size[i + j] += half[lo * width + i] * half[hi * width + j];
      }
    }
  }
  std::vector<std::uint64_t> out;
  for (std::size_t s = 0; s < by_size.size(); s += 2) out.push_back(by_size[s]);
  return out;
}

std::uint64_t pairs_count_oracle(std::int64_t m, std::int64_t t) {
  check_pairs_range(m, t);
  return pairs_count_histogram(m).at(static_cast<std::size_t>(t));
}

}  // namespace gapdecomp
