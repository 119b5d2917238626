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

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gapdecomp {

using BigInt = boost::multiprecision::cpp_int;

// Exact binomial coefficient. Zero for k < 0, and for 0 <= n < k. For n < 0
// the generalized coefficient n(n-1)...(n-k+1)/k! is used, so C(-1, 0) = 1.
BigInt binomial(std::int64_t n, std::int64_t k);

// C(n, k) mod 2 via Lucas' theorem, for n, k >= 0.
bool binomial_is_odd(std::int64_t n, std::int64_t k);

// The "sw" identity, 0 <= t <= m/2 - 1:
//   sum_{i=t+1}^{floor(m/2)} C(m,2i) C(i-1,t)
//     = 2^{m-2t-1} sum_{k=0}^{floor(t/2)} C(m-3-t-2k, t-2k) + (-1)^{t+1}.
BigInt sw_lhs(std::int64_t m, std::int64_t t);
BigInt sw_rhs(std::int64_t m, std::int64_t t);

// Pair-counting identity, 0 <= t <= (m-1)/2:
//   sum_{k=t+1}^{floor((m+1)/2)} C(m,2k-1) C(2k-1,2t) = C(m,2t) 2^{m-2t-1}.
BigInt pairs_lhs(std::int64_t m, std::int64_t t);
BigInt pairs_rhs(std::int64_t m, std::int64_t t);

// Number of pairs X subset Y subset [m] with |X| = 2t and |Y| odd, counted
// by enumerating every such pair. Feasible for m <= kMaxPairsOracle.
inline constexpr std::int64_t kMaxPairsOracle = 22;
std::uint64_t pairs_count_oracle(std::int64_t m, std::int64_t t);
// Same enumeration for all t at once: entry t is the count for |X| = 2t.
std::vector<std::uint64_t> pairs_count_histogram(std::int64_t m);

}  // namespace gapdecomp
