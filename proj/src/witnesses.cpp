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

#include "gapdecomp/witnesses.hpp"

#include "gapdecomp/calculus.hpp"
#include "gapdecomp/errors.hpp"

namespace gapdecomp {

namespace {

template <class Rule>
PhiMap phi_from_rule(std::uint32_t a_size, std::size_t n,
                     const AbelianGroup& group, Rule rule) {
  PhiMap phi = PhiMap::pn_prime(a_size, n, group);
  for (auto s : phi.keys()) phi.set(s, rule(s));
  return phi;
}

void require_element(const AbelianGroup& group, const GroupElement& b) {
  if (!group.contains(b)) {
    throw ArgumentError("b is not an element of " + group.to_string());
  }
}

bool is_pow2(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

}  // namespace

const char* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kTightness:
      return "tightness";
    case WitnessKind::kHamming:
      return "hamming";
    case WitnessKind::kLargeAlphabet:
      return "large-alphabet";
  }
  return "?";
}

bool verify(const WitnessBundle& w) {
  const auto& grp = w.table.group();
  const GroupElement value = derivative_at_zero(w.table, {w.vars, w.params});
  if (value != w.expected || grp.is_zero(value)) return false;
  if (!(theta_table(w.phi, w.table.arity()) == w.table)) return false;
  return !is_k_decomposable(w.table, w.refuted_k).decomposable;
}

WitnessBundle tightness_witness(std::uint32_t ell, unsigned e,
                                const AbelianGroup& group,
                                const GroupElement& b, std::size_t n) {
  require_element(group, b);
  if (ell < 1) throw ArgumentError("need ell >= 1 (|A| >= 2)");
  if (e < 1 || e > 62) throw ArgumentError("need 1 <= e <= 62");
  if (group.exponent_pow2() != e) {
    throw ArgumentError("exponent of " + group.to_string() + " is not 2^" +
                        std::to_string(e));
  }
  if (group.order_of(b) != (std::uint64_t{1} << e)) {
    throw ArgumentError("b must have order 2^" + std::to_string(e));
  }
  const std::size_t width = ell + e - 1;
  if (n < width) {
    throw ArgumentError("need n >= ell + e - 1 = " + std::to_string(width));
  }
  const std::uint32_t a_size = ell + 1;
  const std::uint32_t nonzero = ((1u << a_size) - 1) & ~1u;
  PhiMap phi = phi_from_rule(a_size, n, group, [&](SubsetA t) {
    return (t.mask() & nonzero) == nonzero ? b : group.zero();
  });

  Tuple params(n, 0);
  for (std::uint32_t i = 0; i + 1 < ell; ++i) params[i] = i + 1;
  for (std::size_t i = ell - 1; i < width; ++i) params[i] = ell;

  const std::int64_t magnitude = std::int64_t{1} << (e - 1);
  const std::int64_t coefficient = (e % 2 == 1) ? magnitude : -magnitude;

  FnTable table = theta_table(phi, n);
  return {WitnessKind::kTightness, std::move(phi), std::move(table),
          VarSubset::all(width), std::move(params),
          group.scalar_mul(coefficient, b), a_size + e - 3};
}

WitnessBundle hamming_witness(std::size_t n, const AbelianGroup& group,
                              const GroupElement& b, std::uint32_t a_size) {
  require_element(group, b);
  if (n < 1 || n > 62) throw ArgumentError("need 1 <= n <= 62");
  if (is_pow2(group.order_of(b))) {
    throw ArgumentError("order of b is a power of 2");
  }
  PhiMap phi = phi_from_rule(a_size, n, group, [&](SubsetA s) {
    return s.contains(1) ? group.zero() : b;
  });
  Tuple params(n, 1);
  const std::int64_t magnitude = std::int64_t{1} << (n - 1);
  const std::int64_t coefficient = (n % 2 == 0) ? magnitude : -magnitude;
  FnTable table = theta_table(phi, n);
  return {WitnessKind::kHamming, std::move(phi), std::move(table),
          VarSubset::all(n), std::move(params),
          group.scalar_mul(coefficient, b), n - 1};
}

WitnessBundle large_alphabet_witness(std::size_t n, std::uint32_t a_size,
                                     const AbelianGroup& group,
                                     const GroupElement& b) {
  require_element(group, b);
  if (n < 2) throw ArgumentError("need n >= 2");
  if (a_size < n + 1) {
    throw ArgumentError("need |A| >= n + 1 (n=" + std::to_string(n) +
                        ", |A|=" + std::to_string(a_size) + ")");
  }
  if (group.is_zero(b)) throw ArgumentError("b must be nonzero");
  const std::uint32_t target = ((1u << (n + 1)) - 1) & ~1u;  // {1..n}
  PhiMap phi = phi_from_rule(a_size, n, group, [&](SubsetA s) {
    return s.mask() == target ? b : group.zero();
  });
  Tuple params(n);
  for (std::size_t i = 0; i < n; ++i) params[i] = static_cast<Letter>(i + 1);
  FnTable table = theta_table(phi, n);
  return {WitnessKind::kLargeAlphabet, std::move(phi), std::move(table),
          VarSubset::all(n), std::move(params), b, n - 1};
}

}  // namespace gapdecomp
