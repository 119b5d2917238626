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

#include "gapdecomp/calculus.hpp"

#include <bit>
#include <cstdint>

namespace gapdecomp {

namespace {

Tuple resolve_base(const FnTable& f, std::span<const Letter> base) {
  if (base.empty()) return Tuple(f.arity(), 0);
  f.index_of(base);  // validates length and range
  return Tuple(base.begin(), base.end());
}

void check_spec(const FnTable& f, const DerivativeSpec& spec) {
  if (!spec.vars.is_subset_of(VarSubset::all(f.arity()))) {
    throw DomainError("derivative variables " + spec.vars.to_string() +
                      " outside [" + std::to_string(f.arity()) + "]");
  }
  if (spec.params.size() != f.arity()) {
    throw ShapeError("parameter tuple must have length " +
                     std::to_string(f.arity()));
  }
  for (auto a : spec.params) {
    if (a >= f.a_size()) throw DomainError("parameter outside alphabet");
  }
}

// Alternating sum over J subset of I of f at `point` with positions in J
// moved to params. `offsets[k]` is the index shift for the k-th position of
// I; `point_index` is the index of the unmodified point.
GroupElement alternating_sum(const FnTable& f, std::size_t point_index,
                             std::span<const std::int64_t> offsets) {
  const auto& grp = f.group();
  const std::size_t k = offsets.size();
  GroupElement plus = grp.zero();
  GroupElement minus = grp.zero();
  for (std::uint32_t j = 0; j < (1u << k); ++j) {
    std::int64_t idx = static_cast<std::int64_t>(point_index);
    for (std::size_t b = 0; b < k; ++b) {
      if ((j >> b) & 1u) idx += offsets[b];
    }
    const GroupElement& v = f.at(static_cast<std::size_t>(idx));
    const bool odd_complement = ((k - std::popcount(j)) & 1u) != 0;
    if (odd_complement) {
      minus = grp.add(minus, v);
    } else {
      plus = grp.add(plus, v);
    }
  }
  return grp.sub(plus, minus);
}

}  // namespace

FnTable partial_derivative(const FnTable& f, std::size_t i, Letter a) {
  if (i >= f.arity()) throw DomainError("variable out of range");
  if (a >= f.a_size()) throw DomainError("parameter outside alphabet");
  const auto& grp = f.group();
  const std::size_t s = f.stride(i);
  std::vector<GroupElement> values(f.size());
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    const std::size_t xi = f.letter_at(idx, i);
    const std::size_t moved = idx - xi * s + a * s;
    values[idx] = grp.sub(f.at(moved), f.at(idx));
  }
  return FnTable(f.a_size(), f.arity(), grp, std::move(values));
}

FnTable higher_derivative_iterated(const FnTable& f,
                                   const DerivativeSpec& spec) {
  check_spec(f, spec);
  FnTable g = f;
  for (auto i : spec.vars.positions()) {
    g = partial_derivative(g, i, spec.params[i]);
  }
  return g;
}

FnTable higher_derivative_alternating(const FnTable& f,
                                      const DerivativeSpec& spec) {
  check_spec(f, spec);
  const auto positions = spec.vars.positions();
  std::vector<std::int64_t> offsets(positions.size());
  std::vector<GroupElement> values(f.size());
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    for (std::size_t b = 0; b < positions.size(); ++b) {
      const auto i = positions[b];
      offsets[b] = (static_cast<std::int64_t>(spec.params[i]) -
                    static_cast<std::int64_t>(f.letter_at(idx, i))) *
                   static_cast<std::int64_t>(f.stride(i));
    }
    values[idx] = alternating_sum(f, idx, offsets);
  }
  return FnTable(f.a_size(), f.arity(), f.group(), std::move(values));
}

FnTable higher_derivative(const FnTable& f, const DerivativeSpec& spec) {
  FnTable iterated = higher_derivative_iterated(f, spec);
  if (!(iterated == higher_derivative_alternating(f, spec))) {
    throw InternalConsistencyError(
        "iterated and alternating-sum derivatives disagree");
  }
  return iterated;
}

GroupElement derivative_at(const FnTable& f, const DerivativeSpec& spec,
                           std::span<const Letter> base) {
  check_spec(f, spec);
  const Tuple point = resolve_base(f, base);
  const auto positions = spec.vars.positions();
  std::vector<std::int64_t> offsets(positions.size());
  for (std::size_t b = 0; b < positions.size(); ++b) {
    const auto i = positions[b];
    offsets[b] = (static_cast<std::int64_t>(spec.params[i]) -
                  static_cast<std::int64_t>(point[i])) *
                 static_cast<std::int64_t>(f.stride(i));
  }
  return alternating_sum(f, f.index_of(point), offsets);
}

GroupElement derivative_at_zero(const FnTable& f, const DerivativeSpec& spec) {
  return derivative_at(f, spec);
}

std::vector<TaylorTerm> taylor_terms(const FnTable& f,
                                     std::span<const Letter> base) {
  if (f.arity() > kMaxTaylorArity) {
    throw ResourceError("Taylor expansion limited to arity " +
                        std::to_string(kMaxTaylorArity));
  }
  const Tuple point = resolve_base(f, base);
  const std::size_t n = f.arity();
  std::vector<TaylorTerm> terms;
  terms.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const VarSubset vars(mask);
    const auto positions = vars.positions();
    // The term only depends on x restricted to I: evaluate once per
    // restricted tuple, then broadcast.
    std::vector<std::size_t> rstride(positions.size());
    std::size_t rsize = 1;
    for (std::size_t b = 0; b < positions.size(); ++b) {
      rstride[b] = rsize;
      rsize *= f.a_size();
    }
    std::vector<GroupElement> restricted(rsize);
    DerivativeSpec spec{vars, Tuple(n, 0)};
    Tuple y(positions.size(), 0);
    for (std::size_t r = 0; r < rsize; ++r) {
      for (std::size_t b = 0; b < positions.size(); ++b) {
        spec.params[positions[b]] = y[b];
      }
      restricted[r] = derivative_at(f, spec, point);
      FnTable::advance(y, f.a_size());
    }
    std::vector<GroupElement> values(f.size());
    for (std::size_t idx = 0; idx < f.size(); ++idx) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < positions.size(); ++b) {
        r += f.letter_at(idx, positions[b]) * rstride[b];
      }
      values[idx] = restricted[r];
    }
    terms.push_back({vars, FnTable(f.a_size(), n, f.group(), std::move(values))});
  }
  return terms;
}

namespace {

// First nonzero Delta_I^a f(base) over |I| = size, or nullopt.
std::optional<Violation> find_violation_of_size(const FnTable& f,
                                                std::size_t size,
                                                const Tuple& point) {
  const std::size_t n = f.arity();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
    const VarSubset vars(mask);
    const auto positions = vars.positions();
    DerivativeSpec spec{vars, Tuple(n, 0)};
    Tuple y(positions.size(), 0);
    do {
      bool trivial = false;
      for (std::size_t b = 0; b < positions.size(); ++b) {
        spec.params[positions[b]] = y[b];
        // a_i == base_i makes the J and J + {i} terms cancel.
        trivial = trivial || y[b] == point[positions[b]];
      }
      if (trivial) continue;
      GroupElement value = derivative_at(f, spec, point);
      if (!f.group().is_zero(value)) {
        return Violation{vars, spec.params, value};
      }
    } while (FnTable::advance(y, f.a_size()));
  }
  return std::nullopt;
}

}  // namespace

Decomposability is_k_decomposable(const FnTable& f, std::size_t k,
                                  std::span<const Letter> base) {
  if (k > f.arity()) throw ArgumentError("k exceeds the arity");
  const Tuple point = resolve_base(f, base);
  for (std::size_t size = f.arity(); size > k; --size) {
    if (auto v = find_violation_of_size(f, size, point)) {
      return {false, std::move(v)};
    }
  }
  return {true, std::nullopt};
}

std::size_t min_decomposition_arity(const FnTable& f,
                                    std::span<const Letter> base) {
  const Tuple point = resolve_base(f, base);
  for (std::size_t size = f.arity(); size > 0; --size) {
    if (find_violation_of_size(f, size, point)) return size;
  }
  return 0;
}

std::vector<TaylorTerm> decompose_via_taylor(const FnTable& f, std::size_t k) {
  const auto verdict = is_k_decomposable(f, k);
  if (!verdict.decomposable) {
    const auto& w = *verdict.witness;
    throw NotDecomposableError(
        "not " + std::to_string(k) + "-decomposable: derivative over " +
            w.vars.to_string() + " is " + f.group().format(w.value),
        w);
  }
  std::vector<TaylorTerm> kept;
  FnTable sum = FnTable::constant(f.a_size(), f.arity(), f.group(),
                                  f.group().zero());
  for (auto& term : taylor_terms(f)) {
    if (term.vars.size() > k) {
      if (!term.table.is_zero()) {
        throw InternalConsistencyError("Taylor term " + term.vars.to_string() +
                                       " above k does not vanish");
      }
      continue;
    }
    if (!term.vars.empty() && term.table.is_zero()) continue;
    sum = sum + term.table;
    kept.push_back(std::move(term));
  }
  if (!(sum == f)) {
    throw InternalConsistencyError("Taylor decomposition does not sum to f");
  }
  return kept;
}

}  // namespace gapdecomp
