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

#include "gapdecomp/booldecomp.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "gapdecomp/errors.hpp"
#include "gapdecomp/gf2.hpp"

namespace gapdecomp {

namespace {

std::vector<std::uint32_t> masks_of_size(std::size_t n, std::size_t size) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) == size) out.push_back(m);
  }
  return out;
}

void require_boolean(const AbelianGroup& group) {
  if (!group.is_elementary_2()) {
    throw PreconditionError("group " + group.to_string() +
                            " is not Boolean (need Z2^k)");
  }
}

// Parity, per oddsupp value T, of the number of (layer, I) pairs with an odd
// coefficient and oddsupp(x|_I) = T.
class LayerCounter {
 public:
  LayerCounter(std::uint32_t a_size, std::size_t n,
               const std::vector<Layer>& layers)
      : a_size_(a_size) {
    for (const auto& layer : layers) {
      if (!layer.odd()) continue;
      auto ms = masks_of_size(n, layer.subset_size);
      subsets_.insert(subsets_.end(), ms.begin(), ms.end());
    }
  }

  // Bit T of the result is set when oddsupp value T occurs an odd number of
  // times.
  Gf2Vector parities(std::span<const Letter> x) const {
    Gf2Vector out(std::size_t{1} << a_size_);
    for (auto sub : subsets_) {
      std::uint32_t t = 0;
      for (std::uint32_t m = sub; m != 0; m &= m - 1) {
        t ^= 1u << x[static_cast<std::size_t>(std::countr_zero(m))];
      }
      out.flip(t);
    }
    return out;
  }

 private:
  std::uint32_t a_size_;
  std::vector<std::uint32_t> subsets_;
};

FnTable layered_sum(const PhiMap& phi, std::size_t n,
                    const std::vector<Layer>& layers) {
  require_boolean(phi.group());
  const LayerCounter counter(phi.a_size(), n, layers);
  const auto& grp = phi.group();
  return FnTable::tabulate(phi.a_size(), n, grp, [&](const Tuple& x) {
    const Gf2Vector odd = counter.parities(x);
    GroupElement sum = grp.zero();
    for (auto t = odd.find_first(); t != Gf2Vector::npos; t = odd.find_next(t)) {
      sum = grp.add(sum, phi.at(SubsetA(static_cast<std::uint32_t>(t))));
    }
    return sum;
  });
}

// t with n - a_size = 2t + (odd ? 1 : 0), checked positive.
std::size_t half_excess(std::uint32_t a_size, std::size_t n, bool odd) {
  if (n <= a_size) {
    throw PreconditionError("need n > |A| (n=" + std::to_string(n) +
                            ", |A|=" + std::to_string(a_size) + ")");
  }
  const std::size_t diff = n - a_size;
  if ((diff % 2 == 1) != odd) {
    throw PreconditionError(std::string("parity mismatch: n-|A| ") +
                            (odd ? "even" : "odd"));
  }
  return diff / 2;
}

void require_phi(const PhiMap& phi, PhiDomain domain, std::size_t n) {
  if (phi.domain() != domain) {
    throw ArgumentError(domain == PhiDomain::kPnPrime
                            ? "phi must be keyed on P'_n(A)"
                            : "phi must be a paired map on P(A)");
  }
  if (domain == PhiDomain::kPnPrime && phi.arity() != n) {
    throw ArgumentError("phi is keyed on P'_" + std::to_string(phi.arity()) +
                        "(A), not P'_" + std::to_string(n) + "(A)");
  }
}

// Solves reconstruct(phi) == f for phi on P'_n(A), probing f at canonical
// representatives. Subsets outside P'_n(A) are routed through S xor {0}.
Gf2System::Solution solve_layers(const FnTable& f,
                                 const std::vector<Layer>& layers,
                                 const std::vector<SubsetA>& keys) {
  const std::size_t n = f.arity();
  std::vector<std::size_t> column(std::size_t{1} << f.a_size(), keys.size());
  for (std::size_t c = 0; c < keys.size(); ++c) column[keys[c].mask()] = c;

  const LayerCounter counter(f.a_size(), n, layers);
  const std::size_t factors = f.group().factors();
  Gf2System system(keys.size(), keys.size(), factors);
  for (std::size_t r = 0; r < keys.size(); ++r) {
    const Tuple rep = canonical_representative(keys[r], n);
    const Gf2Vector odd = counter.parities(rep);
    for (auto t = odd.find_first(); t != Gf2Vector::npos; t = odd.find_next(t)) {
      std::size_t c = column[t];
      if (c == keys.size()) c = column[t ^ 1u];
      if (c == keys.size()) {
        throw InternalConsistencyError("oddsupp value outside phi's domain");
      }
      system.flip_coefficient(r, c);
    }
    const GroupElement value = f.eval(rep);
    for (std::size_t k = 0; k < factors; ++k) system.set_rhs(r, k, value[k] != 0);
  }
  return system.solve();
}

GroupElement element_from_bits(const AbelianGroup& group,
                               const std::vector<Gf2Vector>& columns,
                               std::size_t unknown) {
  GroupElement x = group.zero();
  for (std::size_t k = 0; k < columns.size(); ++k) {
    x[k] = columns[k].test(unknown) ? 1 : 0;
  }
  return x;
}

void require_determined(const FnTable& f) {
  if (f.arity() == 0) throw PreconditionError("arity must be at least 1");
  if (!is_determined_by_oddsupp(f)) {
    throw PreconditionError("not determined by oddsupp");
  }
}

}  // namespace

const char* to_string(BoolForm form) {
  switch (form) {
    case BoolForm::kOdd:
      return "odd";
    case BoolForm::kEven:
      return "even";
    case BoolForm::kFitilde:
      return "fitilde";
  }
  return "?";
}

std::vector<Layer> decomposition_layers(BoolForm form, std::uint32_t a_size,
                                        std::size_t n) {
  const auto sn = static_cast<std::int64_t>(n);
  std::vector<Layer> layers;
  switch (form) {
    case BoolForm::kOdd: {
      const auto t = static_cast<std::int64_t>(half_excess(a_size, n, true));
      for (std::int64_t i = t + 1; i <= sn / 2; ++i) {
        layers.push_back({static_cast<std::size_t>(sn - 2 * i),
                          binomial(i - 1, t)});
      }
      break;
    }
    case BoolForm::kEven: {
      const auto t = static_cast<std::int64_t>(half_excess(a_size, n, false));
      for (std::int64_t i = t + 1; i <= sn / 2; ++i) {
        layers.push_back({static_cast<std::size_t>(sn - 2 * i),
                          binomial(i - 1, t)});
      }
      for (std::int64_t k = t + 1; k <= (sn + 1) / 2; ++k) {
        layers.push_back({static_cast<std::size_t>(sn - 2 * k + 1),
                          binomial(2 * k - 1, 2 * t)});
      }
      break;
    }
    case BoolForm::kFitilde:
      for (std::int64_t i = 1; i <= sn / 2; ++i) {
        layers.push_back({static_cast<std::size_t>(sn - 2 * i), BigInt(1)});
      }
      break;
  }
  return layers;
}

FnTable theta_on_subset(const PhiMap& phi, std::size_t n, VarSubset vars) {
  if (!vars.is_subset_of(VarSubset::all(n))) {
    throw DomainError("subset " + vars.to_string() + " outside [" +
                      std::to_string(n) + "]");
  }
  const auto positions = vars.positions();
  return FnTable::tabulate(phi.a_size(), n, phi.group(), [&](const Tuple& x) {
    std::uint32_t t = 0;
    for (auto p : positions) t ^= 1u << x[p];
    return phi.at(SubsetA(t));
  });
}

FnTable reconstruct_odd(const PhiMap& phi, std::size_t n) {
  require_phi(phi, PhiDomain::kPnPrime, n);
  return layered_sum(phi, n,
                     decomposition_layers(BoolForm::kOdd, phi.a_size(), n));
}

FnTable reconstruct_even(const PhiMap& phi, std::size_t n) {
  require_phi(phi, PhiDomain::kFullPaired, n);
  return layered_sum(phi, n,
                     decomposition_layers(BoolForm::kEven, phi.a_size(), n));
}

FnTable reconstruct_fitilde(const PhiMap& phi, std::size_t n) {
  require_phi(phi, PhiDomain::kPnPrime, n);
  return layered_sum(phi, n,
                     decomposition_layers(BoolForm::kFitilde, phi.a_size(), n));
}

void check_bool_form_applicable(BoolForm form, const FnTable& f) {
  require_boolean(f.group());
  switch (form) {
    case BoolForm::kOdd:
      half_excess(f.a_size(), f.arity(), true);
      break;
    case BoolForm::kEven:
      half_excess(f.a_size(), f.arity(), false);
      break;
    case BoolForm::kFitilde:
      if (f.arity() <= std::max<std::size_t>(f.a_size(), 3)) {
        throw PreconditionError("need n > max(|A|, 3)");
      }
      break;
  }
  require_determined(f);
}

PhiMap decompose_odd(const FnTable& f) {
  check_bool_form_applicable(BoolForm::kOdd, f);
  const std::size_t n = f.arity();
  PhiMap phi = PhiMap::pn_prime(f.a_size(), n, f.group());
  const auto keys = phi.keys();
  const auto sol = solve_layers(
      f, decomposition_layers(BoolForm::kOdd, f.a_size(), n), keys);
  if (sol.rank != keys.size()) {
    throw InternalConsistencyError("odd-case system is singular");
  }
  for (std::size_t c = 0; c < keys.size(); ++c) {
    phi.set(keys[c], element_from_bits(f.group(), sol.columns, c));
  }
  if (!(reconstruct_odd(phi, n) == f)) {
    throw InternalConsistencyError("odd-case reconstruction differs from f");
  }
  return phi;
}

PhiMap decompose_even(const FnTable& f) {
  check_bool_form_applicable(BoolForm::kEven, f);
  const std::size_t n = f.arity();
  const auto keys = pn_prime(f.a_size(), n);
  const auto sol = solve_layers(
      f, decomposition_layers(BoolForm::kEven, f.a_size(), n), keys);
  if (sol.rank != keys.size()) {
    throw InternalConsistencyError("even-case system is singular");
  }
  PhiMap phi = PhiMap::full_paired(f.a_size(), f.group());
  for (std::size_t c = 0; c < keys.size(); ++c) {
    phi.set(keys[c], element_from_bits(f.group(), sol.columns, c));
  }
  if (!(reconstruct_even(phi, n) == f)) {
    throw InternalConsistencyError("even-case reconstruction differs from f");
  }
  return phi;
}

FitildeDecomposition fitilde_decompose(const FnTable& f) {
  check_bool_form_applicable(BoolForm::kFitilde, f);
  const std::size_t n = f.arity();
  PhiMap phi = PhiMap::pn_prime(f.a_size(), n, f.group());
  const auto keys = phi.keys();
  const auto sol = solve_layers(
      f, decomposition_layers(BoolForm::kFitilde, f.a_size(), n), keys);
  if (!sol.consistent) {
    throw InternalConsistencyError("no phi satisfies the fitilde sum");
  }
  for (std::size_t c = 0; c < keys.size(); ++c) {
    phi.set(keys[c], element_from_bits(f.group(), sol.columns, c));
  }
  if (!(reconstruct_fitilde(phi, n) == f)) {
    throw InternalConsistencyError("fitilde reconstruction differs from f");
  }
  return {std::move(phi), sol.rank, keys.size()};
}

}  // namespace gapdecomp
