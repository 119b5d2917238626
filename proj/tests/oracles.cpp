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

#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

using gapdecomp::BoolForm;

std::vector<Tuple> all_tuples(std::uint32_t a_size, std::size_t n) {
  std::vector<Tuple> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= a_size;
  for (std::size_t idx = 0; idx < total; ++idx) {
    Tuple x(n);
    std::size_t r = idx;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<Letter>(r % a_size);
      r /= a_size;
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::uint64_t order_by_iteration(const AbelianGroup& g, const GroupElement& x) {
  GroupElement acc = x;
  std::uint64_t k = 1;
  while (!(acc == g.zero())) {
    acc = g.add(acc, x);
    ++k;
  }
  return k;
}

std::uint32_t oddsupp_mask(const Tuple& x) {
  std::map<Letter, int> counts;
  for (auto v : x) ++counts[v];
  std::uint32_t mask = 0;
  for (auto [letter, count] : counts) {
    if (count % 2 == 1) mask |= 1u << letter;
  }
  return mask;
}

std::vector<std::size_t> essential_positions(const FnTable& f) {
  std::vector<std::size_t> out;
  const auto tuples = all_tuples(f.a_size(), f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) {
    bool essential = false;
    for (const auto& x : tuples) {
      for (Letter a = 0; a < f.a_size() && !essential; ++a) {
        Tuple y = x;
        y[i] = a;
        essential = !(f.eval(x) == f.eval(y));
      }
      if (essential) break;
    }
    if (essential) out.push_back(i);
  }
  return out;
}

std::optional<std::size_t> gap(const FnTable& f) {
  const auto ess = essential_positions(f);
  if (ess.size() < 2) return std::nullopt;
  std::size_t best = ess.size();
  for (auto i : ess) {
    for (auto j : ess) {
      if (i == j) continue;
      std::vector<GroupElement> values;
      for (const auto& x : all_tuples(f.a_size(), f.arity())) {
        Tuple y = x;
        y[i] = x[j];
        values.push_back(f.eval(y));
      }
      const FnTable minor(f.a_size(), f.arity(), f.group(), values);
      best = std::min(best, ess.size() - essential_positions(minor).size());
    }
  }
  return best;
}

std::optional<std::map<std::uint32_t, GroupElement>> oddsupp_classes(
    const FnTable& f) {
  std::map<std::uint32_t, GroupElement> classes;
  for (const auto& x : all_tuples(f.a_size(), f.arity())) {
    const auto key = oddsupp_mask(x);
    const auto value = f.eval(x);
    auto [it, inserted] = classes.emplace(key, value);
    if (!inserted && !(it->second == value)) return std::nullopt;
  }
  return classes;
}

GroupElement derivative(const FnTable& f, const std::vector<std::size_t>& vars,
                        const Tuple& params, const Tuple& x) {
  if (vars.empty()) return f.eval(x);
  const std::size_t i = vars.back();
  const std::vector<std::size_t> rest(vars.begin(), vars.end() - 1);
  Tuple y = x;
  y[i] = params[i];
  return f.group().sub(derivative(f, rest, params, y),
                       derivative(f, rest, params, x));
}

bool binomial_parity(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial_parity: n < 0");
  if (k < 0 || k > n) return false;
  std::vector<bool> row{true};
  for (std::int64_t r = 1; r <= n; ++r) {
    std::vector<bool> next(static_cast<std::size_t>(r) + 1, false);
    next.front() = next.back() = true;
    for (std::int64_t c = 1; c < r; ++c) {
      next[static_cast<std::size_t>(c)] =
          row[static_cast<std::size_t>(c) - 1] != row[static_cast<std::size_t>(c)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

namespace {

// (subset size, coefficient parity) pairs of a canonical form.
std::vector<std::pair<std::size_t, bool>> layers(BoolForm form,
                                                 std::uint32_t a_size,
                                                 std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  const auto a = static_cast<std::int64_t>(a_size);
  std::vector<std::pair<std::size_t, bool>> out;
  if (form == BoolForm::kFitilde) {
    for (std::int64_t i = 1; i <= nn / 2; ++i) {
      out.emplace_back(static_cast<std::size_t>(nn - 2 * i), true);
    }
    return out;
  }
  const std::int64_t t = form == BoolForm::kOdd ? (nn - a - 1) / 2 : (nn - a) / 2;
  for (std::int64_t i = t + 1; i <= nn / 2; ++i) {
    out.emplace_back(static_cast<std::size_t>(nn - 2 * i),
                     binomial_parity(i - 1, t));
  }
  if (form == BoolForm::kEven) {
    for (std::int64_t k = t + 1; k <= (nn + 1) / 2; ++k) {
      out.emplace_back(static_cast<std::size_t>(nn - 2 * k + 1),
                       binomial_parity(2 * k - 1, 2 * t));
    }
  }
  return out;
}

}  // namespace

FnTable reconstruct(BoolForm form, std::uint32_t a_size, std::size_t n,
                    const AbelianGroup& group,
                    const std::function<GroupElement(std::uint32_t)>& value) {
  const auto tuples = all_tuples(a_size, n);
  std::vector<GroupElement> values(tuples.size(), group.zero());
  for (auto [size, odd] : layers(form, a_size, n)) {
    if (!odd) continue;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
      for (std::size_t idx = 0; idx < tuples.size(); ++idx) {
        Tuple restricted;
        for (std::size_t i = 0; i < n; ++i) {
          if ((mask >> i) & 1u) restricted.push_back(tuples[idx][i]);
        }
        values[idx] = group.add(values[idx], value(oddsupp_mask(restricted)));
      }
    }
  }
  return FnTable(a_size, n, group, values);
}

std::vector<std::map<std::uint32_t, GroupElement>> all_phis(
    std::uint32_t a_size, std::size_t n, const AbelianGroup& group) {
  std::vector<std::uint32_t> keys;
  for (std::uint32_t mask = 0; mask < (1u << a_size); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= n && (n - size) % 2 == 0) keys.push_back(mask);
  }
  const auto elements = group.elements();
  std::vector<std::map<std::uint32_t, GroupElement>> out;
  std::vector<std::size_t> digits(keys.size(), 0);
  while (true) {
    std::map<std::uint32_t, GroupElement> phi;
    for (std::size_t k = 0; k < keys.size(); ++k) {
      phi.emplace(keys[k], elements[digits[k]]);
    }
    out.push_back(std::move(phi));
    std::size_t k = 0;
    while (k < keys.size() && ++digits[k] == elements.size()) digits[k++] = 0;
    if (k == keys.size()) break;
  }
  return out;
}

FnTable theta(std::uint32_t a_size, std::size_t n, const AbelianGroup& group,
              const std::map<std::uint32_t, GroupElement>& phi) {
  std::vector<GroupElement> values;
  for (const auto& x : all_tuples(a_size, n)) {
    values.push_back(phi.at(oddsupp_mask(x)));
  }
  return FnTable(a_size, n, group, values);
}

std::vector<FnTable> determined_tables(std::uint32_t a_size, std::size_t n,
                                       const AbelianGroup& group) {
  std::vector<FnTable> out;
  for (const auto& phi : all_phis(a_size, n, group)) {
    out.push_back(theta(a_size, n, group, phi));
  }
  return out;
}

std::uint64_t count_determined_exhaustive(std::uint32_t a_size, std::size_t n) {
  const auto tuples = all_tuples(a_size, n);
  if (tuples.size() > 32) throw std::invalid_argument("table too large");
  // One bit pattern per oddsupp class.
  std::map<std::uint32_t, std::uint64_t> class_bits;
  for (std::size_t idx = 0; idx < tuples.size(); ++idx) {
    class_bits[oddsupp_mask(tuples[idx])] |= std::uint64_t{1} << idx;
  }
  std::vector<std::uint64_t> masks;
  for (auto& [key, bits] : class_bits) masks.push_back(bits);
  const std::uint64_t total = std::uint64_t{1} << tuples.size();
  std::uint64_t count = 0;
  for (std::uint64_t table = 0; table < total; ++table) {
    bool ok = true;
    for (auto m : masks) {
      const auto part = table & m;
      if (part != 0 && part != m) {
        ok = false;
        break;
      }
    }
    count += ok ? 1 : 0;
  }
  return count;
}

FnTable boolean_table(std::uint32_t a_size, std::size_t n, std::uint64_t bits) {
  const AbelianGroup z2({2});
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= a_size;
  std::vector<GroupElement> values;
  for (std::size_t idx = 0; idx < total; ++idx) {
    values.push_back(GroupElement{static_cast<std::uint32_t>((bits >> idx) & 1u)});
  }
  return FnTable(a_size, n, z2, values);
}

FnTable random_table(std::mt19937_64& rng, std::uint32_t a_size, std::size_t n,
                     const AbelianGroup& group) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= a_size;
  std::uniform_int_distribution<std::uint64_t> pick(0, group.order() - 1);
  std::vector<GroupElement> values;
  for (std::size_t idx = 0; idx < total; ++idx) {
    values.push_back(group.element_at(pick(rng)));
  }
  return FnTable(a_size, n, group, values);
}

FnTable random_full_table(std::mt19937_64& rng, std::uint32_t a_size,
                          std::size_t n, const AbelianGroup& group) {
  while (true) {
    FnTable f = random_table(rng, a_size, n, group);
    if (essential_positions(f).size() == n) return f;
  }
}

}  // namespace oracle
