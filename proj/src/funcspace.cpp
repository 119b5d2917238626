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

#include "gapdecomp/funcspace.hpp"

#include <algorithm>
#include <limits>

#include "gapdecomp/errors.hpp"

namespace gapdecomp {

namespace {

constexpr std::size_t kMaxTableSize = std::size_t{1} << 28;

}  // namespace

VarSubset VarSubset::of(std::initializer_list<std::size_t> positions) {
  std::uint32_t mask = 0;
  for (auto p : positions) {
    if (p >= kMaxArity) throw DomainError("variable position out of range");
    mask |= 1u << p;
  }
  return VarSubset(mask);
}

VarSubset VarSubset::all(std::size_t n) {
  if (n > kMaxArity) throw DomainError("arity out of range for VarSubset");
  return VarSubset(n == 0 ? 0u : (~0u >> (32 - n)));
}

std::vector<std::size_t> VarSubset::positions() const {
  std::vector<std::size_t> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

std::string VarSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto p : positions()) {
    if (!first) out += ',';
    out += std::to_string(p + 1);
    first = false;
  }
  return out + "}";
}

std::size_t FnTable::table_size(std::uint32_t a_size, std::size_t arity) {
  if (a_size < 2) throw ArgumentError("alphabet size must be at least 2");
  if (arity > kMaxArity) throw ResourceError("arity exceeds supported bound");
  std::size_t n = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (n > kMaxTableSize / a_size) {
      throw ResourceError("table with " + std::to_string(a_size) + "^" +
                          std::to_string(arity) + " entries is too large");
    }
    n *= a_size;
  }
  return n;
}

bool FnTable::advance(Tuple& x, std::uint32_t a_size) {
  for (auto& c : x) {
    if (++c < a_size) return true;
    c = 0;
  }
  return false;
}

FnTable::FnTable(std::uint32_t a_size, std::size_t arity, AbelianGroup group,
                 std::vector<GroupElement> values)
    : a_size_(a_size),
      arity_(arity),
      group_(std::move(group)),
      values_(std::move(values)) {
  const std::size_t n = table_size(a_size, arity);
  if (values_.size() != n) {
    throw ShapeError("table needs " + std::to_string(n) + " values, got " +
                     std::to_string(values_.size()));
  }
  for (const auto& v : values_) {
    if (!group_.contains(v)) {
      throw ShapeError("table value is not an element of " +
                       group_.to_string());
    }
  }
  strides_.resize(arity_ + 1);
  strides_[0] = 1;
  for (std::size_t i = 0; i < arity_; ++i) strides_[i + 1] = strides_[i] * a_size_;
}

FnTable FnTable::constant(std::uint32_t a_size, std::size_t arity,
                          const AbelianGroup& group, const GroupElement& c) {
  return FnTable(a_size, arity, group,
                 std::vector<GroupElement>(table_size(a_size, arity), c));
}

std::size_t FnTable::index_of(std::span<const Letter> x) const {
  if (x.size() != arity_) {
    throw ShapeError("tuple of length " + std::to_string(x.size()) +
                     " for arity " + std::to_string(arity_));
  }
  std::size_t index = 0;
  for (std::size_t i = arity_; i-- > 0;) {
    if (x[i] >= a_size_) {
      throw DomainError("tuple component " + std::to_string(x[i]) +
                        " outside alphabet of size " + std::to_string(a_size_));
    }
    index = index * a_size_ + x[i];
  }
  return index;
}

Tuple FnTable::tuple_at(std::size_t index) const {
  if (index >= values_.size()) throw DomainError("tuple index out of range");
  Tuple x(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    x[i] = static_cast<Letter>(index % a_size_);
    index /= a_size_;
  }
  return x;
}

GroupElement FnTable::eval(std::span<const Letter> x) const {
  return values_[index_of(x)];
}

bool FnTable::is_zero() const {
  const GroupElement z = group_.zero();
  return std::all_of(values_.begin(), values_.end(),
                     [&](const GroupElement& v) { return v == z; });
}

bool FnTable::same_shape(const FnTable& other) const noexcept {
  return a_size_ == other.a_size_ && arity_ == other.arity_ &&
         group_ == other.group_;
}

bool FnTable::operator==(const FnTable& other) const {
  return same_shape(other) && values_ == other.values_;
}

namespace {

template <class Op>
FnTable pointwise(const FnTable& f, const FnTable& g, Op op) {
  if (!f.same_shape(g)) throw ShapeError("tables differ in shape");
  std::vector<GroupElement> values(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values[i] = op(f.at(i), g.at(i));
  return FnTable(f.a_size(), f.arity(), f.group(), std::move(values));
}

}  // namespace

FnTable operator+(const FnTable& f, const FnTable& g) {
  const auto& grp = f.group();
  return pointwise(f, g, [&](const auto& x, const auto& y) {
    return grp.add(x, y);
  });
}

FnTable operator-(const FnTable& f, const FnTable& g) {
  const auto& grp = f.group();
  return pointwise(f, g, [&](const auto& x, const auto& y) {
    return grp.sub(x, y);
  });
}

FnTable simple_minor(const FnTable& f, std::span<const std::size_t> sigma,
                     std::size_t m) {
  if (sigma.size() != f.arity()) {
    throw ArgumentError("sigma must be defined on all " +
                        std::to_string(f.arity()) + " positions");
  }
  for (auto s : sigma) {
    if (s >= m) {
      throw DomainError("sigma maps to position " + std::to_string(s + 1) +
                        " outside [" + std::to_string(m) + "]");
    }
  }
  Tuple source(f.arity());
  return FnTable::tabulate(f.a_size(), m, f.group(), [&](const Tuple& y) {
    for (std::size_t i = 0; i < sigma.size(); ++i) source[i] = y[sigma[i]];
    return f.at(f.index_of(source));
  });
}

FnTable identification_minor(const FnTable& f, std::size_t i, std::size_t j) {
  if (i >= f.arity() || j >= f.arity()) {
    throw DomainError("identified variable out of range");
  }
  if (i == j) throw ArgumentError("cannot identify a variable with itself");
  std::vector<std::size_t> sigma(f.arity());
  for (std::size_t k = 0; k < sigma.size(); ++k) sigma[k] = k;
  sigma[i] = j;
  return simple_minor(f, sigma, f.arity());
}

bool is_essential(const FnTable& f, std::size_t i) {
  if (i >= f.arity()) throw DomainError("variable out of range");
  const std::size_t s = f.stride(i);
  const std::size_t block = s * f.a_size();
  const auto& v = f.values();
  for (std::size_t base = 0; base < v.size(); base += block) {
    for (std::size_t off = 0; off < s; ++off) {
      const GroupElement& ref = v[base + off];
      for (std::size_t a = 1; a < f.a_size(); ++a) {
        if (v[base + off + a * s] != ref) return true;
      }
    }
  }
  return false;
}

VarSubset essential_variables(const FnTable& f) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (is_essential(f, i)) mask |= 1u << i;
  }
  return VarSubset(mask);
}

std::size_t essential_arity(const FnTable& f) {
  return essential_variables(f).size();
}

std::size_t arity_gap(const FnTable& f) {
  const auto ess = essential_variables(f).positions();
  if (ess.size() < 2) {
    throw PreconditionError("gap undefined: fewer than two essential variables");
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  // f_{i<-j} and f_{j<-i} are equivalent, so unordered pairs suffice.
  for (std::size_t a = 0; a < ess.size(); ++a) {
    for (std::size_t b = a + 1; b < ess.size(); ++b) {
      const auto minor = identification_minor(f, ess[b], ess[a]);
      const std::size_t drop = ess.size() - essential_arity(minor);
      best = std::min(best, drop);
      if (best == 1) return best;
    }
  }
  return best;
}

bool is_totally_symmetric(const FnTable& f) {
  const auto& v = f.values();
  const std::uint32_t q = f.a_size();
  for (std::size_t i = 0; i + 1 < f.arity(); ++i) {
    const std::size_t si = f.stride(i);
    const std::size_t sj = f.stride(i + 1);
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
      const std::size_t xi = (idx / si) % q;
      const std::size_t xj = (idx / sj) % q;
      if (xi >= xj) continue;
      const std::size_t swapped = idx + (xj - xi) * si - (xj - xi) * sj;
      if (v[idx] != v[swapped]) return false;
    }
  }
  return true;
}

FnTable reduce_to_essential(const FnTable& f) {
  const auto ess = essential_variables(f).positions();
  Tuple x(f.arity(), 0);
  return FnTable::tabulate(f.a_size(), ess.size(), f.group(),
                           [&](const Tuple& y) {
                             for (std::size_t k = 0; k < ess.size(); ++k) {
                               x[ess[k]] = y[k];
                             }
                             return f.at(f.index_of(x));
                           });
}

}  // namespace gapdecomp
