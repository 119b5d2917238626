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

#include "gapdecomp/oddsupp.hpp"

#include <algorithm>

#include "gapdecomp/errors.hpp"

namespace gapdecomp {

namespace {

void check_phi_alphabet(std::uint32_t a_size) {
  if (a_size < 2) throw ArgumentError("alphabet size must be at least 2");
  if (a_size > kMaxPhiAlphabet) {
    throw ResourceError("phi maps support alphabets of at most " +
                        std::to_string(kMaxPhiAlphabet) + " letters");
  }
}

}  // namespace

SubsetA SubsetA::of(std::initializer_list<Letter> letters) {
  std::uint32_t mask = 0;
  for (auto a : letters) {
    if (a >= 32) throw DomainError("letter out of range");
    mask |= 1u << a;
  }
  return SubsetA(mask);
}

std::vector<Letter> SubsetA::letters() const {
  std::vector<Letter> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<Letter>(std::countr_zero(m)));
  }
  return out;
}

std::string SubsetA::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto a : letters()) {
    if (!first) out += ',';
    out += std::to_string(a);
    first = false;
  }
  return out + "}";
}

SubsetA oddsupp(std::uint32_t a_size, std::span<const Letter> x) {
  if (a_size > 32) throw DomainError("alphabet too large for SubsetA");
  std::uint32_t mask = 0;
  for (auto a : x) {
    if (a >= a_size) {
      throw DomainError("tuple component " + std::to_string(a) +
                        " outside alphabet of size " + std::to_string(a_size));
    }
    mask ^= 1u << a;
  }
  return SubsetA(mask);
}

bool in_pn_prime(SubsetA s, std::size_t n) {
  return s.size() <= n && (n - s.size()) % 2 == 0;
}

std::vector<SubsetA> pn_prime(std::uint32_t a_size, std::size_t n) {
  check_phi_alphabet(a_size);
  std::vector<SubsetA> out;
  for (std::uint32_t m = 0; m < (1u << a_size); ++m) {
    if (in_pn_prime(SubsetA(m), n)) out.emplace_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PhiMap::PhiMap(PhiDomain domain, std::size_t arity, std::uint32_t a_size,
               AbelianGroup group)
    : domain_(domain),
      arity_(arity),
      a_size_(a_size),
      group_(std::move(group)),
      entries_(std::size_t{1} << a_size) {}

PhiMap PhiMap::pn_prime(std::uint32_t a_size, std::size_t n,
                        const AbelianGroup& group) {
  check_phi_alphabet(a_size);
  if (n == 0) throw ArgumentError("P'_n(A) needs n >= 1");
  PhiMap phi(PhiDomain::kPnPrime, n, a_size, group);
  for (auto s : gapdecomp::pn_prime(a_size, n)) {
    phi.entries_[s.mask()] = group.zero();
  }
  return phi;
}

PhiMap PhiMap::full_paired(std::uint32_t a_size, const AbelianGroup& group) {
  check_phi_alphabet(a_size);
  PhiMap phi(PhiDomain::kFullPaired, 0, a_size, group);
  for (auto& e : phi.entries_) e = group.zero();
  return phi;
}

std::vector<SubsetA> PhiMap::keys() const {
  std::vector<SubsetA> out;
  for (std::uint32_t m = 0; m < entries_.size(); ++m) {
    if (entries_[m]) out.emplace_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PhiMap::has(SubsetA s) const noexcept {
  return s.mask() < entries_.size() && entries_[s.mask()].has_value();
}

const GroupElement& PhiMap::at(SubsetA s) const {
  if (!has(s)) {
    throw CoverageError("phi is not defined on " + s.to_string());
  }
  return *entries_[s.mask()];
}

void PhiMap::set(SubsetA s, const GroupElement& value) {
  if (!has(s)) {
    throw CoverageError("phi has no key " + s.to_string());
  }
  if (!group_.contains(value)) {
    throw ShapeError("phi value is not an element of " + group_.to_string());
  }
  entries_[s.mask()] = value;
  if (domain_ == PhiDomain::kFullPaired) entries_[s.mask() ^ 1u] = value;
}

PhiMap PhiMap::restrict_to_pn_prime(std::size_t n) const {
  PhiMap out = PhiMap::pn_prime(a_size_, n, group_);
  for (auto s : out.keys()) out.set(s, at(s));
  return out;
}

PhiMap PhiMap::pair_extension() const {
  if (domain_ != PhiDomain::kPnPrime) {
    throw ArgumentError("pair_extension needs a P'_n(A) map");
  }
  if (arity_ <= a_size_) {
    throw PreconditionError("pair_extension needs n > |A|");
  }
  PhiMap out = PhiMap::full_paired(a_size_, group_);
  for (auto s : keys()) out.set(s, at(s));
  return out;
}

PhiMap PhiMap::operator+(const PhiMap& other) const {
  if (domain_ != other.domain_ || arity_ != other.arity_ ||
      a_size_ != other.a_size_ || !(group_ == other.group_)) {
    throw ShapeError("phi maps differ in shape");
  }
  PhiMap out = *this;
  for (std::size_t m = 0; m < entries_.size(); ++m) {
    if (entries_[m]) out.entries_[m] = group_.add(*entries_[m], *other.entries_[m]);
  }
  return out;
}

bool PhiMap::operator==(const PhiMap& other) const {
  return domain_ == other.domain_ && arity_ == other.arity_ &&
         a_size_ == other.a_size_ && group_ == other.group_ &&
         entries_ == other.entries_;
}

FnTable theta_table(const PhiMap& phi, std::size_t n) {
  return FnTable::tabulate(phi.a_size(), n, phi.group(), [&](const Tuple& x) {
    return phi.at(oddsupp(phi.a_size(), x));
  });
}

bool determined_by_symmetry_test(const FnTable& f) {
  if (f.arity() == 0) throw PreconditionError("arity must be at least 1");
  // Every unary function depends only on oddsupp(x) = {x}.
  if (f.arity() == 1) return true;
  if (!is_totally_symmetric(f)) return false;
  return !is_essential(identification_minor(f, 1, 0), 0);
}

std::optional<PhiMap> is_determined_by_oddsupp(const FnTable& f) {
  if (f.arity() == 0) throw PreconditionError("arity must be at least 1");
  check_phi_alphabet(f.a_size());

  std::vector<std::optional<GroupElement>> seen(std::size_t{1}
                                                << f.a_size());
  bool grouped = true;
  Tuple x(f.arity(), 0);
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    auto& slot = seen[oddsupp(f.a_size(), x).mask()];
    if (!slot) {
      slot = f.at(idx);
    } else if (*slot != f.at(idx)) {
      grouped = false;
      break;
    }
    FnTable::advance(x, f.a_size());
  }

  if (grouped != determined_by_symmetry_test(f)) {
    throw InternalConsistencyError(
        "oddsupp grouping and symmetry criterion disagree");
  }
  if (!grouped) return std::nullopt;

  PhiMap phi = PhiMap::pn_prime(f.a_size(), f.arity(), f.group());
  for (auto s : phi.keys()) {
    if (!seen[s.mask()]) {
      throw InternalConsistencyError("subset " + s.to_string() +
                                     " of P'_n(A) never occurs as an oddsupp");
    }
    phi.set(s, *seen[s.mask()]);
  }
  return phi;
}

Tuple canonical_representative(SubsetA s, std::size_t n) {
  if (!in_pn_prime(s, n)) {
    throw ArgumentError("subset " + s.to_string() +
                        " has the wrong size or parity for arity " +
                        std::to_string(n));
  }
  if (s.empty()) return Tuple(n, 0);
  const auto letters = s.letters();
  Tuple x(n - letters.size() + 1, letters.front());
  x.insert(x.end(), letters.begin() + 1, letters.end());
  return x;
}

BigInt count_determined(std::uint32_t a_size, std::size_t n,
                        const AbelianGroup& group) {
  BigInt base = group.order();
  return boost::multiprecision::pow(
      base, static_cast<unsigned>(gapdecomp::pn_prime(a_size, n).size()));
}

}  // namespace gapdecomp
