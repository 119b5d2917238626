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

#include "gapdecomp/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include "gapdecomp/errors.hpp"

namespace gapdecomp {

namespace {

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = a / g;
  if (q != 0 && b > std::numeric_limits<std::uint64_t>::max() / q) {
    throw ResourceError("group exponent overflows 64 bits");
  }
  return q * b;
}

std::uint32_t parse_uint(std::string_view text, const char* what) {
  std::uint32_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(text) + "'",
                     0);
  }
  return value;
}

}  // namespace

GroupElement::GroupElement(std::initializer_list<std::uint32_t> residues)
    : GroupElement(std::vector<std::uint32_t>(residues)) {}

GroupElement::GroupElement(const std::vector<std::uint32_t>& residues) {
  if (residues.size() > kMaxFactors) {
    throw ShapeError("group elements support at most " +
                     std::to_string(kMaxFactors) + " factors");
  }
  std::copy(residues.begin(), residues.end(), residues_.begin());
  size_ = static_cast<std::uint8_t>(residues.size());
}

std::vector<std::uint32_t> GroupElement::residues() const {
  return {residues_.begin(), residues_.begin() + size_};
}

bool GroupElement::operator==(const GroupElement& other) const noexcept {
  return size_ == other.size_ &&
         std::equal(residues_.begin(), residues_.begin() + size_,
                    other.residues_.begin());
}

std::strong_ordering GroupElement::operator<=>(
    const GroupElement& other) const noexcept {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  for (std::size_t i = 0; i < size_; ++i) {
    if (auto c = residues_[i] <=> other.residues_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> moduli)
    : moduli_(std::move(moduli)) {
  if (moduli_.size() > kMaxFactors) {
    throw ArgumentError("at most " + std::to_string(kMaxFactors) +
                        " cyclic factors are supported");
  }
  for (auto m : moduli_) {
    if (m < 2) throw ArgumentError("every modulus must be at least 2");
  }
}

AbelianGroup AbelianGroup::parse(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "trivial" || lower == "1") return AbelianGroup{};
  std::vector<std::uint32_t> moduli;
  std::size_t pos = 0;
  while (pos <= lower.size()) {
    std::size_t next = lower.find('x', pos);
    if (next == std::string::npos) next = lower.size();
    std::string_view factor(lower.data() + pos, next - pos);
    if (factor.size() < 2 || factor.front() != 'z') {
      throw ParseError("bad group factor '" + std::string(factor) +
                           "' in '" + std::string(text) + "'",
                       0);
    }
    moduli.push_back(parse_uint(factor.substr(1), "modulus"));
    pos = next + 1;
  }
  try {
    return AbelianGroup(std::move(moduli));
  } catch (const ArgumentError& e) {
    throw ParseError(e.what(), 0);
  }
}

std::uint64_t AbelianGroup::order() const {
  std::uint64_t n = 1;
  for (auto m : moduli_) {
    if (n > std::numeric_limits<std::uint64_t>::max() / m) {
      throw ResourceError("group order overflows 64 bits");
    }
    n *= m;
  }
  return n;
}

GroupElement AbelianGroup::zero() const {
  return GroupElement(std::vector<std::uint32_t>(moduli_.size(), 0));
}

bool AbelianGroup::contains(const GroupElement& x) const noexcept {
  if (x.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (x[i] >= moduli_[i]) return false;
  }
  return true;
}

void AbelianGroup::check(const GroupElement& x) const {
  if (x.size() != moduli_.size()) {
    throw ShapeError("element has " + std::to_string(x.size()) +
                     " components, group " + to_string() + " has " +
                     std::to_string(moduli_.size()));
  }
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (x[i] >= moduli_[i]) {
      throw DomainError("residue " + std::to_string(x[i]) +
                        " out of range for Z" + std::to_string(moduli_[i]));
    }
  }
}

GroupElement AbelianGroup::add(const GroupElement& x,
                               const GroupElement& y) const {
  check(x);
  check(y);
  GroupElement r = x;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const std::uint64_t s = std::uint64_t{x[i]} + y[i];
    r[i] = static_cast<std::uint32_t>(s % moduli_[i]);
  }
  return r;
}

GroupElement AbelianGroup::neg(const GroupElement& x) const {
  check(x);
  GroupElement r = x;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    r[i] = x[i] == 0 ? 0 : moduli_[i] - x[i];
  }
  return r;
}

GroupElement AbelianGroup::sub(const GroupElement& x,
                               const GroupElement& y) const {
  return add(x, neg(y));
}

GroupElement AbelianGroup::scalar_mul(std::int64_t k,
                                      const GroupElement& x) const {
  check(x);
  GroupElement r = x;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const std::int64_t m = moduli_[i];
    const std::int64_t kr = ((k % m) + m) % m;
    r[i] = static_cast<std::uint32_t>((static_cast<__int128>(kr) * x[i]) % m);
  }
  return r;
}

bool AbelianGroup::is_zero(const GroupElement& x) const {
  check(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) return false;
  }
  return true;
}

std::uint64_t AbelianGroup::order_of(const GroupElement& x) const {
  check(x);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const std::uint64_t m = moduli_[i];
    result = checked_lcm(result, m / std::gcd<std::uint64_t>(x[i], m));
  }
  return result;
}

std::uint64_t AbelianGroup::exponent() const {
  std::uint64_t result = 1;
  for (auto m : moduli_) result = checked_lcm(result, m);
  return result;
}

std::optional<unsigned> AbelianGroup::exponent_pow2() const {
  const std::uint64_t e = exponent();
  if ((e & (e - 1)) != 0) return std::nullopt;
  unsigned log = 0;
  while ((std::uint64_t{1} << log) != e) ++log;
  return log;
}

bool AbelianGroup::is_boolean() const { return 2 % exponent() == 0; }

bool AbelianGroup::is_elementary_2() const noexcept {
  return std::all_of(moduli_.begin(), moduli_.end(),
                     [](std::uint32_t m) { return m == 2; });
}

std::vector<GroupElement> AbelianGroup::elements() const {
  const std::uint64_t n = order();
  std::vector<GroupElement> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

std::uint64_t AbelianGroup::index_of(const GroupElement& x) const {
  check(x);
  std::uint64_t index = 0;
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    index = index * moduli_[i] + x[i];
  }
  return index;
}

GroupElement AbelianGroup::element_at(std::uint64_t index) const {
  GroupElement r = zero();
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    r[i] = static_cast<std::uint32_t>(index % moduli_[i]);
    index /= moduli_[i];
  }
  if (index != 0) throw DomainError("element index out of range");
  return r;
}

std::string AbelianGroup::format(const GroupElement& x) const {
  check(x);
  if (moduli_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(x[i]);
  }
  return out;
}

GroupElement AbelianGroup::parse_element(std::string_view text) const {
  if (moduli_.empty()) {
    if (text == "0") return zero();
    throw ParseError("trivial group only has element 0", 0);
  }
  std::vector<std::uint32_t> residues;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    residues.push_back(parse_uint(text.substr(pos, next - pos), "residue"));
    pos = next + 1;
  }
  if (residues.size() != moduli_.size()) {
    throw ParseError("element '" + std::string(text) + "' does not match " +
                         to_string(),
                     0);
  }
  GroupElement x(residues);
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (x[i] >= moduli_[i]) {
      throw ParseError("element '" + std::string(text) + "' out of range for " +
                           to_string(),
                       0);
    }
  }
  return x;
}

std::string AbelianGroup::to_string() const {
  if (moduli_.empty()) return "trivial";
  std::ostringstream os;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i > 0) os << 'x';
    os << 'Z' << moduli_[i];
  }
  return os.str();
}

}  // namespace gapdecomp
