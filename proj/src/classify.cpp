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

#include "gapdecomp/classify.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "gapdecomp/errors.hpp"

namespace gapdecomp {

namespace {

const AbelianGroup& z2() {
  static const AbelianGroup g({2});
  return g;
}

const AbelianGroup& z3() {
  static const AbelianGroup g({3});
  return g;
}

std::uint32_t bool_form_value(const BooleanGapForm& form, const Tuple& x) {
  std::uint32_t v = form.c;
  switch (form.kind) {
    case BooleanGapKind::kParitySum:
      for (auto xi : x) v ^= xi;
      break;
    case BooleanGapKind::kXYplusX:
      v ^= (x[0] & x[1]) ^ x[0];
      break;
    case BooleanGapKind::kMajority3:
      v ^= (x[0] & x[1]) ^ (x[0] & x[2]) ^ (x[1] & x[2]);
      break;
    case BooleanGapKind::kMajority3PlusLinear:
      v ^= (x[0] & x[1]) ^ (x[0] & x[2]) ^ (x[1] & x[2]) ^ x[0] ^ x[1];
      break;
  }
  return v;
}

// True when g equals `form` after some permutation of its variables.
bool matches_up_to_permutation(const FnTable& g, const BooleanGapForm& form) {
  const FnTable target = form.table();
  std::vector<std::size_t> sigma(g.arity());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    if (simple_minor(g, sigma, g.arity()) == target) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

std::uint32_t mod3(std::int64_t v) {
  return static_cast<std::uint32_t>(((v % 3) + 3) % 3);
}

std::uint32_t poly(const Z3Params& p, std::uint32_t x) {
  return mod3(std::int64_t{p.a} * x * x + std::int64_t{p.b} * x + p.c);
}

}  // namespace

const char* to_string(BooleanGapKind kind) {
  switch (kind) {
    case BooleanGapKind::kParitySum:
      return "parity_sum";
    case BooleanGapKind::kXYplusX:
      return "xy_plus_x";
    case BooleanGapKind::kMajority3:
      return "majority3";
    case BooleanGapKind::kMajority3PlusLinear:
      return "majority3_plus_linear";
  }
  return "?";
}

std::string BooleanGapForm::to_string() const {
  std::string body;
  switch (kind) {
    case BooleanGapKind::kParitySum:
      for (std::size_t i = 1; i <= m; ++i) {
        body += (i > 1 ? " + x" : "x") + std::to_string(i);
      }
      break;
    case BooleanGapKind::kXYplusX:
      body = "x1 x2 + x1";
      break;
    case BooleanGapKind::kMajority3:
      body = "x1 x2 + x1 x3 + x2 x3";
      break;
    case BooleanGapKind::kMajority3PlusLinear:
      body = "x1 x2 + x1 x3 + x2 x3 + x1 + x2";
      break;
  }
  return body + " + " + std::to_string(c);
}

FnTable BooleanGapForm::table() const {
  return FnTable::tabulate(2, m, z2(), [&](const Tuple& x) {
    return GroupElement{bool_form_value(*this, x)};
  });
}

bool matches_boolean_form(const FnTable& f, const BooleanGapForm& form) {
  const FnTable g = reduce_to_essential(f);
  return g.arity() == form.m && g.a_size() == 2 && g.group() == z2() &&
         matches_up_to_permutation(g, form);
}

BooleanClassification classify_boolean(const FnTable& f) {
  if (f.a_size() != 2 || !(f.group() == z2())) {
    throw PreconditionError("Boolean classification needs {0,1}^n -> Z2");
  }
  const FnTable g = reduce_to_essential(f);
  const std::size_t m = g.arity();
  if (m < 2) {
    throw PreconditionError("gap undefined: fewer than two essential variables");
  }

  std::vector<BooleanGapForm> candidates;
  for (std::uint32_t c = 0; c < 2; ++c) {
    candidates.push_back({BooleanGapKind::kParitySum, m, c});
    if (m == 2) candidates.push_back({BooleanGapKind::kXYplusX, m, c});
    if (m == 3) {
      candidates.push_back({BooleanGapKind::kMajority3, m, c});
      candidates.push_back({BooleanGapKind::kMajority3PlusLinear, m, c});
    }
  }

  BooleanClassification out{1, std::nullopt};
  for (const auto& form : candidates) {
    if (matches_up_to_permutation(g, form)) {
      out = {2, form};
      break;
    }
  }
  if (arity_gap(f) != out.gap) {
    throw InternalConsistencyError("normal-form match disagrees with the gap");
  }
  return out;
}

Z3Params Z3Params::from_index(std::uint32_t index) {
  if (index >= kZ3ParamCount) throw DomainError("Z3 parameter index >= 81");
  Z3Params p;
  p.d = index % 3;
  p.c = (index / 3) % 3;
  p.b = (index / 9) % 3;
  p.a = (index / 27) % 3;
  return p;
}

std::string Z3Params::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + "," + std::to_string(d) + ")";
}

std::uint32_t PowersetZ3::letter() const {
  if (!is_singleton()) {
    throw InternalConsistencyError("symmetric-difference result is not a "
                                   "singleton");
  }
  return static_cast<std::uint32_t>(std::countr_zero(mask_));
}

std::uint32_t z3_eval(std::span<const Letter> x, const Z3Params& params) {
  const std::size_t n = x.size();
  PowersetZ3 acc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int64_t diff = std::int64_t{x[i]} - x[j];
      const std::uint32_t term =
          mod3(diff * diff * poly(params, mod3(x[i] + x[j])) + params.d);
      acc ^= PowersetZ3::singleton(term);
    }
  }
  if (n % 4 == 1 || n % 4 == 3) {
    for (std::size_t i = 0; i < n; ++i) {
      acc ^= PowersetZ3::singleton(mod3(poly(params, x[i]) + params.d));
    }
  }
  if (n % 4 == 0 || n % 4 == 3) acc ^= PowersetZ3::singleton(params.d);
  return acc.letter();
}

FnTable z3_build(std::size_t n, const Z3Params& params) {
  if (n < 4) throw PreconditionError("Z3 classification needs arity >= 4");
  if (params.a > 2 || params.b > 2 || params.c > 2 || params.d > 2) {
    throw DomainError("Z3 parameters must lie in {0,1,2}");
  }
  return FnTable::tabulate(3, n, z3(), [&](const Tuple& x) {
    return GroupElement{z3_eval(x, params)};
  });
}

const char* to_string(Z3Verdict verdict) {
  switch (verdict) {
    case Z3Verdict::kGap2:
      return "gap2";
    case Z3Verdict::kGap1:
      return "gap1";
    case Z3Verdict::kDegenerate:
      return "degenerate";
  }
  return "?";
}

namespace {

// The unique parameter tuple whose table at g's arity equals g, if any.
// Tuples are compared at canonical representatives first; both sides depend
// only on oddsupp there, and a candidate is then rebuilt in full.
std::optional<Z3Params> match_z3_params(const FnTable& g) {
  const std::size_t n = g.arity();
  if (!is_determined_by_oddsupp(g)) return std::nullopt;
  std::vector<Tuple> reps;
  for (auto s : pn_prime(3, n)) reps.push_back(canonical_representative(s, n));

  std::optional<Z3Params> found;
  for (std::uint32_t idx = 0; idx < kZ3ParamCount; ++idx) {
    const Z3Params p = Z3Params::from_index(idx);
    const bool match = std::all_of(reps.begin(), reps.end(), [&](const Tuple& x) {
      return g.eval(x)[0] == z3_eval(x, p);
    });
    if (!match) continue;
    if (found) {
      throw InternalConsistencyError("two parameter tuples match " +
                                     found->to_string() + " and " +
                                     p.to_string());
    }
    found = p;
  }
  if (found && !(z3_build(n, *found) == g)) {
    throw InternalConsistencyError("matched parameters do not rebuild f");
  }
  return found;
}

}  // namespace

Z3Classification z3_classify(const FnTable& f) {
  if (f.a_size() != 3 || !(f.group() == z3())) {
    throw PreconditionError("Z3 classification needs Z3^n -> Z3");
  }
  if (f.arity() < 4) {
    throw PreconditionError("Z3 classification needs arity >= 4");
  }
  const std::size_t ess = essential_arity(f);
  Z3Classification out{Z3Verdict::kDegenerate, std::nullopt, std::nullopt, ess};
  if (ess >= 2) out.gap = arity_gap(f);
  if (ess < 4) {
    // Constant members of the family still carry their parameters.
    if (ess == 0) out.params = match_z3_params(f);
    return out;
  }

  // The classification speaks about functions depending on all variables.
  const FnTable g = ess == f.arity() ? f : reduce_to_essential(f);

  if (!is_determined_by_oddsupp(g)) {
    if (*out.gap != 1) {
      throw InternalConsistencyError("function outside the 81-family has gap " +
                                     std::to_string(*out.gap));
    }
    out.verdict = Z3Verdict::kGap1;
    return out;
  }
  const auto found = match_z3_params(g);
  if (!found) {
    throw InternalConsistencyError("oddsupp-determined function matches no "
                                   "parameter tuple");
  }
  if (*out.gap != 2) {
    throw InternalConsistencyError("gap-2 family member has gap " +
                                   std::to_string(*out.gap));
  }
  out.verdict = Z3Verdict::kGap2;
  out.params = found;
  return out;
}

std::array<std::uint32_t, 4> z3_phi_of_params(const Z3Params& p) {
  return {mod3(std::int64_t{p.c} + p.d), mod3(std::int64_t{p.a} + p.b + p.c + p.d),
          mod3(std::int64_t{p.a} + 2 * p.b + p.c + p.d), p.d};
}

Z3Params z3_params_of_phi(const std::array<std::uint32_t, 4>& phi) {
  Z3Params p;
  p.d = phi[3] % 3;
  p.c = mod3(std::int64_t{phi[0]} - p.d);
  // phi[2] - phi[1] = b
  p.b = mod3(std::int64_t{phi[2]} - phi[1]);
  p.a = mod3(std::int64_t{phi[1]} - p.b - p.c - p.d);
  return p;
}

}  // namespace gapdecomp
