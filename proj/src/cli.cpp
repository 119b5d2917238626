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

#include "gapdecomp/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include <openssl/evp.h>

#include "gapdecomp/booldecomp.hpp"
#include "gapdecomp/calculus.hpp"
#include "gapdecomp/classify.hpp"
#include "gapdecomp/errors.hpp"
#include "gapdecomp/identities.hpp"
#include "gapdecomp/io.hpp"
#include "gapdecomp/witnesses.hpp"

namespace gapdecomp::cli {

using nlohmann::json;

namespace {

constexpr long kMaxIdentityM = 64;
constexpr std::int64_t kCliPairsOracleCap = 20;

json positions_json(VarSubset vars) {
  json out = json::array();
  for (auto p : vars.positions()) out.push_back(p + 1);
  return out;
}

json phi_json(const PhiMap& phi) {
  json entries = json::array();
  for (auto s : phi.keys()) {
    entries.push_back({{"set", s.to_string()},
                       {"value", phi.group().format(phi.at(s))}});
  }
  return {{"domain", phi.domain() == PhiDomain::kFullPaired
                         ? std::string("full")
                         : "pnprime:" + std::to_string(phi.arity())},
          {"entries", entries}};
}

std::string phi_text(const PhiMap& phi, const std::string& indent) {
  std::string out;
  for (auto s : phi.keys()) {
    out += indent + s.to_string() + " -> " + phi.group().format(phi.at(s)) + "\n";
  }
  return out;
}

json input_json(const std::filesystem::path& path) {
  return {{"path", path.string()}, {"sha256", file_digest(path)}};
}

json table_shape_json(const FnTable& f) {
  return {{"domain", f.a_size()},
          {"arity", f.arity()},
          {"group", f.group().to_string()}};
}

// Runs `body`, converting library errors into error reports with the
// documented exit codes.
template <class Body>
Report guarded(const std::string& command, Body body) {
  auto fail = [&](int code, const char* kind, const std::string& message) {
    Report r;
    r.exit_code = code;
    r.payload = {{"command", command},
                 {"status", "error"},
                 {"error", {{"kind", kind}, {"message", message}}}};
    r.text = command + ": " + kind + " error: " + message + "\n";
    return r;
  };
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(kExitParse, "parse", e.what());
  } catch (const InternalConsistencyError& e) {
    return fail(kExitInternal, "internal-consistency", e.what());
  } catch (const Error& e) {
    return fail(kExitPrecondition, "precondition", e.what());
  }
}

// First identification pair realizing the gap.
json gap_certificate(const FnTable& f, std::size_t gap, std::string& text) {
  const auto ess = essential_variables(f).positions();
  for (std::size_t a = 0; a < ess.size(); ++a) {
    for (std::size_t b = a + 1; b < ess.size(); ++b) {
      const std::size_t after =
          essential_arity(identification_minor(f, ess[b], ess[a]));
      if (ess.size() - after == gap) {
        text = "identify x" + std::to_string(ess[b] + 1) + " <- x" +
               std::to_string(ess[a] + 1) + ": " + std::to_string(ess.size()) +
               " -> " + std::to_string(after);
        return {{"identify", {ess[b] + 1, ess[a] + 1}},
                {"essential_arity_after", after}};
      }
    }
  }
  throw InternalConsistencyError("no identification realizes the gap");
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

}  // namespace

std::string Report::json(bool meta) const {
  if (!meta) return payload.dump(2) + "\n";
  const auto now = std::chrono::system_clock::now();
  const auto secs =
      std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch());
  nlohmann::json envelope = {
      {"meta", {{"tool", "gapdecomp"}, {"unix_time", secs.count()}}},
      {"report", payload}};
  return envelope.dump(2) + "\n";
}

std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  std::vector<char> buffer(1 << 16);
  while (in) {
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    EVP_DigestUpdate(ctx.get(), buffer.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0')
       << static_cast<int>(digest[i]);
  }
  return os.str();
}

Report cmd_analyze(const std::filesystem::path& path) {
  return guarded("analyze", [&] {
    const FnTable f = read_table_file(path);
    Report r;
    auto& p = r.payload;
    p["command"] = "analyze";
    p["status"] = "ok";
    p["input"] = input_json(path);
    p["table"] = table_shape_json(f);

    const VarSubset ess = essential_variables(f);
    p["essential_variables"] = positions_json(ess);
    p["essential_arity"] = ess.size();
    std::ostringstream text;
    text << "analyze " << path.string() << "\n"
         << "  domain=" << f.a_size() << " arity=" << f.arity()
         << " group=" << f.group().to_string() << "\n"
         << "  essential variables: " << ess.to_string() << " (" << ess.size()
         << ")\n";

    if (ess.size() >= 2) {
      const std::size_t gap = arity_gap(f);
      std::string cert_text;
      p["gap"] = gap;
      p["gap_certificate"] = gap_certificate(f, gap, cert_text);
      text << "  arity gap: " << gap << " (" << cert_text << ")\n";
    } else {
      p["gap"] = nullptr;
      p["gap_note"] = "undefined: ess<2";
      text << "  arity gap: undefined: ess<2\n";
    }

    const bool symmetric = is_totally_symmetric(f);
    p["totally_symmetric"] = symmetric;
    text << "  totally symmetric: " << yes_no(symmetric) << "\n";

    if (f.arity() >= 1) {
      const auto phi = is_determined_by_oddsupp(f);
      p["oddsupp_determined"] = phi.has_value();
      text << "  determined by oddsupp: " << yes_no(phi.has_value()) << "\n";
      if (phi) {
        if (!(theta_table(*phi, f.arity()) == f)) {
          throw InternalConsistencyError("phi does not reproduce the table");
        }
        p["phi"] = phi_json(*phi);
        text << phi_text(*phi, "    ");
      }
    } else {
      p["oddsupp_determined"] = nullptr;
    }

    const std::size_t min_arity = min_decomposition_arity(f);
    p["min_decomposition_arity"] = min_arity;
    text << "  min decomposition arity: " << min_arity << "\n";
    r.text = text.str();
    return r;
  });
}

Report cmd_decompose(const std::filesystem::path& path, const std::string& mode,
                     std::optional<std::size_t> k,
                     const std::optional<std::filesystem::path>& out) {
  return guarded("decompose", [&] {
    const FnTable f = read_table_file(path);
    Report r;
    auto& p = r.payload;
    p["command"] = "decompose";
    p["mode"] = mode;
    p["input"] = input_json(path);
    p["table"] = table_shape_json(f);
    std::ostringstream text;
    text << "decompose " << path.string() << " mode=" << mode << "\n";

    if (mode == "taylor") {
      if (!k) throw ArgumentError("taylor mode needs --k");
      p["k"] = *k;
      const auto verdict = is_k_decomposable(f, *k);
      if (!verdict.decomposable) {
        const auto& w = *verdict.witness;
        // The witness is rechecked before it is reported.
        if (derivative_at_zero(f, {w.vars, w.params}) != w.value ||
            f.group().is_zero(w.value)) {
          throw InternalConsistencyError("decomposability witness fails recheck");
        }
        r.exit_code = kExitPrecondition;
        p["status"] = "error";
        p["error"] = {{"kind", "precondition"},
                      {"message", "not " + std::to_string(*k) + "-decomposable"}};
        p["witness"] = {{"vars", w.vars.to_string()},
                        {"params", format_tuple(w.params)},
                        {"value", f.group().format(w.value)}};
        text << "  not " << *k << "-decomposable: derivative over "
             << w.vars.to_string() << " with a=(" << format_tuple(w.params)
             << ") is " << f.group().format(w.value) << "\n";
        r.text = text.str();
        return r;
      }
      const auto terms = decompose_via_taylor(f, *k);
      FnTable sum = FnTable::constant(f.a_size(), f.arity(), f.group(),
                                      f.group().zero());
      json inventory = json::array();
      for (const auto& term : terms) {
        sum = sum + term.table;
        const std::size_t ess = essential_arity(term.table);
        inventory.push_back({{"vars", term.vars.to_string()},
                             {"essential_arity", ess}});
        text << "  term " << term.vars.to_string() << " essential arity " << ess
             << "\n";
      }
      if (!(sum == f)) {
        throw InternalConsistencyError("Taylor summands do not sum to f");
      }
      p["status"] = "ok";
      p["summands"] = inventory;
      p["reconstruction"] = "exact";
      text << "  reconstruction: exact\n";
      if (out) write_text_file(*out, text.str());
      r.text = text.str();
      return r;
    }

    BoolForm form;
    if (mode == "odd") {
      form = BoolForm::kOdd;
    } else if (mode == "even") {
      form = BoolForm::kEven;
    } else if (mode == "fitilde") {
      form = BoolForm::kFitilde;
    } else {
      throw ArgumentError("unknown mode '" + mode +
                          "' (taylor, odd, even, fitilde)");
    }
    check_bool_form_applicable(form, f);

    PhiMap phi = PhiMap::pn_prime(2, 1, f.group());
    FnTable rebuilt = f;
    switch (form) {
      case BoolForm::kOdd:
        phi = decompose_odd(f);
        rebuilt = reconstruct_odd(phi, f.arity());
        break;
      case BoolForm::kEven:
        phi = decompose_even(f);
        rebuilt = reconstruct_even(phi, f.arity());
        break;
      case BoolForm::kFitilde: {
        auto result = fitilde_decompose(f);
        p["rank"] = result.rank;
        p["unknowns"] = result.unknowns;
        text << "  GF(2) rank " << result.rank << " of " << result.unknowns
             << "\n";
        phi = std::move(result.phi);
        rebuilt = reconstruct_fitilde(phi, f.arity());
        break;
      }
    }
    if (!(rebuilt == f)) {
      throw InternalConsistencyError("reconstruction differs from the input");
    }
    p["status"] = "ok";
    p["phi"] = phi_json(phi);
    p["reconstruction"] = "exact";
    text << phi_text(phi, "  ") << "  reconstruction: exact\n";
    if (out) {
      write_text_file(*out, format_phi(phi));
      p["phi_file"] = out->string();
    }
    r.text = text.str();
    return r;
  });
}

Report cmd_classify(const std::filesystem::path& path, const std::string& target) {
  return guarded("classify", [&] {
    const FnTable f = read_table_file(path);
    Report r;
    auto& p = r.payload;
    p["command"] = "classify";
    p["target"] = target;
    p["input"] = input_json(path);
    p["table"] = table_shape_json(f);
    p["status"] = "ok";
    std::ostringstream text;
    text << "classify " << path.string() << " target=" << target << "\n";

    if (target == "boolean") {
      const auto c = classify_boolean(f);
      p["gap"] = c.gap;
      p["verdict"] = c.form ? "gap2" : "gap1";
      text << "  verdict: " << (c.form ? "gap2" : "gap1") << "\n";
      if (c.form) {
        if (!matches_boolean_form(f, *c.form)) {
          throw InternalConsistencyError("normal form fails recheck");
        }
        p["form"] = {{"kind", to_string(c.form->kind)},
                     {"m", c.form->m},
                     {"c", c.form->c},
                     {"text", c.form->to_string()}};
        text << "  form: " << c.form->to_string() << "\n";
      }
    } else if (target == "z3") {
      const auto c = z3_classify(f);
      p["verdict"] = to_string(c.verdict);
      p["essential_arity"] = c.essential_arity;
      p["gap"] = c.gap ? json(*c.gap) : json(nullptr);
      text << "  verdict: " << to_string(c.verdict) << "\n"
           << "  essential arity: " << c.essential_arity << "\n";
      if (c.gap) text << "  gap: " << *c.gap << "\n";
      if (c.params) {
        // Gap-2 parameters describe the essential restriction; a constant
        // table is matched at its full arity.
        const bool gap2 = c.verdict == Z3Verdict::kGap2;
        const FnTable g = gap2 ? reduce_to_essential(f) : f;
        if (!(z3_build(g.arity(), *c.params) == g)) {
          throw InternalConsistencyError("Z3 parameters fail recheck");
        }
        p["params"] = {{"a", c.params->a},
                       {"b", c.params->b},
                       {"c", c.params->c},
                       {"d", c.params->d}};
        text << "  params (a,b,c,d): " << c.params->to_string() << "\n";
      }
    } else {
      throw ArgumentError("unknown target '" + target + "' (boolean, z3)");
    }
    r.text = text.str();
    return r;
  });
}

Report cmd_identities(long max_m) {
  return guarded("identities", [&] {
    if (max_m < 2 || max_m > kMaxIdentityM) {
      throw ArgumentError("--max-m must lie in [2, " +
                          std::to_string(kMaxIdentityM) + "]");
    }
    Report r;
    auto& p = r.payload;
    p["command"] = "identities";
    p["max_m"] = max_m;
    json rows = json::array();
    std::ostringstream text;
    bool all_ok = true;

    for (std::int64_t m = 2; m <= max_m; ++m) {
      for (std::int64_t t = 0; 2 * t <= m - 2; ++t) {
        const BigInt lhs = sw_lhs(m, t);
        const BigInt rhs = sw_rhs(m, t);
        const bool ok = lhs == rhs;
        all_ok = all_ok && ok;
        rows.push_back({{"identity", "sw"}, {"m", m}, {"t", t},
                        {"lhs", lhs.str()}, {"rhs", rhs.str()}, {"ok", ok}});
        text << "sw     m=" << m << " t=" << t << " lhs=" << lhs
             << " rhs=" << rhs << (ok ? " OK" : " MISMATCH") << "\n";
      }
    }
    for (std::int64_t m = 1; m <= max_m; ++m) {
      std::vector<std::uint64_t> oracle;
      if (m <= kCliPairsOracleCap) oracle = pairs_count_histogram(m);
      for (std::int64_t t = 0; 2 * t <= m - 1; ++t) {
        const BigInt lhs = pairs_lhs(m, t);
        const BigInt rhs = pairs_rhs(m, t);
        bool ok = lhs == rhs;
        json row = {{"identity", "pairs"}, {"m", m}, {"t", t},
                    {"lhs", lhs.str()}, {"rhs", rhs.str()}};
        text << "pairs  m=" << m << " t=" << t << " lhs=" << lhs
             << " rhs=" << rhs;
        if (!oracle.empty()) {
          const auto count = oracle[static_cast<std::size_t>(t)];
          ok = ok && BigInt(count) == lhs;
          row["oracle"] = std::to_string(count);
          text << " oracle=" << count;
        } else {
          row["oracle"] = nullptr;
        }
        row["ok"] = ok;
        all_ok = all_ok && ok;
        rows.push_back(row);
        text << (ok ? " OK" : " MISMATCH") << "\n";
      }
    }
    p["rows"] = rows;
    p["all_ok"] = all_ok;
    p["status"] = all_ok ? "ok" : "mismatch";
    text << (all_ok ? "all identities hold\n" : "identity mismatch found\n");
    r.exit_code = all_ok ? kExitOk : kExitInternal;
    r.text = text.str();
    return r;
  });
}

Report cmd_witness(const WitnessOptions& o,
                   const std::optional<std::filesystem::path>& out) {
  return guarded("witness", [&] {
    const AbelianGroup group = AbelianGroup::parse(o.group);
    const GroupElement b = group.parse_element(o.b);
    const WitnessBundle w = [&] {
      if (o.kind == "tightness") {
        const std::size_t n = o.n == 0 ? o.ell + o.e - 1 : o.n;
        return tightness_witness(o.ell, o.e, group, b, n);
      }
      if (o.kind == "hamming") {
        return hamming_witness(o.n, group, b, o.domain == 0 ? 2 : o.domain);
      }
      if (o.kind == "large-alphabet") {
        const auto a = o.domain == 0 ? static_cast<std::uint32_t>(o.n + 1)
                                     : o.domain;
        return large_alphabet_witness(o.n, a, group, b);
      }
      throw ArgumentError("unknown witness kind '" + o.kind +
                          "' (tightness, hamming, large-alphabet)");
    }();
    if (!verify(w)) {
      throw InternalConsistencyError("witness does not verify");
    }
    Report r;
    auto& p = r.payload;
    p["command"] = "witness";
    p["status"] = "ok";
    p["kind"] = to_string(w.kind);
    p["table"] = table_shape_json(w.table);
    p["vars"] = w.vars.to_string();
    p["params"] = format_tuple(w.params);
    p["expected"] = group.format(w.expected);
    p["claimed_k"] = w.refuted_k;
    p["verified"] = true;
    std::string text = "witness " + std::string(to_string(w.kind)) + "\n" +
                       format_witness_sidecar(w) + "verified: yes\n";
    if (out) {
      write_text_file(*out, format_table(w.table));
      const auto sidecar = out->string() + ".witness";
      write_text_file(sidecar, format_witness_sidecar(w));
      p["table_file"] = out->string();
      p["sidecar_file"] = sidecar;
      text += "wrote " + out->string() + " and " + sidecar + "\n";
    }
    r.text = text;
    return r;
  });
}

Report cmd_build(const BuildOptions& o,
                 const std::optional<std::filesystem::path>& out) {
  return guarded("build", [&] {
    const FnTable f = [&] {
      if (o.kind == "z3") {
        Z3Params params;
        std::uint32_t v[4];
        char sep[3];
        std::istringstream in(o.params);
        if (!(in >> v[0] >> sep[0] >> v[1] >> sep[1] >> v[2] >> sep[2] >> v[3]) ||
            sep[0] != ',' || sep[1] != ',' || sep[2] != ',' || !in.eof()) {
          throw ParseError("--params must be 'a,b,c,d'", 0);
        }
        params = {v[0], v[1], v[2], v[3]};
        return z3_build(o.n, params);
      }
      if (o.kind == "parity") {
        const AbelianGroup group = AbelianGroup::parse(o.group);
        if (!group.is_elementary_2() || group.factors() != 1) {
          throw ArgumentError("parity tables are built over Z2");
        }
        return FnTable::tabulate(2, o.n, group, [](const Tuple& x) {
          std::uint32_t v = 0;
          for (auto xi : x) v ^= xi;
          return GroupElement{v};
        });
      }
      if (o.kind == "theta") {
        if (!o.phi) throw ArgumentError("theta needs --phi");
        std::ifstream in(*o.phi);
        if (!in) throw ParseError("cannot open " + o.phi->string(), 0);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return theta_table(parse_phi(buffer.str()), o.n);
      }
      throw ArgumentError("unknown build kind '" + o.kind +
                          "' (z3, parity, theta)");
    }();
    Report r;
    r.payload = {{"command", "build"},
                 {"status", "ok"},
                 {"kind", o.kind},
                 {"table", table_shape_json(f)}};
    if (out) {
      write_text_file(*out, format_table(f));
      r.payload["table_file"] = out->string();
      r.text = "wrote " + out->string() + "\n";
    } else {
      r.text = format_table(f);
    }
    return r;
  });
}

}  // namespace gapdecomp::cli
